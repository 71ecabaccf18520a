#include <cctype>

#include "checks/check.hpp"

namespace barrc {

Diagnostic* CheckContext::report(GuidelineId id, const Span& span, std::string message) {
    if (!on(id)) return nullptr;
    const auto& g = catalog().at(id);
    if (g.enforceability == Enforceability::Manual) return nullptr;
    Diagnostic d;
    d.rule = id;
    d.path = view.path;
    d.span = span;
    d.message = std::move(message);
    d.severity = default_severity(g);
    out.push_back(std::move(d));
    return &out.back();
}

std::vector<const Expr*> stmt_exprs(const Stmt& s) {
    std::vector<const Expr*> out;
    if (s.expr) out.push_back(s.expr.get());
    if (s.for_cond) out.push_back(s.for_cond.get());
    if (s.for_step) out.push_back(s.for_step.get());
    if (s.decl) {
        for (const auto& d : s.decl->declarators) {
            if (d.init) out.push_back(d.init.get());
        }
    }
    return out;
}

namespace {

void collect_decl(const Decl& d, std::vector<const Decl*>& out) {
    out.push_back(&d);
    if (d.spec.body) {
        for (const auto& m : d.spec.body->members) collect_decl(m, out);
    }
    for (const auto& dr : d.declarators) {
        for (const auto& p : dr.params) collect_decl(p, out);
    }
}

}  // namespace

std::vector<const Decl*> all_decls(const SyntaxTree& tree) {
    std::vector<const Decl*> out;
    for (const auto& item : tree.items) {
        if (item.decl) collect_decl(*item.decl, out);
        if (item.function) {
            collect_decl(item.function->decl, out);
            for (const auto& k : item.function->knr_decls) collect_decl(k, out);
            if (item.function->body) {
                walk_stmt(*item.function->body, [&](const Stmt& s) {
                    if (s.decl) collect_decl(*s.decl, out);
                });
            }
        }
    }
    return out;
}

std::size_t first_token_on_line(const std::vector<Token>& tokens, int line) {
    std::size_t lo = 0, hi = tokens.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (tokens[mid].span.start.line < line) lo = mid + 1;
        else hi = mid;
    }
    if (lo < tokens.size() && tokens[lo].span.start.line == line && tokens[lo].kind != TokenKind::EndOfFile) return lo;
    return kNoToken;
}

bool same_line(const Token& a, const Token& b) { return a.span.stop.line == b.span.start.line; }

int gap_spaces(const Token& a, const Token& b) {
    int n = 0;
    for (const auto& t : b.leading_trivia) {
        if (t.kind != TriviaKind::Spaces) return -1;
        for (char c : t.text) {
            if (c != ' ') return -1;
        }
        n += static_cast<int>(t.text.size());
    }
    (void)a;
    return n;
}

bool is_lower_snake(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

bool has_upper(std::string_view s) {
    for (char c : s) {
        if (std::isupper(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

bool has_lower(std::string_view s) {
    for (char c : s) {
        if (std::islower(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

const std::set<std::string>& c99_keywords() {
    static const std::set<std::string> k = {
        "auto",     "break",  "case",     "char",       "const",    "continue", "default",  "do",
        "double",   "else",   "enum",     "extern",     "float",    "for",      "goto",     "if",
        "inline",   "int",    "long",     "register",   "restrict", "return",   "short",    "signed",
        "sizeof",   "static", "struct",   "switch",     "typedef",  "union",    "unsigned", "void",
        "volatile", "while",  "_Bool",    "_Complex",   "_Imaginary"};
    return k;
}

const std::set<std::string>& cpp_keywords() {
    static const std::set<std::string> k = {
        "alignas",   "alignof",      "and",          "and_eq",     "asm",        "bitand",
        "bitor",     "bool",         "catch",        "char16_t",   "char32_t",   "class",
        "compl",     "constexpr",    "const_cast",   "decltype",   "delete",     "dynamic_cast",
        "explicit",  "export",       "false",        "friend",     "mutable",    "namespace",
        "new",       "noexcept",     "not",          "not_eq",     "nullptr",    "operator",
        "or",        "or_eq",        "private",      "protected",  "public",     "reinterpret_cast",
        "static_assert", "static_cast", "template",  "this",       "thread_local", "throw",
        "true",      "try",          "typeid",       "typename",   "using",      "virtual",
        "wchar_t",   "xor",          "xor_eq"};
    return k;
}

const std::set<std::string>& stdlib_names() {
    static const std::set<std::string> names = [] {
        std::set<std::string> s = {
            // assert, ctype, errno, locale, setjmp, signal, stdarg
            "assert", "isalnum", "isalpha", "isblank", "iscntrl", "isdigit", "isgraph", "islower", "isprint",
            "ispunct", "isspace", "isupper", "isxdigit", "tolower", "toupper", "errno", "setlocale", "localeconv",
            "setjmp", "longjmp", "signal", "raise", "va_start", "va_arg", "va_end", "va_copy", "offsetof",
            // fenv, inttypes
            "feclearexcept", "fegetexceptflag", "feraiseexcept", "fesetexceptflag", "fetestexcept", "fegetround",
            "fesetround", "fegetenv", "feholdexcept", "fesetenv", "feupdateenv", "imaxabs", "imaxdiv", "strtoimax",
            "strtoumax", "wcstoimax", "wcstoumax",
            // stdio
            "remove", "rename", "tmpfile", "tmpnam", "fclose", "fflush", "fopen", "freopen", "setbuf", "setvbuf",
            "fprintf", "fscanf", "printf", "scanf", "snprintf", "sprintf", "sscanf", "vfprintf", "vfscanf",
            "vprintf", "vscanf", "vsnprintf", "vsprintf", "vsscanf", "fgetc", "fgets", "fputc", "fputs", "getc",
            "getchar", "gets", "putc", "putchar", "puts", "ungetc", "fread", "fwrite", "fgetpos", "fseek",
            "fsetpos", "ftell", "rewind", "clearerr", "feof", "ferror", "perror", "stdin", "stdout", "stderr",
            // stdlib
            "atof", "atoi", "atol", "atoll", "strtod", "strtof", "strtold", "strtol", "strtoll", "strtoul",
            "strtoull", "rand", "srand", "calloc", "free", "malloc", "realloc", "abort", "atexit", "exit", "_Exit",
            "getenv", "system", "bsearch", "qsort", "abs", "labs", "llabs", "div", "ldiv", "lldiv", "mblen",
            "mbtowc", "wctomb", "mbstowcs", "wcstombs",
            // string
            "memcpy", "memmove", "strcpy", "strncpy", "strcat", "strncat", "memcmp", "strcmp", "strcoll",
            "strncmp", "strxfrm", "memchr", "strchr", "strcspn", "strpbrk", "strrchr", "strspn", "strstr",
            "strtok", "memset", "strerror", "strlen",
            // time
            "clock", "difftime", "mktime", "time", "asctime", "ctime", "gmtime", "localtime", "strftime",
            // wchar, wctype
            "fwprintf", "fwscanf", "swprintf", "swscanf", "vfwprintf", "vfwscanf", "vswprintf", "vswscanf",
            "vwprintf", "vwscanf", "wprintf", "wscanf", "fgetwc", "fgetws", "fputwc", "fputws", "fwide", "getwc",
            "getwchar", "putwc", "putwchar", "ungetwc", "wcstod", "wcstof", "wcstold", "wcstol", "wcstoll",
            "wcstoul", "wcstoull", "wcscpy", "wcsncpy", "wmemcpy", "wmemmove", "wcscat", "wcsncat", "wcscmp",
            "wcscoll", "wcsncmp", "wcsxfrm", "wmemcmp", "wcschr", "wcscspn", "wcspbrk", "wcsrchr", "wcsspn",
            "wcsstr", "wcstok", "wmemchr", "wcslen", "wmemset", "wcsftime", "btowc", "wctob", "mbsinit",
            "mbrlen", "mbrtowc", "wcrtomb", "mbsrtowcs", "wcsrtombs", "iswalnum", "iswalpha", "iswblank",
            "iswcntrl", "iswdigit", "iswgraph", "iswlower", "iswprint", "iswpunct", "iswspace", "iswupper",
            "iswxdigit", "iswctype", "wctype", "towlower", "towupper", "towctrans", "wctrans",
            // math classification macros
            "fpclassify", "isfinite", "isinf", "isnan", "isnormal", "signbit", "isgreater", "isgreaterequal",
            "isless", "islessequal", "islessgreater", "isunordered"};
        const char* math[] = {"acos",  "asin",   "atan",      "atan2",  "cos",       "sin",     "tan",
                              "acosh", "asinh",  "atanh",     "cosh",   "sinh",      "tanh",    "exp",
                              "exp2",  "expm1",  "frexp",     "ilogb",  "ldexp",     "log",     "log10",
                              "log1p", "log2",   "logb",      "modf",   "scalbn",    "scalbln", "cbrt",
                              "fabs",  "hypot",  "pow",       "sqrt",   "erf",       "erfc",    "lgamma",
                              "tgamma", "ceil",  "floor",     "nearbyint", "rint",   "lrint",   "llrint",
                              "round", "lround", "llround",   "trunc",  "fmod",      "remainder", "remquo",
                              "copysign", "nan", "nextafter", "nexttoward", "fdim",  "fmax",    "fmin",
                              "fma"};
        for (const char* m : math) {
            s.insert(m);
            s.insert(std::string(m) + "f");
            s.insert(std::string(m) + "l");
        }
        const char* cplx[] = {"cabs", "cacos", "cacosh", "carg", "casin", "casinh", "catan", "catanh", "ccos",
                              "ccosh", "cexp", "cimag", "clog", "conj", "cpow", "cproj", "creal", "csin",
                              "csinh", "csqrt", "ctan", "ctanh"};
        for (const char* c : cplx) {
            s.insert(c);
            s.insert(std::string(c) + "f");
            s.insert(std::string(c) + "l");
        }
        return s;
    }();
    return names;
}

const std::set<std::string>& standard_header_names() {
    static const std::set<std::string> h = {
        // C
        "assert", "complex", "ctype", "errno", "fenv", "float", "inttypes", "iso646", "limits", "locale", "math",
        "setjmp", "signal", "stdalign", "stdarg", "stdatomic", "stdbool", "stddef", "stdint", "stdio", "stdlib",
        "stdnoreturn", "string", "tgmath", "threads", "time", "uchar", "wchar", "wctype",
        // C++
        "algorithm", "any", "array", "atomic", "bitset", "cassert", "ccomplex", "cctype", "cerrno", "cfenv",
        "cfloat", "charconv", "chrono", "cinttypes", "ciso646", "climits", "clocale", "cmath", "codecvt",
        "complex", "condition_variable", "csetjmp", "csignal", "cstdalign", "cstdarg", "cstdbool", "cstddef",
        "cstdint", "cstdio", "cstdlib", "cstring", "ctgmath", "ctime", "cuchar", "cwchar", "cwctype", "deque",
        "exception", "execution", "filesystem", "forward_list", "fstream", "functional", "future",
        "initializer_list", "iomanip", "ios", "iosfwd", "iostream", "istream", "iterator", "limits", "list",
        "locale", "map", "memory", "memory_resource", "mutex", "new", "numeric", "optional", "ostream", "queue",
        "random", "ratio", "regex", "scoped_allocator", "set", "shared_mutex", "sstream", "stack", "stdexcept",
        "streambuf", "string", "string_view", "strstream", "system_error", "thread", "tuple", "type_traits",
        "typeindex", "typeinfo", "unordered_map", "unordered_set", "utility", "valarray", "variant", "vector"};
    return h;
}

}  // namespace barrc
