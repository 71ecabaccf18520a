#include "barrc/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace barrc {

std::string MisraRef::str() const {
    return (is_directive ? "Dir " : "Rule ") + std::to_string(major) + "." + std::to_string(minor);
}

std::string_view gap_category_key(GapCategory c) {
    switch (c) {
        case GapCategory::UndefinedUnspecified:
            return "undefined_unspecified";
        case GapCategory::ImplementationDefined:
            return "implementation_defined";
        case GapCategory::Readability:
            return "readability";
        case GapCategory::Verifiability:
            return "verifiability";
        case GapCategory::DeveloperConfusion:
            return "developer_confusion";
        case GapCategory::RuntimeBehavior:
            return "runtime_behavior";
    }
    return "";
}

std::string_view projection_status_name(ProjectionStatus s) {
    switch (s) {
        case ProjectionStatus::Covered:
            return "covered";
        case ProjectionStatus::Degraded:
            return "degraded";
        case ProjectionStatus::Unassessed:
            return "unassessed";
    }
    return "";
}

namespace {

// MISRA ids are written "D4.6" / "R15.6" with an optional category suffix:
// "A" advisory, "M" mandatory, nothing for required.
MisraRef parse_misra(const std::string& text) {
    MisraRef m;
    if (text.size() < 4 || (text[0] != 'D' && text[0] != 'R')) throw CatalogError("bad MISRA id " + text);
    m.is_directive = text[0] == 'D';
    std::string body = text.substr(1);
    char last = body.back();
    if (last == 'A' || last == 'M') {
        m.category = last == 'A' ? MisraCategory::Advisory : MisraCategory::Mandatory;
        body.pop_back();
    }
    auto dot = body.find('.');
    if (dot == std::string::npos) throw CatalogError("bad MISRA id " + text);
    m.major = std::stoi(body.substr(0, dot));
    m.minor = std::stoi(body.substr(dot + 1));
    return m;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

struct CrosswalkRow {
    const char* misra;
    Coverage coverage;
    const char* provided_by;
    bool any_of;
};

// clang-format off
const CrosswalkRow kCrosswalk[] = {
    {"D4.4A", Coverage::Mostly, "2.1.c", false},
    {"D4.6A", Coverage::Mostly, "5.2.a 5.4.b", false},
    {"D4.9A", Coverage::Mostly, "6.3.a", false},
    {"D4.10", Coverage::Mostly, "4.2.b", false},
    {"R1.1", Coverage::Mostly, "1.1.a 1.1.b", false},
    {"R3.1", Coverage::Mostly, "2.1.b", false},
    {"R3.2", Coverage::Mostly, "2.1.b", false},
    {"R6.1", Coverage::Mostly, "5.3.a", false},
    {"R7.2", Coverage::Mostly, "5.3.c", false},
    {"R8.2", Coverage::Mostly, "6.2.f", false},
    {"R8.7A", Coverage::Mostly, "1.8.a", false},
    {"R8.8", Coverage::Mostly, "6.2.e", false},
    {"R8.13A", Coverage::Mostly, "1.8.b", false},
    {"R9.1M", Coverage::Mostly, "7.2.a", false},
    {"R12.1A", Coverage::Mostly, "1.4.a", false},
    {"R15.1A", Coverage::Mostly, "1.7.c 8.5.a", true},
    {"R15.2", Coverage::Mostly, "1.7.c 8.5.a", true},
    {"R15.5A", Coverage::Mostly, "6.2.c", false},
    {"R15.6", Coverage::Mostly, "1.3.a", false},
    {"R15.7", Coverage::Mostly, "8.2.d", false},
    {"R20.4", Coverage::Mostly, "1.1.d", false},
    {"R20.7", Coverage::Mostly, "6.3.b", false},
    {"D1.1", Coverage::Partially, "1.1.c", false},
    {"D4.2A", Coverage::Partially, "1.1.c", false},
    {"D4.3", Coverage::Partially, "1.1.c", false},
    {"D4.8A", Coverage::Partially, "4.2.c", false},
    {"R1.2A", Coverage::Partially, "1.1.c", false},
    {"R5.1", Coverage::Partially, "6.1.d 7.1.d", false},
    {"R8.5", Coverage::Partially, "6.2.d", false},
    {"R10.1", Coverage::Partially, "5.2.c 5.3.b 5.6.a", false},
    {"R10.2", Coverage::Partially, "5.2.c", false},
    {"R10.4", Coverage::Partially, "5.2.c 5.3.c", false},
    {"R10.5A", Coverage::Partially, "5.6.b", false},
    {"R13.4A", Coverage::Partially, "8.2.c", false},
    {"R14.2", Coverage::Partially, "8.4.b 8.4.c", false},
    {"R16.1", Coverage::Partially, "1.3.a", false},
    {"R16.5", Coverage::Partially, "8.3.b", false},
    {"R19.2A", Coverage::Partially, "5.5.a", false},
    {"R21.2", Coverage::Partially, "6.1.a 6.1.b 6.1.c 7.1.a", false},
    {"R21.4", Coverage::Partially, "8.5.b", false},
    {"R21.8", Coverage::Partially, "8.5.b", false},
};

struct GapRow {
    GapCategory category;
    const char* ids;
};

const GapRow kGaps[] = {
    {GapCategory::UndefinedUnspecified,
     "D2.1 D4.1 D4.11 D4.12 D4.14 R1.3 R5.2 R5.4 R7.4 R8.6 R8.3 R8.4 R8.10 R8.14 R9.2 R9.4 R10.3 R11.1 R11.2 "
     "R11.3 R11.4A R11.5A R11.6 R11.7 R11.8 R12.2 R13.1 R13.2 R13.3A R13.6M R17.1 R17.3M R17.4M R17.6M R18.1 "
     "R18.2 R18.3 R18.6 R18.7 R18.8 R19.1M R20.1A R20.2 R20.3 R20.6 R20.10A R20.11 R21.1 R21.3 R21.5 R21.6 "
     "R21.7 R21.9 R21.10 R21.11 R21.12A R21.13M R21.14 R21.16 R21.17M R21.18 R21.19M R22.2M R22.4M R22.5M "
     "R22.6M"},
    {GapCategory::ImplementationDefined, "R4.1 R22.3"},
    {GapCategory::Readability,
     "D4.5A R2.3A R2.4A R2.5A R2.6A R2.7A R4.2A R5.3 R7.3 R8.9A R8.12 R9.3 R9.5 R11.9 R12.3A R15.4A R16.2 "
     "R16.6 R16.7 R18.5A R20.5A R20.14"},
    {GapCategory::Verifiability, "D4.13A R8.11A R15.3 R16.4 R17.5A R17.7"},
    {GapCategory::DeveloperConfusion,
     "R2.1 R2.2 R5.5 R5.6 R5.7 R5.8 R5.9A R6.2 R7.1 R8.1 R10.6 R10.7 R10.8 R12.4A R12.5M R13.5 R14.4 R16.3 "
     "R17.8A R18.4A R20.8 R20.9 R20.12 R20.13 R21.15"},
    {GapCategory::RuntimeBehavior, "D3.1 D4.7 R14.1 R14.3 R17.2 R21.20M R22.1 R22.7 R22.8 R22.9 R22.10"},
};

enum : unsigned {
    kStar = 1u << 0,
    kBang = 1u << 1,
    kFix = 1u << 2,
    kOff = 1u << 3,  // disabled unless enabled explicitly
};

struct GuidelineRow {
    const char* id;
    char kind;      // 'D' or 'R'
    char group;     // 'A'..'D' for subsetting guidelines, 'S' for style
    Enforceability enforce;
    unsigned flags;
    const char* related;  // MISRA ids without category suffix
    const char* quantity;
    const char* headline;
};

constexpr auto Auto = Enforceability::Automatic;
constexpr auto Heur = Enforceability::Heuristic;
constexpr auto Man = Enforceability::Manual;

const GuidelineRow kGuidelines[] = {
    {"1.1.a", 'R', 'B', Man, 0, "R1.1", "", "target the C99 language version"},
    {"1.1.b", 'R', 'B', Man, 0, "R1.1", "", "make C++ compilers treat the sources as C"},
    {"1.1.c", 'D', 'C', Auto, 0, "R1.2 D1.1 D4.3 D4.2", "", "keep vendor language extensions to a minimum"},
    {"1.1.d", 'R', 'A', Auto, 0, "R20.4", "", "no macro may be named after a keyword"},
    {"1.2.a", 'R', 'S', Auto, 0, "", "line_length", "physical lines stay within the length limit"},
    {"1.3.a", 'R', 'B', Auto, kStar | kBang, "R15.6 R16.1", "", "control statement bodies are always braced"},
    {"1.3.b", 'R', 'S', Auto, 0, "", "", "block braces sit alone on their lines, closing under opening"},
    {"1.4.a", 'R', 'A', Auto, kStar, "R12.1", "", "parenthesize operands of differing precedence"},
    {"1.4.b", 'R', 'C', Auto, 0, "R12.1", "", "operands of && and || are simple or parenthesized"},
    {"1.5.a", 'D', 'S', Man, 0, "", "", "abbreviations are common ones"},
    {"1.5.b", 'D', 'S', Man, 0, "", "", "a project abbreviation table exists"},
    {"1.6.a", 'D', 'S', Man, 0, "", "", "casts carry a justifying comment"},
    {"1.7.a", 'R', 'D', Auto, 0, "", "", "auto is not used"},
    {"1.7.b", 'R', 'D', Auto, 0, "", "", "register is not used"},
    {"1.7.c", 'R', 'B', Auto, 0, "R15.1 R15.2", "", "goto is avoided; jumps only forward within the block nest"},
    {"1.7.d", 'D', 'D', Auto, 0, "", "", "continue is avoided"},
    {"1.8.a", 'R', 'A', Man, kStar, "R8.7", "", "file-scope names get internal linkage unless shared"},
    {"1.8.b", 'R', 'B', Man, kStar | kBang, "R8.13", "", "const is applied wherever it fits"},
    {"1.8.c", 'D', 'D', Man, kStar | kBang, "", "", "volatile is applied wherever it is needed"},
    {"2.1.a", 'D', 'S', Man, 0, "", "", "line comments are allowed"},
    {"2.1.b", 'R', 'B', Auto, kStar | kBang, "R3.1 R3.2", "", "comments hold no comment delimiters or backslashes"},
    {"2.1.c", 'D', 'A', Heur, kStar | kBang, "D4.4", "", "no code left commented out"},
    {"2.2.a", 'D', 'S', Man, 0, "", "", "comments are complete, clear sentences"},
    {"2.2.b", 'D', 'S', Man, 0, "", "", "comments come before the code they explain"},
    {"2.2.c", 'D', 'S', Man, 0, "", "", "comments skip the obvious"},
    {"2.2.d", 'D', 'S', Man, 0, "", "", "comment volume matches code complexity"},
    {"2.2.e", 'D', 'S', Man, 0, "", "", "external document references are precise"},
    {"2.2.f", 'D', 'S', Man, 0, "", "", "diagrams live outside the code and are referenced"},
    {"2.2.g", 'D', 'S', Man, kStar, "", "", "assumptions are written down"},
    {"2.2.h", 'R', 'S', Heur, kOff, "", "", "modules and functions carry documentation comments"},
    {"2.2.i", 'D', 'S', Man, kStar, "", "", "standard markers flag warnings and open work"},
    {"3.1.a", 'R', 'S', Auto, kFix, "", "", "one space after if, while, for, switch and return"},
    {"3.1.b", 'R', 'S', Auto, kFix, "", "", "one space on each side of assignment operators"},
    {"3.1.c", 'R', 'S', Auto, kFix, "", "", "one space on each side of binary operators"},
    {"3.1.d", 'R', 'S', Auto, kFix, "", "", "unary operators touch their operand"},
    {"3.1.e", 'R', 'S', Auto, kFix, "", "", "pointer operator spacing"},
    {"3.1.f", 'R', 'S', Auto, kFix, "", "", "one space on each side of ? and :"},
    {"3.1.g", 'R', 'S', Auto, kFix, "", "", "member access operators have no surrounding space"},
    {"3.1.h", 'R', 'S', Auto, kFix, "", "", "subscript brackets have no surrounding space"},
    {"3.1.i", 'R', 'S', Auto, kFix, "", "", "no space just inside expression parentheses"},
    {"3.1.j", 'R', 'S', Auto, kFix, "", "", "call and definition parenthesis spacing"},
    {"3.1.k", 'R', 'S', Auto, kFix, "", "", "one space after commas between parameters"},
    {"3.1.l", 'R', 'S', Auto, kFix, "", "", "one space after semicolons in a for header"},
    {"3.1.m", 'R', 'S', Auto, kFix, "", "", "no space before a statement's semicolon"},
    {"3.2.a", 'R', 'S', Auto, 0, "", "", "names in a run of declarations line up"},
    {"3.2.b", 'R', 'S', Auto, 0, "", "", "struct and union member names line up"},
    {"3.2.c", 'R', 'S', Auto, 0, "", "", "= signs in a run of assignments line up"},
    {"3.2.d", 'R', 'S', Auto, kFix, "", "", "directive # signs start in column one"},
    {"3.3.a", 'R', 'S', Auto, 0, "", "", "one statement per line"},
    {"3.3.b", 'R', 'S', Auto, 0, "", "", "a blank line separates each block of code"},
    {"3.3.c", 'R', 'S', Auto, kFix, "", "", "files end with an end-of-file comment and a blank line"},
    {"3.4.a", 'R', 'S', Auto, 0, "", "indent_width", "fixed indentation step"},
    {"3.4.b", 'R', 'S', Auto, 0, "", "", "case labels share a column, contents one step deeper"},
    {"3.4.c", 'D', 'S', Man, 0, "", "", "continuation lines are indented for readability"},
    {"3.5.a", 'R', 'S', Auto, kFix, "", "", "no tab characters"},
    {"3.6.a", 'R', 'S', Auto, kFix, "", "", "lines end with LF only"},
    {"3.6.b", 'R', 'S', Auto, kFix, "", "", "no control characters other than LF and FF"},
    {"4.1.a", 'R', 'S', Auto, kStar, "", "", "module names use lowercase letters, digits and underscores"},
    {"4.1.b", 'R', 'S', Auto, 0, "", "module_name_significant", "module names differ early; only .c and .h files"},
    {"4.1.c", 'R', 'S', Auto, kStar, "", "", "header names do not reuse standard header names"},
    {"4.1.d", 'R', 'S', Auto, 0, "", "", "the module defining main is named for it"},
    {"4.2.a", 'R', 'D', Auto, 0, "", "", "each source file has exactly one header"},
    {"4.2.b", 'R', 'B', Auto, 0, "D4.10", "", "headers have an include guard"},
    {"4.2.c", 'R', 'C', Man, 0, "D4.8", "", "headers expose only what callers need"},
    {"4.2.d", 'D', 'D', Auto, 0, "", "", "public headers never include private ones"},
    {"4.3.a", 'D', 'S', Man, 0, "", "", "a source file holds one module's behavior"},
    {"4.3.b", 'R', 'S', Heur, kOff, "", "", "source file sections follow the canonical order"},
    {"4.3.c", 'R', 'S', Auto, kStar, "", "", "source files include their own header"},
    {"4.3.d", 'R', 'S', Auto, 0, "", "", "include paths are never absolute"},
    {"4.3.e", 'R', 'S', Heur, kOff, "", "", "no unused includes"},
    {"4.3.f", 'R', 'S', Auto, 0, "", "", "never include a .c file"},
    {"4.4.a", 'D', 'D', Man, 0, "", "", "new files start from project templates"},
    {"5.1.a", 'R', 'S', Auto, 0, "", "", "type names are lowercase with a _t suffix"},
    {"5.1.b", 'R', 'S', Auto, 0, "", "", "structs, unions and enums are named through typedef"},
    {"5.1.c", 'D', 'S', Auto, 0, "", "", "public type names start with the module name"},
    {"5.2.a", 'D', 'B', Auto, kStar | kBang, "D4.6", "", "integers use the fixed-width typedefs"},
    {"5.2.b", 'R', 'D', Auto, kStar, "", "", "short and long are not used"},
    {"5.2.c", 'D', 'C', Heur, kStar | kOff, "R10.1 R10.2 R10.4", "", "char is kept for characters and strings"},
    {"5.3.a", 'R', 'B', Auto, 0, "R6.1", "", "bit-fields have explicitly unsigned types"},
    {"5.3.b", 'R', 'B', Auto, kStar | kBang, "R10.1", "", "bitwise operators only on unsigned data"},
    {"5.3.c", 'R', 'B', Auto, kStar | kBang, "R10.4 R7.2", "", "signed and unsigned operands are never mixed"},
    {"5.4.a", 'D', 'D', Auto, 0, "", "", "floating point is avoided"},
    {"5.4.b", 'D', 'C', Auto, kStar, "D4.6 D1.1", "", "floating point follows the safety sub-rules"},
    {"5.5.a", 'D', 'C', Man, kStar, "R19.2 D1.1", "", "structs and unions are protected from padding"},
    {"5.5.b", 'D', 'D', Man, kStar, "", "", "bit-field order is protected from the compiler"},
    {"5.6.a", 'R', 'C', Heur, kOff, "R10.1", "", "Boolean variables have type bool"},
    {"5.6.b", 'R', 'C', Auto, 0, "R10.5", "", "Boolean conversion by comparison, not by cast"},
    {"6.1.a", 'R', 'B', Auto, kStar, "R21.2", "", "function names are not keywords"},
    {"6.1.b", 'R', 'B', Auto, kStar, "R21.2", "", "function names do not reuse standard library names"},
    {"6.1.c", 'R', 'B', Auto, 0, "R21.2", "", "function names do not start with an underscore"},
    {"6.1.d", 'R', 'B', Auto, 0, "R5.1", "max_identifier_significant", "function names respect the length limit"},
    {"6.1.e", 'R', 'S', Auto, 0, "", "", "function names have no uppercase letters"},
    {"6.1.f", 'R', 'S', Auto, 0, "", "", "macro names have no lowercase letters"},
    {"6.1.g", 'R', 'S', Man, 0, "", "", "words in function names are joined by underscores"},
    {"6.1.h", 'D', 'S', Man, 0, "", "", "function names say what the function does"},
    {"6.1.i", 'R', 'S', Auto, 0, "", "", "public function names start with the module name"},
    {"6.2.a", 'D', 'S', Auto, 0, "", "max_function_lines", "functions stay within the length limit"},
    {"6.2.b", 'D', 'S', Man, 0, "", "", "functions have a single entry at the top"},
    {"6.2.c", 'R', 'A', Auto, 0, "R15.5", "", "one return, at the end of the function"},
    {"6.2.d", 'R', 'B', Auto, kStar, "R8.5", "", "public functions have a prototype in the module header"},
    {"6.2.e", 'R', 'A', Auto, kStar | kBang, "R8.8", "", "static is repeated on every declaration of an internal name"},
    {"6.2.f", 'R', 'A', Auto, 0, "R8.2", "", "parameters are declared with types and names"},
    {"6.3.a", 'D', 'A', Man, kStar | kBang, "D4.9", "", "prefer inline functions over function-like macros"},
    {"6.3.b", 'R', 'B', Auto, kStar, "R20.7", "", "function-like macros are fully parenthesized and side-effect safe"},
    {"6.4.a", 'D', 'S', Man, 0, "", "", "thread entry functions are named for their task"},
    {"6.5.a", 'D', 'D', Man, 0, "", "", "interrupt handlers are marked for the compiler"},
    {"6.5.b", 'D', 'S', Man, 0, "", "", "interrupt handler names end in _isr"},
    {"6.5.c", 'D', 'D', Man, kStar, "", "", "interrupt handlers are unreachable from other code"},
    {"6.5.d", 'D', 'D', Man, 0, "", "", "unused interrupt vectors go to a default handler"},
    {"7.1.a", 'R', 'B', Auto, kStar, "R21.2", "", "variable names are not keywords"},
    {"7.1.b", 'R', 'B', Auto, kStar, "R21.2", "", "variable names do not reuse standard library names"},
    {"7.1.c", 'R', 'B', Auto, 0, "R21.2", "", "variable names do not start with an underscore"},
    {"7.1.d", 'R', 'B', Auto, 0, "R5.1", "max_identifier_significant", "variable names respect the length limit"},
    {"7.1.e", 'R', 'S', Auto, 0, "", "min_identifier_length", "variable names are not too short"},
    {"7.1.f", 'R', 'S', Auto, kStar, "", "", "variable names have no uppercase letters"},
    {"7.1.g", 'R', 'S', Man, 0, "", "", "variable names hold no numbers defined elsewhere"},
    {"7.1.h", 'R', 'S', Man, 0, "", "", "words in variable names are joined by underscores"},
    {"7.1.i", 'D', 'S', Man, 0, "", "", "variable names say what the variable holds"},
    {"7.1.j", 'R', 'S', Auto, kStar, "", "", "global variable names start with g"},
    {"7.1.k", 'R', 'S', Auto, kStar, "", "", "pointer variable names start with p"},
    {"7.1.l", 'R', 'S', Auto, 0, "", "", "pointer-to-pointer names start with pp"},
    {"7.1.m", 'D', 'S', Auto, kStar, "", "", "Boolean variable names start with b"},
    {"7.1.n", 'R', 'S', Man, 0, "", "", "handle names start with h"},
    {"7.1.o", 'R', 'S', Auto, 0, "", "", "name prefixes appear in the order g, p or pp, b or h"},
    {"7.2.a", 'R', 'A', Man, kStar, "R9.1", "", "variables are initialized before use"},
    {"7.2.b", 'R', 'S', Man, 0, "", "", "locals are declared where they are needed"},
    {"7.2.c", 'D', 'S', Auto, 0, "", "", "global variables are grouped before the functions"},
    {"7.2.d", 'R', 'D', Auto, 0, "", "", "pointers without an initial address start as NULL"},
    {"8.1.a", 'R', 'D', Auto, kStar | kBang, "", "", "one declarator per declaration"},
    {"8.2.a", 'R', 'S', Auto, 0, "", "", "the shortest if/else branch comes first"},
    {"8.2.b", 'R', 'D', Auto, 0, "", "", "if/else nesting stays within two levels"},
    {"8.2.c", 'R', 'C', Auto, kStar, "R13.4 R14.4", "", "no assignments inside if conditions"},
    {"8.2.d", 'R', 'A', Auto, 0, "R15.7", "", "if/else-if chains end with an else"},
    {"8.3.a", 'R', 'S', Auto, kStar, "", "", "each case's break lines up with the case"},
    {"8.3.b", 'R', 'B', Auto, 0, "R16.5", "", "switch statements have a default"},
    {"8.3.c", 'R', 'B', Auto, 0, "R16.3", "", "intentional fall-through is commented"},
    {"8.4.a", 'D', 'D', Auto, 0, "", "", "loop bounds and starts use named constants"},
    {"8.4.b", 'R', 'B', Heur, 0, "R14.2", "", "the loop variable changes only in the step clause"},
    {"8.4.c", 'R', 'B', Auto, 0, "R14.2", "", "infinite loops are written for (;;)"},
    {"8.4.d", 'R', 'C', Auto, 0, "R15.6", "", "empty loop bodies are braces around a comment"},
    {"8.5.a", 'R', 'B', Auto, 0, "R15.1 R15.2", "", "goto only within the limits of 1.7.c"},
    {"8.5.b", 'R', 'B', Auto, 0, "R21.8 R21.4", "", "abort, exit, setjmp and longjmp are not called"},
    {"8.6.a", 'R', 'S', Auto, kStar | kFix, "", "", "constants go on the left of == and !="},
};
// clang-format on

const std::set<std::string> kNotSingleTu = {"1.8.a", "1.8.b", "4.2.c", "7.2.a", "8.4.b"};
const std::set<std::string> kUndecidable = {"1.8.b", "7.2.a", "8.4.b"};

void require(bool ok, const std::string& what) {
    if (!ok) throw CatalogError("catalog integrity check failed: " + what);
}

}  // namespace

const GuidelineDescriptor* Catalog::find(GuidelineId id) const {
    auto it = std::lower_bound(guidelines_.begin(), guidelines_.end(), id,
                               [](const GuidelineDescriptor& g, GuidelineId x) { return g.id < x; });
    if (it == guidelines_.end() || it->id != id) return nullptr;
    return &*it;
}

const GuidelineDescriptor& Catalog::at(GuidelineId id) const {
    const GuidelineDescriptor* g = find(id);
    if (!g) throw std::out_of_range("unknown guideline " + id.str());
    return *g;
}

Catalog Catalog::load() {
    Catalog c;
    std::map<std::string, MisraRef> registry;  // "R15.6" -> ref with category
    auto key = [](const MisraRef& m) {
        return std::string(m.is_directive ? "D" : "R") + std::to_string(m.major) + "." + std::to_string(m.minor);
    };
    for (const auto& row : kCrosswalk) {
        CrosswalkEntry e;
        e.misra = parse_misra(row.misra);
        e.coverage = row.coverage;
        e.any_of = row.any_of;
        for (const auto& w : words(row.provided_by)) e.provided_by.push_back(gid(w));
        require(registry.emplace(key(e.misra), e.misra).second, "duplicate crosswalk row " + e.misra.str());
        c.crosswalk_.push_back(std::move(e));
    }
    for (const auto& row : kGaps) {
        for (const auto& w : words(row.ids)) {
            GapEntry g{parse_misra(w), row.category};
            require(registry.emplace(key(g.misra), g.misra).second, "MISRA id listed twice: " + g.misra.str());
            c.gaps_.push_back(g);
        }
    }
    for (const auto& row : kGuidelines) {
        GuidelineDescriptor g;
        g.id = gid(row.id);
        g.kind = row.kind == 'D' ? GuidelineKind::Directive : GuidelineKind::Rule;
        g.starred = (row.flags & kStar) != 0;
        g.bug_killing = (row.flags & kBang) != 0;
        g.fixable = (row.flags & kFix) != 0;
        g.default_enabled = (row.flags & kOff) == 0;
        g.headline = row.headline;
        g.enforceability = row.enforce;
        g.single_tu = kNotSingleTu.count(row.id) == 0;
        g.decidable = kUndecidable.count(row.id) == 0;
        g.quantity_param = row.quantity;
        switch (row.group) {
            case 'A':
                g.topic = Topic::Subset;
                g.misra_relation = MisraRelation::ExactMatch;
                break;
            case 'B':
                g.topic = Topic::Subset;
                g.misra_relation = MisraRelation::NonExactMatch;
                break;
            case 'C':
                g.topic = Topic::Subset;
                g.misra_relation = MisraRelation::Related;
                break;
            case 'D':
                g.topic = Topic::Subset;
                g.misra_relation = MisraRelation::None;
                break;
            default:
                g.topic = Topic::Style;
                g.misra_relation = MisraRelation::NotApplicable;
                break;
        }
        for (const auto& w : words(row.related)) {
            auto it = registry.find(w);
            require(it != registry.end(), "related MISRA id without category: " + w);
            g.related_misra.push_back(it->second);
        }
        c.guidelines_.push_back(std::move(g));
    }
    std::sort(c.guidelines_.begin(), c.guidelines_.end(),
              [](const GuidelineDescriptor& a, const GuidelineDescriptor& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < c.guidelines_.size(); ++i) {
        require(c.guidelines_[i - 1].id != c.guidelines_[i].id, "duplicate guideline " + c.guidelines_[i].id.str());
    }
    require(c.guidelines_.size() == 143, "guideline count");
    for (const auto& e : c.crosswalk_) {
        for (const auto& id : e.provided_by) require(c.find(id) != nullptr, "unknown provider " + id.str());
    }
    return c;
}

const Catalog& catalog() {
    static const Catalog instance = Catalog::load();
    return instance;
}

Severity default_severity(const GuidelineDescriptor& g) {
    if (g.enforceability == Enforceability::Heuristic || g.kind == GuidelineKind::Directive) {
        return Severity::Advisory;
    }
    if (g.id == gid("4.2.a") || g.id == gid("8.2.a")) return Severity::Advisory;
    return Severity::Error;
}

MisraProjection misra_projection(const std::set<GuidelineId>& enabled, const std::set<GuidelineId>& violated,
                                 GotoPolicy goto_policy) {
    MisraProjection out;
    for (const auto& e : catalog().crosswalk()) {
        ProjectionRow row{&e, ProjectionStatus::Unassessed};
        bool goto_gap = goto_policy == GotoPolicy::ForwardOnly && !e.misra.is_directive && e.misra.major == 15 &&
                        e.misra.minor == 1;
        std::size_t on = 0;
        bool hit = false;
        for (const auto& id : e.provided_by) {
            if (enabled.count(id)) {
                ++on;
                if (violated.count(id)) hit = true;
            }
        }
        bool assessed = e.any_of ? on > 0 : on == e.provided_by.size();
        if (!goto_gap && assessed) row.status = hit ? ProjectionStatus::Degraded : ProjectionStatus::Covered;
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace barrc
