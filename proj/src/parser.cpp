#include "barrc/parser.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace barrc {

int binary_precedence(const std::string& op) {
    static const std::unordered_map<std::string, int> levels = {
        {"*", 3},  {"/", 3},  {"%", 3},  {"+", 4},  {"-", 4},  {"<<", 5}, {">>", 5}, {"<", 6},
        {">", 6},  {"<=", 6}, {">=", 6}, {"==", 7}, {"!=", 7}, {"&", 8},  {"^", 9},  {"|", 10},
        {"&&", 11}, {"||", 12},
    };
    auto it = levels.find(op);
    return it == levels.end() ? 0 : it->second;
}

bool is_assignment_operator(const std::string& op) {
    return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" || op == "%=" || op == "&=" ||
           op == "|=" || op == "^=" || op == "<<=" || op == ">>=";
}

int SymbolTable::find_file_scope(const std::string& name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i].scope_id == 0 && symbols[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

bool matches_extension(const std::string& word, const ParseOptions& options) {
    if (options.extension_keywords.count(word)) return true;
    for (const auto& p : options.extension_patterns) {
        if (!p.empty() && p.back() == '*') {
            if (word.compare(0, p.size() - 1, p, 0, p.size() - 1) == 0 && word.size() >= p.size() - 1) return true;
        } else if (word == p) {
            return true;
        }
    }
    return false;
}

std::optional<BaseType> builtin_typedef(const std::string& name) {
    static const std::map<std::string, BaseType> table = {
        {"int8_t", BaseType::SignedInt},       {"int16_t", BaseType::SignedInt},
        {"int32_t", BaseType::SignedInt},      {"int64_t", BaseType::SignedInt},
        {"int_least8_t", BaseType::SignedInt}, {"int_least16_t", BaseType::SignedInt},
        {"int_least32_t", BaseType::SignedInt}, {"int_least64_t", BaseType::SignedInt},
        {"int_fast8_t", BaseType::SignedInt},  {"int_fast16_t", BaseType::SignedInt},
        {"int_fast32_t", BaseType::SignedInt}, {"int_fast64_t", BaseType::SignedInt},
        {"intmax_t", BaseType::SignedInt},     {"intptr_t", BaseType::SignedInt},
        {"ptrdiff_t", BaseType::SignedInt},    {"uint8_t", BaseType::UnsignedInt},
        {"uint16_t", BaseType::UnsignedInt},   {"uint32_t", BaseType::UnsignedInt},
        {"uint64_t", BaseType::UnsignedInt},   {"uint_least8_t", BaseType::UnsignedInt},
        {"uint_least16_t", BaseType::UnsignedInt}, {"uint_least32_t", BaseType::UnsignedInt},
        {"uint_least64_t", BaseType::UnsignedInt}, {"uint_fast8_t", BaseType::UnsignedInt},
        {"uint_fast16_t", BaseType::UnsignedInt}, {"uint_fast32_t", BaseType::UnsignedInt},
        {"uint_fast64_t", BaseType::UnsignedInt}, {"uintmax_t", BaseType::UnsignedInt},
        {"uintptr_t", BaseType::UnsignedInt},  {"size_t", BaseType::UnsignedInt},
        {"float32_t", BaseType::Float},        {"float64_t", BaseType::Double},
        {"float128_t", BaseType::Double},      {"bool", BaseType::Bool},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

struct ParseFailure {
    std::size_t token;
    std::string message;
};

bool is_storage_keyword(const std::string& s) {
    return s == "typedef" || s == "extern" || s == "static" || s == "auto" || s == "register";
}

bool is_qualifier_keyword(const std::string& s) { return s == "const" || s == "volatile" || s == "restrict"; }

bool is_type_keyword(const std::string& s) {
    return s == "void" || s == "char" || s == "short" || s == "int" || s == "long" || s == "float" ||
           s == "double" || s == "signed" || s == "unsigned" || s == "_Bool" || s == "_Complex" ||
           s == "_Imaginary" || s == "struct" || s == "union" || s == "enum";
}

bool is_specifier_keyword(const std::string& s) {
    return is_storage_keyword(s) || is_qualifier_keyword(s) || is_type_keyword(s) || s == "inline";
}

std::shared_ptr<Expr> make_expr(ExprKind kind, std::size_t first, std::size_t last) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->first_token = first;
    e->last_token = last;
    return e;
}

class Parser {
public:
    Parser(const std::vector<Token>& tokens, const DirectiveSet& directives, const BranchSelection& branches,
           const ParseOptions& options)
        : toks_(tokens), options_(options) {
        tree_.roles.assign(tokens.size(), TokenRole::None);
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i].kind == TokenKind::EndOfFile) continue;
            if (directives.directive_of_token.size() > i && directives.in_directive(i)) continue;
            if (!branches.active(tokens[i].span.start.line)) continue;
            tree_.code_tokens.push_back(i);
        }
        eof_ = tokens.empty() ? 0 : tokens.size() - 1;
        scopes_.push_back({});
        scope_ids_.push_back(0);
    }

    SyntaxTree run() {
        while (!at_end()) {
            std::size_t start = pos_;
            try {
                parse_external();
            } catch (const ParseFailure& f) {
                fail_and_recover(f, start, false);
            }
        }
        return std::move(tree_);
    }

private:
    // ---- token access

    bool at_end() const { return pos_ >= tree_.code_tokens.size(); }
    std::size_t idx(std::size_t ahead = 0) const {
        std::size_t p = pos_ + ahead;
        return p < tree_.code_tokens.size() ? tree_.code_tokens[p] : eof_;
    }
    const Token& tok(std::size_t ahead = 0) const { return toks_[idx(ahead)]; }
    std::size_t prev_idx() const { return pos_ == 0 ? tree_.code_tokens.front() : tree_.code_tokens[pos_ - 1]; }
    bool punct(std::string_view s, std::size_t ahead = 0) const { return tok(ahead).is_punct(s); }
    bool kw(std::string_view s, std::size_t ahead = 0) const { return tok(ahead).is_keyword(s); }

    std::size_t advance() {
        std::size_t i = idx();
        if (!at_end()) ++pos_;
        return i;
    }
    void set_role(std::size_t token, TokenRole role) {
        if (token < tree_.roles.size()) tree_.roles[token] = role;
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseFailure{idx(), message}; }
    std::size_t expect(std::string_view p, TokenRole role = TokenRole::None) {
        if (!punct(p)) {
            fail("expected '" + std::string(p) + "'");
        }
        std::size_t t = advance();
        set_role(t, role);
        return t;
    }

    void fail_and_recover(const ParseFailure& f, std::size_t start, bool inside_block) {
        const Token& at = toks_[std::min(f.token, eof_)];
        tree_.problems.push_back({at.span.start, f.message.empty() ? "syntax error" : f.message});
        pos_ = start;
        int depth = 0;
        bool consumed = false;
        while (!at_end()) {
            const Token& t = tok();
            bool open = t.is_punct("(") || t.is_punct("[") || t.is_punct("{");
            bool close = t.is_punct(")") || t.is_punct("]") || t.is_punct("}");
            if (close && depth == 0) {
                // Leave the enclosing block's brace to its owner.
                if (!(inside_block && t.is_punct("}"))) {
                    set_role(advance(), TokenRole::None);
                    consumed = true;
                }
                break;
            }
            set_role(advance(), TokenRole::None);
            consumed = true;
            if (open) {
                ++depth;
            } else if (close) {
                --depth;
                if (depth == 0 && t.is_punct("}")) {
                    if (punct(";")) set_role(advance(), TokenRole::None);
                    break;
                }
            } else if (t.is_punct(";") && depth == 0) {
                break;
            }
        }
        if (!consumed && !at_end()) advance();
    }

    // ---- scopes and symbols

    void push_scope() {
        scopes_.push_back({});
        scope_ids_.push_back(++scope_counter_);
    }
    void pop_scope() {
        scopes_.pop_back();
        scope_ids_.pop_back();
    }
    int lookup(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->find(name);
            if (f != it->end()) return f->second;
        }
        return -1;
    }
    bool file_scope() const { return scopes_.size() == 1; }

    void declare(const std::string& name, std::size_t name_token, SymbolKind kind, const TypeSpec& spec,
                 const Declarator* d, Storage storage, DeclScope scope, bool definition) {
        if (name.empty()) return;
        auto& current = scopes_.back();
        int id;
        auto found = current.find(name);
        if (found != current.end()) {
            id = found->second;
        } else {
            id = static_cast<int>(tree_.symbols.symbols.size());
            Symbol s;
            s.name = name;
            s.kind = kind;
            s.spec = spec;
            s.spec.body.reset();
            s.scope = scope;
            s.scope_id = scope_ids_.back();
            if (d) {
                s.pointer_depth = d->pointer_depth;
                s.is_array = d->is_array;
            }
            tree_.symbols.symbols.push_back(std::move(s));
            current[name] = id;
        }
        Symbol& s = tree_.symbols.symbols[static_cast<std::size_t>(id)];
        s.name_tokens.push_back(name_token);
        s.storages.push_back(storage);
        if (storage == Storage::Static) s.storage = Storage::Static;
        else if (s.storage == Storage::None) s.storage = storage;
        if (scope == DeclScope::File) {
            if (s.storage == Storage::Static) s.linkage = Linkage::Internal;
            else if (kind == SymbolKind::Object || kind == SymbolKind::Function) s.linkage = Linkage::External;
        } else if (storage == Storage::Extern || kind == SymbolKind::Function) {
            s.linkage = Linkage::External;
        }
        if (definition) s.is_definition = true;
    }

    void declare_decl(const Decl& decl) {
        for (const auto& d : decl.declarators) {
            SymbolKind kind = SymbolKind::Object;
            if (decl.storage == Storage::Typedef) kind = SymbolKind::Typedef;
            else if (d.is_function) kind = SymbolKind::Function;
            bool definition = kind == SymbolKind::Object && decl.storage != Storage::Extern;
            declare(d.name, d.name_token, kind, decl.spec, &d, decl.storage, decl.scope, definition);
        }
    }

    // ---- type-name recognition

    bool is_extension_word(const Token& t) const {
        if (t.kind != TokenKind::Identifier) return false;
        static const std::set<std::string> builtin = {"__attribute__", "__attribute", "__extension__", "__inline",
                                                      "__inline__", "__restrict", "__restrict__", "__volatile__",
                                                      "__const", "__declspec", "__far", "__near", "__packed"};
        return builtin.count(t.spelling) > 0 || matches_extension(t.spelling, options_);
    }

    bool is_asm_word(const Token& t) const {
        return (t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword) &&
               (t.spelling == "asm" || t.spelling == "__asm" || t.spelling == "__asm__");
    }

    bool known_type_name(const std::string& name) const {
        int s = lookup(name);
        if (s >= 0) return tree_.symbols.symbols[static_cast<std::size_t>(s)].kind == SymbolKind::Typedef;
        return builtin_typedef(name).has_value() || options_.extra_typedefs.count(name) > 0;
    }

    static bool ends_with_t(const std::string& name) {
        return name.size() > 2 && name.compare(name.size() - 2, 2, "_t") == 0;
    }

    /// Whether the identifier at `ahead` starts a type in a declaration-specifier position.
    bool identifier_is_type(std::size_t ahead) const {
        const Token& t = tok(ahead);
        if (t.kind != TokenKind::Identifier || is_extension_word(t)) return false;
        int s = lookup(t.spelling);
        if (s >= 0) return tree_.symbols.symbols[static_cast<std::size_t>(s)].kind == SymbolKind::Typedef;
        if (known_type_name(t.spelling)) return true;
        const Token& next = tok(ahead + 1);
        if (next.kind == TokenKind::Identifier && !is_extension_word(next)) return true;
        if (next.is_keyword("const") || next.is_keyword("volatile")) return true;
        if (ends_with_t(t.spelling) && (next.is_punct("*") || next.is_punct(")") || next.is_punct(","))) return true;
        if (in_type_name_ && lookup(t.spelling) < 0) return true;
        {
            // `name (*fp)(...)` or `name *(*fp)[...]`: a function or array pointer declarator.
            std::size_t k = ahead + 1;
            while (tok(k).is_punct("*")) ++k;
            if (tok(k).is_punct("(") && tok(k + 1).is_punct("*")) {
                std::size_t j = k + 2;
                while (tok(j).is_punct("*")) ++j;
                if (tok(j).kind == TokenKind::Identifier && tok(j + 1).is_punct(")") &&
                    (tok(j + 2).is_punct("(") || tok(j + 2).is_punct("["))) {
                    return true;
                }
            }
        }
        if (next.is_punct("*")) {
            std::size_t k = ahead + 1;
            while (tok(k).is_punct("*") || tok(k).is_keyword("const") || tok(k).is_keyword("volatile")) ++k;
            // unnamed pointer parameter, e.g. `(name *, ...)`
            if (tok(k).is_punct(",") || tok(k).is_punct(")")) return true;
            if (tok(k).kind == TokenKind::Identifier) {
                const Token& after = tok(k + 1);
                return after.is_punct(";") || after.is_punct("=") || after.is_punct(",") || after.is_punct("[") ||
                       after.is_punct(")") || after.is_punct("(");
            }
        }
        return false;
    }

    /// An unknown identifier directly before a type or storage keyword, such as an inline or
    /// export macro; it cannot be a type itself.
    bool specifier_macro(std::size_t ahead) const {
        const Token& t = tok(ahead);
        const Token& next = tok(ahead + 1);
        if (t.kind != TokenKind::Identifier || lookup(t.spelling) >= 0 || next.kind != TokenKind::Keyword) return false;
        return is_specifier_keyword(next.spelling) && !is_qualifier_keyword(next.spelling);
    }

    bool declaration_start(std::size_t ahead = 0) const {
        const Token& t = tok(ahead);
        if (t.kind == TokenKind::Keyword) return is_specifier_keyword(t.spelling);
        if (specifier_macro(ahead)) return true;
        if (is_extension_word(t) && !is_asm_word(t)) {
            // e.g. an interrupt qualifier or attribute in front of a declaration
            std::size_t k = ahead + 1;
            if (tok(k).is_punct("(")) {
                int depth = 0;
                do {
                    if (tok(k).is_punct("(")) ++depth;
                    if (tok(k).is_punct(")")) --depth;
                    ++k;
                } while (depth > 0 && tok(k).kind != TokenKind::EndOfFile);
            }
            return declaration_start(k) || tok(k).kind == TokenKind::Identifier;
        }
        return identifier_is_type(ahead);
    }

    bool type_name_start(std::size_t ahead) const {
        const Token& t = tok(ahead);
        if (t.kind == TokenKind::Keyword) return is_qualifier_keyword(t.spelling) || is_type_keyword(t.spelling);
        if (t.kind != TokenKind::Identifier) return false;
        if (known_type_name(t.spelling)) return true;
        if (lookup(t.spelling) >= 0) return false;
        const Token& next = tok(ahead + 1);
        if (ends_with_t(t.spelling) && (next.is_punct(")") || next.is_punct("*"))) return true;
        // `(name *)` and `(name) operand` are not valid expressions, so name must be a type.
        std::size_t k = ahead + 1;
        while (tok(k).is_punct("*")) ++k;
        if (k > ahead + 1 && tok(k).is_punct(")")) return true;
        if (next.is_punct(")")) {
            const Token& after = tok(ahead + 2);
            return after.kind == TokenKind::Identifier || after.is_constant();
        }
        return false;
    }

    void skip_balanced_parens() {
        if (!punct("(")) return;
        int depth = 0;
        while (!at_end()) {
            if (punct("(")) ++depth;
            if (punct(")")) --depth;
            advance();
            if (depth == 0) break;
        }
    }

    void skip_extensions() {
        while (!at_end() && is_extension_word(tok()) && !is_asm_word(tok())) {
            advance();
            skip_balanced_parens();
        }
    }

    // ---- declarations

    struct Specifiers {
        TypeSpec spec;
        Storage storage = Storage::None;
        bool is_inline = false;
        bool any = false;
    };

    Specifiers parse_specifiers(DeclScope scope) {
        Specifiers out;
        TypeSpec& ts = out.spec;
        bool has_type = false;
        bool saw_char = false, saw_int = false, saw_float = false, saw_double = false, saw_void = false,
             saw_bool = false;
        while (!at_end()) {
            const Token& t = tok();
            if (t.kind == TokenKind::Keyword) {
                const std::string& s = t.spelling;
                if (is_storage_keyword(s)) {
                    if (s == "typedef") out.storage = Storage::Typedef;
                    else if (s == "extern") out.storage = Storage::Extern;
                    else if (s == "static") out.storage = Storage::Static;
                    else if (s == "auto") out.storage = Storage::Auto;
                    else out.storage = Storage::Register;
                } else if (s == "inline") {
                    out.is_inline = true;
                } else if (is_qualifier_keyword(s)) {
                    if (s == "const") ts.is_const = true;
                    if (s == "volatile") ts.is_volatile = true;
                } else if (s == "struct" || s == "union" || s == "enum") {
                    if (ts.first_token == kNoToken) ts.first_token = idx();
                    ts.keyword_tokens.push_back(idx());
                    parse_record(ts, scope);
                    has_type = true;
                    out.any = true;
                    ts.last_token = prev_idx();
                    continue;
                } else if (is_type_keyword(s)) {
                    has_type = true;
                    if (s == "void") saw_void = true;
                    else if (s == "char") saw_char = true;
                    else if (s == "short") ts.uses_short = true;
                    else if (s == "int") saw_int = true;
                    else if (s == "long") ++ts.long_count;
                    else if (s == "float") saw_float = true;
                    else if (s == "double") saw_double = true;
                    else if (s == "signed") ts.explicit_signed = true;
                    else if (s == "unsigned") ts.explicit_unsigned = true;
                    else if (s == "_Bool") saw_bool = true;
                } else {
                    break;
                }
                if (ts.first_token == kNoToken) ts.first_token = idx();
                ts.keyword_tokens.push_back(idx());
                ts.last_token = idx();
                out.any = true;
                advance();
                continue;
            }
            if (t.kind == TokenKind::Identifier) {
                if (is_asm_word(t)) break;
                if (t.spelling == "typeof" || t.spelling == "__typeof__" || t.spelling == "__typeof") {
                    if (ts.first_token == kNoToken) ts.first_token = idx();
                    advance();
                    skip_balanced_parens();
                    has_type = true;
                    ts.base = BaseType::Unknown;
                    ts.name = "typeof";
                    ts.last_token = prev_idx();
                    out.any = true;
                    continue;
                }
                if (is_extension_word(t)) {
                    advance();
                    skip_balanced_parens();
                    continue;
                }
                if (specifier_macro(0)) {
                    advance();
                    continue;
                }
                if (!has_type && identifier_is_type(0)) {
                    if (ts.first_token == kNoToken) ts.first_token = idx();
                    ts.base = BaseType::Named;
                    ts.name = t.spelling;
                    ts.last_token = idx();
                    has_type = true;
                    out.any = true;
                    advance();
                    continue;
                }
            }
            break;
        }
        if (ts.base == BaseType::Named || ts.base == BaseType::Struct || ts.base == BaseType::Union ||
            ts.base == BaseType::Enum || ts.name == "typeof") {
            return out;
        }
        if (saw_void) ts.base = BaseType::Void;
        else if (saw_bool) ts.base = BaseType::Bool;
        else if (saw_float) ts.base = BaseType::Float;
        else if (saw_double) ts.base = BaseType::Double;
        else if (saw_char) ts.base = BaseType::Char;
        else if (saw_int || ts.uses_short || ts.long_count > 0 || ts.explicit_signed || ts.explicit_unsigned)
            ts.base = ts.explicit_unsigned ? BaseType::UnsignedInt : BaseType::SignedInt;
        else if (out.any || out.storage != Storage::None) {
            ts.base = BaseType::SignedInt;
            ts.implicit_int = true;
        }
        ts.basic_integer_keywords =
            saw_char || saw_int || ts.uses_short || ts.long_count > 0 || ts.explicit_signed || ts.explicit_unsigned;
        if (out.storage != Storage::None || out.is_inline) out.any = true;
        return out;
    }

    void parse_record(TypeSpec& ts, DeclScope scope) {
        const std::string which = tok().spelling;
        advance();
        ts.base = which == "struct" ? BaseType::Struct : which == "union" ? BaseType::Union : BaseType::Enum;
        skip_extensions();
        if (tok().kind == TokenKind::Identifier) {
            ts.name = tok().spelling;
            advance();
        }
        skip_extensions();
        if (!punct("{")) {
            if (ts.name.empty()) fail("expected a tag or '{'");
            return;
        }
        auto body = std::make_shared<RecordBody>();
        body->open_token = expect("{", TokenRole::RecordOpen);
        if (ts.base == BaseType::Enum) {
            while (!punct("}")) {
                if (tok().kind != TokenKind::Identifier) fail("expected an enumerator");
                Enumerator e;
                e.name = tok().spelling;
                e.name_token = advance();
                if (punct("=")) {
                    set_role(advance(), TokenRole::Assign);
                    e.value_first = idx();
                    parse_conditional();
                }
                TypeSpec enum_type;
                enum_type.base = BaseType::SignedInt;
                declare(e.name, e.name_token, SymbolKind::EnumConst, enum_type, nullptr, Storage::None,
                        file_scope() ? DeclScope::File : DeclScope::Block, true);
                body->enumerators.push_back(e);
                if (punct(",")) {
                    set_role(advance(), TokenRole::ListComma);
                } else {
                    break;
                }
            }
        } else {
            while (!punct("}") && !at_end()) {
                std::size_t start = pos_;
                try {
                    body->members.push_back(parse_member());
                } catch (const ParseFailure& f) {
                    fail_and_recover(f, start, true);
                }
            }
        }
        body->close_token = expect("}", TokenRole::RecordClose);
        (void)scope;
        ts.body = body;
    }

    Decl parse_member() {
        Decl d;
        d.scope = DeclScope::Member;
        d.first_token = idx();
        Specifiers sp = parse_specifiers(DeclScope::Member);
        if (!sp.any) fail("expected a member declaration");
        d.spec = sp.spec;
        d.storage = sp.storage;
        while (!punct(";")) {
            Declarator dec;
            if (!punct(":")) dec = parse_declarator(true);
            if (punct(":")) {
                set_role(advance(), TokenRole::BitfieldColon);
                dec.bitfield_width = parse_conditional();
                if (dec.first_token == kNoToken) dec.first_token = dec.bitfield_width->first_token;
                dec.last_token = prev_idx();
            }
            skip_extensions();
            d.declarators.push_back(std::move(dec));
            if (punct(",")) {
                set_role(advance(), TokenRole::DeclComma);
                continue;
            }
            break;
        }
        d.last_token = expect(";", TokenRole::StatementSemi);
        return d;
    }

    /// Parses pointers and the direct declarator. With `abstract`, the name may be absent.
    Declarator parse_declarator(bool abstract) {
        Declarator d;
        d.first_token = idx();
        bool last_level_const = false;
        while (punct("*")) {
            std::size_t star = advance();
            set_role(star, TokenRole::DeclPointer);
            d.pointer_tokens.push_back(star);
            ++d.pointer_depth;
            last_level_const = false;
            while (tok().kind == TokenKind::Keyword && is_qualifier_keyword(tok().spelling)) {
                if (tok().spelling == "const") last_level_const = true;
                advance();
            }
            skip_extensions();
        }
        d.pointer_const = last_level_const;
        bool function_pointer = false;
        skip_extensions();
        if (tok().kind == TokenKind::Identifier) {
            d.name = tok().spelling;
            d.name_token = advance();
        } else if (punct("(") && (punct("*", 1) || punct("(", 1) || punct("^", 1) ||
                                  (tok(1).kind == TokenKind::Identifier && !type_name_start(1) && !abstract))) {
            set_role(advance(), TokenRole::DeclGroupOpen);
            Declarator inner = parse_declarator(abstract);
            set_role(expect(")"), TokenRole::DeclGroupClose);
            d.name = inner.name;
            d.name_token = inner.name_token;
            if (inner.pointer_depth > 0) function_pointer = true;
            d.pointer_depth += inner.pointer_depth;
            d.pointer_tokens.insert(d.pointer_tokens.end(), inner.pointer_tokens.begin(), inner.pointer_tokens.end());
            d.is_array = inner.is_array;
            d.is_function = inner.is_function;
            d.params = inner.params;
            d.params_open = inner.params_open;
            d.params_close = inner.params_close;
        } else if (!abstract) {
            fail("expected a declarator");
        }
        while (true) {
            if (punct("[")) {
                set_role(advance(), TokenRole::DeclArrayOpen);
                if (!punct("]")) {
                    while (kw("static") || kw("const") || kw("volatile") || kw("restrict")) advance();
                    if (!punct("]")) parse_assignment();
                }
                set_role(expect("]"), TokenRole::DeclArrayClose);
                if (!function_pointer) d.is_array = true;
            } else if (punct("(")) {
                std::size_t open = advance();
                set_role(open, TokenRole::DeclParamsOpen);
                Declarator params_holder;
                parse_params(params_holder);
                std::size_t close = expect(")", TokenRole::DeclParamsClose);
                if (!function_pointer && !d.is_function) {
                    d.is_function = true;
                    d.params = std::move(params_holder.params);
                    d.knr_identifiers = params_holder.knr_identifiers;
                    d.knr_names = std::move(params_holder.knr_names);
                    d.variadic = params_holder.variadic;
                    d.void_params = params_holder.void_params;
                    d.empty_params = params_holder.empty_params;
                    d.params_open = open;
                    d.params_close = close;
                }
            } else {
                break;
            }
        }
        skip_extensions();
        d.last_token = pos_ == 0 ? d.first_token : prev_idx();
        if (d.first_token == idx() && pos_ > 0 && d.name.empty() && d.pointer_depth == 0 && !d.is_function &&
            !d.is_array) {
            d.first_token = kNoToken;
            d.last_token = kNoToken;
        }
        return d;
    }

    void parse_params(Declarator& d) {
        if (punct(")")) {
            d.empty_params = true;
            return;
        }
        if (kw("void") && punct(")", 1)) {
            d.void_params = true;
            advance();
            return;
        }
        // identifier-list (K&R) form
        bool all_names = true;
        for (std::size_t k = 0;; k += 2) {
            const Token& t = tok(k);
            if (t.kind != TokenKind::Identifier || known_type_name(t.spelling) || ends_with_t(t.spelling)) {
                all_names = false;
                break;
            }
            if (tok(k + 1).is_punct(")")) break;
            if (!tok(k + 1).is_punct(",")) {
                all_names = false;
                break;
            }
        }
        if (all_names) {
            d.knr_identifiers = true;
            while (!punct(")")) {
                d.knr_names.push_back(tok().spelling);
                advance();
                if (punct(",")) set_role(advance(), TokenRole::ParamComma);
            }
            return;
        }
        while (true) {
            if (punct("...")) {
                advance();
                d.variadic = true;
                break;
            }
            Decl p;
            p.scope = DeclScope::Param;
            p.first_token = idx();
            Specifiers sp = parse_specifiers(DeclScope::Param);
            if (!sp.any) fail("expected a parameter declaration");
            p.spec = sp.spec;
            p.storage = sp.storage;
            p.declarators.push_back(parse_declarator(true));
            p.last_token = prev_idx();
            d.params.push_back(std::move(p));
            if (punct(",")) {
                set_role(advance(), TokenRole::ParamComma);
                continue;
            }
            break;
        }
    }

    void parse_initializer(Declarator& d) {
        if (punct("{")) {
            d.init = parse_init_list();
        } else {
            d.init = parse_assignment();
        }
    }

    std::shared_ptr<Expr> parse_init_list() {
        auto e = make_expr(ExprKind::InitList, idx(), idx());
        set_role(expect("{"), TokenRole::InitOpen);
        while (!punct("}")) {
            // designators
            bool designated = false;
            while (punct(".") || punct("[")) {
                designated = true;
                if (punct(".")) {
                    set_role(advance(), TokenRole::Designator);
                    if (tok().kind != TokenKind::Identifier) fail("expected a member name");
                    advance();
                } else {
                    set_role(advance(), TokenRole::SubscriptOpen);
                    parse_conditional();
                    set_role(expect("]"), TokenRole::SubscriptClose);
                }
            }
            if (designated) set_role(expect("="), TokenRole::Assign);
            if (punct("{")) {
                e->children.push_back(parse_init_list());
            } else {
                e->children.push_back(parse_assignment());
            }
            if (punct(",")) {
                set_role(advance(), TokenRole::ListComma);
                continue;
            }
            break;
        }
        e->last_token = expect("}", TokenRole::InitClose);
        return e;
    }

    /// Declarators after the specifiers, through the terminating ';' (or `terminator` role in for-init).
    void parse_init_declarators(Decl& decl, TokenRole semi_role) {
        while (true) {
            Declarator d = parse_declarator(false);
            if (punct("=")) {
                d.assign_token = advance();
                set_role(d.assign_token, TokenRole::Assign);
                parse_initializer(d);
                d.last_token = prev_idx();
            }
            decl.declarators.push_back(std::move(d));
            if (punct(",")) {
                set_role(advance(), TokenRole::DeclComma);
                continue;
            }
            break;
        }
        decl.last_token = expect(";", semi_role);
    }

    void parse_external() {
        if (punct(";")) {
            set_role(advance(), TokenRole::StatementSemi);
            return;
        }
        if (is_asm_word(tok())) {
            std::size_t first = idx();
            while (!at_end() && !punct(";")) advance();
            std::size_t last = at_end() ? prev_idx() : advance();
            tree_.items.push_back({nullptr, nullptr, first, last});
            return;
        }
        auto decl = std::make_shared<Decl>();
        decl->scope = DeclScope::File;
        decl->first_token = idx();
        Specifiers sp = parse_specifiers(DeclScope::File);
        decl->spec = sp.spec;
        decl->storage = sp.storage;
        decl->is_inline = sp.is_inline;
        if (!sp.any) {
            // implicit int, e.g. a K&R style "main() { }"
            if (tok().kind != TokenKind::Identifier) fail("expected a declaration");
            decl->spec.base = BaseType::SignedInt;
            decl->spec.implicit_int = true;
        }
        if (punct(";")) {
            decl->last_token = expect(";", TokenRole::StatementSemi);
            declare_record_only(*decl);
            tree_.items.push_back({decl, nullptr, decl->first_token, decl->last_token});
            return;
        }
        Declarator first = parse_declarator(false);
        if (first.is_function && (punct("{") || (first.knr_identifiers && declaration_start()))) {
            parse_function(decl, std::move(first));
            return;
        }
        if (punct("=")) {
            first.assign_token = advance();
            set_role(first.assign_token, TokenRole::Assign);
            parse_initializer(first);
            first.last_token = prev_idx();
        }
        decl->declarators.push_back(std::move(first));
        if (punct(",")) {
            set_role(advance(), TokenRole::DeclComma);
            parse_init_declarators(*decl, TokenRole::StatementSemi);
        } else {
            decl->last_token = expect(";", TokenRole::StatementSemi);
        }
        declare_decl(*decl);
        tree_.items.push_back({decl, nullptr, decl->first_token, decl->last_token});
    }

    void declare_record_only(const Decl&) {}

    void parse_function(const std::shared_ptr<Decl>& decl, Declarator declarator) {
        auto fn = std::make_shared<FunctionDef>();
        fn->first_token = decl->first_token;
        set_role(declarator.params_open, TokenRole::DefParamsOpen);
        set_role(declarator.params_close, TokenRole::DefParamsClose);
        decl->declarators.push_back(declarator);
        declare(declarator.name, declarator.name_token, SymbolKind::Function, decl->spec, &declarator,
                decl->storage, DeclScope::File, true);
        push_scope();
        while (!punct("{") && !at_end()) {
            Decl k;
            k.scope = DeclScope::Param;
            k.first_token = idx();
            Specifiers sp = parse_specifiers(DeclScope::Param);
            if (!sp.any) fail("expected a parameter declaration");
            k.spec = sp.spec;
            k.storage = sp.storage;
            parse_init_declarators(k, TokenRole::StatementSemi);
            fn->knr_decls.push_back(std::move(k));
        }
        for (const auto& p : declarator.params) {
            for (const auto& pd : p.declarators) {
                declare(pd.name, pd.name_token, SymbolKind::Object, p.spec, &pd, p.storage, DeclScope::Param, true);
            }
        }
        for (const auto& k : fn->knr_decls) {
            for (const auto& kd : k.declarators) {
                declare(kd.name, kd.name_token, SymbolKind::Object, k.spec, &kd, k.storage, DeclScope::Param, true);
            }
        }
        fn->decl = *decl;
        try {
            fn->body = parse_compound(false);
        } catch (...) {
            pop_scope();
            throw;
        }
        pop_scope();
        fn->decl.last_token = fn->body->last_token;
        tree_.items.push_back({nullptr, fn, fn->first_token, fn->body->last_token});
    }

    // ---- statements

    std::shared_ptr<Stmt> make_stmt(StmtKind kind) {
        auto s = std::make_shared<Stmt>();
        s->kind = kind;
        s->first_token = idx();
        return s;
    }

    std::shared_ptr<Stmt> parse_compound(bool new_scope) {
        auto s = make_stmt(StmtKind::Compound);
        s->keyword_token = expect("{", TokenRole::BlockOpen);
        if (new_scope) push_scope();
        while (!punct("}") && !at_end()) {
            std::size_t start = pos_;
            try {
                s->children.push_back(parse_statement(true));
            } catch (const ParseFailure& f) {
                fail_and_recover(f, start, true);
                auto err = std::make_shared<Stmt>();
                err->kind = StmtKind::Error;
                err->first_token = tree_.code_tokens[start];
                err->last_token = prev_idx();
                s->children.push_back(err);
            }
        }
        if (new_scope) pop_scope();
        s->last_token = expect("}", TokenRole::BlockClose);
        return s;
    }

    std::shared_ptr<Expr> parse_control_expr(Stmt& s) {
        s.open_paren = expect("(", TokenRole::ControlOpen);
        auto e = parse_expression();
        s.close_paren = expect(")", TokenRole::ControlClose);
        return e;
    }

    std::shared_ptr<Stmt> parse_statement(bool in_compound) {
        const Token& t = tok();
        if (t.is_punct("{")) return parse_compound(true);
        if (t.is_punct(";")) {
            auto s = make_stmt(StmtKind::Empty);
            s->last_token = advance();
            set_role(s->last_token, TokenRole::StatementSemi);
            return s;
        }
        if (t.kind == TokenKind::Keyword) {
            const std::string& k = t.spelling;
            if (k == "if") {
                auto s = make_stmt(StmtKind::If);
                s->keyword_token = advance();
                s->expr = parse_control_expr(*s);
                s->children.push_back(parse_statement(false));
                if (kw("else")) {
                    s->else_token = advance();
                    s->children.push_back(parse_statement(false));
                }
                s->last_token = prev_idx();
                return s;
            }
            if (k == "while" || k == "switch") {
                auto s = make_stmt(k == "while" ? StmtKind::While : StmtKind::Switch);
                s->keyword_token = advance();
                s->expr = parse_control_expr(*s);
                s->children.push_back(parse_statement(false));
                s->last_token = prev_idx();
                return s;
            }
            if (k == "do") {
                auto s = make_stmt(StmtKind::DoWhile);
                s->keyword_token = advance();
                s->children.push_back(parse_statement(false));
                if (!kw("while")) fail("expected 'while'");
                s->while_token = advance();
                s->expr = parse_control_expr(*s);
                s->last_token = expect(";", TokenRole::StatementSemi);
                return s;
            }
            if (k == "for") return parse_for();
            if (k == "return") {
                auto s = make_stmt(StmtKind::Return);
                s->keyword_token = advance();
                if (!punct(";")) s->expr = parse_expression();
                s->last_token = expect(";", TokenRole::StatementSemi);
                return s;
            }
            if (k == "goto") {
                auto s = make_stmt(StmtKind::Goto);
                s->keyword_token = advance();
                if (tok().kind != TokenKind::Identifier) fail("expected a label");
                s->label = tok().spelling;
                advance();
                s->last_token = expect(";", TokenRole::StatementSemi);
                return s;
            }
            if (k == "break" || k == "continue") {
                auto s = make_stmt(k == "break" ? StmtKind::Break : StmtKind::Continue);
                s->keyword_token = advance();
                s->last_token = expect(";", TokenRole::StatementSemi);
                return s;
            }
            if (k == "case" || k == "default") {
                auto s = make_stmt(k == "case" ? StmtKind::Case : StmtKind::Default);
                s->keyword_token = advance();
                if (k == "case") {
                    s->expr = parse_conditional();
                    if (punct("...")) {  // GNU case range
                        advance();
                        parse_conditional();
                    }
                }
                s->last_token = expect(":", TokenRole::CaseColon);
                if (!in_compound) {
                    s->children.push_back(parse_statement(false));
                    s->last_token = prev_idx();
                }
                return s;
            }
        }
        if (t.kind == TokenKind::Identifier && punct(":", 1)) {
            auto s = make_stmt(StmtKind::Label);
            s->label = t.spelling;
            s->keyword_token = advance();
            s->last_token = expect(":", TokenRole::LabelColon);
            if (!in_compound) {
                s->children.push_back(parse_statement(false));
                s->last_token = prev_idx();
            }
            return s;
        }
        if (is_asm_word(t)) {
            auto s = make_stmt(StmtKind::Asm);
            s->keyword_token = advance();
            while (!at_end() && !punct(";") && !punct("}")) {
                if (punct("(")) {
                    skip_balanced_parens();
                } else {
                    advance();
                }
            }
            s->last_token = punct(";") ? advance() : prev_idx();
            return s;
        }
        if (declaration_start()) {
            auto s = make_stmt(StmtKind::Decl);
            s->decl = parse_block_declaration(TokenRole::StatementSemi);
            s->last_token = s->decl->last_token;
            return s;
        }
        auto s = make_stmt(StmtKind::Expr);
        s->expr = parse_expression();
        s->last_token = expect(";", TokenRole::StatementSemi);
        return s;
    }

    std::shared_ptr<Decl> parse_block_declaration(TokenRole semi_role) {
        auto decl = std::make_shared<Decl>();
        decl->scope = DeclScope::Block;
        decl->first_token = idx();
        Specifiers sp = parse_specifiers(DeclScope::Block);
        if (!sp.any) fail("expected a declaration");
        decl->spec = sp.spec;
        decl->storage = sp.storage;
        decl->is_inline = sp.is_inline;
        if (punct(";")) {
            decl->last_token = expect(";", semi_role);
            return decl;
        }
        // Declare each name as soon as its declarator ends so later initializers see it.
        while (true) {
            Declarator d = parse_declarator(false);
            Decl single;
            single.spec = decl->spec;
            single.storage = decl->storage;
            single.scope = decl->scope;
            single.declarators.push_back(d);
            declare_decl(single);
            if (punct("=")) {
                d.assign_token = advance();
                set_role(d.assign_token, TokenRole::Assign);
                parse_initializer(d);
                d.last_token = prev_idx();
            }
            decl->declarators.push_back(std::move(d));
            if (punct(",")) {
                set_role(advance(), TokenRole::DeclComma);
                continue;
            }
            break;
        }
        decl->last_token = expect(";", semi_role);
        return decl;
    }

    std::shared_ptr<Stmt> parse_for() {
        auto s = make_stmt(StmtKind::For);
        s->keyword_token = advance();
        s->open_paren = expect("(", TokenRole::ControlOpen);
        push_scope();
        try {
            if (punct(";")) {
                set_role(advance(), TokenRole::ForSemi);
            } else if (declaration_start()) {
                auto init = make_stmt(StmtKind::Decl);
                init->decl = parse_block_declaration(TokenRole::ForSemi);
                init->last_token = init->decl->last_token;
                s->for_init = init;
            } else {
                auto init = make_stmt(StmtKind::Expr);
                init->expr = parse_expression();
                init->last_token = expect(";", TokenRole::ForSemi);
                s->for_init = init;
            }
            if (!punct(";")) s->for_cond = parse_expression();
            expect(";", TokenRole::ForSemi);
            if (!punct(")")) s->for_step = parse_expression();
            s->close_paren = expect(")", TokenRole::ControlClose);
            s->children.push_back(parse_statement(false));
        } catch (...) {
            pop_scope();
            throw;
        }
        pop_scope();
        s->last_token = prev_idx();
        return s;
    }

    // ---- expressions

    std::shared_ptr<Expr> parse_expression() {
        auto lhs = parse_assignment();
        while (punct(",")) {
            auto e = make_expr(ExprKind::Comma, lhs->first_token, lhs->last_token);
            e->op_token = advance();
            e->text = ",";
            e->precedence = 15;
            set_role(e->op_token, TokenRole::CommaOperator);
            e->children.push_back(lhs);
            e->children.push_back(parse_assignment());
            e->last_token = e->children.back()->last_token;
            lhs = e;
        }
        return lhs;
    }

    std::shared_ptr<Expr> parse_assignment() {
        auto lhs = parse_conditional();
        if (tok().kind == TokenKind::Punctuator && is_assignment_operator(tok().spelling)) {
            auto e = make_expr(ExprKind::Assign, lhs->first_token, lhs->last_token);
            e->text = tok().spelling;
            e->op_token = advance();
            e->precedence = 14;
            set_role(e->op_token, TokenRole::Assign);
            e->children.push_back(lhs);
            e->children.push_back(parse_assignment());
            e->last_token = e->children.back()->last_token;
            return e;
        }
        return lhs;
    }

    std::shared_ptr<Expr> parse_conditional() {
        auto c = parse_binary(12);
        if (!punct("?")) return c;
        auto e = make_expr(ExprKind::Ternary, c->first_token, c->last_token);
        e->op_token = advance();
        e->text = "?";
        e->precedence = 13;
        set_role(e->op_token, TokenRole::TernaryQuestion);
        e->children.push_back(c);
        e->children.push_back(parse_expression());
        set_role(expect(":"), TokenRole::TernaryColon);
        e->children.push_back(parse_conditional());
        e->last_token = e->children.back()->last_token;
        return e;
    }

    std::shared_ptr<Expr> parse_binary(int level) {
        if (level < 3) return parse_cast();
        auto lhs = parse_binary(level - 1);
        while (tok().kind == TokenKind::Punctuator && binary_precedence(tok().spelling) == level) {
            auto e = make_expr(ExprKind::Binary, lhs->first_token, lhs->last_token);
            e->text = tok().spelling;
            e->op_token = advance();
            e->precedence = level;
            set_role(e->op_token, TokenRole::Binary);
            e->children.push_back(lhs);
            e->children.push_back(parse_binary(level - 1));
            e->last_token = e->children.back()->last_token;
            lhs = e;
        }
        return lhs;
    }

    std::shared_ptr<Decl> parse_type_name() {
        auto d = std::make_shared<Decl>();
        d->scope = DeclScope::Param;
        d->first_token = idx();
        // The caller already decided a type follows, so an unknown identifier is a type name from
        // a header we cannot see.
        Specifiers sp;
        {
            struct Flag {
                bool& f;
                ~Flag() { f = false; }
            } flag{in_type_name_ = true};
            sp = parse_specifiers(DeclScope::Param);
        }
        if (!sp.any) fail("expected a type name");
        d->spec = sp.spec;
        d->declarators.push_back(parse_declarator(true));
        d->last_token = prev_idx();
        return d;
    }

    std::shared_ptr<Expr> parse_cast() {
        if (punct("(") && type_name_start(1)) {
            std::size_t open = advance();
            auto type = parse_type_name();
            std::size_t close = expect(")");
            if (punct("{")) {
                set_role(open, TokenRole::CastOpen);
                set_role(close, TokenRole::CastClose);
                auto e = make_expr(ExprKind::CompoundLiteral, open, close);
                e->type_name = type;
                e->children.push_back(parse_init_list());
                e->last_token = prev_idx();
                e->precedence = 1;
                return parse_postfix_tail(e);
            }
            set_role(open, TokenRole::CastOpen);
            set_role(close, TokenRole::CastClose);
            auto e = make_expr(ExprKind::Cast, open, close);
            e->type_name = type;
            e->precedence = 2;
            e->op_token = open;
            e->children.push_back(parse_cast());
            e->last_token = e->children.back()->last_token;
            return e;
        }
        return parse_unary();
    }

    std::shared_ptr<Expr> parse_unary() {
        const Token& t = tok();
        if (t.kind == TokenKind::Punctuator &&
            (t.spelling == "++" || t.spelling == "--" || t.spelling == "&" || t.spelling == "*" ||
             t.spelling == "+" || t.spelling == "-" || t.spelling == "~" || t.spelling == "!")) {
            auto e = make_expr(ExprKind::Unary, idx(), idx());
            e->text = t.spelling;
            e->op_token = advance();
            e->precedence = 2;
            set_role(e->op_token, TokenRole::UnaryPrefix);
            bool incdec = e->text == "++" || e->text == "--";
            e->children.push_back(incdec ? parse_unary() : parse_cast());
            e->last_token = e->children.back()->last_token;
            return e;
        }
        if (t.is_keyword("sizeof")) {
            auto e = make_expr(ExprKind::Sizeof, idx(), idx());
            e->text = "sizeof";
            e->op_token = advance();
            e->precedence = 2;
            if (punct("(") && type_name_start(1)) {
                set_role(advance(), TokenRole::SizeofOpen);
                e->type_name = parse_type_name();
                e->last_token = expect(")", TokenRole::SizeofClose);
                return e;
            }
            bool paren = punct("(");
            std::size_t open = idx();
            e->children.push_back(parse_unary());
            if (paren && e->children.back()->kind == ExprKind::Paren) {
                set_role(open, TokenRole::SizeofOpen);
                set_role(e->children.back()->last_token, TokenRole::SizeofClose);
            }
            e->last_token = e->children.back()->last_token;
            return e;
        }
        return parse_postfix_tail(parse_primary());
    }

    std::shared_ptr<Expr> parse_postfix_tail(std::shared_ptr<Expr> e) {
        while (true) {
            if (punct("[")) {
                auto x = make_expr(ExprKind::Index, e->first_token, e->last_token);
                x->op_token = advance();
                x->text = "[";
                x->precedence = 1;
                set_role(x->op_token, TokenRole::SubscriptOpen);
                x->children.push_back(e);
                x->children.push_back(parse_expression());
                x->last_token = expect("]", TokenRole::SubscriptClose);
                e = x;
            } else if (punct("(")) {
                auto x = make_expr(ExprKind::Call, e->first_token, e->last_token);
                x->op_token = advance();
                x->text = "(";
                x->precedence = 1;
                set_role(x->op_token, TokenRole::CallOpen);
                x->children.push_back(e);
                bool type_args = e->kind == ExprKind::Ident &&
                                 (e->text == "va_arg" || e->text == "offsetof" || e->text == "__builtin_va_arg" ||
                                  e->text == "__builtin_offsetof");
                while (!punct(")")) {
                    if (type_args && (type_name_start(0) || identifier_is_type(0))) {
                        auto arg = make_expr(ExprKind::Unknown, idx(), idx());
                        arg->type_name = parse_type_name();
                        arg->last_token = prev_idx();
                        x->children.push_back(arg);
                    } else {
                        x->children.push_back(parse_assignment());
                    }
                    if (punct(",")) {
                        set_role(advance(), TokenRole::ArgComma);
                        continue;
                    }
                    break;
                }
                x->last_token = expect(")", TokenRole::CallClose);
                e = x;
            } else if (punct(".") || punct("->")) {
                auto x = make_expr(ExprKind::Member, e->first_token, e->last_token);
                x->text = tok().spelling;
                x->op_token = advance();
                x->precedence = 1;
                set_role(x->op_token, TokenRole::MemberAccess);
                if (tok().kind != TokenKind::Identifier) fail("expected a member name");
                auto name = make_expr(ExprKind::Ident, idx(), idx());
                name->text = tok().spelling;
                advance();
                x->children.push_back(e);
                x->children.push_back(name);
                x->last_token = name->last_token;
                e = x;
            } else if (punct("++") || punct("--")) {
                auto x = make_expr(ExprKind::Postfix, e->first_token, idx());
                x->text = tok().spelling;
                x->op_token = advance();
                x->precedence = 1;
                set_role(x->op_token, TokenRole::UnaryPostfix);
                x->children.push_back(e);
                e = x;
            } else {
                return e;
            }
        }
    }

    std::shared_ptr<Expr> parse_primary() {
        const Token& t = tok();
        switch (t.kind) {
            case TokenKind::Identifier: {
                auto e = make_expr(ExprKind::Ident, idx(), idx());
                e->text = t.spelling;
                e->symbol = lookup(t.spelling);
                advance();
                return e;
            }
            case TokenKind::IntConstant:
            case TokenKind::FloatConstant:
            case TokenKind::CharConstant: {
                auto e = make_expr(ExprKind::Const, idx(), idx());
                e->text = t.spelling;
                e->const_kind = t.kind;
                e->suffix = t.suffix;
                advance();
                return e;
            }
            case TokenKind::StringLiteral: {
                auto e = make_expr(ExprKind::String, idx(), idx());
                e->text = t.spelling;
                advance();
                while (tok().kind == TokenKind::StringLiteral ||
                       (tok().kind == TokenKind::Identifier && tok(1).kind == TokenKind::StringLiteral &&
                        tok().spelling.rfind("PRI", 0) == 0)) {
                    e->last_token = advance();
                }
                return e;
            }
            case TokenKind::Punctuator:
                if (t.spelling == "(") {
                    auto e = make_expr(ExprKind::Paren, idx(), idx());
                    e->op_token = advance();
                    e->precedence = 1;
                    set_role(e->op_token, TokenRole::GroupOpen);
                    if (punct("{")) {  // GNU statement expression
                        e->children.push_back(make_expr(ExprKind::Unknown, idx(), idx()));
                        parse_compound(true);
                    } else {
                        e->children.push_back(parse_expression());
                    }
                    e->last_token = expect(")", TokenRole::GroupClose);
                    return e;
                }
                break;
            default:
                break;
        }
        fail(t.kind == TokenKind::EndOfFile ? "unexpected end of file" : "unexpected '" + t.spelling + "'");
    }

    const std::vector<Token>& toks_;
    const ParseOptions& options_;
    bool in_type_name_ = false;
    SyntaxTree tree_;
    std::size_t pos_ = 0;
    std::size_t eof_ = 0;
    std::vector<std::unordered_map<std::string, int>> scopes_;
    std::vector<int> scope_ids_;
    int scope_counter_ = 0;
};

}  // namespace

SyntaxTree parse_translation_unit(const std::vector<Token>& tokens, const DirectiveSet& directives,
                                  const BranchSelection& branches, const ParseOptions& options) {
    return Parser(tokens, directives, branches, options).run();
}

ValueClass classify_type(const TypeSpec& spec, const SymbolTable& symbols) {
    TypeSpec t = spec;
    for (int depth = 0; depth < 8 && t.base == BaseType::Named; ++depth) {
        if (auto b = builtin_typedef(t.name)) {
            t.base = *b;
            break;
        }
        int s = symbols.find_file_scope(t.name);
        if (s < 0 || symbols.symbols[static_cast<std::size_t>(s)].kind != SymbolKind::Typedef ||
            symbols.symbols[static_cast<std::size_t>(s)].pointer_depth > 0) {
            return ValueClass::Unknown;
        }
        t = symbols.symbols[static_cast<std::size_t>(s)].spec;
    }
    switch (t.base) {
        case BaseType::SignedInt:
            return ValueClass::Signed;
        case BaseType::UnsignedInt:
            return ValueClass::Unsigned;
        case BaseType::Char:
            if (t.explicit_unsigned) return ValueClass::Unsigned;
            if (t.explicit_signed) return ValueClass::Signed;
            return ValueClass::Unknown;
        case BaseType::Float:
        case BaseType::Double:
            return ValueClass::Floating;
        case BaseType::Bool:
            return ValueClass::Boolean;
        default:
            return ValueClass::Unknown;
    }
}

namespace {

TypeSpec unknown_type() { return TypeSpec{}; }

TypeSpec basic(BaseType b) {
    TypeSpec t;
    t.base = b;
    return t;
}

TypeSpec from_class(ValueClass c) {
    switch (c) {
        case ValueClass::Signed:
            return basic(BaseType::SignedInt);
        case ValueClass::Unsigned:
            return basic(BaseType::UnsignedInt);
        case ValueClass::Floating:
            return basic(BaseType::Double);
        case ValueClass::Boolean:
            return basic(BaseType::Bool);
        default:
            return unknown_type();
    }
}

}  // namespace

TypeSpec resolve_local_type(const Expr& expr, const SymbolTable& symbols) {
    auto child = [&](std::size_t i) -> const Expr& { return *expr.children.at(i); };
    switch (expr.kind) {
        case ExprKind::Ident: {
            if (expr.symbol < 0) return unknown_type();
            const Symbol& s = symbols.symbols[static_cast<std::size_t>(expr.symbol)];
            if (s.kind == SymbolKind::Typedef || s.kind == SymbolKind::Function) return unknown_type();
            if (s.kind == SymbolKind::EnumConst) return unknown_type();
            if (s.pointer_depth > 0 || s.is_array) return unknown_type();
            return s.spec;
        }
        case ExprKind::Const: {
            if (expr.const_kind == TokenKind::FloatConstant) return basic(BaseType::Double);
            if (expr.const_kind == TokenKind::CharConstant) return basic(BaseType::SignedInt);
            return basic(expr.suffix.is_unsigned ? BaseType::UnsignedInt : BaseType::SignedInt);
        }
        case ExprKind::Paren:
            return expr.children.empty() ? unknown_type() : resolve_local_type(child(0), symbols);
        case ExprKind::Index: {
            const Expr& base = child(0);
            if (base.kind == ExprKind::Ident && base.symbol >= 0) {
                const Symbol& s = symbols.symbols[static_cast<std::size_t>(base.symbol)];
                if (s.kind == SymbolKind::Object && s.pointer_depth + (s.is_array ? 1 : 0) == 1) return s.spec;
            }
            return unknown_type();
        }
        case ExprKind::Cast: {
            if (!expr.type_name || expr.type_name->declarators.empty()) return unknown_type();
            const Declarator& d = expr.type_name->declarators.front();
            if (d.pointer_depth > 0 || d.is_function) return unknown_type();
            return expr.type_name->spec;
        }
        case ExprKind::Unary: {
            const std::string& op = expr.text;
            if (op == "!") return basic(BaseType::Bool);
            if (op == "&") return unknown_type();
            if (op == "*") {
                const Expr& operand = child(0);
                if (operand.kind == ExprKind::Ident && operand.symbol >= 0) {
                    const Symbol& s = symbols.symbols[static_cast<std::size_t>(operand.symbol)];
                    if (s.kind == SymbolKind::Object && s.pointer_depth == 1 && !s.is_array) return s.spec;
                }
                return unknown_type();
            }
            return resolve_local_type(child(0), symbols);
        }
        case ExprKind::Postfix:
            return resolve_local_type(child(0), symbols);
        case ExprKind::Assign:
            return resolve_local_type(child(0), symbols);
        case ExprKind::Comma:
            return resolve_local_type(child(1), symbols);
        case ExprKind::Binary: {
            const std::string& op = expr.text;
            int level = expr.precedence;
            if (level == 6 || level == 7 || level == 11 || level == 12) return basic(BaseType::Bool);
            ValueClass a = classify_type(resolve_local_type(child(0), symbols), symbols);
            if (op == "<<" || op == ">>") return from_class(a);
            ValueClass b = classify_type(resolve_local_type(child(1), symbols), symbols);
            if (a == b) return from_class(a);
            if (a == ValueClass::Floating || b == ValueClass::Floating) {
                if (a != ValueClass::Unknown && b != ValueClass::Unknown) return basic(BaseType::Double);
            }
            return unknown_type();
        }
        case ExprKind::Ternary: {
            ValueClass a = classify_type(resolve_local_type(child(1), symbols), symbols);
            ValueClass b = classify_type(resolve_local_type(child(2), symbols), symbols);
            return a == b ? from_class(a) : unknown_type();
        }
        case ExprKind::Call: {
            const Expr& callee = child(0);
            if (callee.kind == ExprKind::Ident && callee.symbol >= 0) {
                const Symbol& s = symbols.symbols[static_cast<std::size_t>(callee.symbol)];
                if (s.kind == SymbolKind::Function && s.pointer_depth == 0) return s.spec;
            }
            return unknown_type();
        }
        case ExprKind::Sizeof:
            return basic(BaseType::UnsignedInt);
        default:
            return unknown_type();
    }
}

}  // namespace barrc
