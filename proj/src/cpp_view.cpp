#include "barrc/cpp_view.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <system_error>

namespace barrc {

namespace {

DirectiveKind kind_from_name(const Token& name) {
    const std::string& s = name.spelling;
    if (name.kind == TokenKind::IntConstant) return DirectiveKind::LineMarker;
    if (s == "include" || s == "include_next") return DirectiveKind::Include;
    if (s == "define") return DirectiveKind::Define;
    if (s == "undef") return DirectiveKind::Undef;
    if (s == "if") return DirectiveKind::If;
    if (s == "ifdef") return DirectiveKind::Ifdef;
    if (s == "ifndef") return DirectiveKind::Ifndef;
    if (s == "elif") return DirectiveKind::Elif;
    if (s == "else") return DirectiveKind::Else;
    if (s == "endif") return DirectiveKind::Endif;
    if (s == "pragma") return DirectiveKind::Pragma;
    if (s == "error") return DirectiveKind::Error;
    if (s == "line") return DirectiveKind::LineMarker;
    return DirectiveKind::Other;
}

bool is_name_token(const Token& t) { return t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword; }

// Integer value of a pp-number such as 0x1FU or 017L.
long long parse_int_constant(const std::string& spelling) {
    std::string digits = spelling;
    while (!digits.empty() && std::string("uUlL").find(digits.back()) != std::string::npos) {
        digits.pop_back();
    }
    if (digits.empty()) return 0;
    return std::strtoll(digits.c_str(), nullptr, 0);
}

class IfEvaluator {
public:
    IfEvaluator(const std::vector<const Token*>& toks, const std::map<std::string, std::string>& env)
        : toks_(toks), env_(env) {}

    std::optional<long long> evaluate() {
        ok_ = true;
        long long v = conditional();
        if (!ok_ || pos_ != toks_.size()) return std::nullopt;
        return v;
    }

private:
    const Token* peek() const { return pos_ < toks_.size() ? toks_[pos_] : nullptr; }
    bool accept(std::string_view p) {
        if (peek() && peek()->kind == TokenKind::Punctuator && peek()->spelling == p) {
            ++pos_;
            return true;
        }
        return false;
    }

    long long conditional() {
        long long c = binary(0);
        if (accept("?")) {
            long long a = conditional();
            if (!accept(":")) ok_ = false;
            long long b = conditional();
            return c ? a : b;
        }
        return c;
    }

    static int level(std::string_view op) {
        if (op == "||") return 1;
        if (op == "&&") return 2;
        if (op == "|") return 3;
        if (op == "^") return 4;
        if (op == "&") return 5;
        if (op == "==" || op == "!=") return 6;
        if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
        if (op == "<<" || op == ">>") return 8;
        if (op == "+" || op == "-") return 9;
        if (op == "*" || op == "/" || op == "%") return 10;
        return -1;
    }

    long long binary(int min_level) {
        long long lhs = unary();
        while (const Token* t = peek()) {
            if (t->kind != TokenKind::Punctuator) break;
            int lv = level(t->spelling);
            if (lv < 0 || lv < min_level) break;
            std::string op = t->spelling;
            ++pos_;
            long long rhs = binary(lv + 1);
            lhs = apply(op, lhs, rhs);
        }
        return lhs;
    }

    long long apply(const std::string& op, long long a, long long b) {
        if (op == "||") return (a || b) ? 1 : 0;
        if (op == "&&") return (a && b) ? 1 : 0;
        if (op == "|") return a | b;
        if (op == "^") return a ^ b;
        if (op == "&") return a & b;
        if (op == "==") return a == b;
        if (op == "!=") return a != b;
        if (op == "<") return a < b;
        if (op == ">") return a > b;
        if (op == "<=") return a <= b;
        if (op == ">=") return a >= b;
        if (op == "<<") return (b >= 0 && b < 63) ? a << b : 0;
        if (op == ">>") return (b >= 0 && b < 63) ? a >> b : 0;
        if (op == "+") return a + b;
        if (op == "-") return a - b;
        if (op == "*") return a * b;
        if (op == "/") return b == 0 ? 0 : a / b;
        if (op == "%") return b == 0 ? 0 : a % b;
        return 0;
    }

    long long unary() {
        if (accept("!")) return unary() ? 0 : 1;
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        if (accept("~")) return ~unary();
        if (accept("(")) {
            long long v = conditional();
            if (!accept(")")) ok_ = false;
            return v;
        }
        const Token* t = peek();
        if (!t) {
            ok_ = false;
            return 0;
        }
        ++pos_;
        if (t->kind == TokenKind::Identifier && t->spelling == "defined") {
            bool paren = accept("(");
            const Token* name = peek();
            if (!name || !is_name_token(*name)) {
                ok_ = false;
                return 0;
            }
            ++pos_;
            if (paren && !accept(")")) ok_ = false;
            return env_.count(name->spelling) ? 1 : 0;
        }
        if (t->kind == TokenKind::IntConstant) return parse_int_constant(t->spelling);
        if (t->kind == TokenKind::CharConstant) {
            return t->spelling.size() >= 3 ? static_cast<unsigned char>(t->spelling[t->spelling.size() - 2]) : 0;
        }
        if (is_name_token(*t)) return macro_value(t->spelling, 0);
        ok_ = false;
        return 0;
    }

    long long macro_value(const std::string& name, int depth) const {
        auto it = env_.find(name);
        if (it == env_.end() || depth > 8) return 0;
        const std::string& v = it->second;
        if (v.empty()) return 0;
        if (std::isdigit(static_cast<unsigned char>(v[0]))) return parse_int_constant(v);
        return macro_value(v, depth + 1);
    }

    const std::vector<const Token*>& toks_;
    const std::map<std::string, std::string>& env_;
    std::size_t pos_ = 0;
    bool ok_ = true;
};

}  // namespace

DirectiveSet parse_directives(const std::vector<Token>& tokens) {
    DirectiveSet set;
    set.directive_of_token.assign(tokens.size(), DirectiveSet::npos);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].kind != TokenKind::PpDirectiveMarker) continue;
        std::size_t last = i;
        while (last + 1 < tokens.size() && tokens[last + 1].kind != TokenKind::EndOfFile &&
               !tokens[last + 1].at_line_start) {
            ++last;
        }
        Directive d;
        d.first_token = i;
        d.last_token = last;
        d.span = Span{tokens[i].span.begin, tokens[last].span.end, tokens[i].span.start, tokens[last].span.stop};
        d.hash_column = tokens[i].span.start.column;
        d.first_line = tokens[i].span.start.line;
        d.last_line = tokens[last].span.stop.line;
        if (last > i) d.kind = kind_from_name(tokens[i + 1]);
        const std::size_t index = set.directives.size();
        for (std::size_t t = i; t <= last; ++t) set.directive_of_token[t] = index;

        auto problem = [&](const std::string& msg) {
            set.problems.push_back({tokens[i].span.start, msg});
            d.kind = DirectiveKind::Other;
        };

        if (d.kind == DirectiveKind::Define) {
            std::size_t n = i + 2;
            if (n > last || !is_name_token(tokens[n])) {
                problem("#define without a macro name");
            } else {
                MacroDef m;
                m.name = tokens[n].spelling;
                m.name_token = n;
                m.directive = index;
                m.span = d.span;
                std::size_t body = n + 1;
                if (body <= last && tokens[body].is_punct("(") && tokens[body].leading_trivia.empty()) {
                    m.is_function_like = true;
                    std::size_t p = body + 1;
                    bool closed = false;
                    bool expect_name = true;
                    while (p <= last) {
                        const Token& t = tokens[p];
                        if (t.is_punct(")")) {
                            closed = true;
                            ++p;
                            break;
                        }
                        if (expect_name && is_name_token(t)) {
                            m.params.push_back(t.spelling);
                            expect_name = false;
                        } else if (expect_name && t.is_punct("...")) {
                            m.variadic = true;
                            expect_name = false;
                        } else if (!expect_name && t.is_punct(",")) {
                            expect_name = true;
                        } else {
                            break;
                        }
                        ++p;
                    }
                    if (!closed) {
                        problem("malformed macro parameter list");
                    } else {
                        body = p;
                    }
                }
                if (d.kind == DirectiveKind::Define) {
                    for (std::size_t b = body; b <= last; ++b) m.body.push_back(b);
                    set.macros.push_back(std::move(m));
                }
            }
        } else if (d.kind == DirectiveKind::Include) {
            std::size_t n = i + 2;
            if (n <= last && tokens[n].kind == TokenKind::StringLiteral && tokens[n].spelling.size() > 2 &&
                tokens[n].spelling.front() == '"') {
                set.includes.push_back({IncludeStyle::Quote, tokens[n].spelling.substr(1, tokens[n].spelling.size() - 2),
                                        std::nullopt, n, index, d.span});
            } else if (n <= last && tokens[n].kind == TokenKind::HeaderName && tokens[n].spelling.size() > 2) {
                set.includes.push_back({IncludeStyle::Angle, tokens[n].spelling.substr(1, tokens[n].spelling.size() - 2),
                                        std::nullopt, n, index, d.span});
            } else if (n > last || tokens[n].kind == TokenKind::StringLiteral || tokens[n].kind == TokenKind::HeaderName) {
                problem("#include without a file name");
            }
            // A macro operand (#include HDR) is legal and simply not tracked.
        } else if ((d.kind == DirectiveKind::Ifdef || d.kind == DirectiveKind::Ifndef || d.kind == DirectiveKind::Undef) &&
                   (i + 2 > last || !is_name_token(tokens[i + 2]))) {
            std::string name = tokens[i + 1].spelling;
            problem("#" + name + " without a macro name");
            // Keep conditional structure intact for branch selection.
            d.kind = name == "undef" ? DirectiveKind::Other : kind_from_name(tokens[i + 1]);
        }
        set.directives.push_back(d);
        i = last;
    }
    return set;
}

void resolve_includes(std::vector<IncludeRef>& includes, const std::filesystem::path& includer,
                      const std::vector<std::filesystem::path>& search_paths) {
    for (auto& inc : includes) {
        std::vector<std::filesystem::path> candidates;
        if (inc.style == IncludeStyle::Quote) {
            candidates.push_back(includer.parent_path() / inc.path_text);
        }
        for (const auto& dir : search_paths) candidates.push_back(dir / inc.path_text);
        for (const auto& c : candidates) {
            std::error_code ec;
            if (std::filesystem::is_regular_file(c, ec)) {
                inc.resolved = c.lexically_normal();
                break;
            }
        }
    }
}

std::optional<HeaderGuard> detect_header_guard(const std::vector<Token>& tokens, const DirectiveSet& set) {
    const auto& dirs = set.directives;
    if (dirs.size() < 3 || tokens.empty() || dirs[0].first_token != 0 || dirs[0].kind != DirectiveKind::Ifndef ||
        dirs[1].kind != DirectiveKind::Define || dirs[1].first_token != dirs[0].last_token + 1) {
        return std::nullopt;
    }
    std::size_t name_tok = dirs[0].first_token + 2;
    if (name_tok > dirs[0].last_token) return std::nullopt;
    const std::string& name = tokens[name_tok].spelling;
    if (dirs[1].first_token + 2 > dirs[1].last_token || tokens[dirs[1].first_token + 2].spelling != name) {
        return std::nullopt;
    }
    int depth = 0;
    std::size_t endif = DirectiveSet::npos;
    for (std::size_t d = 0; d < dirs.size(); ++d) {
        auto k = dirs[d].kind;
        if (k == DirectiveKind::If || k == DirectiveKind::Ifdef || k == DirectiveKind::Ifndef) ++depth;
        if (k == DirectiveKind::Endif && --depth == 0) {
            endif = d;
            break;
        }
    }
    if (endif != dirs.size() - 1) return std::nullopt;
    // Nothing but trivia may follow the closing #endif.
    std::size_t after = dirs[endif].last_token + 1;
    if (after >= tokens.size() || tokens[after].kind != TokenKind::EndOfFile) return std::nullopt;

    HeaderGuard g;
    g.macro_name = name;
    g.ifndef_directive = 0;
    g.define_directive = 1;
    g.endif_directive = endif;
    for (const auto& t : tokens[after].leading_trivia) {
        if (t.kind == TriviaKind::Newline) break;
        if (t.is_comment()) g.endif_has_comment = true;
    }
    return g;
}

BranchSelection select_branch(const std::vector<Token>& tokens, const DirectiveSet& set, int line_count,
                              const std::map<std::string, std::string>& predefined) {
    BranchSelection out;
    out.line_active.assign(static_cast<std::size_t>(std::max(line_count, 0)), true);
    std::map<std::string, std::string> env = predefined;

    struct Frame {
        bool parent_active;
        bool taken;
        bool active;
        bool else_seen;
        int line;
    };
    std::vector<Frame> stack;
    bool active = true;
    bool gave_up = false;
    int next_line = 1;

    auto mark = [&](int from, int to, bool value) {
        for (int l = std::max(from, 1); l <= std::min(to, line_count); ++l) {
            out.line_active[static_cast<std::size_t>(l - 1)] = value;
        }
    };
    auto eval = [&](const Directive& d) -> bool {
        std::vector<const Token*> toks;
        for (std::size_t t = d.first_token + 2; t <= d.last_token; ++t) toks.push_back(&tokens[t]);
        auto v = IfEvaluator(toks, env).evaluate();
        if (!v) {
            out.problems.push_back({d.span.start, "malformed conditional expression"});
            return false;
        }
        return *v != 0;
    };
    auto defined_operand = [&](const Directive& d) {
        std::size_t t = d.first_token + 2;
        return t <= d.last_token && env.count(tokens[t].spelling) > 0;
    };

    for (const auto& d : set.directives) {
        if (gave_up) break;
        mark(next_line, d.first_line - 1, active);
        bool directive_line_active = active;
        switch (d.kind) {
            case DirectiveKind::If:
            case DirectiveKind::Ifdef:
            case DirectiveKind::Ifndef: {
                bool cond = false;
                if (active) {
                    if (d.kind == DirectiveKind::If) cond = eval(d);
                    else if (d.kind == DirectiveKind::Ifdef) cond = defined_operand(d);
                    else cond = !defined_operand(d);
                }
                stack.push_back({active, cond, active && cond, false, d.first_line});
                active = active && cond;
                break;
            }
            case DirectiveKind::Elif:
            case DirectiveKind::Else: {
                if (stack.empty() || stack.back().else_seen) {
                    out.problems.push_back({d.span.start, "unbalanced #" + tokens[d.first_token + 1].spelling});
                    gave_up = true;
                    break;
                }
                Frame& f = stack.back();
                directive_line_active = f.parent_active;
                bool cond = false;
                if (f.parent_active && !f.taken) {
                    cond = d.kind == DirectiveKind::Else ? true : eval(d);
                }
                if (d.kind == DirectiveKind::Else) f.else_seen = true;
                f.active = cond;
                f.taken = f.taken || cond;
                active = cond;
                break;
            }
            case DirectiveKind::Endif: {
                if (stack.empty()) {
                    out.problems.push_back({d.span.start, "unbalanced #endif"});
                    gave_up = true;
                    break;
                }
                active = stack.back().parent_active;
                directive_line_active = active;
                stack.pop_back();
                break;
            }
            case DirectiveKind::Define:
                if (active) {
                    for (const auto& m : set.macros) {
                        if (m.directive == static_cast<std::size_t>(&d - set.directives.data())) {
                            std::string value;
                            for (std::size_t b : m.body) value += tokens[b].spelling;
                            env[m.name] = m.is_function_like ? std::string() : value;
                        }
                    }
                }
                break;
            case DirectiveKind::Undef:
                if (active && d.first_token + 2 <= d.last_token) env.erase(tokens[d.first_token + 2].spelling);
                break;
            default:
                break;
        }
        if (gave_up) {
            mark(d.first_line, line_count, true);
            break;
        }
        mark(d.first_line, d.last_line, directive_line_active);
        next_line = d.last_line + 1;
    }
    if (!gave_up) {
        mark(next_line, line_count, active);
        if (!stack.empty()) {
            out.problems.push_back({SourcePos{stack.front().line, 1}, "conditional directive without #endif"});
            mark(stack.front().line, line_count, true);
        }
    }
    return out;
}

}  // namespace barrc
