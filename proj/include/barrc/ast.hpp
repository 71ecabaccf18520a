#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "barrc/lexer.hpp"

namespace barrc {

inline constexpr std::size_t kNoToken = static_cast<std::size_t>(-1);

enum class BaseType { Void, Char, SignedInt, UnsignedInt, Float, Double, Bool, Named, Struct, Union, Enum, Unknown };

struct Decl;

struct Enumerator {
    std::string name;
    std::size_t name_token = kNoToken;
    std::size_t value_first = kNoToken;  // first token of the value expression, if any
};

/// Body of a struct, union or enum specifier.
struct RecordBody {
    std::vector<Decl> members;
    std::vector<Enumerator> enumerators;
    std::size_t open_token = kNoToken;
    std::size_t close_token = kNoToken;
};

struct TypeSpec {
    BaseType base = BaseType::Unknown;
    std::string name;  // typedef name or tag
    bool is_const = false;
    bool is_volatile = false;
    bool uses_short = false;
    int long_count = 0;
    bool explicit_signed = false;
    bool explicit_unsigned = false;
    bool implicit_int = false;  // no type specifier at all
    /// Type written with char/short/int/long/signed/unsigned keywords rather than a typedef name.
    bool basic_integer_keywords = false;
    std::shared_ptr<RecordBody> body;  // set when the specifier defines a struct/union/enum
    std::size_t first_token = kNoToken;
    std::size_t last_token = kNoToken;
    std::vector<std::size_t> keyword_tokens;  // specifier and qualifier keywords as written
};

enum class Storage { None, Static, Extern, Auto, Register, Typedef };
enum class DeclScope { File, Block, Param, Member };

struct Expr;

struct Declarator {
    std::string name;
    std::size_t name_token = kNoToken;
    int pointer_depth = 0;
    std::vector<std::size_t> pointer_tokens;
    bool pointer_const = false;  // outermost pointer is const-qualified
    bool is_function = false;
    bool is_array = false;
    bool knr_identifiers = false;  // identifier-list parameters
    bool variadic = false;
    bool void_params = false;      // (void)
    bool empty_params = false;     // ()
    std::vector<Decl> params;
    std::vector<std::string> knr_names;
    std::size_t params_open = kNoToken;
    std::size_t params_close = kNoToken;
    std::shared_ptr<Expr> bitfield_width;
    std::shared_ptr<Expr> init;
    std::size_t assign_token = kNoToken;
    std::size_t first_token = kNoToken;
    std::size_t last_token = kNoToken;
};

struct Decl {
    TypeSpec spec;
    Storage storage = Storage::None;
    bool is_inline = false;
    std::vector<Declarator> declarators;
    DeclScope scope = DeclScope::File;
    std::size_t first_token = kNoToken;
    std::size_t last_token = kNoToken;  // the terminating ';' when present
};

enum class ExprKind {
    Ident,
    Const,
    String,
    Call,
    Unary,
    Postfix,
    Binary,
    Assign,
    Ternary,
    Cast,
    Paren,
    Index,
    Member,
    Comma,
    Sizeof,
    CompoundLiteral,
    InitList,
    Unknown,
};

struct Expr {
    ExprKind kind = ExprKind::Unknown;
    std::string text;      // identifier, constant spelling, or operator symbol
    int precedence = 0;    // C grammar level, 1 (postfix) .. 15 (comma)
    std::vector<std::shared_ptr<Expr>> children;
    std::shared_ptr<Decl> type_name;  // Cast, Sizeof(type), CompoundLiteral
    std::size_t op_token = kNoToken;
    std::size_t first_token = kNoToken;
    std::size_t last_token = kNoToken;
    int symbol = -1;                  // Ident: symbol table entry
    TokenKind const_kind = TokenKind::IntConstant;
    NumberSuffix suffix;
};

enum class StmtKind {
    Compound,
    If,
    Switch,
    Case,
    Default,
    While,
    DoWhile,
    For,
    Return,
    Goto,
    Label,
    Break,
    Continue,
    Expr,
    Decl,
    Empty,
    Asm,
    Error,
};

struct Stmt {
    StmtKind kind = StmtKind::Empty;
    std::vector<std::shared_ptr<Stmt>> children;  // compound items; then/else; loop body; labelled stmt
    std::shared_ptr<Expr> expr;                   // condition, value, or expression
    std::shared_ptr<Stmt> for_init;
    std::shared_ptr<Expr> for_cond;
    std::shared_ptr<Expr> for_step;
    std::shared_ptr<Decl> decl;
    std::string label;
    std::size_t keyword_token = kNoToken;
    std::size_t open_paren = kNoToken;
    std::size_t close_paren = kNoToken;
    std::size_t else_token = kNoToken;
    std::size_t while_token = kNoToken;  // do-while
    std::size_t first_token = kNoToken;
    std::size_t last_token = kNoToken;

    bool has_else() const { return kind == StmtKind::If && children.size() > 1; }
    const Stmt* then_branch() const { return children.empty() ? nullptr : children[0].get(); }
    const Stmt* else_branch() const { return children.size() > 1 ? children[1].get() : nullptr; }
    const Stmt* body() const { return children.empty() ? nullptr : children[0].get(); }
};

struct FunctionDef {
    Decl decl;  // exactly one declarator, the function
    std::vector<Decl> knr_decls;
    std::shared_ptr<Stmt> body;
    std::size_t first_token = kNoToken;

    const Declarator& declarator() const { return decl.declarators.front(); }
    const std::string& name() const { return declarator().name; }
    bool is_static() const { return decl.storage == Storage::Static; }
};

struct TopLevelItem {
    std::shared_ptr<Decl> decl;
    std::shared_ptr<FunctionDef> function;
    std::size_t first_token = kNoToken;
    std::size_t last_token = kNoToken;
};

enum class SymbolKind { Object, Function, Typedef, EnumConst };
enum class Linkage { External, Internal, None };

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::Object;
    TypeSpec spec;
    int pointer_depth = 0;
    bool is_array = false;
    Storage storage = Storage::None;
    Linkage linkage = Linkage::None;
    DeclScope scope = DeclScope::File;
    int scope_id = 0;  // 0 = file scope
    bool is_definition = false;
    std::vector<std::size_t> name_tokens;  // every declaring occurrence
    std::vector<Storage> storages;         // storage class at each declaration
};

struct SymbolTable {
    std::vector<Symbol> symbols;

    /// File-scope lookup by name; -1 when absent.
    int find_file_scope(const std::string& name) const;
};

struct ParseProblem {
    SourcePos pos;
    std::string message;
};

struct SyntaxTree {
    std::vector<TopLevelItem> items;
    SymbolTable symbols;
    std::vector<TokenRole> roles;  // one per token
    std::vector<ParseProblem> problems;
    /// Tokens the parser consumed (active, outside directives), in order.
    std::vector<std::size_t> code_tokens;
};

/// C grammar precedence level for a binary or assignment operator spelling; 0 if none.
int binary_precedence(const std::string& op);
bool is_assignment_operator(const std::string& op);

}  // namespace barrc
