#pragma once

// Syntax tree for the supported Python 3 subset.
//
// The tree is a generic node design: every expression is an `Expr` with a
// kind tag, an optional identifier/literal `text`, an operator, and ordered
// children. Statements follow the same pattern with nested blocks. The layout
// of `children` / `exprs` for each kind is documented next to the enums.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dualmark::py {

struct Span {
  int line = 0;
  int col = 0;
  int end_line = 0;
  int end_col = 0;
};

enum class ExprKind {
  Name,           // text = identifier
  Number,         // text = literal source
  String,         // text = literal source (adjacent pieces joined by one space)
  Constant,       // text = True | False | None | ...
  BinOp,          // op, children = [left, right]
  UnaryOp,        // op in {-, +, ~, not}, children = [operand]
  BoolOp,         // op in {and, or}, children = values (>= 2)
  Compare,        // ops, children = [left, comparator...]
  Call,           // children = [func, arg...]; args may be Keyword / Starred
  Keyword,        // text = name, children = [value]
  Starred,        // op = "*" or "**", children = [value]
  Attribute,      // text = attribute name, children = [value]
  Subscript,      // children = [value, index]
  Slice,          // children = [lower, upper, step] (Empty when absent)
  Tuple,          // children = elements
  List,           // children = elements
  Set,            // children = elements
  Dict,           // children = KeyValue | Starred("**")
  KeyValue,       // children = [key, value]
  ListComp,       // children = [elt, Comprehension...]
  SetComp,        // children = [elt, Comprehension...]
  GeneratorExp,   // children = [elt, Comprehension...]
  DictComp,       // children = [KeyValue, Comprehension...]
  Comprehension,  // children = [target, iter, if...]
  IfExp,          // children = [body, test, orelse]
  Lambda,         // children = [Param..., body]
  Param,          // text = name; op in {"", "*", "**", "/"}; children = [annotation, default]
  Yield,          // children = [] or [value]
  YieldFrom,      // children = [value]
  Await,          // children = [value]
  NamedExpr,      // children = [target, value]
  WithItem,       // children = [context, target-or-Empty]
  Alias,          // text = dotted name, op = as-name (may be empty)
  Empty,          // placeholder for an absent optional child
};

struct Expr {
  ExprKind kind = ExprKind::Empty;
  std::string text;
  std::string op;
  std::vector<std::string> ops;
  std::vector<Expr> children;
  bool parenthesized = false;  // redundant source parentheses; trivia
  Span span;

  static Expr name(std::string id);
  static Expr number(std::string literal);
  static Expr constant(std::string literal);
  static Expr empty();
  static Expr make(ExprKind kind, std::vector<Expr> children, std::string op = {});

  bool is(ExprKind k) const { return kind == k; }
  bool is_name(std::string_view id) const { return kind == ExprKind::Name && text == id; }
};

enum class StmtKind {
  Expr,          // exprs = [value]
  Assign,        // exprs = [target..., value]
  AugAssign,     // op, exprs = [target, value]
  AnnAssign,     // exprs = [target, annotation, value-or-Empty]
  Return,        // exprs = [] or [value]
  Pass,
  Break,
  Continue,
  Delete,        // exprs = targets
  Global,        // exprs = Name...
  Nonlocal,      // exprs = Name...
  Assert,        // exprs = [test] or [test, msg]
  Raise,         // exprs = [] | [exc] | [exc, cause]
  Import,        // exprs = Alias...
  ImportFrom,    // name = module (with leading dots), exprs = Alias...
  If,            // exprs = [test], body, orelse
  While,         // exprs = [test], body, orelse
  For,           // exprs = [target, iter], body, orelse
  FunctionDef,   // name, exprs = [Param..., returns-or-Empty], body, decorators
  ClassDef,      // name, exprs = bases / keywords, body, decorators
  Try,           // body, handlers, orelse, finalbody
  ExceptHandler, // name = as-name, exprs = [] or [type], body
  With,          // exprs = WithItem..., body
};

/// Comments and blank lines attached to a statement. Ignored by structural
/// comparison and by all anchor logic.
struct Trivia {
  std::vector<std::string> leading_comments;
  std::string trailing_comment;
  bool blank_before = false;
};

struct Stmt {
  StmtKind kind = StmtKind::Pass;
  std::string name;
  std::string op;
  std::vector<Expr> exprs;
  std::vector<Stmt> body;
  std::vector<Stmt> orelse;
  std::vector<Stmt> finalbody;
  std::vector<Stmt> handlers;
  std::vector<Expr> decorators;
  bool is_elif = false;  // rendering hint for an If that is the sole orelse entry
  Trivia trivia;
  Span span;

  static Stmt make(StmtKind kind, std::vector<Expr> exprs = {});
};

struct Module {
  std::vector<Stmt> body;
  std::vector<std::string> trailing_comments;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

/// Parses `source` into a module. Throws ParseError on invalid syntax.
Module parse_module(std::string_view source);

/// Formatting knobs. The defaults produce the canonical rendering.
struct RenderStyle {
  std::string indent = "    ";
  std::string operator_pad = " ";  // around binary operators, comparisons and '='
  std::string comma_pad = " ";     // after commas
  bool keep_blank_lines = true;
};

std::string render_module(const Module& module, const RenderStyle& style = {});
std::string render_expr(const Expr& expr);

/// Trivia-free structural dump; two trees are structurally equal iff their
/// dumps are equal.
std::string dump(const Module& module);
std::string dump(const Expr& expr);
bool structurally_equal(const Module& a, const Module& b);

bool is_keyword(std::string_view word);

}  // namespace dualmark::py
