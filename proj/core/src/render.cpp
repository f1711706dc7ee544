#include <cctype>
#include <sstream>

#include "dualmark/syntax.hpp"

namespace dualmark::py {
namespace {

// Binding strength, weakest first. Children that bind more weakly than their
// context requires are parenthesized.
enum Prec : int {
  kTuple = 0,
  kLambda = 1,
  kIfExp = 2,
  kOr = 3,
  kAnd = 4,
  kNot = 5,
  kCompare = 6,
  kBitOr = 7,
  kBitXor = 8,
  kBitAnd = 9,
  kShift = 10,
  kArith = 11,
  kTerm = 12,
  kUnary = 13,
  kPower = 14,
  kAwait = 15,
  kPrimary = 16,
  kAtom = 17,
};

int binop_prec(const std::string& op) {
  if (op == "|") return kBitOr;
  if (op == "^") return kBitXor;
  if (op == "&") return kBitAnd;
  if (op == "<<" || op == ">>") return kShift;
  if (op == "+" || op == "-") return kArith;
  if (op == "**") return kPower;
  return kTerm;
}

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Tuple:
      return e.children.empty() ? kAtom : kTuple;
    case ExprKind::NamedExpr:
    case ExprKind::Yield:
    case ExprKind::YieldFrom:
      return kTuple;
    case ExprKind::Lambda:
      return kLambda;
    case ExprKind::IfExp:
      return kIfExp;
    case ExprKind::BoolOp:
      return e.op == "or" ? kOr : kAnd;
    case ExprKind::UnaryOp:
      return e.op == "not" ? kNot : kUnary;
    case ExprKind::Compare:
      return kCompare;
    case ExprKind::BinOp:
      return binop_prec(e.op);
    case ExprKind::Await:
      return kAwait;
    case ExprKind::Call:
    case ExprKind::Attribute:
    case ExprKind::Subscript:
      return kPrimary;
    default:
      return kAtom;
  }
}

bool may_parenthesize(ExprKind k) {
  switch (k) {
    case ExprKind::Keyword:
    case ExprKind::Starred:
    case ExprKind::Slice:
    case ExprKind::KeyValue:
    case ExprKind::Comprehension:
    case ExprKind::Param:
    case ExprKind::WithItem:
    case ExprKind::Alias:
    case ExprKind::GeneratorExp:
    case ExprKind::Empty:
      return false;
    default:
      return true;
  }
}

bool is_plain_int(const Expr& e) {
  if (!e.is(ExprKind::Number)) return false;
  for (char c : e.text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

class Renderer {
 public:
  explicit Renderer(const RenderStyle& style) : style_(style) {}

  std::string module(const Module& m) {
    block(m.body, 0, true);
    for (const std::string& c : m.trailing_comments) out_ << c << '\n';
    return out_.str();
  }

  std::string expr(const Expr& e, int min_prec) {
    std::string body = expr_body(e);
    const bool wrap = may_parenthesize(e.kind) && (e.parenthesized || precedence(e) < min_prec);
    if (!wrap) return body;
    if (e.is(ExprKind::Tuple) && e.children.empty()) return body;
    return "(" + body + ")";
  }

 private:
  std::string pad() const { return style_.operator_pad; }
  std::string comma() const { return "," + style_.comma_pad; }

  std::string join(const std::vector<Expr>& items, std::size_t from, std::size_t to, int min_prec) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) {
      if (i > from) s += comma();
      s += expr(items[i], min_prec);
    }
    return s;
  }

  std::string comprehensions(const Expr& e) {
    std::string s;
    for (std::size_t i = 1; i < e.children.size(); ++i) {
      const Expr& c = e.children[i];
      s += " for " + expr(c.children[0], kTuple) + " in " + expr(c.children[1], kOr);
      for (std::size_t j = 2; j < c.children.size(); ++j) s += " if " + expr(c.children[j], kOr);
    }
    return s;
  }

  std::string params(const std::vector<Expr>& ps, std::size_t count) {
    std::string s;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) s += comma();
      s += expr_body(ps[i]);
    }
    return s;
  }

  std::string call_args(const Expr& call) {
    const auto& c = call.children;
    if (c.size() == 2 && c[1].is(ExprKind::GeneratorExp)) {
      const Expr& g = c[1];
      return expr(g.children[0], kLambda) + comprehensions(g);
    }
    return join(c, 1, c.size(), kLambda);
  }

  std::string expr_body(const Expr& e) {
    const auto& c = e.children;
    switch (e.kind) {
      case ExprKind::Name:
      case ExprKind::Number:
      case ExprKind::String:
      case ExprKind::Constant:
        return e.text;
      case ExprKind::BinOp: {
        const int p = binop_prec(e.op);
        if (e.op == "**") return expr(c[0], kAwait) + pad() + "**" + pad() + expr(c[1], kUnary);
        return expr(c[0], p) + pad() + e.op + pad() + expr(c[1], p + 1);
      }
      case ExprKind::UnaryOp:
        if (e.op == "not") return "not " + expr(c[0], kNot);
        return e.op + expr(c[0], kUnary);
      case ExprKind::BoolOp: {
        const int child = e.op == "or" ? kAnd : kNot;
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i > 0) s += " " + e.op + " ";
          s += expr(c[i], child);
        }
        return s;
      }
      case ExprKind::Compare: {
        std::string s = expr(c[0], kBitOr);
        for (std::size_t i = 0; i < e.ops.size(); ++i) {
          const bool word = std::isalpha(static_cast<unsigned char>(e.ops[i][0])) != 0;
          s += (word ? " " : pad()) + e.ops[i] + (word ? " " : pad()) + expr(c[i + 1], kBitOr);
        }
        return s;
      }
      case ExprKind::Call:
        return expr(c[0], kPrimary) + "(" + call_args(e) + ")";
      case ExprKind::Keyword:
        return e.text + "=" + expr(c[0], kLambda);
      case ExprKind::Starred:
        return e.op + expr(c[0], kBitOr);
      case ExprKind::Attribute:
        if (is_plain_int(c[0]) && !c[0].parenthesized) return "(" + c[0].text + ")." + e.text;
        return expr(c[0], kPrimary) + "." + e.text;
      case ExprKind::Subscript:
        return expr(c[0], kPrimary) + "[" + expr(c[1], kTuple) + "]";
      case ExprKind::Slice: {
        std::string s = expr(c[0], kLambda) + ":" + expr(c[1], kLambda);
        if (!c[2].is(ExprKind::Empty)) s += ":" + expr(c[2], kLambda);
        return s;
      }
      case ExprKind::Tuple:
        if (c.empty()) return "()";
        if (c.size() == 1) return expr(c[0], kLambda) + ",";
        return join(c, 0, c.size(), kLambda);
      case ExprKind::List:
        return "[" + join(c, 0, c.size(), kLambda) + "]";
      case ExprKind::Set:
        return "{" + join(c, 0, c.size(), kLambda) + "}";
      case ExprKind::Dict:
        return "{" + join(c, 0, c.size(), kLambda) + "}";
      case ExprKind::KeyValue:
        return expr(c[0], kLambda) + ": " + expr(c[1], kLambda);
      case ExprKind::ListComp:
        return "[" + expr(c[0], kLambda) + comprehensions(e) + "]";
      case ExprKind::SetComp:
      case ExprKind::DictComp:
        return "{" + expr(c[0], kLambda) + comprehensions(e) + "}";
      case ExprKind::GeneratorExp:
        return "(" + expr(c[0], kLambda) + comprehensions(e) + ")";
      case ExprKind::Comprehension:
        return "for " + expr(c[0], kTuple) + " in " + expr(c[1], kOr);
      case ExprKind::IfExp:
        return expr(c[0], kOr) + " if " + expr(c[1], kOr) + " else " + expr(c[2], kIfExp);
      case ExprKind::Lambda: {
        const std::string ps = params(c, c.size() - 1);
        return "lambda" + (ps.empty() ? "" : " " + ps) + ": " + expr(c.back(), kLambda);
      }
      case ExprKind::Param: {
        std::string s = e.op + e.text;
        const bool annotated = !c[0].is(ExprKind::Empty);
        if (annotated) s += ": " + expr(c[0], kLambda);
        if (!c[1].is(ExprKind::Empty)) s += (annotated ? " = " : "=") + expr(c[1], kLambda);
        return s;
      }
      case ExprKind::Yield:
        return c.empty() ? "yield" : "yield " + expr(c[0], kTuple);
      case ExprKind::YieldFrom:
        return "yield from " + expr(c[0], kLambda);
      case ExprKind::Await:
        return "await " + expr(c[0], kPrimary);
      case ExprKind::NamedExpr:
        return expr(c[0], kAtom) + pad() + ":=" + pad() + expr(c[1], kLambda);
      case ExprKind::WithItem:
        if (c[1].is(ExprKind::Empty)) return expr(c[0], kLambda);
        return expr(c[0], kLambda) + " as " + expr(c[1], kLambda);
      case ExprKind::Alias:
        return e.op.empty() ? e.text : e.text + " as " + e.op;
      case ExprKind::Empty:
        return "";
    }
    return "";
  }

  void line(int depth, const std::string& text, const std::string& trailing) {
    for (int i = 0; i < depth; ++i) out_ << style_.indent;
    out_ << text;
    if (!trailing.empty()) out_ << "  " << trailing;
    out_ << '\n';
  }

  void block(const std::vector<Stmt>& stmts, int depth, bool top) {
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      const Stmt& s = stmts[i];
      if (i > 0 && s.trivia.blank_before && style_.keep_blank_lines) out_ << '\n';
      for (const std::string& c : s.trivia.leading_comments) line(depth, c, "");
      statement(s, depth);
    }
    (void)top;
  }

  void suite(const std::vector<Stmt>& body, int depth) { block(body, depth + 1, false); }

  void orelse(const Stmt& s, int depth) {
    if (s.orelse.empty()) return;
    const Stmt& only = s.orelse.front();
    if (s.kind == StmtKind::If && s.orelse.size() == 1 && only.kind == StmtKind::If && only.is_elif &&
        only.trivia.leading_comments.empty()) {
      header(depth, "elif " + expr(only.exprs[0], kTuple) + ":", only);
      suite(only.body, depth);
      orelse(only, depth);
      return;
    }
    line(depth, "else:", "");
    suite(s.orelse, depth);
  }

  void header(int depth, const std::string& text, const Stmt& s) {
    line(depth, text, s.trivia.trailing_comment);
  }

  std::string assign_eq() const { return pad() + "=" + pad(); }

  void statement(const Stmt& s, int depth) {
    const auto& x = s.exprs;
    const std::string& trailing = s.trivia.trailing_comment;
    switch (s.kind) {
      case StmtKind::Expr:
        line(depth, expr(x[0], kTuple), trailing);
        return;
      case StmtKind::Assign: {
        std::string text;
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (i > 0) text += assign_eq();
          text += expr(x[i], kTuple);
        }
        line(depth, text, trailing);
        return;
      }
      case StmtKind::AugAssign:
        line(depth, expr(x[0], kTuple) + pad() + s.op + "=" + pad() + expr(x[1], kTuple), trailing);
        return;
      case StmtKind::AnnAssign: {
        std::string text = expr(x[0], kLambda) + ": " + expr(x[1], kLambda);
        if (!x[2].is(ExprKind::Empty)) text += assign_eq() + expr(x[2], kTuple);
        line(depth, text, trailing);
        return;
      }
      case StmtKind::Return:
        line(depth, x.empty() ? "return" : "return " + expr(x[0], kTuple), trailing);
        return;
      case StmtKind::Pass:
        line(depth, "pass", trailing);
        return;
      case StmtKind::Break:
        line(depth, "break", trailing);
        return;
      case StmtKind::Continue:
        line(depth, "continue", trailing);
        return;
      case StmtKind::Delete:
        line(depth, "del " + join(x, 0, x.size(), kLambda), trailing);
        return;
      case StmtKind::Global:
      case StmtKind::Nonlocal:
        line(depth, std::string(s.kind == StmtKind::Global ? "global " : "nonlocal ") + join(x, 0, x.size(), kAtom),
             trailing);
        return;
      case StmtKind::Assert:
        line(depth, "assert " + join(x, 0, x.size(), kLambda), trailing);
        return;
      case StmtKind::Raise: {
        std::string text = "raise";
        if (!x.empty()) text += " " + expr(x[0], kLambda);
        if (x.size() > 1) text += " from " + expr(x[1], kLambda);
        line(depth, text, trailing);
        return;
      }
      case StmtKind::Import:
        line(depth, "import " + join(x, 0, x.size(), kAtom), trailing);
        return;
      case StmtKind::ImportFrom:
        line(depth, "from " + s.name + " import " + join(x, 0, x.size(), kAtom), trailing);
        return;
      case StmtKind::If:
        header(depth, "if " + expr(x[0], kTuple) + ":", s);
        suite(s.body, depth);
        orelse(s, depth);
        return;
      case StmtKind::While:
        header(depth, "while " + expr(x[0], kTuple) + ":", s);
        suite(s.body, depth);
        orelse(s, depth);
        return;
      case StmtKind::For:
        header(depth, "for " + expr(x[0], kTuple) + " in " + expr(x[1], kTuple) + ":", s);
        suite(s.body, depth);
        orelse(s, depth);
        return;
      case StmtKind::FunctionDef: {
        for (const Expr& d : s.decorators) line(depth, "@" + expr(d, kTuple), "");
        std::string text = "def " + s.name + "(" + params(x, x.size() - 1) + ")";
        if (!x.back().is(ExprKind::Empty)) text += " -> " + expr(x.back(), kLambda);
        header(depth, text + ":", s);
        suite(s.body, depth);
        return;
      }
      case StmtKind::ClassDef: {
        for (const Expr& d : s.decorators) line(depth, "@" + expr(d, kTuple), "");
        std::string text = "class " + s.name;
        if (!x.empty()) text += "(" + join(x, 0, x.size(), kLambda) + ")";
        header(depth, text + ":", s);
        suite(s.body, depth);
        return;
      }
      case StmtKind::Try:
        header(depth, "try:", s);
        suite(s.body, depth);
        for (const Stmt& h : s.handlers) statement(h, depth);
        if (!s.orelse.empty()) {
          line(depth, "else:", "");
          suite(s.orelse, depth);
        }
        if (!s.finalbody.empty()) {
          line(depth, "finally:", "");
          suite(s.finalbody, depth);
        }
        return;
      case StmtKind::ExceptHandler: {
        std::string text = "except";
        if (!x.empty()) text += " " + expr(x[0], kLambda);
        if (!s.name.empty()) text += " as " + s.name;
        header(depth, text + ":", s);
        suite(s.body, depth);
        return;
      }
      case StmtKind::With:
        header(depth, "with " + join(x, 0, x.size(), kLambda) + ":", s);
        suite(s.body, depth);
        return;
    }
  }

  const RenderStyle& style_;
  std::ostringstream out_;
};

const char* expr_kind_name(ExprKind k) {
  static const char* const kNames[] = {
      "Name",     "Number",       "String",  "Constant",  "BinOp",         "UnaryOp",   "BoolOp",
      "Compare",  "Call",         "Keyword", "Starred",   "Attribute",     "Subscript", "Slice",
      "Tuple",    "List",         "Set",     "Dict",      "KeyValue",      "ListComp",  "SetComp",
      "GeneratorExp", "DictComp", "Comprehension", "IfExp", "Lambda",      "Param",     "Yield",
      "YieldFrom", "Await",       "NamedExpr", "WithItem", "Alias",        "Empty"};
  return kNames[static_cast<int>(k)];
}

const char* stmt_kind_name(StmtKind k) {
  static const char* const kNames[] = {
      "Expr",   "Assign", "AugAssign", "AnnAssign", "Return",     "Pass",       "Break",    "Continue",
      "Delete", "Global", "Nonlocal",  "Assert",    "Raise",      "Import",     "ImportFrom", "If",
      "While",  "For",    "FunctionDef", "ClassDef", "Try",       "ExceptHandler", "With"};
  return kNames[static_cast<int>(k)];
}

void dump_expr(const Expr& e, std::ostringstream& out) {
  out << '(' << expr_kind_name(e.kind);
  if (!e.text.empty()) out << " '" << e.text << '\'';
  if (!e.op.empty()) out << " op=" << e.op;
  for (const std::string& op : e.ops) out << " cmp=" << op;
  for (const Expr& c : e.children) {
    out << ' ';
    dump_expr(c, out);
  }
  out << ')';
}

void dump_block(const char* label, const std::vector<Stmt>& stmts, std::ostringstream& out);

void dump_stmt(const Stmt& s, std::ostringstream& out) {
  out << '(' << stmt_kind_name(s.kind);
  if (!s.name.empty()) out << " '" << s.name << '\'';
  if (!s.op.empty()) out << " op=" << s.op;
  for (const Expr& d : s.decorators) {
    out << " @";
    dump_expr(d, out);
  }
  for (const Expr& e : s.exprs) {
    out << ' ';
    dump_expr(e, out);
  }
  dump_block("body", s.body, out);
  dump_block("handlers", s.handlers, out);
  dump_block("orelse", s.orelse, out);
  dump_block("finally", s.finalbody, out);
  out << ')';
}

void dump_block(const char* label, const std::vector<Stmt>& stmts, std::ostringstream& out) {
  if (stmts.empty()) return;
  out << " [" << label;
  for (const Stmt& s : stmts) {
    out << ' ';
    dump_stmt(s, out);
  }
  out << ']';
}

}  // namespace

std::string render_module(const Module& module, const RenderStyle& style) {
  return Renderer(style).module(module);
}

std::string render_expr(const Expr& expr) {
  RenderStyle style;
  return Renderer(style).expr(expr, kTuple);
}

std::string dump(const Module& module) {
  std::ostringstream out;
  out << "(Module";
  for (const Stmt& s : module.body) {
    out << ' ';
    dump_stmt(s, out);
  }
  out << ')';
  return out.str();
}

std::string dump(const Expr& expr) {
  std::ostringstream out;
  dump_expr(expr, out);
  return out.str();
}

bool structurally_equal(const Module& a, const Module& b) { return dump(a) == dump(b); }

}  // namespace dualmark::py
