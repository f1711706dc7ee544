#include <algorithm>
#include <array>
#include <utility>

#include "dualmark/syntax.hpp"
#include "lexer.hpp"

namespace dualmark::py {

using detail::Comment;
using detail::Lexed;
using detail::Tok;
using detail::Token;

namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False",  "None",   "True",    "and",      "as",     "assert", "async", "await", "break",
    "class",  "continue", "def",   "del",      "elif",   "else",   "except", "finally", "for",
    "from",   "global", "if",      "import",   "in",     "is",     "lambda", "nonlocal", "not",
    "or",     "pass",   "raise",   "return",   "try",    "while",  "with",  "yield"};

constexpr std::array<std::string_view, 12> kAugOps = {"+=", "-=", "*=", "/=", "//=", "%=",
                                                      "**=", ">>=", "<<=", "&=", "^=", "|="};

bool valid_target(const Expr& e, bool allow_star = true) {
  switch (e.kind) {
    case ExprKind::Name:
    case ExprKind::Attribute:
    case ExprKind::Subscript:
      return true;
    case ExprKind::Tuple:
    case ExprKind::List:
      return std::all_of(e.children.begin(), e.children.end(),
                         [](const Expr& c) { return valid_target(c); });
    case ExprKind::Starred:
      return allow_star && e.op == "*" && valid_target(e.children[0], false);
    default:
      return false;
  }
}

class Parser {
 public:
  explicit Parser(Lexed lexed) : lx_(std::move(lexed)) {}

  Module parse() {
    Module module;
    while (!at(Tok::End)) {
      if (at(Tok::Newline)) {
        ++pos_;
        continue;
      }
      if (at(Tok::Indent)) fail("unexpected indent");
      parse_statement(module.body);
    }
    for (; next_comment_ < lx_.comments.size(); ++next_comment_) {
      if (lx_.comments[next_comment_].own_line) {
        module.trailing_comments.push_back(lx_.comments[next_comment_].text);
      }
    }
    return module;
  }

 private:
  // ---- token helpers -------------------------------------------------------
  const Token& cur() const { return lx_.tokens[pos_]; }
  const Token& peek(std::size_t ahead = 1) const {
    return lx_.tokens[std::min(pos_ + ahead, lx_.tokens.size() - 1)];
  }
  bool at(Tok t) const { return cur().type == t; }
  bool at_op(std::string_view op) const { return cur().type == Tok::Op && cur().text == op; }
  bool at_kw(std::string_view kw) const { return cur().type == Tok::Name && cur().text == kw; }
  bool accept_op(std::string_view op) {
    if (!at_op(op)) return false;
    ++pos_;
    return true;
  }
  bool accept_kw(std::string_view kw) {
    if (!at_kw(kw)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = cur();
    std::string what = message;
    if (t.type == Tok::Newline) {
      what += " (at end of line)";
    } else if (t.type == Tok::End) {
      what += " (at end of file)";
    } else if (!t.text.empty()) {
      what += " near '" + t.text + "'";
    }
    throw ParseError(t.line, t.col, what);
  }
  void expect_op(std::string_view op) {
    if (!accept_op(op)) fail("expected '" + std::string(op) + "'");
  }
  void expect_kw(std::string_view kw) {
    if (!accept_kw(kw)) fail("expected '" + std::string(kw) + "'");
  }
  std::string expect_name() {
    if (!at(Tok::Name) || is_keyword(cur().text)) fail("expected identifier");
    return lx_.tokens[pos_++].text;
  }
  Span span_from(const Token& start) const {
    const Token& last = lx_.tokens[pos_ == 0 ? 0 : pos_ - 1];
    return Span{start.line, start.col, last.end_line, last.end_col};
  }

  // ---- trivia --------------------------------------------------------------
  void attach_leading(Stmt& stmt, int stmt_line) {
    int first_line = stmt_line;
    bool first = true;
    while (next_comment_ < lx_.comments.size() && lx_.comments[next_comment_].line < stmt_line) {
      const Comment& c = lx_.comments[next_comment_++];
      if (!c.own_line) continue;
      if (first) {
        first_line = c.line;
        first = false;
      }
      stmt.trivia.leading_comments.push_back(c.text);
    }
    stmt.trivia.blank_before = lx_.blank_lines.count(first_line - 1) > 0;
  }

  std::string take_trailing(int line) {
    while (next_comment_ < lx_.comments.size() && lx_.comments[next_comment_].line < line &&
           !lx_.comments[next_comment_].own_line) {
      ++next_comment_;
    }
    if (next_comment_ < lx_.comments.size() && lx_.comments[next_comment_].line == line &&
        !lx_.comments[next_comment_].own_line) {
      return lx_.comments[next_comment_++].text;
    }
    return {};
  }

  // ---- statements ----------------------------------------------------------
  void parse_statement(std::vector<Stmt>& out) {
    const int line = cur().line;
    Stmt first_trivia;
    attach_leading(first_trivia, line);
    const std::size_t before = out.size();
    if (is_compound_start()) {
      out.push_back(parse_compound());
    } else {
      parse_simple_line(out);
    }
    out[before].trivia.leading_comments = std::move(first_trivia.trivia.leading_comments);
    out[before].trivia.blank_before = first_trivia.trivia.blank_before;
  }

  bool is_compound_start() const {
    if (at_op("@")) return true;
    if (!at(Tok::Name)) return false;
    const std::string& t = cur().text;
    return t == "if" || t == "while" || t == "for" || t == "try" || t == "with" || t == "def" ||
           t == "class" || t == "async";
  }

  void parse_simple_line(std::vector<Stmt>& out) {
    while (true) {
      out.push_back(parse_small_statement());
      if (accept_op(";")) {
        if (at(Tok::Newline)) break;
        continue;
      }
      break;
    }
    if (!at(Tok::Newline)) fail("expected end of statement");
    out.back().trivia.trailing_comment = take_trailing(cur().line);
    ++pos_;
  }

  Stmt parse_small_statement() {
    const Token& start = cur();
    Stmt s;
    if (accept_kw("pass")) {
      s = Stmt::make(StmtKind::Pass);
    } else if (accept_kw("break")) {
      s = Stmt::make(StmtKind::Break);
    } else if (accept_kw("continue")) {
      s = Stmt::make(StmtKind::Continue);
    } else if (accept_kw("return")) {
      s = Stmt::make(StmtKind::Return);
      if (!at_end_of_small()) s.exprs.push_back(parse_testlist_star());
    } else if (accept_kw("del")) {
      s = Stmt::make(StmtKind::Delete);
      do {
        if (at_end_of_small()) break;
        Expr t = parse_bitor();
        if (!valid_target(t, false)) fail("cannot delete expression");
        s.exprs.push_back(std::move(t));
      } while (accept_op(","));
    } else if (at_kw("global") || at_kw("nonlocal")) {
      s = Stmt::make(at_kw("global") ? StmtKind::Global : StmtKind::Nonlocal);
      ++pos_;
      do {
        const Token& t = cur();
        Expr n = Expr::name(expect_name());
        n.span = Span{t.line, t.col, t.end_line, t.end_col};
        s.exprs.push_back(std::move(n));
      } while (accept_op(","));
    } else if (accept_kw("assert")) {
      s = Stmt::make(StmtKind::Assert);
      s.exprs.push_back(parse_test());
      if (accept_op(",")) s.exprs.push_back(parse_test());
    } else if (accept_kw("raise")) {
      s = Stmt::make(StmtKind::Raise);
      if (!at_end_of_small()) {
        s.exprs.push_back(parse_test());
        if (accept_kw("from")) s.exprs.push_back(parse_test());
      }
    } else if (at_kw("import")) {
      s = parse_import();
    } else if (at_kw("from")) {
      s = parse_from_import();
    } else {
      s = parse_expr_statement();
    }
    s.span = span_from(start);
    return s;
  }

  bool at_end_of_small() const { return at(Tok::Newline) || at_op(";"); }

  std::string parse_dotted_name() {
    std::string name = expect_name();
    while (accept_op(".")) name += "." + expect_name();
    return name;
  }

  Stmt parse_import() {
    expect_kw("import");
    Stmt s = Stmt::make(StmtKind::Import);
    do {
      Expr alias;
      alias.kind = ExprKind::Alias;
      alias.text = parse_dotted_name();
      if (accept_kw("as")) alias.op = expect_name();
      s.exprs.push_back(std::move(alias));
    } while (accept_op(","));
    return s;
  }

  Stmt parse_from_import() {
    expect_kw("from");
    Stmt s = Stmt::make(StmtKind::ImportFrom);
    while (at_op(".") || at_op("...")) {
      s.name += cur().text;
      ++pos_;
    }
    if (!at_kw("import")) s.name += parse_dotted_name();
    if (s.name.empty()) fail("expected module name");
    expect_kw("import");
    if (accept_op("*")) {
      Expr alias;
      alias.kind = ExprKind::Alias;
      alias.text = "*";
      s.exprs.push_back(std::move(alias));
      return s;
    }
    const bool paren = accept_op("(");
    do {
      if (paren && at_op(")")) break;
      Expr alias;
      alias.kind = ExprKind::Alias;
      alias.text = expect_name();
      if (accept_kw("as")) alias.op = expect_name();
      s.exprs.push_back(std::move(alias));
    } while (accept_op(","));
    if (paren) expect_op(")");
    if (s.exprs.empty()) fail("expected import name");
    return s;
  }

  Stmt parse_expr_statement() {
    Expr first = at_kw("yield") ? parse_yield() : parse_testlist_star();
    for (std::string_view aug : kAugOps) {
      if (at_op(aug)) {
        ++pos_;
        if (!(first.is(ExprKind::Name) || first.is(ExprKind::Attribute) ||
              first.is(ExprKind::Subscript))) {
          fail("illegal target for augmented assignment");
        }
        Stmt s = Stmt::make(StmtKind::AugAssign);
        s.op = std::string(aug.substr(0, aug.size() - 1));
        s.exprs.push_back(std::move(first));
        s.exprs.push_back(at_kw("yield") ? parse_yield() : parse_testlist_star());
        return s;
      }
    }
    if (at_op(":")) {
      ++pos_;
      if (!valid_target(first, false) || first.is(ExprKind::Tuple)) fail("illegal target for annotation");
      Stmt s = Stmt::make(StmtKind::AnnAssign);
      s.exprs.push_back(std::move(first));
      s.exprs.push_back(parse_test());
      if (accept_op("=")) {
        s.exprs.push_back(at_kw("yield") ? parse_yield() : parse_testlist_star());
      } else {
        s.exprs.push_back(Expr::empty());
      }
      return s;
    }
    if (at_op("=")) {
      Stmt s = Stmt::make(StmtKind::Assign);
      s.exprs.push_back(std::move(first));
      while (accept_op("=")) {
        s.exprs.push_back(at_kw("yield") ? parse_yield() : parse_testlist_star());
      }
      for (std::size_t i = 0; i + 1 < s.exprs.size(); ++i) {
        if (!valid_target(s.exprs[i])) fail("cannot assign to expression");
      }
      return s;
    }
    Stmt s = Stmt::make(StmtKind::Expr);
    s.exprs.push_back(std::move(first));
    return s;
  }

  Stmt parse_compound() {
    const Token& start = cur();
    std::vector<Expr> decorators;
    while (accept_op("@")) {
      decorators.push_back(parse_namedexpr());
      if (!at(Tok::Newline)) fail("expected newline after decorator");
      ++pos_;
    }
    if (!decorators.empty() && !at_kw("def") && !at_kw("class")) fail("decorator must precede def or class");
    Stmt s;
    if (at_kw("if")) {
      s = parse_if();
    } else if (at_kw("while")) {
      ++pos_;
      s = Stmt::make(StmtKind::While, {parse_namedexpr()});
      parse_suite(s, s.body);
      parse_else(s);
    } else if (at_kw("for")) {
      ++pos_;
      s = Stmt::make(StmtKind::For);
      Expr target = parse_target_list();
      if (!valid_target(target)) fail("cannot assign to for-loop target");
      s.exprs.push_back(std::move(target));
      expect_kw("in");
      s.exprs.push_back(parse_testlist_star());
      parse_suite(s, s.body);
      parse_else(s);
    } else if (at_kw("try")) {
      s = parse_try();
    } else if (at_kw("with")) {
      s = parse_with();
    } else if (at_kw("def")) {
      s = parse_def();
    } else if (at_kw("class")) {
      s = parse_class();
    } else {
      fail("unsupported statement");
    }
    s.decorators = std::move(decorators);
    s.span.line = start.line;
    s.span.col = start.col;
    return s;
  }

  void parse_suite(Stmt& owner, std::vector<Stmt>& block) {
    expect_op(":");
    const Token& header_end = lx_.tokens[pos_ - 1];
    if (at(Tok::Newline)) {
      const std::string trailing = take_trailing(cur().line);
      if (&block == &owner.body && owner.trivia.trailing_comment.empty()) {
        owner.trivia.trailing_comment = trailing;
      }
      ++pos_;
      if (!at(Tok::Indent)) fail("expected an indented block");
      ++pos_;
      while (!at(Tok::Dedent)) {
        if (at(Tok::End)) fail("unexpected end of file");
        if (at(Tok::Newline)) {
          ++pos_;
          continue;
        }
        parse_statement(block);
      }
      ++pos_;
    } else {
      parse_simple_line(block);
    }
    owner.span.end_line = std::max(owner.span.end_line, header_end.end_line);
    if (!block.empty()) owner.span.end_line = std::max(owner.span.end_line, block.back().span.end_line);
  }

  void parse_else(Stmt& s) {
    if (accept_kw("else")) parse_suite(s, s.orelse);
  }

  Stmt parse_if() {
    const Token& start = cur();
    ++pos_;  // 'if' or 'elif'
    Stmt s = Stmt::make(StmtKind::If, {parse_namedexpr()});
    s.span.line = start.line;
    s.span.col = start.col;
    parse_suite(s, s.body);
    if (at_kw("elif")) {
      attach_leading_discard();
      Stmt nested = parse_if();
      nested.is_elif = true;
      s.orelse.push_back(std::move(nested));
    } else {
      parse_else(s);
    }
    return s;
  }

  // Comments between a block and its elif/else clause have nowhere to live.
  void attach_leading_discard() {
    Stmt sink;
    attach_leading(sink, cur().line);
  }

  Stmt parse_try() {
    expect_kw("try");
    Stmt s = Stmt::make(StmtKind::Try);
    parse_suite(s, s.body);
    while (at_kw("except")) {
      const Token& start = cur();
      ++pos_;
      Stmt h = Stmt::make(StmtKind::ExceptHandler);
      if (!at_op(":")) {
        h.exprs.push_back(parse_test());
        if (accept_kw("as")) h.name = expect_name();
      }
      h.span.line = start.line;
      h.span.col = start.col;
      parse_suite(h, h.body);
      s.handlers.push_back(std::move(h));
    }
    parse_else(s);
    if (accept_kw("finally")) parse_suite(s, s.finalbody);
    if (s.handlers.empty() && s.finalbody.empty()) fail("expected 'except' or 'finally' block");
    return s;
  }

  Stmt parse_with() {
    expect_kw("with");
    Stmt s = Stmt::make(StmtKind::With);
    do {
      Expr item;
      item.kind = ExprKind::WithItem;
      item.children.push_back(parse_test());
      if (accept_kw("as")) {
        Expr target = parse_bitor_or_star();
        if (!valid_target(target)) fail("cannot assign to with-item target");
        item.children.push_back(std::move(target));
      } else {
        item.children.push_back(Expr::empty());
      }
      s.exprs.push_back(std::move(item));
    } while (accept_op(","));
    parse_suite(s, s.body);
    return s;
  }

  Stmt parse_def() {
    expect_kw("def");
    Stmt s = Stmt::make(StmtKind::FunctionDef);
    s.name = expect_name();
    expect_op("(");
    s.exprs = parse_params(")", true);
    expect_op(")");
    s.exprs.push_back(accept_op("->") ? parse_test() : Expr::empty());
    parse_suite(s, s.body);
    return s;
  }

  Stmt parse_class() {
    expect_kw("class");
    Stmt s = Stmt::make(StmtKind::ClassDef);
    s.name = expect_name();
    if (accept_op("(")) {
      s.exprs = parse_call_args();
      expect_op(")");
    }
    parse_suite(s, s.body);
    return s;
  }

  std::vector<Expr> parse_params(std::string_view close, bool annotations) {
    std::vector<Expr> params;
    bool seen_default = false;
    bool seen_star = false;
    while (!at_op(close)) {
      const Token& start = cur();
      Expr p;
      p.kind = ExprKind::Param;
      if (accept_op("**")) {
        p.op = "**";
        p.text = expect_name();
      } else if (accept_op("*")) {
        if (seen_star) fail("duplicate '*' in parameter list");
        seen_star = true;
        p.op = "*";
        if (at(Tok::Name)) p.text = expect_name();
      } else if (accept_op("/")) {
        p.op = "/";
      } else {
        p.text = expect_name();
      }
      Expr annotation = Expr::empty();
      Expr default_value = Expr::empty();
      if (annotations && !p.text.empty() && accept_op(":")) annotation = parse_test();
      if ((p.op.empty()) && accept_op("=")) {
        default_value = parse_test();
        seen_default = true;
      } else if (p.op.empty() && seen_default && !seen_star) {
        fail("non-default argument follows default argument");
      }
      p.children.push_back(std::move(annotation));
      p.children.push_back(std::move(default_value));
      p.span = span_from(start);
      params.push_back(std::move(p));
      if (!accept_op(",")) break;
    }
    return params;
  }

  // ---- expressions ---------------------------------------------------------
  Expr parse_testlist_star() {
    const Token& start = cur();
    Expr first = parse_star_or_test();
    if (!at_op(",")) return first;
    Expr tuple = Expr::make(ExprKind::Tuple, {});
    tuple.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_end_of_expr_list()) break;
      tuple.children.push_back(parse_star_or_test());
    }
    tuple.span = span_from(start);
    return tuple;
  }

  bool at_end_of_expr_list() const {
    if (at(Tok::Newline) || at(Tok::End)) return true;
    if (cur().type != Tok::Op) return at_kw("in");
    static constexpr std::array<std::string_view, 8> kEnds = {")", "]", "}", "=", ":", ";", "+=", "-="};
    if (std::find(kEnds.begin(), kEnds.end(), cur().text) != kEnds.end()) return true;
    return std::find(kAugOps.begin(), kAugOps.end(), cur().text) != kAugOps.end();
  }

  Expr parse_star_or_test() {
    if (at_op("*")) {
      const Token& start = cur();
      ++pos_;
      Expr s = Expr::make(ExprKind::Starred, {parse_bitor()}, "*");
      s.span = span_from(start);
      return s;
    }
    return parse_test();
  }

  Expr parse_star_or_namedexpr() {
    if (at_op("*")) return parse_star_or_test();
    return parse_namedexpr();
  }

  Expr parse_bitor_or_star() {
    if (at_op("*")) return parse_star_or_test();
    return parse_bitor();
  }

  Expr parse_target_list() {
    const Token& start = cur();
    Expr first = parse_bitor_or_star();
    if (!at_op(",")) return first;
    Expr tuple = Expr::make(ExprKind::Tuple, {});
    tuple.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_kw("in") || at_op("=")) break;
      tuple.children.push_back(parse_bitor_or_star());
    }
    tuple.span = span_from(start);
    return tuple;
  }

  Expr parse_yield() {
    const Token& start = cur();
    expect_kw("yield");
    Expr y;
    if (accept_kw("from")) {
      y = Expr::make(ExprKind::YieldFrom, {parse_test()});
    } else {
      y = Expr::make(ExprKind::Yield, {});
      if (!at_end_of_small() && !at_op(")") && !at_op("=")) y.children.push_back(parse_testlist_star());
    }
    y.span = span_from(start);
    return y;
  }

  Expr parse_namedexpr() {
    const Token& start = cur();
    Expr e = parse_test();
    if (at_op(":=")) {
      if (!e.is(ExprKind::Name)) fail("cannot use assignment expression with this target");
      ++pos_;
      Expr n = Expr::make(ExprKind::NamedExpr, {std::move(e), parse_test()});
      n.span = span_from(start);
      return n;
    }
    return e;
  }

  Expr parse_test() {
    const Token& start = cur();
    if (at_kw("lambda")) return parse_lambda();
    Expr body = parse_or();
    if (at_kw("if")) {
      ++pos_;
      Expr test = parse_or();
      expect_kw("else");
      Expr orelse = parse_test();
      Expr e = Expr::make(ExprKind::IfExp, {std::move(body), std::move(test), std::move(orelse)});
      e.span = span_from(start);
      return e;
    }
    return body;
  }

  Expr parse_lambda() {
    const Token& start = cur();
    expect_kw("lambda");
    std::vector<Expr> params = parse_params(":", false);
    expect_op(":");
    params.push_back(parse_test());
    Expr e = Expr::make(ExprKind::Lambda, std::move(params));
    e.span = span_from(start);
    return e;
  }

  Expr parse_or() { return parse_boolop("or", [this] { return parse_and(); }); }
  Expr parse_and() { return parse_boolop("and", [this] { return parse_not(); }); }

  template <typename Next>
  Expr parse_boolop(std::string_view word, Next next) {
    const Token& start = cur();
    Expr first = next();
    if (!at_kw(word)) return first;
    Expr e = Expr::make(ExprKind::BoolOp, {}, std::string(word));
    e.children.push_back(std::move(first));
    while (accept_kw(word)) e.children.push_back(next());
    e.span = span_from(start);
    return e;
  }

  Expr parse_not() {
    const Token& start = cur();
    if (accept_kw("not")) {
      Expr e = Expr::make(ExprKind::UnaryOp, {parse_not()}, "not");
      e.span = span_from(start);
      return e;
    }
    return parse_comparison();
  }

  std::string comparison_operator() {
    if (cur().type == Tok::Op) {
      const std::string& t = cur().text;
      if (t == "<" || t == ">" || t == "==" || t == ">=" || t == "<=" || t == "!=") {
        ++pos_;
        return t;
      }
      return {};
    }
    if (at_kw("in")) {
      ++pos_;
      return "in";
    }
    if (at_kw("not") && peek().type == Tok::Name && peek().text == "in") {
      pos_ += 2;
      return "not in";
    }
    if (at_kw("is")) {
      ++pos_;
      if (accept_kw("not")) return "is not";
      return "is";
    }
    return {};
  }

  Expr parse_comparison() {
    const Token& start = cur();
    Expr left = parse_bitor();
    std::string op = comparison_operator();
    if (op.empty()) return left;
    Expr e = Expr::make(ExprKind::Compare, {});
    e.children.push_back(std::move(left));
    while (!op.empty()) {
      e.ops.push_back(op);
      e.children.push_back(parse_bitor());
      op = comparison_operator();
    }
    e.span = span_from(start);
    return e;
  }

  template <typename Next>
  Expr parse_binary(std::initializer_list<std::string_view> ops, Next next) {
    const Token& start = cur();
    Expr left = next();
    while (cur().type == Tok::Op &&
           std::find(ops.begin(), ops.end(), std::string_view(cur().text)) != ops.end()) {
      std::string op = cur().text;
      ++pos_;
      Expr right = next();
      left = Expr::make(ExprKind::BinOp, {std::move(left), std::move(right)}, std::move(op));
      left.span = span_from(start);
    }
    return left;
  }

  Expr parse_bitor() { return parse_binary({"|"}, [this] { return parse_bitxor(); }); }
  Expr parse_bitxor() { return parse_binary({"^"}, [this] { return parse_bitand(); }); }
  Expr parse_bitand() { return parse_binary({"&"}, [this] { return parse_shift(); }); }
  Expr parse_shift() { return parse_binary({"<<", ">>"}, [this] { return parse_arith(); }); }
  Expr parse_arith() { return parse_binary({"+", "-"}, [this] { return parse_term(); }); }
  Expr parse_term() {
    return parse_binary({"*", "/", "//", "%", "@"}, [this] { return parse_factor(); });
  }

  Expr parse_factor() {
    const Token& start = cur();
    if (at_op("-") || at_op("+") || at_op("~")) {
      std::string op = cur().text;
      ++pos_;
      Expr e = Expr::make(ExprKind::UnaryOp, {parse_factor()}, std::move(op));
      e.span = span_from(start);
      return e;
    }
    return parse_power();
  }

  Expr parse_power() {
    const Token& start = cur();
    Expr base;
    if (accept_kw("await")) {
      base = Expr::make(ExprKind::Await, {parse_primary()});
      base.span = span_from(start);
    } else {
      base = parse_primary();
    }
    if (accept_op("**")) {
      Expr e = Expr::make(ExprKind::BinOp, {std::move(base), parse_factor()}, "**");
      e.span = span_from(start);
      return e;
    }
    return base;
  }

  Expr parse_primary() {
    const Token& start = cur();
    Expr e = parse_atom();
    while (true) {
      if (accept_op("(")) {
        std::vector<Expr> children;
        children.push_back(std::move(e));
        std::vector<Expr> args = parse_call_args();
        for (Expr& a : args) children.push_back(std::move(a));
        expect_op(")");
        e = Expr::make(ExprKind::Call, std::move(children));
      } else if (accept_op("[")) {
        Expr index = parse_subscript_list();
        expect_op("]");
        e = Expr::make(ExprKind::Subscript, {std::move(e), std::move(index)});
      } else if (accept_op(".")) {
        Expr a = Expr::make(ExprKind::Attribute, {std::move(e)});
        a.text = expect_name();
        e = std::move(a);
      } else {
        break;
      }
      e.span = span_from(start);
    }
    return e;
  }

  std::vector<Expr> parse_call_args() {
    std::vector<Expr> args;
    while (!at_op(")")) {
      const Token& start = cur();
      if (accept_op("**")) {
        args.push_back(Expr::make(ExprKind::Starred, {parse_test()}, "**"));
      } else if (accept_op("*")) {
        args.push_back(Expr::make(ExprKind::Starred, {parse_test()}, "*"));
      } else {
        Expr value = parse_namedexpr();
        if (at_op("=") && value.is(ExprKind::Name)) {
          ++pos_;
          Expr kw = Expr::make(ExprKind::Keyword, {parse_test()});
          kw.text = value.text;
          args.push_back(std::move(kw));
        } else if (at_kw("for")) {
          Expr gen = Expr::make(ExprKind::GeneratorExp, {std::move(value)});
          parse_comprehensions(gen);
          args.push_back(std::move(gen));
        } else {
          args.push_back(std::move(value));
        }
      }
      args.back().span = span_from(start);
      if (!accept_op(",")) break;
    }
    return args;
  }

  Expr parse_subscript_list() {
    const Token& start = cur();
    Expr first = parse_subscript();
    if (!at_op(",")) return first;
    Expr tuple = Expr::make(ExprKind::Tuple, {});
    tuple.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_op("]")) break;
      tuple.children.push_back(parse_subscript());
    }
    tuple.span = span_from(start);
    return tuple;
  }

  Expr parse_subscript() {
    const Token& start = cur();
    Expr lower = Expr::empty();
    if (!at_op(":")) {
      lower = parse_star_or_namedexpr();
      if (!at_op(":")) return lower;
    }
    expect_op(":");
    Expr upper = Expr::empty();
    Expr step = Expr::empty();
    if (!at_op("]") && !at_op(",") && !at_op(":")) upper = parse_test();
    if (accept_op(":")) {
      if (!at_op("]") && !at_op(",")) step = parse_test();
    }
    Expr s = Expr::make(ExprKind::Slice, {std::move(lower), std::move(upper), std::move(step)});
    s.span = span_from(start);
    return s;
  }

  void parse_comprehensions(Expr& owner) {
    while (at_kw("for")) {
      const Token& start = cur();
      ++pos_;
      Expr comp = Expr::make(ExprKind::Comprehension, {});
      Expr target = parse_target_list();
      if (!valid_target(target)) fail("cannot assign to comprehension target");
      comp.children.push_back(std::move(target));
      expect_kw("in");
      comp.children.push_back(parse_or());
      while (at_kw("if")) {
        ++pos_;
        comp.children.push_back(parse_or());
      }
      comp.span = span_from(start);
      owner.children.push_back(std::move(comp));
    }
  }

  Expr parse_atom() {
    const Token& start = cur();
    Expr e;
    if (accept_op("(")) {
      if (accept_op(")")) {
        e = Expr::make(ExprKind::Tuple, {});
      } else if (at_kw("yield")) {
        e = parse_yield();
        expect_op(")");
        e.parenthesized = true;
      } else {
        Expr first = parse_star_or_namedexpr();
        if (at_kw("for")) {
          e = Expr::make(ExprKind::GeneratorExp, {std::move(first)});
          parse_comprehensions(e);
        } else if (at_op(",")) {
          e = Expr::make(ExprKind::Tuple, {});
          e.children.push_back(std::move(first));
          while (accept_op(",")) {
            if (at_op(")")) break;
            e.children.push_back(parse_star_or_namedexpr());
          }
          e.parenthesized = true;
        } else {
          if (first.is(ExprKind::Starred)) fail("cannot use starred expression here");
          e = std::move(first);
          e.parenthesized = true;
        }
        expect_op(")");
      }
    } else if (accept_op("[")) {
      e = Expr::make(ExprKind::List, {});
      if (!at_op("]")) {
        Expr first = parse_star_or_namedexpr();
        if (at_kw("for")) {
          e = Expr::make(ExprKind::ListComp, {std::move(first)});
          parse_comprehensions(e);
        } else {
          e.children.push_back(std::move(first));
          while (accept_op(",")) {
            if (at_op("]")) break;
            e.children.push_back(parse_star_or_namedexpr());
          }
        }
      }
      expect_op("]");
    } else if (accept_op("{")) {
      e = parse_brace_body();
      expect_op("}");
    } else if (at(Tok::Name)) {
      const std::string& word = cur().text;
      if (word == "True" || word == "False" || word == "None") {
        e = Expr::constant(word);
        ++pos_;
      } else if (is_keyword(word)) {
        fail("invalid syntax");
      } else {
        e = Expr::name(word);
        ++pos_;
      }
    } else if (at(Tok::Number)) {
      e = Expr::number(cur().text);
      ++pos_;
    } else if (at(Tok::String)) {
      e.kind = ExprKind::String;
      e.text = cur().text;
      ++pos_;
      while (at(Tok::String)) {
        e.text += " " + cur().text;
        ++pos_;
      }
    } else if (accept_op("...")) {
      e = Expr::constant("...");
    } else {
      fail("invalid syntax");
    }
    e.span = span_from(start);
    return e;
  }

  Expr parse_brace_body() {
    if (at_op("}")) return Expr::make(ExprKind::Dict, {});
    auto dict_entry = [this]() -> Expr {
      if (accept_op("**")) return Expr::make(ExprKind::Starred, {parse_bitor()}, "**");
      Expr key = parse_test();
      expect_op(":");
      return Expr::make(ExprKind::KeyValue, {std::move(key), parse_test()});
    };
    if (at_op("**")) {
      Expr d = Expr::make(ExprKind::Dict, {});
      do {
        if (at_op("}")) break;
        d.children.push_back(dict_entry());
      } while (accept_op(","));
      return d;
    }
    Expr first = parse_star_or_namedexpr();
    if (accept_op(":")) {
      Expr entry = Expr::make(ExprKind::KeyValue, {std::move(first), parse_test()});
      if (at_kw("for")) {
        Expr comp = Expr::make(ExprKind::DictComp, {std::move(entry)});
        parse_comprehensions(comp);
        return comp;
      }
      Expr d = Expr::make(ExprKind::Dict, {});
      d.children.push_back(std::move(entry));
      while (accept_op(",")) {
        if (at_op("}")) break;
        d.children.push_back(dict_entry());
      }
      return d;
    }
    if (at_kw("for")) {
      Expr comp = Expr::make(ExprKind::SetComp, {std::move(first)});
      parse_comprehensions(comp);
      return comp;
    }
    Expr s = Expr::make(ExprKind::Set, {});
    s.children.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_op("}")) break;
      s.children.push_back(parse_star_or_namedexpr());
    }
    return s;
  }

  Lexed lx_;
  std::size_t pos_ = 0;
  std::size_t next_comment_ = 0;
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      detail_(message) {}

Expr Expr::name(std::string id) {
  Expr e;
  e.kind = ExprKind::Name;
  e.text = std::move(id);
  return e;
}

Expr Expr::number(std::string literal) {
  Expr e;
  e.kind = ExprKind::Number;
  e.text = std::move(literal);
  return e;
}

Expr Expr::constant(std::string literal) {
  Expr e;
  e.kind = ExprKind::Constant;
  e.text = std::move(literal);
  return e;
}

Expr Expr::empty() { return Expr{}; }

Expr Expr::make(ExprKind kind, std::vector<Expr> children, std::string op) {
  Expr e;
  e.kind = kind;
  e.children = std::move(children);
  e.op = std::move(op);
  return e;
}

Stmt Stmt::make(StmtKind kind, std::vector<Expr> exprs) {
  Stmt s;
  s.kind = kind;
  s.exprs = std::move(exprs);
  return s;
}

Module parse_module(std::string_view source) { return Parser(detail::tokenize(source)).parse(); }

}  // namespace dualmark::py
