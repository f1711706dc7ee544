#include <optional>

#include "dualmark/transform_rules.hpp"
#include "names.hpp"

namespace dualmark {

using py::Expr;
using py::ExprKind;
using py::Stmt;
using py::StmtKind;

const std::vector<FormalRule>& formal_rule_set() {
  static const std::vector<FormalRule> rules = {
      {1, "augmented-assignment"},   {2, "append-loop-comprehension"}, {3, "negated-equality"},
      {4, "boolean-return"},         {5, "comparison-mirror"},         {6, "range-start-elision"},
  };
  return rules;
}

namespace {

using Path = std::vector<int>;

Path extend(const Path& p, int i) {
  Path out = p;
  out.push_back(i);
  return out;
}

bool is_arith_op(const std::string& op) { return op == "+" || op == "-" || op == "*"; }

bool is_literal(const Expr& e) {
  if (e.is(ExprKind::Number) || e.is(ExprKind::String)) return true;
  return e.is(ExprKind::UnaryOp) && e.op == "-" && e.children[0].is(ExprKind::Number);
}

bool plain_arg(const Expr& e) {
  return !e.is(ExprKind::Keyword) && !e.is(ExprKind::Starred) && !e.is(ExprKind::GeneratorExp);
}

void move_comments(Stmt& from, std::vector<std::string>& into) {
  for (std::string& c : from.trivia.leading_comments) into.push_back(std::move(c));
  if (!from.trivia.trailing_comment.empty()) into.push_back(std::move(from.trivia.trailing_comment));
  from.trivia = {};
}

// ---- R1 ----

std::optional<int> r1_state(const Stmt& s) {
  if (s.kind == StmtKind::AugAssign && is_arith_op(s.op) && s.exprs[0].is(ExprKind::Name)) return 1;
  if (s.kind == StmtKind::Assign && s.exprs.size() == 2 && s.exprs[0].is(ExprKind::Name)) {
    const Expr& v = s.exprs[1];
    if (v.is(ExprKind::BinOp) && is_arith_op(v.op) && v.children[0].is_name(s.exprs[0].text)) return 0;
  }
  return std::nullopt;
}

void r1_toggle(Stmt& s) {
  if (s.kind == StmtKind::AugAssign) {
    Expr target = s.exprs[0];
    Expr value = Expr::make(ExprKind::BinOp, {Expr::name(target.text), std::move(s.exprs[1])}, s.op);
    s.kind = StmtKind::Assign;
    s.op.clear();
    s.exprs = {std::move(target), std::move(value)};
  } else {
    Expr value = std::move(s.exprs[1]);
    s.kind = StmtKind::AugAssign;
    s.op = value.op;
    s.exprs = {std::move(s.exprs[0]), std::move(value.children[1])};
  }
}

// ---- R2 ----

struct LoopParts {
  const Expr* list = nullptr;
  const Expr* target = nullptr;
  const Expr* iter = nullptr;
  const Expr* elt = nullptr;
};

bool simple_target(const Expr& t) {
  if (t.is(ExprKind::Name)) return true;
  if (!t.is(ExprKind::Tuple) || t.children.empty()) return false;
  for (const Expr& c : t.children) {
    if (!c.is(ExprKind::Name)) return false;
  }
  return true;
}

std::optional<LoopParts> r2_loop_parts(const std::vector<Stmt>& block, std::size_t i) {
  if (i + 1 >= block.size()) return std::nullopt;
  const Stmt& a = block[i];
  const Stmt& f = block[i + 1];
  if (a.kind != StmtKind::Assign || a.exprs.size() != 2 || !a.exprs[0].is(ExprKind::Name)) return std::nullopt;
  if (!a.exprs[1].is(ExprKind::List) || !a.exprs[1].children.empty()) return std::nullopt;
  if (f.kind != StmtKind::For || !f.orelse.empty() || f.body.size() != 1) return std::nullopt;
  const Stmt& b = f.body[0];
  if (b.kind != StmtKind::Expr || !b.exprs[0].is(ExprKind::Call)) return std::nullopt;
  const Expr& call = b.exprs[0];
  if (call.children.size() != 2 || !plain_arg(call.children[1])) return std::nullopt;
  const Expr& fn = call.children[0];
  if (!fn.is(ExprKind::Attribute) || fn.text != "append" || !fn.children[0].is_name(a.exprs[0].text)) {
    return std::nullopt;
  }
  if (!simple_target(f.exprs[0])) return std::nullopt;
  return LoopParts{&a.exprs[0], &f.exprs[0], &f.exprs[1], &call.children[1]};
}

std::optional<LoopParts> r2_comp_parts(const Stmt& s) {
  if (s.kind != StmtKind::Assign || s.exprs.size() != 2 || !s.exprs[0].is(ExprKind::Name)) return std::nullopt;
  const Expr& comp = s.exprs[1];
  if (!comp.is(ExprKind::ListComp) || comp.children.size() != 2) return std::nullopt;
  const Expr& gen = comp.children[1];
  if (gen.children.size() != 2 || !simple_target(gen.children[0])) return std::nullopt;
  return LoopParts{&s.exprs[0], &gen.children[0], &gen.children[1], &comp.children[0]};
}

// Names whose meaning changes inside a comprehension's nested scope.
const std::set<std::string>& scope_sensitive() {
  static const std::set<std::string> names = {"super", "locals", "vars", "dir", "eval", "exec"};
  return names;
}

Stmt r2_collapse(Stmt a, Stmt f) {
  Stmt body = std::move(f.body[0]);
  Expr elt = std::move(body.exprs[0].children[1]);
  Expr gen = Expr::make(ExprKind::Comprehension, {std::move(f.exprs[0]), std::move(f.exprs[1])});
  Stmt out = Stmt::make(StmtKind::Assign, {std::move(a.exprs[0]),
                                           Expr::make(ExprKind::ListComp, {std::move(elt), std::move(gen)})});
  out.trivia.blank_before = a.trivia.blank_before;
  out.trivia.trailing_comment = std::move(a.trivia.trailing_comment);
  out.trivia.leading_comments = std::move(a.trivia.leading_comments);
  move_comments(f, out.trivia.leading_comments);
  move_comments(body, out.trivia.leading_comments);
  out.span = a.span;
  out.span.end_line = f.span.end_line;
  out.span.end_col = f.span.end_col;
  return out;
}

std::pair<Stmt, Stmt> r2_expand(Stmt s) {
  Expr comp = std::move(s.exprs[1]);
  Expr gen = std::move(comp.children[1]);
  Expr list = s.exprs[0];
  Stmt a = Stmt::make(StmtKind::Assign, {std::move(s.exprs[0]), Expr::make(ExprKind::List, {})});
  a.trivia = std::move(s.trivia);
  a.span = s.span;
  Expr fn = Expr::make(ExprKind::Attribute, {std::move(list)});
  fn.text = "append";
  Stmt append =
      Stmt::make(StmtKind::Expr, {Expr::make(ExprKind::Call, {std::move(fn), std::move(comp.children[0])})});
  Stmt f = Stmt::make(StmtKind::For, {std::move(gen.children[0]), std::move(gen.children[1])});
  f.body.push_back(std::move(append));
  f.span = s.span;
  return {std::move(a), std::move(f)};
}

// ---- R3 ----

std::optional<int> r3_state(const Stmt& s) {
  if ((s.kind != StmtKind::If && s.kind != StmtKind::While) || s.exprs.empty()) return std::nullopt;
  const Expr& t = s.exprs[0];
  if (t.is(ExprKind::Compare) && t.ops.size() == 1 && t.ops[0] == "!=") return 1;
  if (t.is(ExprKind::UnaryOp) && t.op == "not") {
    const Expr& c = t.children[0];
    if (c.is(ExprKind::Compare) && c.ops.size() == 1 && c.ops[0] == "==") return 0;
  }
  return std::nullopt;
}

void r3_toggle(Expr& test) {
  if (test.is(ExprKind::Compare)) {
    Expr cmp = std::move(test);
    cmp.ops[0] = "==";
    cmp.parenthesized = true;
    test = Expr::make(ExprKind::UnaryOp, {std::move(cmp)}, "not");
    test.span = test.children[0].span;
  } else {
    Expr cmp = std::move(test.children[0]);
    cmp.ops[0] = "!=";
    cmp.parenthesized = false;
    test = std::move(cmp);
  }
}

// ---- R4 ----

bool returns_constant(const std::vector<Stmt>& block, const char* value) {
  return block.size() == 1 && block[0].kind == StmtKind::Return && block[0].exprs.size() == 1 &&
         block[0].exprs[0].is(ExprKind::Constant) && block[0].exprs[0].text == value;
}

std::optional<int> r4_state(const Stmt& s) {
  if (s.kind == StmtKind::If && returns_constant(s.body, "True") && returns_constant(s.orelse, "False")) {
    return 0;
  }
  if (s.kind == StmtKind::Return && s.exprs.size() == 1) {
    const Expr& call = s.exprs[0];
    if (call.is(ExprKind::Call) && call.children.size() == 2 && call.children[0].is_name("bool") &&
        plain_arg(call.children[1])) {
      return 1;
    }
  }
  return std::nullopt;
}

void r4_toggle(Stmt& s) {
  if (s.kind == StmtKind::If) {
    Expr test = std::move(s.exprs[0]);
    test.parenthesized = false;
    Stmt out = Stmt::make(StmtKind::Return,
                          {Expr::make(ExprKind::Call, {Expr::name("bool"), std::move(test)})});
    out.trivia.blank_before = s.trivia.blank_before;
    out.trivia.leading_comments = std::move(s.trivia.leading_comments);
    out.trivia.trailing_comment = std::move(s.trivia.trailing_comment);
    move_comments(s.body[0], out.trivia.leading_comments);
    move_comments(s.orelse[0], out.trivia.leading_comments);
    out.span = s.span;
    s = std::move(out);
  } else {
    Expr test = std::move(s.exprs[0].children[1]);
    test.parenthesized = false;
    Stmt out = Stmt::make(StmtKind::If, {std::move(test)});
    out.body.push_back(Stmt::make(StmtKind::Return, {Expr::constant("True")}));
    out.orelse.push_back(Stmt::make(StmtKind::Return, {Expr::constant("False")}));
    out.trivia = std::move(s.trivia);
    out.span = s.span;
    s = std::move(out);
  }
}

// ---- R5 ----

std::optional<int> r5_state(const Expr& e) {
  if (!e.is(ExprKind::Compare) || e.ops.size() != 1) return std::nullopt;
  const std::string& op = e.ops[0];
  if (op != "<" && op != ">" && op != "<=" && op != ">=") return std::nullopt;
  const bool left = is_literal(e.children[0]);
  const bool right = is_literal(e.children[1]);
  if (left == right) return std::nullopt;
  return left ? 1 : 0;
}

void r5_toggle(Expr& e) {
  std::swap(e.children[0], e.children[1]);
  std::string& op = e.ops[0];
  if (op == "<") {
    op = ">";
  } else if (op == ">") {
    op = "<";
  } else if (op == "<=") {
    op = ">=";
  } else {
    op = "<=";
  }
}

// ---- R6 ----

std::optional<int> r6_state(const Expr& e) {
  if (!e.is(ExprKind::Call) || !e.children[0].is_name("range")) return std::nullopt;
  for (std::size_t i = 1; i < e.children.size(); ++i) {
    if (!plain_arg(e.children[i])) return std::nullopt;
  }
  if (e.children.size() == 3 && e.children[1].is(ExprKind::Number) && e.children[1].text == "0") return 0;
  if (e.children.size() == 2) return 1;
  return std::nullopt;
}

void r6_toggle(Expr& e) {
  if (e.children.size() == 3) {
    e.children.erase(e.children.begin() + 1);
  } else {
    e.children.insert(e.children.begin() + 1, Expr::number("0"));
  }
}

struct Ctx {
  const Stmt* function = nullptr;  // innermost enclosing def, or null at module level
  bool class_body = false;
};

class Walker {
 public:
  Walker(py::Module& module, RuleMask enabled, const std::vector<int>* desired)
      : module_(module), enabled_(enabled), desired_(desired) {}

  void run() {
    const std::set<std::string> bound = detail::bound_names(module_);
    bool_free_ = bound.count("bool") == 0;
    range_free_ = bound.count("range") == 0;
    walk_block(module_.body, {}, 0, Ctx{});
  }

  std::vector<FormalSite> sites;
  std::size_t rewrites = 0;

 private:
  bool on(int rule) const { return (enabled_ & (1u << (rule - 1))) != 0; }

  // Records the site and returns the state it should end up in.
  int visit(int rule, Path path, const py::Span& span, int state) {
    const std::size_t ordinal = sites.size();
    sites.push_back(FormalSite{rule, NodeAddress{std::move(path), span}, state, ordinal});
    int want = state;
    if (desired_ != nullptr && ordinal < desired_->size() && (*desired_)[ordinal] >= 0) {
      want = (*desired_)[ordinal];
    }
    if (want != state) ++rewrites;
    return want;
  }

  std::size_t scope_count(const std::string& name, const Ctx& ctx) const {
    return ctx.function != nullptr ? detail::count_name(*ctx.function, name)
                                   : detail::count_name(module_, name);
  }

  static bool r2_ok(const LoopParts& p, const std::set<std::string>& vars) {
    const std::string& list = p.list->text;
    if (vars.count(list) > 0) return false;
    const std::set<std::string> list_only = {list};
    if (detail::references_any(*p.elt, list_only) || detail::references_any(*p.iter, list_only)) return false;
    if (detail::references_any(*p.iter, vars)) return false;
    if (detail::references_any(*p.elt, scope_sensitive())) return false;
    const auto impure = {ExprKind::Yield, ExprKind::YieldFrom, ExprKind::Await, ExprKind::NamedExpr};
    if (detail::contains_kind(*p.elt, impure) || detail::contains_kind(*p.iter, impure)) return false;
    return true;
  }

  bool r2_vars_private(const std::set<std::string>& vars, const std::vector<const Stmt*>& anchor,
                       const Ctx& ctx) const {
    for (const std::string& v : vars) {
      std::size_t inside = 0;
      for (const Stmt* s : anchor) inside += detail::count_name(*s, v);
      if (scope_count(v, ctx) != inside) return false;
    }
    return true;
  }

  // Tries R2 at block[i]. Returns the number of statements the site now spans
  // (0 when no match).
  std::size_t try_r2(std::vector<Stmt>& block, std::size_t i, const Path& here, const Ctx& ctx) {
    if (auto loop = r2_loop_parts(block, i)) {
      std::set<std::string> vars;
      detail::target_names(*loop->target, vars);
      if (r2_ok(*loop, vars) && r2_vars_private(vars, {&block[i], &block[i + 1]}, ctx)) {
        py::Span span = block[i].span;
        span.end_line = block[i + 1].span.end_line;
        span.end_col = block[i + 1].span.end_col;
        if (visit(2, here, span, 0) == 1) {
          Stmt merged = r2_collapse(std::move(block[i]), std::move(block[i + 1]));
          block[i] = std::move(merged);
          block.erase(block.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          return 1;
        }
        return 2;
      }
    }
    if (auto comp = r2_comp_parts(block[i])) {
      std::set<std::string> vars;
      detail::target_names(*comp->target, vars);
      if (r2_ok(*comp, vars) && r2_vars_private(vars, {&block[i]}, ctx)) {
        if (visit(2, here, block[i].span, 1) == 0) {
          auto [a, f] = r2_expand(std::move(block[i]));
          block[i] = std::move(a);
          block.insert(block.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(f));
          return 2;
        }
        return 1;
      }
    }
    return 0;
  }

  void walk_block(std::vector<Stmt>& block, const Path& parent, int offset, const Ctx& ctx) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      const Path here = extend(parent, offset + static_cast<int>(i));
      Stmt& s = block[i];
      if (on(1)) {
        if (auto st = r1_state(s)) {
          if (visit(1, here, s.span, *st) != *st) r1_toggle(s);
          continue;
        }
      }
      if (on(2) && !ctx.class_body) {
        if (const std::size_t spanned = try_r2(block, i, here, ctx)) {
          i += spanned - 1;
          continue;
        }
      }
      if (on(3)) {
        if (auto st = r3_state(s)) {
          if (visit(3, extend(here, 0), s.exprs[0].span, *st) != *st) r3_toggle(s.exprs[0]);
          walk_children(s, here, ctx, true);
          continue;
        }
      }
      if (on(4) && bool_free_) {
        if (auto st = r4_state(s)) {
          if (visit(4, here, s.span, *st) != *st) r4_toggle(s);
          continue;
        }
      }
      walk_children(s, here, ctx, false);
    }
  }

  void walk_children(Stmt& s, const Path& here, const Ctx& ctx, bool skip_exprs) {
    int idx = 0;
    for (Expr& d : s.decorators) walk_expr(d, extend(here, idx++));
    for (Expr& e : s.exprs) {
      if (!skip_exprs) walk_expr(e, extend(here, idx));
      ++idx;
    }
    Ctx inner = ctx;
    if (s.kind == StmtKind::FunctionDef) {
      inner.function = &s;
      inner.class_body = false;
    } else if (s.kind == StmtKind::ClassDef) {
      inner.class_body = true;
    }
    walk_block(s.body, here, idx, inner);
    idx += static_cast<int>(s.body.size());
    walk_block(s.handlers, here, idx, ctx);
    idx += static_cast<int>(s.handlers.size());
    walk_block(s.orelse, here, idx, ctx);
    idx += static_cast<int>(s.orelse.size());
    walk_block(s.finalbody, here, idx, ctx);
  }

  void walk_expr(Expr& e, const Path& path) {
    if (on(5)) {
      if (auto st = r5_state(e)) {
        if (visit(5, path, e.span, *st) != *st) r5_toggle(e);
        return;
      }
    }
    if (on(6) && range_free_) {
      if (auto st = r6_state(e)) {
        if (visit(6, path, e.span, *st) != *st) r6_toggle(e);
        return;
      }
    }
    for (std::size_t i = 0; i < e.children.size(); ++i) walk_expr(e.children[i], extend(path, static_cast<int>(i)));
  }

  py::Module& module_;
  RuleMask enabled_;
  const std::vector<int>* desired_;
  bool bool_free_ = true;
  bool range_free_ = true;
};

const FormalSite& find_site(const std::vector<FormalSite>& sites, const NodeAddress& at, const FormalRule& rule) {
  for (const FormalSite& s : sites) {
    if (s.rule == rule.id && s.address.path == at.path) return s;
  }
  throw NotAnAnchor("no " + rule.name + " anchor at the given address");
}

void drive(py::Module& module, const NodeAddress& at, const FormalRule& rule, RuleMask enabled, int state) {
  const std::vector<FormalSite> sites = find_formal_sites(module, enabled);
  const FormalSite& site = find_site(sites, at, rule);
  std::vector<int> desired(sites.size(), -1);
  desired[site.ordinal] = state;
  set_formal_states(module, desired, enabled);
}

}  // namespace

std::vector<FormalSite> find_formal_sites(const py::Module& module, RuleMask enabled) {
  py::Module copy = module;
  Walker w(copy, enabled, nullptr);
  w.run();
  return std::move(w.sites);
}

int detect_state(const py::Module& module, const NodeAddress& site, const FormalRule& rule, RuleMask enabled) {
  return find_site(find_formal_sites(module, enabled), site, rule).state;
}

std::size_t set_formal_states(py::Module& module, const std::vector<int>& desired, RuleMask enabled) {
  Walker w(module, enabled, &desired);
  w.run();
  return w.rewrites;
}

void apply_rule(py::Module& module, const NodeAddress& site, const FormalRule& rule, RuleMask enabled) {
  drive(module, site, rule, enabled, 1);
}

void reverse_rule(py::Module& module, const NodeAddress& site, const FormalRule& rule, RuleMask enabled) {
  drive(module, site, rule, enabled, 0);
}

}  // namespace dualmark
