#include "dualmark/anchor_index.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "names.hpp"

namespace dualmark {

using py::Expr;
using py::ExprKind;
using py::Stmt;
using py::StmtKind;

const char* channel_name(Channel c) { return c == Channel::Formal ? "formal" : "natural"; }

std::size_t Grouping::used() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

InsufficientAnchors::InsufficientAnchors(Channel channel, std::size_t have, std::size_t need)
    : std::runtime_error(std::string("insufficient ") + channel_name(channel) + " anchors: have " +
                         std::to_string(have) + ", need " + std::to_string(need)),
      channel_(channel),
      have_(have),
      need_(need) {}

namespace {

enum class Scope { Module, Class, Function };

// Collects identifier roles and first-occurrence order for the natural channel.
class NameScan {
 public:
  explicit NameScan(const py::Module& m) {
    for (const Stmt& s : m.body) stmt(s, Scope::Module);
  }

  std::vector<std::string> order;
  std::set<std::string> function_bound;
  std::set<std::string> blocked;
  std::set<std::string> universe;
  std::set<std::string> fstring_words;

 private:
  void note(const std::string& id) {
    universe.insert(id);
    if (seen_.insert(id).second) order.push_back(id);
  }

  void bind(const std::string& id, Scope sc) {
    if (sc == Scope::Function) {
      function_bound.insert(id);
    } else {
      blocked.insert(id);
    }
  }

  void block_name(const std::string& id) {
    universe.insert(id);
    blocked.insert(id);
  }

  void bind_target(const Expr& t, Scope sc) {
    std::set<std::string> names;
    detail::target_names(t, names);
    for (const std::string& n : names) bind(n, sc);
  }

  void fstring(const std::string& text) {
    const std::size_t quote = text.find_first_of("'\"");
    const std::string prefix = text.substr(0, quote);
    if (prefix.find_first_of("fF") == std::string::npos) return;
    std::string word;
    for (char c : text) {
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        word.push_back(c);
      } else {
        if (!word.empty() && !std::isdigit(static_cast<unsigned char>(word[0]))) fstring_words.insert(word);
        word.clear();
      }
    }
    if (!word.empty()) fstring_words.insert(word);
  }

  void param(const Expr& p, Scope outer) {
    note(p.text);
    bind(p.text, Scope::Function);
    expr(p.children[0], outer);
    expr(p.children[1], outer);
  }

  void comprehension(const Expr& e, Scope sc) {
    for (std::size_t i = 1; i < e.children.size(); ++i) {
      const Expr& gen = e.children[i];
      bind_target(gen.children[0], sc);
      for (const Expr& c : gen.children) expr(c, sc);
    }
    expr(e.children[0], sc);
  }

  void expr(const Expr& e, Scope sc) {
    switch (e.kind) {
      case ExprKind::Name:
        note(e.text);
        return;
      case ExprKind::String:
        fstring(e.text);
        return;
      case ExprKind::Keyword:
        block_name(e.text);
        expr(e.children[0], sc);
        return;
      case ExprKind::Attribute:
        expr(e.children[0], sc);
        return;
      case ExprKind::Lambda:
        for (std::size_t i = 0; i + 1 < e.children.size(); ++i) param(e.children[i], sc);
        expr(e.children.back(), Scope::Function);
        return;
      case ExprKind::ListComp:
      case ExprKind::SetComp:
      case ExprKind::GeneratorExp:
      case ExprKind::DictComp:
        comprehension(e, sc);
        return;
      case ExprKind::NamedExpr:
      case ExprKind::WithItem: {
        const Expr& target = e.is(ExprKind::NamedExpr) ? e.children[0] : e.children[1];
        bind_target(target, sc);
        for (const Expr& c : e.children) expr(c, sc);
        return;
      }
      default:
        for (const Expr& c : e.children) expr(c, sc);
        return;
    }
  }

  void block(const std::vector<Stmt>& stmts, Scope sc) {
    for (const Stmt& s : stmts) stmt(s, sc);
  }

  void stmt(const Stmt& s, Scope sc) {
    switch (s.kind) {
      case StmtKind::Assign:
        for (std::size_t i = 0; i + 1 < s.exprs.size(); ++i) bind_target(s.exprs[i], sc);
        break;
      case StmtKind::AugAssign:
      case StmtKind::AnnAssign:
      case StmtKind::For:
        bind_target(s.exprs[0], sc);
        break;
      case StmtKind::FunctionDef: {
        block_name(s.name);
        for (const Expr& d : s.decorators) expr(d, sc);
        for (std::size_t i = 0; i + 1 < s.exprs.size(); ++i) param(s.exprs[i], sc);
        expr(s.exprs.back(), sc);
        block(s.body, Scope::Function);
        return;
      }
      case StmtKind::ClassDef:
        block_name(s.name);
        for (const Expr& d : s.decorators) expr(d, sc);
        for (const Expr& e : s.exprs) expr(e, sc);
        block(s.body, Scope::Class);
        return;
      case StmtKind::Import:
      case StmtKind::ImportFrom:
        for (const Expr& a : s.exprs) block_name(a.op.empty() ? a.text.substr(0, a.text.find('.')) : a.op);
        return;
      case StmtKind::Global:
      case StmtKind::Nonlocal:
        for (const Expr& n : s.exprs) block_name(n.text);
        return;
      case StmtKind::ExceptHandler:
        for (const Expr& e : s.exprs) expr(e, sc);
        if (!s.name.empty()) {
          note(s.name);
          bind(s.name, sc);
        }
        block(s.body, sc);
        return;
      default:
        break;
    }
    for (const Expr& d : s.decorators) expr(d, sc);
    for (const Expr& e : s.exprs) expr(e, sc);
    block(s.body, sc);
    block(s.handlers, sc);
    block(s.orelse, sc);
    block(s.finalbody, sc);
  }

  std::set<std::string> seen_;
};

bool forms_are_free(const std::string& canonical, const SuffixTable& table) {
  for (int mask = 0; mask < 8; ++mask) {
    VariantSet v{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    const std::string form = apply_variants(canonical, v, table);
    if (detail::is_reserved(form) || py::is_keyword(form)) return false;
  }
  return true;
}

void rename_expr(Expr& e, const std::string& from, const std::string& to) {
  if ((e.is(ExprKind::Name) || e.is(ExprKind::Param)) && e.text == from) e.text = to;
  for (Expr& c : e.children) rename_expr(c, from, to);
}

void rename_stmt(Stmt& s, const std::string& from, const std::string& to) {
  if (s.kind == StmtKind::ExceptHandler && s.name == from) s.name = to;
  for (Expr& d : s.decorators) rename_expr(d, from, to);
  for (Expr& e : s.exprs) rename_expr(e, from, to);
  for (auto* block : {&s.body, &s.handlers, &s.orelse, &s.finalbody}) {
    for (Stmt& c : *block) rename_stmt(c, from, to);
  }
}

}  // namespace

std::vector<NaturalVariable> natural_variables(const py::Module& module, const SuffixTable& table) {
  const NameScan scan(module);
  std::map<std::string, int> strips_to;
  for (const std::string& id : scan.universe) ++strips_to[strip_variants(id, table).canonical];
  std::set<std::string> fstring_canon;
  for (const std::string& w : scan.fstring_words) fstring_canon.insert(strip_variants(w, table).canonical);

  std::vector<NaturalVariable> out;
  for (const std::string& raw : scan.order) {
    if (scan.function_bound.count(raw) == 0 || scan.blocked.count(raw) > 0) continue;
    if (detail::is_reserved(raw)) continue;
    Stripped st = strip_variants(raw, table);
    const std::string& c = st.canonical;
    if (c.empty() || c[0] < 'a' || c[0] > 'z') continue;
    if (c == "true" || c == "false" || c == "none") continue;
    if (!strip_variants(c, table).variants.empty()) continue;
    if (strips_to[c] != 1 || fstring_canon.count(c) > 0) continue;
    if (!forms_are_free(c, table)) continue;
    out.push_back(NaturalVariable{c, raw, st.variants});
  }
  return out;
}

std::vector<std::string> local_variables(const py::Module& module) {
  const NameScan scan(module);
  std::vector<std::string> out;
  for (const std::string& raw : scan.order) {
    if (scan.function_bound.count(raw) > 0 && scan.blocked.count(raw) == 0 && !detail::is_reserved(raw)) {
      out.push_back(raw);
    }
  }
  return out;
}

std::set<std::string> identifier_universe(const py::Module& module) {
  const NameScan scan(module);
  std::set<std::string> all = scan.universe;
  all.insert(scan.fstring_words.begin(), scan.fstring_words.end());
  return all;
}

AnchorIndex identify_anchors(const py::Module& module, RuleMask enabled, const SuffixTable& table) {
  AnchorIndex index;
  for (const FormalSite& site : find_formal_sites(module, enabled)) {
    AnchorPoint a;
    a.channel = Channel::Formal;
    a.id = site.rule;
    a.address = site.address;
    a.state = site.state;
    a.ordinal = site.ordinal;
    index.formal.push_back(std::move(a));
  }
  std::stable_sort(index.formal.begin(), index.formal.end(), [](const AnchorPoint& x, const AnchorPoint& y) {
    return x.id != y.id ? x.id < y.id : x.ordinal < y.ordinal;
  });

  index.variables = natural_variables(module, table);
  for (std::size_t v = 0; v < index.variables.size(); ++v) {
    for (Variant variant : kVariantOrder) {
      AnchorPoint a;
      a.channel = Channel::Natural;
      a.id = static_cast<int>(variant);
      a.identifier = index.variables[v].canonical;
      a.state = index.variables[v].variants.has(variant) ? 1 : 0;
      a.ordinal = v;
      index.natural.push_back(std::move(a));
    }
  }
  return index;
}

AnchorIndex identify_anchors(const SubjectProgram& program, RuleMask enabled, const SuffixTable& table) {
  return identify_anchors(program.tree, enabled, table);
}

Grouping group_anchors(AnchorIndex& index, Channel channel, int alpha, int q) {
  if (alpha < 1 || q < 0) throw std::invalid_argument("group_anchors: alpha >= 1 and q >= 0 required");
  std::vector<AnchorPoint>& anchors = index.channel(channel);
  const std::size_t need = static_cast<std::size_t>(alpha) * static_cast<std::size_t>(q);
  if (anchors.size() < need) throw InsufficientAnchors(channel, anchors.size(), need);
  Grouping g{channel, alpha, {}};
  for (AnchorPoint& a : anchors) a.group = -1;
  for (int i = 0; i < q; ++i) {
    std::vector<std::size_t> members;
    for (int j = 0; j < alpha; ++j) {
      const std::size_t k = static_cast<std::size_t>(i * alpha + j);
      anchors[k].group = i;
      members.push_back(k);
    }
    g.groups.push_back(std::move(members));
  }
  return g;
}

void apply_formal_states(py::Module& module, const AnchorIndex& index, const std::vector<int>& states,
                         RuleMask enabled) {
  std::size_t walk_size = 0;
  for (const AnchorPoint& a : index.formal) walk_size = std::max(walk_size, a.ordinal + 1);
  std::vector<int> desired(walk_size, -1);
  for (std::size_t k = 0; k < states.size() && k < index.formal.size(); ++k) {
    desired[index.formal[k].ordinal] = states[k];
  }
  set_formal_states(module, desired, enabled);
}

void apply_natural_states(py::Module& module, const AnchorIndex& index, const std::vector<int>& states,
                          const SuffixTable& table) {
  const NameScan scan(module);
  for (std::size_t v = 0; v < index.variables.size(); ++v) {
    const NaturalVariable& var = index.variables[v];
    VariantSet wanted = var.variants;
    bool touched = false;
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t k = v * 3 + j;
      if (k >= states.size() || states[k] < 0) continue;
      wanted.set(kVariantOrder[j], states[k] == 1);
      touched = true;
    }
    if (!touched || wanted == var.variants) continue;
    std::set<std::string> taken = scan.universe;
    taken.erase(var.raw);
    const std::string renamed = apply_variants(var.canonical, wanted, table, &taken);
    rename_variable(module, var.raw, renamed);
  }
}

void rename_variable(py::Module& module, const std::string& from, const std::string& to) {
  for (Stmt& s : module.body) rename_stmt(s, from, to);
}

}  // namespace dualmark
