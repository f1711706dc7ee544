#include "dualmark/source_model.hpp"

namespace dualmark {

SubjectProgram parse(std::string text, std::string path) {
  py::Module tree = py::parse_module(text);
  return SubjectProgram{std::move(text), std::move(tree), std::move(path)};
}

std::string render(const SubjectProgram& program) { return py::render_module(program.tree); }
std::string render(const py::Module& module) { return py::render_module(module); }

SubjectProgram rebuild(const py::Module& tree, std::string path) {
  return parse(py::render_module(tree), std::move(path));
}

int child_count(const py::Stmt& s) {
  return static_cast<int>(s.decorators.size() + s.exprs.size() + s.body.size() + s.handlers.size() +
                          s.orelse.size() + s.finalbody.size());
}

NodeRef stmt_child(const py::Stmt& s, int i) {
  if (i < 0) return {};
  auto idx = static_cast<std::size_t>(i);
  if (idx < s.decorators.size()) return &s.decorators[idx];
  idx -= s.decorators.size();
  if (idx < s.exprs.size()) return &s.exprs[idx];
  idx -= s.exprs.size();
  for (const std::vector<py::Stmt>* block : {&s.body, &s.handlers, &s.orelse, &s.finalbody}) {
    if (idx < block->size()) return &(*block)[idx];
    idx -= block->size();
  }
  return {};
}

NodeRef locate(const py::Module& module, const NodeAddress& address) {
  if (address.path.empty()) return {};
  const int first = address.path.front();
  if (first < 0 || static_cast<std::size_t>(first) >= module.body.size()) return {};
  NodeRef cur = &module.body[static_cast<std::size_t>(first)];
  for (std::size_t k = 1; k < address.path.size(); ++k) {
    const int i = address.path[k];
    if (const auto* s = std::get_if<const py::Stmt*>(&cur)) {
      cur = stmt_child(**s, i);
    } else if (const auto* e = std::get_if<const py::Expr*>(&cur)) {
      const auto& kids = (*e)->children;
      if (i < 0 || static_cast<std::size_t>(i) >= kids.size()) return {};
      cur = &kids[static_cast<std::size_t>(i)];
    } else {
      return {};
    }
  }
  return cur;
}

}  // namespace dualmark
