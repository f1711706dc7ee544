#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dualmark/syntax.hpp"

namespace dualmark {

/// Location of a statement or expression: child indices from the module root
/// plus the source span recorded at parse time.
///
/// Child numbering for a statement: decorators, exprs, body, handlers, orelse,
/// finalbody, concatenated in that order. For an expression: its children.
/// The module's children are its top-level statements.
struct NodeAddress {
  std::vector<int> path;
  py::Span span;

  bool operator==(const NodeAddress& other) const { return path == other.path; }
  bool operator<(const NodeAddress& other) const { return path < other.path; }
};

struct SubjectProgram {
  std::string text;
  py::Module tree;
  std::string path;
};

/// Throws py::ParseError on invalid syntax.
SubjectProgram parse(std::string text, std::string path = "<memory>");

/// Canonical rendering of the program's tree.
std::string render(const SubjectProgram& program);
std::string render(const py::Module& module);

/// Builds a program from a tree, rendering and re-parsing it so the text,
/// tree and spans agree.
SubjectProgram rebuild(const py::Module& tree, std::string path);

using NodeRef = std::variant<std::monostate, const py::Stmt*, const py::Expr*>;

/// Resolves an address; returns monostate when the path does not exist.
NodeRef locate(const py::Module& module, const NodeAddress& address);

int child_count(const py::Stmt& stmt);
/// Child `i` of a statement under the numbering above.
NodeRef stmt_child(const py::Stmt& stmt, int i);

}  // namespace dualmark
