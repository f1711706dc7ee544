#pragma once

// Identifier bookkeeping shared by the formal rules and the natural channel.

#include <functional>
#include <set>
#include <string>
#include <string_view>

#include "dualmark/syntax.hpp"

namespace dualmark::detail {

/// Occurrences of `name` as a variable: Name nodes, parameters, and the names
/// carried by def/class/except statements.
std::size_t count_name(const py::Expr& e, std::string_view name);
std::size_t count_name(const py::Stmt& s, std::string_view name);
std::size_t count_name(const py::Module& m, std::string_view name);

/// Every name bound anywhere in the module (assignment and loop targets,
/// parameters, def/class names, imports, except names, walrus targets).
std::set<std::string> bound_names(const py::Module& m);

/// Name nodes bound by an assignment-like target expression.
void target_names(const py::Expr& target, std::set<std::string>& out);

bool contains_kind(const py::Expr& e, std::initializer_list<py::ExprKind> kinds);
bool references_any(const py::Expr& e, const std::set<std::string>& names);

/// Builtins plus the conventional self/cls: never renamed, never produced.
bool is_reserved(std::string_view name);

}  // namespace dualmark::detail
