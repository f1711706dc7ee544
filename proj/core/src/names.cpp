#include "names.hpp"

#include <algorithm>
#include <iterator>

namespace dualmark::detail {

using py::Expr;
using py::ExprKind;
using py::Stmt;
using py::StmtKind;

std::size_t count_name(const Expr& e, std::string_view name) {
  std::size_t n = 0;
  if ((e.is(ExprKind::Name) || e.is(ExprKind::Param)) && e.text == name) ++n;
  for (const Expr& c : e.children) n += count_name(c, name);
  return n;
}

std::size_t count_name(const Stmt& s, std::string_view name) {
  std::size_t n = 0;
  if (!s.name.empty() && s.name == name &&
      (s.kind == StmtKind::FunctionDef || s.kind == StmtKind::ClassDef ||
       s.kind == StmtKind::ExceptHandler)) {
    ++n;
  }
  for (const Expr& d : s.decorators) n += count_name(d, name);
  for (const Expr& e : s.exprs) n += count_name(e, name);
  for (const auto* block : {&s.body, &s.handlers, &s.orelse, &s.finalbody}) {
    for (const Stmt& c : *block) n += count_name(c, name);
  }
  return n;
}

std::size_t count_name(const py::Module& m, std::string_view name) {
  std::size_t n = 0;
  for (const Stmt& s : m.body) n += count_name(s, name);
  return n;
}

void target_names(const Expr& target, std::set<std::string>& out) {
  switch (target.kind) {
    case ExprKind::Name:
      out.insert(target.text);
      break;
    case ExprKind::Tuple:
    case ExprKind::List:
    case ExprKind::Starred:
      for (const Expr& c : target.children) target_names(c, out);
      break;
    default:
      break;
  }
}

namespace {

void bound_in_expr(const Expr& e, std::set<std::string>& out) {
  if (e.is(ExprKind::Param)) out.insert(e.text);
  if (e.is(ExprKind::NamedExpr)) target_names(e.children[0], out);
  if (e.is(ExprKind::Comprehension)) target_names(e.children[0], out);
  if (e.is(ExprKind::WithItem)) target_names(e.children[1], out);
  for (const Expr& c : e.children) bound_in_expr(c, out);
}

void bound_in_stmt(const Stmt& s, std::set<std::string>& out) {
  switch (s.kind) {
    case StmtKind::Assign:
      for (std::size_t i = 0; i + 1 < s.exprs.size(); ++i) target_names(s.exprs[i], out);
      break;
    case StmtKind::AugAssign:
    case StmtKind::AnnAssign:
    case StmtKind::For:
      target_names(s.exprs[0], out);
      break;
    case StmtKind::FunctionDef:
    case StmtKind::ClassDef:
    case StmtKind::ExceptHandler:
      if (!s.name.empty()) out.insert(s.name);
      break;
    case StmtKind::Import:
    case StmtKind::ImportFrom:
      for (const Expr& a : s.exprs) {
        if (!a.op.empty()) {
          out.insert(a.op);
        } else {
          out.insert(a.text.substr(0, a.text.find('.')));
        }
      }
      break;
    case StmtKind::Global:
    case StmtKind::Nonlocal:
      for (const Expr& n : s.exprs) out.insert(n.text);
      break;
    default:
      break;
  }
  for (const Expr& d : s.decorators) bound_in_expr(d, out);
  for (const Expr& e : s.exprs) bound_in_expr(e, out);
  for (const auto* block : {&s.body, &s.handlers, &s.orelse, &s.finalbody}) {
    for (const Stmt& c : *block) bound_in_stmt(c, out);
  }
}

}  // namespace

std::set<std::string> bound_names(const py::Module& m) {
  std::set<std::string> out;
  for (const Stmt& s : m.body) bound_in_stmt(s, out);
  return out;
}

bool contains_kind(const Expr& e, std::initializer_list<ExprKind> kinds) {
  if (std::find(kinds.begin(), kinds.end(), e.kind) != kinds.end()) return true;
  return std::any_of(e.children.begin(), e.children.end(),
                     [&](const Expr& c) { return contains_kind(c, kinds); });
}

bool references_any(const Expr& e, const std::set<std::string>& names) {
  if (e.is(ExprKind::Name) && names.count(e.text) > 0) return true;
  return std::any_of(e.children.begin(), e.children.end(),
                     [&](const Expr& c) { return references_any(c, names); });
}

bool is_reserved(std::string_view name) {
  static constexpr std::string_view kReserved[] = {
      "ArithmeticError", "AssertionError", "AttributeError", "BaseException", "BlockingIOError",
      "BrokenPipeError", "BufferError", "BytesWarning", "ChildProcessError", "ConnectionAbortedError",
      "ConnectionError", "ConnectionRefusedError", "ConnectionResetError", "DeprecationWarning",
      "EOFError", "Ellipsis", "EncodingWarning", "EnvironmentError", "Exception", "False",
      "FileExistsError", "FileNotFoundError", "FloatingPointError", "FutureWarning", "GeneratorExit",
      "IOError", "ImportError", "ImportWarning", "IndentationError", "IndexError", "InterruptedError",
      "IsADirectoryError", "KeyError", "KeyboardInterrupt", "LookupError", "MemoryError",
      "ModuleNotFoundError", "NameError", "None", "NotADirectoryError", "NotImplemented",
      "NotImplementedError", "OSError", "OverflowError", "PendingDeprecationWarning",
      "PermissionError", "ProcessLookupError", "RecursionError", "ReferenceError", "ResourceWarning",
      "RuntimeError", "RuntimeWarning", "StopAsyncIteration", "StopIteration", "SyntaxError",
      "SyntaxWarning", "SystemError", "SystemExit", "TabError", "TimeoutError", "True", "TypeError",
      "UnboundLocalError", "UnicodeDecodeError", "UnicodeEncodeError", "UnicodeError",
      "UnicodeTranslateError", "UnicodeWarning", "UserWarning", "ValueError", "Warning",
      "ZeroDivisionError", "__build_class__", "__debug__", "__doc__", "__import__", "__loader__",
      "__name__", "__package__", "__spec__", "abs", "aiter", "all", "anext", "any", "ascii", "bin",
      "bool", "breakpoint", "bytearray", "bytes", "callable", "chr", "classmethod", "compile",
      "complex", "copyright", "credits", "delattr", "dict", "dir", "divmod", "enumerate", "eval",
      "exec", "exit", "filter", "float", "format", "frozenset", "getattr", "globals", "hasattr",
      "hash", "help", "hex", "id", "input", "int", "isinstance", "issubclass", "iter", "len",
      "license", "list", "locals", "map", "max", "memoryview", "min", "next", "object", "oct",
      "open", "ord", "pow", "print", "property", "quit", "range", "repr", "reversed", "round", "set",
      "setattr", "slice", "sorted", "staticmethod", "str", "sum", "super", "tuple", "type", "vars",
      "zip", "__file__", "__builtins__", "self", "cls"};
  return std::find(std::begin(kReserved), std::end(kReserved), name) != std::end(kReserved);
}

}  // namespace dualmark::detail
