#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dualmark::py::detail {

enum class Tok { Name, Number, String, Op, Newline, Indent, Dedent, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  int line = 0;
  int col = 0;
  int end_line = 0;
  int end_col = 0;
};

struct Comment {
  int line = 0;
  std::string text;
  bool own_line = false;  // the comment is the only thing on its physical line
};

struct Lexed {
  std::vector<Token> tokens;
  std::vector<Comment> comments;
  std::set<int> blank_lines;
};

/// Splits Python source into tokens with INDENT/DEDENT/NEWLINE structure.
/// Comments and blank lines are reported on the side. Throws ParseError.
Lexed tokenize(std::string_view source);

}  // namespace dualmark::py::detail
