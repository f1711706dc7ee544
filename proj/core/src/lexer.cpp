#include "lexer.hpp"

#include <cctype>

#include "dualmark/syntax.hpp"

namespace dualmark::py::detail {
namespace {

constexpr std::string_view kOperators[] = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<", ">>", "<=",
    ">=",  "==",  "!=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@=",
    "+",   "-",   "*",   "/",   "%",   "@",  "&",  "|",  "^",  "~",  "<",  ">",
    "(",   ")",   "[",   "]",   "{",   "}",  ",",  ":",  ".",  ";",  "=",  "!"};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

bool is_string_prefix(std::string_view p) {
  if (p.empty() || p.size() > 2) return false;
  std::string lower;
  for (char c : p) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return lower == "r" || lower == "b" || lower == "u" || lower == "f" || lower == "br" ||
         lower == "rb" || lower == "fr" || lower == "rf";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Lexed run() {
    indents_.push_back(0);
    while (pos_ < src_.size()) {
      if (at_line_start_ && depth_ == 0) {
        if (!handle_line_start()) continue;
      }
      if (pos_ >= src_.size()) break;
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\f' || c == '\r') {
        advance();
      } else if (c == '#') {
        read_comment(false);
      } else if (c == '\\') {
        std::size_t next = pos_ + 1;
        if (next < src_.size() && src_[next] == '\r') ++next;
        if (next < src_.size() && src_[next] == '\n') {
          pos_ = next + 1;
          ++line_;
          col_ = 0;
        } else {
          throw ParseError(line_, col_, "unexpected character after line continuation");
        }
      } else if (c == '\n') {
        if (depth_ == 0) emit(Tok::Newline, "", line_, col_, line_, col_ + 1);
        advance_newline();
        if (depth_ == 0) at_line_start_ = true;
      } else if (is_ident_start(static_cast<unsigned char>(c))) {
        read_name_or_prefixed_string();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        read_number();
      } else if (c == '"' || c == '\'') {
        read_string(pos_);
      } else {
        read_operator();
      }
    }
    if (depth_ > 0) {
      const Token& open = out_.tokens[open_brackets_.back()];
      throw ParseError(open.line, open.col, "'" + open.text + "' was never closed");
    }
    if (!out_.tokens.empty() && out_.tokens.back().type != Tok::Newline &&
        out_.tokens.back().type != Tok::Dedent && out_.tokens.back().type != Tok::Indent) {
      emit(Tok::Newline, "", line_, col_, line_, col_);
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(Tok::Dedent, "", line_, 0, line_, 0);
    }
    emit(Tok::End, "", line_, col_, line_, col_);
    return std::move(out_);
  }

 private:
  // Returns false when the whole physical line was consumed (blank/comment).
  bool handle_line_start() {
    int width = 0;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ') {
        ++width;
      } else if (c == '\t') {
        width = (width / 8 + 1) * 8;
      } else if (c == '\f' || c == '\r') {
        // ignored
      } else {
        break;
      }
      advance();
    }
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    if (c == '\n') {
      out_.blank_lines.insert(line_);
      advance_newline();
      return false;
    }
    if (c == '#') {
      read_comment(true);
      if (pos_ < src_.size() && src_[pos_] == '\n') advance_newline();
      return false;
    }
    at_line_start_ = false;
    if (width > indents_.back()) {
      indents_.push_back(width);
      emit(Tok::Indent, "", line_, 0, line_, width);
    } else {
      while (width < indents_.back()) {
        indents_.pop_back();
        emit(Tok::Dedent, "", line_, 0, line_, width);
      }
      if (width != indents_.back()) {
        throw ParseError(line_, width, "unindent does not match any outer indentation level");
      }
    }
    return true;
  }

  void read_comment(bool own_line) {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n') advance();
    std::string text(src_.substr(start, pos_ - start));
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
      text.pop_back();
    }
    out_.comments.push_back(Comment{line_, std::move(text), own_line});
  }

  void read_name_or_prefixed_string() {
    const std::size_t start = pos_;
    const int line = line_;
    const int col = col_;
    while (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_]))) advance();
    const std::string_view word = src_.substr(start, pos_ - start);
    if (pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\'') && is_string_prefix(word)) {
      read_string(start);
      return;
    }
    emit(Tok::Name, std::string(word), line, col, line_, col_);
  }

  void read_number() {
    const std::size_t start = pos_;
    const int col = col_;
    auto digits = [&](auto pred) {
      while (pos_ < src_.size() && (pred(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        advance();
      }
    };
    auto is_dec = [](unsigned char ch) { return std::isdigit(ch) != 0; };
    if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
        std::string_view("xXoObB").find(src_[pos_ + 1]) != std::string_view::npos) {
      advance();
      advance();
      digits([](unsigned char ch) { return std::isxdigit(ch) != 0; });
    } else {
      digits(is_dec);
      if (pos_ < src_.size() && src_[pos_] == '.') {
        advance();
        digits(is_dec);
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t look = pos_ + 1;
        if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
        if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
          while (pos_ < look) advance();
          digits(is_dec);
        }
      }
      if (pos_ < src_.size() && (src_[pos_] == 'j' || src_[pos_] == 'J')) advance();
    }
    if (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_]))) {
      throw ParseError(line_, col_, "invalid numeric literal");
    }
    emit(Tok::Number, std::string(src_.substr(start, pos_ - start)), line_, col, line_, col_);
  }

  // `start` points at the prefix (if any); pos_ is at the opening quote.
  void read_string(std::size_t start) {
    const int line = line_;
    const int col = col_ - static_cast<int>(pos_ - start);
    const char quote = src_[pos_];
    const bool triple = pos_ + 2 < src_.size() && src_[pos_ + 1] == quote && src_[pos_ + 2] == quote;
    const std::size_t open = triple ? 3 : 1;
    for (std::size_t i = 0; i < open; ++i) advance();
    while (true) {
      if (pos_ >= src_.size()) throw ParseError(line, col, "unterminated string literal");
      const char c = src_[pos_];
      if (c == '\\') {
        advance();
        if (pos_ < src_.size()) {
          if (src_[pos_] == '\n') {
            advance_newline();
          } else {
            advance();
          }
        }
        continue;
      }
      if (c == '\n') {
        if (!triple) throw ParseError(line, col, "unterminated string literal");
        advance_newline();
        continue;
      }
      if (c == quote) {
        if (!triple) {
          advance();
          break;
        }
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == quote && src_[pos_ + 2] == quote) {
          advance();
          advance();
          advance();
          break;
        }
      }
      advance();
    }
    emit(Tok::String, std::string(src_.substr(start, pos_ - start)), line, col, line_, col_);
  }

  void read_operator() {
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        if (op == "!") break;
        const int col = col_;
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        if (op == "(" || op == "[" || op == "{") {
          ++depth_;
          open_brackets_.push_back(out_.tokens.size());
        }
        if (op == ")" || op == "]" || op == "}") {
          if (depth_ == 0) throw ParseError(line_, col, "unmatched '" + std::string(op) + "'");
          --depth_;
          open_brackets_.pop_back();
        }
        emit(Tok::Op, std::string(op), line_, col, line_, col_);
        return;
      }
    }
    throw ParseError(line_, col_, std::string("invalid character '") + src_[pos_] + "'");
  }

  void emit(Tok type, std::string text, int line, int col, int end_line, int end_col) {
    out_.tokens.push_back(Token{type, std::move(text), line, col, end_line, end_col});
  }

  void advance() {
    ++pos_;
    ++col_;
  }
  void advance_newline() {
    ++pos_;
    ++line_;
    col_ = 0;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 0;
  int depth_ = 0;
  bool at_line_start_ = true;
  std::vector<int> indents_;
  std::vector<std::size_t> open_brackets_;  // token indices
  Lexed out_;
};

}  // namespace

Lexed tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace dualmark::py::detail
