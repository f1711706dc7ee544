#include "dualmark/bit_codec.hpp"

#include <array>

namespace dualmark {

std::string to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits bits_from_string(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("not a bitstring: '" + std::string(text) + "'");
    out.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

bool all_zero(const Bits& bits) {
  for (std::uint8_t b : bits) {
    if (b) return false;
  }
  return true;
}

const char* code_name(CodeId code) {
  switch (code) {
    case CodeId::BCH421:
      return "BCH421";
    case CodeId::HAM74:
      return "HAM74";
    case CodeId::ORGFIXED:
      return "ORGFIXED";
  }
  return "?";
}

CodeId code_from_name(std::string_view name) {
  if (name == "BCH421") return CodeId::BCH421;
  if (name == "HAM74") return CodeId::HAM74;
  if (name == "ORGFIXED") return CodeId::ORGFIXED;
  throw std::invalid_argument("unknown code id '" + std::string(name) + "'");
}

CodeParams code_params(CodeId code) {
  switch (code) {
    case CodeId::BCH421:
      return {4, 2};
    case CodeId::HAM74:
      return {7, 4};
    case CodeId::ORGFIXED:
      break;
  }
  throw std::invalid_argument("ORGFIXED has no fixed parameters");
}

namespace {

// BCH421 lookup: message index (m as a 2-bit number) -> valid sequences.
const std::array<std::vector<std::string_view>, 4>& bch_table() {
  static const std::array<std::vector<std::string_view>, 4> table = {{
      {"0001", "0010", "0100", "1000"},
      {"0101", "0111", "1101"},
      {"1010", "1011", "1110"},
      {"1111"},
  }};
  return table;
}

constexpr std::string_view kBchCodewords[] = {"0000", "0101", "1010", "1111"};

std::size_t as_index(const Bits& m) {
  std::size_t v = 0;
  for (std::uint8_t b : m) v = v * 2 + b;
  return v;
}

void check_length(const Bits& bits, std::size_t expected) {
  if (bits.size() != expected) throw LengthMismatch(expected, bits.size());
}

// Systematic Hamming(7,4): d1 d2 d3 d4 p1 p2 p3.
Bits hamming_encode(const Bits& d) {
  return {d[0], d[1], d[2], d[3], static_cast<std::uint8_t>(d[0] ^ d[1] ^ d[3]),
          static_cast<std::uint8_t>(d[0] ^ d[2] ^ d[3]), static_cast<std::uint8_t>(d[1] ^ d[2] ^ d[3])};
}

Bits hamming_decode(Bits w) {
  // Parity-check columns for positions d1..d4, p1..p3.
  static const std::array<std::array<std::uint8_t, 3>, 7> kColumns = {{
      {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
  }};
  const std::uint8_t s1 = w[0] ^ w[1] ^ w[3] ^ w[4];
  const std::uint8_t s2 = w[0] ^ w[2] ^ w[3] ^ w[5];
  const std::uint8_t s3 = w[1] ^ w[2] ^ w[3] ^ w[6];
  if (s1 | s2 | s3) {
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
      if (kColumns[i][0] == s1 && kColumns[i][1] == s2 && kColumns[i][2] == s3) {
        w[i] ^= 1;
        break;
      }
    }
  }
  return {w[0], w[1], w[2], w[3]};
}

}  // namespace

Bits encode(const Bits& m, CodeId code) {
  switch (code) {
    case CodeId::BCH421:
      check_length(m, 2);
      return bits_from_string(kBchCodewords[as_index(m)]);
    case CodeId::HAM74:
      check_length(m, 4);
      return hamming_encode(m);
    case CodeId::ORGFIXED:
      return m;
  }
  return m;
}

std::vector<Bits> valid_set(const Bits& m, CodeId code) {
  std::vector<Bits> out;
  switch (code) {
    case CodeId::BCH421:
      check_length(m, 2);
      for (std::string_view w : bch_table()[as_index(m)]) out.push_back(bits_from_string(w));
      break;
    case CodeId::HAM74: {
      const Bits c = hamming_encode(m);
      if (!all_zero(c)) out.push_back(c);
      for (std::size_t i = 0; i < c.size(); ++i) {
        Bits flipped = c;
        flipped[i] ^= 1;
        if (!all_zero(flipped)) out.push_back(flipped);
      }
      break;
    }
    case CodeId::ORGFIXED:
      if (!all_zero(m)) out.push_back(m);
      break;
  }
  return out;
}

WatermarkSequence sample_watermark(const Bits& m, CodeId code, Rng& rng) {
  const std::vector<Bits> options = valid_set(m, code);
  if (options.empty()) throw std::invalid_argument("no valid watermark sequence for " + to_string(m));
  return WatermarkSequence{options[rng.below(options.size())], code};
}

std::optional<Bits> decode(const Bits& w, CodeId code) {
  switch (code) {
    case CodeId::BCH421: {
      check_length(w, 4);
      const std::string s = to_string(w);
      const auto& table = bch_table();
      for (std::size_t m = 0; m < table.size(); ++m) {
        for (std::string_view v : table[m]) {
          if (v == s) return Bits{static_cast<std::uint8_t>(m >> 1), static_cast<std::uint8_t>(m & 1)};
        }
      }
      return std::nullopt;
    }
    case CodeId::HAM74:
      check_length(w, 7);
      return hamming_decode(w);
    case CodeId::ORGFIXED:
      return w;
  }
  return std::nullopt;
}

}  // namespace dualmark
