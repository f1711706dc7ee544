#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dualmark/rng.hpp"

namespace dualmark {

/// One bit per element, values 0 or 1.
using Bits = std::vector<std::uint8_t>;

std::string to_string(const Bits& bits);
/// Parses "0101"; throws std::invalid_argument on other characters.
Bits bits_from_string(std::string_view text);
bool all_zero(const Bits& bits);

enum class CodeId { BCH421, HAM74, ORGFIXED };

const char* code_name(CodeId code);
/// Throws std::invalid_argument for unknown names.
CodeId code_from_name(std::string_view name);

struct CodeParams {
  int l = 0;  // codeword length
  int k = 0;  // message length
};

/// ORGFIXED has no fixed shape and is rejected here.
CodeParams code_params(CodeId code);

class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("expected " + std::to_string(expected) + " bits, got " + std::to_string(got)) {}
};

struct WatermarkSequence {
  Bits bits;
  CodeId code = CodeId::BCH421;
};

/// Canonical codeword of `m`. Throws LengthMismatch.
Bits encode(const Bits& m, CodeId code);

/// Sequences that decode to `m` and are allowed as embedded watermarks
/// (never the all-zero word).
std::vector<Bits> valid_set(const Bits& m, CodeId code);

/// Uniform draw from valid_set(m, code).
WatermarkSequence sample_watermark(const Bits& m, CodeId code, Rng& rng);

/// Message for `w`, or nullopt when `w` is not a valid BCH421 word.
/// Throws LengthMismatch.
std::optional<Bits> decode(const Bits& w, CodeId code);

}  // namespace dualmark
