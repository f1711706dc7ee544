#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dualmark/bit_codec.hpp"
#include "dualmark/rng.hpp"

namespace dualmark {

/// Dense binary matrix, row-major, one byte per bit.
struct ParityCheckMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Bits> bits;

  ParityCheckMatrix() = default;
  ParityCheckMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r, Bits(c, 0)) {}
  static ParityCheckMatrix from_rows(const std::vector<Bits>& rows);

  std::uint8_t at(std::size_t i, std::size_t j) const { return bits[i][j]; }
  bool operator==(const ParityCheckMatrix& o) const = default;
};

/// Column index sets, one per grouped-state bit.
using ColumnGroups = std::vector<std::vector<std::size_t>>;

/// q consecutive blocks of alpha columns.
ColumnGroups consecutive_groups(std::size_t q, std::size_t alpha);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeLimit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t gf2_rank(const ParityCheckMatrix& m);

/// M * r over GF(2).
Bits multiply(const ParityCheckMatrix& m, const Bits& r);

struct SolveOptions {
  bool exclude_zero = false;        // reject r = 0 (a zero state vector reads as "no watermark")
  std::size_t max_trials = 10000;   // rejection-sampling budget before enumerating
};

/// Uniform draw from { r : M r = c, c_i = 1 => |r on G_i| >= tau,
/// c_i = 0 => |r on G_i| < tau }, or nullopt when that set is empty.
std::optional<Bits> solve_constrained(const ParityCheckMatrix& m, const Bits& c, const ColumnGroups& groups,
                                      int tau, Rng& rng, const SolveOptions& options = {});

/// The same feasible set by brute force, sorted lexicographically. Throws
/// SizeLimit for more than 24 columns.
std::vector<Bits> enumerate_solutions(const ParityCheckMatrix& m, const Bits& c, const ColumnGroups& groups,
                                      int tau);

/// c'_i = 1 iff the group holds at least tau ones.
Bits threshold_groups(const Bits& r, const ColumnGroups& groups, int tau);

/// M r == c' (mod 2). Throws DimensionMismatch.
bool verify(const ParityCheckMatrix& m, const Bits& r, const Bits& c);

}  // namespace dualmark
