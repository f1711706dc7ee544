#include "dualmark/parity_core.hpp"

#include <algorithm>

namespace dualmark {

ParityCheckMatrix ParityCheckMatrix::from_rows(const std::vector<Bits>& rows) {
  ParityCheckMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  for (const Bits& r : rows) {
    if (r.size() != m.cols) throw DimensionMismatch("ragged matrix rows");
  }
  m.bits = rows;
  return m;
}

ColumnGroups consecutive_groups(std::size_t q, std::size_t alpha) {
  ColumnGroups g(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < alpha; ++j) g[i].push_back(i * alpha + j);
  }
  return g;
}

std::size_t gf2_rank(const ParityCheckMatrix& m) {
  std::vector<Bits> a = m.bits;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && !a[pivot][col]) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != rank && a[i][col]) {
        for (std::size_t j = col; j < m.cols; ++j) a[i][j] ^= a[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

Bits multiply(const ParityCheckMatrix& m, const Bits& r) {
  if (r.size() != m.cols) throw DimensionMismatch("state vector length does not match matrix columns");
  Bits out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) acc ^= static_cast<std::uint8_t>(m.bits[i][j] & r[j]);
    out[i] = acc;
  }
  return out;
}

Bits threshold_groups(const Bits& r, const ColumnGroups& groups, int tau) {
  Bits c(groups.size(), 0);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    int ones = 0;
    for (std::size_t j : groups[i]) {
      if (j >= r.size()) throw DimensionMismatch("group column outside the state vector");
      ones += r[j];
    }
    c[i] = ones >= tau ? 1 : 0;
  }
  return c;
}

bool verify(const ParityCheckMatrix& m, const Bits& r, const Bits& c) {
  if (c.size() != m.rows) throw DimensionMismatch("grouped vector length does not match matrix rows");
  return multiply(m, r) == c;
}

namespace {

void check_dims(const ParityCheckMatrix& m, const Bits& c, const ColumnGroups& groups) {
  if (c.size() != m.rows) throw DimensionMismatch("|c| must equal rows(M)");
  if (groups.size() != c.size()) throw DimensionMismatch("one group per grouped-state bit required");
  for (const auto& g : groups) {
    for (std::size_t j : g) {
      if (j >= m.cols) throw DimensionMismatch("group column outside the matrix");
    }
  }
}

bool meets_thresholds(const Bits& r, const Bits& c, const ColumnGroups& groups, int tau) {
  return threshold_groups(r, groups, tau) == c;
}

// Affine parametrisation of { r : M r = c } as particular + span(basis).
struct AffineSpace {
  Bits particular;
  std::vector<Bits> basis;
};

std::optional<AffineSpace> solve_linear(const ParityCheckMatrix& m, const Bits& c) {
  const std::size_t n = m.cols;
  std::vector<Bits> a = m.bits;
  Bits rhs = c;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && !a[p][col]) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    std::swap(rhs[row], rhs[p]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != row && a[i][col]) {
        for (std::size_t j = col; j < n; ++j) a[i][j] ^= a[row][j];
        rhs[i] ^= rhs[row];
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < a.size(); ++i) {
    if (rhs[i]) return std::nullopt;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col : pivot_cols) is_pivot[col] = true;

  AffineSpace space;
  space.particular.assign(n, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) space.particular[pivot_cols[i]] = rhs[i];
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Bits v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = a[i][free];
    space.basis.push_back(std::move(v));
  }
  return space;
}

Bits combine(const AffineSpace& s, std::uint64_t selector) {
  Bits r = s.particular;
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    if ((selector >> k) & 1U) {
      for (std::size_t j = 0; j < r.size(); ++j) r[j] ^= s.basis[k][j];
    }
  }
  return r;
}

Bits random_member(const AffineSpace& s, Rng& rng) {
  Bits r = s.particular;
  for (const Bits& v : s.basis) {
    if (rng.next() & 1U) {
      for (std::size_t j = 0; j < r.size(); ++j) r[j] ^= v[j];
    }
  }
  return r;
}

constexpr std::size_t kEnumerationLimit = 24;

}  // namespace

std::optional<Bits> solve_constrained(const ParityCheckMatrix& m, const Bits& c, const ColumnGroups& groups,
                                      int tau, Rng& rng, const SolveOptions& options) {
  check_dims(m, c, groups);
  const auto space = solve_linear(m, c);
  if (!space) return std::nullopt;
  auto acceptable = [&](const Bits& r) {
    return meets_thresholds(r, c, groups, tau) && !(options.exclude_zero && all_zero(r));
  };
  for (std::size_t trial = 0; trial < options.max_trials; ++trial) {
    Bits r = random_member(*space, rng);
    if (acceptable(r)) return r;
  }
  // Rejection failed: enumerate the affine space exactly when it is small.
  if (space->basis.size() > kEnumerationLimit) return std::nullopt;
  std::vector<Bits> feasible;
  const std::uint64_t count = std::uint64_t{1} << space->basis.size();
  for (std::uint64_t sel = 0; sel < count; ++sel) {
    Bits r = combine(*space, sel);
    if (acceptable(r)) feasible.push_back(std::move(r));
  }
  if (feasible.empty()) return std::nullopt;
  return feasible[rng.below(feasible.size())];
}

std::vector<Bits> enumerate_solutions(const ParityCheckMatrix& m, const Bits& c, const ColumnGroups& groups,
                                      int tau) {
  check_dims(m, c, groups);
  if (m.cols > kEnumerationLimit) throw SizeLimit("enumerate_solutions supports at most 24 columns");
  std::vector<Bits> out;
  const std::uint64_t count = std::uint64_t{1} << m.cols;
  for (std::uint64_t v = 0; v < count; ++v) {
    Bits r(m.cols, 0);
    for (std::size_t j = 0; j < m.cols; ++j) r[j] = static_cast<std::uint8_t>((v >> (m.cols - 1 - j)) & 1U);
    if (multiply(m, r) == c && meets_thresholds(r, c, groups, tau)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dualmark
