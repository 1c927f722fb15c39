#pragma once

#include <cstdint>
#include <vector>

#include "schur/checked.hpp"
#include "schur/types.hpp"

namespace schur {

/// Binomial coefficient, zero when r > m. Throws OverflowError if it does not
/// fit in 64 bits.
Count binom(std::int64_t m, std::int64_t r);
Wide binom_wide(std::int64_t m, std::int64_t r);

/// S(a,b): solutions of x1 <= x2 <= x3, x1 + x2 < x3 inside [a,b], a >= 1.
/// Summation over the smallest coordinate; O(b).
Count s_count_sum_form(std::int64_t a, std::int64_t b);

/// S(a,b) by the parity-split closed form in d = b - 2a. O(1).
Count s_count_closed(std::int64_t a, std::int64_t b);
Wide s_count_closed_wide(std::int64_t a, std::int64_t b);

/// binom(m+2,3) + binom(n-m+2,3): nondecreasing triples inside two classes of
/// sizes m and n-m.
Count g_n(std::int64_t n, std::int64_t m);

// Per-type monochromatic counts for a coloring of [1-t, N] whose nonpositive
// classes have sizes s0, s1 and whose positive part has q elements of color 0.
Count qqq_count(std::int64_t s0, std::int64_t s1);
Count qqp_count(std::int64_t s0, std::int64_t s1, std::int64_t q, std::int64_t N);
Count qpp_count(std::int64_t a, std::int64_t t, std::int64_t eps, std::int64_t q, std::int64_t N);

/// G_{t,N,a,eps}(q): the solution count of the coloring built from p with a
/// two-block positive part. Total on 0 <= q <= N.
Count g_of(const ReductionParams& p);
Wide g_of_wide(const ReductionParams& p);

/// Every G value for fixed (t, N), q over [0, N].
class GValueTable {
 public:
  static GValueTable build(std::int64_t t, std::int64_t N);

  std::int64_t t() const { return t_; }
  std::int64_t N() const { return N_; }
  Count at(std::int64_t a, std::int64_t eps, std::int64_t q) const;

 private:
  GValueTable(std::int64_t t, std::int64_t N) : t_(t), N_(N) {}
  std::size_t index(std::int64_t a, std::int64_t eps, std::int64_t q) const;

  std::int64_t t_;
  std::int64_t N_;
  std::vector<Count> values_;
};

}  // namespace schur
