#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schur/checked.hpp"

namespace schur {

/// Inclusive integer range [lo, hi]; empty when lo > hi.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  std::int64_t length() const { return hi < lo ? 0 : hi - lo + 1; }
  bool empty() const { return hi < lo; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// [k+1, k+n], the interval on which M_k(n) is defined.
inline Interval shifted_interval(std::int64_t k, std::int64_t n) { return {k + 1, k + n}; }

/// A 2-coloring of an interval. Element interval.lo + i has color bits()[i].
class Coloring {
 public:
  Coloring() = default;

  const Interval& interval() const { return interval_; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::int64_t size() const { return static_cast<std::int64_t>(bits_.size()); }

  /// Color of integer x; x must lie in the interval.
  int color_of(std::int64_t x) const;

  std::int64_t class_size(int color) const;

  /// Elements of one color class in increasing order.
  std::vector<std::int64_t> elements(int color) const;

  Coloring complement() const;

  /// '0'/'1' string, leftmost character = smallest integer.
  std::string str() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  friend Coloring make_coloring(Interval, std::vector<std::uint8_t>);
  Coloring(Interval iv, std::vector<std::uint8_t> bits) : interval_(iv), bits_(std::move(bits)) {}

  Interval interval_{};
  std::vector<std::uint8_t> bits_;
};

/// Throws InputError when bits.size() != interval.length() or a bit is not 0/1.
Coloring make_coloring(Interval interval, std::vector<std::uint8_t> bits);
/// Parses a '0'/'1' string.
Coloring make_coloring(Interval interval, std::string_view bits);
/// Bit i of mask is the color of interval.lo + i; interval length must be <= 64.
Coloring coloring_from_mask(Interval interval, std::uint64_t mask);

inline Coloring complement(const Coloring& c) { return c.complement(); }

/// Monochromatic solution counts split by the sign pattern of (x1, x2, x3),
/// with Q = nonpositive and P = positive.
struct SolutionBreakdown {
  Count ppp = 0;
  Count qqq = 0;
  Count qqp = 0;
  Count qpp = 0;
  Count total = 0;

  friend bool operator==(const SolutionBreakdown&, const SolutionBreakdown&) = default;
};

/// Parameters of a coloring of [1-t, N]: a color-0 negatives, eps = [color of 0 is 0],
/// q color-0 positives. s0/s1 are the nonpositive class sizes.
struct ReductionParams {
  std::int64_t t = 2;
  std::int64_t N = 1;
  std::int64_t a = 0;
  std::int64_t eps = 0;
  std::int64_t q = 0;

  std::int64_t s0() const { return a + eps; }
  std::int64_t s1() const { return t - a - eps; }

  /// q <= floor(N/2): the half of parameter space the minimization scans.
  bool reduced() const { return 2 * q <= N; }

  friend bool operator==(const ReductionParams&, const ReductionParams&) = default;
};

/// Validates t >= 2, N >= 1, 0 <= a <= t-1, eps in {0,1}, 0 <= q <= N.
ReductionParams make_params(std::int64_t t, std::int64_t N, std::int64_t a, std::int64_t eps,
                            std::int64_t q);

/// Reads (a, eps, q) off a coloring of [1-t, N]. q is not folded to N - q.
ReductionParams extract_params(const Coloring& c, std::int64_t t, std::int64_t N);

enum class Regime { NonnegativeK, NonpositiveBlock, Mixed, Unproven };

std::string_view regime_name(Regime r);
Regime parse_regime(std::string_view name);

/// Size of the color-0 class (k >= 0 and 1 <= n <= t regimes).
struct ClassSizeChoice {
  std::int64_t m = 0;
  friend bool operator==(const ClassSizeChoice&, const ClassSizeChoice&) = default;
};

/// (eps, a, q) for intervals that contain 0 and positive integers.
struct BlockChoice {
  std::int64_t eps = 0;
  std::int64_t a = 0;
  std::int64_t q = 0;
  friend bool operator==(const BlockChoice&, const BlockChoice&) = default;
};

using Minimizer = std::variant<ClassSizeChoice, BlockChoice>;

/// A claimed minimum M_k(n) together with a witness coloring. recount is the
/// witness' solution count from the direct counter, absent if skipped.
struct MultiplicityCertificate {
  std::int64_t k = 0;
  std::int64_t n = 1;
  Count value = 0;
  Regime regime = Regime::NonnegativeK;
  Minimizer minimizer = ClassSizeChoice{};
  Coloring witness;
  std::optional<Count> recount;
};

}  // namespace schur
