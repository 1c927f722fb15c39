#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schur/checked.hpp"

namespace schur {

/// 1 / (12 (1 + 2 sqrt 2)^2), the leading coefficient of M_k(n) ~ C n^3.
double constant_c();

struct RatioRecord {
  std::int64_t k = 0;
  std::int64_t n = 0;
  Count value = 0;
  /// value / n^3
  double ratio = 0;
  /// |ratio - C| / C
  double deviation = 0;
};

/// Exact M_k(n) for each n (no witness recount), with ratio and deviation.
std::vector<RatioRecord> ratio_table(std::int64_t k, std::span<const std::int64_t> n_values,
                                     unsigned jobs = 1);

/// |M_{-t}(t+N) / N^3 - C| * N for fixed t >= 2; bounded in N when the
/// error term is O(N^2).
struct ScaledError {
  std::int64_t t = 0;
  std::int64_t N = 0;
  Count value = 0;
  double scaled_error = 0;
};

std::vector<ScaledError> scaled_error_profile(std::int64_t t, std::span<const std::int64_t> N_values,
                                              unsigned jobs = 1);

}  // namespace schur
