#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "schur/types.hpp"

namespace schur {

/// Interval longer than the configured oracle cap.
class OracleCapError : public InputError {
 public:
  using InputError::InputError;
};

inline constexpr std::int64_t kDefaultOracleCap = 22;

/// kDefaultOracleCap, or SCHUR_ORACLE_CAP when set to a valid integer.
std::int64_t oracle_cap_from_env();

struct OracleOptions {
  std::int64_t cap = kDefaultOracleCap;
  /// Scan only colorings whose first element has color 0.
  bool symmetry_halving = true;
  unsigned jobs = 1;
  std::size_t sample_cap = 8;
};

struct OracleResult {
  Interval interval;
  Count minimum = 0;
  std::uint64_t minimizer_count = 0;
  /// Lowest minimizers in scan order (coloring integer ascending).
  std::vector<Coloring> sample_minimizers;
  std::uint64_t colorings_scanned = 0;
};

/// Exhaustive minimum of count_solutions over all 2-colorings. Coloring
/// integer bit i is the color of interval.lo + i. The scan range is split into
/// `jobs` contiguous blocks; the merged result is independent of `jobs`.
OracleResult oracle_minimum(Interval interval, const OracleOptions& opts = {});

/// Minimum over colorings with exactly m elements of color 0.
Count oracle_fixed_class_size(Interval interval, std::int64_t m, const OracleOptions& opts = {});

struct ValidationRecord {
  std::int64_t k = 0;
  std::int64_t n = 0;
  Count reduction_value = 0;
  Count oracle_value = 0;
  bool pass = false;
  double millis = 0;
  /// Set on failure: a coloring that contradicts the reduction's claim.
  std::optional<Coloring> offending;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return hi < lo; }
};

/// Produces the certificate checked against the oracle.
using CertificateSource = std::function<MultiplicityCertificate(std::int64_t k, std::int64_t n)>;
using ValidationSink = std::function<void(const ValidationRecord&)>;

/// Compares the solver with the oracle for every (k, n) in the ranges. A pair
/// passes when the values agree and the witness recounts to the claimed value.
/// Throws OracleCapError before doing any work if some n exceeds opts.cap.
std::vector<ValidationRecord> cross_validate(IntRange k_range, IntRange n_range,
                                             const ValidationSink& sink = {},
                                             const OracleOptions& opts = {},
                                             CertificateSource source = {});

}  // namespace schur
