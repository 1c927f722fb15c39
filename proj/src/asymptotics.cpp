#include "schur/asymptotics.hpp"

#include <cmath>

#include "schur/solver.hpp"

namespace schur {

double constant_c() {
  const long double base = 1.0L + 2.0L * std::sqrt(2.0L);
  return static_cast<double>(1.0L / (12.0L * base * base));
}

namespace {

Count exact_value(std::int64_t k, std::int64_t n, unsigned jobs) {
  SolveOptions opts;
  opts.recount = false;
  opts.jobs = jobs;
  return multiplicity(k, n, opts).value;
}

}  // namespace

std::vector<RatioRecord> ratio_table(std::int64_t k, std::span<const std::int64_t> n_values,
                                     unsigned jobs) {
  const long double c = constant_c();
  std::vector<RatioRecord> rows;
  rows.reserve(n_values.size());
  for (auto n : n_values) {
    RatioRecord r;
    r.k = k;
    r.n = n;
    r.value = exact_value(k, n, jobs);
    const long double cube = static_cast<long double>(n) * n * n;
    const long double ratio = static_cast<long double>(r.value) / cube;
    r.ratio = static_cast<double>(ratio);
    r.deviation = static_cast<double>(std::fabs(ratio - c) / c);
    rows.push_back(r);
  }
  return rows;
}

std::vector<ScaledError> scaled_error_profile(std::int64_t t, std::span<const std::int64_t> N_values,
                                              unsigned jobs) {
  if (t < 2) throw InputError("scaled_error_profile requires t >= 2");
  const long double c = constant_c();
  std::vector<ScaledError> rows;
  for (auto N : N_values) {
    if (N < 1) throw InputError("N must be >= 1");
    ScaledError e;
    e.t = t;
    e.N = N;
    e.value = exact_value(-t, t + N, jobs);
    const long double cube = static_cast<long double>(N) * N * N;
    e.scaled_error = static_cast<double>(std::fabs(e.value / cube - c) * N);
    rows.push_back(e);
  }
  return rows;
}

}  // namespace schur
