#pragma once

#include <cstdint>

#include "schur/types.hpp"

namespace schur {

struct SolveOptions {
  /// Recount the witness with the direct counter (O(n^2)).
  bool recount = true;
  /// Workers for the (eps, a, q) scan; the result does not depend on this.
  unsigned jobs = 1;
  /// k = -1 only: n up to this length is settled by exhaustive search.
  std::int64_t unproven_oracle_limit = 16;
};

/// k >= 0: minimum over m <= n/2 of S(k+1,k+m) + S(k+m+1,k+n); the witness is
/// the two-block coloring with color 0 on [k+1, k+m].
MultiplicityCertificate multiplicity_nonneg(std::int64_t k, std::int64_t n,
                                            const SolveOptions& opts = {});

/// k = -t with t >= 2 and 1 <= n <= t: every nondecreasing triple of negatives
/// is a solution, so only the class sizes matter.
MultiplicityCertificate multiplicity_nonpositive(std::int64_t t, std::int64_t n,
                                                 const SolveOptions& opts = {});

/// k = -t with t >= 2 and n >= t+1: full scan of G over eps, a, and
/// q <= floor(N/2). Ties go to the lexicographically least (eps, a, q).
MultiplicityCertificate multiplicity_mixed(std::int64_t t, std::int64_t n,
                                           const SolveOptions& opts = {});

/// M_k(n) for any k and n >= 1. k = -1 has no closed treatment; it is answered
/// by exhaustive search (small n) or a two-block search recounted with the
/// direct counter, and tagged Regime::Unproven.
MultiplicityCertificate multiplicity(std::int64_t k, std::int64_t n, const SolveOptions& opts = {});

/// Regime of (k, n) without solving.
Regime regime_for(std::int64_t k, std::int64_t n);

/// The witness coloring of [k+1, k+n] for a minimizer of the regime's shape.
Coloring build_extremal(std::int64_t k, std::int64_t n, const Minimizer& minimizer);

/// recount present and equal to value.
bool certified(const MultiplicityCertificate& cert);

}  // namespace schur
