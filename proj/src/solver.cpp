#include "schur/solver.hpp"

#include <algorithm>
#include <thread>
#include <tuple>
#include <vector>

#include "schur/counter.hpp"
#include "schur/formulas.hpp"
#include "schur/oracle.hpp"

namespace schur {

namespace {

void require_n(std::int64_t n) {
  if (n < 1) throw InputError("n must be >= 1");
}

MultiplicityCertificate finish(std::int64_t k, std::int64_t n, Count value, Regime regime,
                               Minimizer minimizer, const SolveOptions& opts) {
  MultiplicityCertificate cert;
  cert.k = k;
  cert.n = n;
  cert.value = value;
  cert.regime = regime;
  cert.minimizer = minimizer;
  cert.witness = build_extremal(k, n, minimizer);
  if (opts.recount) cert.recount = count_solutions(cert.witness).total;
  return cert;
}

// (value, eps, a, q), ordered so that std::min picks the reported minimizer
using ScanKey = std::tuple<Wide, std::int64_t, std::int64_t, std::int64_t>;

ScanKey scan_q_range(std::int64_t t, std::int64_t N, std::int64_t q_lo, std::int64_t q_hi) {
  ScanKey best{-1, 0, 0, 0};
  bool have = false;
  for (std::int64_t eps = 0; eps <= 1; ++eps) {
    for (std::int64_t a = 0; a < t; ++a) {
      for (std::int64_t q = q_lo; q < q_hi; ++q) {
        ScanKey key{g_of_wide(ReductionParams{t, N, a, eps, q}), eps, a, q};
        if (!have || key < best) {
          best = key;
          have = true;
        }
      }
    }
  }
  return best;
}

Coloring fill_blocks(Interval iv, std::int64_t zeros_first) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(iv.length()), 1);
  std::fill_n(bits.begin(), zeros_first, 0);
  return make_coloring(iv, std::move(bits));
}

Coloring block_coloring(std::int64_t t, std::int64_t N, const BlockChoice& b) {
  // [1-t, -1]: a zeros first; 0: color !eps; [1, N]: q zeros first
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(t + N), 1);
  auto it = bits.begin();
  std::fill_n(it, b.a, 0);
  it += t - 1;
  *it = b.eps == 1 ? 0 : 1;
  ++it;
  std::fill_n(it, b.q, 0);
  return make_coloring(Interval{1 - t, N}, std::move(bits));
}

MultiplicityCertificate multiplicity_unproven(std::int64_t n, const SolveOptions& opts) {
  const std::int64_t N = n - 1;
  BlockChoice best{};
  Count best_value = -1;
  for (std::int64_t eps = 0; eps <= 1; ++eps) {
    for (std::int64_t q = 0; 2 * q <= N; ++q) {
      BlockChoice b{eps, 0, q};
      Count v = count_solutions(block_coloring(1, N, b)).total;
      if (best_value < 0 || v < best_value) {
        best_value = v;
        best = b;
      }
    }
  }

  if (n <= opts.unproven_oracle_limit) {
    OracleOptions oo;
    oo.cap = std::max<std::int64_t>(oo.cap, n);
    auto exhaustive = oracle_minimum(shifted_interval(-1, n), oo);
    if (exhaustive.minimum < best_value) {
      // the two-block search missed; fall back to an exhaustive minimizer
      MultiplicityCertificate cert;
      cert.k = -1;
      cert.n = n;
      cert.value = exhaustive.minimum;
      cert.regime = Regime::Unproven;
      cert.witness = exhaustive.sample_minimizers.front();
      auto bits = cert.witness.bits();
      std::int64_t q = std::count(bits.begin() + 1, bits.end(), 0);
      cert.minimizer = BlockChoice{bits[0] == 0 ? 1 : 0, 0, q};
      if (opts.recount) cert.recount = count_solutions(cert.witness).total;
      return cert;
    }
  }
  return finish(-1, n, best_value, Regime::Unproven, best, opts);
}

}  // namespace

Regime regime_for(std::int64_t k, std::int64_t n) {
  require_n(n);
  if (k >= 0) return Regime::NonnegativeK;
  if (k == -1) return Regime::Unproven;
  return n <= -k ? Regime::NonpositiveBlock : Regime::Mixed;
}

MultiplicityCertificate multiplicity_nonneg(std::int64_t k, std::int64_t n,
                                            const SolveOptions& opts) {
  if (k < 0) throw InputError("multiplicity_nonneg requires k >= 0");
  require_n(n);
  Wide best = -1;
  std::int64_t best_m = 0;
  for (std::int64_t m = 0; 2 * m <= n; ++m) {
    Wide v = checked::add(s_count_closed_wide(k + 1, k + m), s_count_closed_wide(k + m + 1, k + n));
    if (best < 0 || v < best) {
      best = v;
      best_m = m;
    }
  }
  return finish(k, n, checked::narrow(best), Regime::NonnegativeK, ClassSizeChoice{best_m}, opts);
}

MultiplicityCertificate multiplicity_nonpositive(std::int64_t t, std::int64_t n,
                                                 const SolveOptions& opts) {
  if (t < 2) throw InputError("multiplicity_nonpositive requires t >= 2");
  if (n < 1 || n > t) throw InputError("multiplicity_nonpositive requires 1 <= n <= t");
  const std::int64_t lo = n / 2;
  const std::int64_t hi = n - lo;
  Count value = checked::narrow(binom_wide(lo + 2, 3) + binom_wide(hi + 2, 3) - (n == t ? 1 : 0));
  return finish(-t, n, value, Regime::NonpositiveBlock, ClassSizeChoice{lo}, opts);
}

MultiplicityCertificate multiplicity_mixed(std::int64_t t, std::int64_t n,
                                           const SolveOptions& opts) {
  if (t < 2) throw InputError("multiplicity_mixed requires t >= 2");
  if (n < t + 1) throw InputError("multiplicity_mixed requires n >= t + 1");
  const std::int64_t N = n - t;
  const std::int64_t q_end = N / 2 + 1;

  const auto workers =
      static_cast<std::int64_t>(std::clamp<std::int64_t>(opts.jobs, 1, q_end));
  std::vector<ScanKey> partial(static_cast<std::size_t>(workers));
  auto chunk = [&](std::int64_t w) {
    std::int64_t lo = q_end * w / workers;
    std::int64_t hi = q_end * (w + 1) / workers;
    partial[static_cast<std::size_t>(w)] = scan_q_range(t, N, lo, hi);
  };
  if (workers == 1) {
    chunk(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::int64_t w = 0; w < workers; ++w) threads.emplace_back(chunk, w);
  }
  ScanKey best = *std::min_element(partial.begin(), partial.end());

  auto [value, eps, a, q] = best;
  return finish(-t, n, checked::narrow(value), Regime::Mixed, BlockChoice{eps, a, q}, opts);
}

MultiplicityCertificate multiplicity(std::int64_t k, std::int64_t n, const SolveOptions& opts) {
  switch (regime_for(k, n)) {
    case Regime::NonnegativeK:
      return multiplicity_nonneg(k, n, opts);
    case Regime::NonpositiveBlock:
      return multiplicity_nonpositive(-k, n, opts);
    case Regime::Mixed:
      return multiplicity_mixed(-k, n, opts);
    case Regime::Unproven:
      break;
  }
  return multiplicity_unproven(n, opts);
}

Coloring build_extremal(std::int64_t k, std::int64_t n, const Minimizer& minimizer) {
  const Regime regime = regime_for(k, n);
  const Interval iv = shifted_interval(k, n);

  if (regime == Regime::NonnegativeK || regime == Regime::NonpositiveBlock) {
    const auto* choice = std::get_if<ClassSizeChoice>(&minimizer);
    if (choice == nullptr) throw InputError("regime expects a class-size minimizer");
    const std::int64_t limit = regime == Regime::NonnegativeK ? n / 2 : n;
    if (choice->m < 0 || choice->m > limit) throw InputError("class size out of range");
    return fill_blocks(iv, choice->m);
  }

  const auto* choice = std::get_if<BlockChoice>(&minimizer);
  if (choice == nullptr) throw InputError("regime expects an (eps, a, q) minimizer");
  const std::int64_t t = -k;
  const std::int64_t N = n - t;
  if (choice->eps != 0 && choice->eps != 1) throw InputError("eps must be 0 or 1");
  if (choice->a < 0 || choice->a > t - 1) throw InputError("a must lie in [0, t-1]");
  if (choice->q < 0 || 2 * choice->q > N) throw InputError("q must lie in [0, floor(N/2)]");
  return block_coloring(t, N, *choice);
}

bool certified(const MultiplicityCertificate& cert) {
  return cert.recount.has_value() && *cert.recount == cert.value;
}

}  // namespace schur
