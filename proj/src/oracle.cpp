#include "schur/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include "schur/counter.hpp"
#include "schur/solver.hpp"

namespace schur {

namespace {

constexpr std::int64_t kMaxCap = 40;

void check_cap(const Interval& iv, const OracleOptions& opts) {
  if (opts.cap < 0 || opts.cap > kMaxCap) {
    throw InputError("oracle cap must lie in [0, " + std::to_string(kMaxCap) + "]");
  }
  if (iv.length() > opts.cap) {
    throw OracleCapError("interval length " + std::to_string(iv.length()) +
                         " exceeds oracle cap " + std::to_string(opts.cap));
  }
}

// Reusable buffers for counting one mask at a time.
class MaskCounter {
 public:
  explicit MaskCounter(Interval iv)
      : lo_(iv.lo), len_(static_cast<int>(iv.length())), zero_(len_), one_(len_) {}

  Count operator()(std::uint64_t mask) {
    std::size_t nz = 0, no = 0;
    for (int i = 0; i < len_; ++i) {
      if ((mask >> i) & 1U) {
        one_[no++] = lo_ + i;
      } else {
        zero_[nz++] = lo_ + i;
      }
    }
    return count_class_solutions_fast({zero_.data(), nz}) +
           count_class_solutions_fast({one_.data(), no});
  }

 private:
  std::int64_t lo_;
  int len_;
  std::vector<std::int64_t> zero_;
  std::vector<std::int64_t> one_;
};

struct Partial {
  Count minimum = -1;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> samples;
};

Partial scan_block(Interval iv, std::uint64_t begin, std::uint64_t end, int shift,
                   std::size_t sample_cap) {
  MaskCounter counter(iv);
  Partial p;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const std::uint64_t mask = idx << shift;
    const Count v = counter(mask);
    if (p.minimum < 0 || v < p.minimum) {
      p.minimum = v;
      p.count = 0;
      p.samples.clear();
    }
    if (v == p.minimum) {
      ++p.count;
      if (p.samples.size() < sample_cap) p.samples.push_back(mask);
    }
  }
  return p;
}

}  // namespace

std::int64_t oracle_cap_from_env() {
  const char* raw = std::getenv("SCHUR_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > kMaxCap) {
    throw InputError(std::string("SCHUR_ORACLE_CAP must be an integer in [0, 40], got '") + raw +
                     "'");
  }
  return v;
}

OracleResult oracle_minimum(Interval interval, const OracleOptions& opts) {
  check_cap(interval, opts);
  const auto len = interval.length();
  OracleResult result;
  result.interval = interval;

  if (len == 0) {
    result.minimum = 0;
    result.minimizer_count = 1;
    result.colorings_scanned = 1;
    if (opts.sample_cap > 0) result.sample_minimizers.push_back(coloring_from_mask(interval, 0));
    return result;
  }

  // complement invariance: fixing element lo to color 0 loses nothing
  const bool halve = opts.symmetry_halving;
  const int shift = halve ? 1 : 0;
  const std::uint64_t total = std::uint64_t{1} << (len - shift);

  const std::uint64_t workers = std::clamp<std::uint64_t>(opts.jobs, 1, total);
  std::vector<Partial> parts(workers);
  auto run = [&](std::uint64_t w) {
    std::uint64_t begin = total / workers * w + std::min(w, total % workers);
    std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
    parts[w] = scan_block(interval, begin, end, shift, opts.sample_cap);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  Count best = -1;
  for (const auto& p : parts) {
    if (best < 0 || p.minimum < best) best = p.minimum;
  }
  result.minimum = best;
  for (const auto& p : parts) {
    if (p.minimum != best) continue;
    result.minimizer_count += p.count;
    for (auto mask : p.samples) {
      if (result.sample_minimizers.size() >= opts.sample_cap) break;
      result.sample_minimizers.push_back(coloring_from_mask(interval, mask));
    }
  }
  result.colorings_scanned = total;
  // no coloring equals its complement, so each minimizer has an unscanned twin
  if (halve) result.minimizer_count *= 2;
  return result;
}

Count oracle_fixed_class_size(Interval interval, std::int64_t m, const OracleOptions& opts) {
  check_cap(interval, opts);
  const auto len = interval.length();
  if (m < 0 || m > len) throw InputError("class size m must lie in [0, interval length]");

  // enumerate masks with exactly len - m set bits (color 1) in increasing order
  const auto ones = static_cast<int>(len - m);
  const std::uint64_t limit = std::uint64_t{1} << len;
  MaskCounter counter(interval);
  Count best = -1;
  std::uint64_t mask = ones == 0 ? 0 : (std::uint64_t{1} << ones) - 1;
  while (mask < limit) {
    Count v = counter(mask);
    if (best < 0 || v < best) best = v;
    if (mask == 0) break;
    // next integer with the same popcount
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return best;
}

std::vector<ValidationRecord> cross_validate(IntRange k_range, IntRange n_range,
                                             const ValidationSink& sink,
                                             const OracleOptions& opts,
                                             CertificateSource source) {
  std::vector<ValidationRecord> report;
  if (k_range.empty() || n_range.empty()) return report;
  if (n_range.lo < 1) throw InputError("n must be >= 1");
  if (n_range.hi > opts.cap) {
    throw OracleCapError("n up to " + std::to_string(n_range.hi) + " exceeds oracle cap " +
                         std::to_string(opts.cap));
  }
  if (!source) {
    source = [](std::int64_t k, std::int64_t n) { return multiplicity(k, n); };
  }

  for (std::int64_t k = k_range.lo; k <= k_range.hi; ++k) {
    for (std::int64_t n = n_range.lo; n <= n_range.hi; ++n) {
      const auto start = std::chrono::steady_clock::now();
      const auto cert = source(k, n);
      const auto exhaustive = oracle_minimum(shifted_interval(k, n), opts);
      const auto stop = std::chrono::steady_clock::now();

      ValidationRecord rec;
      rec.k = k;
      rec.n = n;
      rec.reduction_value = cert.value;
      rec.oracle_value = exhaustive.minimum;
      const bool witness_ok = !cert.recount || *cert.recount == cert.value;
      rec.pass = cert.value == exhaustive.minimum && witness_ok;
      rec.millis = std::chrono::duration<double, std::milli>(stop - start).count();
      if (!rec.pass) {
        if (!witness_ok || cert.value < exhaustive.minimum) {
          rec.offending = cert.witness;
        } else if (!exhaustive.sample_minimizers.empty()) {
          rec.offending = exhaustive.sample_minimizers.front();
        }
      }
      if (sink) sink(rec);
      report.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace schur
