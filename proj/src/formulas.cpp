#include "schur/formulas.hpp"

#include <stdexcept>
#include <string>

namespace schur {

namespace {

void require_nonneg(std::int64_t v, const char* what) {
  if (v < 0) throw InputError(std::string(what) + " must be nonnegative");
}

Wide exact_div(Wide num, Wide den) {
  if (num % den != 0) {
    throw std::logic_error("closed form not divisible: " + to_string(num) + " / " +
                           to_string(den));
  }
  return num / den;
}

void check_block_args(std::int64_t q, std::int64_t N) {
  require_nonneg(N, "N");
  if (q < 0 || q > N) throw InputError("q must lie in [0, N]");
}

Wide qqq_wide(std::int64_t s0, std::int64_t s1) {
  require_nonneg(s0, "s0");
  require_nonneg(s1, "s1");
  if (s0 + s1 < 2) throw InputError("s0 + s1 must be >= 2");
  return binom_wide(s0 + 2, 3) + binom_wide(s1 + 2, 3) - 1;
}

Wide qqp_wide(std::int64_t s0, std::int64_t s1, std::int64_t q, std::int64_t N) {
  require_nonneg(s0, "s0");
  require_nonneg(s1, "s1");
  check_block_args(q, N);
  return checked::add(checked::mul(binom_wide(s0 + 1, 2), static_cast<Wide>(q)),
                      checked::mul(binom_wide(s1 + 1, 2), static_cast<Wide>(N - q)));
}

Wide qpp_wide(std::int64_t a, std::int64_t t, std::int64_t eps, std::int64_t q, std::int64_t N) {
  if (a < 0 || a > t - 1) throw InputError("a must lie in [0, t-1]");
  if (eps != 0 && eps != 1) throw InputError("eps must be 0 or 1");
  check_block_args(q, N);
  Wide neg0 = checked::mul(static_cast<Wide>(a), binom_wide(q + 1, 2));
  Wide neg1 = checked::mul(static_cast<Wide>(t - 1 - a), binom_wide(N - q + 1, 2));
  Wide zero = eps == 1 ? binom_wide(q, 2) : binom_wide(N - q, 2);
  return checked::add(checked::add(neg0, neg1), zero);
}

}  // namespace

Wide binom_wide(std::int64_t m, std::int64_t r) {
  require_nonneg(m, "binomial top");
  require_nonneg(r, "binomial bottom");
  if (r > m) return 0;
  if (r > m - r) r = m - r;
  Wide result = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    // result * (m - i) is C(m, i+1) * (i+1), so the division is exact
    result = checked::mul(result, static_cast<Wide>(m - i)) / (i + 1);
  }
  return result;
}

Count binom(std::int64_t m, std::int64_t r) { return checked::narrow(binom_wide(m, r)); }

Count s_count_sum_form(std::int64_t a, std::int64_t b) {
  if (a < 1) throw InputError("S(a,b) requires a >= 1");
  Wide total = 0;
  for (std::int64_t i = a; 2 * i <= b - 1; ++i) {
    total = checked::add(total, binom_wide(b - 2 * i + 1, 2));
  }
  return checked::narrow(total);
}

Wide s_count_closed_wide(std::int64_t a, std::int64_t b) {
  if (a < 1) throw InputError("S(a,b) requires a >= 1");
  Wide d = static_cast<Wide>(b) - 2 * static_cast<Wide>(a);
  if (d <= 0) return 0;
  Wide u = d / 2;
  if (d % 2 == 0) return exact_div(checked::mul(checked::mul(u, u + 1), 4 * u + 5), 6);
  return exact_div(checked::mul(checked::mul(u + 1, u + 2), 4 * u + 3), 6);
}

Count s_count_closed(std::int64_t a, std::int64_t b) {
  return checked::narrow(s_count_closed_wide(a, b));
}

Count g_n(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0 || m > n) throw InputError("g_n requires 0 <= m <= n");
  return checked::narrow(binom_wide(m + 2, 3) + binom_wide(n - m + 2, 3));
}

Count qqq_count(std::int64_t s0, std::int64_t s1) { return checked::narrow(qqq_wide(s0, s1)); }

Count qqp_count(std::int64_t s0, std::int64_t s1, std::int64_t q, std::int64_t N) {
  return checked::narrow(qqp_wide(s0, s1, q, N));
}

Count qpp_count(std::int64_t a, std::int64_t t, std::int64_t eps, std::int64_t q, std::int64_t N) {
  return checked::narrow(qpp_wide(a, t, eps, q, N));
}

Wide g_of_wide(const ReductionParams& p) {
  make_params(p.t, p.N, p.a, p.eps, p.q);
  // S(1,0) and S(N+1,N) are empty-interval zeros
  Wide ppp = checked::add(s_count_closed_wide(1, p.q), s_count_closed_wide(p.q + 1, p.N));
  Wide rest = checked::add(checked::add(qqp_wide(p.s0(), p.s1(), p.q, p.N),
                                        qpp_wide(p.a, p.t, p.eps, p.q, p.N)),
                           qqq_wide(p.s0(), p.s1()));
  return checked::add(ppp, rest);
}

Count g_of(const ReductionParams& p) { return checked::narrow(g_of_wide(p)); }

GValueTable GValueTable::build(std::int64_t t, std::int64_t N) {
  make_params(t, N, 0, 0, 0);
  GValueTable table(t, N);
  table.values_.resize(static_cast<std::size_t>(t * 2 * (N + 1)));
  for (std::int64_t a = 0; a < t; ++a) {
    for (std::int64_t eps = 0; eps <= 1; ++eps) {
      for (std::int64_t q = 0; q <= N; ++q) {
        table.values_[table.index(a, eps, q)] = g_of(ReductionParams{t, N, a, eps, q});
      }
    }
  }
  return table;
}

std::size_t GValueTable::index(std::int64_t a, std::int64_t eps, std::int64_t q) const {
  if (a < 0 || a >= t_ || (eps != 0 && eps != 1) || q < 0 || q > N_) {
    throw InputError("GValueTable index out of range");
  }
  return static_cast<std::size_t>((a * 2 + eps) * (N_ + 1) + q);
}

Count GValueTable::at(std::int64_t a, std::int64_t eps, std::int64_t q) const {
  return values_[index(a, eps, q)];
}

}  // namespace schur
