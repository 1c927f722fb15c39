#include "schur/types.hpp"

#include <algorithm>
#include <array>

namespace schur {

std::string to_string(Wide w) {
  if (w == 0) return "0";
  bool neg = w < 0;
  // unsigned so that the most negative value is representable
  __extension__ unsigned __int128 u = neg ? -static_cast<unsigned __int128>(w) : w;
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

int Coloring::color_of(std::int64_t x) const {
  if (!interval_.contains(x)) {
    throw InputError("integer " + std::to_string(x) + " outside coloring interval");
  }
  return bits_[static_cast<std::size_t>(x - interval_.lo)];
}

std::int64_t Coloring::class_size(int color) const {
  return std::count(bits_.begin(), bits_.end(), static_cast<std::uint8_t>(color));
}

std::vector<std::int64_t> Coloring::elements(int color) const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] == color) out.push_back(interval_.lo + static_cast<std::int64_t>(i));
  }
  return out;
}

Coloring Coloring::complement() const {
  std::vector<std::uint8_t> flipped(bits_.size());
  std::transform(bits_.begin(), bits_.end(), flipped.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>(1 - b); });
  return Coloring(interval_, std::move(flipped));
}

std::string Coloring::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

Coloring make_coloring(Interval interval, std::vector<std::uint8_t> bits) {
  if (static_cast<std::int64_t>(bits.size()) != interval.length()) {
    throw InputError("coloring has " + std::to_string(bits.size()) + " bits but interval [" +
                     std::to_string(interval.lo) + "," + std::to_string(interval.hi) + "] has " +
                     std::to_string(interval.length()) + " elements");
  }
  if (std::any_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b > 1; })) {
    throw InputError("coloring bits must be 0 or 1");
  }
  return Coloring(interval, std::move(bits));
}

Coloring make_coloring(Interval interval, std::string_view bits) {
  std::vector<std::uint8_t> v;
  v.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw InputError(std::string("invalid coloring character '") + ch + "'");
    }
    v.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return make_coloring(interval, std::move(v));
}

Coloring coloring_from_mask(Interval interval, std::uint64_t mask) {
  auto len = interval.length();
  if (len > 64) throw InputError("mask colorings are limited to 64 elements");
  std::vector<std::uint8_t> v(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
  return make_coloring(interval, std::move(v));
}

ReductionParams make_params(std::int64_t t, std::int64_t N, std::int64_t a, std::int64_t eps,
                            std::int64_t q) {
  if (t < 2) throw InputError("t must be >= 2");
  if (N < 1) throw InputError("N must be >= 1");
  if (a < 0 || a > t - 1) throw InputError("a must lie in [0, t-1]");
  if (eps != 0 && eps != 1) throw InputError("eps must be 0 or 1");
  if (q < 0 || q > N) throw InputError("q must lie in [0, N]");
  return ReductionParams{t, N, a, eps, q};
}

ReductionParams extract_params(const Coloring& c, std::int64_t t, std::int64_t N) {
  if (t < 2 || N < 1) throw InputError("extract_params requires t >= 2 and N >= 1");
  if (c.interval() != Interval{1 - t, N}) {
    throw InputError("coloring interval does not match [1-t, N]");
  }
  auto bits = c.bits();
  auto at = [&](std::int64_t x) { return bits[static_cast<std::size_t>(x - (1 - t))]; };
  std::int64_t a = 0;
  for (std::int64_t x = 1 - t; x <= -1; ++x) a += at(x) == 0;
  std::int64_t q = 0;
  for (std::int64_t x = 1; x <= N; ++x) q += at(x) == 0;
  std::int64_t eps = at(0) == 0 ? 1 : 0;
  return ReductionParams{t, N, a, eps, q};
}

namespace {
constexpr std::array<std::string_view, 4> kRegimeNames = {"nonnegative-k", "nonpositive-block",
                                                          "mixed", "unproven"};
}

std::string_view regime_name(Regime r) { return kRegimeNames[static_cast<std::size_t>(r)]; }

Regime parse_regime(std::string_view name) {
  for (std::size_t i = 0; i < kRegimeNames.size(); ++i) {
    if (kRegimeNames[i] == name) return static_cast<Regime>(i);
  }
  throw InputError("unknown regime '" + std::string(name) + "'");
}

}  // namespace schur
