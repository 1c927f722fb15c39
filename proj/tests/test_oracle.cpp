#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "brute.hpp"
#include "schur/counter.hpp"
#include "schur/formulas.hpp"
#include "schur/oracle.hpp"
#include "schur/solver.hpp"

using namespace schur;

namespace {

std::uint64_t brute_minimizer_count(std::int64_t lo, int len) {
  const auto best = brute::minimum(lo, len);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::vector<int> colors(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) colors[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
    count += brute::count(lo, colors).total == best;
  }
  return count;
}

}  // namespace

TEST_CASE("oracle_minimum examples") {
  OracleOptions full;
  full.symmetry_halving = false;

  auto r = oracle_minimum(Interval{-1, 1});
  CHECK(r.minimum == 2);
  CHECK(r.colorings_scanned == 4);
  CHECK(oracle_minimum(Interval{-1, 1}, full).colorings_scanned == 8);
  CHECK(oracle_minimum(Interval{-1, 1}, full).minimum == 2);

  CHECK(oracle_minimum(Interval{1, 2}).minimum == 0);
  CHECK(oracle_minimum(Interval{1, 2}).minimizer_count == 4);

  auto pair = oracle_minimum(Interval{-1, 0});
  CHECK(pair.minimum == 1);
  CHECK(pair.minimizer_count == 2);

  auto empty = oracle_minimum(Interval{0, -1});
  CHECK(empty.minimum == 0);
  CHECK(empty.colorings_scanned == 1);
}

TEST_CASE("oracle minimizers recount to the minimum and are counted exactly") {
  for (std::int64_t lo = -6; lo <= 3; ++lo)
    for (int len = 1; len <= 10; ++len) {
      OracleOptions oo;
      oo.sample_cap = 1000;
      auto r = oracle_minimum(Interval{lo, lo + len - 1}, oo);
      REQUIRE(r.minimum == brute::minimum(lo, len));
      REQUIRE(r.minimizer_count == brute_minimizer_count(lo, len));
      for (const auto& c : r.sample_minimizers) REQUIRE(count_solutions(c).total == r.minimum);
      REQUIRE(r.sample_minimizers.size() * 2 == r.minimizer_count);
    }
}

TEST_CASE("symmetry halving never changes the minimum") {
  for (std::int64_t lo = -8; lo <= 4; ++lo)
    for (std::int64_t len = 0; len <= 12; ++len) {
      OracleOptions half, full;
      full.symmetry_halving = false;
      const Interval iv{lo, lo + len - 1};
      auto h = oracle_minimum(iv, half);
      auto f = oracle_minimum(iv, full);
      REQUIRE(h.minimum == f.minimum);
      REQUIRE(h.minimizer_count == f.minimizer_count);
      if (len > 0) REQUIRE(f.colorings_scanned == 2 * h.colorings_scanned);
    }
}

TEST_CASE("partitioned scans merge to identical results") {
  for (auto iv : {Interval{-3, 10}, Interval{1, 14}, Interval{-5, 7}, Interval{-1, 1}}) {
    for (bool halve : {true, false}) {
      OracleOptions base;
      base.symmetry_halving = halve;
      base.sample_cap = 5;
      auto ref = oracle_minimum(iv, base);
      for (unsigned jobs : {2U, 3U, 4U, 9U, 1000U}) {
        OracleOptions par = base;
        par.jobs = jobs;
        auto got = oracle_minimum(iv, par);
        CHECK(got.minimum == ref.minimum);
        CHECK(got.minimizer_count == ref.minimizer_count);
        CHECK(got.colorings_scanned == ref.colorings_scanned);
        CHECK(got.sample_minimizers == ref.sample_minimizers);
      }
    }
  }
}

TEST_CASE("oracle refuses intervals beyond the cap") {
  OracleOptions oo;
  oo.cap = 5;
  CHECK_THROWS_AS(oracle_minimum(Interval{1, 6}, oo), OracleCapError);
  CHECK_NOTHROW(oracle_minimum(Interval{1, 5}, oo));
  CHECK_THROWS_AS(oracle_fixed_class_size(Interval{1, 6}, 2, oo), OracleCapError);
  CHECK_THROWS_AS(oracle_minimum(Interval{1, 23}), OracleCapError);
  oo.cap = 41;
  CHECK_THROWS_AS(oracle_minimum(Interval{1, 2}, oo), InputError);
}

TEST_CASE("oracle cap from the environment") {
  ::unsetenv("SCHUR_ORACLE_CAP");
  CHECK(oracle_cap_from_env() == kDefaultOracleCap);
  ::setenv("SCHUR_ORACLE_CAP", "12", 1);
  CHECK(oracle_cap_from_env() == 12);
  ::setenv("SCHUR_ORACLE_CAP", "abc", 1);
  CHECK_THROWS_AS(oracle_cap_from_env(), InputError);
  ::setenv("SCHUR_ORACLE_CAP", "99", 1);
  CHECK_THROWS_AS(oracle_cap_from_env(), InputError);
  ::unsetenv("SCHUR_ORACLE_CAP");
}

TEST_CASE("oracle_fixed_class_size") {
  CHECK(oracle_fixed_class_size(Interval{1, 6}, 2) == 0);
  CHECK(oracle_fixed_class_size(Interval{-1, 1}, 1) == 2);
  for (std::int64_t n = 1; n <= 12; ++n) {
    CHECK(oracle_fixed_class_size(Interval{1, n}, 0) == s_count_closed(1, n));
    CHECK(oracle_fixed_class_size(Interval{1, n}, n) == s_count_closed(1, n));
  }
  for (int len = 1; len <= 9; ++len)
    for (int m = 0; m <= len; ++m)
      REQUIRE(oracle_fixed_class_size(Interval{-3, -3 + len - 1}, m) == brute::minimum(-3, len, m));
  CHECK_THROWS_AS(oracle_fixed_class_size(Interval{1, 4}, 5), InputError);
  CHECK_THROWS_AS(oracle_fixed_class_size(Interval{1, 4}, -1), InputError);
}

TEST_CASE("fixed class size on [1, n] reproduces the two-block value for n <= 16") {
  for (std::int64_t n = 1; n <= 16; ++n)
    for (std::int64_t m = 0; 2 * m <= n; ++m)
      REQUIRE(oracle_fixed_class_size(Interval{1, n}, m) ==
              s_count_closed(1, m) + s_count_closed(m + 1, n));
}

TEST_CASE("cross_validate") {
  std::vector<ValidationRecord> seen;
  auto report = cross_validate({-3, -3}, {1, 3}, [&](const ValidationRecord& r) { seen.push_back(r); });
  REQUIRE(report.size() == 3);
  CHECK(seen.size() == 3);
  for (const auto& r : report) {
    CHECK(r.pass);
    CHECK(r.k == -3);
    CHECK(r.reduction_value == r.oracle_value);
    CHECK_FALSE(r.offending.has_value());
    CHECK(r.millis >= 0);
  }

  CHECK(cross_validate({1, 0}, {1, 5}).empty());
  CHECK(cross_validate({0, 2}, {3, 2}).empty());

  auto wide = cross_validate({-4, 2}, {1, 12});
  CHECK(wide.size() == 7 * 12);
  for (const auto& r : wide) CHECK(r.pass);

  OracleOptions small;
  small.cap = 6;
  CHECK_THROWS_AS(cross_validate({0, 0}, {1, 7}, {}, small), OracleCapError);
}

TEST_CASE("cross_validate catches a corrupted solver") {
  // inflated value: the oracle's minimizer is the counterexample
  auto inflated = [](std::int64_t k, std::int64_t n) {
    SolveOptions so;
    so.recount = false;
    auto c = multiplicity(k, n, so);
    if (k == -2 && n == 5) c.value += 1;
    return c;
  };
  auto report = cross_validate({-2, -2}, {1, 6}, {}, {}, inflated);
  for (const auto& r : report) {
    if (r.n == 5) {
      CHECK_FALSE(r.pass);
      REQUIRE(r.offending.has_value());
      CHECK(count_solutions(*r.offending).total == r.oracle_value);
    } else {
      CHECK(r.pass);
    }
  }

  // deflated value with an honest recount: the witness is the counterexample
  auto deflated = [](std::int64_t k, std::int64_t n) {
    auto c = multiplicity(k, n);
    c.value -= 1;
    return c;
  };
  auto bad = cross_validate({-3, -3}, {4, 4}, {}, {}, deflated);
  REQUIRE(bad.size() == 1);
  CHECK_FALSE(bad[0].pass);
  REQUIRE(bad[0].offending.has_value());
  CHECK(count_solutions(*bad[0].offending).total > bad[0].reduction_value);
}
