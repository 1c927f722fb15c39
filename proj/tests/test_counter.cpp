#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brute.hpp"
#include "schur/counter.hpp"
#include "schur/formulas.hpp"

using namespace schur;

namespace {

std::vector<std::int64_t> random_class(std::mt19937_64& rng) {
  std::set<std::int64_t> s;
  const auto size = rng() % 40;
  const auto spread = static_cast<std::int64_t>(rng() % 200) + 1;
  while (s.size() < size) {
    s.insert(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * spread + 1)) -
             spread);
    if (static_cast<std::int64_t>(s.size()) == 2 * spread + 1) break;
  }
  return {s.begin(), s.end()};
}

Coloring random_coloring(std::mt19937_64& rng, std::int64_t max_len) {
  const auto len = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_len + 1));
  const std::int64_t lo = -static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(len + 1));
  return coloring_from_mask(Interval{lo, lo + len - 1}, rng());
}

}  // namespace

TEST_CASE("count_solutions examples") {
  auto all_zero = count_solutions(make_coloring(Interval{-1, 1}, "000"));
  CHECK(all_zero.total == 7);

  auto split = count_solutions(make_coloring(Interval{-1, 1}, "011"));
  CHECK(split.total == 2);
  CHECK(split.qqq == 1);
  CHECK(split.qqp == 1);
  CHECK(split.ppp == 0);
  CHECK(split.qpp == 0);

  for (auto bits : {"00", "01", "10", "11"}) {
    CHECK(count_solutions(make_coloring(Interval{1, 2}, bits)).total == 0);
  }
  CHECK(count_solutions(make_coloring(Interval{0, -1}, "")).total == 0);
}

TEST_CASE("count_class_solutions") {
  std::vector<std::int64_t> full{1, 2, 3, 4};
  CHECK(count_class_solutions(full) == 3);
  CHECK(count_class_solutions(full) == s_count_closed(1, 4));
  std::vector<std::int64_t> neg{-1};
  CHECK(count_class_solutions(neg) == 1);
  std::vector<std::int64_t> zero{0};
  CHECK(count_class_solutions(zero) == 0);
  CHECK(count_class_solutions(std::vector<std::int64_t>{}) == 0);

  std::vector<std::int64_t> unsorted{1, 3, 2};
  CHECK_THROWS_AS(count_class_solutions(unsorted), InputError);
  std::vector<std::int64_t> repeated{1, 1};
  CHECK_THROWS_AS(count_class_solutions(repeated), InputError);
}

TEST_CASE("two-pointer kernel agrees with the binary-search kernel on 10^4 random classes") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    auto cls = random_class(rng);
    REQUIRE(count_class_solutions_fast(cls) == count_class_solutions(cls));
  }
}

TEST_CASE("breakdown matches per-type enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    auto c = random_coloring(rng, 24);
    auto got = count_solutions(c);
    auto want = brute::count(c);
    REQUIRE(got.total == want.total);
    REQUIRE(got.ppp == want.ppp);
    REQUIRE(got.qqq == want.qqq);
    REQUIRE(got.qqp == want.qqp);
    REQUIRE(got.qpp == want.qpp);
    REQUIRE(got.total == got.ppp + got.qqq + got.qqp + got.qpp);
  }
}

TEST_CASE("breakdown sides vanish away from zero") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto len = static_cast<std::int64_t>(rng() % 25);
    auto pos = count_solutions(coloring_from_mask(Interval{1, len}, rng()));
    CHECK(pos.qqq + pos.qqp + pos.qpp == 0);
    auto nonpos = count_solutions(coloring_from_mask(Interval{-len, 0}, rng()));
    CHECK(nonpos.ppp + nonpos.qqp + nonpos.qpp == 0);
  }
}

TEST_CASE("complement leaves the count unchanged") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    auto c = random_coloring(rng, 40);
    REQUIRE(count_solutions(c).total == count_solutions(c.complement()).total);
  }
}

TEST_CASE("monochromatic positive interval counts S(a,b)") {
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = a; b <= 40; ++b) {
      auto c = make_coloring(Interval{a, b}, std::string(static_cast<std::size_t>(b - a + 1), '1'));
      REQUIRE(count_solutions(c).total == s_count_closed(a, b));
    }
}

TEST_CASE("nonpositive intervals depend only on the class size") {
  std::mt19937_64 rng(23);
  for (std::int64_t t = 2; t <= 10; ++t)
    for (std::int64_t n = 1; n <= t; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        auto c = coloring_from_mask(Interval{1 - t, n - t}, rng());
        REQUIRE(count_solutions(c).total == g_n(n, c.class_size(0)) - (n == t ? 1 : 0));
      }
}

TEST_CASE("list_solutions") {
  auto c = make_coloring(Interval{-1, 1}, "000");
  auto first = list_solutions(c, 2);
  REQUIRE(first.size() == 2);
  CHECK(first[0] == SolutionTriple{-1, -1, -1});
  CHECK(first[1] == SolutionTriple{-1, -1, 0});
  CHECK(list_solutions(c, 0).empty());
  CHECK(list_solutions(make_coloring(Interval{1, 2}, "01"), 10).empty());
}

TEST_CASE("list_solutions enumerates exactly the counted triples in order") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto c = random_coloring(rng, 16);
    auto all = list_solutions(c, 1'000'000);
    CHECK(static_cast<Count>(all.size()) == count_solutions(c).total);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& s : all) {
      CHECK(s.x1 <= s.x2);
      CHECK(s.x2 <= s.x3);
      CHECK(s.x1 + s.x2 < s.x3);
      CHECK(c.color_of(s.x1) == c.color_of(s.x2));
      CHECK(c.color_of(s.x2) == c.color_of(s.x3));
    }
  }
}
