#include "schur/counter.hpp"

#include <algorithm>

namespace schur {

namespace {

void require_increasing(std::span<const std::int64_t> e) {
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] <= e[i - 1]) throw InputError("class elements must be strictly increasing");
  }
}

}  // namespace

Count count_class_solutions(std::span<const std::int64_t> e) {
  require_increasing(e);
  const auto m = static_cast<std::int64_t>(e.size());
  Count total = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    Count row = 0;
    for (std::int64_t j = i; j < m; ++j) {
      auto first = std::upper_bound(e.begin() + j, e.end(), e[i] + e[j]);
      row += e.end() - first;
    }
    total = checked::add(total, row);
  }
  return total;
}

Count count_class_solutions_fast(std::span<const std::int64_t> e) {
  const auto m = static_cast<std::int64_t>(e.size());
  Count total = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    Count row = 0;
    std::int64_t p = i;
    for (std::int64_t j = i; j < m; ++j) {
      const std::int64_t target = e[i] + e[j];
      if (p < j) p = j;
      while (p < m && e[p] <= target) ++p;
      row += m - p;
    }
    total = checked::add(total, row);
  }
  return total;
}

SolutionBreakdown count_class_breakdown(std::span<const std::int64_t> e) {
  require_increasing(e);
  const auto m = static_cast<std::int64_t>(e.size());
  const auto z = static_cast<std::int64_t>(
      std::upper_bound(e.begin(), e.end(), std::int64_t{0}) - e.begin());
  SolutionBreakdown out;
  for (std::int64_t i = 0; i < m; ++i) {
    Count ppp = 0, qqq = 0, qqp = 0, qpp = 0;
    std::int64_t p = i;
    for (std::int64_t j = i; j < m; ++j) {
      const std::int64_t target = e[i] + e[j];
      if (p < j) p = j;
      while (p < m && e[p] <= target) ++p;
      // x3 ranges over indices [p, m)
      if (i >= z) {
        ppp += m - p;
      } else if (j >= z) {
        qpp += m - p;
      } else {
        qqq += std::max<std::int64_t>(0, z - p);
        qqp += m - std::max(p, z);
      }
    }
    out.ppp = checked::add(out.ppp, ppp);
    out.qqq = checked::add(out.qqq, qqq);
    out.qqp = checked::add(out.qqp, qqp);
    out.qpp = checked::add(out.qpp, qpp);
  }
  out.total = checked::add(checked::add(out.ppp, out.qqq), checked::add(out.qqp, out.qpp));
  return out;
}

SolutionBreakdown count_solutions(const Coloring& c) {
  SolutionBreakdown out;
  for (int color = 0; color <= 1; ++color) {
    auto part = count_class_breakdown(c.elements(color));
    out.ppp = checked::add(out.ppp, part.ppp);
    out.qqq = checked::add(out.qqq, part.qqq);
    out.qqp = checked::add(out.qqp, part.qqp);
    out.qpp = checked::add(out.qpp, part.qpp);
    out.total = checked::add(out.total, part.total);
  }
  return out;
}

std::vector<SolutionTriple> list_solutions(const Coloring& c, std::size_t limit) {
  std::vector<SolutionTriple> out;
  const auto& iv = c.interval();
  auto bits = c.bits();
  auto color = [&](std::int64_t x) { return bits[static_cast<std::size_t>(x - iv.lo)]; };
  for (std::int64_t x1 = iv.lo; x1 <= iv.hi && out.size() < limit; ++x1) {
    for (std::int64_t x2 = x1; x2 <= iv.hi && out.size() < limit; ++x2) {
      if (color(x2) != color(x1)) continue;
      for (std::int64_t x3 = std::max(x2, x1 + x2 + 1); x3 <= iv.hi && out.size() < limit; ++x3) {
        if (color(x3) == color(x1)) out.push_back({x1, x2, x3});
      }
    }
  }
  return out;
}

}  // namespace schur
