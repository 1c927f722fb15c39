#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schur/types.hpp"

namespace schur {

/// A triple with x1 <= x2 <= x3 and x1 + x2 < x3.
struct SolutionTriple {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;
  std::int64_t x3 = 0;

  friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
  friend auto operator<=>(const SolutionTriple&, const SolutionTriple&) = default;
};

/// Nondecreasing triples drawn from one color class that satisfy x1 + x2 < x3.
/// Reference kernel: for each pair (x1, x2), binary search for the first
/// element exceeding x1 + x2. O(m^2 log m). Throws InputError unless the input
/// is strictly increasing.
Count count_class_solutions(std::span<const std::int64_t> elements);

/// Same count with a sliding pointer over x3 instead of a search. O(m^2).
/// Expects strictly increasing input; does not check.
Count count_class_solutions_fast(std::span<const std::int64_t> elements);

/// Per-type split of count_class_solutions (Q = nonpositive, P = positive).
SolutionBreakdown count_class_breakdown(std::span<const std::int64_t> elements);

/// s(c): all monochromatic solutions of the coloring, split by type.
SolutionBreakdown count_solutions(const Coloring& c);

/// The first `limit` monochromatic solutions in lexicographic order.
std::vector<SolutionTriple> list_solutions(const Coloring& c, std::size_t limit);

}  // namespace schur
