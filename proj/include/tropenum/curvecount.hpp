// Floor plans for delta-nodal plane tropical curves of degree d through
// horizontally stretched points: enumeration, multiplicities, and totals,
// plus an independent Caporaso-Harris Severi-degree oracle.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropenum/rational.hpp"

namespace tropenum {

// A point of some divisor usable as a float's alignment target.
struct FloatTarget {
  int divisor;    // degree index of the divisor owning the point
  bool is_float;  // fixed (point-condition) point or another float
  int index;      // index within that divisor's fixed points / floats
  auto operator<=>(const FloatTarget&) const = default;
};

// Divisor D_i carrying k node germs: i - k fixed points, a weight
// assignment on some of them, and k - (weight excess) floats.
struct NodalDivisor {
  int degree;        // i
  int germs;         // k
  int fixed_points;  // i - k
  // (fixed point index, weight >= 2); distinct indices.
  std::vector<std::pair<int, int>> weights;
  // One entry per float: its alignment target in divisor i-1 or i+1.
  std::vector<FloatTarget> floats;
};

struct CurveFloorPlan {
  int degree;
  int delta;
  // (i, k) with strictly decreasing i and k summing to delta.
  std::vector<std::pair<int, int>> index_tuple;
  std::vector<NodalDivisor> nodal;  // same order as index_tuple

  Int multiplicity() const;  // product of squared weights
  std::string serialize() const;
};

// All floor plans for (d, delta). delta = 0 yields the single fully fixed
// plan.
std::vector<CurveFloorPlan> enumerate_floor_plans(int d, int delta);

struct TupleCount {
  std::vector<std::pair<int, int>> index_tuple;
  Int count;  // multiplicity sum over plans with this tuple
};

struct CurveCount {
  Int total;
  std::vector<TupleCount> breakdown;
};

// Severi-degree count of delta-nodal degree-d curves, with per-index-tuple
// breakdown.
CurveCount count_curves(int d, int delta);

// Independent oracle: the Caporaso-Harris recursion on tangency sequences.
Int caporaso_harris(int d, int delta);

}  // namespace tropenum
