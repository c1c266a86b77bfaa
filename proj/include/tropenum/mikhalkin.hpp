// The Mikhalkin point-condition model: lattice order, lattice paths on the
// trivial subdivision of a 3-polytope, and exact feasibility certification of
// a path against marked points on the line λ·(1, η, η²).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropenum/lattice.hpp"
#include "tropenum/linsolve.hpp"
#include "tropenum/rational.hpp"

namespace tropenum {

struct MikhalkinConfig {
  // 0 < η < 1/(max |x+y+z| over the polytope) keeps <.,(1,η,η²)> a total
  // order on the lattice points; the default suffices for every catalog grid.
  Rational eta{1, 1000};
  // Candidate λ values of the marked points, strictly increasing, first = 0.
  std::vector<Rational> lambda_schedule{Rational(0), Rational(1),
                                        Rational(1000000)};
  // "Genericity" realization: a verdict counts as Feasible only if it stays
  // feasible with every λ scaled by 10, this many extra rounds.
  int escalation_rounds{3};

  void validate(const LatticePolytope& p) const;
};

// Sorted ascending by <.,(1,η,η²)> with η infinitesimal — equivalently,
// lexicographically by (x, y, z). Throws on duplicate points.
std::vector<LatticePoint3> mikhalkin_order(std::vector<LatticePoint3> points);

struct LatticePath {
  // Strictly increasing in the Mikhalkin order.
  std::vector<LatticePoint3> points;
  // Indices of "unmarked" segments (segment i joins points[i], points[i+1]).
  // enumerate_paths emits at most one gap; two-gap paths can be built by
  // hand for negative testing.
  std::vector<std::size_t> gap_markers;

  std::size_t segment_count() const { return points.empty() ? 0 : points.size() - 1; }
  bool is_gap(std::size_t segment) const;
  std::string label() const;  // e.g. "A-B|C-D-F" style with coordinates
  bool operator==(const LatticePath&) const = default;
};

struct FeasibilityReport {
  bool feasible{false};
  // Witness for the base schedule: vertex position (3 rationals), the two
  // barycentric coefficients of each marked point (all α > 0), then for each
  // gap its wall-crossing parameter (free sign) followed by two positive
  // cell coefficients and the positive ordering slacks.
  std::optional<std::vector<Rational>> witness;
  std::optional<std::string> obstruction;
};

// All order-respecting paths from the first to the last lattice point whose
// marked segments lie on hull edges, omitting at most `skip` lattice points,
// including disconnected variants with exactly one gap (the gap segment plus
// one omitted point account for the skip budget).
std::vector<LatticePath> enumerate_paths(const LatticePolytope& p,
                                         std::size_t skip);

// Exact feasibility: unknown surface vertex v ∈ Q³; marked point j at
// parameter λ_j must satisfy λ_j·(1,η,η²) = v + α_{j,1}g_{j,1} + α_{j,2}g_{j,2}
// with α > 0, where the g's generate the dual 2-cone of the path segment
// carrying point j. Feasible only if solvable for every escalation round.
FeasibilityReport path_feasible(const LatticePolytope& p,
                                const LatticePath& path,
                                const MikhalkinConfig& cfg = {});

struct PathVerdict {
  LatticePath path;
  FeasibilityReport report;
};

// enumerate_paths filtered by path_feasible; all verdicts returned.
std::vector<PathVerdict> feasible_path_census(const LatticePolytope& p,
                                              std::size_t skip,
                                              const MikhalkinConfig& cfg = {});

// Letter rendering relative to p's Mikhalkin-ordered lattice points:
// A for the first point, B for the second, ...; gaps shown as '|'
// (e.g. "A-B|C-D-F").
std::string path_label(const LatticePolytope& p, const LatticePath& path);

}  // namespace tropenum
