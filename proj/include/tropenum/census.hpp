// Asymptotic floor-plan censuses for multinodal surfaces.
//
// Three layers: per-germ multiplicities and floor-plan products, the
// artificial census polynomial A_delta(d) obtained by summing per-floor
// contribution counts over weakly decreasing floor tuples, and the
// degree-d binodal contribution polynomials with a brute-force vs
// closed-form reconciliation report.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropenum/rational.hpp"
#include "tropenum/unipoly.hpp"

namespace tropenum {

// ---------------------------------------------------------------------------
// Germ multiplicities
// ---------------------------------------------------------------------------

enum class GermKind {
  Parallelogram,
  MidpointWeight2Edge,
  HorizontalEnd2,
  DiagonalEnd2,
  LeftStringEdge,
  LeftStringVertex,
  RightStringEdge,
  RightStringVertex,
  DoubleRightString,
  PairRightStringWeight2Edge,
  PairRightStringParallelogram,
};

enum class GermMode { Separated, Unseparated };

struct GermDescriptor {
  GermKind kind;
  int floor{0};                       // the floor index i the germ lives in
  std::optional<long long> slope_param;  // the edge-slope parameter a
  // Only meaningful for DoubleRightString: whether the left boundary of the
  // string's floor is a vertical edge (changes the multiplicity by one).
  bool vertical_left{false};

  // Some germ shapes force the two nodes they produce into distinct floors.
  GermMode mode() const;
  // How many node germs this descriptor accounts for (1, or 2 for the
  // double-string and paired kinds).
  int germ_count() const;
};

// Multiplicity of a single germ. Throws std::invalid_argument when a needed
// slope parameter is missing or violates the shape's bound (|a| >= 3 for the
// double right string, |a| >= 4 for the paired kinds).
Int germ_multiplicity(const GermDescriptor& g);

// Product of germ multiplicities; the multiplicity of a whole floor plan.
// The germs must account for exactly `delta` nodes (pairs counting two).
Int floor_plan_product(const std::vector<GermDescriptor>& germs, int delta);

// ---------------------------------------------------------------------------
// Artificial census A_delta(d)
// ---------------------------------------------------------------------------

// Exact census of one-germ placements in floor i of a degree-d surface:
// 2 for the bottom floor i=1, 3d^2-7d+4 for the top floor i=d, and
// 12i^2-18i+8 for interior floors.
Int germ_floor_contribution(int i, int d);

struct CensusResult {
  UniPoly polynomial;                                // A_delta as a poly in d
  std::vector<std::pair<int, Rational>> top_terms;   // two leading terms
  std::string validity_note;
};

// A_delta(d) = sum over weakly decreasing floor tuples i_1 >= ... >=
// i_delta >= 2, at most i_1 placed on the top floor, of the product of
// per-floor contributions. Exact polynomial in d; delta must be in 1..4.
CensusResult artificial_census(int delta);

// Leading term of the unseparated-node deficit: the second coefficient of
// the full nodal count, -3*4^delta/delta!, minus A_delta's second
// coefficient. Defined for delta = 2, 3; nullopt for delta = 4, where the
// comparison is vacuous and the bound inconclusive.
std::optional<std::pair<int, Rational>> unseparated_lower_bound(int delta);

// ---------------------------------------------------------------------------
// Binodal contribution polynomials
// ---------------------------------------------------------------------------

struct ConsistencyFlag {
  std::string location;
  std::string reference_value;
  std::string computed_value;
};

struct FamilyContribution {
  std::vector<std::pair<int, Int>> brute_force;  // (d, brute-force value)
  UniPoly closed_form;                           // may depend on parity
  bool match;  // brute force equals closed form at every sampled d
  std::string note;
};

struct ContributionReport {
  std::map<int, FamilyContribution> per_family;  // keys 10, 13, 20
  UniPoly total_even;
  UniPoly total_odd;
  std::vector<ConsistencyFlag> consistency_flags;
};

// Brute-force values of the individual contribution sums at one degree.
Int family10_contribution(int d);
Int family20_contribution(int d);
// Closed-form evaluation only; see ContributionReport for why there is no
// brute-force counterpart.
Int family13_contribution(int d);

// Total binodal contribution at degree d (sum of the three families).
Int binodal_total(int d);

// Reconciles brute-force sums against the closed forms over d = 5..40 and
// assembles the parity-split totals with their consistency flags.
ContributionReport binodal_contribution_report();

}  // namespace tropenum
