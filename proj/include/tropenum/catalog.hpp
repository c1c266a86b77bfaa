// The binodal-polytope family database: parameterized 6-point width-1
// polytope families, binodality status, degree and path-multiplicity
// formulas, the tabulated family-8 degrees, and the placements of the
// contributing families inside a dilated standard simplex.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropenum/lattice.hpp"
#include "tropenum/rational.hpp"

namespace tropenum {

enum class Binodality { Binodal, NotBinodal };

struct FamilyParams {
  std::int64_t a{0}, b{0}, c{0}, d{0};
};

struct FamilyInstance {
  int family_id;
  FamilyParams params;
  LatticePolytope polytope;
  Binodality status;
  std::size_t lattice_point_count;
  std::int64_t width;
};

// {1, 8, 9, 10, 13, 14, 15, 16, 17, 20, 21}
const std::vector<int>& catalog_family_ids();

// Builds the family polytope after validating the family's parameter
// constraints; throws std::invalid_argument naming the violated condition.
FamilyInstance instantiate(int family_id, const FamilyParams& params);

// Thrown where a family has no closed-form degree (family 8: see the
// fixture table instead).
struct NoFormulaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degree of the binodal variety. Requires status Binodal.
Int binodal_degree(const FamilyInstance& instance);

// Per-path multiplicities; sums to binodal_degree. Requires status Binodal.
std::vector<Int> path_multiplicities(const FamilyInstance& instance);

struct Family8Entry {
  Int degree;
  std::vector<Int> split;
};

// Tabulated degree + multiplicity split for family 8, or nullopt for
// parameter pairs outside the computed table.
std::optional<Family8Entry> family8_fixture(std::int64_t a, std::int64_t b);

struct Placement {
  int family_id;
  int variant;
  std::int64_t d, f, y, a;
  LatticePolytope polytope;
  std::vector<LatticePoint3> path;  // the 4 marked lattice points
  Int multiplicity;
};

// Every way a binodal polytope of the given family (10, 13 or 20) sits in
// d*Delta_3 for a surface through points in Mikhalkin position; empty when
// d is below the family's threshold.
std::vector<Placement> placements(int family_id, std::int64_t d);

// Directory holding the JSON fixture files: $TROPENUM_FIXTURES if set,
// otherwise the build-time source fixtures path.
std::string fixtures_dir();

}  // namespace tropenum
