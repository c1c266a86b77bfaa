// 3-dimensional lattice polytopes with exact integer arithmetic:
// convex hull structure, lattice-point enumeration, lattice width,
// normal fan (max-convention), and integral unimodular affine equivalence.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropenum/rational.hpp"

namespace tropenum {

struct LatticePoint3 {
  // Coordinates are bounded by small multiples of the polynomial degree d
  // (<= a few hundred for every grid in this project), so 64-bit integers
  // are exact for all hull predicates used here.
  std::int64_t x{0}, y{0}, z{0};

  friend bool operator==(const LatticePoint3&, const LatticePoint3&) = default;
  // Lexicographic order on (x, y, z); this is also the Mikhalkin order.
  friend auto operator<=>(const LatticePoint3&, const LatticePoint3&) = default;

  LatticePoint3 operator-(const LatticePoint3& o) const {
    return {x - o.x, y - o.y, z - o.z};
  }
  LatticePoint3 operator+(const LatticePoint3& o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  std::string str() const;
};

std::int64_t dot(const LatticePoint3& a, const LatticePoint3& b);
LatticePoint3 cross(const LatticePoint3& a, const LatticePoint3& b);
// Divides by the gcd of the coordinates (zero vector unchanged).
LatticePoint3 primitive(const LatticePoint3& v);
bool parallel(const LatticePoint3& a, const LatticePoint3& b);

// A facet-defining inequality <normal, p> <= offset with primitive outer
// normal, plus the indices (into vertices()) of its incident vertices.
struct Facet {
  LatticePoint3 normal;
  std::int64_t offset{0};
  std::vector<std::size_t> vertex_ids;
};

// An edge of the hull: the two endpoint vertex indices and the indices of
// the two facets meeting along it.
struct HullEdge {
  std::size_t v0{0}, v1{0};
  std::size_t f0{0}, f1{0};
};

class LatticePolytope {
 public:
  // Duplicates are removed; the hull is computed eagerly when the point set
  // is 3-dimensional (facet/edge/vertex queries throw otherwise).
  explicit LatticePolytope(std::vector<LatticePoint3> generators);

  const std::vector<LatticePoint3>& generators() const { return generators_; }
  int dimension() const { return dimension_; }

  const std::vector<LatticePoint3>& vertices() const;
  const std::vector<Facet>& facets() const;
  const std::vector<HullEdge>& edges() const;
  bool contains(const LatticePoint3& p) const;
  // All integer points of the hull, lexicographically sorted.
  const std::vector<LatticePoint3>& lattice_points() const;

 private:
  void require_full_dim(const char* op) const;
  std::vector<LatticePoint3> generators_;
  int dimension_{-1};
  std::vector<LatticePoint3> vertices_;
  std::vector<Facet> facets_;
  std::vector<HullEdge> edges_;
  std::vector<LatticePoint3> lattice_points_;
};

// min over primitive integer functionals w of (max<w,.> - min<w,.>).
// Candidate search space: all primitive vectors with coordinates bounded by
// the largest absolute facet-normal coordinate (and at least 1), which
// contains all facet normals and their pairwise sums for this catalog.
std::int64_t lattice_width(const LatticePolytope& p);

struct Cone {
  std::vector<LatticePoint3> generators;  // primitive, pairwise non-parallel
  // Order-insensitive comparison of generator sets.
  bool same_generators(const Cone& o) const;
};

struct NormalFan {
  // vertex_cones[i] is the max-convention normal cone of vertices()[i]:
  // closure of {w : <w,V> >= <w,U> for all lattice points U}, generated by
  // the primitive outer normals of the facets containing V.
  std::vector<Cone> vertex_cones;
  // edge_cones[i] is the common 2-face of the two vertex cones adjacent to
  // edges()[i] (the dual 2-cell of the tropical surface).
  std::vector<Cone> edge_cones;
};

NormalFan normal_fan(const LatticePolytope& p);

struct UnimodularAffineMap {
  std::array<std::array<std::int64_t, 3>, 3> matrix{};
  LatticePoint3 translation;
  LatticePoint3 apply(const LatticePoint3& p) const;
  std::int64_t det() const;
};

// Searches for an integral affine map with |det| = 1 taking p's lattice
// points bijectively onto q's. Returns std::nullopt if none exists.
std::optional<UnimodularAffineMap> iua_equivalent(const LatticePolytope& p,
                                                  const LatticePolytope& q);

}  // namespace tropenum
