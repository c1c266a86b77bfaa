#include "tropenum/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tropenum {

std::string LatticePoint3::str() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
         std::to_string(z) + ")";
}

std::int64_t dot(const LatticePoint3& a, const LatticePoint3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

LatticePoint3 cross(const LatticePoint3& a, const LatticePoint3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

LatticePoint3 primitive(const LatticePoint3& v) {
  const std::int64_t g =
      std::gcd(std::gcd(std::abs(v.x), std::abs(v.y)), std::abs(v.z));
  if (g <= 1) return v;
  return {v.x / g, v.y / g, v.z / g};
}

bool parallel(const LatticePoint3& a, const LatticePoint3& b) {
  return cross(a, b) == LatticePoint3{0, 0, 0};
}

namespace {

int affine_dimension(const std::vector<LatticePoint3>& pts) {
  if (pts.empty()) return -1;
  std::vector<LatticePoint3> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  auto nonzero = std::find_if(diffs.begin(), diffs.end(), [](const auto& v) {
    return !(v == LatticePoint3{0, 0, 0});
  });
  if (nonzero == diffs.end()) return 0;
  const LatticePoint3 v1 = *nonzero;
  auto indep = std::find_if(diffs.begin(), diffs.end(),
                            [&](const auto& v) { return !parallel(v1, v); });
  if (indep == diffs.end()) return 1;
  const LatticePoint3 n = cross(v1, *indep);
  for (const auto& v : diffs)
    if (dot(n, v) != 0) return 3;
  return 2;
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<LatticePoint3> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty())
    throw std::invalid_argument("LatticePolytope: empty generator set");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
  dimension_ = affine_dimension(generators_);
  if (dimension_ < 3) return;

  // Exhaustive facet search: every non-collinear point triple spans a
  // candidate plane; it is a facet plane iff all generators lie weakly on
  // one side. Input sizes are tiny, so O(n^4) is fine.
  const std::size_t n = generators_.size();
  std::map<std::pair<std::array<std::int64_t, 3>, std::int64_t>, LatticePoint3>
      seen;
  std::vector<std::pair<LatticePoint3, std::int64_t>> planes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        LatticePoint3 normal = cross(generators_[j] - generators_[i],
                                     generators_[k] - generators_[i]);
        if (normal == LatticePoint3{0, 0, 0}) continue;
        normal = primitive(normal);
        std::int64_t offset = dot(normal, generators_[i]);
        bool all_below = true, all_above = true;
        for (const auto& p : generators_) {
          const std::int64_t v = dot(normal, p);
          all_below = all_below && v <= offset;
          all_above = all_above && v >= offset;
        }
        if (!all_below && !all_above) continue;
        if (!all_below) {
          normal = LatticePoint3{-normal.x, -normal.y, -normal.z};
          offset = -offset;
        }
        const auto key = std::make_pair(
            std::array<std::int64_t, 3>{normal.x, normal.y, normal.z}, offset);
        if (seen.emplace(key, normal).second) planes.emplace_back(normal, offset);
      }

  // Vertices: generators whose incident facet normals span 3-space.
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t f = 0; f < planes.size(); ++f)
    for (std::size_t i = 0; i < n; ++i)
      if (dot(planes[f].first, generators_[i]) == planes[f].second)
        incident[i].push_back(f);
  std::vector<std::size_t> vertex_gen_ids;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<LatticePoint3> normals;
    for (auto f : incident[i]) normals.push_back(planes[f].first);
    if (affine_dimension([&] {
          std::vector<LatticePoint3> pts{{0, 0, 0}};
          pts.insert(pts.end(), normals.begin(), normals.end());
          return pts;
        }()) == 3) {
      vertices_.push_back(generators_[i]);
      vertex_gen_ids.push_back(i);
    }
  }

  for (std::size_t f = 0; f < planes.size(); ++f) {
    Facet facet;
    facet.normal = planes[f].first;
    facet.offset = planes[f].second;
    for (std::size_t vi = 0; vi < vertices_.size(); ++vi)
      if (dot(facet.normal, vertices_[vi]) == facet.offset)
        facet.vertex_ids.push_back(vi);
    facets_.push_back(std::move(facet));
  }

  // Edges: vertex pairs lying on exactly two common facet planes.
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
      std::vector<std::size_t> shared;
      for (std::size_t f = 0; f < facets_.size(); ++f) {
        const auto& ids = facets_[f].vertex_ids;
        if (std::find(ids.begin(), ids.end(), a) != ids.end() &&
            std::find(ids.begin(), ids.end(), b) != ids.end())
          shared.push_back(f);
      }
      if (shared.size() == 2)
        edges_.push_back(HullEdge{a, b, shared[0], shared[1]});
      else if (shared.size() > 2)
        throw std::logic_error("hull edge shared by more than two facets");
    }

  // Lattice points: bounding-box scan with exact facet membership.
  LatticePoint3 lo = generators_[0], hi = generators_[0];
  for (const auto& p : generators_) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  for (std::int64_t x = lo.x; x <= hi.x; ++x)
    for (std::int64_t y = lo.y; y <= hi.y; ++y)
      for (std::int64_t z = lo.z; z <= hi.z; ++z) {
        const LatticePoint3 p{x, y, z};
        if (contains(p)) lattice_points_.push_back(p);
      }
}

void LatticePolytope::require_full_dim(const char* op) const {
  if (dimension_ < 3)
    throw std::invalid_argument(std::string(op) +
                                ": polytope is not 3-dimensional (dimension " +
                                std::to_string(dimension_) + ")");
}

const std::vector<LatticePoint3>& LatticePolytope::vertices() const {
  require_full_dim("vertices");
  return vertices_;
}

const std::vector<Facet>& LatticePolytope::facets() const {
  require_full_dim("facets");
  return facets_;
}

const std::vector<HullEdge>& LatticePolytope::edges() const {
  require_full_dim("edges");
  return edges_;
}

bool LatticePolytope::contains(const LatticePoint3& p) const {
  require_full_dim("contains");
  for (const auto& f : facets_)
    if (dot(f.normal, p) > f.offset) return false;
  return true;
}

const std::vector<LatticePoint3>& LatticePolytope::lattice_points() const {
  require_full_dim("lattice_points");
  return lattice_points_;
}

std::int64_t lattice_width(const LatticePolytope& p) {
  std::int64_t bound = 1;
  for (const auto& f : p.facets())
    bound = std::max({bound, std::abs(f.normal.x), std::abs(f.normal.y),
                      std::abs(f.normal.z)});
  std::int64_t best = -1;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (std::int64_t z = -bound; z <= bound; ++z) {
        const LatticePoint3 w{x, y, z};
        if (w == LatticePoint3{0, 0, 0} || !(primitive(w) == w)) continue;
        std::int64_t mn = dot(w, p.generators()[0]), mx = mn;
        for (const auto& g : p.generators()) {
          const std::int64_t v = dot(w, g);
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
        if (best < 0 || mx - mn < best) best = mx - mn;
      }
  return best;
}

bool Cone::same_generators(const Cone& o) const {
  if (generators.size() != o.generators.size()) return false;
  auto a = generators, b = o.generators;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

NormalFan normal_fan(const LatticePolytope& p) {
  NormalFan fan;
  const auto& facets = p.facets();
  for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
    Cone cone;
    for (const auto& f : facets)
      if (std::find(f.vertex_ids.begin(), f.vertex_ids.end(), vi) !=
          f.vertex_ids.end())
        cone.generators.push_back(f.normal);
    fan.vertex_cones.push_back(std::move(cone));
  }
  for (const auto& e : p.edges()) {
    Cone cone;
    cone.generators = {facets[e.f0].normal, facets[e.f1].normal};
    if (parallel(cone.generators[0], cone.generators[1]))
      throw std::logic_error("degenerate edge cone: parallel facet normals");
    fan.edge_cones.push_back(std::move(cone));
  }
  return fan;
}

LatticePoint3 UnimodularAffineMap::apply(const LatticePoint3& p) const {
  return {matrix[0][0] * p.x + matrix[0][1] * p.y + matrix[0][2] * p.z +
              translation.x,
          matrix[1][0] * p.x + matrix[1][1] * p.y + matrix[1][2] * p.z +
              translation.y,
          matrix[2][0] * p.x + matrix[2][1] * p.y + matrix[2][2] * p.z +
              translation.z};
}

std::int64_t UnimodularAffineMap::det() const {
  const auto& m = matrix;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::optional<UnimodularAffineMap> iua_equivalent(const LatticePolytope& p,
                                                  const LatticePolytope& q) {
  if (p.dimension() != 3 || q.dimension() != 3)
    throw std::invalid_argument("iua_equivalent: inputs must be 3-dimensional");
  const auto& pp = p.lattice_points();
  const auto& qq = q.lattice_points();
  if (pp.size() != qq.size()) return std::nullopt;

  // Pin one affinely independent 4-tuple of p's lattice points.
  std::array<std::size_t, 4> base{0, 0, 0, 0};
  bool found = false;
  for (std::size_t i = 0; i < pp.size() && !found; ++i)
    for (std::size_t j = 0; j < pp.size() && !found; ++j)
      for (std::size_t k = 0; k < pp.size() && !found; ++k)
        for (std::size_t l = 0; l < pp.size() && !found; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l)
            continue;
          const LatticePoint3 u = pp[j] - pp[i], v = pp[k] - pp[i],
                              w = pp[l] - pp[i];
          if (dot(cross(u, v), w) != 0) {
            base = {i, j, k, l};
            found = true;
          }
        }
  if (!found) return std::nullopt;  // cannot happen for 3-dim input

  const LatticePoint3 p0 = pp[base[0]];
  const LatticePoint3 u = pp[base[1]] - p0, v = pp[base[2]] - p0,
                      w = pp[base[3]] - p0;
  const std::int64_t det_b = dot(cross(u, v), w);

  // adj(B) for B with columns u, v, w: rows of adj are the cross products.
  const LatticePoint3 r0 = cross(v, w), r1 = cross(w, u), r2 = cross(u, v);

  std::set<LatticePoint3> q_set(qq.begin(), qq.end());
  const std::size_t n = qq.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d)
            continue;
          const LatticePoint3 q0 = qq[a];
          const LatticePoint3 qu = qq[b] - q0, qv = qq[c] - q0,
                              qw = qq[d] - q0;
          // M = [qu qv qw] * adj(B) / det(B); require integrality.
          UnimodularAffineMap map;
          bool integral = true;
          const LatticePoint3 qcols[3] = {qu, qv, qw};
          const LatticePoint3 adj_rows[3] = {r0, r1, r2};
          for (int row = 0; row < 3 && integral; ++row)
            for (int col = 0; col < 3 && integral; ++col) {
              // entry = Σ_k qcols[k][row] * adj(B)[k][col]
              std::int64_t s = 0;
              const std::int64_t qrow[3] = {
                  row == 0 ? qu.x : row == 1 ? qu.y : qu.z,
                  row == 0 ? qv.x : row == 1 ? qv.y : qv.z,
                  row == 0 ? qw.x : row == 1 ? qw.y : qw.z};
              const std::int64_t acol[3] = {
                  col == 0 ? adj_rows[0].x : col == 1 ? adj_rows[0].y : adj_rows[0].z,
                  col == 0 ? adj_rows[1].x : col == 1 ? adj_rows[1].y : adj_rows[1].z,
                  col == 0 ? adj_rows[2].x : col == 1 ? adj_rows[2].y : adj_rows[2].z};
              for (int k = 0; k < 3; ++k) s += qrow[k] * acol[k];
              if (s % det_b != 0) {
                integral = false;
                break;
              }
              map.matrix[row][col] = s / det_b;
            }
          if (!integral) continue;
          const std::int64_t det_m = map.det();
          if (det_m != 1 && det_m != -1) continue;
          map.translation = {0, 0, 0};
          const LatticePoint3 image0 = map.apply(p0);
          map.translation = q0 - image0;
          bool bijective = true;
          for (const auto& pt : pp)
            if (!q_set.count(map.apply(pt))) {
              bijective = false;
              break;
            }
          if (bijective) return map;
        }
  return std::nullopt;
}

}  // namespace tropenum
