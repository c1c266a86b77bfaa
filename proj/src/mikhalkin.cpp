#include "tropenum/mikhalkin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropenum {

void MikhalkinConfig::validate(const LatticePolytope& p) const {
  std::int64_t maxsum = 1;
  for (const auto& q : p.lattice_points())
    maxsum = std::max(maxsum, std::abs(q.x + q.y + q.z));
  if (!(eta > 0) || !(eta * maxsum < 1))
    throw std::invalid_argument(
        "MikhalkinConfig: eta must lie in (0, 1/max|x+y+z|) to make the "
        "lattice order total");
  if (lambda_schedule.empty() || lambda_schedule.front() != 0)
    throw std::invalid_argument("MikhalkinConfig: first lambda must be 0");
  for (std::size_t i = 1; i < lambda_schedule.size(); ++i)
    if (!(lambda_schedule[i - 1] < lambda_schedule[i]))
      throw std::invalid_argument(
          "MikhalkinConfig: lambda schedule must be strictly increasing");
}

std::vector<LatticePoint3> mikhalkin_order(std::vector<LatticePoint3> points) {
  std::sort(points.begin(), points.end());
  const auto dup = std::adjacent_find(points.begin(), points.end());
  if (dup != points.end())
    throw std::invalid_argument("mikhalkin_order: duplicate point " +
                                dup->str());
  return points;
}

bool LatticePath::is_gap(std::size_t segment) const {
  return std::find(gap_markers.begin(), gap_markers.end(), segment) !=
         gap_markers.end();
}

std::string LatticePath::label() const {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += is_gap(i - 1) ? "|" : "-";
    out += points[i].str();
  }
  return out;
}

std::string path_label(const LatticePolytope& p, const LatticePath& path) {
  const auto& pts = p.lattice_points();  // already lex == Mikhalkin order
  std::string out;
  for (std::size_t i = 0; i < path.points.size(); ++i) {
    if (i) out += path.is_gap(i - 1) ? "|" : "-";
    const auto it = std::find(pts.begin(), pts.end(), path.points[i]);
    if (it == pts.end())
      throw std::invalid_argument("path point not in polytope: " +
                                  path.points[i].str());
    out += static_cast<char>('A' + (it - pts.begin()));
  }
  return out;
}

namespace {

// For every pair of lattice points lying on a common hull edge, the dual
// 2-cone of that edge: the outer normals of the edge's two facets.
using SegmentKey = std::pair<LatticePoint3, LatticePoint3>;

std::map<SegmentKey, std::pair<LatticePoint3, LatticePoint3>> edge_segments(
    const LatticePolytope& p) {
  std::map<SegmentKey, std::pair<LatticePoint3, LatticePoint3>> out;
  for (const auto& e : p.edges()) {
    const LatticePoint3 v0 = p.vertices()[e.v0];
    const LatticePoint3 v1 = p.vertices()[e.v1];
    const LatticePoint3 dir = v1 - v0;
    std::vector<LatticePoint3> on_edge;
    for (const auto& q : p.lattice_points()) {
      const LatticePoint3 rel = q - v0;
      if (!parallel(rel, dir)) continue;
      const std::int64_t t = dot(rel, dir);
      if (t < 0 || t > dot(dir, dir)) continue;
      on_edge.push_back(q);
    }
    const auto cone = std::make_pair(p.facets()[e.f0].normal,
                                     p.facets()[e.f1].normal);
    for (std::size_t i = 0; i < on_edge.size(); ++i)
      for (std::size_t j = 0; j < on_edge.size(); ++j)
        if (i != j) out[{on_edge[i], on_edge[j]}] = cone;
  }
  return out;
}

}  // namespace

std::vector<LatticePath> enumerate_paths(const LatticePolytope& p,
                                         std::size_t skip) {
  const auto pts = mikhalkin_order(p.lattice_points());
  const std::size_t n = pts.size();
  if (n < 2 || skip + 1 >= n) return {};
  const std::size_t marked = n - skip - 1;  // marked segments = marked points
  const auto segments = edge_segments(p);
  auto is_edge_segment = [&](const LatticePoint3& a, const LatticePoint3& b) {
    return segments.count({a, b}) != 0;
  };

  std::vector<LatticePath> out;
  // Support sizes: marked+1 (connected) and marked+2 (one gap), always
  // containing the first and last lattice point.
  for (int gaps = 0; gaps <= 1; ++gaps) {
    const std::size_t size = marked + 1 + gaps;
    if (size > n) continue;
    if (gaps == 1 && skip == 0) continue;
    std::vector<std::size_t> interior;
    for (std::size_t i = 1; i + 1 < n; ++i) interior.push_back(i);
    const std::size_t need = size - 2;
    if (need > interior.size()) continue;
    // prev_permutation over a sorted-descending boolean mask enumerates all
    // interior subsets of the required size.
    std::vector<bool> select(interior.size(), false);
    std::fill(select.begin(),
              select.begin() + static_cast<std::ptrdiff_t>(need), true);
    do {
      std::vector<LatticePoint3> support{pts.front()};
      for (std::size_t i = 0; i < interior.size(); ++i)
        if (select[i]) support.push_back(pts[interior[i]]);
      support.push_back(pts.back());
      const std::size_t segs = support.size() - 1;
      // Every segment — marked or gap — is a wall crossing of the dual
      // surface, so all of them must lie on hull edges.
      bool ok = true;
      for (std::size_t s = 0; s < segs && ok; ++s)
        ok = is_edge_segment(support[s], support[s + 1]);
      if (!ok) continue;
      if (gaps == 0) {
        out.push_back(LatticePath{support, {}});
      } else {
        for (std::size_t gap = 0; gap < segs; ++gap)
          out.push_back(LatticePath{support, {gap}});
      }
    } while (std::prev_permutation(select.begin(), select.end()));
  }
  return out;
}

FeasibilityReport path_feasible(const LatticePolytope& p,
                                const LatticePath& path,
                                const MikhalkinConfig& cfg) {
  cfg.validate(p);
  if (path.points.size() < 2)
    throw std::invalid_argument("path_feasible: path needs >= 2 points");
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
    if (!(path.points[i] < path.points[i + 1]))
      throw std::invalid_argument(
          "path_feasible: points must strictly increase in the lattice order");

  const auto segments = edge_segments(p);
  using Cone2 = std::pair<LatticePoint3, LatticePoint3>;
  std::vector<Cone2> cones;  // marked segments, in order
  struct GapCell {
    Cone2 cone;
    // Marked-point indices bracketing the unmarked wall crossing.
    std::optional<std::size_t> prev, next;
  };
  std::vector<GapCell> gap_cells;
  for (std::size_t s = 0; s < path.segment_count(); ++s) {
    const auto it = segments.find({path.points[s], path.points[s + 1]});
    if (it == segments.end())
      throw std::invalid_argument(
          "path segment has no dual 2-cone (not on a hull edge): " +
          path.points[s].str() + "-" + path.points[s + 1].str());
    if (path.is_gap(s)) {
      GapCell cell{it->second, std::nullopt, std::nullopt};
      if (!cones.empty()) cell.prev = cones.size() - 1;
      gap_cells.push_back(cell);
    } else {
      for (auto& cell : gap_cells)
        if (!cell.next) cell.next = cones.size();
      cones.push_back(it->second);
    }
  }
  if (cones.size() != cfg.lambda_schedule.size())
    throw std::invalid_argument(
        "path has " + std::to_string(cones.size()) +
        " marked segments but the lambda schedule provides " +
        std::to_string(cfg.lambda_schedule.size()));

  const std::size_t m = cones.size();
  // Unknowns: vertex v (3, free), two positive coefficients per marked
  // point, then per gap: the crossing parameter (free), two positive
  // coefficients, and positive slacks ordering it between its neighbours.
  std::size_t nvars = 3 + 2 * m;
  std::vector<std::size_t> gap_var;  // index of each gap's lambda unknown
  for (const auto& cell : gap_cells) {
    gap_var.push_back(nvars);
    nvars += 3;  // lambda_gap + beta1 + beta2
    if (cell.prev) ++nvars;
    if (cell.next) ++nvars;
  }
  FeasibilityReport report;
  report.feasible = true;
  for (int round = 0; round <= cfg.escalation_rounds; ++round) {
    Rational scale(1);
    for (int r = 0; r < round; ++r) scale *= 10;
    LinSystem sys;
    sys.sign_constraints.assign(nvars, SignConstraint::StrictlyPositive);
    for (int c = 0; c < 3; ++c) sys.sign_constraints[c] = SignConstraint::Free;
    for (const std::size_t g : gap_var)
      sys.sign_constraints[g] = SignConstraint::Free;
    for (std::size_t j = 0; j < m; ++j) {
      const Rational lambda = cfg.lambda_schedule[j] * scale;
      const Rational target[3] = {lambda, lambda * cfg.eta,
                                  lambda * cfg.eta * cfg.eta};
      const std::int64_t g1[3] = {cones[j].first.x, cones[j].first.y,
                                  cones[j].first.z};
      const std::int64_t g2[3] = {cones[j].second.x, cones[j].second.y,
                                  cones[j].second.z};
      for (int c = 0; c < 3; ++c) {
        std::vector<Rational> row(nvars, Rational(0));
        row[c] = 1;
        row[3 + 2 * j] = g1[c];
        row[3 + 2 * j + 1] = g2[c];
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(target[c]);
      }
    }
    for (std::size_t g = 0; g < gap_cells.size(); ++g) {
      const auto& cell = gap_cells[g];
      const std::size_t lam = gap_var[g];
      const Rational etapow[3] = {Rational(1), cfg.eta, cfg.eta * cfg.eta};
      const std::int64_t g1[3] = {cell.cone.first.x, cell.cone.first.y,
                                  cell.cone.first.z};
      const std::int64_t g2[3] = {cell.cone.second.x, cell.cone.second.y,
                                  cell.cone.second.z};
      // Unmarked wall crossing: lambda_gap*(1, eta, eta^2) lies on the
      // gap segment's dual 2-cell.
      for (int c = 0; c < 3; ++c) {
        std::vector<Rational> row(nvars, Rational(0));
        row[c] = 1;
        row[lam + 1] = g1[c];
        row[lam + 2] = g2[c];
        row[lam] = -etapow[c];
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(Rational(0));
      }
      // Ordering: previous marked lambda < lambda_gap < next marked lambda.
      std::size_t slack = lam + 3;
      if (cell.prev) {
        std::vector<Rational> row(nvars, Rational(0));
        row[lam] = 1;
        row[slack++] = -1;
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(cfg.lambda_schedule[*cell.prev] * scale);
      }
      if (cell.next) {
        std::vector<Rational> row(nvars, Rational(0));
        row[lam] = 1;
        row[slack++] = 1;
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(cfg.lambda_schedule[*cell.next] * scale);
      }
    }
    const auto result = solve_exact(sys);
    std::optional<std::vector<Rational>> witness;
    std::optional<std::string> obstruction;
    if (std::holds_alternative<LinSolution>(result)) {
      witness = std::get<LinSolution>(result).x;
    } else if (std::holds_alternative<LinInfeasible>(result)) {
      const auto& inf = std::get<LinInfeasible>(result);
      std::string text = inf.obstruction;
      if (inf.constraint_index && *inf.constraint_index >= 3 &&
          *inf.constraint_index < 3 + 2 * m) {
        const std::size_t k = *inf.constraint_index - 3;
        text = "barycentric coefficient alpha_{" + std::to_string(k / 2 + 1) +
               "," + std::to_string(k % 2 + 1) + "} fails to be positive (" +
               text + ")";
      }
      obstruction = std::move(text);
    } else {
      const auto& ud = std::get<LinUnderDetermined>(result);
      witness = probe_strictly_positive(ud, sys.sign_constraints);
      if (!witness)
        obstruction =
            "no strictly positive barycentric coefficients exist along the "
            "solution space";
    }
    if (obstruction) {
      report.feasible = false;
      report.witness.reset();
      report.obstruction = "lambda scale 10^" + std::to_string(round) + ": " +
                           *obstruction;
      if (round > 0)
        *report.obstruction +=
            " (lambda bounded above: feasible only for small lambda)";
      break;
    }
    if (round == 0) report.witness = witness;
  }
  return report;
}

std::vector<PathVerdict> feasible_path_census(const LatticePolytope& p,
                                              std::size_t skip,
                                              const MikhalkinConfig& cfg) {
  std::vector<PathVerdict> out;
  for (auto& path : enumerate_paths(p, skip)) {
    auto report = path_feasible(p, path, cfg);
    out.push_back(PathVerdict{std::move(path), std::move(report)});
  }
  return out;
}

}  // namespace tropenum
