#include "tropenum/linsolve.hpp"

#include <algorithm>

namespace tropenum {

SolveResult solve_exact(const LinSystem& system) {
  const std::size_t rows = system.matrix.size();
  const std::size_t cols = rows ? system.matrix[0].size()
                                : system.sign_constraints.size();
  if (system.rhs.size() != rows)
    throw std::invalid_argument("solve_exact: rhs length mismatch");
  for (const auto& row : system.matrix)
    if (row.size() != cols)
      throw std::invalid_argument("solve_exact: ragged matrix");
  if (system.sign_constraints.size() != cols)
    throw std::invalid_argument("solve_exact: sign constraint length mismatch");

  // Reduced row echelon form of [A | b].
  std::vector<std::vector<Rational>> a = system.matrix;
  std::vector<Rational> b = system.rhs;
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    std::swap(b[pr], b[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0)
      return LinInfeasible{"inconsistent system: equation reduces to 0 = " +
                               to_string(b[i]),
                           std::nullopt};

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col_of_row) is_pivot[c] = true;

  if (r == cols) {
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
    for (std::size_t j = 0; j < cols; ++j)
      if (system.sign_constraints[j] == SignConstraint::StrictlyPositive &&
          !(x[j] > 0))
        return LinInfeasible{"sign constraint violated: variable " +
                                 std::to_string(j) + " = " + to_string(x[j]) +
                                 " is not > 0",
                             j};
    return LinSolution{std::move(x)};
  }

  LinUnderDetermined ud;
  ud.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) ud.particular[pivot_col_of_row[i]] = b[i];
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rational> dir(cols, Rational(0));
    dir[free_c] = 1;
    for (std::size_t i = 0; i < r; ++i)
      dir[pivot_col_of_row[i]] = -a[i][free_c];
    ud.nullspace.push_back(std::move(dir));
  }
  return ud;
}

namespace {

// A strict inequality  a . t > c  over the null-space coordinates t.
struct StrictIneq {
  std::vector<Rational> a;
  Rational c;
};

// Fourier-Motzkin elimination with witness reconstruction. Eliminates the
// last variable, recurses, then back-substitutes a value strictly inside the
// admissible open interval.
std::optional<std::vector<Rational>> fm_solve(std::vector<StrictIneq> ineqs,
                                              std::size_t nvars) {
  if (nvars == 0) {
    for (const auto& q : ineqs)
      if (!(Rational(0) > q.c)) return std::nullopt;
    return std::vector<Rational>{};
  }
  const std::size_t v = nvars - 1;
  std::vector<StrictIneq> rest, lowers, uppers;
  for (auto& q : ineqs) {
    const Rational coef = q.a[v];
    if (coef == 0)
      rest.push_back(q);
    else if (coef > 0)
      lowers.push_back(q);  // t_v > (c - a'.t') / coef
    else
      uppers.push_back(q);  // t_v < (c - a'.t') / coef  (coef < 0)
  }
  std::vector<StrictIneq> reduced = rest;
  for (const auto& lo : lowers)
    for (const auto& up : uppers) {
      // From  a_lo.t > c_lo (coef>0)  and  a_up.t > c_up (coef<0):
      // (-coef_up) * a_lo.t + coef_lo * a_up.t > (-coef_up) c_lo + coef_lo c_up
      StrictIneq combo;
      combo.a.assign(nvars, Rational(0));
      const Rational wl = -up.a[v];
      const Rational wu = lo.a[v];
      for (std::size_t j = 0; j < v; ++j)
        combo.a[j] = wl * lo.a[j] + wu * up.a[j];
      combo.c = wl * lo.c + wu * up.c;
      reduced.push_back(std::move(combo));
    }
  auto sub = fm_solve(std::move(reduced), v);
  if (!sub) return std::nullopt;
  std::vector<Rational> t = *sub;
  t.resize(nvars, Rational(0));
  auto bound_at = [&](const StrictIneq& q) {
    Rational dot(0);
    for (std::size_t j = 0; j < v; ++j) dot += q.a[j] * t[j];
    return (q.c - dot) / q.a[v];
  };
  std::optional<Rational> lo_val, up_val;
  for (const auto& q : lowers) {
    const Rational bound = bound_at(q);
    if (!lo_val || bound > *lo_val) lo_val = bound;
  }
  for (const auto& q : uppers) {
    const Rational bound = bound_at(q);
    if (!up_val || bound < *up_val) up_val = bound;
  }
  if (lo_val && up_val)
    t[v] = (*lo_val + *up_val) / 2;
  else if (lo_val)
    t[v] = *lo_val + 1;
  else if (up_val)
    t[v] = *up_val - 1;
  else
    t[v] = 0;
  return t;
}

}  // namespace

std::optional<std::vector<Rational>> probe_strictly_positive(
    const LinUnderDetermined& solution,
    const std::vector<SignConstraint>& sign_constraints) {
  const std::size_t n = solution.particular.size();
  const std::size_t m = solution.nullspace.size();
  std::vector<StrictIneq> ineqs;
  for (std::size_t i = 0; i < n; ++i) {
    if (sign_constraints[i] != SignConstraint::StrictlyPositive) continue;
    StrictIneq q;
    q.a.assign(m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) q.a[j] = solution.nullspace[j][i];
    q.c = -solution.particular[i];  // particular_i + a.t > 0
    ineqs.push_back(std::move(q));
  }
  auto t = fm_solve(std::move(ineqs), m);
  if (!t) return std::nullopt;
  std::vector<Rational> x = solution.particular;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) x[i] += (*t)[j] * solution.nullspace[j][i];
  return x;
}

}  // namespace tropenum
