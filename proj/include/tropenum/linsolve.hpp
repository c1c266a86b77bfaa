// Exact rational linear systems with per-variable sign constraints.
//
// The path-feasibility module reduces each marked-point condition to a
// square-ish rational system whose "barycentric" unknowns must be strictly
// positive; infeasibility verdicts must therefore be exact, and
// underdetermined systems must expose their null space so positivity can be
// probed along the free directions.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tropenum/rational.hpp"

namespace tropenum {

enum class SignConstraint { Free, StrictlyPositive };

struct LinSystem {
  std::vector<std::vector<Rational>> matrix;  // rows x cols
  std::vector<Rational> rhs;                  // length = rows
  std::vector<SignConstraint> sign_constraints;  // length = cols
};

struct LinSolution {
  std::vector<Rational> x;
};

struct LinInfeasible {
  std::string obstruction;
  // Index of the violated sign constraint, if the obstruction is a sign
  // violation (as opposed to an inconsistent equation).
  std::optional<std::size_t> constraint_index;
};

struct LinUnderDetermined {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;  // basis vectors
};

using SolveResult = std::variant<LinSolution, LinInfeasible, LinUnderDetermined>;

// Gaussian elimination over Q. Unique solutions are checked against the sign
// constraints; consistent rank-deficient systems come back UnderDetermined
// (sign constraints deliberately unchecked — see probe_strictly_positive).
SolveResult solve_exact(const LinSystem& system);

// For an underdetermined solution x(t) = particular + Σ t_j * nullspace[j]:
// decides by exact Fourier-Motzkin elimination whether some t makes every
// strictly-positive-tagged coordinate > 0, and if so produces a witness x.
std::optional<std::vector<Rational>> probe_strictly_positive(
    const LinUnderDetermined& solution,
    const std::vector<SignConstraint>& sign_constraints);

}  // namespace tropenum
