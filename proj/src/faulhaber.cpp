#include "tropenum/faulhaber.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace tropenum {

namespace {

constexpr unsigned kMaxSummandDegree = 12;

// Bernoulli numbers B_0..B_n with the B_1 = +1/2 convention, via the
// defining recurrence Σ_{j=0}^{m} binom(m+1, j) B_j = m+1.
std::vector<Rational> bernoulli_plus(unsigned n) {
  std::vector<Rational> b(n + 1);
  std::vector<std::vector<Int>> binom(n + 2, std::vector<Int>(n + 2, 0));
  for (unsigned i = 0; i <= n + 1; ++i) {
    binom[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  for (unsigned m = 0; m <= n; ++m) {
    Rational acc(m + 1);
    for (unsigned j = 0; j < m; ++j) acc -= Rational(binom[m + 1][j]) * b[j];
    b[m] = acc / Rational(binom[m + 1][m]);
  }
  // Flip B_1 from the minus convention produced by the recurrence if needed;
  // the recurrence above already yields B_1 = +1/2.
  return b;
}

}  // namespace

UniPoly power_sum(unsigned k) {
  if (k > kMaxSummandDegree)
    throw std::invalid_argument(
        "power_sum: summand degree " + std::to_string(k) +
        " exceeds the supported maximum of " +
        std::to_string(kMaxSummandDegree));
  // Σ_{i=1}^{n} i^k = 1/(k+1) Σ_{j=0}^{k} binom(k+1, j) B⁺_j n^{k+1-j}.
  const auto b = bernoulli_plus(k);
  std::vector<Rational> coeffs(k + 2, Rational(0));
  Int binom = 1;  // binom(k+1, j), updated incrementally
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * Int(k + 2 - j) / Int(j);
    coeffs[k + 1 - j] = Rational(binom) * b[j] / Rational(k + 1);
  }
  return UniPoly(std::move(coeffs));
}

AffineBound parse_affine_bound(const std::string& expr) {
  AffineBound out;
  std::string var_seen;
  std::size_t i = 0;
  bool any_term = false;
  auto skip_ws = [&] { while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i; };
  skip_ws();
  while (i < expr.size()) {
    int sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any_term) {
      throw std::invalid_argument("non-affine bound expression (expected '+' or '-'): " + expr);
    }
    if (i >= expr.size())
      throw std::invalid_argument("dangling sign in bound expression: " + expr);
    if (std::isdigit(static_cast<unsigned char>(expr[i]))) {
      std::string digits;
      while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) digits += expr[i++];
      skip_ws();
      if (i < expr.size() && std::isalpha(static_cast<unsigned char>(expr[i]))) {
        // coefficient times variable, e.g. "2d"
        std::string name;
        while (i < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[i])) || expr[i] == '_'))
          name += expr[i++];
        if (!var_seen.empty() && var_seen != name)
          throw std::invalid_argument("non-affine bound expression (two variables '" +
                                      var_seen + "' and '" + name + "'): " + expr);
        var_seen = name;
        out.coeff += Int(sign) * Int(digits);
      } else {
        out.offset += Int(sign) * Int(digits);
      }
    } else if (std::isalpha(static_cast<unsigned char>(expr[i])) || expr[i] == '_') {
      std::string name;
      while (i < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[i])) || expr[i] == '_'))
        name += expr[i++];
      if (!var_seen.empty() && var_seen != name)
        throw std::invalid_argument("non-affine bound expression (two variables '" +
                                    var_seen + "' and '" + name + "'): " + expr);
      var_seen = name;
      out.coeff += Int(sign);
    } else {
      throw std::invalid_argument(std::string("non-affine bound expression (unexpected '") +
                                  expr[i] + "'): " + expr);
    }
    any_term = true;
    skip_ws();
  }
  if (!any_term) throw std::invalid_argument("empty bound expression");
  return out;
}

UniPoly poly_sum_over_range(const UniPoly& p, const AffineBound& lower,
                            const AffineBound& upper) {
  if (p.is_zero()) return UniPoly();
  if (p.degree() > static_cast<int>(kMaxSummandDegree))
    throw std::invalid_argument("poly_sum_over_range: summand degree exceeds 12");
  // Constant bounds: evaluate directly (this also covers genuinely empty
  // ranges such as Σ_{i=0}^{-1}, where the polynomial identity below would
  // not apply).
  if (lower.coeff == 0 && upper.coeff == 0) {
    Rational total(0);
    for (Int i = lower.offset; i <= upper.offset; ++i) total += p.evaluate(Rational(i));
    return UniPoly::constant(total);
  }
  // PS(n) = Σ_{i=1}^{n} p(i) as a polynomial; then
  // Σ_{i=lower}^{upper} p(i) = PS(upper) - PS(lower - 1).
  UniPoly ps;
  const auto& coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0)
      ps += power_sum(static_cast<unsigned>(k)).scaled(coeffs[k]);
  const UniPoly at_upper =
      ps.compose_affine(Rational(upper.offset), Rational(upper.coeff));
  const UniPoly at_lower =
      ps.compose_affine(Rational(lower.offset - 1), Rational(lower.coeff));
  return at_upper - at_lower;
}

}  // namespace tropenum
