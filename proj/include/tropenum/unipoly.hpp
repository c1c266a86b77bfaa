// Univariate polynomials with exact rational coefficients.
//
// The common currency of all census computations: curve/surface counts as
// polynomials in the degree d, per-floor contribution polynomials in the
// floor index i, and the Faulhaber images of both.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tropenum/rational.hpp"

namespace tropenum {

class UniPoly {
 public:
  UniPoly() = default;
  // Coefficients indexed by exponent (coeffs[k] multiplies x^k).
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly variable();  // the monomial x

  // Degree of the zero polynomial is -1.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t exponent) const;
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& x) const;
  // p(c0 + c1*x): substitution of an affine expression for the variable.
  UniPoly compose_affine(const Rational& c0, const Rational& c1) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly scaled(const Rational& c) const;

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  // Human-readable form such as "8*d^6 - 168/5*d^5" (variable name supplied).
  std::string pretty(const std::string& var = "d") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;  // empty <=> zero polynomial
};

// The k highest-degree (exponent, coefficient) pairs, highest first,
// zero-padded below exponent 0 if deg(p)+1 < k. Errors on the zero polynomial.
std::vector<std::pair<int, Rational>> top_coefficients(const UniPoly& p,
                                                       std::size_t k);

}  // namespace tropenum
