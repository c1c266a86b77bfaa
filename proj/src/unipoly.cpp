#include "tropenum/unipoly.hpp"

#include <stdexcept>

namespace tropenum {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UniPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Rational UniPoly::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
}

Rational UniPoly::leading_coefficient() const {
  if (coeffs_.empty()) throw std::invalid_argument("zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::compose_affine(const Rational& c0, const Rational& c1) const {
  const UniPoly affine({c0, c1});
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * affine + constant(*it);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return UniPoly();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

std::string UniPoly::pretty(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const Rational c = coeffs_[e];
    if (c == 0) continue;
    const bool first = out.empty();
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (!first) out += (c < 0) ? " - " : " + ";
    else if (c < 0) out += "-";
    std::string term;
    if (e == 0 || mag != 1) term = to_string(mag);
    if (e > 0) {
      if (!term.empty()) term += "*";
      term += var;
      if (e > 1) term += "^" + std::to_string(e);
    }
    out += term;
  }
  return out;
}

std::vector<std::pair<int, Rational>> top_coefficients(const UniPoly& p,
                                                       std::size_t k) {
  if (p.is_zero()) throw std::invalid_argument("top_coefficients: zero polynomial");
  if (k == 0) throw std::invalid_argument("top_coefficients: k must be >= 1");
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t j = 0; j < k; ++j) {
    const int e = p.degree() - static_cast<int>(j);
    out.emplace_back(e, e >= 0 ? p.coefficient(e) : Rational(0));
  }
  return out;
}

}  // namespace tropenum
