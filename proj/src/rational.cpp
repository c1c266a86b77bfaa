#include "tropenum/rational.hpp"

namespace tropenum {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) -> Int {
    if (part.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("sign without digits");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("bad integer literal: " + part);
    return Int(part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const Int num = parse_int(s.substr(0, slash));
  const Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num, den);
}

Int to_integer(const Rational& r) {
  if (denominator(r) != 1)
    throw std::invalid_argument("not an integer: " + to_string(r));
  return numerator(r);
}

}  // namespace tropenum
