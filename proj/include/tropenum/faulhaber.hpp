// Closed-form power-sum (Faulhaber) summation.
//
// Turns Σ_{i=lower(d)}^{upper(d)} p(i) into an exact polynomial in d, for
// summation bounds affine in d. This is the workhorse behind the census
// polynomials, whose nested sums need summand degrees up to 12.

#pragma once

#include <string>

#include "tropenum/unipoly.hpp"

namespace tropenum {

// An integer-valued bound affine in the output variable: offset + coeff*d.
struct AffineBound {
  Int offset{0};
  Int coeff{0};
  static AffineBound constant(Int c) { return {std::move(c), 0}; }
};

// Parses expressions such as "2", "d-1", "-3+2d", "f - y - 1" over a single
// free variable (any identifier). Rejects anything non-affine ('*', '/', '^',
// two distinct identifiers, ...) with a descriptive std::invalid_argument.
AffineBound parse_affine_bound(const std::string& expr);

// S_k(n) = Σ_{i=1}^{n} i^k as a polynomial in n; supported for k <= 12
// (enough for the degree-12 census outputs), larger k rejected.
UniPoly power_sum(unsigned k);

// q(d) = Σ_{i=lower(d)}^{upper(d)} p(i) as an exact polynomial identity in d
// (valid whenever upper(d) >= lower(d) - 1; in particular the empty range
// upper = lower - 1 yields the zero polynomial). Summand degree <= 12.
UniPoly poly_sum_over_range(const UniPoly& p, const AffineBound& lower,
                            const AffineBound& upper);

}  // namespace tropenum
