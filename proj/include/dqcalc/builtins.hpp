#pragma once

#include <string>

#include "dqcalc/polynomial.hpp"
#include "dqcalc/valid_function.hpp"

namespace dqcalc {

// exp on the whole plane; h(x + iy) = e^x sin(y)/y with sin(0)/0 = 1.
ValidFunction make_exp();

// Principal-branch power z^alpha on C minus the half-line (-inf, 0].
// h = Im(z^alpha)/y with the on-axis limit alpha x^(alpha-1).
// Throws InvalidParameter for non-finite alpha.
ValidFunction make_pow(double alpha);

// Cayley transform (1 + z)/(1 - z) on C minus {1}; h = 2/|1 - z|^2.
ValidFunction make_cayley();

// Wraps a polynomial with its exact partials and exact h.
ValidFunction make_polynomial(const ValidPolynomial& p);

// "exp" | "pow:<alpha>" | "cayley" | "poly:@<file.json>".
// Throws ParseError/InvalidParameter on malformed specs.
ValidFunction parse_function_spec(const std::string& spec);

}  // namespace dqcalc
