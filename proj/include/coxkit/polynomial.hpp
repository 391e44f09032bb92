#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace coxkit {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense univariate polynomial over Q; coefficient i belongs to x^i. The zero
// polynomial is the empty vector, otherwise the leading coefficient is nonzero.
using QPoly = std::vector<Rational>;

QPoly poly_trim(QPoly p);
int poly_degree(const QPoly& p);  // -1 for the zero polynomial
QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_neg(QPoly p);
QPoly poly_scale(QPoly p, const Rational& c);

// Division with remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b);
QPoly poly_mod(const QPoly& a, const QPoly& b);

Rational poly_eval(const QPoly& p, const Rational& x);
QPoly poly_derivative(const QPoly& p);
bool poly_equal(const QPoly& a, const QPoly& b);
std::string poly_to_string(const QPoly& p, const std::string& var = "x");

// n-th cyclotomic polynomial (integer coefficients), n >= 1. Memoized and safe
// to call concurrently.
QPoly cyclotomic(unsigned n);

// D_k with D_k(2 cos t) = 2 cos(k t): D_0 = 2, D_1 = x, D_k = x D_{k-1} - D_{k-2}.
QPoly dickson_two_cos(unsigned k);

// Minimal polynomial of 2 cos(pi/m) over Q, monic with integer coefficients:
// x + 2 for m = 1, x for m = 2, and for m >= 3 the degree-phi(2m)/2 polynomial
// obtained from the cyclotomic polynomial of index 2m by substituting
// x = z + 1/z.
QPoly two_cos_pi_minimal_poly(unsigned m);

}  // namespace coxkit
