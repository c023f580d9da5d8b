// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP via boost::multiprecision). Rationals are always kept canonical:
// gcd(|num|, den) = 1, den > 0.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace minklat {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parse "p/q" or "p" (base 10, optional leading sign). Canonicalizes.
Rational rat_parse(const std::string& s);

/// Canonical string form: "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rational& r);

bool rat_is_integer(const Rational& r);

/// Largest integer <= r.
Int rat_floor(const Rational& r);

/// Smallest integer >= r.
Int rat_ceil(const Rational& r);

double rat_double(const Rational& r);

/// If r >= 0 is the square of a rational, sets root = sqrt(r) >= 0 and
/// returns true; otherwise returns false.
bool rat_sqrt_exact(const Rational& r, Rational& root);

int sign(const Rational& r);
int sign(const Int& n);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Int xgcd(const Int& a, const Int& b, Int& x, Int& y);

/// n mod m reduced into [0, m), m > 0.
Int mod_floor(const Int& n, const Int& m);

/// Binomial coefficient and factorial as exact integers.
Int factorial(int n);
Int binomial(int n, int k);

}  // namespace minklat
