#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace sl3 {

// GMP-backed exact rational, always kept canonical (reduced, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

inline Rational positive_part(const Rational& r) { return r > 0 ? r : Rational(0); }
inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }

// Rank of a rational matrix by Gaussian elimination.
std::size_t rank(std::vector<RationalVector> rows);

}  // namespace sl3
