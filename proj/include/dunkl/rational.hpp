#ifndef DUNKL_RATIONAL_HPP
#define DUNKL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dunkl {

// Exact rational scalar. Backed by an arbitrary-precision integer pair kept
// in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Exact: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) { return Rational(x); }

// Accepts "p", "-p", "p/q" with q > 0 digits only.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

// q^n for n >= 0 (0^0 = 1).
Rational rational_pow(const Rational& q, unsigned n);

inline int rational_sign(const Rational& q) { return q.sign(); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace dunkl

#endif
