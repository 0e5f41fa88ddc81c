#ifndef DUNKL_GAMMAFN_HPP
#define DUNKL_GAMMAFN_HPP

#include "dunkl/rational.hpp"

namespace dunkl {

// Γ(a) for rational a > 0. Integer and half-integer arguments go through the
// exact factorial / √π recursion; other rationals use the library gamma,
// which is accurate to a few ulp (well inside the 1e-13 relative budget the
// derived constants need).
double gamma_rational(const Rational& a);

// Rising factorial (a)_m = a (a+1) ... (a+m-1), exact.
Rational pochhammer(const Rational& a, unsigned m);

} // namespace dunkl

#endif
