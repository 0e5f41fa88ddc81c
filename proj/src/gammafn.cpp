#include "dunkl/gammafn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

double gamma_rational(const Rational& a) {
    if (a <= 0) throw std::invalid_argument("gamma_rational requires a > 0");
    if (a > 170) throw std::invalid_argument("gamma_rational argument too large (double overflow)");
    const BigInt den = denominator(a);
    if (den == 1 || den == 2) {
        // a = base + m with base in {1/2, 1}; Γ(1/2) = √π, Γ(1) = 1.
        Rational base = (den == 2) ? Rational(1, 2) : Rational(1);
        double result = (den == 2) ? std::sqrt(std::numbers::pi) : 1.0;
        Rational factor = base;
        while (factor < a) {
            result *= to_double(factor);
            factor += 1;
        }
        return result;
    }
    return std::tgamma(to_double(a));
}

Rational pochhammer(const Rational& a, unsigned m) {
    Rational result(1);
    Rational factor = a;
    for (unsigned j = 0; j < m; ++j) {
        result *= factor;
        factor += 1;
    }
    return result;
}

} // namespace dunkl
