#ifndef DUNKL_POLYNOMIAL_HPP
#define DUNKL_POLYNOMIAL_HPP

#include "dunkl/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

// Exponent multi-index; length equals the polynomial dimension.
using Exponents = std::vector<unsigned>;

// Graded lexicographic: total degree first, then lexicographic on the
// exponent vector. Map iteration in this order gives the canonical
// (highest degree first) printing order when walked in reverse.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no zero coefficient is stored; every stored multi-index has
// length dimension(). Immutable in practice: all operations return new values.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit Polynomial(int dimension);

    static Polynomial zero(int dimension) { return Polynomial(dimension); }
    static Polynomial constant(int dimension, const Rational& c);
    static Polynomial monomial(int dimension, Exponents exponents, const Rational& c);
    static Polynomial variable(int dimension, int i); // x_i, 1-based

    int dimension() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }

    // Merges into the existing term, dropping it if the sum cancels.
    void add_term(const Exponents& exponents, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial operator*(const Rational& c) const;

    bool operator==(const Polynomial& rhs) const = default;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    // d/dx_i, 1-based coordinate.
    Polynomial derivative(int i) const;

    // Composition with the sign flip of coordinate i (x_i -> -x_i).
    Polynomial reflect(int i) const;

    // General sign-flip composition; signs[i] in {+1, -1}.
    Polynomial compose_signs(std::span<const int> signs) const;

    // q with q * x_i = p - p∘σ_i exactly (the numerator is odd in x_i).
    Polynomial reflect_diff_quotient(int i) const;

    // Substitution x_i -> s * x_i.
    Polynomial substitute_scaled(int i, const Rational& s) const;

    // Embeds into a polynomial in new_dimension variables, mapping variable
    // j to variable j + offset.
    Polynomial embed(int new_dimension, int offset) const;

    // Canonical text form per the polynomial grammar; "0" for zero.
    std::string str() const;

  private:
    int dim_;
    TermMap terms_;
};

// Parses `term ('+' term)*` with `term := rational (' ' var)*`,
// `var := 'x'index['^'exponent]`. Throws std::invalid_argument with the
// offending position on syntax errors or variable indices above `dimension`.
Polynomial parse_poly(std::string_view text, int dimension);

} // namespace dunkl

#endif
