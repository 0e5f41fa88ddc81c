#ifndef DUNKL_INTERTWINING_HPP
#define DUNKL_INTERTWINING_HPP

#include "dunkl/config.hpp"
#include "dunkl/polynomial.hpp"

#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace dunkl {

// Per-coordinate eigenvalues a_{n,k} of the intertwining operator on
// monomials: V_k x^ν = Π_i a_{ν_i, k_i} x^ν. Closed Pochhammer forms
//   a_{2m,k}   = (1/2)_m / (k+1/2)_m
//   a_{2m+1,k} = (3/2)_m / [ (k+3/2)_m (2k+1) ]
// with a_{n,0} = 1 identically. Satisfies a_0 = 1 and 0 < a_n <= 1.
//
// Append-only cache: growth is mutex-guarded, reads return copies.
class VkCoefficientTable {
  public:
    explicit VkCoefficientTable(std::vector<Rational> multiplicities, int initial_n_max = 64);

    Rational coefficient(int coord, unsigned n) const;   // a_{n, k_coord}, coord 1-based
    double coefficient_double(int coord, unsigned n) const;
    const std::vector<Rational>& multiplicities() const { return k_; }

    // The closed form for a single multiplicity; used by the table and as a
    // standalone entry point for validation.
    static Rational closed_form(const Rational& k, unsigned n);

  private:
    void ensure(unsigned n) const;

    std::vector<Rational> k_;
    mutable std::mutex mutex_;
    mutable std::vector<std::vector<Rational>> rows_;
    mutable std::vector<std::vector<double>> rows_double_;
};

// Shared per-multiplicity-vector table registry.
const VkCoefficientTable& vk_table(const RootSystemConfig& cfg);

// V_k p: each monomial x^ν scaled by Π_i a_{ν_i, k_i}. Degree preserving.
Polynomial vk_poly(const RootSystemConfig& cfg, const Polynomial& p);

// V_k^{-1} p: monomial-wise division by the same products.
Polynomial vk_inverse_poly(const RootSystemConfig& cfg, const Polynomial& p);

// Normalized sphere moment m_ν = (1/d_k) ∫_{S^{d-1}} y^ν w_k dσ:
//   m_ν = Π_i (k_i+1/2)_{ν_i/2} / (λ+1)_{|ν|/2},  zero for any odd ν_i.
Rational sphere_moment(const RootSystemConfig& cfg, const Exponents& nu);

// Dunkl translation of a polynomial, symbolic in both arguments:
// u(x, y) = τ_x p(y) as an exact polynomial in 2d variables, the x block
// first (variables 1..d) and the y block second (variables d+1..2d).
// Satisfies u(x,y) = u(y,x) and u(x,0) = p(x).
Polynomial translate_poly(const RootSystemConfig& cfg, const Polynomial& p);

double translate_poly_at(const RootSystemConfig& cfg, const Polynomial& p, std::span<const double> x,
                         std::span<const double> y);

Rational translate_poly_at_exact(const RootSystemConfig& cfg, const Polynomial& p, std::span<const Rational> x,
                                 std::span<const Rational> y);

// Dunkl kernel E_k(x, y) by the truncated series Σ_n V_k[⟨·,y⟩^n/n!](x),
// stopped when the factorial tail bound Σ_{m>n} (|x||y|)^m/m! drops below
// tol. Real arguments only.
double dunkl_kernel(const RootSystemConfig& cfg, std::span<const double> x, std::span<const double> y,
                    double tol = 1e-12);

} // namespace dunkl

#endif
