#ifndef DUNKL_OPERATORS_HPP
#define DUNKL_OPERATORS_HPP

#include "dunkl/black_box.hpp"
#include "dunkl/config.hpp"
#include "dunkl/polynomial.hpp"

#include <span>

namespace dunkl {

// T acting in a single variable with multiplicity kappa:
//   T p = ∂_var p + kappa (p − p∘σ_var) / x_var.
// The building block for both the d-variable operators and the operators on
// 2d-variable translation kernels.
Polynomial dunkl_op_var(const Polynomial& p, int var, const Rational& kappa);

// T_i p, exact. Lowers degree by one on homogeneous input.
Polynomial dunkl_op(const RootSystemConfig& cfg, int i, const Polynomial& p);

// Δ_k p = Σ_i T_i² p, exact.
Polynomial dunkl_laplacian_poly(const RootSystemConfig& cfg, const Polynomial& p);

// Classical Laplacian (k ≡ 0).
Polynomial laplacian_poly(const Polynomial& p);

// Δ_k f(x) for a black-box f:
//   Δf + 2 Σ_i k_i [ ∂_i f(x)/x_i − (f(x) − f(σ_i x)) / (2 x_i²) ],
// with Δ and ∇ from central differences (or the callbacks) and the
// reflection terms evaluated exactly. Requires |x_i| > 10 h for every
// coordinate with k_i > 0; throws naming the offending coordinate otherwise.
double dunkl_laplacian_numeric(const RootSystemConfig& cfg, const BlackBoxFunction& f, std::span<const double> x,
                               double h = 1e-4);

struct GreenResult {
    double lhs = 0.0; // ∫_{B(0,t)} Δ_k f w_k dy
    double rhs = 0.0; // boundary term f'(t) w_k(t) − f'(−t) w_k(−t)
    double residual = 0.0;
    double quad_error = 0.0;
};

// d = 1 Green formula check. The volume integral is evaluated over the
// symmetric pairs (y, −y), which cancels the reflection difference term
// exactly and leaves a smooth integrand.
GreenResult green_check(const RootSystemConfig& cfg, const BlackBoxFunction& f, double t);

} // namespace dunkl

#endif
