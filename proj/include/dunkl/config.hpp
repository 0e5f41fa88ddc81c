#ifndef DUNKL_CONFIG_HPP
#define DUNKL_CONFIG_HPP

#include "dunkl/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace dunkl {

// Root system Z_2^d with roots ±√2 e_i and one multiplicity k_i per
// coordinate pair. Carries the weight exponents and the derived constants:
//
//   γ = Σ k_i,   λ = γ + d/2 − 1  (must be > 0),
//   c_k = 1 / ∫ e^{−|y|²/2} w_k(y) dy,
//   d_k = ∫_{S(0,1)} w_k dσ = 1 / (c_k 2^λ Γ(λ+1)).
//
// Immutable after construction.
struct RootSystemConfig {
    int d = 1;
    std::vector<Rational> k;
    Rational gamma;
    Rational lambda;
    double c_k = 0.0;
    double d_k = 0.0;

    // Quadrature knobs shared by the numeric paths.
    double quad_rel_tol = 1e-10;
    int quad_max_depth = 40;
};

// Builds the configuration and cross-checks the two closed forms for d_k to
// `gamma_tol` relative. Throws std::invalid_argument when λ ≤ 0 (the standing
// assumption) or any k_i < 0.
RootSystemConfig make_config(int d, std::vector<Rational> k, double gamma_tol = 1e-12);

// w_k(x) = Π_i 2^{k_i} |x_i|^{2 k_i}, homogeneous of degree 2γ.
double weight(const RootSystemConfig& cfg, std::span<const double> x);

// Key–value config file: keys d, k (list of rationals, e.g. k = ["1","3/2"]
// or k = 1 3/2), gamma_precision, quad_rel_tol, quad_max_depth. '#' comments.
struct ConfigFile {
    int d = 1;
    std::vector<Rational> k;
    double gamma_precision = 1e-12;
    double quad_rel_tol = 1e-10;
    int quad_max_depth = 40;

    RootSystemConfig build() const;
};

ConfigFile parse_config_text(const std::string& text);
ConfigFile load_config_file(const std::string& path);

} // namespace dunkl

#endif
