#ifndef DUNKL_QUADRATURE_HPP
#define DUNKL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace dunkl {

struct IntegrationResult {
    double value = 0.0;
    double abs_error = 0.0;
};

// Adaptive Gauss–Kronrod on [a, b]. Throws std::runtime_error with the
// achieved error when the requested tolerance cannot be met within the
// subdivision budget derived from max_depth.
IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     double rel_tol = 1e-10, double abs_tol = 0.0, int max_depth = 40);

// Adaptive integration over [a, ∞).
IntegrationResult integrate_to_inf(const std::function<double(double)>& f, double a, double rel_tol = 1e-10,
                                   double abs_tol = 0.0, int max_depth = 40);

// Fixed Gauss–Jacobi rule: ∫_{-1}^{1} f(t) (1−t)^α (1+t)^β dt ≈ Σ w_i f(t_i).
// All weights positive.
struct GaussJacobiRule {
    int n = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;

    double apply(const std::function<double(double)>& f) const;
};

GaussJacobiRule make_gauss_jacobi(int n, double alpha, double beta);

} // namespace dunkl

#endif
