#include "dunkl/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace dunkl {

namespace {

// GSL aborts by default; all statuses are handled at the call sites.
const bool gsl_handler_disabled = [] {
    gsl_set_error_handler_off();
    return true;
}();

double callback_trampoline(double x, void* params) {
    return (*static_cast<const std::function<double(double)>*>(params))(x);
}

std::size_t workspace_limit(int max_depth) {
    int depth = std::clamp(max_depth, 4, 24);
    return static_cast<std::size_t>(1) << std::min(depth, 16);
}

using WorkspacePtr = std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)>;

IntegrationResult run_qag(const std::function<double(double)>& f, double a, double b, bool to_infinity,
                          double rel_tol, double abs_tol, int max_depth) {
    std::size_t limit = workspace_limit(max_depth);
    WorkspacePtr ws(gsl_integration_workspace_alloc(limit), gsl_integration_workspace_free);
    if (!ws) throw std::runtime_error("quadrature workspace allocation failed");

    gsl_function gf;
    gf.function = &callback_trampoline;
    gf.params = const_cast<std::function<double(double)>*>(&f);

    IntegrationResult out;
    int status;
    if (to_infinity)
        status = gsl_integration_qagiu(&gf, a, abs_tol, rel_tol, limit, ws.get(), &out.value, &out.abs_error);
    else
        status = gsl_integration_qag(&gf, a, b, abs_tol, rel_tol, limit, GSL_INTEG_GAUSS31, ws.get(), &out.value,
                                     &out.abs_error);

    if (status != GSL_SUCCESS && status != GSL_EROUND) {
        throw std::runtime_error(std::string("adaptive quadrature failed (") + gsl_strerror(status) +
                                 "), achieved abs error " + std::to_string(out.abs_error));
    }
    return out;
}

} // namespace

IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                                     double abs_tol, int max_depth) {
    if (a == b) return {0.0, 0.0};
    return run_qag(f, a, b, false, rel_tol, abs_tol, max_depth);
}

IntegrationResult integrate_to_inf(const std::function<double(double)>& f, double a, double rel_tol, double abs_tol,
                                   int max_depth) {
    return run_qag(f, a, 0.0, true, rel_tol, abs_tol, max_depth);
}

double GaussJacobiRule::apply(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += weights[i] * f(nodes[i]);
    return sum;
}

GaussJacobiRule make_gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("Gauss-Jacobi rule needs at least one node");
    if (alpha <= -1.0 || beta <= -1.0) throw std::invalid_argument("Gauss-Jacobi exponents must exceed -1");
    using FixedPtr = std::unique_ptr<gsl_integration_fixed_workspace, decltype(&gsl_integration_fixed_free)>;
    FixedPtr ws(gsl_integration_fixed_alloc(gsl_integration_fixed_jacobi, static_cast<std::size_t>(n), -1.0, 1.0,
                                            alpha, beta),
                gsl_integration_fixed_free);
    if (!ws) throw std::runtime_error("Gauss-Jacobi rule construction failed");

    GaussJacobiRule rule;
    rule.n = n;
    rule.alpha = alpha;
    rule.beta = beta;
    const double* x = gsl_integration_fixed_nodes(ws.get());
    const double* w = gsl_integration_fixed_weights(ws.get());
    rule.nodes.assign(x, x + n);
    rule.weights.assign(w, w + n);
    for (double wi : rule.weights)
        if (!(wi > 0.0)) throw std::runtime_error("Gauss-Jacobi rule produced a non-positive weight");
    return rule;
}

} // namespace dunkl
