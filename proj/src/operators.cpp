#include "dunkl/operators.hpp"

#include "dunkl/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

Polynomial dunkl_op_var(const Polynomial& p, int var, const Rational& kappa) {
    Polynomial out = p.derivative(var);
    if (kappa != 0) out += p.reflect_diff_quotient(var) * kappa;
    return out;
}

Polynomial dunkl_op(const RootSystemConfig& cfg, int i, const Polynomial& p) {
    if (p.dimension() != cfg.d) throw std::invalid_argument("dunkl_op: polynomial dimension mismatch");
    if (i < 1 || i > cfg.d) throw std::invalid_argument("dunkl_op: coordinate out of range");
    return dunkl_op_var(p, i, cfg.k[i - 1]);
}

Polynomial dunkl_laplacian_poly(const RootSystemConfig& cfg, const Polynomial& p) {
    if (p.dimension() != cfg.d) throw std::invalid_argument("dunkl_laplacian_poly: polynomial dimension mismatch");
    Polynomial out(cfg.d);
    for (int i = 1; i <= cfg.d; ++i) out += dunkl_op_var(dunkl_op_var(p, i, cfg.k[i - 1]), i, cfg.k[i - 1]);
    return out;
}

Polynomial laplacian_poly(const Polynomial& p) {
    Polynomial out(p.dimension());
    for (int i = 1; i <= p.dimension(); ++i) out += p.derivative(i).derivative(i);
    return out;
}

double dunkl_laplacian_numeric(const RootSystemConfig& cfg, const BlackBoxFunction& f, std::span<const double> x,
                               double h) {
    if (f.dim != cfg.d) throw std::invalid_argument("dunkl_laplacian_numeric: function dimension mismatch");
    if (static_cast<int>(x.size()) != cfg.d)
        throw std::invalid_argument("dunkl_laplacian_numeric: point dimension mismatch");
    if (!(h > 0.0)) throw std::invalid_argument("dunkl_laplacian_numeric: step must be positive");
    for (int i = 0; i < cfg.d; ++i) {
        if (cfg.k[i] != 0 && std::abs(x[i]) <= 10.0 * h)
            throw std::invalid_argument("dunkl_laplacian_numeric: coordinate " + std::to_string(i + 1) +
                                        " too close to its reflection hyperplane (|x_i| <= 10h)");
    }

    std::vector<double> point(x.begin(), x.end());
    double f0 = f.eval(point);
    double result = 0.0;
    for (int i = 0; i < cfg.d; ++i) {
        double xi = x[i];
        point[i] = xi + h;
        double fp = f.eval(point);
        point[i] = xi - h;
        double fm = f.eval(point);
        point[i] = xi;
        result += (fp - 2.0 * f0 + fm) / (h * h);

        if (cfg.k[i] == 0) continue;
        double ki = to_double(cfg.k[i]);
        double grad_i = f.has_partial() ? f.partial(point, i + 1) : (fp - fm) / (2.0 * h);
        point[i] = -xi;
        double f_reflected = f.eval(point);
        point[i] = xi;
        result += 2.0 * ki * (grad_i / xi - (f0 - f_reflected) / (2.0 * xi * xi));
    }
    return result;
}

GreenResult green_check(const RootSystemConfig& cfg, const BlackBoxFunction& f, double t) {
    if (cfg.d != 1) throw std::invalid_argument("green_check: requires d = 1");
    if (!(t > 0.0)) throw std::invalid_argument("green_check: radius must be positive");

    double k = to_double(cfg.k[0]);
    // Pair sum Δ_k f(y) + Δ_k f(−y): the reflection difference terms cancel,
    // leaving f''(y) + f''(−y) + 2k (f'(y) − f'(−y)) / y.
    auto integrand = [&](double y) {
        double pair = f.d2({&y, 1}, 1);
        double ym = -y;
        pair += f.d2({&ym, 1}, 1);
        if (k != 0.0) pair += 2.0 * k * (f.d1({&y, 1}, 1) - f.d1({&ym, 1}, 1)) / y;
        return weight(cfg, {&y, 1}) * pair;
    };
    IntegrationResult quad =
        integrate_adaptive(integrand, 0.0, t, cfg.quad_rel_tol, 1e-14, cfg.quad_max_depth);

    GreenResult out;
    out.lhs = quad.value;
    out.quad_error = quad.abs_error;
    double mt = -t;
    out.rhs = f.d1({&t, 1}, 1) * weight(cfg, {&t, 1}) - f.d1({&mt, 1}, 1) * weight(cfg, {&mt, 1});
    out.residual = out.lhs - out.rhs;
    return out;
}

} // namespace dunkl
