#include "dunkl/black_box.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace dunkl {

double BlackBoxFunction::d1(std::span<const double> x, int i, double h) const {
    if (partial) return partial(x, i);
    std::vector<double> p(x.begin(), x.end());
    p[i - 1] = x[i - 1] + h;
    double fp = eval(p);
    p[i - 1] = x[i - 1] - h;
    double fm = eval(p);
    return (fp - fm) / (2.0 * h);
}

double BlackBoxFunction::d2(std::span<const double> x, int i, double h) const {
    if (second) return second(x, i);
    if (partial) {
        std::vector<double> p(x.begin(), x.end());
        p[i - 1] = x[i - 1] + h;
        double gp = partial(p, i);
        p[i - 1] = x[i - 1] - h;
        double gm = partial(p, i);
        return (gp - gm) / (2.0 * h);
    }
    std::vector<double> p(x.begin(), x.end());
    double f0 = eval(p);
    p[i - 1] = x[i - 1] + h;
    double fp = eval(p);
    p[i - 1] = x[i - 1] - h;
    double fm = eval(p);
    return (fp - 2.0 * f0 + fm) / (h * h);
}

BlackBoxFunction black_box_1d(std::function<double(double)> f, Smoothness s, std::optional<double> support_radius) {
    BlackBoxFunction bb;
    bb.dim = 1;
    bb.eval = [f = std::move(f)](std::span<const double> x) { return f(x[0]); };
    bb.smoothness = s;
    bb.support_radius = support_radius;
    return bb;
}

BlackBoxFunction black_box_1d(std::function<double(double)> f, std::function<double(double)> df,
                              std::function<double(double)> d2f, Smoothness s, std::optional<double> support_radius) {
    BlackBoxFunction bb = black_box_1d(std::move(f), s, support_radius);
    bb.partial = [df = std::move(df)](std::span<const double> x, int) { return df(x[0]); };
    bb.second = [d2f = std::move(d2f)](std::span<const double> x, int) { return d2f(x[0]); };
    return bb;
}

BlackBoxFunction black_box_from_poly(const Polynomial& p) {
    auto shared = std::make_shared<Polynomial>(p);
    auto derivs = std::make_shared<std::vector<Polynomial>>();
    auto seconds = std::make_shared<std::vector<Polynomial>>();
    for (int i = 1; i <= p.dimension(); ++i) {
        derivs->push_back(p.derivative(i));
        seconds->push_back(derivs->back().derivative(i));
    }
    BlackBoxFunction bb;
    bb.dim = p.dimension();
    bb.eval = [shared](std::span<const double> x) { return shared->eval(x); };
    bb.partial = [derivs](std::span<const double> x, int i) { return (*derivs)[i - 1].eval(x); };
    bb.second = [seconds](std::span<const double> x, int i) { return (*seconds)[i - 1].eval(x); };
    bb.smoothness = Smoothness::CInf;
    return bb;
}

RadialProfile gaussian_profile(double scale) {
    double s2 = scale * scale;
    return RadialProfile{[s2](double t) { return std::exp(-t * t / (2.0 * s2)); }, std::nullopt, Smoothness::CInf};
}

namespace {

// σ(t) = e^{−1/t} on t > 0, extended by zero; the C^∞ building block.
double sigma0(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double sigma1(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }
double sigma2(double t) {
    if (t <= 0.0) return 0.0;
    double s = std::exp(-1.0 / t);
    return s * (1.0 / (t * t * t * t) - 2.0 / (t * t * t));
}

struct StepEval {
    double value, d1, d2;
};

// Smooth step s(t) = σ(t) / (σ(t) + σ(1−t)); 0 for t ≤ 0, 1 for t ≥ 1.
StepEval smooth_step(double t) {
    if (t <= 0.0) return {0.0, 0.0, 0.0};
    if (t >= 1.0) return {1.0, 0.0, 0.0};
    double u = sigma0(t), v = sigma0(1.0 - t);
    double up = sigma1(t), vp = -sigma1(1.0 - t);
    double upp = sigma2(t), vpp = sigma2(1.0 - t);
    double w = u + v;
    double wp = up + vp;
    double num = up * v - u * vp;
    double s = u / w;
    double s1 = num / (w * w);
    double s2 = (upp * v - u * vpp) / (w * w) - 2.0 * num * wp / (w * w * w);
    return {s, s1, s2};
}

} // namespace

SmoothBump::SmoothBump(double center, double radius, double amplitude, double sharpness)
    : center_(center), radius_(radius), amplitude_(amplitude), sharpness_(sharpness) {
    if (radius <= 0.0) throw std::invalid_argument("SmoothBump radius must be positive");
    if (sharpness <= 0.0) throw std::invalid_argument("SmoothBump sharpness must be positive");
}

double SmoothBump::value(double t) const {
    double s = (t - center_) / radius_;
    double q = 1.0 - s * s;
    if (q <= 0.0) return 0.0;
    return amplitude_ * std::exp(-sharpness_ * s * s / q);
}

double SmoothBump::deriv1(double t) const {
    double s = (t - center_) / radius_;
    double q = 1.0 - s * s;
    if (q <= 0.0) return 0.0;
    double h = std::exp(-sharpness_ * s * s / q);
    return amplitude_ * (-2.0 * sharpness_ * s * h / (q * q)) / radius_;
}

double SmoothBump::deriv2(double t) const {
    double s = (t - center_) / radius_;
    double q = 1.0 - s * s;
    if (q <= 0.0) return 0.0;
    double h = std::exp(-sharpness_ * s * s / q);
    double w = sharpness_;
    double g2 = -2.0 * w * h * (1.0 / (q * q) - 2.0 * w * s * s / (q * q * q * q) + 4.0 * s * s / (q * q * q));
    return amplitude_ * g2 / (radius_ * radius_);
}

BlackBoxFunction SmoothBump::as_black_box() const {
    SmoothBump copy = *this;
    double reach = std::abs(center_) + radius_;
    return black_box_1d([copy](double t) { return copy.value(t); }, [copy](double t) { return copy.deriv1(t); },
                        [copy](double t) { return copy.deriv2(t); }, Smoothness::CInf, reach);
}

RadialProfile SmoothBump::as_radial_profile() const {
    SmoothBump copy = *this;
    return RadialProfile{[copy](double t) { return copy.value(t); }, std::abs(center_) + radius_, Smoothness::CInf};
}

PlateauBump::PlateauBump(double a, double b, double transition_width) : a_(a), b_(b), delta_(transition_width) {
    if (!(a < b)) throw std::invalid_argument("PlateauBump requires a < b");
    if (transition_width <= 0.0) throw std::invalid_argument("PlateauBump transition width must be positive");
}

double PlateauBump::value(double t) const {
    StepEval left = smooth_step((t - (a_ - delta_)) / delta_);
    StepEval right = smooth_step(((b_ + delta_) - t) / delta_);
    return left.value * right.value;
}

double PlateauBump::deriv1(double t) const {
    StepEval left = smooth_step((t - (a_ - delta_)) / delta_);
    StepEval right = smooth_step(((b_ + delta_) - t) / delta_);
    double lp = left.d1 / delta_;
    double rp = -right.d1 / delta_;
    return lp * right.value + left.value * rp;
}

double PlateauBump::deriv2(double t) const {
    StepEval left = smooth_step((t - (a_ - delta_)) / delta_);
    StepEval right = smooth_step(((b_ + delta_) - t) / delta_);
    double lp = left.d1 / delta_;
    double rp = -right.d1 / delta_;
    double lpp = left.d2 / (delta_ * delta_);
    double rpp = right.d2 / (delta_ * delta_);
    return lpp * right.value + 2.0 * lp * rp + left.value * rpp;
}

BlackBoxFunction PlateauBump::as_black_box() const {
    PlateauBump copy = *this;
    double reach = std::max(std::abs(support_lo()), std::abs(support_hi()));
    return black_box_1d([copy](double t) { return copy.value(t); }, [copy](double t) { return copy.deriv1(t); },
                        [copy](double t) { return copy.deriv2(t); }, Smoothness::CInf, reach);
}

} // namespace dunkl
