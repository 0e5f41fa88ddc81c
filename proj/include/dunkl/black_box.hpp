#ifndef DUNKL_BLACK_BOX_HPP
#define DUNKL_BLACK_BOX_HPP

#include "dunkl/polynomial.hpp"

#include <functional>
#include <optional>
#include <span>

namespace dunkl {

enum class Smoothness { C0, C1, C2, CInf };

// A numerically evaluated function on R^d. Evaluation must be deterministic;
// the optional derivative callbacks, when present, must agree with central
// finite differences. Callbacks are shared by concurrent workers, so they
// must be safe to invoke from multiple threads.
struct BlackBoxFunction {
    int dim = 1;
    std::function<double(std::span<const double>)> eval;
    // ∂_i f, 1-based coordinate. Optional.
    std::function<double(std::span<const double>, int)> partial;
    // ∂_i² f. Optional.
    std::function<double(std::span<const double>, int)> second;
    Smoothness smoothness = Smoothness::CInf;
    std::optional<double> support_radius;

    double operator()(std::span<const double> x) const { return eval(x); }
    double operator()(double x) const {
        double p[1] = {x};
        return eval(p);
    }
    bool has_partial() const { return static_cast<bool>(partial); }
    bool has_second() const { return static_cast<bool>(second); }

    // ∂_i f via the callback when present, otherwise a central difference.
    double d1(std::span<const double> x, int i, double h = 1e-6) const;
    // ∂_i² f via the callback when present, otherwise differencing d1.
    double d2(std::span<const double> x, int i, double h = 1e-5) const;
};

BlackBoxFunction black_box_1d(std::function<double(double)> f, Smoothness s = Smoothness::CInf,
                              std::optional<double> support_radius = std::nullopt);

BlackBoxFunction black_box_1d(std::function<double(double)> f, std::function<double(double)> df,
                              std::function<double(double)> d2f, Smoothness s = Smoothness::CInf,
                              std::optional<double> support_radius = std::nullopt);

// Wraps a polynomial with exact derivative callbacks.
BlackBoxFunction black_box_from_poly(const Polynomial& p);

// Radial profile t ↦ φ(t), t ≥ 0.
struct RadialProfile {
    std::function<double(double)> eval;
    std::optional<double> support_radius; // nullopt = unbounded support
    Smoothness smoothness = Smoothness::CInf;

    double operator()(double t) const { return eval(t); }
};

RadialProfile gaussian_profile(double scale = 1.0); // φ(t) = e^{−t²/(2 scale²)}

// C^∞ bump a·exp(−w/(1−((t−c)/ρ)²)) on |t−c| < ρ, zero outside. Closed-form
// first and second derivatives.
class SmoothBump {
  public:
    SmoothBump(double center, double radius, double amplitude = 1.0, double sharpness = 1.0);

    double value(double t) const;
    double deriv1(double t) const;
    double deriv2(double t) const;

    double center() const { return center_; }
    double radius() const { return radius_; }
    double amplitude() const { return amplitude_; }

    BlackBoxFunction as_black_box() const;
    RadialProfile as_radial_profile() const; // centered bumps only (center = 0)

  private:
    double center_, radius_, amplitude_, sharpness_;
};

// C^∞ plateau: exactly 1 on [a, b], exactly 0 outside (a−δ, b+δ), built from
// the e^{−1/t} smooth step. Closed-form derivatives.
class PlateauBump {
  public:
    PlateauBump(double a, double b, double transition_width);

    double value(double t) const;
    double deriv1(double t) const;
    double deriv2(double t) const;

    double support_lo() const { return a_ - delta_; }
    double support_hi() const { return b_ + delta_; }

    BlackBoxFunction as_black_box() const;

  private:
    double a_, b_, delta_;
};

} // namespace dunkl

#endif
