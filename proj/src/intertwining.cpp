#include "dunkl/intertwining.hpp"

#include "dunkl/gammafn.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace dunkl {

VkCoefficientTable::VkCoefficientTable(std::vector<Rational> multiplicities, int initial_n_max)
    : k_(std::move(multiplicities)), rows_(k_.size()), rows_double_(k_.size()) {
    if (k_.empty()) throw std::invalid_argument("VkCoefficientTable: empty multiplicity vector");
    ensure(static_cast<unsigned>(std::max(initial_n_max, 1)));
}

Rational VkCoefficientTable::closed_form(const Rational& k, unsigned n) {
    if (k == 0) return Rational(1);
    unsigned m = n / 2;
    if (n % 2 == 0) return pochhammer(Rational(1, 2), m) / pochhammer(k + Rational(1, 2), m);
    return pochhammer(Rational(3, 2), m) / (pochhammer(k + Rational(3, 2), m) * (2 * k + 1));
}

void VkCoefficientTable::ensure(unsigned n) const {
    // Caller holds no lock; this is the only mutating path.
    std::lock_guard<std::mutex> lock(mutex_);
    for (std::size_t c = 0; c < k_.size(); ++c) {
        auto& row = rows_[c];
        auto& drow = rows_double_[c];
        while (row.size() <= n) {
            row.push_back(closed_form(k_[c], static_cast<unsigned>(row.size())));
            drow.push_back(to_double(row.back()));
        }
    }
}

Rational VkCoefficientTable::coefficient(int coord, unsigned n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto& row = rows_[coord - 1];
        if (n < row.size()) return row[n];
    }
    ensure(n + 16);
    std::lock_guard<std::mutex> lock(mutex_);
    return rows_[coord - 1][n];
}

double VkCoefficientTable::coefficient_double(int coord, unsigned n) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto& row = rows_double_[coord - 1];
        if (n < row.size()) return row[n];
    }
    ensure(n + 16);
    std::lock_guard<std::mutex> lock(mutex_);
    return rows_double_[coord - 1][n];
}

const VkCoefficientTable& vk_table(const RootSystemConfig& cfg) {
    static std::mutex registry_mutex;
    static std::map<std::vector<Rational>, std::unique_ptr<VkCoefficientTable>> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry.find(cfg.k);
    if (it == registry.end())
        it = registry.emplace(cfg.k, std::make_unique<VkCoefficientTable>(cfg.k)).first;
    return *it->second;
}

namespace {

Rational vk_monomial_factor(const VkCoefficientTable& table, const Exponents& nu) {
    Rational factor(1);
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (nu[i] > 0) factor *= table.coefficient(static_cast<int>(i) + 1, nu[i]);
    return factor;
}

} // namespace

Polynomial vk_poly(const RootSystemConfig& cfg, const Polynomial& p) {
    if (p.dimension() != cfg.d) throw std::invalid_argument("vk_poly: polynomial dimension mismatch");
    const VkCoefficientTable& table = vk_table(cfg);
    Polynomial out(cfg.d);
    for (const auto& [nu, c] : p.terms()) out.add_term(nu, c * vk_monomial_factor(table, nu));
    return out;
}

Polynomial vk_inverse_poly(const RootSystemConfig& cfg, const Polynomial& p) {
    if (p.dimension() != cfg.d) throw std::invalid_argument("vk_inverse_poly: polynomial dimension mismatch");
    const VkCoefficientTable& table = vk_table(cfg);
    Polynomial out(cfg.d);
    for (const auto& [nu, c] : p.terms()) out.add_term(nu, c / vk_monomial_factor(table, nu));
    return out;
}

Rational sphere_moment(const RootSystemConfig& cfg, const Exponents& nu) {
    if (static_cast<int>(nu.size()) != cfg.d) throw std::invalid_argument("sphere_moment: multi-index length mismatch");
    unsigned total_half = 0;
    Rational numerator(1);
    for (int i = 0; i < cfg.d; ++i) {
        if (nu[i] % 2 == 1) return Rational(0);
        unsigned m = nu[i] / 2;
        total_half += m;
        numerator *= pochhammer(cfg.k[i] + Rational(1, 2), m);
    }
    return numerator / pochhammer(cfg.lambda + 1, total_half);
}

Polynomial translate_poly(const RootSystemConfig& cfg, const Polynomial& p) {
    if (p.dimension() != cfg.d) throw std::invalid_argument("translate_poly: polynomial dimension mismatch");
    const int d = cfg.d;
    const VkCoefficientTable& table = vk_table(cfg);
    Polynomial q = vk_inverse_poly(cfg, p);

    // u(x,y) = Σ_ν q_ν Σ_{a+b=ν} Π_i C(ν_i,a_i) a_{a_i,k_i} a_{b_i,k_i} x^a y^b,
    // from expanding q(z+η) against the moments of μ_x^k ⊗ μ_y^k.
    Polynomial u(2 * d);
    Exponents split(2 * d, 0);
    for (const auto& [nu, c] : q.terms()) {
        // Iterate a over the box 0 <= a_i <= ν_i.
        Exponents a(d, 0);
        while (true) {
            Rational factor = c;
            for (int i = 0; i < d; ++i) {
                unsigned ai = a[i], bi = nu[i] - a[i];
                // C(ν_i, a_i) = (a_i + b_i)! / (a_i! b_i!) via Pochhammer-free exact product
                Rational binom(1);
                for (unsigned j = 1; j <= ai; ++j) binom = binom * Rational(bi + j) / Rational(j);
                factor *= binom;
                if (ai > 0) factor *= table.coefficient(i + 1, ai);
                if (bi > 0) factor *= table.coefficient(i + 1, bi);
                split[i] = ai;
                split[d + i] = bi;
            }
            u.add_term(split, factor);

            int pos = 0;
            while (pos < d && a[pos] == nu[pos]) {
                a[pos] = 0;
                ++pos;
            }
            if (pos == d) break;
            ++a[pos];
        }
    }
    return u;
}

double translate_poly_at(const RootSystemConfig& cfg, const Polynomial& p, std::span<const double> x,
                         std::span<const double> y) {
    Polynomial u = translate_poly(cfg, p);
    std::vector<double> point(x.begin(), x.end());
    point.insert(point.end(), y.begin(), y.end());
    return u.eval(point);
}

Rational translate_poly_at_exact(const RootSystemConfig& cfg, const Polynomial& p, std::span<const Rational> x,
                                 std::span<const Rational> y) {
    Polynomial u = translate_poly(cfg, p);
    std::vector<Rational> point(x.begin(), x.end());
    point.insert(point.end(), y.begin(), y.end());
    return u.eval(point);
}

double dunkl_kernel(const RootSystemConfig& cfg, std::span<const double> x, std::span<const double> y, double tol) {
    if (static_cast<int>(x.size()) != cfg.d || static_cast<int>(y.size()) != cfg.d)
        throw std::invalid_argument("dunkl_kernel: point dimension mismatch");
    if (!(tol > 0.0)) throw std::invalid_argument("dunkl_kernel: tolerance must be positive");
    const VkCoefficientTable& table = vk_table(cfg);
    const int d = cfg.d;

    double norm_x = 0.0, norm_y = 0.0;
    for (int i = 0; i < d; ++i) {
        norm_x += x[i] * x[i];
        norm_y += y[i] * y[i];
    }
    const double s = std::sqrt(norm_x * norm_y); // |x||y| dominates the tail

    // Term n: Σ_{|ν|=n} Π_i a_{ν_i,k_i} (x_i y_i)^{ν_i} / ν_i!, from the
    // multinomial expansion of V_k[⟨·,y⟩^n/n!](x).
    std::vector<double> xy(d);
    for (int i = 0; i < d; ++i) xy[i] = x[i] * y[i];

    double sum = 0.0;
    double next_over_fact = 1.0; // s^{n+1}/(n+1)! after the update below
    Exponents nu(d, 0);
    for (unsigned n = 0;; ++n) {
        // Enumerate compositions of n into d parts.
        double term = 0.0;
        std::fill(nu.begin(), nu.end(), 0u);
        nu[0] = n;
        while (true) {
            double contrib = 1.0;
            for (int i = 0; i < d; ++i) {
                if (nu[i] == 0) continue;
                contrib *= table.coefficient_double(i + 1, nu[i]) * std::pow(xy[i], static_cast<double>(nu[i]));
                for (unsigned j = 2; j <= nu[i]; ++j) contrib /= static_cast<double>(j);
            }
            term += contrib;
            if (d == 1) break;
            // Next composition: move one unit from the first nonzero "pivot".
            int pivot = 0;
            while (pivot < d - 1 && nu[pivot] == 0) ++pivot;
            if (pivot == d - 1) break;
            unsigned head = nu[pivot];
            nu[pivot] = 0;
            nu[0] = head - 1;
            ++nu[pivot + 1];
        }
        sum += term;

        next_over_fact *= s / static_cast<double>(n + 1);
        // Geometric bound on Σ_{m>n} s^m/m! once the ratio s/(n+2) < 1.
        if (s < static_cast<double>(n + 2)) {
            double bound = next_over_fact / (1.0 - s / static_cast<double>(n + 2));
            if (bound < tol) break;
        }
        if (n > 600) throw std::runtime_error("dunkl_kernel: series failed to meet tolerance");
    }
    return sum;
}

} // namespace dunkl
