#include "dunkl/config.hpp"

#include "dunkl/gammafn.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dunkl {

RootSystemConfig make_config(int d, std::vector<Rational> k, double gamma_tol) {
    if (d < 1) throw std::invalid_argument("make_config: dimension must be >= 1");
    if (static_cast<int>(k.size()) != d)
        throw std::invalid_argument("make_config: multiplicity vector length must equal dimension");
    for (const Rational& ki : k)
        if (ki < 0) throw std::invalid_argument("make_config: multiplicities must be non-negative");

    RootSystemConfig cfg;
    cfg.d = d;
    cfg.k = std::move(k);
    cfg.gamma = Rational(0);
    for (const Rational& ki : cfg.k) cfg.gamma += ki;
    cfg.lambda = cfg.gamma + Rational(d, 2) - 1;
    if (cfg.lambda <= 0)
        throw std::invalid_argument("make_config: lambda = gamma + d/2 - 1 = " + format_rational(cfg.lambda) +
                                    " violates the standing assumption lambda > 0");

    // c_k^{-1} factors over coordinates into one-dimensional Gaussian moments:
    // ∫ e^{-y²/2} 2^k |y|^{2k} dy = 2^k 2^{k+1/2} Γ(k+1/2).
    double ck_inv = 1.0;
    for (const Rational& ki : cfg.k) {
        double kd = to_double(ki);
        ck_inv *= std::pow(2.0, 2.0 * kd + 0.5) * gamma_rational(ki + Rational(1, 2));
    }
    cfg.c_k = 1.0 / ck_inv;

    // d_k = 2^γ · 2 · Π Γ(k_i+1/2) / Γ(λ+1), cross-checked against the
    // c_k route 1/(c_k 2^λ Γ(λ+1)).
    double dk = 2.0 * std::pow(2.0, to_double(cfg.gamma));
    for (const Rational& ki : cfg.k) dk *= gamma_rational(ki + Rational(1, 2));
    dk /= gamma_rational(cfg.lambda + 1);
    cfg.d_k = dk;

    double dk_alt = 1.0 / (cfg.c_k * std::pow(2.0, to_double(cfg.lambda)) * gamma_rational(cfg.lambda + 1));
    if (std::abs(dk - dk_alt) > gamma_tol * std::abs(dk))
        throw std::runtime_error("make_config: the two d_k formulas disagree beyond tolerance");

    return cfg;
}

double weight(const RootSystemConfig& cfg, std::span<const double> x) {
    if (static_cast<int>(x.size()) != cfg.d) throw std::invalid_argument("weight: point dimension mismatch");
    double w = 1.0;
    for (int i = 0; i < cfg.d; ++i) {
        double kd = to_double(cfg.k[i]);
        if (kd == 0.0) continue;
        w *= std::pow(2.0 * x[i] * x[i], kd);
    }
    return w;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Accepts `["1", "3/2"]`, `"1" "3/2"` or bare `1 3/2` / `1, 3/2`.
std::vector<Rational> parse_rational_list(std::string value) {
    for (char& c : value)
        if (c == '[' || c == ']' || c == ',' || c == '"' || c == '\'') c = ' ';
    std::vector<Rational> out;
    std::istringstream in(value);
    std::string token;
    while (in >> token) out.push_back(parse_rational(token));
    return out;
}

} // namespace

RootSystemConfig ConfigFile::build() const {
    RootSystemConfig cfg = make_config(d, k, gamma_precision);
    cfg.quad_rel_tol = quad_rel_tol;
    cfg.quad_max_depth = quad_max_depth;
    return cfg;
}

ConfigFile parse_config_text(const std::string& text) {
    ConfigFile file;
    bool have_k = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "d")
                file.d = std::stoi(value);
            else if (key == "k") {
                file.k = parse_rational_list(value);
                have_k = true;
            } else if (key == "gamma_precision")
                file.gamma_precision = std::stod(value);
            else if (key == "quad_rel_tol")
                file.quad_rel_tol = std::stod(value);
            else if (key == "quad_max_depth")
                file.quad_max_depth = std::stoi(value);
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_k) throw std::invalid_argument("config: missing required key 'k'");
    return file;
}

ConfigFile load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace dunkl
