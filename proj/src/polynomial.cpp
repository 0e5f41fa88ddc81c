#include "dunkl/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dunkl {

namespace {

unsigned total_degree(const Exponents& e) {
    unsigned sum = 0;
    for (unsigned v : e) sum += v;
    return sum;
}

void check_dimension_match(const Polynomial& a, const Polynomial& b, const char* op) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument(std::string("polynomial dimension mismatch in ") + op);
}

} // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(int dimension) : dim_(dimension) {
    if (dimension < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

Polynomial Polynomial::constant(int dimension, const Rational& c) {
    Polynomial p(dimension);
    p.add_term(Exponents(dimension, 0), c);
    return p;
}

Polynomial Polynomial::monomial(int dimension, Exponents exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != dimension)
        throw std::invalid_argument("monomial exponent vector length must equal dimension");
    Polynomial p(dimension);
    p.add_term(exponents, c);
    return p;
}

Polynomial Polynomial::variable(int dimension, int i) {
    if (i < 1 || i > dimension) throw std::invalid_argument("variable index out of range");
    Exponents e(dimension, 0);
    e[i - 1] = 1;
    return monomial(dimension, e, Rational(1));
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

void Polynomial::add_term(const Exponents& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != dim_)
        throw std::invalid_argument("term exponent vector length must equal dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_dimension_match(*this, rhs, "operator+");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_dimension_match(*this, rhs, "operator-");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    check_dimension_match(lhs, rhs, "operator*");
    Polynomial out(lhs.dimension());
    Exponents e(lhs.dimension());
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < lhs.dimension(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(dim_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    // Powers computed per variable up to the maximum needed exponent.
    std::vector<std::vector<Rational>> powers(dim_);
    for (int i = 0; i < dim_; ++i) powers[i].push_back(Rational(1));
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < dim_; ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            term *= pw[e[i]];
        }
        sum += term;
    }
    return sum;
}

double Polynomial::eval(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    std::vector<std::vector<double>> powers(dim_);
    for (int i = 0; i < dim_; ++i) powers[i].push_back(1.0);
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = to_double(c);
        for (int i = 0; i < dim_; ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            term *= pw[e[i]];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 1 || i > dim_) throw std::invalid_argument("derivative coordinate out of range");
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        Exponents de = e;
        de[i - 1] -= 1;
        out.add_term(de, c * Rational(e[i - 1]));
    }
    return out;
}

Polynomial Polynomial::reflect(int i) const {
    if (i < 1 || i > dim_) throw std::invalid_argument("reflection coordinate out of range");
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, (e[i - 1] % 2 == 0) ? c : -c);
    return out;
}

Polynomial Polynomial::compose_signs(std::span<const int> signs) const {
    if (static_cast<int>(signs.size()) != dim_)
        throw std::invalid_argument("sign vector length must equal dimension");
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
        bool flip = false;
        for (int i = 0; i < dim_; ++i)
            if (signs[i] < 0 && e[i] % 2 == 1) flip = !flip;
        out.terms_.emplace(e, flip ? -c : c);
    }
    return out;
}

Polynomial Polynomial::reflect_diff_quotient(int i) const {
    if (i < 1 || i > dim_) throw std::invalid_argument("reflection coordinate out of range");
    // p - p∘σ_i doubles the terms odd in x_i and kills the even ones, so the
    // quotient by x_i is exact.
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] % 2 == 0) continue;
        Exponents qe = e;
        qe[i - 1] -= 1;
        out.add_term(qe, c * Rational(2));
    }
    return out;
}

Polynomial Polynomial::substitute_scaled(int i, const Rational& s) const {
    if (i < 1 || i > dim_) throw std::invalid_argument("substitution coordinate out of range");
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * rational_pow(s, e[i - 1]));
    return out;
}

Polynomial Polynomial::embed(int new_dimension, int offset) const {
    if (offset < 0 || dim_ + offset > new_dimension)
        throw std::invalid_argument("embedding does not fit into target dimension");
    Polynomial out(new_dimension);
    Exponents e(new_dimension, 0);
    for (const auto& [old_e, c] : terms_) {
        std::fill(e.begin(), e.end(), 0u);
        std::copy(old_e.begin(), old_e.end(), e.begin() + offset);
        out.terms_.emplace(e, c);
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest degree first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << format_rational(it->second);
        const Exponents& e = it->first;
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            out << " x" << (i + 1);
            if (e[i] > 1) out << '^' << e[i];
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;
    int dim;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial syntax error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool at_digit() const { return pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; }

    std::string scan_digits(const char* what) {
        std::size_t start = pos;
        while (at_digit()) ++pos;
        if (pos == start) fail(std::string("expected digits for ") + what);
        return std::string(text.substr(start, pos - start));
    }

    Rational parse_coefficient() {
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        BigInt num(scan_digits("coefficient"));
        BigInt den(1);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = BigInt(scan_digits("denominator"));
            if (den == 0) fail("zero denominator");
        }
        if (negative) num = -num;
        return Rational(num, den);
    }

    unsigned long to_ulong(const std::string& digits, const char* what) {
        try {
            return std::stoul(digits);
        } catch (const std::out_of_range&) {
            fail(std::string(what) + " out of range");
        }
    }

    // Returns false when no variable factor starts here.
    bool parse_var(Exponents& e) {
        if (pos >= text.size() || text[pos] != 'x') return false;
        ++pos;
        std::string idx_digits = scan_digits("variable index");
        unsigned long idx = to_ulong(idx_digits, "variable index");
        if (idx < 1 || idx > static_cast<unsigned long>(dim))
            fail("variable index " + idx_digits + " exceeds dimension " + std::to_string(dim));
        unsigned long exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exponent = to_ulong(scan_digits("exponent"), "exponent");
            if (exponent > 1000000ul) fail("exponent out of range");
        }
        e[idx - 1] += static_cast<unsigned>(exponent);
        return true;
    }

    Polynomial parse() {
        Polynomial p(dim);
        skip_spaces();
        if (pos == text.size()) fail("empty polynomial");
        while (true) {
            Rational c = parse_coefficient();
            Exponents e(dim, 0);
            while (true) {
                std::size_t before = pos;
                skip_spaces();
                if (!parse_var(e)) {
                    pos = before;
                    break;
                }
            }
            p.add_term(e, c);
            skip_spaces();
            if (pos == text.size()) break;
            if (text[pos] != '+') fail("expected '+' between terms");
            ++pos;
            skip_spaces();
        }
        return p;
    }
};

} // namespace

Polynomial parse_poly(std::string_view text, int dimension) {
    PolyParser parser{text, 0, dimension};
    return parser.parse();
}

} // namespace dunkl
