#include "dunkl/rational.hpp"

namespace dunkl {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto scan_digits = [&](std::string_view what) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start)
            throw std::invalid_argument("expected digits in " + std::string(what) + " of rational literal '" +
                                        std::string(text) + "'");
        return std::string(text.substr(start, pos - start));
    };
    BigInt num(scan_digits("numerator"));
    BigInt den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = BigInt(scan_digits("denominator"));
        if (den == 0) throw std::invalid_argument("zero denominator in rational literal '" + std::string(text) + "'");
    }
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in rational literal '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) {
        out += '/';
        out += denominator(q).str();
    }
    return out;
}

Rational rational_pow(const Rational& q, unsigned n) {
    Rational result(1);
    Rational base = q;
    while (n > 0) {
        if (n & 1u) result *= base;
        base *= base;
        n >>= 1u;
    }
    return result;
}

} // namespace dunkl
