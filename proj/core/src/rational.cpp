#include "qforms/rational.hpp"

#include "qforms/numbers.hpp"

#include <ostream>

namespace qforms {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) {
        Integer z;
        if (s.empty() || mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
        return z;
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("Rational::parse: denominator must be positive");
    return Rational(num, den);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    return Rational(int_pow(numerator(), static_cast<unsigned long>(e)),
                    int_pow(denominator(), static_cast<unsigned long>(e)));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace qforms
