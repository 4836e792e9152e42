#include "appell/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace appell {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) p = -p;
    return Rational(p, q);
}

std::string Rational::to_string() const {
    // mpq_get_str already emits "p" when q = 1 and "p/q" otherwise.
    return value_.get_str(10);
}

Rational pow(const Rational& base, unsigned n) {
    Rational result(1);
    Rational b = base;
    while (n > 0) {
        if (n & 1u) result *= b;
        n >>= 1;
        if (n > 0) b *= b;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace appell
