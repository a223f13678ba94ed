#include "switchdim/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace switchdim {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::string s(part);
        if (!s.empty() && s.front() == '+') s.erase(0, 1);
        const bool negative = !s.empty() && s.front() == '-';
        const std::size_t digits_from = negative ? 1 : 0;
        if (s.size() == digits_from) throw std::invalid_argument("Rational: empty integer in '" + std::string(text) + "'");
        for (std::size_t i = digits_from; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Rational: bad digit in '" + std::string(text) + "'");
        }
        return mpz_class(s, 10);
    };
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

void sub_mul(Rational& a, const Rational& b, const Rational& c) {
    if (b.is_zero() || c.is_zero()) return;
    a.value_ -= b.value_ * c.value_;
}

void add_mul(Rational& a, const Rational& b, const Rational& c) {
    if (b.is_zero() || c.is_zero()) return;
    a.value_ += b.value_ * c.value_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace switchdim
