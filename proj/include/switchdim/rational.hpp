#pragma once

// Exact rational scalar backed by GMP. Values are kept in lowest terms with a
// positive denominator; every arithmetic result is canonical.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace switchdim {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
    explicit Rational(const mpz_class& value) : value_(value) {}

    /// Parses "n", "-n" or "n/d" (d != 0). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }
    /// Bit length of numerator plus denominator; used for pivot selection.
    std::size_t bit_size() const;

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// a -= b * c without temporaries.
    friend void sub_mul(Rational& a, const Rational& b, const Rational& c);
    /// a += b * c without temporaries.
    friend void add_mul(Rational& a, const Rational& b, const Rational& c);

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

Rational abs(const Rational& r);

}  // namespace switchdim
