#ifndef GENUSKIT_RATIONAL_HPP
#define GENUSKIT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace genuskit {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}            // NOLINT(implicit)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    /// Parses "a", "-a" or "a/b".  Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    long double to_long_double() const;
    /// "n" for integers, otherwise "n/d".
    std::string to_string() const;

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& other);

    Rational operator-() const;
    Rational inverse() const;
    Rational abs() const;
    Rational pow(int exponent) const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class value_{0};
};

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace genuskit

#endif  // GENUSKIT_RATIONAL_HPP
