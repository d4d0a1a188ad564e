#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Thin value type over GMP's mpq_class. Every result is kept in canonical
 * form (positive denominator, coprime numerator/denominator), so equality is
 * structural and printing is deterministic. Division by zero raises
 * PoleError instead of trapping inside GMP.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bpba {

class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}                  // NOLINT(google-explicit-constructor)
    Rational(int n) : value_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Parses "p/q" or "p"; p may carry a sign, q must be a nonzero decimal integer.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Multiplicative inverse; PoleError on zero.
    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    /// Integer power, negative exponents allowed for nonzero values.
    Rational pow(int e) const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Free-function spelling of Rational::parse.
inline Rational parse_rational(std::string_view text) { return Rational::parse(text); }

/// (-1)^n as a Rational.
inline Rational sign_power(long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace bpba
