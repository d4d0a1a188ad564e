#include "bpba/rational.hpp"

#include <cctype>
#include <ostream>

#include "bpba/error.hpp"

namespace bpba {

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw PoleError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
    if (value_.get_den() == 0) {
        throw PoleError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_decimal(num, true)) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class n = to_mpz(num);
    mpz_class d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!is_decimal(den, false)) {
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        }
        d = to_mpz(den);
        if (d == 0) {
            throw PoleError("zero denominator in '" + std::string(text) + "'");
        }
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw PoleError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw PoleError("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if ((e & 1) != 0) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace bpba
