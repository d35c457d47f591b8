#include "bharm/rational.hpp"

#include <cstdlib>
#include <numeric>

#include "bharm/errors.hpp"

namespace bharm {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw DomainError("rational overflow in multiplication");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw DomainError("rational overflow in addition");
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ConfigError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational n = parse(s.substr(0, slash));
        Rational d = parse(s.substr(slash + 1));
        return n / d;
    }
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    std::int64_t num = 0, den = 1;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) throw ConfigError("malformed rational literal: " + s);
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw ConfigError("malformed rational literal: " + s);
        seen_digit = true;
        num = checked_add(checked_mul(num, 10), c - '0');
        if (seen_dot) den = checked_mul(den, 10);
    }
    if (!seen_digit) throw ConfigError("malformed rational literal: " + s);
    return Rational(neg ? -num : num, den);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t lhs = checked_mul(num_, o.den_ / g);
    std::int64_t rhs = checked_mul(o.num_, den_ / g);
    return Rational(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    Rational a(num_, o.den_);  // cross-cancel before multiplying
    Rational b(o.num_, den_);
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
    // Denominators are positive, so cross-multiplication preserves order.
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

}  // namespace bharm
