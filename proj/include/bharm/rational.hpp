#ifndef BHARM_RATIONAL_HPP
#define BHARM_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace bharm {

// Exact rational arithmetic on int64 numerator/denominator, always kept in
// lowest terms with a positive denominator. Used for weight indices, kernel
// exponents and the symbolic constant algebra, where every quantity is a
// small rational; overflow is checked and raised, not wrapped.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    // Parses integers, fractions ("3/4") and finite decimals ("0.6" -> 3/5).
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    // True for 0, -1, -2, ...: the Gamma poles.
    bool is_nonpositive_integer() const { return den_ == 1 && num_ <= 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

private:
    std::int64_t num_, den_;
};

}  // namespace bharm

#endif
