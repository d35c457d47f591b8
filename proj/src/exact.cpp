#include "bharm/exact.hpp"

#include <algorithm>
#include <cmath>

#include "bharm/errors.hpp"

namespace bharm {

namespace {
const Rational kHalf(1, 2);
}

ExactConstant ExactConstant::zero() {
    ExactConstant c;
    c.coeff_ = Rational(0);
    return c;
}

ExactConstant ExactConstant::from_rational(const Rational& r) {
    ExactConstant c;
    c.coeff_ = r;
    c.canonicalize();
    return c;
}

ExactConstant& ExactConstant::mul_rational(const Rational& c) {
    coeff_ *= c;
    canonicalize();
    return *this;
}

ExactConstant& ExactConstant::mul_two_pow(const Rational& e) {
    two_ += e;
    return *this;
}

ExactConstant& ExactConstant::mul_pi_pow(const Rational& e) {
    pi_ += e;
    return *this;
}

ExactConstant& ExactConstant::mul_gamma(const Rational& arg) {
    gnum_.push_back(arg);
    canonicalize();
    return *this;
}

ExactConstant& ExactConstant::div_gamma(const Rational& arg) {
    gden_.push_back(arg);
    canonicalize();
    return *this;
}

ExactConstant ExactConstant::operator*(const ExactConstant& o) const {
    ExactConstant r = *this;
    r.coeff_ *= o.coeff_;
    r.two_ += o.two_;
    r.pi_ += o.pi_;
    r.gnum_.insert(r.gnum_.end(), o.gnum_.begin(), o.gnum_.end());
    r.gden_.insert(r.gden_.end(), o.gden_.begin(), o.gden_.end());
    r.degenerate_ = false;  // re-derived after cancellation
    r.canonicalize();
    return r;
}

ExactConstant ExactConstant::operator/(const ExactConstant& o) const {
    if (o.is_zero()) throw DomainError("division by exact zero constant");
    ExactConstant r = *this;
    r.coeff_ /= o.coeff_;
    r.two_ -= o.two_;
    r.pi_ -= o.pi_;
    r.gnum_.insert(r.gnum_.end(), o.gden_.begin(), o.gden_.end());
    r.gden_.insert(r.gden_.end(), o.gnum_.begin(), o.gnum_.end());
    r.degenerate_ = false;
    r.canonicalize();
    return r;
}

ExactConstant ExactConstant::pow(int e) const {
    ExactConstant r;  // one
    if (e == 0) return r;
    ExactConstant base = *this;
    if (e < 0) {
        base = r / *this;
        e = -e;
    }
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

ExactConstant ExactConstant::negated() const {
    ExactConstant r = *this;
    r.coeff_ = -r.coeff_;
    return r;
}

Rational ExactConstant::pole_argument() const {
    if (!degenerate_) throw DomainError("constant is not degenerate");
    return pole_;
}

void ExactConstant::canonicalize() {
    auto cancel = [this]() {
        std::sort(gnum_.begin(), gnum_.end());
        std::sort(gden_.begin(), gden_.end());
        std::vector<Rational> n2, d2;
        std::size_t i = 0, j = 0;
        while (i < gnum_.size() && j < gden_.size()) {
            if (gnum_[i] == gden_[j]) {
                ++i;
                ++j;
            } else if (gnum_[i] < gden_[j]) {
                n2.push_back(gnum_[i++]);
            } else {
                d2.push_back(gden_[j++]);
            }
        }
        for (; i < gnum_.size(); ++i) n2.push_back(gnum_[i]);
        for (; j < gden_.size(); ++j) d2.push_back(gden_[j]);
        gnum_ = std::move(n2);
        gden_ = std::move(d2);
    };

    cancel();

    degenerate_ = false;
    // Shift non-pole arguments into (0, 1] by the Gamma recurrence; the
    // rational factors land in coeff_. Pole arguments are left in place and
    // flag the constant.
    auto reduce = [this](std::vector<Rational>& args, bool numerator) {
        std::vector<Rational> kept;
        for (Rational a : args) {
            if (a.is_nonpositive_integer()) {
                if (!degenerate_) {
                    degenerate_ = true;
                    pole_ = a;
                }
                kept.push_back(a);
                continue;
            }
            while (a > Rational(1)) {
                a -= Rational(1);
                if (numerator)
                    coeff_ *= a;
                else
                    coeff_ /= a;
            }
            while (a.sign() <= 0) {
                if (numerator)
                    coeff_ /= a;
                else
                    coeff_ *= a;
                a += Rational(1);
            }
            if (a == Rational(1)) continue;
            if (a == kHalf) {
                pi_ += numerator ? kHalf : -kHalf;
                continue;
            }
            kept.push_back(a);
        }
        args = std::move(kept);
    };
    reduce(gnum_, true);
    reduce(gden_, false);

    cancel();

    if (!degenerate_ && coeff_.sign() == 0) {
        two_ = pi_ = Rational(0);
        gnum_.clear();
        gden_.clear();
    }
}

double ExactConstant::value() const {
    if (degenerate_)
        throw DegenerateConstantError("Gamma pole at " + pole_.str(),
                                      pole_.value());
    double v = coeff_.value();
    v *= std::pow(2.0, two_.value());
    v *= std::pow(M_PI, pi_.value());
    for (const auto& a : gnum_) v *= std::tgamma(a.value());
    for (const auto& a : gden_) v /= std::tgamma(a.value());
    return v;
}

int ExactConstant::sign() const {
    if (degenerate_)
        throw DegenerateConstantError("Gamma pole at " + pole_.str(),
                                      pole_.value());
    // Canonical Gamma arguments lie in (0, 1), so the sign is coeff_'s.
    return coeff_.sign();
}

bool ExactConstant::equals(const ExactConstant& o) const {
    return coeff_ == o.coeff_ && two_ == o.two_ && pi_ == o.pi_ &&
           gnum_ == o.gnum_ && gden_ == o.gden_ &&
           degenerate_ == o.degenerate_;
}

std::string ExactConstant::str() const {
    std::string s = coeff_.str();
    auto exp_term = [&s](const std::string& base, const Rational& e) {
        if (e.sign() != 0) s += " * " + base + "^(" + e.str() + ")";
    };
    exp_term("2", two_);
    exp_term("pi", pi_);
    for (const auto& a : gnum_) s += " * G(" + a.str() + ")";
    for (const auto& a : gden_) s += " / G(" + a.str() + ")";
    if (degenerate_) s += " [degenerate: pole at " + pole_.str() + "]";
    return s;
}

}  // namespace bharm
