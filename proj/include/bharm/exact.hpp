#ifndef BHARM_EXACT_HPP
#define BHARM_EXACT_HPP

#include <string>
#include <vector>

#include "bharm/rational.hpp"

namespace bharm {

// A closed-form constant of the shape
//
//     coeff * 2^a * pi^b * prod Gamma(p_i) / prod Gamma(q_j)
//
// with every exponent and Gamma argument an exact rational. This is the
// shape of every normalizer in the library (transform constants, kernel
// prefactors, cone normalizers), so products, quotients, powers and
// equality can be decided exactly instead of through floating point.
//
// Constants are kept in a canonical form: equal Gamma arguments cancel,
// the recurrence Gamma(x) = (x-1) Gamma(x-1) pulls every remaining
// argument into (0, 1], Gamma(1) is dropped and Gamma(1/2) is folded into
// pi^(1/2). A Gamma argument at a pole (0, -1, -2, ...) that survives
// cancellation marks the constant degenerate; degenerate constants carry
// the pole location, compare structurally, and refuse numeric evaluation.
class ExactConstant {
public:
    ExactConstant() : coeff_(1) {}

    static ExactConstant zero();
    static ExactConstant from_rational(const Rational& c);

    ExactConstant& mul_rational(const Rational& c);
    ExactConstant& mul_two_pow(const Rational& e);
    ExactConstant& mul_pi_pow(const Rational& e);
    ExactConstant& mul_gamma(const Rational& arg);
    ExactConstant& div_gamma(const Rational& arg);

    ExactConstant operator*(const ExactConstant& o) const;
    ExactConstant operator/(const ExactConstant& o) const;
    ExactConstant pow(int e) const;
    ExactConstant negated() const;

    bool is_zero() const { return !degenerate_ && coeff_.sign() == 0; }
    bool degenerate() const { return degenerate_; }
    Rational pole_argument() const;  // requires degenerate()

    // Numeric value; throws DegenerateConstantError at a Gamma pole.
    double value() const;
    int sign() const;  // -1, 0, +1; throws if degenerate

    bool equals(const ExactConstant& o) const;
    std::string str() const;

    const Rational& coeff() const { return coeff_; }
    const Rational& two_exp() const { return two_; }
    const Rational& pi_exp() const { return pi_; }

private:
    void canonicalize();

    Rational coeff_;
    Rational two_, pi_;
    std::vector<Rational> gnum_, gden_;
    bool degenerate_ = false;
    Rational pole_{0};
};

}  // namespace bharm

#endif
