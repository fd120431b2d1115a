#pragma once

// Reduced ratios scale * num(u) / den(u) of integer polynomials.
//
// After construction num and den are coprime, both primitive with positive
// leading coefficient, and all numeric content lives in scale. Denominators
// built from factors (u + j) therefore come out monic.

#include "jm/polynomial.hpp"

#include <string>

namespace jm {

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1), scale_(0) {}
    RationalFunction(const Rational& c);
    RationalFunction(long c) : RationalFunction(Rational(c)) {}
    RationalFunction(const IntPolynomial& p);
    RationalFunction(IntPolynomial num, IntPolynomial den, Rational scale = 1);

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    const Rational& scale() const { return scale_; }
    bool is_zero() const { return scale_ == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Throws PoleError when den vanishes at x.
    Rational evaluate(const Rational& x) const;
    /// f(-u)
    RationalFunction reflect() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void reduce();
    IntPolynomial num_;
    IntPolynomial den_;
    Rational scale_;
};

/// e.g. "1/2 * (u + 2)/(u + 1)"
std::string to_string(const RationalFunction& f, const std::string& var = "u");

} // namespace jm
