#include "jm/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace jm {

RationalFunction::RationalFunction(const Rational& c) : num_(1), den_(1), scale_(c)
{
    if (c == 0) {
        num_ = IntPolynomial();
    }
}

RationalFunction::RationalFunction(const IntPolynomial& p) : num_(p), den_(1), scale_(1) { reduce(); }

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den, Rational scale)
    : num_(std::move(num)), den_(std::move(den)), scale_(std::move(scale))
{
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    reduce();
}

void RationalFunction::reduce()
{
    if (num_.is_zero() || scale_ == 0) {
        num_ = IntPolynomial();
        den_ = IntPolynomial(1);
        scale_ = 0;
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        IntPolynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_divide(num_ * g.leading(), g);
            den_ = exact_divide(den_ * g.leading(), g);
        }
    }
    Integer cn = num_.content();
    Integer cd = den_.content();
    if (num_.leading() < 0) {
        cn = -cn;
    }
    if (den_.leading() < 0) {
        cd = -cd;
    }
    num_.divide_coefficients(cn);
    den_.divide_coefficients(cd);
    scale_ *= make_rational(cn, cd);
}

Rational RationalFunction::evaluate(const Rational& x) const
{
    Rational d = den_.evaluate(x);
    if (d == 0) {
        throw PoleError("rational function evaluated at a pole");
    }
    return scale_ * num_.evaluate(x) / d;
}

RationalFunction RationalFunction::reflect() const { return RationalFunction(num_.reflect(), den_.reflect(), scale_); }

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.scale_ = -r.scale_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    // Bring both to integer numerators over the product denominator.
    const Integer l = lcm(scale_.get_den(), o.scale_.get_den());
    const Integer a = scale_.get_num() * (l / scale_.get_den());
    const Integer b = o.scale_.get_num() * (l / o.scale_.get_den());
    IntPolynomial n;
    IntPolynomial d;
    if (den_ == o.den_) {
        n = num_ * a + o.num_ * b;
        d = den_;
    } else {
        n = num_ * o.den_ * a + o.num_ * den_ * b;
        d = den_ * o.den_;
    }
    num_ = std::move(n);
    den_ = std::move(d);
    scale_ = make_rational(1, l);
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    scale_ *= o.scale_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by the zero rational function");
    }
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    scale_ /= o.scale_;
    reduce();
    return *this;
}

std::string to_string(const RationalFunction& f, const std::string& var)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string s = to_string(f.scale());
    if (f.num().degree() > 0) {
        s += " * (" + to_string(f.num(), var) + ")";
    }
    if (f.den().degree() > 0) {
        s += " / (" + to_string(f.den(), var) + ")";
    }
    return s;
}

} // namespace jm
