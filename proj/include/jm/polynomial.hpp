#pragma once

// Dense univariate polynomials with integer coefficients in the variable u.
// Index i of coefficients() is the coefficient of u^i; the highest stored
// coefficient is nonzero unless the polynomial is zero (no coefficients).

#include "jm/exactmath.hpp"

#include <string>
#include <vector>

namespace jm {

class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long c);
    IntPolynomial(const Integer& c);
    explicit IntPolynomial(std::vector<Integer> coeffs);

    /// c * u^power
    static IntPolynomial monomial(const Integer& c, std::size_t power);
    /// u + shift
    static IntPolynomial linear(long shift);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    /// Coefficient of u^i, zero past the degree.
    Integer coefficient(std::size_t i) const;
    const Integer& leading() const;

    /// gcd of coefficients, always non-negative.
    Integer content() const;
    /// Divided by its content, leading coefficient made positive.
    IntPolynomial primitive_part() const;

    bool is_monic() const { return !is_zero() && leading() == 1; }
    /// Only even powers of u carry nonzero coefficients.
    bool is_even() const;

    Integer evaluate(const Integer& x) const;
    Rational evaluate(const Rational& x) const;
    /// Sign of p(x), computed exactly.
    int sign_at(const Rational& x) const;

    IntPolynomial derivative() const;
    /// p(-u)
    IntPolynomial reflect() const;

    /// Multiplies in place by (u + shift).
    IntPolynomial& multiply_linear(long shift);
    /// Divides every coefficient by d; throws unless the division is exact.
    IntPolynomial& divide_coefficients(const Integer& d);

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const Integer& c);
    /// this += c * o, the hot loop of the moment assembly.
    IntPolynomial& add_scaled(const Integer& c, const IntPolynomial& o);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
    friend IntPolynomial operator+(IntPolynomial a, long c) { return a += IntPolynomial(c); }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Integer> coeffs_;
};

struct PolynomialDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Division over Z. Throws std::domain_error if some quotient coefficient
/// would not be an integer, or if the divisor is zero.
PolynomialDivision divide(const IntPolynomial& a, const IntPolynomial& b);

/// a / b, requiring a zero remainder.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

/// e.g. "u^4 - 8*u^2 - 6"
std::string to_string(const IntPolynomial& p, const std::string& var = "u");

} // namespace jm
