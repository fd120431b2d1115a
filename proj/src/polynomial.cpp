#include "jm/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace jm {

IntPolynomial::IntPolynomial(long c)
{
    if (c != 0) {
        coeffs_.emplace_back(c);
    }
}

IntPolynomial::IntPolynomial(const Integer& c)
{
    if (c != 0) {
        coeffs_.push_back(c);
    }
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t power)
{
    if (c == 0) {
        return {};
    }
    std::vector<Integer> v(power + 1);
    v[power] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(long shift) { return IntPolynomial(std::vector<Integer>{Integer(shift), Integer(1)}); }

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Integer IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPolynomial::leading() const
{
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Integer IntPolynomial::content() const
{
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const
{
    if (is_zero()) {
        return {};
    }
    Integer g = content();
    if (leading() < 0) {
        g = -g;
    }
    IntPolynomial r = *this;
    r.divide_coefficients(g);
    return r;
}

bool IntPolynomial::is_even() const
{
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

Integer IntPolynomial::evaluate(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const
{
    // Homogenized Horner: sum c_i a^i b^(n-i), then one division.
    if (coeffs_.empty()) {
        return 0;
    }
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer acc = coeffs_.back();
    Integer bpow = 1;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        bpow *= b;
        acc *= a;
        acc += coeffs_[i] * bpow;
    }
    return make_rational(acc, bpow);
}

int IntPolynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

IntPolynomial IntPolynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reflect() const
{
    IntPolynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) {
        r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
}

IntPolynomial& IntPolynomial::multiply_linear(long shift)
{
    if (coeffs_.empty()) {
        return *this;
    }
    coeffs_.emplace_back(0);
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
        // new[i] = old[i-1] + shift * old[i]
        if (shift >= 0) {
            mpz_mul_ui(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), static_cast<unsigned long>(shift));
        } else {
            mpz_mul_si(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), shift);
        }
        coeffs_[i] += coeffs_[i - 1];
    }
    coeffs_[0] *= shift;
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::divide_coefficients(const Integer& d)
{
    if (d == 0) {
        throw std::domain_error("division of polynomial by zero");
    }
    for (auto& c : coeffs_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
            throw std::domain_error("inexact division of polynomial coefficients");
        }
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return *this;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::add_scaled(const Integer& c, const IntPolynomial& o)
{
    if (c == 0) {
        return *this;
    }
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        mpz_addmul(coeffs_[i].get_mpz_t(), c.get_mpz_t(), o.coeffs_[i].get_mpz_t());
    }
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial& IntPolynomial::operator*=(const Integer& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

PolynomialDivision divide(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {IntPolynomial{}, a};
    }
    std::vector<Integer> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> quot(rem.size() - db);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) {
            continue;
        }
        if (!mpz_divisible_p(rem[i].get_mpz_t(), bc[db].get_mpz_t())) {
            throw std::domain_error("polynomial division leaves non-integral quotient");
        }
        Integer q;
        mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), bc[db].get_mpz_t());
        const std::size_t shift = i - db;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[shift + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
        }
        quot[shift] = std::move(q);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b)
{
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) {
        throw std::domain_error("polynomial division is not exact");
    }
    return q;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) {
        throw std::domain_error("pseudo-remainder by the zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return a;
    }
    const int delta = a.degree() - b.degree() + 1;
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(delta));
    return divide(a * scale, b).remainder;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.degree() < y.degree()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

IntPolynomial square_free_part(const IntPolynomial& p)
{
    if (p.degree() <= 0) {
        return p.primitive_part();
    }
    IntPolynomial g = gcd(p, p.derivative());
    return exact_divide(p.primitive_part(), g).primitive_part();
}

std::string to_string(const IntPolynomial& p, const std::string& var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) {
            continue;
        }
        Integer mag = abs(c[i]);
        if (first) {
            if (c[i] < 0) {
                os << "-";
            }
        } else {
            os << (c[i] < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

} // namespace jm
