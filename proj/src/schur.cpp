#include "jm/schur.hpp"

#include <stdexcept>

namespace jm {

namespace {

Integer vandermonde_pairs(const std::vector<int>& p, const std::vector<int>& q)
{
    Integer v = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            v *= static_cast<long>(p[i] - p[j]) * static_cast<long>(q[i] - q[j]);
        }
    }
    return v;
}

} // namespace

Rational cauchy_determinant(const std::vector<int>& p, const std::vector<int>& q)
{
    if (p.size() != q.size()) {
        throw std::invalid_argument("cauchy_determinant: length mismatch");
    }
    Integer den = 1;
    for (int pi : p) {
        for (int qj : q) {
            const long f = static_cast<long>(pi) + qj + 1;
            if (f == 0) {
                throw PoleError("cauchy_determinant: p_i + q_j = -1");
            }
            den *= f;
        }
    }
    return make_rational(vandermonde_pairs(p, q), den);
}

Rational schur_ones_signed(const std::vector<int>& p, const std::vector<int>& q, const Rational& R)
{
    if (p.size() != q.size()) {
        throw std::invalid_argument("schur_ones_signed: length mismatch");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || q[i] < 0) {
            throw std::invalid_argument("schur_ones_signed: negative coordinate");
        }
    }
    Rational v = cauchy_determinant(p, q);
    if (v == 0) {
        return v;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        // (R+p)!/(R-q-1)! written as a rising factorial so that it also
        // vanishes correctly when R <= q.
        v *= rising_factorial(Rational(R - q[i]), static_cast<unsigned>(p[i] + q[i] + 1));
        v /= factorial(static_cast<unsigned>(p[i])) * factorial(static_cast<unsigned>(q[i]));
    }
    return v;
}

Integer schur_ones(const Partition& lambda, int R)
{
    if (lambda.length() > R) {
        return 0;
    }
    const FrobeniusCoords f = to_frobenius(lambda);
    Rational v = schur_ones_signed(f.p, f.q, Rational(R));
    if (!is_integer(v)) {
        throw std::logic_error("schur_ones: non-integral dimension");
    }
    return v.get_num();
}

Rational schur_ones_determinantal(const Partition& lambda, int R)
{
    const FrobeniusCoords f = to_frobenius(lambda);
    const int d = f.rank();
    RationalMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int p = f.p[static_cast<std::size_t>(i)];
            const int q = f.q[static_cast<std::size_t>(j)];
            Rational e = rising_factorial(Rational(R - q), static_cast<unsigned>(p + q + 1));
            e /= factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q)) * (p + q + 1);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    }
    return determinant(m);
}

Rational rect_extended_schur(const std::vector<int>& p, const std::vector<int>& q, int N, int k)
{
    if (p.size() != q.size()) {
        throw std::invalid_argument("rect_extended_schur: length mismatch");
    }
    Rational inner = schur_ones_signed(p, q, Rational(2 * k));
    if (inner == 0) {
        return inner;
    }
    Rational v = Rational(schur_ones(rectangle(N, k), 2 * k)) * inner;
    const auto uk = static_cast<unsigned>(k);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational num = rising_factorial(Integer(N - p[i]), uk) * rising_factorial(Integer(k - q[i]), uk);
        Integer den = rising_factorial(Integer(p[i] + k + 1), uk) * rising_factorial(Integer(N + q[i] + 1), uk);
        v *= num / den;
    }
    return v;
}

Rational ninth_h(const Rational& R, int m)
{
    if (m < 0) {
        return 0;
    }
    Rational den = rising_factorial(R, static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(m));
    if (den == 0) {
        throw PoleError("ninth_h: pole of the Gamma ratio");
    }
    return 1 / den;
}

Rational ninth_schur_jacobi_trudi(const Partition& lambda, const Rational& R)
{
    const int l = lambda.length();
    RationalMatrix m(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                ninth_h(R - (j - 1), lambda.part(i) - i + j);
        }
    }
    return determinant(m);
}

Rational ninth_schur_giambelli(const Partition& lambda, const Rational& R)
{
    const FrobeniusCoords f = to_frobenius(lambda);
    const int d = f.rank();
    RationalMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int s = f.p[static_cast<std::size_t>(i)];
            const int t = f.q[static_cast<std::size_t>(j)];
            // Gamma(R-t)/Gamma(R+s+1) = 1/(R-t)^{(s+t+1)}
            Rational den = rising_factorial(Rational(R - t), static_cast<unsigned>(s + t + 1));
            if (den == 0) {
                throw PoleError("ninth_schur_giambelli: pole of the Gamma ratio");
            }
            den *= factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(t)) * (1 + s + t);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1 / den;
        }
    }
    return determinant(m);
}

RationalFunction ninth_schur_symbolic(const Partition& lambda)
{
    const FrobeniusCoords f = to_frobenius(lambda);
    const int d = f.rank();
    std::vector<std::vector<RationalFunction>> m(static_cast<std::size_t>(d),
                                                 std::vector<RationalFunction>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int s = f.p[static_cast<std::size_t>(i)];
            const int t = f.q[static_cast<std::size_t>(j)];
            IntPolynomial den(1);
            for (int a = -t; a <= s; ++a) {
                den.multiply_linear(a);
            }
            Integer c = factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(t)) * (1 + s + t);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                RationalFunction(IntPolynomial(1), den, make_rational(1, c));
        }
    }
    return field_determinant(std::move(m), [](const RationalFunction& x) { return x.is_zero(); });
}

Integer standard_tableaux(const Partition& lambda)
{
    const Partition t = lambda.conjugate();
    Integer hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            hooks *= (lambda.part(i) - j) + (t.part(j) - i) + 1;
        }
    }
    return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

} // namespace jm
