#include "jm/moments_derived.hpp"
#include "jm/moments_asymptotic.hpp"
#include "jm/moments_finite.hpp"

#include <stdexcept>

namespace jm {

std::string to_string(DerivedKind kind) { return kind == DerivedKind::AbsM ? "abs-m" : "abs-v"; }

namespace {

Integer power(long base, int e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

IntPolynomial cofactor(const IntPolynomial& big, const IntPolynomial& small)
{
    try {
        return exact_divide(big, small);
    } catch (const std::domain_error&) {
        throw std::logic_error("derived moments: Y_r does not divide Y_2h");
    }
}

} // namespace

Rational DerivedMomentFunction::value_at(int k) const
{
    const Rational u(2 * k);
    const Rational den = denominator.evaluate(u);
    if (den == 0) {
        throw PoleError("derived moment denominator vanishes");
    }
    return barnes_g_ratio(k) * constant * numerator.evaluate(u) / den;
}

Rational expected_abs_m_constant(int h) { return make_rational(1, power(4, h)); }

Rational expected_abs_v_constant(int h)
{
    return make_rational(factorial(static_cast<unsigned>(2 * h)), factorial(static_cast<unsigned>(h)) * power(2, 3 * h));
}

DerivedMomentFunction abs_m_asymptotic(int h, MomentCache& cache)
{
    if (h < 0) {
        throw std::invalid_argument("abs_m_asymptotic: h must be non-negative");
    }
    // |M|/g = sum_j (-1)^j C(h,j) 2^{-(h+j)} X_{h+j}/Y_{h+j}
    //       = 4^{-h} * [sum_j (-1)^j C(h,j) 2^{h-j} X_{h+j} Y_{2h}/Y_{h+j}] / Y_{2h}
    const IntPolynomial& y2h = cache.get(2 * h).Y;
    IntPolynomial t;
    for (int j = 0; j <= h; ++j) {
        const MomentFunction& m = cache.get(h + j);
        Integer c = binomial(h, j) * power(2, h - j);
        if (j % 2 == 1) {
            c = -c;
        }
        t.add_scaled(c, m.X * cofactor(y2h, m.Y));
    }
    DerivedMomentFunction out;
    out.h = h;
    out.kind = DerivedKind::AbsM;
    out.denominator = y2h;
    out.constant = make_rational(t.leading(), power(4, h));
    out.expected_constant = expected_abs_m_constant(h);
    out.numerator = t;
    out.numerator.divide_coefficients(t.leading());
    out.constant_matches = out.constant == out.expected_constant;
    if (!out.constant_matches) {
        throw std::logic_error("abs_m_asymptotic: leading constant differs from 4^{-h}");
    }
    return out;
}

DerivedMomentFunction abs_m_asymptotic(int h) { return abs_m_asymptotic(h, global_moment_cache()); }

DerivedMomentFunction abs_v_asymptotic(int h, MomentCache& cache)
{
    if (h < 0) {
        throw std::invalid_argument("abs_v_asymptotic: h must be non-negative");
    }
    // |V|/g = 4^{-h} [sum_j C(h,j) (-1)^{h-j} Xhat_{2j} Y_{2h}/Y_{2j}] / Y_{2h}
    const IntPolynomial& y2h = cache.get(2 * h).Y;
    IntPolynomial t;
    for (int j = 0; j <= h; ++j) {
        const DerivedMomentFunction m = abs_m_asymptotic(j, cache);
        Integer c = binomial(h, j);
        if ((h - j) % 2 == 1) {
            c = -c;
        }
        t.add_scaled(c, m.numerator * cofactor(y2h, m.denominator));
    }
    DerivedMomentFunction out;
    out.h = h;
    out.kind = DerivedKind::AbsV;
    out.denominator = y2h;
    if (t.is_zero()) {
        throw std::logic_error("abs_v_asymptotic: vanishing numerator");
    }
    Integer lead = t.leading();
    out.constant = make_rational(lead, power(4, h));
    out.expected_constant = expected_abs_v_constant(h);
    out.constant_matches = out.constant == out.expected_constant;
    out.numerator = t;
    if (mpz_divisible_p(t.content().get_mpz_t(), lead.get_mpz_t())) {
        out.numerator.divide_coefficients(lead);
    } else {
        // Numerator not monic over the integers: keep it primitive and put
        // the rest into the constant.
        Integer c = t.content();
        if (lead < 0) {
            c = -c;
        }
        out.numerator.divide_coefficients(c);
        out.constant = make_rational(c, power(4, h));
        out.constant_matches = false;
    }
    return out;
}

DerivedMomentFunction abs_v_asymptotic(int h) { return abs_v_asymptotic(h, global_moment_cache()); }

Rational abs_v_alternative_at(int h, int k, MomentCache& cache)
{
    if (h < 0 || k < 1) {
        throw std::invalid_argument("abs_v_alternative_at: need h >= 0 and k >= 1");
    }
    // (i/2)^j (-i/2)^{2h-j} = (-1)^{h+j} 4^{-h}
    Rational total = 0;
    for (int j = 0; j <= 2 * h; ++j) {
        Rational term = Rational(binomial(2 * h, j)) * cache.get(2 * h - j).ratio_at(k);
        if ((h + j) % 2 == 1) {
            term = -term;
        }
        total += term;
    }
    return total / power(4, h);
}

std::pair<Rational, Rational> finite_relations(int N, int k, int h)
{
    if (N < 1 || k < 1 || h < 0) {
        throw std::invalid_argument("finite_relations: need N, k >= 1 and h >= 0");
    }
    if (2 * k - 2 * h <= -1) {
        throw std::domain_error("finite_relations: moment not integrable");
    }
    const std::vector<Rational> m = finite_moment_series(N, k, 2 * h);
    // (iN)^{h-j} (-i)^{h+j} = (-1)^j N^{h-j}
    auto abs_m = [&](int hh) {
        Rational total = 0;
        for (int j = 0; j <= hh; ++j) {
            Rational term = Rational(binomial(hh, j) * power(N, hh - j)) * m[static_cast<std::size_t>(hh + j)];
            if (j % 2 == 1) {
                term = -term;
            }
            total += term;
        }
        return total;
    };
    Rational v = 0;
    for (int j = 0; j <= h; ++j) {
        // (-N^2/4)^{h-j}
        Rational w = make_rational(power(N, 2 * (h - j)), power(4, h - j)) * binomial(h, j);
        if ((h - j) % 2 == 1) {
            w = -w;
        }
        v += w * abs_m(j);
    }
    return {abs_m(h), v};
}

} // namespace jm
