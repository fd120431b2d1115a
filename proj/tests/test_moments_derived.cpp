#include "jm/moments_asymptotic.hpp"
#include "jm/moments_derived.hpp"

#include <doctest.h>

using namespace jm;

namespace {

IntPolynomial poly(std::initializer_list<long> c)
{
    std::vector<Integer> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return IntPolynomial(std::move(v));
}

Rational pow_rational(const Rational& x, int n)
{
    Rational r = 1;
    for (int i = 0; i < n; ++i) {
        r *= x;
    }
    return r;
}

} // namespace

TEST_CASE("closed-form constants")
{
    CHECK(expected_abs_m_constant(0) == 1);
    CHECK(expected_abs_m_constant(3) == make_rational(1, 64));
    CHECK(expected_abs_v_constant(1) == make_rational(1, 4));
    CHECK(expected_abs_v_constant(2) == make_rational(3, 16));
    CHECK(expected_abs_v_constant(3) == make_rational(720, 6 * 512));
    CHECK(to_string(DerivedKind::AbsM) == "abs-m");
    CHECK(to_string(DerivedKind::AbsV) == "abs-v");
}

TEST_CASE("low-order derived moments")
{
    const auto m0 = abs_m_asymptotic(0);
    CHECK(m0.numerator == poly({1}));
    CHECK(m0.constant == 1);
    const auto m1 = abs_m_asymptotic(1);
    CHECK(m1.numerator == poly({0, 0, 1}));
    CHECK(m1.denominator == poly({-1, 0, 1}));
    const auto m2 = abs_m_asymptotic(2);
    CHECK(m2.numerator == poly({-6, 0, -8, 0, 1}));
    CHECK(m2.constant == make_rational(1, 16));
    const auto v2 = abs_v_asymptotic(2);
    CHECK(v2.numerator == poly({1}));
    CHECK(v2.constant == make_rational(3, 16));
    CHECK(v2.denominator == poly({-1, 0, 1}) * poly({-9, 0, 1}));
}

TEST_CASE("tabulated exact values")
{
    CHECK(abs_m_asymptotic(1).value_at(1) == make_rational(1, 3));
    CHECK(abs_m_asymptotic(1).value_at(2) == make_rational(1, 45));
    CHECK(abs_m_asymptotic(2).value_at(2) == make_rational(61, 10080));
    CHECK(abs_v_asymptotic(1).value_at(1) == make_rational(1, 12));
    CHECK(abs_v_asymptotic(1).value_at(2) == make_rational(1, 720));
    CHECK(abs_v_asymptotic(2).value_at(2) == make_rational(1, 6720));
}

TEST_CASE("degrees, constants and the binomial identity up to h = 21")
{
    auto& cache = global_moment_cache();
    cache.fill(42);
    for (int h = 1; h <= 21; ++h) {
        const auto m = abs_m_asymptotic(h, cache);
        const auto v = abs_v_asymptotic(h, cache);
        CHECK(m.constant == expected_abs_m_constant(h));
        CHECK(v.constant_matches);
        CHECK(v.constant == expected_abs_v_constant(h));
        CHECK(m.numerator.is_monic());
        CHECK(v.numerator.is_monic());
        CHECK(m.numerator.is_even());
        CHECK(v.numerator.is_even());
        CHECK(m.denominator == cache.get(2 * h).Y);
        CHECK(v.denominator == cache.get(2 * h).Y);
        CHECK(m.numerator.degree() == cache.get(2 * h).X.degree());
        CHECK(cache.get(2 * h).X.degree() - v.numerator.degree() == 2 * h);
    }
    for (int h = 1; h <= 6; ++h) {
        const auto v = abs_v_asymptotic(h, cache);
        for (int k = 1; k <= 8; ++k) {
            CHECK(abs_v_alternative_at(h, k, cache) == v.value_at(k) / barnes_g_ratio(k));
        }
    }
}

TEST_CASE("finite relations against direct integrals")
{
    // N = 1: |M| = E|1-z|^{2k-2h} = C(2k-2h, k-h), |V| = 4^{-h} E|1-z|^{2k-2h}|1+z|^{2h}
    for (int k = 1; k <= 4; ++k) {
        for (int h = 0; h <= k; ++h) {
            const auto [m, v] = finite_relations(1, k, h);
            CHECK(m == Rational(binomial(2 * (k - h), k - h)));
            // coefficients of (1-z)^{k-h} (1+z)^h, summed in squares
            std::vector<Integer> c{1};
            auto times = [&c](int sign) {
                c.emplace_back(0);
                for (std::size_t i = c.size() - 1; i > 0; --i) {
                    c[i] += sign * c[i - 1];
                }
            };
            for (int i = 0; i < k - h; ++i) {
                times(-1);
            }
            for (int i = 0; i < h; ++i) {
                times(1);
            }
            Integer squares = 0;
            for (const auto& x : c) {
                squares += x * x;
            }
            CHECK(v == Rational(squares) / pow_rational(Rational(4), h));
        }
    }
    // N = 2, k = h = 1: E|z1 + z2 - 2 z1 z2|^2 = 5 and E|1 - z1 z2|^2 = 2
    const auto [m2, v2] = finite_relations(2, 1, 1);
    CHECK(m2 == 5);
    CHECK(v2 == 2);
    CHECK_THROWS_AS(finite_relations(2, 1, 2), std::domain_error);
}

TEST_CASE("finite relations approach the asymptotic values")
{
    const int k = 2;
    const int h = 1;
    const auto am = abs_m_asymptotic(h);
    const auto av = abs_v_asymptotic(h);
    Rational previous_m = -1;
    Rational previous_v = -1;
    for (int N : {4, 8, 16, 32}) {
        const Rational scale = pow_rational(Rational(N), k * k + 2 * h);
        const auto [m, v] = finite_relations(N, k, h);
        const Rational dm = abs(m / scale - am.value_at(k));
        const Rational dv = abs(v / scale - av.value_at(k));
        if (previous_m >= 0) {
            CHECK(dm < previous_m);
            CHECK(dv < previous_v);
        }
        previous_m = dm;
        previous_v = dv;
    }
}
