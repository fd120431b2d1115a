#include "jm/exactmath.hpp"
#include "jm/parallel.hpp"
#include "jm/polynomial.hpp"
#include "jm/rational_function.hpp"

#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>

using namespace jm;

namespace {

// Leibniz expansion, independent of elimination.
Rational leibniz(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        Rational term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) {
            term *= m[i][perm[i]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

IntPolynomial poly(std::initializer_list<long> c)
{
    std::vector<Integer> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return IntPolynomial(std::move(v));
}

} // namespace

TEST_CASE("factorial and binomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    for (long n = 1; n <= 20; ++n) {
        for (long k = 1; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("rising factorial")
{
    CHECK(rising_factorial(Rational(3), 4) == 3 * 4 * 5 * 6);
    CHECK(rising_factorial(Rational(-2), 3) == 0);
    CHECK(rising_factorial(make_rational(1, 2), 2) == make_rational(3, 4));
    CHECK(rising_factorial(Rational(7), 0) == 1);
}

TEST_CASE("Barnes ratio")
{
    CHECK(barnes_g_ratio(1) == 1);
    CHECK(barnes_g_ratio(2) == make_rational(1, 12));
    CHECK(barnes_g_ratio(3) == make_rational(1, 8640));
    // g(k+1)/g(k) = k!^2 / ((2k)! (2k+1)!)
    for (long k = 1; k < 8; ++k) {
        Rational ratio = barnes_g_ratio(k + 1) / barnes_g_ratio(k);
        Rational expected = Rational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k))) /
                            Rational(factorial(static_cast<unsigned>(2 * k)) * factorial(static_cast<unsigned>(2 * k + 1)));
        CHECK(ratio == expected);
    }
    CHECK_THROWS_AS(barnes_g_ratio(0), std::domain_error);
}

TEST_CASE("make_rational and parse_integer")
{
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK(parse_integer("0123") == 123);
    CHECK(parse_integer("-42") == -42);
    CHECK(parse_integer("+7") == 7);
    CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("0x1f"), std::invalid_argument);
    CHECK(to_string(make_rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("determinants agree with the Leibniz expansion")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        RationalMatrix m(n, std::vector<Rational>(n));
        IntegerMatrix z(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const long a = static_cast<long>(rng() % 7) - 3;
                const long b = 1 + static_cast<long>(rng() % 4);
                m[i][j] = make_rational(a, b);
                z[i][j] = a;
            }
        }
        const Rational expected = leibniz(m);
        CHECK(determinant(m) == expected);
        CHECK(field_determinant(m, [](const Rational& x) { return x == 0; }) == expected);
        RationalMatrix zq(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                zq[i][j] = z[i][j];
            }
        }
        CHECK(Rational(determinant(z)) == leibniz(zq));
    }
    CHECK(determinant(IntegerMatrix{}) == 1);
    CHECK_THROWS_AS(determinant(IntegerMatrix{{1, 2}}), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic")
{
    const IntPolynomial a = poly({-1, 0, 1});
    const IntPolynomial b = poly({2, 1});
    CHECK((a * b) == poly({-2, -1, 2, 1}));
    CHECK((a + b) == poly({1, 1, 1}));
    CHECK((a - a).is_zero());
    CHECK(a.degree() == 2);
    CHECK(IntPolynomial().degree() == -1);
    CHECK(a.evaluate(Integer(3)) == 8);
    CHECK(a.evaluate(make_rational(1, 2)) == make_rational(-3, 4));
    CHECK(b.reflect() == poly({2, -1}));
    CHECK(a.derivative() == poly({0, 2}));
    IntPolynomial c = a;
    c.multiply_linear(-3);
    CHECK(c == a * IntPolynomial::linear(-3));
    CHECK(to_string(poly({-6, 0, -8, 0, 1})) == "u^4 - 8*u^2 - 6");
    CHECK(to_string(poly({0, -1})) == "-u");
    CHECK(poly({4, 6, 2}).content() == 2);
    CHECK(poly({-4, -6, -2}).primitive_part() == poly({2, 3, 1}));
}

TEST_CASE("polynomial division, gcd and square-free part")
{
    const IntPolynomial f = poly({-1, 0, 1}) * poly({-9, 0, 1});
    CHECK(exact_divide(f, poly({-3, 1})) == poly({3, 1}) * poly({-1, 0, 1}));
    CHECK_THROWS_AS(exact_divide(f, poly({-2, 1})), std::domain_error);
    CHECK_THROWS_AS(divide(poly({0, 1}), poly({0, 2})), std::domain_error);
    CHECK(gcd(f, poly({-1, 1}) * poly({5, 0, 1})) == poly({-1, 1}));
    CHECK(gcd(poly({6}), poly({4})) == poly({1}));
    const IntPolynomial g = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    CHECK(square_free_part(g) == poly({-1, 1}) * poly({2, 1}));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Integer> x;
        std::vector<Integer> y;
        for (int i = 0; i < 4; ++i) {
            x.emplace_back(static_cast<long>(rng() % 9) - 4);
            y.emplace_back(static_cast<long>(rng() % 9) - 4);
        }
        x.emplace_back(1);
        y.emplace_back(1);
        const IntPolynomial p(x);
        const IntPolynomial q(y);
        const auto [quot, rem] = divide(p * q + poly({1, 2}), q);
        CHECK(quot * q + rem == p * q + poly({1, 2}));
        CHECK(rem.degree() < q.degree());
    }
}

TEST_CASE("rational functions are kept reduced")
{
    const RationalFunction f(poly({-1, 0, 1}), poly({2, 2}));
    CHECK(f.num() == poly({-1, 1}));
    CHECK(f.den() == poly({1}));
    CHECK(f.scale() == make_rational(1, 2));
    const RationalFunction g(poly({1}), poly({1, 1}));
    const RationalFunction sum = g + RationalFunction(poly({1}), poly({-1, 1}));
    CHECK(sum == RationalFunction(poly({0, 2}), poly({-1, 0, 1})));
    CHECK((g * RationalFunction(poly({1, 1}))) == RationalFunction(1));
    CHECK((g / g) == RationalFunction(1));
    CHECK((g - g).is_zero());
    CHECK(g.evaluate(Rational(3)) == make_rational(1, 4));
    CHECK_THROWS_AS(g.evaluate(Rational(-1)), PoleError);
    CHECK(g.reflect() == RationalFunction(poly({-1}), poly({-1, 1})));
}

TEST_CASE("parallel_for covers every index once and rethrows")
{
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](const std::atomic<int>& h) { return h.load() == 1; }));
    CHECK_THROWS_AS(parallel_for(10,
                                 [](std::size_t i) {
                                     if (i == 5) {
                                         throw std::runtime_error("x");
                                     }
                                 }),
                    std::runtime_error);
    CHECK(worker_count() >= 1);
}
