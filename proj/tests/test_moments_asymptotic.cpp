#include "jm/moments_asymptotic.hpp"
#include "jm/parallel.hpp"

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

} // namespace

TEST_CASE("low-order moments")
{
    const MomentFunction m0 = asymptotic_moment(0);
    CHECK(m0.X == poly({1}));
    CHECK(m0.Y == poly({1}));
    const MomentFunction m1 = asymptotic_moment(1);
    CHECK(m1.X == poly({1}));
    CHECK(m1.Y == poly({1}));
    const MomentFunction m2 = asymptotic_moment(2);
    CHECK(m2.X == poly({-2, 0, 1}));
    CHECK(m2.Y == poly({-1, 0, 1}));
    CHECK(m2.ratio_at(1) == make_rational(2, 3));
    CHECK(m2.moment_at(1) == make_rational(1, 6));
}

TEST_CASE("alpha and the denominators")
{
    CHECK(alpha(1, 2) == 1);
    CHECK(alpha(1, 1) == 0);
    CHECK(alpha(3, 4) == 1);
    CHECK(alpha(1, 6) == 2);
    for (int a = 1; a < 15; a += 2) {
        for (int r = 1; r < 40; ++r) {
            const int m = alpha(a, r);
            CHECK(m * (m + a) <= r);
            CHECK((m + 1) * (m + 1 + a) > r);
        }
    }
    CHECK(denominator_Y(4) == poly({-1, 0, 1}) * poly({-9, 0, 1}));
    CHECK(factored_denominator(1) == "1");
    CHECK(factored_denominator(2) == "(u^2 - 1)");
    CHECK(factored_denominator(4) == "(u^2 - 1)*(u^2 - 9)");
    CHECK(factored_denominator(6) == "(u^2 - 1)^2*(u^2 - 9)*(u^2 - 25)");
}

TEST_CASE("fast assembly equals the determinant reference")
{
    for (int r = 1; r <= 8; ++r) {
        const MomentFunction m = asymptotic_moment(r);
        const RationalFunction reference = asymptotic_moment_reference(r);
        CHECK(RationalFunction(m.X, m.Y) == reference);
    }
}

TEST_CASE("structure for r <= 30")
{
    auto& cache = global_moment_cache();
    cache.fill(30);
    for (int r = 1; r <= 30; ++r) {
        const MomentFunction& m = cache.get(r);
        CHECK(m.r == r);
        CHECK(m.X.is_monic());
        CHECK(m.X.is_even());
        CHECK(m.X.degree() == m.Y.degree());
        CHECK(m.Y == denominator_Y(r));
        CHECK(gcd(m.X, m.Y).degree() == 0);
    }
}

TEST_CASE("cache filled concurrently matches direct computation")
{
    MomentCache cache;
    parallel_for(4, [&](std::size_t i) { cache.fill(10 + static_cast<int>(i)); });
    for (int r = 1; r <= 13; ++r) {
        const MomentFunction direct = asymptotic_moment(r);
        CHECK(cache.get(r).X == direct.X);
        CHECK(cache.get(r).Y == direct.Y);
    }
}

TEST_CASE("H limit identities and symmetry")
{
    for (int k = 1; k <= 7; ++k) {
        for (int t = 0; t < k; ++t) {
            for (int s = 0; s <= 7; ++s) {
                const Rational sum = h_identity_sum(k, s, t);
                CHECK(sum == h_identity_product(k, s, t));
                CHECK(sum == h_identity_gamma(k, s, t));
                CHECK(sum == h_limit(s, t).evaluate(Rational(2 * k)));
            }
        }
    }
    for (int s = 0; s <= 8; ++s) {
        for (int t = 0; t <= 8; ++t) {
            CHECK(h_limit(s, t) == h_limit(t, s).reflect());
        }
    }
    CHECK(h_limit(0, 0) == RationalFunction(make_rational(1, 2)));
    CHECK_THROWS(h_identity_sum(2, 0, 2));
}

TEST_CASE("three evaluation paths agree")
{
    for (int r = 1; r <= 7; ++r) {
        for (int k = (r + 1) / 2; k <= r + 2; ++k) {
            const Rational a = asymptotic_moment(r).moment_at(k);
            CHECK(ninth_path(r, k) == a);
            if (r <= 2 * k) {
                CHECK(gessel_path(r, k, r)[static_cast<std::size_t>(r)] == a);
            }
        }
    }
    const auto row = gessel_path(4, 3, 5);
    CHECK(row[0] == barnes_g_ratio(3));
    for (int r = 1; r <= 4; ++r) {
        CHECK(row[static_cast<std::size_t>(r)] == asymptotic_moment(r).moment_at(3));
    }
    CHECK_THROWS_AS(gessel_path(4, 3, 3), std::domain_error);
    CHECK_THROWS_AS(gessel_path(4, 2, 5), PoleError);
}

TEST_CASE("leading constant and the k = 1 continuation")
{
    for (int r = 1; r <= 10; ++r) {
        Integer den = factorial(static_cast<unsigned>(r));
        den <<= static_cast<unsigned>(r);
        CHECK(leading_constant_check(r) == make_rational(1, den));
    }
    for (int r = 1; r <= 15; ++r) {
        const Rational expected = asymptotic_moment(r).moment_at(1);
        CHECK(continuation_at_one(r) == expected);
        CHECK(continuation_at_one(r, 0) == expected);
        CHECK(continuation_at_one(r, -5) == expected);
    }
}
