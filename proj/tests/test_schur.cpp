#include "jm/partitions.hpp"
#include "jm/schur.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace jm;

namespace {

// Weyl dimension formula prod_{i<j<=R} (l_i - l_j + j - i)/(j - i).
Rational weyl_dimension(const Partition& lambda, int R)
{
    if (lambda.length() > R) {
        return 0;
    }
    Rational v = 1;
    for (int i = 1; i <= R; ++i) {
        for (int j = i + 1; j <= R; ++j) {
            v *= make_rational(lambda.part(i) - lambda.part(j) + j - i, j - i);
        }
    }
    return v;
}

// Count tableaux by removing the cell holding the largest entry.
Integer count_tableaux(const Partition& lambda, std::map<Partition, Integer>& memo)
{
    if (lambda.size() == 0) {
        return 1;
    }
    if (auto it = memo.find(lambda); it != memo.end()) {
        return it->second;
    }
    Integer total = 0;
    std::vector<int> parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 == parts.size() || parts[i] > parts[i + 1]) {
            std::vector<int> smaller = parts;
            if (--smaller[i] == 0) {
                smaller.pop_back();
            }
            total += count_tableaux(Partition(smaller), memo);
        }
    }
    memo.emplace(lambda, total);
    return total;
}

Rational cauchy_by_elimination(const std::vector<int>& p, const std::vector<int>& q)
{
    RationalMatrix m(p.size(), std::vector<Rational>(q.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            m[i][j] = make_rational(1, p[i] + q[j] + 1);
        }
    }
    return determinant(m);
}

} // namespace

TEST_CASE("Cauchy determinant closed form")
{
    CHECK(cauchy_determinant({}, {}) == 1);
    CHECK(cauchy_determinant({0}, {0}) == 1);
    CHECK(cauchy_determinant({1, 0}, {1, 0}) == make_rational(1, 12));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + rng() % 4;
        std::vector<int> p;
        std::vector<int> q;
        for (std::size_t i = 0; i < d; ++i) {
            p.push_back(static_cast<int>(rng() % 9));
            q.push_back(static_cast<int>(rng() % 9));
        }
        CHECK(cauchy_determinant(p, q) == cauchy_by_elimination(p, q));
    }
    CHECK_THROWS_AS(cauchy_determinant({-2}, {1}), PoleError);
}

TEST_CASE("principal specialization against the Weyl dimension formula")
{
    for (const auto& lambda : partitions_up_to(9)) {
        for (int R = 1; R <= 6; ++R) {
            const Rational w = weyl_dimension(lambda, R);
            CHECK(Rational(schur_ones(lambda, R)) == w);
            CHECK(schur_ones_determinantal(lambda, R) == w);
            const FrobeniusCoords f = to_frobenius(lambda);
            if (lambda.length() <= R) {
                CHECK(schur_ones_signed(f.p, f.q, Rational(R)) == w);
            }
        }
    }
    CHECK(schur_ones(Partition{1}, 5) == 5);
    CHECK(schur_ones(Partition{2, 1}, 3) == 8);
    CHECK(schur_ones(Partition{1, 1, 1, 1}, 3) == 0);
}

TEST_CASE("signed specialization is alternating in p and in q")
{
    const std::vector<int> p{3, 1, 0};
    const std::vector<int> q{2, 1, 0};
    const Rational R = make_rational(11, 2);
    const Rational base = schur_ones_signed(p, q, R);
    CHECK(schur_ones_signed({1, 3, 0}, q, R) == -base);
    CHECK(schur_ones_signed(p, {2, 0, 1}, R) == -base);
    CHECK(schur_ones_signed({1, 3, 0}, {0, 1, 2}, R) == base);
    CHECK(schur_ones_signed({1, 1, 0}, q, R) == 0);
}

TEST_CASE("rectangle extension equals the specialization of the union")
{
    for (int N = 1; N <= 4; ++N) {
        for (int k = 1; k <= 3; ++k) {
            for (const auto& lambda : partitions_in_box(k, N)) {
                const FrobeniusCoords f = to_frobenius(lambda);
                const Partition full = partition_union(rectangle(N, k), lambda);
                CHECK(rect_extended_schur(f.p, f.q, N, k) == Rational(schur_ones(full, 2 * k)));
            }
        }
    }
}

TEST_CASE("standard tableaux")
{
    std::map<Partition, Integer> memo;
    for (int n = 0; n <= 10; ++n) {
        Integer sum_squares = 0;
        for (const auto& lambda : partitions_of(n)) {
            const Integer f = standard_tableaux(lambda);
            CHECK(f == count_tableaux(lambda, memo));
            sum_squares += f * f;
        }
        CHECK(sum_squares == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("ninth variation: entries, both determinants and the symbolic form")
{
    CHECK(ninth_h(Rational(5), 0) == 1);
    CHECK(ninth_h(Rational(5), -1) == 0);
    CHECK(ninth_h(Rational(3), 2) == make_rational(1, 24));
    CHECK_THROWS_AS(ninth_h(Rational(-1), 3), PoleError);
    for (const auto& lambda : partitions_up_to(7)) {
        const RationalFunction symbolic = ninth_schur_symbolic(lambda);
        for (const Rational& R : {Rational(5), Rational(9), make_rational(13, 2), make_rational(-7, 3)}) {
            Rational jt;
            Rational gb;
            try {
                jt = ninth_schur_jacobi_trudi(lambda, R);
                gb = ninth_schur_giambelli(lambda, R);
            } catch (const PoleError&) {
                continue;
            }
            CHECK(gb == jt);
            CHECK(symbolic.evaluate(R) == jt);
        }
    }
    CHECK(ninth_schur_jacobi_trudi(Partition{}, Rational(4)) == 1);
}
