#include "jm/characters.hpp"
#include "jm/partitions.hpp"
#include "jm/schur.hpp"

#include <doctest.h>

#include <map>

using namespace jm;

namespace {

// z_rho = prod_i i^{m_i} m_i!
Integer centralizer(const Partition& rho)
{
    std::map<int, unsigned> mult;
    for (int part : rho.parts()) {
        ++mult[part];
    }
    Integer z = 1;
    for (const auto& [part, m] : mult) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), m);
        z *= power * factorial(m);
    }
    return z;
}

} // namespace

TEST_CASE("small character values")
{
    CHECK(mn_character(Partition{2, 1}, {2, 1}) == 0);
    CHECK(mn_character(Partition{2, 1}, {3}) == -1);
    CHECK(mn_character(Partition{1, 1, 1}, {2, 1}) == -1);
    CHECK(mn_character(Partition{3}, {1, 2}) == 1);
    CHECK(mn_character(Partition{2, 2}, {3, 1}) == -1);
    CHECK(mn_character(Partition{3, 1}, {2, 2}) == -1);
    CHECK(mn_character(Partition{2, 1}, {2, 2}) == 0);
    CHECK(mn_character(Partition{}, {}) == 1);
}

TEST_CASE("identity class gives the tableau count, hooks give signs")
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            CHECK(mn_character(lambda, std::vector<int>(static_cast<std::size_t>(n), 1)) == standard_tableaux(lambda));
            const FrobeniusCoords f = to_frobenius(lambda);
            const Integer full_cycle = mn_character(lambda, {n});
            if (f.rank() == 1) {
                CHECK(full_cycle == (f.q[0] % 2 == 0 ? 1 : -1));
            } else {
                CHECK(full_cycle == 0);
            }
        }
    }
}

TEST_CASE("orthogonality of the character table")
{
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& rho : parts) {
            for (const auto& sigma : parts) {
                Integer column = 0;
                for (const auto& lambda : parts) {
                    column += mn_character(lambda, rho.parts()) * mn_character(lambda, sigma.parts());
                }
                CHECK(column == (rho == sigma ? centralizer(rho) : Integer(0)));
            }
        }
        for (const auto& lambda : parts) {
            for (const auto& mu : parts) {
                Rational row = 0;
                for (const auto& rho : parts) {
                    row += Rational(mn_character(lambda, rho.parts()) * mn_character(mu, rho.parts())) /
                           Rational(centralizer(rho));
                }
                CHECK(row == (lambda == mu ? 1 : 0));
            }
        }
    }
}

TEST_CASE("characters do not depend on the order of the cycle type")
{
    const Partition lambda{4, 2, 1};
    const Integer a = mn_character(lambda, {3, 2, 1, 1});
    CHECK(mn_character(lambda, {1, 3, 1, 2}) == a);
    CHECK(mn_character(lambda, {2, 1, 1, 3}) == a);
    CHECK(mn_character(lambda, {3, 3}) == 0);
    CHECK(mn_cache_size() > 0);
}

TEST_CASE("compositions and fixed-length character sums")
{
    int count = 0;
    for_each_composition(6, 3, [&](const std::vector<int>& c) {
        CHECK(c.size() == 3);
        CHECK(c[0] + c[1] + c[2] == 6);
        ++count;
    });
    CHECK(count == 10);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int l = 1; l <= n; ++l) {
                Integer direct = 0;
                for_each_composition(n, l, [&](const std::vector<int>& rho) { direct += mn_character(lambda, rho); });
                CHECK(char_sum_fixed_parts(lambda, l) == direct);
            }
        }
    }
}

TEST_CASE("simpler identity on all small vectors")
{
    for (int d = 1; d <= 3; ++d) {
        int total = 1;
        for (int i = 0; i < 2 * d; ++i) {
            total *= 5;
        }
        for (int code = 0; code < total; ++code) {
            std::vector<int> s;
            std::vector<int> t;
            int rest = code;
            for (int i = 0; i < d; ++i) {
                s.push_back(rest % 5);
                rest /= 5;
            }
            for (int i = 0; i < d; ++i) {
                t.push_back(rest % 5);
                rest /= 5;
            }
            CHECK(simpler_sum_lhs(s, t) == simpler_sum_rhs(s, t));
        }
    }
    CHECK(simpler_sum_rhs({0}, {0}) == 1);
}

TEST_CASE("box character sums: brute force against structure counts")
{
    const FrobeniusFunction cauchy = [](const std::vector<int>& p, const std::vector<int>& q) {
        return cauchy_determinant(p, q);
    };
    const FrobeniusFunction signed_dim = [](const std::vector<int>& p, const std::vector<int>& q) {
        return schur_ones_signed(p, q, make_rational(17, 3));
    };
    for (int N = 1; N <= 3; ++N) {
        for (int k = 1; k <= 3; ++k) {
            for (int l = 1; l <= N * k; ++l) {
                CHECK(box_character_sum_brute(N, k, l, cauchy) == box_character_sum_structures(N, k, l, cauchy));
                CHECK(box_character_sum_brute(N, k, l, signed_dim) ==
                      box_character_sum_structures(N, k, l, signed_dim));
            }
        }
    }
}
