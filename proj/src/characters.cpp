#include "jm/characters.hpp"
#include "jm/schur.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace jm {

namespace {

using CharacterKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterMemo {
    std::shared_mutex mutex;
    std::map<CharacterKey, Integer> table;
};

CharacterMemo& memo()
{
    static CharacterMemo m;
    return m;
}

// beta is strictly decreasing; rho is sorted decreasing and consumed from the back.
Integer character_beta(const std::vector<int>& beta, std::vector<int>& rho);

Integer lookup_or_compute(const std::vector<int>& parts, std::vector<int>& rho)
{
    if (rho.empty()) {
        return parts.empty() ? 1 : 0;
    }
    CharacterKey key{parts, rho};
    {
        std::shared_lock lock(memo().mutex);
        auto it = memo().table.find(key);
        if (it != memo().table.end()) {
            return it->second;
        }
    }
    const int n = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < n; ++i) {
        beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + n - 1 - i;
    }
    Integer value = character_beta(beta, rho);
    std::unique_lock lock(memo().mutex);
    memo().table.emplace(std::move(key), value);
    return value;
}

Integer character_beta(const std::vector<int>& beta, std::vector<int>& rho)
{
    const int m = rho.back();
    rho.pop_back();
    Integer total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        const int b = beta[idx];
        const int target = b - m;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        int between = 0;
        for (int x : beta) {
            if (x > target && x < b) {
                ++between;
            }
        }
        std::vector<int> nb = beta;
        nb[idx] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        const int n = static_cast<int>(nb.size());
        std::vector<int> parts;
        for (int i = 0; i < n; ++i) {
            const int part = nb[static_cast<std::size_t>(i)] - (n - 1 - i);
            if (part > 0) {
                parts.push_back(part);
            }
        }
        Integer sub = lookup_or_compute(parts, rho);
        if (between % 2 == 0) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    rho.push_back(m);
    return total;
}

} // namespace

Integer mn_character(const Partition& lambda, const std::vector<int>& rho)
{
    int sum = 0;
    for (int x : rho) {
        if (x <= 0) {
            throw std::invalid_argument("mn_character: parts of rho must be positive");
        }
        sum += x;
    }
    if (sum != lambda.size()) {
        return 0;
    }
    std::vector<int> sorted = rho;
    // Removing the largest ribbon first keeps the recursion shallow.
    std::sort(sorted.begin(), sorted.end());
    return lookup_or_compute(lambda.parts(), sorted);
}

std::size_t mn_cache_size()
{
    std::shared_lock lock(memo().mutex);
    return memo().table.size();
}

namespace {

void compositions(int n, int l, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f)
{
    if (l == 0) {
        if (n == 0) {
            f(cur);
        }
        return;
    }
    for (int a = 1; a <= n - (l - 1); ++a) {
        cur.push_back(a);
        compositions(n - a, l - 1, cur, f);
        cur.pop_back();
    }
}

} // namespace

void for_each_composition(int n, int l, const std::function<void(const std::vector<int>&)>& f)
{
    if (n < 0 || l < 0) {
        return;
    }
    std::vector<int> cur;
    compositions(n, l, cur, f);
}

Integer char_sum_fixed_parts(const Partition& lambda, int l)
{
    if (l < 1) {
        throw std::invalid_argument("char_sum_fixed_parts: l must be positive");
    }
    Integer total = 0;
    for_each_composition(lambda.size(), l, [&](const std::vector<int>& rho) { total += mn_character(lambda, rho); });
    return total;
}

namespace {

// All vectors of length d with entries in [0, max] summing to total.
void bounded_vectors(int d, int total, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f)
{
    if (static_cast<int>(cur.size()) == d) {
        if (total == 0) {
            f(cur);
        }
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        bounded_vectors(d, total - x, cur, f);
        cur.pop_back();
    }
}

} // namespace

Rational structure_count(const StructureParams& params)
{
    const int d = params.d;
    if (d < 1 || params.l < d || static_cast<int>(params.p.size()) != d || static_cast<int>(params.q.size()) != d) {
        throw std::invalid_argument("structure_count: need d >= 1, l >= d and |p| = |q| = d");
    }
    const int ssum = params.l - d - params.v;
    if (params.v < 0 || ssum < 0) {
        return 0;
    }
    Rational total = 0;
    std::vector<int> s;
    std::vector<int> t;
    bounded_vectors(d, ssum, s, [&](const std::vector<int>& sv) {
        bounded_vectors(d, params.v, t, [&](const std::vector<int>& tv) {
            Integer num = factorial(static_cast<unsigned>(params.l));
            Integer den = 1;
            int tail = 0;
            for (int i = d - 1; i >= 0; --i) {
                const auto ui = static_cast<std::size_t>(i);
                num *= binomial(params.p[ui], sv[ui]) * binomial(params.q[ui], tv[ui]);
                den *= factorial(static_cast<unsigned>(sv[ui])) * factorial(static_cast<unsigned>(tv[ui]));
                tail += sv[ui] + tv[ui];
                den *= (d - i) + tail;
            }
            if (num != 0) {
                total += make_rational(num, den);
            }
        });
    });
    return total;
}

Rational simpler_sum_lhs(const std::vector<int>& s, const std::vector<int>& t)
{
    const std::size_t d = s.size();
    if (t.size() != d) {
        throw std::invalid_argument("simpler_sum_lhs: length mismatch");
    }
    std::vector<std::size_t> sigma(d);
    for (std::size_t i = 0; i < d; ++i) {
        sigma[i] = i;
    }
    auto parity = [](const std::vector<std::size_t>& perm) {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                inv += perm[i] > perm[j] ? 1 : 0;
            }
        }
        return inv % 2 == 0 ? 1 : -1;
    };
    Rational total = 0;
    do {
        std::vector<std::size_t> tau = sigma;
        std::sort(tau.begin(), tau.end());
        do {
            Integer den = 1;
            long tail = 0;
            for (std::size_t i = d; i-- > 0;) {
                tail += s[sigma[i]] + t[tau[i]];
                // d + 1 - i with 1-based i is d - i here.
                const long f = static_cast<long>(d - i) + tail;
                if (f == 0) {
                    throw PoleError("simpler_sum_lhs: vanishing denominator");
                }
                den *= f;
            }
            total += make_rational(parity(sigma) * parity(tau), den);
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

Rational simpler_sum_rhs(const std::vector<int>& s, const std::vector<int>& t)
{
    if (s.size() != t.size()) {
        throw std::invalid_argument("simpler_sum_rhs: length mismatch");
    }
    return cauchy_determinant(s, t);
}

Rational box_character_sum_brute(int N, int k, int l, const FrobeniusFunction& f)
{
    Rational total = 0;
    for (const Partition& lambda : partitions_in_box(k, N)) {
        if (lambda.size() < l || lambda.empty()) {
            continue;
        }
        const Integer c = char_sum_fixed_parts(lambda, l);
        if (c == 0) {
            continue;
        }
        const FrobeniusCoords fr = to_frobenius(lambda);
        total += Rational(c) * f(fr.p, fr.q);
    }
    return total;
}

namespace {

void cube(int d, int bound, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f)
{
    if (static_cast<int>(cur.size()) == d) {
        f(cur);
        return;
    }
    for (int x = 0; x < bound; ++x) {
        cur.push_back(x);
        cube(d, bound, cur, f);
        cur.pop_back();
    }
}

} // namespace

Rational box_character_sum_structures(int N, int k, int l, const FrobeniusFunction& f)
{
    Rational total = 0;
    // f alternates, so repeated coordinates contribute nothing.
    const int d_max = std::min({l, N, k});
    for (int d = 1; d <= d_max; ++d) {
        std::vector<int> p;
        std::vector<int> q;
        cube(d, N, p, [&](const std::vector<int>& pv) {
            cube(d, k, q, [&](const std::vector<int>& qv) {
                const Rational fv = f(pv, qv);
                if (fv == 0) {
                    return;
                }
                int qsum = 0;
                for (int x : qv) {
                    qsum += x;
                }
                for (int v = 0; v <= l - d; ++v) {
                    const Rational c = structure_count({l, d, pv, qv, v});
                    if ((qsum + v) % 2 == 0) {
                        total += fv * c;
                    } else {
                        total -= fv * c;
                    }
                }
            });
        });
    }
    return total;
}

} // namespace jm
