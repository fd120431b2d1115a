#include "jm/moments_finite.hpp"
#include "jm/characters.hpp"
#include "jm/partitions.hpp"
#include "jm/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace jm {

Rational h_finite(int N, int k, int s, int t)
{
    if (N < 1 || k < 1 || s < 0 || t < 0) {
        throw std::invalid_argument("h_finite: need N, k >= 1 and s, t >= 0");
    }
    const auto uk = static_cast<unsigned>(k);
    Rational total = 0;
    for (int p = s; p < N; ++p) {
        const Integer outer = Integer(k) * rising_factorial(Integer(N - p), uk) * binomial(k + p, p) * binomial(p, s);
        for (int q = t; q < k; ++q) {
            Integer num = outer * binomial(k - 1, q) * binomial(q, t);
            if (q % 2 == 1) {
                num = -num;
            }
            const Integer den = rising_factorial(Integer(N + q + 1), uk) * (1 + p + q);
            total += make_rational(num, den);
        }
    }
    return total * factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(t));
}

namespace {

void strict_rec(int d, int sum, int max_entry, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (d == 0) {
        if (sum == 0) {
            out.push_back(cur);
        }
        return;
    }
    // The remaining d-1 entries need at least (d-1)(d-2)/2.
    const int reserve = (d - 1) * (d - 2) / 2;
    for (int v = std::min(sum - reserve, max_entry); v >= d - 1; --v) {
        cur.push_back(v);
        strict_rec(d - 1, sum - v, v - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> strict_partitions(int d, int sum, int max_entry)
{
    std::vector<std::vector<int>> out;
    if (d < 0 || sum < 0) {
        return out;
    }
    std::vector<int> cur;
    strict_rec(d, sum, max_entry < 0 ? sum : max_entry, cur, out);
    return out;
}

Rational finite_moment_rank_term(int N, int k, int r, int d)
{
    // With the row bound s_i <= N-1 and the column bound t_j <= k-1
    // everything outside vanishes through the binomials in H.
    Rational total = 0;
    const int rest = r - d;
    if (d == 0 && r == 0) {
        return Rational(schur_ones(rectangle(N, k), 2 * k));
    }
    if (d < 1 || rest < 0) {
        return total;
    }
    for (int n1 = 0; n1 <= rest; ++n1) {
        for (const auto& s : strict_partitions(d, n1, N - 1)) {
            for (const auto& t : strict_partitions(d, rest - n1, k - 1)) {
                const Rational c = cauchy_determinant(s, t);
                Integer fact = 1;
                for (int i = 0; i < d; ++i) {
                    fact *= factorial(static_cast<unsigned>(s[static_cast<std::size_t>(i)])) *
                            factorial(static_cast<unsigned>(t[static_cast<std::size_t>(i)]));
                }
                RationalMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
                for (int i = 0; i < d; ++i) {
                    for (int j = 0; j < d; ++j) {
                        const int si = s[static_cast<std::size_t>(i)];
                        const int tj = t[static_cast<std::size_t>(j)];
                        Rational e = h_finite(N, k, si, tj) /
                                     (factorial(static_cast<unsigned>(si)) * factorial(static_cast<unsigned>(tj)));
                        if (tj % 2 == 1) {
                            e = -e;
                        }
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
                    }
                }
                total += c / fact * determinant(m);
            }
        }
    }
    return total * factorial(static_cast<unsigned>(r)) * schur_ones(rectangle(N, k), 2 * k);
}

std::vector<Rational> finite_moment_series(int N, int k, int r_max)
{
    if (N < 1 || k < 1 || r_max < 0) {
        throw std::invalid_argument("finite_moment_series: need N, k >= 1 and r_max >= 0");
    }
    if (r_max >= 2 * k + 1) {
        throw std::out_of_range("finite_moment_series: r_max must be below 2k+1");
    }
    std::vector<Rational> out;
    for (int r = 0; r <= r_max; ++r) {
        Rational m = 0;
        for (int d = 0; d * d <= r; ++d) {
            m += finite_moment_rank_term(N, k, r, d);
        }
        out.push_back(m);
    }
    return out;
}

Rational symexpres_oracle(int N, int k, int r)
{
    if (N < 1 || k < 1 || r < 0) {
        throw std::invalid_argument("symexpres_oracle: need N, k >= 1 and r >= 0");
    }
    if (2 * k - r <= -1) {
        throw std::domain_error("symexpres_oracle: moment not integrable");
    }
    const Partition rect = rectangle(N, k);
    Rational total = 0;
    for (const Partition& lambda : partitions_in_box(k, N)) {
        Integer c;
        if (r == 0) {
            c = lambda.empty() ? 1 : 0;
        } else if (lambda.size() < r) {
            continue;
        } else {
            c = char_sum_fixed_parts(lambda, r);
        }
        if (c == 0) {
            continue;
        }
        total += Rational(c * schur_ones(partition_union(rect, lambda), 2 * k));
    }
    return total;
}

Rational fourier_oracle_n1(int k, int r)
{
    if (k < 1 || r < 0 || r > k) {
        throw std::domain_error("fourier_oracle_n1: need 0 <= r <= k");
    }
    // Integrand i^r x^r (1-x)^{k-r} (1-1/x)^k with x = e^{i theta}; collect
    // the coefficients of x^e for e in [-k, k].
    std::vector<Integer> coeff(static_cast<std::size_t>(2 * k + 1));
    for (int a = 0; a <= k - r; ++a) {
        for (int b = 0; b <= k; ++b) {
            const int e = r + a - b;
            Integer c = binomial(k - r, a) * binomial(k, b);
            if ((a + b) % 2 == 1) {
                c = -c;
            }
            coeff[static_cast<std::size_t>(e + k)] += c;
        }
    }
    const Integer& constant = coeff[static_cast<std::size_t>(k)];
    // Average = i^r * constant = (-i)^r * m, so m = (-1)^r * constant.
    return Rational(r % 2 == 0 ? constant : Integer(-constant));
}

void FiniteMomentTable::fill(int N, int k, int r_max)
{
    const auto series = finite_moment_series(N, k, r_max);
    for (int r = 0; r <= r_max; ++r) {
        entries_[{N, k, r}] = series[static_cast<std::size_t>(r)];
    }
}

const Rational& FiniteMomentTable::get(int N, int k, int r)
{
    auto it = entries_.find({N, k, r});
    if (it == entries_.end()) {
        fill(N, k, r);
        it = entries_.find({N, k, r});
    }
    return it->second;
}

} // namespace jm
