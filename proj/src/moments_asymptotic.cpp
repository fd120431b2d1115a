#include "jm/moments_asymptotic.hpp"
#include "jm/moments_finite.hpp"
#include "jm/parallel.hpp"
#include "jm/partitions.hpp"
#include "jm/schur.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace jm {

Rational MomentFunction::ratio_at(int k) const
{
    const Rational u(2 * k);
    const Rational y = Y.evaluate(u);
    if (y == 0) {
        throw PoleError("moment denominator vanishes");
    }
    return X.evaluate(u) / y;
}

Rational MomentFunction::moment_at(int k) const
{
    Integer two_r;
    mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(r));
    return barnes_g_ratio(k) * ratio_at(k) / two_r;
}

RationalFunction h_limit(int s, int t)
{
    if (s < 0 || t < 0) {
        throw std::invalid_argument("h_limit: s, t must be non-negative");
    }
    // (k+i)/(2k+i) = (u+2i)/(2(u+i)); the i = 0 factor is 1/2.
    IntPolynomial num(1);
    IntPolynomial den(1);
    for (int i = -t; i <= s; ++i) {
        if (i == 0) {
            continue;
        }
        num.multiply_linear(2 * i);
        den.multiply_linear(i);
    }
    Integer scale_den;
    mpz_ui_pow_ui(scale_den.get_mpz_t(), 2, static_cast<unsigned long>(s + t + 1));
    scale_den *= 1 + s + t;
    return RationalFunction(num, den, make_rational(1, scale_den));
}

namespace {

void require_k_above_t(int k, int s, int t)
{
    if (k <= t || s < 0 || t < 0) {
        throw std::domain_error("closed forms of the H limit need k > t >= 0 and s >= 0");
    }
}

Integer fact(int n) { return factorial(static_cast<unsigned>(n)); }

} // namespace

Rational h_identity_sum(int k, int s, int t)
{
    require_k_above_t(k, s, t);
    Rational total = 0;
    for (int i = 0; i <= k - t - 1; ++i) {
        total += make_rational(fact(k + i - 1) * fact(s + i + t), fact(i) * fact(k + s + t + i + 1));
    }
    return total * k;
}

Rational h_identity_product(int k, int s, int t)
{
    require_k_above_t(k, s, t);
    Integer num = 1;
    Integer den = 1 + s + t;
    for (int i = k; i <= 2 * k - 1; ++i) {
        num *= i - t;
    }
    for (int j = k + 1; j <= 2 * k; ++j) {
        den *= j + s;
    }
    return make_rational(num, den);
}

Rational h_identity_gamma(int k, int s, int t)
{
    require_k_above_t(k, s, t);
    return make_rational(fact(2 * k - t - 1) * fact(k + s), fact(k - t - 1) * fact(2 * k + s) * (1 + s + t));
}

int alpha(int a, int r)
{
    int m = 0;
    while ((m + 1) * (m + 1 + a) <= r) {
        ++m;
    }
    return m;
}

namespace {

IntPolynomial difference_of_squares_power(int a, int e)
{
    IntPolynomial p(1);
    for (int i = 0; i < e; ++i) {
        p.multiply_linear(a);
        p.multiply_linear(-a);
    }
    return p;
}

struct IndexTerm {
    std::vector<int> s;
    std::vector<int> t;
    Integer weight; // (f^lambda)^2
};

// P(u) = prod_i prod_{j<=s_i} (u + 2 sign j) * prod_j (u + sign j)^{beta_j - c_j(s)}
IntPolynomial padded_factor(const std::vector<int>& s, const std::vector<int>& beta, int sign)
{
    IntPolynomial p(1);
    for (int si : s) {
        for (int j = 1; j <= si; ++j) {
            p.multiply_linear(2 * sign * j);
        }
    }
    for (std::size_t j = 1; j < beta.size(); ++j) {
        int c = 0;
        for (int si : s) {
            c += si >= static_cast<int>(j) ? 1 : 0;
        }
        for (int e = c; e < beta[j]; ++e) {
            p.multiply_linear(sign * static_cast<int>(j));
        }
    }
    return p;
}

} // namespace

IntPolynomial denominator_Y(int r)
{
    IntPolynomial y(1);
    for (int a = 1; a < r; a += 2) {
        y *= difference_of_squares_power(a, alpha(a, r));
    }
    return y;
}

std::string factored_denominator(int r)
{
    std::string out;
    for (int a = 1; a < r; a += 2) {
        const int e = alpha(a, r);
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += "(u^2 - " + std::to_string(a * a) + ")";
        if (e > 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

MomentFunction asymptotic_moment(int r)
{
    if (r < 0) {
        throw std::invalid_argument("asymptotic_moment: r must be non-negative");
    }
    MomentFunction out;
    out.r = r;
    if (r == 0) {
        out.X = IntPolynomial(1);
        out.Y = IntPolynomial(1);
        return out;
    }
    // Terms are indexed by partitions of r through their Frobenius
    // coordinates; the squared Cauchy determinant is (f^lambda / r!)^2.
    std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, Integer>>> by_s;
    for_each_partition_of(r, [&](const Partition& lambda) {
        const FrobeniusCoords f = to_frobenius(lambda);
        const Integer ft = standard_tableaux(lambda);
        by_s[f.p].emplace_back(f.q, ft * ft);
    });
    // beta_j: the largest number of coordinates >= j, equal to alpha(j, r).
    std::vector<int> beta(static_cast<std::size_t>(r) + 1, 0);
    for (int j = 1; j <= r; ++j) {
        beta[static_cast<std::size_t>(j)] = alpha(j, r);
    }

    std::map<std::vector<int>, IntPolynomial> q_cache;
    for (const auto& [s, ts] : by_s) {
        for (const auto& [t, w] : ts) {
            if (!q_cache.count(t)) {
                q_cache.emplace(t, padded_factor(t, beta, -1));
            }
        }
    }

    std::vector<const std::pair<const std::vector<int>, std::vector<std::pair<std::vector<int>, Integer>>>*> groups;
    for (const auto& g : by_s) {
        groups.push_back(&g);
    }
    std::vector<IntPolynomial> partial(groups.size());
    parallel_for(groups.size(), [&](std::size_t gi) {
        const auto& [s, ts] = *groups[gi];
        IntPolynomial inner;
        for (const auto& [t, w] : ts) {
            inner.add_scaled(w, q_cache.at(t));
        }
        partial[gi] = padded_factor(s, beta, 1) * inner;
    });
    IntPolynomial numerator;
    for (const auto& p : partial) {
        numerator += p;
    }

    // Common denominator prod_j (u^2 - j^2)^{beta_j}; the even j cancel.
    IntPolynomial even_part(1);
    for (int j = 2; j <= r; j += 2) {
        even_part *= difference_of_squares_power(j, beta[static_cast<std::size_t>(j)]);
    }
    IntPolynomial x;
    try {
        x = exact_divide(numerator, even_part);
        x.divide_coefficients(factorial(static_cast<unsigned>(r)));
    } catch (const std::domain_error& e) {
        throw std::logic_error(std::string("asymptotic_moment: inexact cancellation: ") + e.what());
    }
    out.X = std::move(x);
    out.Y = denominator_Y(r);
    if (!out.X.is_monic() || !out.X.is_even() || out.X.degree() != out.Y.degree()) {
        throw std::logic_error("asymptotic_moment: X_r is not even and monic of the degree of Y_r");
    }
    return out;
}

const MomentFunction& MomentCache::get(int r)
{
    {
        std::lock_guard lock(mutex_);
        auto it = table_.find(r);
        if (it != table_.end()) {
            return it->second;
        }
    }
    MomentFunction m = asymptotic_moment(r);
    std::lock_guard lock(mutex_);
    return table_.emplace(r, std::move(m)).first->second;
}

void MomentCache::fill(int r_max)
{
    std::vector<int> missing;
    {
        std::lock_guard lock(mutex_);
        for (int r = 0; r <= r_max; ++r) {
            if (!table_.count(r)) {
                missing.push_back(r);
            }
        }
    }
    // Largest first so the expensive ones start early.
    std::vector<int> order(missing.rbegin(), missing.rend());
    std::vector<MomentFunction> results(order.size());
    parallel_for(order.size(), [&](std::size_t i) { results[i] = asymptotic_moment(order[i]); });
    std::lock_guard lock(mutex_);
    for (auto& m : results) {
        table_.emplace(m.r, std::move(m));
    }
}

MomentCache& global_moment_cache()
{
    static MomentCache cache;
    return cache;
}

namespace {

template <class F>
void for_each_index_term(int r, F f)
{
    for (int d = 1; d * d <= r; ++d) {
        const int rest = r - d;
        for (int n1 = 0; n1 <= rest; ++n1) {
            for (const auto& s : strict_partitions(d, n1)) {
                for (const auto& t : strict_partitions(d, rest - n1)) {
                    f(s, t);
                }
            }
        }
    }
}

Integer factorial_product(const std::vector<int>& v)
{
    Integer p = 1;
    for (int x : v) {
        p *= fact(x);
    }
    return p;
}

// det[1/(s_i! t_j! (1+s_i+t_j))]
Rational scaled_cauchy(const std::vector<int>& s, const std::vector<int>& t)
{
    return cauchy_determinant(s, t) / (factorial_product(s) * factorial_product(t));
}


} // namespace

RationalFunction asymptotic_moment_reference(int r)
{
    if (r < 1) {
        throw std::invalid_argument("asymptotic_moment_reference: r must be positive");
    }
    RationalFunction total;
    for_each_index_term(r, [&](const std::vector<int>& s, const std::vector<int>& t) {
        const std::size_t d = s.size();
        std::vector<std::vector<RationalFunction>> m(d, std::vector<RationalFunction>(d));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                m[i][j] = h_limit(s[i], t[j]) * RationalFunction(make_rational(1, fact(s[i]) * fact(t[j])));
            }
        }
        total += RationalFunction(scaled_cauchy(s, t)) *
                 field_determinant(std::move(m), [](const RationalFunction& x) { return x.is_zero(); });
    });
    Integer two_r;
    mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(r));
    return total * RationalFunction(Rational(two_r * fact(r)));
}

Rational leading_constant_check(int r)
{
    if (r < 1) {
        throw std::invalid_argument("leading_constant_check: r must be positive");
    }
    Rational total = 0;
    for_each_index_term(r, [&](const std::vector<int>& s, const std::vector<int>& t) {
        const Rational c = scaled_cauchy(s, t);
        total += c * c;
    });
    Integer two_r;
    mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(r));
    return total / two_r;
}

Rational ninth_path(int r, int k)
{
    if (r < 0 || k < 1) {
        throw std::invalid_argument("ninth_path: need r >= 0 and k >= 1");
    }
    Rational total = 0;
    const Rational R(2 * k);
    for_each_partition_of(r, [&](const Partition& lambda) {
        const Integer sk = schur_ones(lambda, k);
        if (sk == 0) {
            return;
        }
        total += ninth_schur_jacobi_trudi(lambda, R) * sk;
    });
    return total * fact(r) * barnes_g_ratio(k);
}

namespace {

using Series = std::vector<Rational>; // truncated power series in z

Series series_mul(const Series& a, const Series& b)
{
    Series c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

Series series_inverse(const Series& a)
{
    if (a[0] == 0) {
        throw std::domain_error("series with zero constant term is not invertible");
    }
    Series b(a.size());
    b[0] = 1 / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            acc += a[i] * b[n - i];
        }
        b[n] = -acc * b[0];
    }
    return b;
}

std::vector<Rational> gessel_coefficients(int r_max, int k, int n)
{
    if (n > 2 * k) {
        throw PoleError("gessel_path: matrix size above 2k hits a Gamma pole");
    }
    const std::size_t len = static_cast<std::size_t>(r_max) + 1;
    std::vector<std::vector<Series>> m(static_cast<std::size_t>(n), std::vector<Series>(static_cast<std::size_t>(n), Series(len)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Series& e = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            for (int l = std::max(i, j); l <= j + r_max; ++l) {
                const Integer den = rising_factorial(Integer(2 * k - n + j), static_cast<unsigned>(l - j)) * fact(l - j);
                e[static_cast<std::size_t>(l - j)] = make_rational(binomial(l - i + k - 1, k - 1), den);
            }
        }
    }
    // Elimination over truncated series; constant terms form an upper
    // unitriangular matrix, so the diagonal pivots are always invertible.
    Series det(len);
    det[0] = 1;
    for (std::size_t c = 0; c < m.size(); ++c) {
        const Series inv = series_inverse(m[c][c]);
        det = series_mul(det, m[c][c]);
        for (std::size_t i = c + 1; i < m.size(); ++i) {
            const Series f = series_mul(m[i][c], inv);
            bool zero = true;
            for (const auto& x : f) {
                zero = zero && x == 0;
            }
            if (zero) {
                continue;
            }
            for (std::size_t j = c; j < m.size(); ++j) {
                const Series prod = series_mul(f, m[c][j]);
                for (std::size_t z = 0; z < len; ++z) {
                    m[i][j][z] -= prod[z];
                }
            }
        }
    }
    const Rational g = barnes_g_ratio(k);
    for (std::size_t r = 0; r < len; ++r) {
        det[r] *= g * fact(static_cast<int>(r));
    }
    return det;
}

} // namespace

std::vector<Rational> gessel_path(int r_max, int k, int n)
{
    if (r_max < 0 || k < 1) {
        throw std::invalid_argument("gessel_path: need r_max >= 0 and k >= 1");
    }
    if (n < r_max) {
        throw std::domain_error("gessel_path: truncation order below r_max");
    }
    std::vector<Rational> result = gessel_coefficients(r_max, k, n);
    int other = -1;
    if (n + 1 <= 2 * k) {
        other = n + 1;
    } else if (n - 1 >= r_max && n - 1 >= 1) {
        other = n - 1;
    }
    if (other > 0 && gessel_coefficients(r_max, k, other) != result) {
        throw std::runtime_error("gessel_path: truncation order too small (unstable under n -> n+1)");
    }
    return result;
}

Rational continuation_at_one(int r, int nu1)
{
    if (r < 1) {
        throw std::invalid_argument("continuation_at_one: r must be positive");
    }
    Rational total = 0;
    for_each_index_term(r, [&](const std::vector<int>& s, const std::vector<int>& t) {
        const Rational c = scaled_cauchy(s, t);
        Rational term = c * c;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const int nu = t[i] == 0 ? 0 : (t[i] == 1 ? nu1 : 1);
            Integer power = 1;
            power <<= static_cast<unsigned>(std::abs(nu));
            const Rational two_nu = nu >= 0 ? Rational(power) : Rational(1 / Rational(power));
            term *= make_rational(1 - t[i], 2 + s[i]) / two_nu;
        }
        total += term;
    });
    return total * fact(r);
}

} // namespace jm
