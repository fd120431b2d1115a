#pragma once

// Asymptotic joint moments as rational functions of u = 2k.
//
// Convention: (M)(2k, r) = (-i/2)^r g(k) X_r(2k) / Y_r(2k), so the real
// quantity i^r (M)(2k, r) equals g(k) X_r(2k) / (2^r Y_r(2k)).

#include "jm/exactmath.hpp"
#include "jm/polynomial.hpp"
#include "jm/rational_function.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace jm {

struct MomentFunction {
    int r = 0;
    IntPolynomial X;
    IntPolynomial Y;

    /// X_r(2k)/Y_r(2k) as an exact rational.
    Rational ratio_at(int k) const;
    /// i^r (M)(2k, r) = g(k) X_r(2k) / (2^r Y_r(2k)).
    Rational moment_at(int k) const;
};

/// (1/(1+s+t)) prod_{i=-t}^{s} (k+i)/(2k+i) written in u = 2k.
RationalFunction h_limit(int s, int t);

/// Three closed forms of the limit at integer k > t.
Rational h_identity_sum(int k, int s, int t);
Rational h_identity_product(int k, int s, int t);
Rational h_identity_gamma(int k, int s, int t);

/// floor((-a + sqrt(a^2 + 4r))/2), the largest m with m(m+a) <= r.
int alpha(int a, int r);

/// prod over odd a < r of (u^2 - a^2)^{alpha(a, r)}.
IntPolynomial denominator_Y(int r);

/// Y_r written as a product, e.g. "(u^2 - 1)*(u^2 - 9)"; "1" when empty.
std::string factored_denominator(int r);

/// X_r, Y_r. Asserts (std::logic_error) that all cancellations are exact.
MomentFunction asymptotic_moment(int r);

/// Thread-safe memo around asymptotic_moment.
class MomentCache {
public:
    const MomentFunction& get(int r);
    /// Computes every r in [1, r_max] not yet present, in parallel.
    void fill(int r_max);

private:
    std::mutex mutex_;
    std::map<int, MomentFunction> table_;
};

MomentCache& global_moment_cache();

/// X_r/Y_r assembled symbolically from the d x d determinants of h_limit
/// entries. Slow; intended as an independent check for small r.
RationalFunction asymptotic_moment_reference(int r);

/// Sum over the index set of squared Cauchy determinants times 2^{-r}.
Rational leading_constant_check(int r);

/// r! [z^r] of g(k) sum_lambda s~_lambda^{(2k)} s_lambda[1^k] z^{|lambda|}.
Rational ninth_path(int r, int k);

/// r! g(k) [z^r] of the n x n truncated determinant, r = 0..r_max.
/// Throws std::domain_error if n < r_max, PoleError if n > 2k, and
/// std::runtime_error when the neighbouring truncation disagrees.
std::vector<Rational> gessel_path(int r_max, int k, int n);

/// r! [z^r] of the k = 1 continuation with the free value nu(1) = nu1.
Rational continuation_at_one(int r, int nu1 = 1);

} // namespace jm
