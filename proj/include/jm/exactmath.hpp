#pragma once

// Exact scalars and the small combinatorial helpers shared by every module.
//
// Integers and rationals are GMP values. mpq_class keeps results of its own
// arithmetic canonical; anything built from a raw numerator/denominator pair
// must go through make_rational().

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a formula is evaluated at one of its poles.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Rational make_rational(const Integer& num, const Integer& den);

/// Base-10 integer with optional leading sign; throws std::invalid_argument.
Integer parse_integer(const std::string& s);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Integer& x);
/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& x);

Integer factorial(unsigned n);

/// C(n, k); zero when k < 0 or k > n. n must be non-negative.
Integer binomial(long n, long k);

/// x (x+1) ... (x+n-1). Works for any ring-like T with T * T and T + long.
template <class T>
T rising_factorial(const T& x, unsigned n)
{
    T acc(1);
    for (unsigned i = 0; i < n; ++i) {
        acc = acc * (x + static_cast<long>(i));
    }
    return acc;
}

/// G(k+1)^2 / G(2k+1) at a positive integer, i.e. prod_{j<k} j!/(k+j)!.
Rational barnes_g_ratio(long k);

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Bareiss fraction-free elimination. The 0x0 determinant is 1.
Integer determinant(IntegerMatrix m);

/// Rows are scaled to integers, then Bareiss is applied.
Rational determinant(const RationalMatrix& m);

/// Gaussian elimination over any field-like T, given a zero test.
template <class T, class IsZero>
T field_determinant(std::vector<std::vector<T>> m, IsZero is_zero)
{
    const std::size_t n = m.size();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(m[piv][c])) {
            ++piv;
        }
        if (piv == n) {
            return T(0);
        }
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m[i][c])) {
                continue;
            }
            T f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    return det;
}

} // namespace jm
