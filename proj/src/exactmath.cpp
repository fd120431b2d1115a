#include "jm/exactmath.hpp"

#include <utility>

namespace jm {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer parse_integer(const std::string& s)
{
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
    Integer r;
    mpz_set_str(r.get_mpz_t(), s.c_str() + (s[0] == '+' ? 1 : 0), 10);
    return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1) {
        return x.get_num().get_str();
    }
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k)
{
    if (n < 0) {
        throw std::invalid_argument("binomial: negative upper index");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational barnes_g_ratio(long k)
{
    if (k < 1) {
        throw std::domain_error("barnes_g_ratio: k must be a positive integer");
    }
    Integer num = 1;
    Integer den = 1;
    for (long j = 0; j < k; ++j) {
        num *= factorial(static_cast<unsigned>(j));
        den *= factorial(static_cast<unsigned>(k + j));
    }
    return make_rational(num, den);
}

Integer determinant(IntegerMatrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw std::invalid_argument("determinant: matrix is not square");
        }
    }
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational determinant(const RationalMatrix& m)
{
    IntegerMatrix scaled;
    scaled.reserve(m.size());
    Integer denominator = 1;
    for (const auto& row : m) {
        Integer row_lcm = 1;
        for (const auto& x : row) {
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), x.get_den_mpz_t());
        }
        std::vector<Integer> irow;
        irow.reserve(row.size());
        for (const auto& x : row) {
            irow.push_back(x.get_num() * (row_lcm / x.get_den()));
        }
        scaled.push_back(std::move(irow));
        denominator *= row_lcm;
    }
    return make_rational(determinant(std::move(scaled)), denominator);
}

} // namespace jm
