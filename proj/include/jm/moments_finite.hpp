#pragma once

// Exact joint moments at finite matrix size N.
//
// Values are stored as the rational part m of (M)_N(2k, r) = (-i)^r m.

#include "jm/exactmath.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace jm {

/// H^{N,k,s,t}: the double sum over p in [0,N-1], q in [0,k-1].
Rational h_finite(int N, int k, int s, int t);

/// Strictly decreasing non-negative d-tuples with the given sum, each entry
/// at most max_entry (negative max_entry means unbounded).
std::vector<std::vector<int>> strict_partitions(int d, int sum, int max_entry = -1);

/// m(N,k,r) for r = 0..r_max from the determinantal series; entry 0 is
/// s_{<N^k>}[1^{2k}]. Throws std::out_of_range when r_max >= 2k+1.
std::vector<Rational> finite_moment_series(int N, int k, int r_max);

/// Contribution of the rank-d terms to m(N,k,r); zero whenever d*d > r.
Rational finite_moment_rank_term(int N, int k, int r, int d);

/// m(N,k,r) from the character expansion over lambda in the k x N box.
/// Throws std::domain_error when 2k - r <= -1.
Rational symexpres_oracle(int N, int k, int r);

/// m(1,k,r) as the constant Fourier coefficient of the N = 1 integrand.
/// Throws std::domain_error unless 0 <= r <= k.
Rational fourier_oracle_n1(int k, int r);

class FiniteMomentTable {
public:
    /// Computes (and caches) the series for (N, k) up to r_max.
    const Rational& get(int N, int k, int r);
    void fill(int N, int k, int r_max);
    const std::map<std::tuple<int, int, int>, Rational>& entries() const { return entries_; }

private:
    std::map<std::tuple<int, int, int>, Rational> entries_;
};

} // namespace jm
