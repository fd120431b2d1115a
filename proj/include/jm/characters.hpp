#pragma once

// Irreducible characters of the symmetric group and the character sums
// that feed the finite-N moment formulas.

#include "jm/exactmath.hpp"
#include "jm/partitions.hpp"

#include <functional>
#include <vector>

namespace jm {

/// chi^lambda_rho by Murnaghan-Nakayama ribbon removal on beta-sets.
/// Zero when sum(rho) != |lambda|. Parts of rho must be positive.
/// Results are memoized in a process-wide table safe for concurrent use.
Integer mn_character(const Partition& lambda, const std::vector<int>& rho);

/// Number of entries currently held by the character memo table.
std::size_t mn_cache_size();

/// Calls f on every composition of n into exactly l positive parts, in
/// lexicographic order.
void for_each_composition(int n, int l, const std::function<void(const std::vector<int>&)>& f);

/// Sum of chi^lambda_rho over ordered vectors rho of l positive parts.
Integer char_sum_fixed_parts(const Partition& lambda, int l);

struct StructureParams {
    int l = 0;
    int d = 0;
    std::vector<int> p;
    std::vector<int> q;
    int v = 0;
};

/// The counting sum over s, t in N^d with sum(t) = v and d + sum(s + t) = l.
Rational structure_count(const StructureParams& params);

/// Double permutation sum of the "simpler" identity; PoleError on a zero
/// denominator.
Rational simpler_sum_lhs(const std::vector<int>& s, const std::vector<int>& t);
/// Its product form; PoleError when some s_i + t_j = -1.
Rational simpler_sum_rhs(const std::vector<int>& s, const std::vector<int>& t);

/// f(p, q) with p, q unsorted Frobenius vectors of equal length.
using FrobeniusFunction = std::function<Rational(const std::vector<int>&, const std::vector<int>&)>;

/// sum over lambda in the k x N box and rho in N_+^l of chi^lambda_rho f(lambda),
/// by brute force (the empty partition contributes nothing for l >= 1).
Rational box_character_sum_brute(int N, int k, int l, const FrobeniusFunction& f);

/// The same sum reassembled from structure counts over unsorted p in
/// [0,N-1]^d, q in [0,k-1]^d. f must be alternating in p and in q.
Rational box_character_sum_structures(int N, int k, int l, const FrobeniusFunction& f);

} // namespace jm
