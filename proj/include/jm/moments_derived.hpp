#pragma once

// Moments of |Z'/Z| and |V'/V| derived from the plain moments (M).

#include "jm/exactmath.hpp"
#include "jm/polynomial.hpp"

#include <string>
#include <utility>

namespace jm {

class MomentCache;

enum class DerivedKind { AbsM, AbsV };

std::string to_string(DerivedKind kind);

/// moment / g(k) = constant * numerator(2k) / denominator(2k), with the
/// numerator monic and the denominator Y_{2h}.
struct DerivedMomentFunction {
    int h = 0;
    DerivedKind kind = DerivedKind::AbsM;
    IntPolynomial numerator;
    IntPolynomial denominator;
    Rational constant;
    /// The constant predicted in closed form: 4^{-h} for |M|,
    /// (2h)!/(h! 2^{3h}) for |V|.
    Rational expected_constant;
    bool constant_matches = true;

    /// The full moment at integer k, including g(k).
    Rational value_at(int k) const;
};

Rational expected_abs_m_constant(int h);
Rational expected_abs_v_constant(int h);

/// |M|(2k,2h). Throws std::logic_error if the extracted constant differs
/// from 4^{-h} or a cancellation is inexact.
DerivedMomentFunction abs_m_asymptotic(int h, MomentCache& cache);
DerivedMomentFunction abs_m_asymptotic(int h);

/// |V|(2k,2h). A constant differing from (2h)!/(h! 2^{3h}) is reported
/// through constant_matches rather than thrown.
DerivedMomentFunction abs_v_asymptotic(int h, MomentCache& cache);
DerivedMomentFunction abs_v_asymptotic(int h);

/// |V|(2k,2h)/g(k) at integer k from the binomial identity over
/// (M)(2k, 2h-j), j = 0..2h, valid for integer h only.
Rational abs_v_alternative_at(int h, int k, MomentCache& cache);

/// (|M|_N(2k,2h), |V|_N(2k,2h)). Throws std::domain_error unless 2k-2h > -1.
std::pair<Rational, Rational> finite_relations(int N, int k, int h);

} // namespace jm
