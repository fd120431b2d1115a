#pragma once

// Schur functions at repeated arguments [1^R] and the ninth variation.

#include "jm/exactmath.hpp"
#include "jm/partitions.hpp"
#include "jm/rational_function.hpp"

#include <vector>

namespace jm {

/// det[1/(p_i + q_j + 1)] by its closed product form. Throws PoleError when
/// some p_i + q_j = -1.
Rational cauchy_determinant(const std::vector<int>& p, const std::vector<int>& q);

/// s_lambda[1^R] by the product formula in Frobenius coordinates. Zero when
/// l(lambda) > R.
Integer schur_ones(const Partition& lambda, int R);

/// Same value through the reduced d x d determinant.
Rational schur_ones_determinantal(const Partition& lambda, int R);

/// The product formula applied literally to unsorted coordinates, so it is
/// skew-symmetric in p and in q. R may be any rational.
Rational schur_ones_signed(const std::vector<int>& p, const std::vector<int>& q, const Rational& R);

/// s_{<N^k> u (p|q)}[1^{2k}] through the rectangle-extension product.
Rational rect_extended_schur(const std::vector<int>& p, const std::vector<int>& q, int N, int k);

/// h~^{(R)}_m = (R-1)!/((R+m-1)! m!), 1 at m = 0 and 0 for m < 0.
/// Throws PoleError when R (R+1) ... (R+m-1) vanishes.
Rational ninth_h(const Rational& R, int m);

/// s~_lambda^{(R)} from the l(lambda) x l(lambda) Jacobi-Trudi determinant.
Rational ninth_schur_jacobi_trudi(const Partition& lambda, const Rational& R);

/// s~_lambda^{(R)} from the rank x rank Giambelli determinant.
Rational ninth_schur_giambelli(const Partition& lambda, const Rational& R);

/// s~_lambda^{(u)} as a rational function of R = u.
RationalFunction ninth_schur_symbolic(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda (hook length formula).
Integer standard_tableaux(const Partition& lambda);

} // namespace jm
