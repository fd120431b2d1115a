#pragma once

// Real-root counting and refinement for integer polynomials, plus a
// certified complex root finder.

#include "jm/exactmath.hpp"
#include "jm/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jm {

/// Half-open interval (lo, hi]; a missing endpoint means infinity.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

/// Sturm chain of the square-free part of p, made of primitive polynomials.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

/// Number of distinct real roots of p in the interval.
int sturm_count(const IntPolynomial& p, const Interval& interval = {});

/// Disjoint intervals (lo, hi], sorted increasingly, each holding exactly
/// one distinct real root of p.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPolynomial& p);

/// x rounded to `significant` significant decimal digits, e.g. "5.7446".
std::string decimal_string(const Rational& x, int significant);

struct RealRoot {
    Rational lo;
    Rational hi;
    bool exact = false;
    /// Decimal value with the requested significant digits.
    std::string value;
    /// One unit in the last printed digit, e.g. "1e-19".
    std::string error_bound;
    /// Midpoint of the final interval (the root itself when exact).
    Rational approx;
};

struct ComplexRoot {
    std::string re;
    std::string im;
    /// Radius of a disc around (re, im) proven to contain a root.
    double radius = 0;
};

struct RootReport {
    int h = 0;
    int degree = 0;
    int square_free_degree = 0;
    bool repeated_roots = false;
    int real_root_count = 0;
    std::vector<RealRoot> roots;
    int complex_pair_count = 0;
    std::vector<ComplexRoot> complex_roots;
    bool symmetric = true;
    std::optional<RealRoot> largest;
};

/// Isolates, refines and certifies all roots of p. `digits` is the number
/// of significant digits reported for every real root.
RootReport refine_roots(const IntPolynomial& p, int digits, int h = 0);

/// All complex roots of the square-free polynomial p by Aberth iteration,
/// each certified by the inclusion disc n |p/p'|. Throws std::runtime_error
/// if a disc exceeds max_radius or discs overlap.
std::vector<ComplexRoot> aberth_roots(const IntPolynomial& p, int digits, double max_radius = 1e-7);

/// ln |x - a| as a decimal string with `significant` digits.
std::string log_abs_difference(const Rational& x, const Rational& a, int significant);

struct FigureRow {
    int h = 0;
    std::string root;
    std::string log_diff;
    Rational approx;
};

/// Positive real roots of the |V| numerators for h = 1..h_max, sorted by
/// (h, root), with ln|root - (2h-1)|.
std::vector<FigureRow> figure_export(int h_max, int digits);

} // namespace jm
