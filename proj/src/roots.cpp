#include "jm/roots.hpp"
#include "jm/moments_asymptotic.hpp"
#include "jm/moments_derived.hpp"
#include "jm/parallel.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jm {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;

int sign_at_infinity(const IntPolynomial& p, bool positive)
{
    const int s = sgn(p.leading());
    return (positive || p.degree() % 2 == 0) ? s : -s;
}

int sign_changes(const std::vector<int>& signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

int variations(const std::vector<IntPolynomial>& chain, const std::optional<Rational>& x, bool positive_infinity)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        signs.push_back(x ? p.sign_at(*x) : sign_at_infinity(p, positive_infinity));
    }
    return sign_changes(signs);
}

int count_in(const std::vector<IntPolynomial>& chain, const Interval& iv)
{
    return variations(chain, iv.lo, false) - variations(chain, iv.hi, true);
}

// Power of two strictly above every root (Cauchy bound).
Rational root_bound(const IntPolynomial& p)
{
    const auto& c = p.coefficients();
    Integer max_ratio = 0;
    const Integer lead = abs(p.leading());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Integer q = abs(c[i]) / lead + 1;
        if (q > max_ratio) {
            max_ratio = q;
        }
    }
    Integer b = 1;
    while (b <= max_ratio + 1) {
        b *= 2;
    }
    return Rational(b);
}

} // namespace

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p)
{
    if (p.is_zero()) {
        throw std::domain_error("sturm_sequence: zero polynomial");
    }
    std::vector<IntPolynomial> chain;
    chain.push_back(square_free_part(p));
    if (chain.back().degree() == 0) {
        return chain;
    }
    chain.push_back(chain.back().derivative().primitive_part());
    while (chain.back().degree() > 0) {
        const IntPolynomial& a = chain[chain.size() - 2];
        const IntPolynomial& b = chain.back();
        IntPolynomial r = pseudo_remainder(a, b);
        // prem multiplies by lc(b)^delta; undo a negative sign so that the
        // chain keeps the signs of the true remainders.
        const int delta = a.degree() - b.degree() + 1;
        if (b.leading() < 0 && delta % 2 == 1) {
            r = -r;
        }
        if (r.is_zero()) {
            break;
        }
        r = -r;
        const Integer c = r.content();
        r.divide_coefficients(c);
        chain.push_back(std::move(r));
    }
    return chain;
}

int sturm_count(const IntPolynomial& p, const Interval& interval)
{
    if (interval.lo && interval.hi && *interval.lo >= *interval.hi) {
        return 0;
    }
    return count_in(sturm_sequence(p), interval);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPolynomial& p)
{
    const auto chain = sturm_sequence(p);
    std::vector<std::pair<Rational, Rational>> out;
    if (chain.front().degree() <= 0) {
        return out;
    }
    const Rational b = root_bound(chain.front());
    struct Pending {
        Rational lo, hi;
        int count;
    };
    std::vector<Pending> stack;
    const int total = count_in(chain, {Rational(-b), b});
    if (total > 0) {
        stack.push_back({-b, b, total});
    }
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.count == 1) {
            out.emplace_back(cur.lo, cur.hi);
            continue;
        }
        const Rational mid = (cur.lo + cur.hi) / 2;
        const int left = count_in(chain, {cur.lo, mid});
        if (left > 0) {
            stack.push_back({cur.lo, mid, left});
        }
        if (cur.count - left > 0) {
            stack.push_back({mid, cur.hi, cur.count - left});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::string decimal_string(const Rational& x, int significant)
{
    if (significant < 1) {
        throw std::invalid_argument("decimal_string: need at least one digit");
    }
    if (x == 0) {
        std::string s = "0";
        if (significant > 1) {
            s += "." + std::string(static_cast<std::size_t>(significant - 1), '0');
        }
        return s;
    }
    const Rational ax = abs(x);
    // e with 10^(e-1) <= |x| < 10^e
    long e = static_cast<long>(ax.get_num().get_str().size()) - static_cast<long>(ax.get_den().get_str().size());
    auto pow10 = [](long n) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(n));
        return r;
    };
    auto scaled = [&](long shift) {
        return shift >= 0 ? Rational(ax * pow10(shift)) : Rational(ax / pow10(-shift));
    };
    while (scaled(-e) >= 1) {
        ++e;
    }
    while (scaled(1 - e) < 1) {
        --e;
    }
    // round half up of |x| * 10^(significant - e)
    const Rational s = scaled(significant - e);
    Integer digits = (s.get_num() * 2 + s.get_den()) / (s.get_den() * 2);
    if (digits == pow10(significant)) {
        digits /= 10;
        ++e;
    }
    std::string d = digits.get_str();
    std::string out = x < 0 ? "-" : "";
    if (e <= 0) {
        out += "0." + std::string(static_cast<std::size_t>(-e), '0') + d;
    } else if (e >= significant) {
        out += d + std::string(static_cast<std::size_t>(e - significant), '0');
    } else {
        out += d.substr(0, static_cast<std::size_t>(e)) + "." + d.substr(static_cast<std::size_t>(e));
    }
    return out;
}

namespace {

std::string ulp_string(const Rational& x, int significant)
{
    if (x == 0) {
        return "1e-" + std::to_string(significant - 1);
    }
    const Rational ax = abs(x);
    long e = static_cast<long>(ax.get_num().get_str().size()) - static_cast<long>(ax.get_den().get_str().size());
    auto pow10q = [](long n) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(n)));
        return n >= 0 ? Rational(r) : Rational(1 / Rational(r));
    };
    while (ax >= pow10q(e)) {
        ++e;
    }
    while (ax < pow10q(e - 1)) {
        --e;
    }
    return "1e" + std::to_string(e - significant);
}

Rational ten_power(long n)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(n)));
    return n >= 0 ? Rational(r) : Rational(1 / Rational(r));
}

RealRoot refine_one(const IntPolynomial& p, const std::vector<IntPolynomial>& chain, Rational lo, Rational hi,
                    int digits)
{
    RealRoot root;
    int s_hi = p.sign_at(hi);
    if (s_hi == 0) {
        root.exact = true;
        root.lo = root.hi = root.approx = hi;
    } else {
        // Keep lo off a root belonging to the neighbouring interval.
        while (p.sign_at(lo) == 0) {
            Rational step = (hi - lo) / 2;
            Rational trial = lo + step;
            while (count_in(chain, {trial, hi}) != 1) {
                step /= 2;
                trial = lo + step;
            }
            lo = trial;
        }
        const int s_lo = p.sign_at(lo);
        // Target width: well below one unit in the last requested digit.
        const Rational mag = std::max(abs(lo), abs(hi));
        long e = 1;
        while (ten_power(e) <= mag) {
            ++e;
        }
        const Rational target = ten_power(e - digits - 2);
        bool integer_checked = false;
        while (hi - lo > target) {
            if (!integer_checked && hi - lo < 1) {
                // Rational roots of these monic polynomials are integers.
                integer_checked = true;
                Integer n;
                mpz_fdiv_q(n.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
                if (Rational(n) > lo && p.sign_at(Rational(n)) == 0) {
                    lo = hi = Rational(n);
                    root.exact = true;
                    break;
                }
            }
            const Rational mid = (lo + hi) / 2;
            const int s_mid = p.sign_at(mid);
            if (s_mid == 0) {
                lo = hi = mid;
                root.exact = true;
                break;
            }
            if (s_mid == s_lo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        root.lo = lo;
        root.hi = hi;
        root.approx = (lo + hi) / 2;
    }
    root.value = decimal_string(root.approx, digits);
    root.error_bound = root.exact ? "0" : ulp_string(root.approx, digits);
    return root;
}

Real to_real(const Rational& x) { return Real(x.get_num().get_str()) / Real(x.get_den().get_str()); }

std::string real_string(const Real& x, int significant)
{
    std::ostringstream os;
    os.precision(significant);
    os << x;
    return os.str();
}

struct Complex {
    Real re;
    Real im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b)
{
    const Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Real cabs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

// p(z) and p'(z) by Horner.
void horner(const std::vector<Real>& c, const Complex& z, Complex& value, Complex& deriv)
{
    value = {Real(0), Real(0)};
    deriv = {Real(0), Real(0)};
    for (std::size_t i = c.size(); i-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + Complex{c[i], Real(0)};
    }
}

} // namespace

std::vector<ComplexRoot> aberth_roots(const IntPolynomial& p, int digits, double max_radius)
{
    const int n = p.degree();
    std::vector<ComplexRoot> out;
    if (n < 1) {
        return out;
    }
    std::vector<Real> c;
    for (const auto& x : p.coefficients()) {
        c.emplace_back(x.get_str());
    }
    // Fujiwara's bound: 2 max |a_{n-i}/a_n|^{1/i}.
    Real bound = 0;
    for (int i = 1; i <= n; ++i) {
        const Real ratio = abs(c[static_cast<std::size_t>(n - i)] / c[static_cast<std::size_t>(n)]);
        if (ratio > 0) {
            bound = std::max(bound, Real(pow(ratio, Real(1) / i)));
        }
    }
    bound *= 2;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    const Real pi = boost::multiprecision::acos(Real(-1));
    for (int i = 0; i < n; ++i) {
        const Real angle = 2 * pi * i / n + Real(0.4);
        z[static_cast<std::size_t>(i)] = {bound / 2 * cos(angle), bound / 2 * sin(angle)};
    }
    const Real tol = pow(Real(10), -std::max(digits, 30) - 5);
    for (int iter = 0; iter < 2000; ++iter) {
        Real largest_step = 0;
        for (int i = 0; i < n; ++i) {
            Complex v;
            Complex d;
            horner(c, z[static_cast<std::size_t>(i)], v, d);
            if (v.re == 0 && v.im == 0) {
                continue;
            }
            const Complex ratio = v / d;
            Complex sum{Real(0), Real(0)};
            for (int j = 0; j < n; ++j) {
                if (j != i) {
                    sum = sum + Complex{Real(1), Real(0)} / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
                }
            }
            const Complex step = ratio / (Complex{Real(1), Real(0)} - ratio * sum);
            z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] - step;
            largest_step = std::max(largest_step, cabs(step));
        }
        if (largest_step < tol) {
            break;
        }
    }
    std::vector<Real> radius(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Complex v;
        Complex d;
        horner(c, z[static_cast<std::size_t>(i)], v, d);
        const Real dv = cabs(d);
        if (dv == 0) {
            throw std::runtime_error("aberth_roots: vanishing derivative at an approximation");
        }
        radius[static_cast<std::size_t>(i)] = n * cabs(v) / dv;
        if (radius[static_cast<std::size_t>(i)] > max_radius) {
            throw std::runtime_error("aberth_roots: inclusion radius above tolerance");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (cabs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) <=
                radius[static_cast<std::size_t>(i)] + radius[static_cast<std::size_t>(j)]) {
                throw std::runtime_error("aberth_roots: inclusion discs overlap");
            }
        }
    }
    const int shown = std::min(digits, 30);
    for (int i = 0; i < n; ++i) {
        ComplexRoot r;
        r.re = real_string(z[static_cast<std::size_t>(i)].re, shown);
        r.im = real_string(z[static_cast<std::size_t>(i)].im, shown);
        r.radius = static_cast<double>(radius[static_cast<std::size_t>(i)]);
        if (abs(z[static_cast<std::size_t>(i)].im) <= radius[static_cast<std::size_t>(i)]) {
            r.im = "0";
        }
        out.push_back(r);
    }
    return out;
}

RootReport refine_roots(const IntPolynomial& p, int digits, int h)
{
    if (digits < 1) {
        throw std::invalid_argument("refine_roots: digits must be positive");
    }
    if (p.is_zero()) {
        throw std::domain_error("refine_roots: zero polynomial");
    }
    RootReport report;
    report.h = h;
    report.degree = p.degree();
    const auto chain = sturm_sequence(p);
    const IntPolynomial& sf = chain.front();
    report.square_free_degree = sf.degree();
    report.repeated_roots = sf.degree() != p.degree();
    for (const auto& [lo, hi] : isolate_real_roots(sf)) {
        report.roots.push_back(refine_one(sf, chain, lo, hi, digits));
    }
    report.real_root_count = static_cast<int>(report.roots.size());
    if (!report.roots.empty()) {
        report.largest = report.roots.back();
    }
    // Roots of an even polynomial pair up under negation.
    const std::size_t nr = report.roots.size();
    for (std::size_t i = 0; i < nr; ++i) {
        const RealRoot& a = report.roots[i];
        const RealRoot& b = report.roots[nr - 1 - i];
        const Rational slack = (a.hi - a.lo) + (b.hi - b.lo);
        if (abs(a.approx + b.approx) > slack) {
            report.symmetric = false;
        }
    }
    const int nonreal = report.square_free_degree - report.real_root_count;
    if (nonreal > 0) {
        auto all = aberth_roots(sf, digits);
        for (const auto& r : all) {
            if (r.im != "0") {
                report.complex_roots.push_back(r);
            }
        }
        if (static_cast<int>(report.complex_roots.size()) != nonreal) {
            throw std::runtime_error("refine_roots: complex solver disagrees with the Sturm count");
        }
    }
    report.complex_pair_count = nonreal / 2;
    return report;
}

std::string log_abs_difference(const Rational& x, const Rational& a, int significant)
{
    const Rational diff = abs(x - a);
    if (diff == 0) {
        return "-inf";
    }
    const Real v = log(to_real(diff));
    // Round through an exact decimal to keep the formatting uniform.
    std::ostringstream os;
    os.precision(significant + 10);
    os << std::scientific << v;
    const std::string text = os.str();
    const auto epos = text.find('e');
    std::string mant = text.substr(0, epos);
    const long exp10 = std::stol(text.substr(epos + 1));
    bool negative = mant[0] == '-';
    if (negative) {
        mant.erase(0, 1);
    }
    mant.erase(mant.find('.'), 1);
    Integer num = parse_integer(mant);
    Rational q = exp10 - static_cast<long>(mant.size()) + 1 >= 0
                     ? Rational(num * ten_power(exp10 - static_cast<long>(mant.size()) + 1).get_num())
                     : Rational(num / ten_power(static_cast<long>(mant.size()) - 1 - exp10));
    if (negative) {
        q = -q;
    }
    return decimal_string(q, significant);
}

std::vector<FigureRow> figure_export(int h_max, int digits)
{
    std::vector<std::vector<FigureRow>> per_h(static_cast<std::size_t>(std::max(h_max, 0)));
    global_moment_cache().fill(2 * h_max);
    parallel_for(per_h.size(), [&](std::size_t i) {
        const int h = static_cast<int>(i) + 1;
        const DerivedMomentFunction v = abs_v_asymptotic(h);
        if (v.numerator.degree() < 1) {
            return;
        }
        const RootReport report = refine_roots(v.numerator, digits, h);
        for (const auto& r : report.roots) {
            if (r.approx <= 0) {
                continue;
            }
            per_h[i].push_back({h, r.value, log_abs_difference(r.approx, Rational(2 * h - 1), 5), r.approx});
        }
    });
    std::vector<FigureRow> rows;
    for (auto& v : per_h) {
        rows.insert(rows.end(), v.begin(), v.end());
    }
    return rows;
}

} // namespace jm
