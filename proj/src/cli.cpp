#include "jm/cli.hpp"
#include "jm/moments_asymptotic.hpp"
#include "jm/moments_derived.hpp"
#include "jm/moments_finite.hpp"
#include "jm/parallel.hpp"
#include "jm/roots.hpp"
#include "jm/serialize.hpp"
#include "jm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace jm {

namespace {

constexpr int kMaxR = 200;
constexpr int kMaxDigits = 2000;

void require(bool cond, const std::string& message)
{
    if (!cond) {
        throw UsageError(message);
    }
}

std::string i_power_factor(int r)
{
    // (-i)^r
    static const char* const table[] = {"1", "-i", "-1", "i"};
    return table[r % 4];
}

std::string render_complex_m(const JobSpec& spec)
{
    auto& cache = global_moment_cache();
    cache.fill(spec.r);
    const int first = spec.r == 0 ? 0 : 1;
    std::ostringstream os;
    if (spec.format == "json") {
        Json list = Json::array();
        for (int r = first; r <= spec.r; ++r) {
            list.push_back(to_json(r == 0 ? asymptotic_moment(0) : cache.get(r)));
        }
        os << Json{{"command", "complex-m"}, {"moments", list}}.dump(2) << "\n";
    } else if (spec.format == "csv") {
        os << csv_row({"r", "power", "X", "Y"});
        for (int r = first; r <= spec.r; ++r) {
            const MomentFunction m = r == 0 ? asymptotic_moment(0) : cache.get(r);
            for (int p = 0; p <= m.X.degree(); ++p) {
                os << csv_row({std::to_string(r), std::to_string(p), m.X.coefficient(static_cast<std::size_t>(p)).get_str(),
                               m.Y.coefficient(static_cast<std::size_t>(p)).get_str()});
            }
        }
    } else {
        for (int r = first; r <= spec.r; ++r) {
            const MomentFunction m = r == 0 ? asymptotic_moment(0) : cache.get(r);
            os << "r = " << r << "\n"
               << "  X = " << to_string(m.X) << "\n"
               << "  Y = " << to_string(m.Y) << "\n"
               << "    = " << factored_denominator(r) << "\n";
        }
    }
    return os.str();
}

std::string render_derived(const JobSpec& spec, DerivedKind kind)
{
    auto& cache = global_moment_cache();
    cache.fill(2 * spec.h);
    const int first = spec.h == 0 ? 0 : 1;
    std::vector<DerivedMomentFunction> fs;
    for (int h = first; h <= spec.h; ++h) {
        fs.push_back(kind == DerivedKind::AbsM ? abs_m_asymptotic(h, cache) : abs_v_asymptotic(h, cache));
    }
    std::ostringstream os;
    if (spec.format == "json") {
        Json list = Json::array();
        for (const auto& f : fs) {
            list.push_back(to_json(f));
        }
        os << Json{{"command", to_string(kind)}, {"moments", list}}.dump(2) << "\n";
    } else if (spec.format == "csv") {
        os << csv_row({"h", "power", "numerator", "denominator", "constant_num", "constant_den"});
        for (const auto& f : fs) {
            const int deg = std::max(f.numerator.degree(), f.denominator.degree());
            for (int p = 0; p <= deg; ++p) {
                os << csv_row({std::to_string(f.h), std::to_string(p),
                               f.numerator.coefficient(static_cast<std::size_t>(p)).get_str(),
                               f.denominator.coefficient(static_cast<std::size_t>(p)).get_str(),
                               f.constant.get_num().get_str(), f.constant.get_den().get_str()});
            }
        }
    } else {
        for (const auto& f : fs) {
            os << "h = " << f.h << "\n"
               << "  constant    = " << to_string(f.constant)
               << (f.constant_matches ? "" : "  (differs from the closed form " + to_string(f.expected_constant) + ")")
               << "\n"
               << "  numerator   = " << to_string(f.numerator) << "\n"
               << "  denominator = " << factored_denominator(2 * f.h) << "\n";
        }
    }
    return os.str();
}

std::string render_finite(const JobSpec& spec)
{
    const auto series = finite_moment_series(spec.N, spec.k, spec.rmax);
    std::ostringstream os;
    if (spec.format == "json") {
        Json list = Json::array();
        for (int r = 0; r <= spec.rmax; ++r) {
            list.push_back(Json{{"r", r}, {"factor", i_power_factor(r)}, {"m", to_json(series[static_cast<std::size_t>(r)])}});
        }
        os << Json{{"command", "finite-n"}, {"N", spec.N}, {"k", spec.k}, {"entries", list}}.dump(2) << "\n";
    } else if (spec.format == "csv") {
        os << csv_row({"N", "k", "r", "factor", "m_num", "m_den"});
        for (int r = 0; r <= spec.rmax; ++r) {
            const Rational& m = series[static_cast<std::size_t>(r)];
            os << csv_row({std::to_string(spec.N), std::to_string(spec.k), std::to_string(r), i_power_factor(r),
                           m.get_num().get_str(), m.get_den().get_str()});
        }
    } else {
        os << "N = " << spec.N << ", k = " << spec.k << "; moment = factor * m\n";
        for (int r = 0; r <= spec.rmax; ++r) {
            os << "  r = " << r << "  factor = " << i_power_factor(r)
               << "  m = " << to_string(series[static_cast<std::size_t>(r)]) << "\n";
        }
    }
    return os.str();
}

std::vector<RootReport> compute_root_reports(int h_max, int digits)
{
    auto& cache = global_moment_cache();
    cache.fill(2 * h_max);
    std::vector<IntPolynomial> numerators;
    for (int h = 1; h <= h_max; ++h) {
        numerators.push_back(abs_v_asymptotic(h, cache).numerator);
    }
    std::vector<RootReport> reports(numerators.size());
    parallel_for(reports.size(),
                 [&](std::size_t i) { reports[i] = refine_roots(numerators[i], digits, static_cast<int>(i) + 1); });
    return reports;
}

std::string render_roots(const JobSpec& spec)
{
    const auto reports = compute_root_reports(spec.h, spec.digits);
    std::ostringstream os;
    if (spec.format == "json") {
        Json list = Json::array();
        for (const auto& r : reports) {
            list.push_back(to_json(r));
        }
        os << Json{{"command", "roots"}, {"digits", spec.digits}, {"reports", list}}.dump(2) << "\n";
    } else if (spec.format == "csv") {
        os << csv_row({"h", "type", "re", "im", "error_bound"});
        for (const auto& r : reports) {
            for (const auto& x : r.roots) {
                os << csv_row({std::to_string(r.h), "real", x.value, "0", x.error_bound});
            }
            for (const auto& z : r.complex_roots) {
                std::ostringstream radius;
                radius << z.radius;
                os << csv_row({std::to_string(r.h), "complex", z.re, z.im, radius.str()});
            }
        }
    } else {
        for (const auto& r : reports) {
            os << "h = " << r.h << "  degree = " << r.degree << "  real roots = " << r.real_root_count
               << "  non-real roots = " << r.complex_roots.size() << (r.repeated_roots ? "  (repeated roots)" : "")
               << "\n";
            if (r.largest) {
                os << "  largest = " << r.largest->value << "\n";
            }
            for (const auto& z : r.complex_roots) {
                os << "  complex " << z.re << " " << (z.im[0] == '-' ? "- " + z.im.substr(1) : "+ " + z.im) << "i\n";
            }
        }
    }
    return os.str();
}

std::string render_figure(const JobSpec& spec)
{
    const auto rows = figure_export(spec.h, spec.digits);
    std::ostringstream os;
    if (spec.format == "json") {
        Json list = Json::array();
        for (const auto& row : rows) {
            list.push_back(Json{{"h", row.h}, {"root", row.root}, {"log_diff", row.log_diff}});
        }
        os << Json{{"command", "figure-data"}, {"rows", list}}.dump(2) << "\n";
    } else {
        // text and csv share the plotting schema
        os << csv_row({"h", "root", "log_diff"});
        for (const auto& row : rows) {
            os << csv_row({std::to_string(row.h), row.root, row.log_diff});
        }
    }
    return os.str();
}

std::string render_verify(const JobSpec& spec, bool& all_passed)
{
    const auto results = run_suite(spec.suite == "full" ? Suite::Full : Suite::Fast);
    std::ostringstream os;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
    }
    if (spec.format == "json") {
        Json list = Json::array();
        for (const auto& r : results) {
            list.push_back(
                Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        }
        os << Json{{"command", "verify"}, {"suite", spec.suite}, {"all_passed", all_passed}, {"results", list}}.dump(2)
           << "\n";
    } else if (spec.format == "csv") {
        os << csv_row({"id", "name", "passed", "seconds", "detail"});
        for (const auto& r : results) {
            std::ostringstream secs;
            secs << r.seconds;
            os << csv_row({std::to_string(r.id), r.name, r.passed ? "true" : "false", secs.str(), r.detail});
        }
    } else {
        for (const auto& r : results) {
            os << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ":" << r.detail << "\n";
        }
    }
    return os.str();
}

void write_error(std::ostream& err, const std::string& type, const std::string& message)
{
    err << Json{{"error", Json{{"type", type}, {"message", message}}}}.dump() << "\n";
}

} // namespace

void validate(const JobSpec& spec)
{
    require(spec.format == "json" || spec.format == "csv" || spec.format == "text",
            "--format must be json, csv or text");
    const std::string& c = spec.command;
    if (c == "complex-m") {
        require(spec.r >= 0 && spec.r <= kMaxR, "--r must be in [0, " + std::to_string(kMaxR) + "]");
    } else if (c == "abs-m" || c == "abs-v") {
        require(spec.h >= 0 && 2 * spec.h <= kMaxR, "--h must be in [0, " + std::to_string(kMaxR / 2) + "]");
    } else if (c == "finite-n") {
        require(spec.N >= 1, "--N must be positive");
        require(spec.k >= 1, "--k must be positive");
        require(spec.rmax >= 0 && spec.rmax <= 2 * spec.k, "--rmax must be in [0, 2k]");
    } else if (c == "roots" || c == "figure-data") {
        require(spec.h >= 1 && 2 * spec.h <= kMaxR, "--h must be in [1, " + std::to_string(kMaxR / 2) + "]");
        require(spec.digits >= 1 && spec.digits <= kMaxDigits,
                "--digits must be in [1, " + std::to_string(kMaxDigits) + "]");
    } else if (c == "verify") {
        require(spec.suite == "fast" || spec.suite == "full", "--suite must be fast or full");
    } else {
        throw UsageError("unknown command '" + c + "'");
    }
}

std::string render(const JobSpec& spec, bool& all_passed)
{
    const std::string& c = spec.command;
    if (c == "complex-m") {
        return render_complex_m(spec);
    }
    if (c == "abs-m") {
        return render_derived(spec, DerivedKind::AbsM);
    }
    if (c == "abs-v") {
        return render_derived(spec, DerivedKind::AbsV);
    }
    if (c == "finite-n") {
        return render_finite(spec);
    }
    if (c == "roots") {
        return render_roots(spec);
    }
    if (c == "figure-data") {
        return render_figure(spec);
    }
    return render_verify(spec, all_passed);
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err)
{
    try {
        validate(spec);
    } catch (const UsageError& e) {
        write_error(err, "usage", e.what());
        return 2;
    }
    bool all_passed = true;
    std::string artifact;
    try {
        artifact = render(spec, all_passed);
    } catch (const std::exception& e) {
        write_error(err, "computation", e.what());
        return 1;
    }
    if (spec.output.empty()) {
        out << artifact;
        out.flush();
    } else {
        std::ofstream file(spec.output, std::ios::binary);
        file << artifact;
        if (!file) {
            write_error(err, "io", "cannot write " + spec.output);
            return 1;
        }
    }
    return all_passed ? 0 : 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact joint moments of characteristic polynomials of random unitary matrices", "jmoments"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    JobSpec spec;

    auto common = [&spec](CLI::App* sub) {
        sub->add_option("--format", spec.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output,-o", spec.output, "Write to this file instead of standard output");
    };

    auto* complex_m = app.add_subcommand("complex-m", "X_r and Y_r for r = 1..R");
    complex_m->add_option("--r", spec.r, "Largest r")->required();
    common(complex_m);

    auto* abs_m = app.add_subcommand("abs-m", "|M| numerators, denominators and constants for h = 1..H");
    abs_m->add_option("--h", spec.h, "Largest h")->required();
    common(abs_m);

    auto* abs_v = app.add_subcommand("abs-v", "|V| numerators, denominators and constants for h = 1..H");
    abs_v->add_option("--h", spec.h, "Largest h")->required();
    common(abs_v);

    auto* finite = app.add_subcommand("finite-n", "Exact finite-N moments for r = 0..rmax");
    finite->add_option("--N", spec.N, "Matrix size")->required();
    finite->add_option("--k", spec.k, "Half the power of |Z|")->required();
    finite->add_option("--rmax", spec.rmax, "Largest r")->required();
    common(finite);

    auto* roots = app.add_subcommand("roots", "Real and non-real roots of the |V| numerators for h = 1..H");
    roots->add_option("--h", spec.h, "Largest h")->required();
    roots->add_option("--digits", spec.digits, "Significant digits of each real root");
    common(roots);

    auto* figure = app.add_subcommand("figure-data", "Positive real roots with log|root - (2h-1)|");
    figure->add_option("--h", spec.h, "Largest h")->required();
    figure->add_option("--digits", spec.digits, "Significant digits of each root");
    common(figure);

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--suite", spec.suite, "fast or full");
    common(verify);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
        args.emplace_back(argv[i]);
    }
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        write_error(err, "usage", e.what());
        return 2;
    }
    spec.command = app.get_subcommands().front()->get_name();
    return run(spec, out, err);
}

} // namespace jm
