#pragma once

// The `jmoments` command-line surface.

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace jm {

struct JobSpec {
    std::string command;
    int r = 0;
    int h = 0;
    int N = 0;
    int k = 0;
    int rmax = 0;
    int digits = 50;
    std::string suite = "fast";
    std::string format = "json";
    /// Empty means standard output.
    std::string output;
};

/// Thrown for parameters outside a command's preconditions.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Validates the job; throws UsageError on the first violation.
void validate(const JobSpec& spec);

/// Renders the full artifact for a validated spec. `all_passed` is cleared
/// when a verification check fails.
std::string render(const JobSpec& spec, bool& all_passed);

/// Validates, computes, writes the artifact. Returns the exit status:
/// 0 success, 1 failed verification or computation error, 2 usage error.
/// Errors are written to `err` as a single-line JSON record.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace jm
