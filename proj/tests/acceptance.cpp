#include "jm/verify.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv)
{
    const jm::Suite suite = argc > 1 && std::strcmp(argv[1], "--fast") == 0 ? jm::Suite::Fast : jm::Suite::Full;
    int failed = 0;
    jm::run_suite(suite, [&](const jm::CheckResult& r) {
        std::printf("criterion %2d %s  %s (%.2fs):%s\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    });
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
