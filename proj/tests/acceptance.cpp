// One PASS/FAIL line per acceptance criterion; exit code 0 iff all pass.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "eiscoc/suites.hpp"

int main(int argc, char** argv)
{
    eiscoc::SuiteOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) opt.slow = true;
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opt.seed = std::strtoull(argv[++i], nullptr, 10);
    }
    bool all = true;
    for (int k = 1; k <= eiscoc::kCriteria; ++k) {
        eiscoc::Report r = eiscoc::run_criterion(k, opt);
        bool ok = r.pass();
        all = all && ok;
        std::printf("%s criterion %d (%s): %zu checks, tolerance 0 (exact), %.2fs\n", ok ? "PASS" : "FAIL", k,
                    eiscoc::criterion_title(k).c_str(), r.records.size(), r.seconds);
        for (const auto& rec : r.records)
            if (!rec.pass)
                std::printf("    %s: expected %s, got %s\n", rec.id.c_str(), rec.expected.c_str(), rec.got.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
