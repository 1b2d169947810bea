#ifndef EISCOC_SUITES_HPP
#define EISCOC_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace eiscoc {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20261016;

struct CheckRecord {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> records; // sorted by id
    double seconds = 0;
    std::string version = kToolVersion;
    bool pass() const;
};

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    bool slow = false;
};

// acceptance criteria 1..9
inline constexpr int kCriteria = 9;
std::string criterion_title(int k);
Report run_criterion(int k, const SuiteOptions& opt = {});

// circle, cone, gm, torsion, siegel, linalg, all; throws std::invalid_argument otherwise
std::vector<int> suite_criteria(const std::string& suite);
Report run_suite(const std::string& suite, const SuiteOptions& opt = {});

} // namespace eiscoc

#endif
