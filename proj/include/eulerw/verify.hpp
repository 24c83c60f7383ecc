#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eulerw {

inline constexpr std::uint64_t kDefaultSeed = 0xD1CE5EEDull;

struct CheckResult {
    std::string id;
    std::string name;
    std::string reference;  // formula or identity the check pins down
    std::string expected;
    std::string observed;
    std::string tolerance;
    bool pass = false;
    double elapsed_sec = 0.0;  // measured per check; never serialized
};

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    bool quick = false;    // 1e5 samples everywhere instead of full budgets
    unsigned threads = 0;  // 0 = hardware concurrency
    /// The determinism check reruns the suite; inner runs set this to stop
    /// the recursion.
    bool skip_determinism = false;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    bool quick = false;
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

/// Runs the whole check suite. The produced report depends only on
/// (seed, quick): thread count and wall time never enter it, so serialized
/// reports are byte-identical across runs and worker counts.
VerifyReport run_verification(const VerifyOptions& options);

std::string report_to_json(const VerifyReport& report);
std::string report_to_csv(const VerifyReport& report);

}  // namespace eulerw
