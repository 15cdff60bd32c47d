#pragma once

// Grid-wide cross-validation: closed forms against orbit enumeration and
// against the coincidence diagrams, plus the structural properties of the
// omega invariant and the Dold index components.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fibrecoin {

enum class Fault {
    None,
    /// Test mode: the closed-form Nielsen number under check is off by one
    /// for odd |q| into K.
    NielsenOddQ,
};

struct VerifyOptions {
    std::int64_t qmax = 50;
    std::int64_t rmax = 50;
    std::int64_t window = 500;
    Fault fault = Fault::None;
    /// Combos are evaluated concurrently when true.
    bool parallel = true;
};

struct CheckTally {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    /// First few failing cases, for diagnostics.
    std::vector<std::string> samples;
};

struct VerifySummary {
    std::vector<CheckTally> checks;
    bool ok() const;
};

/// Raises InputError for negative bounds or window < 1.
VerifySummary run_verification(const VerifyOptions& options);

std::string render_summary(const VerifySummary& summary);
nlohmann::json summary_to_json(const VerifySummary& summary);

}  // namespace fibrecoin
