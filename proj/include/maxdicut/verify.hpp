#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maxdicut {

// One verification check, tagged with the acceptance criterion it serves.
struct CheckResult {
    std::string criterion;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Extremal-instance ratios and the explicit cover families (A2, A4).
SuiteReport verify_appendix();

// Tournament identities, sandwich inequalities on random instances against
// both exact oracles, two-tournament tightness, staircase bounds (A3, A6,
// A7, A8).
SuiteReport verify_bounds(std::uint64_t seed);

// Game values for nu = 2..11 with duality certificates, closed-form
// brackets, and monotonicity (A1, A10).
SuiteReport verify_lp();

// Block-layout inequality sweeps (A9).
SuiteReport verify_claims();

// Certificate contract on seeded corpora, one row per constructor (A5).
SuiteReport verify_certificates(std::uint64_t seed);

// Every suite above, in order.
SuiteReport verify_all(std::uint64_t seed);

}  // namespace maxdicut
