#pragma once

#include <string>
#include <vector>

namespace kisin {

/// Scale of the verification suite. Quick trims the sweeps for fast
/// iteration; Desk runs the full documented ranges (p <= 13, e <= 40 for
/// the symbolic identities; the enumeration suite at p=3 e<=6 q in {3, 9
/// for e<=4} and p=5 e<=6 q=5).
enum class SuiteScale { Quick, Desk };

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs every cross-module invariant at the requested scale and returns
/// one result per property, in a fixed order. Never throws; failures are
/// reported in the results.
std::vector<CheckResult> run_suite(SuiteScale scale);

}  // namespace kisin
