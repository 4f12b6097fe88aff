#pragma once

#include <string>
#include <vector>

#include "qm/brute_oracle.hpp"
#include "qm/pgf_engine.hpp"

namespace qm::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first counterexample on failure, range summary on pass
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs the full identity suite: recurrence vs enumeration up to
/// max_n_brute, closed forms vs exact distributions up to max_n_exact,
/// the path-length shift identity, both log-power dual routes and the
/// moment ODE residuals at series_order. Requires max_n_brute <= brute_cap.
Report run(unsigned max_n_brute, unsigned max_n_exact, unsigned series_order,
           unsigned brute_cap = brute::kDefaultCap, unsigned exact_cap = pgf::kDefaultMaxN);

} // namespace qm::verify
