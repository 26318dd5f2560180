#pragma once

#include <string>

#include "cubezeta/oracle.hpp"
#include "cubezeta/psi.hpp"
#include "cubezeta/zeta.hpp"

// Verification sweeps pitting the closed forms against the brute-force
// oracles; shared by the CLI `verify` subcommand and the test suites.

namespace cubezeta {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // counts, mismatching values, or findings
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> cases;
    bool informational = false;  // findings never fail the suite
    bool all_ok() const {
        if (informational) return true;
        for (const auto& c : cases)
            if (!c.ok) return false;
        return true;
    }
};

// orbit-count formula vs explicit decomposition, plus the q=2 gcd and the
// equal-sides specializations
SuiteReport verify_orbits(u64 qmax = 3, u64 dmax = 20);

// exact expansion of the full character product vs the divisor-product of
// Psi factors
SuiteReport verify_cor13();

// determinant-route zeta vs closed-form zeta on the small-lattice sweep
SuiteReport verify_bass();

// trace-, series- and DFS-based geodesic counts against each other
SuiteReport verify_geodesics();

// spectra: closed forms vs numeric eigendecompositions, cochain-complex
// identities, kernel dimensions, and the characteristic-polynomial identity
SuiteReport verify_spectra();

// the complete linear-irreducible-core scan over d1 <= d2 <= dmax
SuiteReport verify_linear_table(u64 dmax = 50);

// reporting-only sweep over the paper's open irreducibility observations
SuiteReport verify_observations(u64 mmax = 30);

SuiteReport run_suite(const std::string& name);

}  // namespace cubezeta
