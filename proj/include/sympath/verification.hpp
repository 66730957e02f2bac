#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sympath/iteration.hpp"
#include "sympath/maslov.hpp"

namespace sympath {

/// One machine-checked statement: an equality or an inequality (lhs >= rhs)
/// between independently computed integers.
struct Claim {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    bool is_inequality = false;
    bool satisfied = false;
};

struct VerificationReport {
    std::vector<Claim> claims;
    std::uint64_t seed = 0;
    std::string path_descriptor;
    bool retried = false; // the epsilon-perturbation retry was taken

    bool all_satisfied() const {
        for (const Claim& c : claims)
            if (!c.satisfied) return false;
        return true;
    }
};

/// Bott-type iteration formulas for the brake iteration: the indices of
/// gamma^k computed by the crossing algorithm against the combination of
/// indices of gamma and theta-indices of gamma^2. Exact integer claims.
VerificationReport verify_bott(const SymplecticPath& gamma, int k,
                               const MaslovOptions& opts = {});

/// The endpoint index identities relating the L0/L1/L0xL1/L1xL0/periodic
/// indices, the explicit block forms of the endpoint matrix, and the
/// time-shift difference formulas. Exact integer claims.
VerificationReport verify_identities(const SymplecticPath& gamma,
                                     const MaslovOptions& opts = {});

/// Iteration inequalities for k <= kmax, plus the block-positivity lower
/// bounds when the coefficient blocks qualify.
VerificationReport verify_inequalities(const SymplecticPath& gamma, int kmax,
                                       const MaslovOptions& opts = {});

/// Runs all three verifiers on a seeded random path; claims are pooled.
VerificationReport verify_seeded(std::uint64_t seed, int n, int kmax, int steps = 2048,
                                 const MaslovOptions& opts = {});

} // namespace sympath
