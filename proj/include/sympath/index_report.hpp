#pragma once

#include <string>
#include <vector>

#include "sympath/numerics.hpp"

namespace sympath {

struct Crossing {
    double t = 0;
    int dim = 0;            // kernel dimension at the crossing
    SignatureTriple sig;    // crossing-form signature on the kernel
};

/// Result of a Maslov-type index computation. `index` already carries the
/// -n normalization for the L0/L1/periodic boundary kinds; `raw_maslov` is
/// the unnormalized crossing sum Mas{Graph(gamma), W}.
struct IndexReport {
    int index = 0;
    int raw_maslov = 0;
    int nullity_at_end = 0;
    std::vector<Crossing> crossings;
    std::string convention_tag = "half-open-mplus";
};

/// Kernel dimensions of the boundary-specific endpoint blocks of a
/// symplectic matrix.
struct EndpointNullities {
    int l0 = 0;       // dim ker B-block
    int l1 = 0;       // dim ker C-block
    int l0xl1 = 0;    // dim ker D-block
    int l1xl0 = 0;    // dim ker A-block
    int periodic = 0; // dim ker (M - I)
};

} // namespace sympath
