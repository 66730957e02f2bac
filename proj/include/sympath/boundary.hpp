#pragma once

#include <optional>
#include <string>

#include "sympath/lagrangian.hpp"

namespace sympath {

enum class BoundaryKind { L0, L1, L0xL1, L1xL0, Periodic, Theta, General };

/// Boundary condition for a Maslov-type index: one of the named Lagrangians
/// of the doubled space, the e^{i theta} graph, or an arbitrary frame.
struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::L0;
    double theta_value = 0.0;                 // Theta only, in (0, 2 pi)
    std::optional<LagrangianFrame> frame;     // General only

    static BoundarySpec l0() { return of_kind(BoundaryKind::L0); }
    static BoundarySpec l1() { return of_kind(BoundaryKind::L1); }
    static BoundarySpec l0xl1() { return of_kind(BoundaryKind::L0xL1); }
    static BoundarySpec l1xl0() { return of_kind(BoundaryKind::L1xL0); }
    static BoundarySpec periodic() { return of_kind(BoundaryKind::Periodic); }
    static BoundarySpec of_kind(BoundaryKind k) {
        BoundarySpec spec;
        spec.kind = k;
        return spec;
    }
    static BoundarySpec theta(double th);
    static BoundarySpec general(LagrangianFrame w);

    /// Materialize the boundary Lagrangian in the doubled space over C^{2n}.
    LagrangianFrame frame_for(int n) const;

    /// True for the kinds normalized by subtracting n (Definition-level
    /// convention for L0, L1 and the periodic boundary).
    bool subtracts_n() const {
        return kind == BoundaryKind::L0 || kind == BoundaryKind::L1 ||
               kind == BoundaryKind::Periodic;
    }

    std::string name() const;
};

} // namespace sympath
