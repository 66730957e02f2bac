#include "sympath/boundary.hpp"

#include <cmath>

namespace sympath {

BoundarySpec BoundarySpec::theta(double th) {
    double r = std::fmod(th, 2 * M_PI);
    if (r < 0) r += 2 * M_PI;
    if (r == 0.0)
        throw DimensionMismatch("BoundarySpec: theta must avoid 0 mod 2 pi");
    BoundarySpec spec;
    spec.kind = BoundaryKind::Theta;
    spec.theta_value = r;
    return spec;
}

BoundarySpec BoundarySpec::general(LagrangianFrame w) {
    if (w.tag() != SpaceTag::Doubled)
        throw AmbientMismatch("BoundarySpec: general boundary must live in the doubled space");
    BoundarySpec spec;
    spec.kind = BoundaryKind::General;
    spec.frame = std::move(w);
    return spec;
}

LagrangianFrame BoundarySpec::frame_for(int n) const {
    switch (kind) {
    case BoundaryKind::L0: return LagrangianFrame::alpha_tilde(0, n);
    case BoundaryKind::L1: return LagrangianFrame::alpha_tilde(1, n);
    case BoundaryKind::L0xL1:
        return LagrangianFrame::product(LagrangianFrame::alpha0(n), LagrangianFrame::alpha1(n));
    case BoundaryKind::L1xL0:
        return LagrangianFrame::product(LagrangianFrame::alpha1(n), LagrangianFrame::alpha0(n));
    case BoundaryKind::Periodic: return LagrangianFrame::graph(Mat::Identity(2 * n, 2 * n));
    case BoundaryKind::Theta: return LagrangianFrame::graph_theta(theta_value, n);
    case BoundaryKind::General: return *frame;
    }
    throw DimensionMismatch("BoundarySpec: unknown kind");
}

std::string BoundarySpec::name() const {
    switch (kind) {
    case BoundaryKind::L0: return "L0";
    case BoundaryKind::L1: return "L1";
    case BoundaryKind::L0xL1: return "L0xL1";
    case BoundaryKind::L1xL0: return "L1xL0";
    case BoundaryKind::Periodic: return "periodic";
    case BoundaryKind::Theta: return "theta(" + std::to_string(theta_value) + ")";
    case BoundaryKind::General: return "general";
    }
    return "?";
}

} // namespace sympath
