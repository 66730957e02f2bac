#pragma once

#include "sympath/boundary.hpp"
#include "sympath/index_report.hpp"
#include "sympath/symplectic_path.hpp"

namespace sympath {

struct MaslovOptions {
    double rank_tol = tol::rank;
    double zero_tol = tol::zero;
    double refine_tol = 1e-12; // crossing time accuracy, relative to tau
};

/// Maslov-type index of gamma for the given boundary condition, by the
/// crossing-form algorithm. Crossings in [0, tau) contribute m^+ of the
/// crossing form, a crossing at tau contributes -m^-; the L0/L1/periodic
/// kinds then subtract n. Throws DegenerateCrossing when a crossing form is
/// singular on its kernel and MissingCoefficientPath when gamma has no
/// source coefficients but a crossing form is needed.
IndexReport maslov(const SymplecticPath& gamma, const BoundarySpec& w,
                   const MaslovOptions& opts = {});

/// Index of the translated path gamma(t) P against a boundary frame; the
/// translated path need not start at the identity. Same coefficient path as
/// gamma (the translate solves the same linear system).
IndexReport maslov_translated(const SymplecticPath& gamma, const Mat& p,
                              const BoundarySpec& w, const MaslovOptions& opts = {});

/// Kernel dimension of the endpoint block selected by the boundary kind.
int nullity_of(const Mat& m, const BoundarySpec& w, double rank_tol = tol::rank);

/// All block nullities of a symplectic matrix.
EndpointNullities nullities(const Mat& m, double rank_tol = tol::rank);

/// Complex kernel dimension of (M - e^{i theta} I), via the real embedding.
int nullity_theta(const Mat& m, double theta, double rank_tol = tol::rank);

/// The five named indices plus all endpoint nullities, computed in one pass
/// over the shared sample cache of gamma. Requires a source coefficient path.
struct IndexSuite {
    IndexReport l0, l1, l0xl1, l1xl0, periodic;
    EndpointNullities end_nullities;
};

IndexSuite index_suite(const SymplecticPath& gamma, const MaslovOptions& opts = {});

} // namespace sympath
