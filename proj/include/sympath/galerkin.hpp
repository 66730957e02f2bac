#pragma once

#include <vector>

#include "sympath/coefficient_path.hpp"
#include "sympath/maslov.hpp"

namespace sympath {

/// Matrix of the dual quadratic form on the truncated brake-symmetric
/// zero-mean basis, with its inertia.
struct GalerkinForm {
    Mat matrix;
    int modes = 0;
    int quad_order = 0;
    SignatureTriple sig;
};

/// Assembles q_{T/2}(u, u) = int ( (-J pi u + J Lambda J pi^2 u, u)
/// + ((B(t) + Lambda)^{-1} u, u) ) / 2 dt over [-T/2, T/2] on the truncated
/// basis {sin(w_j t) e_k, cos(w_j t) e_{k+n}}, j = 1..modes. The pi terms
/// are analytic per mode; the (B + Lambda)^{-1} term uses composite Gauss
/// quadrature. Throws NotPositiveDefinite when B(t) + Lambda fails at a
/// quadrature node.
GalerkinForm dual_form(const CoefficientPath& b, double lambda, double period, int modes,
                       int quad_panels = 256);

/// Interior instants (s, nu_s) on (0, S) where the flow maps L0 into a
/// subspace meeting L0, with the total sum of nullities. Uses the L0
/// crossing scan of the index engine. Requires B22 > 0 on [0, S].
struct ConjugatePoints {
    std::vector<std::pair<double, int>> points;
    int total = 0;
};

ConjugatePoints conjugate_points(const CoefficientPath& b, double s, int steps = 4096,
                                 const MaslovOptions& opts = {});

/// Smallest convexifying shift: lambda = max_t lambda_max(C^T D^{-1} C - A)
/// + 1 over samples of B(t) = [[A, C^T], [C, D]]. Throws DBlockNotPositive
/// when the D block fails to be positive definite at a sample; the returned
/// shift is verified to make B + Lambda positive definite at 1000 samples.
double convexifying_lambda(const CoefficientPath& b, int samples = 1000);

/// Lambda = diag(lambda I_n, 0) as used by the dual form.
Mat lambda_matrix(int n, double lambda);

} // namespace sympath
