#pragma once

#include "sympath/lagrangian.hpp"

namespace sympath {

/// Triple index of three Lagrangians of the same space:
/// i(alpha, beta, delta) = m^+(Q(alpha, beta; delta))
///                        + dim(alpha ^ delta) - dim(alpha ^ beta ^ delta).
int triple_index(const LagrangianFrame& alpha, const LagrangianFrame& beta,
                 const LagrangianFrame& delta, double rank_tol = tol::rank);

/// Hormander index s(l1, l2; m1, m2) = i(l1, m1, m2) - i(l2, m1, m2).
int hormander(const LagrangianFrame& lambda1, const LagrangianFrame& lambda2,
              const LagrangianFrame& mu1, const LagrangianFrame& mu2,
              double rank_tol = tol::rank);

} // namespace sympath
