#pragma once

#include "sympath/symplectic_path.hpp"

namespace sympath {

/// Iteration of two paths: gamma1 on [0, tau1] followed by
/// gamma2(t - tau1) gamma1(tau1). Coefficient paths are stitched when both
/// are present.
SymplecticPath concat(const SymplecticPath& gamma1, const SymplecticPath& gamma2);

/// k-th brake iteration of gamma on [0, S]: with P = N gamma(S)^{-1} N gamma(S),
/// the iterate follows gamma(t - 2jS) P^j on even branches and
/// N gamma((2j+2)S - t) N P^{j+1} on odd ones. The iterate carries the
/// brake-extended, periodically continued coefficient path.
SymplecticPath brake_iterate(const SymplecticPath& gamma, int k);

/// Half-period time shift gamma~(t) = N gamma(S - t) gamma(S)^{-1} N.
SymplecticPath tilde_shift(const SymplecticPath& gamma);

} // namespace sympath
