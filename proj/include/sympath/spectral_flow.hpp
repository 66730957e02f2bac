#pragma once

#include <vector>

#include "sympath/numerics.hpp"

namespace sympath {

/// Eigenvalue tracks of A - s B on s in [0, 1] and the relative Morse
/// index: the signed count of eigenvalues leaving zero downward. For
/// semi-positive B every track is monotone non-increasing, so the count
/// equals m^-(A - B) - m^-(A) in finite dimension.
struct RelativeMorse {
    int index = 0;
    std::vector<double> grid;           // s values
    std::vector<std::vector<double>> tracks; // tracks[l][i] = lambda_l(s_i)
};

/// Throws DegenerateEndpoint when A or A - B is singular at the zero
/// tolerance. The grid doubles (up to twice) when eigenvalue matching
/// between steps is ambiguous against the Lipschitz radius ||dA||.
RelativeMorse relative_morse(const Mat& a, const Mat& b, int grid = 64,
                             double zero_tol = tol::zero);

} // namespace sympath
