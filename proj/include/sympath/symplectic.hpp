#pragma once

#include "sympath/numerics.hpp"

namespace sympath {

/// Standard symplectic structure J = [[0, -I], [I, 0]] on R^{2n}.
Mat standard_J(int n);

/// Brake reflection N = diag(-I_n, I_n).
Mat standard_N(int n);

/// || M^T J M - J ||_inf for a square even-dimensional matrix.
double check_symplectic(const Mat& m);

/// Real 2n x 2n matrix with M^T J M = J, with block access. Validated on
/// construction against symplectic_tol (and det ~ 1 as a sanity assertion).
class SymplecticMatrix {
public:
    SymplecticMatrix(Mat m, double symplectic_tol = tol::symplectic);

    int n() const { return n_; }
    const Mat& matrix() const { return m_; }

    Mat block_a() const { return m_.topLeftCorner(n_, n_); }
    Mat block_b() const { return m_.topRightCorner(n_, n_); }
    Mat block_c() const { return m_.bottomLeftCorner(n_, n_); }
    Mat block_d() const { return m_.bottomRightCorner(n_, n_); }

private:
    int n_;
    Mat m_;
};

/// Exactly symplectic pseudorandom matrix: a short product of shear and
/// block-diagonal factors, each symplectic to machine precision.
Mat random_symplectic(Rng& rng, int n, double scale = 1.0, int factors = 4);

} // namespace sympath
