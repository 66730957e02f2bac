#include "sympath/symplectic.hpp"

#include <cmath>

namespace sympath {

Mat standard_J(int n) {
    Mat j = Mat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -Mat::Identity(n, n);
    j.bottomLeftCorner(n, n) = Mat::Identity(n, n);
    return j;
}

Mat standard_N(int n) {
    Mat nn = Mat::Identity(2 * n, 2 * n);
    nn.topLeftCorner(n, n) = -Mat::Identity(n, n);
    return nn;
}

double check_symplectic(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw DimensionMismatch("check_symplectic: matrix must be square of even dimension");
    const int n = int(m.rows()) / 2;
    const Mat j = standard_J(n);
    return inf_norm(Mat(m.transpose() * j * m - j));
}

SymplecticMatrix::SymplecticMatrix(Mat m, double symplectic_tol) : m_(std::move(m)) {
    const double res = check_symplectic(m_);
    if (res > symplectic_tol)
        throw NotSymplectic("SymplecticMatrix: residual " + std::to_string(res) +
                            " exceeds tolerance");
    n_ = int(m_.rows()) / 2;
    if (std::abs(m_.determinant() - 1.0) > 1e-6)
        throw NotSymplectic("SymplecticMatrix: determinant is not 1");
}

Mat random_symplectic(Rng& rng, int n, double scale, int factors) {
    Mat m = Mat::Identity(2 * n, 2 * n);
    for (int f = 0; f < factors; ++f) {
        Mat g = Mat::Identity(2 * n, 2 * n);
        switch (rng.below(3)) {
        case 0: // upper shear [[I, S], [0, I]]
            g.topRightCorner(n, n) = random_symmetric(rng, n, scale);
            break;
        case 1: // lower shear [[I, 0], [S, I]]
            g.bottomLeftCorner(n, n) = random_symmetric(rng, n, scale);
            break;
        default: { // [[P, 0], [0, P^{-T}]] with P = I + small perturbation
            Mat p = Mat::Identity(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) p(i, j) += 0.5 * scale * rng.uniform(-1, 1);
            if (std::abs(p.determinant()) < 0.1) p += Mat::Identity(n, n);
            g.topLeftCorner(n, n) = p;
            g.bottomRightCorner(n, n) = p.inverse().transpose();
            break;
        }
        }
        m = m * g;
    }
    return m;
}

} // namespace sympath
