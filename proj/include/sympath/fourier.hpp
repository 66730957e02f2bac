#pragma once

#include <vector>

#include "sympath/numerics.hpp"

namespace sympath {

/// Zero-mean trigonometric polynomial u(t) = sum_j [ sin(w_j t) p_j
/// + cos(w_j t) q_j ] with w_j = 2 pi j / T, p_j, q_j in R^{2n}. The
/// brake-symmetric basis keeps p_j on the first n components (odd part) and
/// q_j on the last n components (even part), so u(-t) = N u(t) by
/// construction.
class FourierVector {
public:
    FourierVector(int n, double period, int modes);

    int n() const { return n_; }
    double period() const { return period_; }
    int modes() const { return int(sin_coeffs_.size()); }

    Vec& sin_coeff(int j) { return sin_coeffs_[std::size_t(j - 1)]; }
    Vec& cos_coeff(int j) { return cos_coeffs_[std::size_t(j - 1)]; }
    const Vec& sin_coeff(int j) const { return sin_coeffs_[std::size_t(j - 1)]; }
    const Vec& cos_coeff(int j) const { return cos_coeffs_[std::size_t(j - 1)]; }

    Vec operator()(double t) const;

    /// || u(-t) - N u(t) ||_inf over a sample grid.
    double brake_residual(int samples = 64) const;

    FourierVector derivative() const;

    /// Brake-symmetric mode eta_{jk} = sin(w_j t) e_k + cos(w_j t) e_{k+n},
    /// 1 <= k <= n.
    static FourierVector eta(int n, double period, int modes, int j, int k);

private:
    int n_;
    double period_;
    std::vector<Vec> sin_coeffs_, cos_coeffs_;
};

/// Mode-wise primitive with zero mean: d/dt (pi u) = u and the integral of
/// pi u over a period vanishes.
FourierVector pi_operator(const FourierVector& u);

/// L^2 inner product over one period.
double l2_inner(const FourierVector& u, const FourierVector& v);

/// J applied pointwise (rotates each coefficient vector).
FourierVector apply_j(const FourierVector& u);

} // namespace sympath
