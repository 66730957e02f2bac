#include "sympath/fourier.hpp"

#include <cmath>

#include "sympath/symplectic.hpp"

namespace sympath {

FourierVector::FourierVector(int n, double period, int modes) : n_(n), period_(period) {
    if (n <= 0 || period <= 0 || modes < 0)
        throw DimensionMismatch("FourierVector: bad dimensions");
    sin_coeffs_.assign(std::size_t(modes), Vec::Zero(2 * n));
    cos_coeffs_.assign(std::size_t(modes), Vec::Zero(2 * n));
}

Vec FourierVector::operator()(double t) const {
    Vec out = Vec::Zero(2 * n_);
    for (int j = 1; j <= modes(); ++j) {
        const double w = 2 * M_PI * j / period_;
        out += std::sin(w * t) * sin_coeff(j) + std::cos(w * t) * cos_coeff(j);
    }
    return out;
}

double FourierVector::brake_residual(int samples) const {
    const Mat nn = standard_N(n_);
    double r = 0;
    for (int i = 0; i <= samples; ++i) {
        const double t = period_ * (double(i) / samples - 0.5);
        r = std::max(r, Vec((*this)(-t) - nn * (*this)(t)).cwiseAbs().maxCoeff());
    }
    return r;
}

FourierVector FourierVector::derivative() const {
    FourierVector d(n_, period_, modes());
    for (int j = 1; j <= modes(); ++j) {
        const double w = 2 * M_PI * j / period_;
        d.sin_coeff(j) = -w * cos_coeff(j);
        d.cos_coeff(j) = w * sin_coeff(j);
    }
    return d;
}

FourierVector FourierVector::eta(int n, double period, int modes, int j, int k) {
    if (j < 1 || j > modes || k < 1 || k > n)
        throw DimensionMismatch("FourierVector::eta: mode out of range");
    FourierVector u(n, period, modes);
    u.sin_coeff(j)(k - 1) = 1.0;
    u.cos_coeff(j)(n + k - 1) = 1.0;
    return u;
}

FourierVector pi_operator(const FourierVector& u) {
    FourierVector p(u.n(), u.period(), u.modes());
    for (int j = 1; j <= u.modes(); ++j) {
        const double w = 2 * M_PI * j / u.period();
        p.sin_coeff(j) = u.cos_coeff(j) / w;
        p.cos_coeff(j) = -u.sin_coeff(j) / w;
    }
    return p;
}

double l2_inner(const FourierVector& u, const FourierVector& v) {
    if (u.n() != v.n() || u.period() != v.period())
        throw DimensionMismatch("l2_inner: mismatched Fourier vectors");
    const int m = std::min(u.modes(), v.modes());
    double sum = 0;
    for (int j = 1; j <= m; ++j)
        sum += u.sin_coeff(j).dot(v.sin_coeff(j)) + u.cos_coeff(j).dot(v.cos_coeff(j));
    return 0.5 * u.period() * sum;
}

FourierVector apply_j(const FourierVector& u) {
    const Mat j2n = standard_J(u.n());
    FourierVector out(u.n(), u.period(), u.modes());
    for (int j = 1; j <= u.modes(); ++j) {
        out.sin_coeff(j) = j2n * u.sin_coeff(j);
        out.cos_coeff(j) = j2n * u.cos_coeff(j);
    }
    return out;
}

} // namespace sympath
