#include "sympath/coefficient_path.hpp"

#include <algorithm>
#include <cmath>

#include "sympath/symplectic.hpp"

namespace sympath {

CoefficientPath::CoefficientPath(int n, double tau, Evaluator eval, Kind kind, bool periodic,
                                 bool brake_symmetric)
    : n_(n), tau_(tau), eval_(std::move(eval)), kind_(kind), periodic_(periodic),
      brake_symmetric_(brake_symmetric) {
    if (n_ <= 0 || tau_ <= 0) throw DimensionMismatch("CoefficientPath: need n > 0, tau > 0");
}

Mat CoefficientPath::operator()(double t) const {
    if (t >= 0 && t <= tau_) return eval_(t);
    if (periodic_) {
        double r = std::fmod(t, tau_);
        if (r < 0) r += tau_;
        return eval_(r);
    }
    if (brake_symmetric_ && t < 0 && -t <= tau_) {
        const Mat nn = standard_N(n_);
        return nn * eval_(-t) * nn;
    }
    // clamped extension: constant beyond the ends
    return eval_(std::clamp(t, 0.0, tau_));
}

double CoefficientPath::sup_norm(int samples) const {
    if (sup_norm_cache_ >= 0) return sup_norm_cache_;
    double m = 0;
    for (int i = 0; i <= samples; ++i) m = std::max(m, inf_norm(eval_(tau_ * i / samples)));
    sup_norm_cache_ = m;
    return m;
}

double CoefficientPath::symmetry_residual(int samples) const {
    double r = 0;
    for (int i = 0; i <= samples; ++i) {
        const Mat b = eval_(tau_ * i / samples);
        r = std::max(r, inf_norm(Mat(b - b.transpose())));
    }
    return r;
}

CoefficientPath CoefficientPath::constant(const Mat& b, double tau) {
    if (b.rows() != b.cols() || b.rows() % 2 != 0)
        throw DimensionMismatch("constant coefficient must be square of even dimension");
    CoefficientPath p(int(b.rows()) / 2, tau, [b](double) { return b; }, Kind::Constant,
                      /*periodic=*/true, /*brake=*/false);
    // a constant B trivially satisfies N B(-t) N = B(t) iff N B N = B; record it
    const Mat nn = standard_N(int(b.rows()) / 2);
    if (inf_norm(Mat(nn * b * nn - b)) <= 1e-12) {
        return CoefficientPath(int(b.rows()) / 2, tau, [b](double) { return b; }, Kind::Constant,
                               true, true);
    }
    return p;
}

CoefficientPath CoefficientPath::trig(Mat c0, std::vector<Mat> cos_coeffs,
                                      std::vector<Mat> sin_coeffs, double tau) {
    const int dim = int(c0.rows());
    const double omega0 = 2.0 * M_PI / tau;
    auto cc = std::make_shared<std::vector<Mat>>(cos_coeffs);
    auto sc = std::make_shared<std::vector<Mat>>(sin_coeffs);
    auto c0p = std::make_shared<Mat>(c0);
    CoefficientPath p(
        dim / 2, tau,
        [c0p, cc, sc, omega0](double t) {
            Mat b = *c0p;
            for (std::size_t j = 0; j < cc->size(); ++j)
                b += (*cc)[j] * std::cos(omega0 * double(j + 1) * t);
            for (std::size_t j = 0; j < sc->size(); ++j)
                b += (*sc)[j] * std::sin(omega0 * double(j + 1) * t);
            return b;
        },
        Kind::Trig, /*periodic=*/true, /*brake=*/false);
    p.trig_c0_ = std::move(c0);
    p.trig_cos_ = std::move(cos_coeffs);
    p.trig_sin_ = std::move(sin_coeffs);
    return p;
}

CoefficientPath CoefficientPath::shifted(const CoefficientPath& base, double t0) {
    auto b = std::make_shared<CoefficientPath>(base);
    return CoefficientPath(base.n(), base.tau(), [b, t0](double t) { return (*b)(t + t0); },
                           Kind::Derived, base.periodic(), false);
}

CoefficientPath CoefficientPath::perturbed(const CoefficientPath& base, double epsilon) {
    auto b = std::make_shared<CoefficientPath>(base);
    const Mat shift = epsilon * Mat::Identity(2 * base.n(), 2 * base.n());
    return CoefficientPath(base.n(), base.tau(), [b, shift](double t) { return Mat((*b)(t) + shift); },
                           Kind::Derived, base.periodic(), base.brake_symmetric());
}

CoefficientPath brake_extend(const CoefficientPath& b) {
    auto base = std::make_shared<CoefficientPath>(b);
    const double s = b.tau();
    const Mat nn = standard_N(b.n());
    auto eval = [base, s, nn](double t) -> Mat {
        if (t <= s) return (*base)(t);
        return Mat(nn * (*base)(2 * s - t) * nn);
    };
    return CoefficientPath(b.n(), 2 * s, eval, CoefficientPath::Kind::Derived,
                           /*periodic=*/true, /*brake=*/true);
}

CoefficientPath sample_coefficient_path(std::uint64_t seed, int n, int degree, double amplitude,
                                        double tau) {
    if (degree < 0) throw DimensionMismatch("sample_coefficient_path: degree must be >= 0");
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL + std::uint64_t(n) * 1031 +
            std::uint64_t(degree) * 7);
    const int dim = 2 * n;
    Mat c0 = random_symmetric(rng, dim);
    std::vector<Mat> cc, sc;
    for (int j = 1; j <= degree; ++j) {
        cc.push_back(random_symmetric(rng, dim));
        sc.push_back(random_symmetric(rng, dim));
    }
    double bound = inf_norm(c0);
    for (const Mat& m : cc) bound += inf_norm(m);
    for (const Mat& m : sc) bound += inf_norm(m);
    const double scale = (bound > 0 ? amplitude / bound : 0.0);
    c0 *= scale;
    for (Mat& m : cc) m *= scale;
    for (Mat& m : sc) m *= scale;
    return CoefficientPath::trig(std::move(c0), std::move(cc), std::move(sc), tau);
}

} // namespace sympath
