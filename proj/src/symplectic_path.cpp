#include "sympath/symplectic_path.hpp"

#include <algorithm>
#include <cmath>

namespace sympath {

namespace {

/// One RK4 step of gammadot = J B(t) gamma.
Mat rk4_step(const CoefficientPath& b, const Mat& j, double t, double h, const Mat& g) {
    const Mat k1 = j * b(t) * g;
    const Mat k2 = j * b(t + h / 2) * (g + (h / 2) * k1);
    const Mat k3 = j * b(t + h / 2) * (g + (h / 2) * k2);
    const Mat k4 = j * b(t + h) * (g + h * k3);
    return g + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
}

} // namespace

Mat symplectic_project(const Mat& m) {
    const int n = int(m.rows()) / 2;
    const Mat j = standard_J(n);
    Mat out = m;
    for (int i = 0; i < 2; ++i) out = 0.5 * (out - j * out.inverse().transpose() * j);
    return out;
}

SymplecticPath::SymplecticPath(int n, double tau, std::vector<Sample> samples,
                               std::shared_ptr<const CoefficientPath> source,
                               std::function<Mat(double)> evaluator)
    : n_(n), tau_(tau), samples_(std::move(samples)), source_(std::move(source)),
      evaluator_(std::move(evaluator)) {
    if (samples_.empty() || samples_.front().t != 0.0)
        throw DimensionMismatch("SymplecticPath: first sample must sit at t = 0");
    if (inf_norm(Mat(samples_.front().gamma - Mat::Identity(2 * n_, 2 * n_))) > 1e-12)
        throw NotSymplectic("SymplecticPath: gamma(0) must be the identity");
    samples_.front().gamma = Mat::Identity(2 * n_, 2 * n_);
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (samples_[i].t <= samples_[i - 1].t)
            throw DimensionMismatch("SymplecticPath: sample times must increase");
    if (std::abs(samples_.back().t - tau_) > 1e-12 * std::max(1.0, tau_))
        throw DimensionMismatch("SymplecticPath: last sample must sit at t = tau");
    for (const Sample& s : samples_)
        if (check_symplectic(s.gamma) > 1e-8)
            throw NotSymplectic("SymplecticPath: sample fails the symplectic check");
}

double SymplecticPath::max_symplectic_residual() const {
    double r = 0;
    for (const Sample& s : samples_) r = std::max(r, check_symplectic(s.gamma));
    return r;
}

Mat SymplecticPath::integrate_from_sample(double t) const {
    // nearest stored sample at or before t, then a few local RK4 steps
    auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                               [](double v, const Sample& s) { return v < s.t; });
    const Sample& base = *(it == samples_.begin() ? it : std::prev(it));
    double dt = t - base.t;
    if (dt == 0) return base.gamma;
    const Mat j = standard_J(n_);
    const int sub = 4;
    const double h = dt / sub;
    Mat g = base.gamma;
    for (int i = 0; i < sub; ++i) g = rk4_step(*source_, j, base.t + i * h, h, g);
    return g;
}

Mat SymplecticPath::eval(double t) const {
    t = std::clamp(t, 0.0, tau_);
    // exact at stored samples
    auto it = std::lower_bound(samples_.begin(), samples_.end(), t,
                               [](const Sample& s, double v) { return s.t < v; });
    if (it != samples_.end() && std::abs(it->t - t) <= 1e-14 * std::max(1.0, tau_))
        return it->gamma;
    if (evaluator_) return evaluator_(t);
    if (source_) return integrate_from_sample(t);
    // last resort for sample-only paths: nearest sample
    if (it == samples_.end()) return samples_.back().gamma;
    if (it == samples_.begin()) return it->gamma;
    return (std::abs(it->t - t) < std::abs(std::prev(it)->t - t) ? it : std::prev(it))->gamma;
}

SymplecticPath matrizant(const CoefficientPath& b, int steps) {
    if (steps < 16) throw StepCountTooSmall("matrizant: need at least 16 steps");
    if (b.symmetry_residual() > 1e-12)
        throw NonSymmetricCoefficient("matrizant: coefficient path is not symmetric");

    const int n = b.n();
    const double tau = b.tau();
    const Mat j = standard_J(n);
    const double h = tau / steps;

    // decimate storage above 8192 steps, always keeping both endpoints
    const int keep_every = steps <= 8192 ? 1 : (steps + 8191) / 8192;

    std::vector<SymplecticPath::Sample> samples;
    samples.reserve(steps / keep_every + 2);
    Mat g = Mat::Identity(2 * n, 2 * n);
    samples.push_back({0.0, g});
    for (int i = 0; i < steps; ++i) {
        g = rk4_step(b, j, i * h, h, g);
        if ((i + 1) % 64 == 0) g = symplectic_project(g);
        if ((i + 1) % keep_every == 0 || i + 1 == steps) {
            const double t = (i + 1 == steps) ? tau : (i + 1) * h;
            if (samples.back().t < t) samples.push_back({t, g});
        }
    }
    samples.back().gamma = symplectic_project(samples.back().gamma);
    if (check_symplectic(samples.back().gamma) > 1e-8)
        throw NotSymplectic("matrizant: final symplectic residual too large");

    return SymplecticPath(n, tau, std::move(samples),
                          std::make_shared<CoefficientPath>(b));
}

} // namespace sympath
