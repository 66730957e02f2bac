#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "sympath/coefficient_path.hpp"
#include "sympath/symplectic.hpp"

namespace sympath {

/// Sampled path gamma: [0, tau] -> Sp(2n) with gamma(0) = I. Carries the
/// generating coefficient path when it has one, and an evaluator that is
/// exact at the stored samples and locally integrated (or formula-based for
/// iterated paths) in between.
class SymplecticPath {
public:
    struct Sample {
        double t;
        Mat gamma;
    };

    SymplecticPath(int n, double tau, std::vector<Sample> samples,
                   std::shared_ptr<const CoefficientPath> source,
                   std::function<Mat(double)> evaluator = {});

    int n() const { return n_; }
    double tau() const { return tau_; }
    const std::vector<Sample>& samples() const { return samples_; }
    const std::shared_ptr<const CoefficientPath>& source() const { return source_; }

    Mat endpoint() const { return samples_.back().gamma; }

    /// gamma(t) for any t in [0, tau].
    Mat eval(double t) const;

    /// Largest symplectic residual over the stored samples.
    double max_symplectic_residual() const;

private:
    int n_;
    double tau_;
    std::vector<Sample> samples_;
    std::shared_ptr<const CoefficientPath> source_;
    std::function<Mat(double)> evaluator_;

    Mat integrate_from_sample(double t) const;
};

/// Fundamental solution of gammadot = J B(t) gamma, gamma(0) = I, by the
/// classical 4-stage one-step scheme with fixed step tau/steps and periodic
/// symplectic re-projection. Throws StepCountTooSmall for steps < 16 and
/// NonSymmetricCoefficient when B fails its symmetry invariant.
SymplecticPath matrizant(const CoefficientPath& b, int steps = 4096);

/// Single re-projection sweep M <- (M + J^{-1} M^{-T} J) / 2 applied twice.
Mat symplectic_project(const Mat& m);

} // namespace sympath
