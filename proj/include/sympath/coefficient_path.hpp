#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "sympath/numerics.hpp"

namespace sympath {

/// Continuous symmetric-matrix-valued coefficient B(t) of a linear
/// Hamiltonian system xdot = J B(t) x on [0, tau]. Evaluation outside the
/// interval follows the flags: a periodic path wraps, a brake-symmetric one
/// reflects with B(-t) = N B(t) N.
class CoefficientPath {
public:
    using Evaluator = std::function<Mat(double)>;

    enum class Kind { Constant, Trig, Orbit, Derived };

    CoefficientPath(int n, double tau, Evaluator eval, Kind kind,
                    bool periodic = false, bool brake_symmetric = false);

    int n() const { return n_; }
    double tau() const { return tau_; }
    Kind kind() const { return kind_; }
    bool periodic() const { return periodic_; }
    bool brake_symmetric() const { return brake_symmetric_; }

    /// B(t); reduces t into [0, tau] using the flags.
    Mat operator()(double t) const;

    Mat b11(double t) const { return (*this)(t).topLeftCorner(n_, n_); }
    Mat b22(double t) const { return (*this)(t).bottomRightCorner(n_, n_); }

    /// max over a sample grid of ||B(t)||_inf (cached on first use).
    double sup_norm(int samples = 512) const;

    /// Largest symmetry residual max_t ||B - B^T||_inf over a sample grid.
    double symmetry_residual(int samples = 64) const;

    static CoefficientPath constant(const Mat& b, double tau);

    /// Trigonometric polynomial with symmetric matrix coefficients:
    /// B(t) = c0 + sum_j [ cos_j cos(2 pi j t / tau) + sin_j sin(2 pi j t / tau) ].
    static CoefficientPath trig(Mat c0, std::vector<Mat> cos_coeffs, std::vector<Mat> sin_coeffs,
                                double tau);

    /// Shifted path t -> B(t + t0) on the same duration (uses the flags of
    /// the base to evaluate outside [0, tau]).
    static CoefficientPath shifted(const CoefficientPath& base, double t0);

    /// Path perturbed by epsilon * I (used by the verification retry policy).
    static CoefficientPath perturbed(const CoefficientPath& base, double epsilon);

    const Mat* trig_c0() const { return trig_c0_ ? &*trig_c0_ : nullptr; }
    const std::vector<Mat>& trig_cos() const { return trig_cos_; }
    const std::vector<Mat>& trig_sin() const { return trig_sin_; }

private:
    int n_;
    double tau_;
    Evaluator eval_;
    Kind kind_;
    bool periodic_;
    bool brake_symmetric_;
    mutable double sup_norm_cache_ = -1.0;
    // retained only for serialization of trig paths
    std::optional<Mat> trig_c0_;
    std::vector<Mat> trig_cos_, trig_sin_;

    friend CoefficientPath brake_extend(const CoefficientPath&);
};

/// Extension of B on [0, S] to [0, 2S] with B(t + S) = N B(S - t) N, marked
/// brake-symmetric and 2S-periodic.
CoefficientPath brake_extend(const CoefficientPath& b);

/// Deterministic pseudorandom trigonometric coefficient path with sup-norm
/// at most `amplitude`. Equal seeds give bit-identical coefficients.
CoefficientPath sample_coefficient_path(std::uint64_t seed, int n, int degree, double amplitude,
                                        double tau = 1.0);

} // namespace sympath
