#pragma once

#include "sympath/galerkin.hpp"
#include "sympath/hamiltonian.hpp"
#include "sympath/maslov.hpp"

namespace sympath {

/// T-periodic brake trajectory, stored densely on [0, T/2] and extended by
/// x(-t) = N x(t) and T-periodicity everywhere else.
class BrakeOrbit {
public:
    BrakeOrbit(HamiltonianSpec h, double period, std::vector<Vec> half_samples,
               double shooting_residual);

    const HamiltonianSpec& hamiltonian() const { return h_; }
    double period() const { return period_; }
    double shooting_residual() const { return shooting_residual_; }
    double energy_drift() const { return energy_drift_; }
    Vec initial_point() const { return samples_.front(); }
    const std::vector<Vec>& half_samples() const { return samples_; }

    /// State at any time (cubic interpolation on the stored grid, reflected
    /// and wrapped outside [0, T/2]).
    Vec state(double t) const;

    /// max over samples of || x(-t) - N x(t) ||.
    double brake_residual(int checks = 128) const;

    /// B(t) = H''(x(t)) on [0, T/2], flagged brake-symmetric.
    CoefficientPath coefficient_path() const;

private:
    HamiltonianSpec h_;
    double period_;
    std::vector<Vec> samples_; // uniform on [0, T/2]
    double shooting_residual_;
    double energy_drift_;
};

struct ShootOptions {
    int steps = 8192;       // integration steps on [0, T/2]
    int max_newton = 50;
    double residual_tol = 1e-10;
    double singular_tol = 1e-12;
};

/// Newton shooting for a brake orbit: x(0) = (0, q0) integrates to p(T/2)=0.
/// The Newton matrix is the upper-right block of the matrizant of the
/// variational equation along the trajectory. Throws NoConvergence and
/// SingularJacobian (the latter reported with the block's singular values).
BrakeOrbit shoot(const HamiltonianSpec& h, double period, const Vec& q0_guess,
                 const ShootOptions& opts = {});

struct OrbitCertification {
    IndexSuite suite;
    bool index_estimate_holds = false; // i_L0 <= 1 <= i_L0 + nu_L0 (informational)
    bool hqq_positive = false;
    bool morse_maslov_checked = false;
    bool morse_maslov_agree = false;
    int morse_index = 0;    // m^-(q_{T/2}) at the stabilized truncation
    int morse_index_refined = 0;
    int conjugate_point_sum = 0;
    double lambda_used = 0;
};

/// Index suite of the orbit's linearized flow plus the certification flags.
OrbitCertification orbit_indices(const BrakeOrbit& orbit, int steps = 4096, int modes = 64);

struct ActionValues {
    double direct = 0;   // Phi
    double dual = 0;     // psi at u = -J xdot + Lambda x
    double residual = 0; // Phi + psi
};

/// Direct action by quadrature along the orbit and the dual value through
/// the pointwise Fenchel conjugate; their sum is the duality residual.
ActionValues action_values(const BrakeOrbit& orbit, double lambda);

/// Largest k <= 32 with x(t + T/k) = x(t) within tol; returns (k, T/k).
std::pair<int, double> minimal_period(const BrakeOrbit& orbit, double period_tol);

} // namespace sympath
