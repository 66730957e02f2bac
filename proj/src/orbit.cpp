#include "sympath/orbit.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "sympath/fenchel.hpp"
#include "sympath/fourier.hpp"

namespace sympath {

namespace {

Vec hamiltonian_rhs(const HamiltonianSpec& h, const Mat& j, const Vec& x) {
    return j * h.gradient(x);
}

/// One RK4 step of the orbit together with the variational matrizant.
void rk4_orbit_step(const HamiltonianSpec& h, const Mat& j, double dt, Vec& x, Mat& gamma) {
    const auto f = [&](const Vec& xs, const Mat& gs, Vec& dx, Mat& dg) {
        dx = hamiltonian_rhs(h, j, xs);
        dg = j * h.hessian(xs) * gs;
    };
    Vec k1x, k2x, k3x, k4x;
    Mat k1g, k2g, k3g, k4g;
    f(x, gamma, k1x, k1g);
    f(Vec(x + 0.5 * dt * k1x), Mat(gamma + 0.5 * dt * k1g), k2x, k2g);
    f(Vec(x + 0.5 * dt * k2x), Mat(gamma + 0.5 * dt * k2g), k3x, k3g);
    f(Vec(x + dt * k3x), Mat(gamma + dt * k3g), k4x, k4g);
    x += (dt / 6) * (k1x + 2 * k2x + 2 * k3x + k4x);
    gamma += (dt / 6) * (k1g + 2 * k2g + 2 * k3g + k4g);
}

struct HalfShot {
    std::vector<Vec> samples; // x at the uniform grid on [0, T/2]
    Mat monodromy;            // matrizant of the variational equation at T/2
};

HalfShot integrate_half(const HamiltonianSpec& h, double period, const Vec& q0, int steps) {
    const int n = h.n;
    const Mat j = standard_J(n);
    const double dt = 0.5 * period / steps;
    Vec x = Vec::Zero(2 * n);
    x.tail(n) = q0;
    Mat gamma = Mat::Identity(2 * n, 2 * n);
    HalfShot shot;
    shot.samples.reserve(std::size_t(steps) + 1);
    shot.samples.push_back(x);
    for (int i = 0; i < steps; ++i) {
        rk4_orbit_step(h, j, dt, x, gamma);
        if ((i + 1) % 64 == 0) gamma = symplectic_project(gamma);
        shot.samples.push_back(x);
    }
    shot.monodromy = symplectic_project(gamma);
    return shot;
}

} // namespace

BrakeOrbit::BrakeOrbit(HamiltonianSpec h, double period, std::vector<Vec> half_samples,
                       double shooting_residual)
    : h_(std::move(h)), period_(period), samples_(std::move(half_samples)),
      shooting_residual_(shooting_residual) {
    if (samples_.size() < 4) throw DimensionMismatch("BrakeOrbit: too few samples");
    const double e0 = h_.value(samples_.front());
    energy_drift_ = 0;
    for (const Vec& x : samples_)
        energy_drift_ = std::max(energy_drift_, std::abs(h_.value(x) - e0));
}

Vec BrakeOrbit::state(double t) const {
    const int n = h_.n;
    const Mat nn = standard_N(n);
    // reduce to [0, T/2] using periodicity and the brake reflection
    double r = std::fmod(t, period_);
    if (r < 0) r += period_;
    bool reflect = false;
    if (r > 0.5 * period_) {
        r = period_ - r; // x(T - s) = N x(s - T + T) ... = N x(s)
        reflect = true;
    }
    const int count = int(samples_.size()) - 1;
    const double h = 0.5 * period_ / count;
    double pos = r / h;
    int i = std::min(int(std::floor(pos)), count - 1);
    const double u = pos - i;

    // Catmull-Rom with reflected ghost points at both ends
    auto sample_at = [&](int idx) -> Vec {
        if (idx >= 0 && idx <= count) return samples_[std::size_t(idx)];
        if (idx < 0) return Vec(nn * samples_[std::size_t(-idx)]);
        return Vec(nn * samples_[std::size_t(2 * count - idx)]);
    };
    const Vec p0 = sample_at(i - 1), p1 = sample_at(i), p2 = sample_at(i + 1),
              p3 = sample_at(i + 2);
    const double u2 = u * u, u3 = u2 * u;
    Vec value = 0.5 * ((2.0 * p1) + (-p0 + p2) * u + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * u2 +
                       (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * u3);
    return reflect ? Vec(nn * value) : value;
}

double BrakeOrbit::brake_residual(int checks) const {
    const Mat nn = standard_N(h_.n);
    double r = 0;
    for (int i = 0; i <= checks; ++i) {
        const double t = 0.5 * period_ * i / checks;
        r = std::max(r, Vec(state(-t) - nn * state(t)).cwiseAbs().maxCoeff());
    }
    return r;
}

CoefficientPath BrakeOrbit::coefficient_path() const {
    auto self = std::make_shared<BrakeOrbit>(*this);
    return CoefficientPath(
        h_.n, 0.5 * period_, [self](double t) { return self->h_.hessian(self->state(t)); },
        CoefficientPath::Kind::Orbit, /*periodic=*/false, /*brake=*/true);
}

BrakeOrbit shoot(const HamiltonianSpec& h, double period, const Vec& q0_guess,
                 const ShootOptions& opts) {
    if (period <= 0) throw DimensionMismatch("shoot: period must be positive");
    if (h.reversibility_residual() > 1e-10)
        throw NumericalError("shoot: Hamiltonian is not reversible");
    const int n = h.n;
    Vec q0 = q0_guess;

    HalfShot shot = integrate_half(h, period, q0, opts.steps);
    Vec residual = shot.samples.back().head(n);

    for (int it = 0; it < opts.max_newton; ++it) {
        const Mat jac = shot.monodromy.topRightCorner(n, n); // d p(T/2) / d q0
        Eigen::JacobiSVD<Mat> svd(jac, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) <= opts.singular_tol * std::max(sv(0), 1.0)) {
            std::ostringstream msg;
            msg << "shoot: shooting Jacobian is rank-deficient; singular values:";
            for (int i = 0; i < sv.size(); ++i) msg << " " << sv(i);
            throw SingularJacobian(msg.str());
        }
        if (residual.norm() <= opts.residual_tol)
            return BrakeOrbit(h, period, std::move(shot.samples), residual.norm());

        const Vec step = -svd.solve(residual);
        double scale = 1.0;
        bool accepted = false;
        for (int half = 0; half < 40; ++half) {
            HalfShot trial = integrate_half(h, period, Vec(q0 + scale * step), opts.steps);
            const Vec trial_res = trial.samples.back().head(n);
            if (trial_res.norm() < residual.norm()) {
                q0 += scale * step;
                shot = std::move(trial);
                residual = trial_res;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if (!accepted) throw NoConvergence("shoot: step halving stalled");
    }
    if (residual.norm() <= opts.residual_tol)
        return BrakeOrbit(h, period, std::move(shot.samples), residual.norm());
    throw NoConvergence("shoot: Newton did not reach the residual tolerance");
}

OrbitCertification orbit_indices(const BrakeOrbit& orbit, int steps, int modes) {
    const CoefficientPath b = orbit.coefficient_path();
    const SymplecticPath gamma = matrizant(b, steps);

    OrbitCertification cert;
    cert.suite = index_suite(gamma);
    const int i_l0 = cert.suite.l0.index;
    const int nu_l0 = cert.suite.end_nullities.l0;
    cert.index_estimate_holds = i_l0 <= 1 && 1 <= i_l0 + nu_l0;

    cert.hqq_positive = true;
    for (int i = 0; i <= 256 && cert.hqq_positive; ++i) {
        const double t = b.tau() * i / 256;
        const auto ev = jacobi_eigenvalues(orbit.hamiltonian().hqq(orbit.state(t)));
        if (ev.front() <= 0) cert.hqq_positive = false;
    }

    if (cert.hqq_positive) {
        // Lambda = 0 when B(t) is already positive definite along the orbit
        double lambda = 0;
        bool pd = true;
        for (int i = 0; i <= 256 && pd; ++i) {
            const auto ev = jacobi_eigenvalues(b(b.tau() * i / 256));
            if (ev.front() <= 0) pd = false;
        }
        if (!pd) lambda = convexifying_lambda(b);
        cert.lambda_used = lambda;

        const GalerkinForm coarse = dual_form(b, lambda, orbit.period(), modes);
        const GalerkinForm fine = dual_form(b, lambda, orbit.period(), 2 * modes);
        cert.morse_index = coarse.sig.m_minus;
        cert.morse_index_refined = fine.sig.m_minus;
        cert.conjugate_point_sum = conjugate_points(b, b.tau(), steps).total;
        cert.morse_maslov_checked = true;
        cert.morse_maslov_agree = cert.morse_index == i_l0 &&
                                  cert.morse_index_refined == i_l0 &&
                                  cert.conjugate_point_sum == i_l0;
    }
    return cert;
}

ActionValues action_values(const BrakeOrbit& orbit, double lambda) {
    const HamiltonianSpec& h = orbit.hamiltonian();
    const int n = h.n;
    const Mat j = standard_J(n);
    const Mat lam = lambda_matrix(n, lambda);
    const double period = orbit.period();

    // uniform grid over the full period, even count for Simpson weights
    const int m = 2 * int(orbit.half_samples().size() - 1);
    const double dt = period / m;
    auto simpson_weight = [m, dt](int i) {
        if (i == 0 || i == m) return dt / 3;
        return (i % 2 == 1) ? 4 * dt / 3 : 2 * dt / 3;
    };

    // direct action Phi = int (J xdot, x)/2 + H(x)
    double phi = 0;
    std::vector<Vec> u_samples(std::size_t(m) + 1);
    for (int i = 0; i <= m; ++i) {
        const double t = -0.5 * period + i * dt;
        const Vec x = orbit.state(t);
        const Vec xdot = j * h.gradient(x);
        phi += simpson_weight(i) * (0.5 * (j * xdot).dot(x) + h.value(x));
        u_samples[std::size_t(i)] = -j * xdot + lam * x;
    }

    // zero-mean primitive of u by cumulative trapezoid
    auto primitive = [&](const std::vector<Vec>& f) {
        std::vector<Vec> p(f.size(), Vec::Zero(2 * n));
        for (std::size_t i = 1; i < f.size(); ++i)
            p[i] = p[i - 1] + 0.5 * dt * (f[i] + f[i - 1]);
        Vec mean = Vec::Zero(2 * n);
        for (std::size_t i = 0; i < p.size(); ++i)
            mean += simpson_weight(int(i)) * p[i];
        mean /= period;
        for (Vec& v : p) v -= mean;
        return p;
    };
    const std::vector<Vec> pi_u = primitive(u_samples);
    const std::vector<Vec> pi2_u = primitive(pi_u);

    // F(x) = H(x) + (Lambda x, x)/2, F* by pointwise Newton
    ConvexMap f;
    f.dimension = 2 * n;
    f.value = [&h, &lam](const Vec& x) { return h.value(x) + 0.5 * x.dot(lam * x); };
    f.gradient = [&h, &lam](const Vec& x) { return Vec(h.gradient(x) + lam * x); };
    f.hessian = [&h, &lam](const Vec& x) { return Mat(h.hessian(x) + lam); };

    double psi = 0;
    for (int i = 0; i <= m; ++i) {
        const Vec& u = u_samples[std::size_t(i)];
        const Vec term = -j * pi_u[std::size_t(i)] + j * lam * j * pi2_u[std::size_t(i)];
        psi += simpson_weight(i) * (0.5 * term.dot(u) + fenchel(f, u).value);
    }

    ActionValues out;
    out.direct = phi;
    out.dual = psi;
    out.residual = phi + psi;
    return out;
}

std::pair<int, double> minimal_period(const BrakeOrbit& orbit, double period_tol) {
    const double period = orbit.period();
    const int checks = 256;
    for (int k = 32; k >= 1; --k) {
        double worst = 0;
        for (int i = 0; i <= checks; ++i) {
            const double t = -0.5 * period + period * i / checks;
            worst = std::max(worst,
                             Vec(orbit.state(t + period / k) - orbit.state(t)).norm());
        }
        if (worst <= period_tol) return {k, period / k};
    }
    return {1, period};
}

} // namespace sympath
