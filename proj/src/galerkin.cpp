#include "sympath/galerkin.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace sympath {

Mat lambda_matrix(int n, double lambda) {
    Mat l = Mat::Zero(2 * n, 2 * n);
    l.topLeftCorner(n, n) = lambda * Mat::Identity(n, n);
    return l;
}

GalerkinForm dual_form(const CoefficientPath& b, double lambda, double period, int modes,
                       int quad_panels) {
    const int n = b.n();
    const int dim = 2 * n * modes;
    Mat q = Mat::Zero(dim, dim);

    // basis layout per mode j: first the n sine components (first block),
    // then the n cosine components (second block)
    auto idx_s = [n](int j, int k) { return 2 * n * (j - 1) + k; };
    auto idx_c = [n](int j, int k) { return 2 * n * (j - 1) + n + k; };

    // analytic part: (-J pi u + J Lambda J pi^2 u, u) / 2 is diagonal per
    // mode in this basis
    for (int j = 1; j <= modes; ++j) {
        const double w = 2 * M_PI * j / period;
        for (int k = 0; k < n; ++k) {
            q(idx_s(j, k), idx_c(j, k)) += period / (4 * w);
            q(idx_c(j, k), idx_s(j, k)) += period / (4 * w);
            q(idx_c(j, k), idx_c(j, k)) += lambda * period / (4 * w * w);
        }
    }

    // quadrature part: ((B(t) + Lambda)^{-1} u, v) / 2 by composite
    // 4-point Gauss over [-T/2, T/2]
    const Mat lam = lambda_matrix(n, lambda);
    static const double nodes[4] = {-0.8611363115940526, -0.3399810435848563,
                                    0.3399810435848563, 0.8611363115940526};
    static const double weights[4] = {0.3478548451374538, 0.6521451548625461,
                                      0.6521451548625461, 0.3478548451374538};
    const double hp = period / quad_panels;
    std::vector<double> trig(dim);
    std::vector<int> comp(dim);
    for (int j = 1; j <= modes; ++j)
        for (int k = 0; k < n; ++k) {
            comp[std::size_t(idx_s(j, k))] = k;
            comp[std::size_t(idx_c(j, k))] = n + k;
        }

    for (int panel = 0; panel < quad_panels; ++panel) {
        const double t0 = -0.5 * period + panel * hp;
        for (int g = 0; g < 4; ++g) {
            const double t = t0 + 0.5 * hp * (1 + nodes[g]);
            const double wgt = 0.5 * hp * weights[g];
            const Mat bt = b(t) + lam;
            Eigen::LLT<Mat> llt(bt);
            if (llt.info() != Eigen::Success)
                throw NotPositiveDefinite("dual_form: B(t) + Lambda fails at t = " +
                                          std::to_string(t));
            const Mat ginv = llt.solve(Mat::Identity(2 * n, 2 * n));
            for (int j = 1; j <= modes; ++j) {
                const double w = 2 * M_PI * j / period;
                for (int k = 0; k < n; ++k) {
                    trig[std::size_t(idx_s(j, k))] = std::sin(w * t);
                    trig[std::size_t(idx_c(j, k))] = std::cos(w * t);
                }
            }
            for (int a = 0; a < dim; ++a) {
                const double fa = 0.5 * wgt * trig[std::size_t(a)];
                if (fa == 0.0) continue;
                for (int bcol = a; bcol < dim; ++bcol) {
                    const double v =
                        fa * trig[std::size_t(bcol)] * ginv(comp[std::size_t(a)], comp[std::size_t(bcol)]);
                    q(a, bcol) += v;
                    if (bcol != a) q(bcol, a) += v;
                }
            }
        }
    }

    GalerkinForm out;
    out.matrix = 0.5 * (q + q.transpose());
    out.modes = modes;
    out.quad_order = 4 * quad_panels;
    out.sig = signature(out.matrix, 1e-9 * std::max(1.0, inf_norm(out.matrix)));
    return out;
}

ConjugatePoints conjugate_points(const CoefficientPath& b, double s, int steps,
                                 const MaslovOptions& opts) {
    const int n = b.n();
    for (int i = 0; i <= 256; ++i) {
        const auto ev = jacobi_eigenvalues(b.b22(s * i / 256));
        if (ev.front() <= 0)
            throw NotPositiveDefinite("conjugate_points: B22 must be positive definite");
    }
    CoefficientPath restricted(n, s, [b](double t) { return b(t); },
                               CoefficientPath::Kind::Derived, false, b.brake_symmetric());
    const SymplecticPath gamma = matrizant(restricted, steps);
    const IndexReport report = maslov(gamma, BoundarySpec::l0(), opts);

    ConjugatePoints out;
    for (const Crossing& c : report.crossings) {
        if (c.t <= 0.0 || c.t >= s) continue;
        out.points.push_back({c.t, c.dim});
        out.total += c.dim;
    }
    return out;
}

double convexifying_lambda(const CoefficientPath& b, int samples) {
    const int n = b.n();
    double lam_max = 0;
    for (int i = 0; i <= 256; ++i) {
        const double t = b.tau() * i / 256;
        const Mat bt = b(t);
        const Mat a = bt.topLeftCorner(n, n);
        const Mat c = bt.bottomLeftCorner(n, n);
        const Mat d = bt.bottomRightCorner(n, n);
        const auto dev = jacobi_eigenvalues(d);
        if (dev.front() <= 0)
            throw DBlockNotPositive("convexifying_lambda: D block fails at t = " +
                                    std::to_string(t));
        const Mat schur = c.transpose() * d.inverse() * c - a;
        const auto ev = jacobi_eigenvalues(Mat(0.5 * (schur + schur.transpose())));
        lam_max = std::max(lam_max, ev.back());
    }
    const double lambda = lam_max + 1.0;
    const Mat lam = lambda_matrix(n, lambda);
    for (int i = 0; i <= samples; ++i) {
        const double t = b.tau() * i / samples;
        const auto ev = jacobi_eigenvalues(Mat(b(t) + lam));
        if (ev.front() <= 0)
            throw NotPositiveDefinite("convexifying_lambda: shift failed to convexify");
    }
    return lambda;
}

} // namespace sympath
