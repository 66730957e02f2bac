#include "sympath/hamiltonian.hpp"

#include <cmath>
#include <memory>

#include "sympath/symplectic.hpp"

namespace sympath {

double HamiltonianSpec::reversibility_residual(double radius, int samples) const {
    Rng rng(0x5ca1ab1e);
    const Mat nn = standard_N(n);
    double r = 0;
    for (int i = 0; i < samples; ++i) {
        Vec x(2 * n);
        for (int j = 0; j < 2 * n; ++j) x(j) = rng.uniform(-radius, radius);
        r = std::max(r, std::abs(value(Vec(nn * x)) - value(x)));
    }
    return r;
}

double HamiltonianSpec::hessian_symmetry_residual(double radius, int samples) const {
    Rng rng(0xfeedbeef);
    double r = 0;
    for (int i = 0; i < samples; ++i) {
        Vec x(2 * n);
        for (int j = 0; j < 2 * n; ++j) x(j) = rng.uniform(-radius, radius);
        const Mat h = hessian(x);
        r = std::max(r, inf_norm(Mat(h - h.transpose())));
    }
    return r;
}

HamiltonianSpec HamiltonianSpec::harmonic(int n) {
    HamiltonianSpec h;
    h.n = n;
    h.tag = "harmonic";
    h.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
    h.gradient = [](const Vec& x) { return x; };
    h.hessian = [n](const Vec&) { return Mat(Mat::Identity(2 * n, 2 * n)); };
    return h;
}

HamiltonianSpec HamiltonianSpec::convex_quartic(int n) {
    HamiltonianSpec h;
    h.n = n;
    h.tag = "quartic";
    h.value = [n](const Vec& x) {
        const double q2 = x.tail(n).squaredNorm();
        return 0.5 * x.head(n).squaredNorm() + 0.5 * q2 + 0.25 * q2 * q2;
    };
    h.gradient = [n](const Vec& x) {
        const double q2 = x.tail(n).squaredNorm();
        Vec g = x;
        g.tail(n) += q2 * x.tail(n);
        return g;
    };
    h.hessian = [n](const Vec& x) {
        const Vec q = x.tail(n);
        Mat h2 = Mat::Identity(2 * n, 2 * n);
        h2.bottomRightCorner(n, n) +=
            q.squaredNorm() * Mat::Identity(n, n) + 2.0 * q * q.transpose();
        return h2;
    };
    return h;
}

HamiltonianSpec HamiltonianSpec::polynomial(int n, std::vector<Monomial> terms) {
    for (const Monomial& m : terms)
        if (int(m.exponents.size()) != 2 * n)
            throw DimensionMismatch("polynomial Hamiltonian: exponent list must have 2n entries");
    auto tp = std::make_shared<std::vector<Monomial>>(std::move(terms));

    auto power = [](double base, int e) {
        double r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };

    HamiltonianSpec h;
    h.n = n;
    h.tag = "polynomial";
    h.value = [tp, power](const Vec& x) {
        double v = 0;
        for (const Monomial& m : *tp) {
            double term = m.coefficient;
            for (int i = 0; i < x.size(); ++i) term *= power(x(i), m.exponents[std::size_t(i)]);
            v += term;
        }
        return v;
    };
    h.gradient = [tp, power, n](const Vec& x) {
        Vec g = Vec::Zero(2 * n);
        for (const Monomial& m : *tp) {
            for (int d = 0; d < 2 * n; ++d) {
                const int ed = m.exponents[std::size_t(d)];
                if (ed == 0) continue;
                double term = m.coefficient * ed;
                for (int i = 0; i < 2 * n; ++i) {
                    const int e = m.exponents[std::size_t(i)] - (i == d ? 1 : 0);
                    term *= power(x(i), e);
                }
                g(d) += term;
            }
        }
        return g;
    };
    h.hessian = [tp, power, n](const Vec& x) {
        Mat hm = Mat::Zero(2 * n, 2 * n);
        for (const Monomial& m : *tp) {
            for (int d1 = 0; d1 < 2 * n; ++d1) {
                for (int d2 = d1; d2 < 2 * n; ++d2) {
                    int e1 = m.exponents[std::size_t(d1)];
                    int e2 = m.exponents[std::size_t(d2)];
                    double factor;
                    if (d1 == d2) {
                        if (e1 < 2) continue;
                        factor = double(e1) * (e1 - 1);
                    } else {
                        if (e1 < 1 || e2 < 1) continue;
                        factor = double(e1) * e2;
                    }
                    double term = m.coefficient * factor;
                    for (int i = 0; i < 2 * n; ++i) {
                        int e = m.exponents[std::size_t(i)];
                        if (i == d1) e -= 1;
                        if (i == d2) e -= 1;
                        term *= power(x(i), e);
                    }
                    hm(d1, d2) += term;
                    if (d1 != d2) hm(d2, d1) += term;
                }
            }
        }
        return hm;
    };
    return h;
}

} // namespace sympath
