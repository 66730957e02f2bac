#include <doctest.h>

#include <cmath>

#include "sympath/symplectic_path.hpp"

using namespace sympath;

TEST_CASE("matrizant of B = 0 is constant identity") {
    const CoefficientPath b = CoefficientPath::constant(Mat::Zero(2, 2), 1.0);
    const SymplecticPath gamma = matrizant(b, 64);
    for (const auto& s : gamma.samples())
        CHECK(inf_norm(Mat(s.gamma - Mat::Identity(2, 2))) < 1e-14);
}

TEST_CASE("matrizant of B = I is the rotation exp(J t)") {
    const CoefficientPath b = CoefficientPath::constant(Mat::Identity(2, 2), M_PI / 2);
    const SymplecticPath gamma = matrizant(b, 256);
    Mat quarter(2, 2);
    quarter << 0, -1, 1, 0;
    CHECK(inf_norm(Mat(gamma.endpoint() - quarter)) < 1e-8);

    const CoefficientPath b2 = CoefficientPath::constant(Mat::Identity(2, 2), 2 * M_PI);
    const SymplecticPath full = matrizant(b2, 1024);
    CHECK(inf_norm(Mat(full.endpoint() - Mat::Identity(2, 2))) < 1e-8);
}

TEST_CASE("matrizant rejects bad inputs") {
    const CoefficientPath b = CoefficientPath::constant(Mat::Identity(2, 2), 1.0);
    CHECK_THROWS_AS(matrizant(b, 8), StepCountTooSmall);

    Mat skew(2, 2);
    skew << 0, 1, -1, 0;
    const CoefficientPath bad(1, 1.0, [skew](double) { return skew; },
                              CoefficientPath::Kind::Constant);
    CHECK_THROWS_AS(matrizant(bad, 64), NonSymmetricCoefficient);
}

TEST_CASE("symplectic residual stays below 1e-10 at every sample") {
    const CoefficientPath b = sample_coefficient_path(12, 2, 2, 1.5);
    const SymplecticPath gamma = matrizant(b, 2048);
    CHECK(gamma.max_symplectic_residual() < 1e-10);
}

TEST_CASE("fourth-order convergence of the endpoint") {
    const CoefficientPath b = sample_coefficient_path(3, 1, 2, 1.0);
    const Mat coarse = matrizant(b, 128).endpoint();
    const Mat fine = matrizant(b, 256).endpoint();
    const Mat finest = matrizant(b, 512).endpoint();
    const double e1 = inf_norm(Mat(coarse - finest));
    const double e2 = inf_norm(Mat(fine - finest));
    CHECK(e2 < e1 / 8); // ~16x drop expected at 4th order
}

TEST_CASE("flow property on subdivision") {
    const CoefficientPath b = sample_coefficient_path(4, 1, 2, 1.2);
    const SymplecticPath whole = matrizant(b, 2048);
    const double half = b.tau() / 2;
    CoefficientPath first(b.n(), half, [b](double t) { return b(t); },
                          CoefficientPath::Kind::Derived);
    CoefficientPath second = CoefficientPath::shifted(
        CoefficientPath(b.n(), b.tau(), [b](double t) { return b(t); },
                        CoefficientPath::Kind::Derived, true),
        half);
    CoefficientPath second_half(b.n(), half, [second](double t) { return second(t); },
                                CoefficientPath::Kind::Derived);
    const Mat composed =
        matrizant(second_half, 1024).endpoint() * matrizant(first, 1024).endpoint();
    CHECK(inf_norm(Mat(whole.endpoint() - composed)) < 1e-7);
}

TEST_CASE("periodic coefficients give gamma(t + tau) = gamma(t) gamma(tau)") {
    const CoefficientPath b = sample_coefficient_path(5, 1, 3, 1.0);
    CoefficientPath doubled(b.n(), 2 * b.tau(), [b](double t) { return b(t); },
                            CoefficientPath::Kind::Derived, false, false);
    const SymplecticPath gamma2 = matrizant(doubled, 4096);
    const SymplecticPath gamma1 = matrizant(b, 2048);
    const Mat m_tau = gamma1.endpoint();
    for (double t : {0.25 * b.tau(), 0.5 * b.tau(), 0.9 * b.tau()}) {
        const Mat lhs = gamma2.eval(t + b.tau());
        const Mat rhs = gamma1.eval(t) * m_tau;
        CHECK(inf_norm(Mat(lhs - rhs)) < 1e-7);
    }
}

TEST_CASE("brake_extend reflects the coefficients") {
    // B(t) = [[1, t], [t, 1]] on [0, 1]: extension at 1.5 is [[1, -0.5], [-0.5, 1]]
    CoefficientPath base(1, 1.0,
                         [](double t) {
                             Mat b(2, 2);
                             b << 1, t, t, 1;
                             return b;
                         },
                         CoefficientPath::Kind::Derived);
    const CoefficientPath ext = brake_extend(base);
    CHECK(ext.tau() == doctest::Approx(2.0));
    CHECK(ext.periodic());
    CHECK(ext.brake_symmetric());
    Mat expected(2, 2);
    expected << 1, -0.5, -0.5, 1;
    CHECK(inf_norm(Mat(ext(1.5) - expected)) < 1e-14);

    // extension of the identity path is the identity
    const CoefficientPath id_ext = brake_extend(CoefficientPath::constant(Mat::Identity(2, 2), 1.0));
    CHECK(inf_norm(Mat(id_ext(1.7) - Mat::Identity(2, 2))) < 1e-14);

    // idempotence: extending the extension and restricting matches
    const CoefficientPath ext2 = brake_extend(ext);
    for (double t : {0.3, 0.9, 1.4, 1.9})
        CHECK(inf_norm(Mat(ext2(t) - ext(t))) < 1e-13);
}

TEST_CASE("sampled coefficient paths are deterministic in the seed") {
    const CoefficientPath a = sample_coefficient_path(7, 2, 3, 1.5);
    const CoefficientPath b = sample_coefficient_path(7, 2, 3, 1.5);
    for (double t : {0.0, 0.21, 0.77, 1.0}) CHECK(inf_norm(Mat(a(t) - b(t))) == 0.0);

    const CoefficientPath zero = sample_coefficient_path(9, 1, 2, 0.0);
    CHECK(zero.sup_norm() == 0.0);

    const CoefficientPath flat = sample_coefficient_path(0, 1, 0, 1.0);
    CHECK(inf_norm(Mat(flat(0.3) - flat(0.8))) == 0.0); // degree 0 is constant

    // sup-norm bound
    const CoefficientPath c = sample_coefficient_path(11, 2, 4, 0.7);
    CHECK(c.sup_norm() <= 0.7 + 1e-12);
}

TEST_CASE("path evaluation between samples follows the flow") {
    const CoefficientPath b = sample_coefficient_path(6, 1, 2, 1.0);
    const SymplecticPath coarse = matrizant(b, 64);
    const SymplecticPath fine = matrizant(b, 4096);
    const double t = 0.3717;
    CHECK(inf_norm(Mat(coarse.eval(t) - fine.eval(t))) < 1e-6);
    CHECK(check_symplectic(coarse.eval(t)) < 1e-8);
}
