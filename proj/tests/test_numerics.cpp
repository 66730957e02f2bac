#include <doctest.h>

#include <cmath>

#include "sympath/numerics.hpp"
#include "sympath/symplectic.hpp"

using namespace sympath;

TEST_CASE("signature of diagonal and zero matrices") {
    Mat d = Mat::Zero(3, 3);
    d(0, 0) = 1;
    d(1, 1) = -1;
    const SignatureTriple s = signature(d);
    CHECK(s.m_plus == 1);
    CHECK(s.m_zero == 1);
    CHECK(s.m_minus == 1);

    const SignatureTriple z = signature(Mat(Mat::Zero(4, 4)));
    CHECK(z.m_plus == 0);
    CHECK(z.m_zero == 4);
    CHECK(z.m_minus == 0);
}

TEST_CASE("signature of [[1,-1],[-1,2]] is (2,0,0)") {
    // eigenvalues (3 +- sqrt 5) / 2, both positive
    Mat m(2, 2);
    m << 1, -1, -1, 2;
    const SignatureTriple s = signature(m);
    CHECK(s.m_plus == 2);
    CHECK(s.m_zero == 0);
    CHECK(s.m_minus == 0);
    CHECK(s.eigenvalues[0] == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
}

TEST_CASE("signature rejects asymmetric input") {
    Mat m(2, 2);
    m << 0, 1, -1, 0;
    CHECK_THROWS_AS(signature(m), NotSymmetric);
}

TEST_CASE("signature is congruence invariant") {
    Rng rng(42);
    for (int dim = 2; dim <= 8; ++dim) {
        for (int rep = 0; rep < 8; ++rep) {
            const Mat s = random_symmetric(rng, dim);
            Mat p(dim, dim);
            do {
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) p(i, j) = rng.uniform(-1, 1);
            } while (std::abs(p.determinant()) < 1e-3);
            const SignatureTriple before = signature(s);
            const SignatureTriple after = signature(Mat(p.transpose() * s * p));
            CHECK(before == after);
        }
    }
}

TEST_CASE("hermitian signature via the real embedding") {
    CMat h(2, 2);
    h << Complex(2, 0), Complex(0, 1), Complex(0, -1), Complex(-1, 0);
    // eigenvalues of [[2, i], [-i, -1]]: (1 +- sqrt(13)) / 2
    const SignatureTriple s = signature(h);
    CHECK(s.m_plus == 1);
    CHECK(s.m_zero == 0);
    CHECK(s.m_minus == 1);
}

TEST_CASE("eigenvalue perturbation bound |mu_j - mu'_j| <= ||T - T'||") {
    Rng rng(7);
    for (int rep = 0; rep < 64; ++rep) {
        const int dim = 2 + int(rng.below(7));
        const Mat a = random_symmetric(rng, dim);
        const Mat b = random_symmetric(rng, dim, 0.3);
        const auto ea = jacobi_eigenvalues(a);
        const auto eb = jacobi_eigenvalues(Mat(a + b));
        const double gap = operator_norm(b);
        for (int i = 0; i < dim; ++i)
            CHECK(std::abs(ea[std::size_t(i)] - eb[std::size_t(i)]) <= gap + 1e-10);
    }
}

TEST_CASE("numeric rank and null space") {
    Mat m(3, 3);
    m << 1, 2, 3, 2, 4, 6, 0, 0, 1;
    CHECK(numeric_rank(m) == 2);
    const Mat ns = null_space(m);
    CHECK(ns.cols() == 1);
    CHECK((m * ns).norm() < 1e-12);
}

TEST_CASE("rng determinism") {
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
}

TEST_CASE("check_symplectic examples") {
    CHECK(check_symplectic(Mat(Mat::Identity(4, 4))) == 0.0);
    Mat m(2, 2);
    m << 1, -2, 1, -1;
    CHECK(check_symplectic(m) == doctest::Approx(0).epsilon(1e-15));
    Mat d(2, 2);
    d << 2, 0, 0, 1; // M^T J M = 2J
    CHECK(check_symplectic(d) == doctest::Approx(1.0));
}

TEST_CASE("random symplectic matrices satisfy the defining relation") {
    Rng rng(3);
    for (int n = 1; n <= 3; ++n)
        for (int rep = 0; rep < 16; ++rep)
            CHECK(check_symplectic(random_symplectic(rng, n)) < 1e-10);
}
