#include <doctest.h>

#include "sympath/lagrangian.hpp"
#include "sympath/triple_index.hpp"

using namespace sympath;

namespace {

Mat blocks_to_matrix(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
    const int n = int(a.rows());
    Mat m(2 * n, 2 * n);
    m << a, b, c, d;
    return m;
}

} // namespace

TEST_CASE("graphs of symplectic matrices are Lagrangian in the doubled space") {
    Rng rng(11);
    for (int n = 1; n <= 3; ++n)
        for (int rep = 0; rep < 8; ++rep) {
            const Mat m = random_symplectic(rng, n);
            const LagrangianFrame g = LagrangianFrame::graph(m);
            CHECK(g.isotropy_residual() < 1e-8);
        }
}

TEST_CASE("intersection of identical alpha0 frames has full dimension") {
    const LagrangianFrame a0 = LagrangianFrame::alpha0(2);
    auto [dim, basis] = intersection_dim(a0, a0);
    CHECK(dim == 2);
    CHECK(basis.cols() == 2);
}

TEST_CASE("Graph(I) meets alpha0 x alpha0 in the diagonal of L0") {
    const LagrangianFrame g = LagrangianFrame::graph(Mat::Identity(2, 2));
    const LagrangianFrame a0t = LagrangianFrame::alpha_tilde(0, 1);
    auto [dim, basis] = intersection_dim(g, a0t);
    CHECK(dim == 1);
    // vectors (0, y, 0, y)
    CHECK(std::abs(basis(0, 0)) < 1e-12);
    CHECK(std::abs(basis(2, 0)) < 1e-12);
    CHECK(std::abs(basis(1, 0) - basis(3, 0)) < 1e-12);
}

TEST_CASE("graph of the shear [[1,-2],[1,-1]] misses alpha0 x alpha0") {
    Mat m(2, 2);
    m << 1, -2, 1, -1;
    const LagrangianFrame g = LagrangianFrame::graph(m);
    const LagrangianFrame a0t = LagrangianFrame::alpha_tilde(0, 1);
    CHECK(intersection_dim(g, a0t).first == 0);
}

TEST_CASE("mismatched ambient spaces are rejected") {
    const LagrangianFrame a0 = LagrangianFrame::alpha0(1);
    const LagrangianFrame a0t = LagrangianFrame::alpha_tilde(0, 1);
    CHECK_THROWS_AS(intersection_dim(a0, a0t), AmbientMismatch);
}

TEST_CASE("triple form signatures match the endpoint block matrices") {
    Rng rng(5);
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 12; ++rep) {
            const Mat m = random_symplectic(rng, n);
            const Mat a = m.topLeftCorner(n, n), b = m.topRightCorner(n, n);
            const Mat c = m.bottomLeftCorner(n, n), d = m.bottomRightCorner(n, n);
            const LagrangianFrame graph = LagrangianFrame::graph(m);
            const LagrangianFrame a0 = LagrangianFrame::alpha0(n);
            const LagrangianFrame a1 = LagrangianFrame::alpha1(n);
            const LagrangianFrame a0t = LagrangianFrame::alpha_tilde(0, n);
            const LagrangianFrame a1t = LagrangianFrame::alpha_tilde(1, n);

            // Q(Graph M, alpha0 x alpha1; alpha0~) ~ D^T B
            {
                const CMat q = triple_form(graph, LagrangianFrame::product(a0, a1), a0t);
                const Mat dtb = d.transpose() * b;
                CHECK(signature(q) == signature(Mat(0.5 * (dtb + dtb.transpose()))));
            }
            // Q(Graph M, alpha1~; alpha0~) ~ [[C^T A, C^T B], [B^T C, D^T B]]
            {
                const CMat q = triple_form(graph, a1t, a0t);
                const Mat big = blocks_to_matrix(c.transpose() * a, c.transpose() * b,
                                                 b.transpose() * c, d.transpose() * b);
                CHECK(signature(q) == signature(Mat(0.5 * (big + big.transpose()))));
            }
            // Q(Graph M, alpha0 x alpha1; alpha1 x alpha0) ~ [[C^T A, A^T D], [D^T A, D^T B]]
            {
                const CMat q = triple_form(graph, LagrangianFrame::product(a0, a1),
                                           LagrangianFrame::product(a1, a0));
                const Mat big = blocks_to_matrix(c.transpose() * a, a.transpose() * d,
                                                 d.transpose() * a, d.transpose() * b);
                CHECK(signature(q) == signature(Mat(0.5 * (big + big.transpose()))));
            }
        }
    }
}

TEST_CASE("triple form vanishes for Graph(I), alpha0~, M alpha0 x alpha0 with C = 0") {
    Rng rng(9);
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 1 + int(rng.below(2));
        Mat m = Mat::Identity(2 * n, 2 * n);
        m.topRightCorner(n, n) = random_symmetric(rng, n); // upper shear keeps C = 0
        const LagrangianFrame graph_i = LagrangianFrame::graph(Mat::Identity(2 * n, 2 * n));
        const LagrangianFrame a0t = LagrangianFrame::alpha_tilde(0, n);
        const LagrangianFrame moved = LagrangianFrame::product(
            LagrangianFrame::map(m, LagrangianFrame::alpha0(n)), LagrangianFrame::alpha0(n));
        const CMat q = triple_form(graph_i, a0t, moved);
        CHECK(inf_norm(q) < 1e-9);
    }
}

TEST_CASE("triple form does not depend on the least-squares split") {
    // perturb the minimum-norm split by a kernel direction of [beta | delta]
    Rng rng(23);
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 1 + int(rng.below(3));
        const Mat m = random_symplectic(rng, n);
        const LagrangianFrame alpha = LagrangianFrame::graph(m);
        const LagrangianFrame beta = LagrangianFrame::alpha_tilde(1, n);
        const LagrangianFrame delta = LagrangianFrame::alpha_tilde(0, n);

        CMat sum(4 * n, 4 * n);
        sum << beta.span(), delta.span();
        const CMat kernel = null_space(sum);

        auto [dim, basis] = intersection_dim(alpha, alpha); // basis of alpha itself
        (void)dim;
        // alpha ^ (beta + delta) = alpha here since beta + delta = V
        Eigen::JacobiSVD<CMat> split(sum, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const int k = int(basis.cols());
        CMat q1(k, k), q2(k, k);
        for (int jcol = 0; jcol < k; ++jcol) {
            CVec w = split.solve(basis.col(jcol));
            CVec w2 = w;
            if (kernel.cols() > 0)
                w2 += kernel * CVec(Complex(0.4, 0.7) * CVec::Ones(kernel.cols()));
            const CVec y1 = -beta.span() * w.head(2 * n);
            const CVec y2 = -beta.span() * w2.head(2 * n);
            for (int i = 0; i < k; ++i) {
                q1(i, jcol) = symplectic_pairing(basis.col(i), y1, SpaceTag::Doubled);
                q2(i, jcol) = symplectic_pairing(basis.col(i), y2, SpaceTag::Doubled);
            }
        }
        CHECK(inf_norm(CMat(q1 - q2)) < 1e-8);
    }
}

TEST_CASE("degenerate frames are rejected") {
    CMat bad(4, 2);
    bad.setZero();
    bad(0, 0) = 1;
    bad(0, 1) = 1; // dependent columns
    CHECK_THROWS_AS(LagrangianFrame(bad, SpaceTag::Single), DegenerateFrame);

    CMat not_isotropic(4, 2);
    not_isotropic.setZero();
    not_isotropic(0, 0) = 1; // e1 and e3 pair to omega = 1
    not_isotropic(2, 1) = 1;
    CHECK_THROWS_AS(LagrangianFrame(not_isotropic, SpaceTag::Single), DegenerateFrame);
}
