#include <doctest.h>

#include <cmath>

#include "sympath/maslov.hpp"

using namespace sympath;

namespace {

SymplecticPath rotation_path(double tau, int steps = 2048) {
    return matrizant(CoefficientPath::constant(Mat::Identity(2, 2), tau), steps);
}

} // namespace

TEST_CASE("endpoint nullities of the identity and shear matrices") {
    const EndpointNullities id = nullities(Mat::Identity(2, 2));
    CHECK(id.l0 == 1);
    CHECK(id.l1 == 1);
    CHECK(id.periodic == 2);
    CHECK(id.l0xl1 == 0);
    CHECK(id.l1xl0 == 0);

    Mat m(2, 2);
    m << 1, -2, 1, -1;
    const EndpointNullities sh = nullities(m);
    CHECK(sh.l0 == 0);
    CHECK(sh.l1 == 0);
    CHECK(sh.periodic == 0);

    CHECK(nullity_theta(Mat(-Mat::Identity(2, 2)), M_PI) == 2);
}

TEST_CASE("nullities rejects non-symplectic input") {
    CHECK_THROWS_AS(nullities(Mat(2 * Mat::Identity(2, 2))), NotSymplectic);
}

TEST_CASE("L0 index of the rotation on [0, 3 pi / 2]") {
    const SymplecticPath gamma = rotation_path(1.5 * M_PI);
    const IndexReport r = maslov(gamma, BoundarySpec::l0());
    CHECK(r.index == 1);
    CHECK(r.nullity_at_end == 0);
    REQUIRE(r.crossings.size() == 2); // t = 0 and t = pi
    CHECK(r.crossings[0].t == doctest::Approx(0.0));
    CHECK(r.crossings[1].t == doctest::Approx(M_PI).epsilon(1e-9));
    CHECK(r.crossings[1].dim == 1);
    CHECK(r.crossings[1].sig.m_plus == 1);
}

TEST_CASE("periodic index of the full rotation") {
    const SymplecticPath gamma = rotation_path(2 * M_PI, 4096);
    const IndexReport r = maslov(gamma, BoundarySpec::periodic());
    CHECK(r.raw_maslov == 2); // +2 at t = 0, -m^- = 0 at t = 2 pi
    CHECK(r.index == 1);
    CHECK(r.nullity_at_end == 2);
}

TEST_CASE("L0xL1 index of the short rotation is zero without crossings") {
    const SymplecticPath gamma = rotation_path(M_PI / 4);
    const IndexReport r = maslov(gamma, BoundarySpec::l0xl1());
    CHECK(r.index == 0);
    CHECK(r.crossings.empty());

    const IndexReport l0 = maslov(gamma, BoundarySpec::l0());
    CHECK(l0.index == 0);
    const IndexReport l1 = maslov(gamma, BoundarySpec::l1());
    CHECK(l1.index == 0);
}

TEST_CASE("L0xL1 crossing of the rotation at t = pi/2") {
    const SymplecticPath gamma = rotation_path(0.75 * M_PI);
    const IndexReport r = maslov(gamma, BoundarySpec::l0xl1());
    CHECK(r.index == 1);
    REQUIRE(r.crossings.size() == 1);
    CHECK(r.crossings[0].t == doctest::Approx(M_PI / 2).epsilon(1e-9));
}

TEST_CASE("theta index of the double rotation sees the e^{2i pi/3} eigenvalue") {
    const SymplecticPath gamma = rotation_path(M_PI);
    const IndexReport r = maslov(gamma, BoundarySpec::theta(2 * M_PI / 3));
    CHECK(r.index == 1);
    REQUIRE(r.crossings.size() == 1);
    CHECK(r.crossings[0].t == doctest::Approx(2 * M_PI / 3).epsilon(1e-9));
    CHECK(r.crossings[0].dim == 1);
    CHECK(r.nullity_at_end == 0);
}

TEST_CASE("degenerate indicator raises DegenerateCrossing") {
    const SymplecticPath constant =
        matrizant(CoefficientPath::constant(Mat::Zero(2, 2), 1.0), 64);
    CHECK_THROWS_AS(maslov(constant, BoundarySpec::l0()), DegenerateCrossing);
}

TEST_CASE("index_suite on the quarter rotation") {
    const SymplecticPath gamma = rotation_path(M_PI / 4);
    const IndexSuite s = index_suite(gamma);
    CHECK(s.l0.index == 0);
    CHECK(s.l1.index == 0);
    CHECK(s.l0xl1.index == 0);
    CHECK(s.end_nullities.l0 == 0);
    CHECK(s.end_nullities.l1 == 0);
    CHECK(s.end_nullities.periodic == 0);
}

TEST_CASE("positivity: B22 > 0 forces i_L0 >= 0 and the nullity sum formula") {
    Rng rng(31);
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 1 + int(rng.below(2));
        // positive-definite blocks: B = S^T S + small identity
        CoefficientPath raw = sample_coefficient_path(100 + rep, n, 2, 1.0);
        CoefficientPath b(n, raw.tau() * 4,
                          [raw](double t) {
                              const Mat s = raw(t / 4);
                              return Mat(s.transpose() * s +
                                         0.6 * Mat::Identity(s.rows(), s.cols()));
                          },
                          CoefficientPath::Kind::Derived);
        const SymplecticPath gamma = matrizant(b, 2048);
        const IndexReport r = maslov(gamma, BoundarySpec::l0());
        CHECK(r.index >= 0);
        // with B22 > 0 the index equals the sum of interior crossing dims
        int interior = 0;
        for (const Crossing& c : r.crossings)
            if (c.t > 0 && c.t < gamma.tau()) interior += c.dim;
        CHECK(r.index == interior);
    }
}

TEST_CASE("path splitting is additive away from crossings") {
    const double tau = 1.5 * M_PI;
    const SymplecticPath whole = rotation_path(tau, 2048);
    // split at 0.6 tau (no crossing there); second leg translated by gamma(t*)
    const double split = 0.6 * tau;
    const SymplecticPath first = rotation_path(split, 1024);
    const SymplecticPath second_raw = rotation_path(tau - split, 1024);
    const Mat mid = first.endpoint();

    const BoundarySpec l0t = BoundarySpec::general(LagrangianFrame::alpha_tilde(0, 1));
    const IndexReport rw = maslov(whole, BoundarySpec::l0());
    const IndexReport r1 = maslov(first, BoundarySpec::l0());
    const IndexReport r2 = maslov_translated(second_raw, mid, l0t);
    // raw crossing sums add; the translated tail has no forced start crossing
    CHECK(rw.raw_maslov == r1.raw_maslov + r2.raw_maslov);
}

TEST_CASE("general-frame boundary agrees with the specialized kinds") {
    const SymplecticPath gamma = rotation_path(1.2 * M_PI);
    for (int which = 0; which < 3; ++which) {
        const BoundarySpec named = which == 0   ? BoundarySpec::l0()
                                   : which == 1 ? BoundarySpec::l1()
                                                : BoundarySpec::periodic();
        const BoundarySpec framed = BoundarySpec::general(named.frame_for(1));
        const IndexReport a = maslov(gamma, named);
        const IndexReport b = maslov(gamma, framed);
        CHECK(a.raw_maslov == b.raw_maslov);
        CHECK(a.nullity_at_end == b.nullity_at_end);
    }
}

TEST_CASE("multiplication rule i_{b1 x b2}(gamma P) = i_{P b1 x b2}(gamma)") {
    Rng rng(77);
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 1 + int(rng.below(2));
        const CoefficientPath b = sample_coefficient_path(300 + rep, n, 2, 1.4);
        const SymplecticPath gamma = matrizant(b, 2048);
        const Mat p = random_symplectic(rng, n);

        const LagrangianFrame beta1 = LagrangianFrame::alpha0(n);
        const LagrangianFrame beta2 = (rep % 2 == 0) ? LagrangianFrame::alpha0(n)
                                                     : LagrangianFrame::alpha1(n);
        const BoundarySpec lhs_spec =
            BoundarySpec::general(LagrangianFrame::product(beta1, beta2));
        const BoundarySpec rhs_spec = BoundarySpec::general(
            LagrangianFrame::product(LagrangianFrame::map(p, beta1), beta2));

        const IndexReport lhs = maslov_translated(gamma, p, lhs_spec);
        const IndexReport rhs = maslov(gamma, rhs_spec);
        CHECK(lhs.raw_maslov == rhs.raw_maslov);
    }
}

TEST_CASE("time-shifted periodic coefficients keep the theta indices") {
    for (std::uint64_t seed : {21ull, 22ull}) {
        const CoefficientPath b = sample_coefficient_path(seed, 1, 2, 1.3);
        const double t0 = 0.37 * b.tau();
        const CoefficientPath shifted = CoefficientPath::shifted(b, t0);
        const SymplecticPath gamma = matrizant(b, 2048);
        const SymplecticPath gamma1 = matrizant(shifted, 2048);
        for (double theta : {M_PI / 3, M_PI, 1.9 * M_PI}) {
            const IndexReport a = maslov(gamma, BoundarySpec::theta(theta));
            const IndexReport c = maslov(gamma1, BoundarySpec::theta(theta));
            CHECK(a.index == c.index);
            CHECK(a.nullity_at_end == c.nullity_at_end);
        }
    }
}
