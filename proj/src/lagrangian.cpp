#include "sympath/lagrangian.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace sympath {

namespace {

Mat doubled_form(int n) {
    Mat omega = Mat::Zero(4 * n, 4 * n);
    omega.topLeftCorner(2 * n, 2 * n) = -standard_J(n);
    omega.bottomRightCorner(2 * n, 2 * n) = standard_J(n);
    return omega;
}

/// Orthonormal basis of span(F1) ^ span(F2) on raw spans.
std::pair<int, CMat> span_intersection(const CMat& f1, const CMat& f2, double rank_tol) {
    if (f1.cols() == 0 || f2.cols() == 0) return {0, CMat(f1.rows(), 0)};
    CMat stacked(f1.rows(), f1.cols() + f2.cols());
    stacked << f1, f2;
    const int rank = numeric_rank(stacked, rank_tol);
    const int dim = int(f1.cols() + f2.cols()) - rank;
    if (dim <= 0) return {0, CMat(f1.rows(), 0)};

    CMat coeffs = null_space(stacked, rank_tol); // columns (a; b), f1 a + f2 b = 0
    CMat vectors = f1 * coeffs.topRows(f1.cols());
    // orthonormalize; the null space can over/under-resolve at the tolerance edge
    Eigen::JacobiSVD<CMat> svd(vectors, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    int kept = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * std::max(sv(0), 1e-300)) ++kept;
    return {dim, CMat(svd.matrixU().leftCols(std::min(kept, dim)))};
}

} // namespace

LagrangianFrame::LagrangianFrame(CMat span, SpaceTag tag, double rank_tol)
    : span_(std::move(span)), tag_(tag) {
    if (span_.rows() % 2 != 0 || span_.cols() * 2 != span_.rows())
        throw DegenerateFrame("LagrangianFrame: need a 2m x m frame");
    Eigen::JacobiSVD<CMat> svd(span_);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) <= rank_tol * sv(0))
        throw DegenerateFrame("LagrangianFrame: columns not linearly independent");
    if (isotropy_residual() > 1e-8 * std::max(1.0, sv(0) * sv(0)))
        throw DegenerateFrame("LagrangianFrame: span is not isotropic");
}

Mat LagrangianFrame::form_matrix() const {
    const int m = ambient_dim() / 2;
    return tag_ == SpaceTag::Single ? standard_J(m) : doubled_form(m / 2);
}

double LagrangianFrame::isotropy_residual() const {
    const Mat omega = form_matrix();
    CMat gram = (omega * span_.conjugate()).transpose() * span_;
    return inf_norm(gram);
}

LagrangianFrame LagrangianFrame::alpha0(int n) {
    CMat f = CMat::Zero(2 * n, n);
    f.bottomRows(n) = CMat::Identity(n, n);
    return {f, SpaceTag::Single};
}

LagrangianFrame LagrangianFrame::alpha1(int n) {
    CMat f = CMat::Zero(2 * n, n);
    f.topRows(n) = CMat::Identity(n, n);
    return {f, SpaceTag::Single};
}

LagrangianFrame LagrangianFrame::alpha_tilde(int j, int n) {
    const LagrangianFrame a = (j == 0 ? alpha0(n) : alpha1(n));
    return product(a, a);
}

LagrangianFrame LagrangianFrame::graph(const Mat& m) { return graph_complex(m.cast<Complex>()); }

LagrangianFrame LagrangianFrame::graph_complex(const CMat& m) {
    const int d = int(m.rows());
    CMat f(2 * d, d);
    f.topRows(d) = CMat::Identity(d, d);
    f.bottomRows(d) = m;
    return {f, SpaceTag::Doubled};
}

LagrangianFrame LagrangianFrame::graph_theta(double theta, int n) {
    const Complex phase = std::polar(1.0, theta);
    return graph_complex(CMat(phase * CMat::Identity(2 * n, 2 * n)));
}

LagrangianFrame LagrangianFrame::product(const LagrangianFrame& b1, const LagrangianFrame& b2) {
    if (b1.tag() != SpaceTag::Single || b2.tag() != SpaceTag::Single ||
        b1.ambient_dim() != b2.ambient_dim())
        throw AmbientMismatch("product: need two frames of the same single space");
    const int d = b1.ambient_dim();
    const int k1 = b1.dim(), k2 = b2.dim();
    CMat f = CMat::Zero(2 * d, k1 + k2);
    f.block(0, 0, d, k1) = b1.span();
    f.block(d, k1, d, k2) = b2.span();
    return {f, SpaceTag::Doubled};
}

LagrangianFrame LagrangianFrame::map(const Mat& m, const LagrangianFrame& b) {
    if (b.tag() != SpaceTag::Single || m.rows() != b.ambient_dim())
        throw AmbientMismatch("map: need a single-space frame matching the matrix");
    return {CMat(m.cast<Complex>() * b.span()), SpaceTag::Single};
}

Complex symplectic_pairing(const CVec& u, const CVec& v, SpaceTag tag) {
    const int half = int(u.size()) / 2;
    const Mat omega =
        tag == SpaceTag::Single ? standard_J(half) : doubled_form(half / 2);
    return ((omega * u.conjugate()).transpose() * v)(0, 0);
}

std::pair<int, CMat> intersection_dim(const LagrangianFrame& f1, const LagrangianFrame& f2,
                                      double rank_tol) {
    if (f1.tag() != f2.tag() || f1.ambient_dim() != f2.ambient_dim())
        throw AmbientMismatch("intersection_dim: frames live in different spaces");
    return span_intersection(f1.span(), f2.span(), rank_tol);
}

int triple_intersection_dim(const LagrangianFrame& a, const LagrangianFrame& b,
                            const LagrangianFrame& d, double rank_tol) {
    auto [dim_ab, basis_ab] = intersection_dim(a, b, rank_tol);
    if (dim_ab == 0) return 0;
    return span_intersection(basis_ab, d.span(), rank_tol).first;
}

CMat triple_form(const LagrangianFrame& alpha, const LagrangianFrame& beta,
                 const LagrangianFrame& delta, double rank_tol) {
    if (alpha.tag() != beta.tag() || alpha.tag() != delta.tag() ||
        alpha.ambient_dim() != beta.ambient_dim() || alpha.ambient_dim() != delta.ambient_dim())
        throw AmbientMismatch("triple_form: frames live in different spaces");

    const int rows = alpha.ambient_dim();
    CMat sum(rows, beta.dim() + delta.dim());
    sum << beta.span(), delta.span();

    // alpha ^ (beta + delta): kernel of the projection onto the complement
    Eigen::JacobiSVD<CMat> sum_svd(sum, Eigen::ComputeThinU);
    const auto& sv = sum_svd.singularValues();
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * std::max(sv(0), 1e-300)) ++r;
    CMat u_r = sum_svd.matrixU().leftCols(r);
    CMat residual_map = alpha.span() - u_r * (u_r.adjoint() * alpha.span());
    CMat coeffs = null_space_scaled(residual_map, rank_tol, operator_norm(real_embedding(alpha.span())));
    const int k = int(coeffs.cols());
    if (k == 0) return CMat(0, 0);

    CMat basis = alpha.span() * coeffs;
    { // orthonormalize the basis of the intersection
        Eigen::JacobiSVD<CMat> svd(basis, Eigen::ComputeThinU);
        basis = svd.matrixU().leftCols(k);
    }

    // split x_j = -y_j + z_j, y_j in beta, z_j in delta: minimum-norm solve
    Eigen::JacobiSVD<CMat> split(sum, Eigen::ComputeThinU | Eigen::ComputeThinV);
    CMat q(k, k);
    const SpaceTag tag = alpha.tag();
    for (int j = 0; j < k; ++j) {
        CVec w = split.solve(basis.col(j));
        CVec y = -beta.span() * w.head(beta.dim());
        const double fit = (sum * w - basis.col(j)).norm();
        if (fit > 1e-6)
            throw DegenerateFrame("triple_form: basis vector escapes beta + delta");
        for (int i = 0; i < k; ++i)
            q(i, j) = symplectic_pairing(basis.col(i), y, tag);
    }
    if (inf_norm(CMat(q - q.adjoint())) > 1e-7 * std::max(1.0, inf_norm(q)))
        throw DegenerateFrame("triple_form: form is not Hermitian");
    return 0.5 * (q + CMat(q.adjoint()));
}

} // namespace sympath
