#include "sympath/numerics.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace sympath {

std::vector<double> jacobi_eigenvalues(const Mat& s, double threshold) {
    const int d = int(s.rows());
    Mat a = s;
    if (d == 0) return {};
    if (d == 1) return {a(0, 0)};

    const double scale = a.norm();
    const double stop = (scale > 0 ? threshold * scale : threshold);
    const int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) off += 2 * a(p, q) * a(p, q);
        if (std::sqrt(off) <= stop) break;

        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= stop / d) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                // stable tangent of the rotation angle
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < d; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> ev(d);
    for (int i = 0; i < d; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

static SignatureTriple count_inertia(std::vector<double> ev, double zero_tol) {
    SignatureTriple sig;
    for (double v : ev) {
        if (v > zero_tol)
            ++sig.m_plus;
        else if (v < -zero_tol)
            ++sig.m_minus;
        else
            ++sig.m_zero;
    }
    sig.eigenvalues = std::move(ev);
    return sig;
}

SignatureTriple signature(const Mat& s, double zero_tol) {
    if (s.rows() != s.cols()) throw NotSymmetric("signature: matrix not square");
    if (inf_norm(Mat(s - s.transpose())) > 10 * zero_tol)
        throw NotSymmetric("signature: symmetry residual exceeds 10*zero_tol");
    Mat sym = 0.5 * (s + s.transpose());
    return count_inertia(jacobi_eigenvalues(sym), zero_tol);
}

SignatureTriple signature(const CMat& h, double zero_tol) {
    if (h.rows() != h.cols()) throw NotSymmetric("signature: matrix not square");
    if (inf_norm(CMat(h - h.adjoint())) > 10 * zero_tol)
        throw NotSymmetric("signature: Hermitian residual exceeds 10*zero_tol");
    CMat herm = 0.5 * (h + h.adjoint());
    std::vector<double> ev = jacobi_eigenvalues(real_embedding(herm));
    // the embedding doubles every eigenvalue; take each pair once
    std::vector<double> halved;
    halved.reserve(ev.size() / 2);
    for (std::size_t i = 0; i + 1 < ev.size(); i += 2) halved.push_back(0.5 * (ev[i] + ev[i + 1]));
    return count_inertia(std::move(halved), zero_tol);
}

Mat real_embedding(const CMat& m) {
    const int r = int(m.rows()), c = int(m.cols());
    Mat e(2 * r, 2 * c);
    e.topLeftCorner(r, c) = m.real();
    e.topRightCorner(r, c) = -m.imag();
    e.bottomLeftCorner(r, c) = m.imag();
    e.bottomRightCorner(r, c) = m.real();
    return e;
}

double inf_norm(const Mat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }
double inf_norm(const CMat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double operator_norm(const Mat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(a);
    return svd.singularValues()(0);
}

template <class M>
static int rank_impl(const M& a, double rank_tol) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<M> svd(a);
    const auto& sv = svd.singularValues();
    const double cut = rank_tol * std::max(sv(0), 1e-300);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return r;
}

int numeric_rank(const Mat& a, double rank_tol) { return rank_impl(a, rank_tol); }
int numeric_rank(const CMat& a, double rank_tol) { return rank_impl(a, rank_tol); }

double sigma_min(const Mat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(a);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

double sigma_min(const CMat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMat> svd(a);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

template <class M>
static M null_space_impl(const M& a, double rank_tol) {
    Eigen::JacobiSVD<M> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = (sv.size() > 0 ? rank_tol * std::max(sv(0), 1e-300) : 0.0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return svd.matrixV().rightCols(a.cols() - r);
}

CMat null_space(const CMat& a, double rank_tol) { return null_space_impl(a, rank_tol); }
Mat null_space(const Mat& a, double rank_tol) { return null_space_impl(a, rank_tol); }

CMat null_space_scaled(const CMat& a, double rank_tol, double scale_ref) {
    Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = rank_tol * std::max(scale_ref, 1e-300);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return svd.matrixV().rightCols(a.cols() - r);
}

Mat random_symmetric(Rng& rng, int dim, double scale) {
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) m(i, j) = m(j, i) = rng.uniform(-scale, scale);
    return m;
}

} // namespace sympath
