#include "sympath/maslov.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>

namespace sympath {

namespace {

int rank_floored(const Mat& m, double rank_tol, double floor_scale) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    const double cut = rank_tol * std::max(sv(0), floor_scale);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return r;
}

Mat null_space_floored(const Mat& m, double rank_tol, double floor_scale) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = (sv.size() ? rank_tol * std::max(sv(0), floor_scale) : 0.0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

/// Everything the crossing scan needs to know about a path; the translated
/// path gamma(t) P reuses the same machinery with a different value map.
struct PathView {
    int n = 0;
    double tau = 0;
    const std::vector<SymplecticPath::Sample>* samples = nullptr;
    std::function<Mat(double)> value;
    const CoefficientPath* b = nullptr;
};

class CrossingEngine {
public:
    CrossingEngine(PathView pv, const BoundarySpec& w, const MaslovOptions& opts)
        : pv_(std::move(pv)), w_(w), opts_(opts) {
        if (w_.kind == BoundaryKind::Theta) {
            double th = std::fmod(w_.theta_value, 2 * M_PI);
            if (th < 0) th += 2 * M_PI;
            if (th == 0.0)
                throw DimensionMismatch("maslov: theta boundary excludes theta = 0 mod 2 pi");
            phase_ = std::polar(1.0, th);
        }
        if (w_.kind == BoundaryKind::General) {
            if (!w_.frame) throw DimensionMismatch("maslov: general boundary needs a frame");
            if (w_.frame->tag() != SpaceTag::Doubled ||
                w_.frame->ambient_dim() != 4 * pv_.n)
                throw AmbientMismatch("maslov: boundary frame does not match the path");
            frame_is_real_ = inf_norm(Mat(w_.frame->span().imag())) < 1e-14;
        }
    }

    IndexReport run();

private:
    PathView pv_;
    BoundarySpec w_;
    MaslovOptions opts_;
    Complex phase_{1.0, 0.0};
    bool frame_is_real_ = true;
    double kern_tol_ = 0;

    Mat indicator(const Mat& g) const;
    bool has_sign() const {
        return w_.kind != BoundaryKind::Theta &&
               (w_.kind != BoundaryKind::General || frame_is_real_);
    }
    double sigma_at(double t) const { return sigma_min(indicator(pv_.value(t))); }
    double det_at(double t) const { return indicator(pv_.value(t)).determinant(); }

    /// Kernel of the indicator as complex x-vectors with (x, g x) in the
    /// intersection of the graph with the boundary.
    CMat kernel_x(const Mat& g) const;

    SignatureTriple crossing_form(double t, const Mat& g, const CMat& x) const;

    double refine_sign(double lo, double hi) const;
    double refine_min(double lo, double hi) const;
};

Mat CrossingEngine::indicator(const Mat& g) const {
    const int n = pv_.n;
    switch (w_.kind) {
    case BoundaryKind::L0: return g.topRightCorner(n, n);
    case BoundaryKind::L1: return g.bottomLeftCorner(n, n);
    case BoundaryKind::L0xL1: return g.bottomRightCorner(n, n);
    case BoundaryKind::L1xL0: return g.topLeftCorner(n, n);
    case BoundaryKind::Periodic: return g - Mat::Identity(2 * n, 2 * n);
    case BoundaryKind::Theta: {
        CMat m = g.cast<Complex>() - phase_ * CMat::Identity(2 * n, 2 * n);
        return real_embedding(m);
    }
    case BoundaryKind::General: {
        CMat graph(4 * n, 2 * n);
        graph.topRows(2 * n) = CMat::Identity(2 * n, 2 * n);
        graph.bottomRows(2 * n) = g.cast<Complex>();
        CMat stacked(4 * n, 4 * n);
        stacked << w_.frame->span(), -graph;
        if (frame_is_real_) return stacked.real();
        return real_embedding(stacked);
    }
    }
    throw DimensionMismatch("maslov: unknown boundary kind");
}

CMat CrossingEngine::kernel_x(const Mat& g) const {
    const int n = pv_.n;
    const double rt = opts_.rank_tol;
    auto lift = [n](const Mat& y, bool top) {
        CMat x = CMat::Zero(2 * n, y.cols());
        if (top)
            x.topRows(n) = y.cast<Complex>();
        else
            x.bottomRows(n) = y.cast<Complex>();
        return x;
    };
    switch (w_.kind) {
    case BoundaryKind::L0: return lift(null_space_floored(g.topRightCorner(n, n), rt, kern_tol_ / rt), false);
    case BoundaryKind::L1: return lift(null_space_floored(g.bottomLeftCorner(n, n), rt, kern_tol_ / rt), true);
    case BoundaryKind::L0xL1: return lift(null_space_floored(g.bottomRightCorner(n, n), rt, kern_tol_ / rt), false);
    case BoundaryKind::L1xL0: return lift(null_space_floored(g.topLeftCorner(n, n), rt, kern_tol_ / rt), true);
    case BoundaryKind::Periodic:
        return null_space_floored(Mat(g - Mat::Identity(2 * n, 2 * n)), rt, kern_tol_ / rt)
            .cast<Complex>();
    case BoundaryKind::Theta: {
        Mat e = indicator(g);
        Mat nr = null_space_floored(e, rt, kern_tol_ / rt); // pairs (a; b) <-> a + i b
        const int k = int(nr.cols()) / 2;
        if (k == 0) return CMat(2 * n, 0);
        CMat xs(2 * n, nr.cols());
        xs = nr.topRows(2 * n).cast<Complex>() +
             Complex(0, 1) * nr.bottomRows(2 * n).cast<Complex>();
        // collapse the complex-duplicated columns to a complex basis
        Eigen::JacobiSVD<CMat> svd(xs, Eigen::ComputeThinU);
        return svd.matrixU().leftCols(k);
    }
    case BoundaryKind::General: {
        if (frame_is_real_) {
            Mat nr = null_space_floored(indicator(g), rt, kern_tol_ / rt);
            return nr.bottomRows(2 * n).cast<Complex>(); // the b-part is x
        }
        Mat e = indicator(g); // embedding of the 4n x 4n complex stacked matrix
        Mat nr = null_space_floored(e, rt, kern_tol_ / rt);
        const int k = int(nr.cols()) / 2;
        if (k == 0) return CMat(2 * n, 0);
        CMat w = nr.topRows(4 * n).cast<Complex>() +
                 Complex(0, 1) * nr.bottomRows(4 * n).cast<Complex>();
        CMat xs = w.bottomRows(2 * n);
        Eigen::JacobiSVD<CMat> svd(xs, Eigen::ComputeThinU);
        return svd.matrixU().leftCols(k);
    }
    }
    throw DimensionMismatch("maslov: unknown boundary kind");
}

SignatureTriple CrossingEngine::crossing_form(double t, const Mat& g, const CMat& x) const {
    if (!pv_.b)
        throw MissingCoefficientPath(
            "maslov: crossing form requires the source coefficient path");
    const CMat gx = g.cast<Complex>() * x;
    const CMat bt = (*pv_.b)(t).cast<Complex>();
    CMat q = gx.adjoint() * bt * gx;
    q = 0.5 * (q + CMat(q.adjoint()));
    return signature(q, opts_.zero_tol * std::max(1.0, inf_norm(q)));
}

double CrossingEngine::refine_sign(double lo, double hi) const {
    double flo = det_at(lo);
    const double width_goal = opts_.refine_tol * pv_.tau;
    while (hi - lo > width_goal) {
        const double mid = 0.5 * (lo + hi);
        const double fm = det_at(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double CrossingEngine::refine_min(double lo, double hi) const {
    const double width_goal = opts_.refine_tol * pv_.tau;
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = sigma_at(x1), f2 = sigma_at(x2);
    while (b - a > width_goal) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = sigma_at(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = sigma_at(x2);
        }
    }
    return 0.5 * (a + b);
}

IndexReport CrossingEngine::run() {
    const auto& samples = *pv_.samples;
    const int count = int(samples.size());
    const double tau = pv_.tau;

    std::vector<double> sig_min(count), dets(count);
    double indicator_scale = 0, slope = 0, h_max = 0;
    Mat prev;
    for (int i = 0; i < count; ++i) {
        const Mat ind = indicator(samples[i].gamma);
        Eigen::JacobiSVD<Mat> svd(ind);
        const auto& sv = svd.singularValues();
        sig_min[i] = sv(sv.size() - 1);
        indicator_scale = std::max(indicator_scale, sv(0));
        if (has_sign()) dets[i] = ind.determinant();
        if (i > 0) {
            const double dt = samples[i].t - samples[i - 1].t;
            h_max = std::max(h_max, dt);
            slope = std::max(slope, (ind - prev).norm() / dt);
        }
        prev = ind;
    }
    kern_tol_ = opts_.rank_tol * std::max(indicator_scale, 1.0);
    const double detect_tol = std::max(8 * slope * h_max, 4 * kern_tol_);

    // an indicator that vanishes along a stretch of the path has no isolated
    // crossings to count
    int tiny = 0;
    for (double s : sig_min)
        if (s < kern_tol_) ++tiny;
    if (tiny > count / 4)
        throw DegenerateCrossing(0.0, "maslov: crossing indicator is degenerate along the path");

    // endpoint crossings
    const CMat x0 = kernel_x(samples.front().gamma);
    const CMat xend = kernel_x(samples.back().gamma);

    // interior candidates
    std::vector<double> candidates;
    const double guard = std::max(1e-8 * tau, 16 * opts_.refine_tol * tau);
    if (has_sign()) {
        for (int i = 0; i < count - 1; ++i) {
            if (dets[i] == 0.0 || dets[i + 1] == 0.0) continue;
            if ((dets[i] > 0) != (dets[i + 1] > 0))
                candidates.push_back(refine_sign(samples[i].t, samples[i + 1].t));
        }
    }
    for (int i = 1; i < count - 1; ++i) {
        const bool local_min = sig_min[i] <= sig_min[i - 1] && sig_min[i] <= sig_min[i + 1];
        if ((local_min && sig_min[i] < detect_tol) || sig_min[i] < kern_tol_)
            candidates.push_back(refine_min(samples[i - 1].t, samples[i + 1].t));
    }

    std::sort(candidates.begin(), candidates.end());
    std::vector<double> times;
    for (double t : candidates) {
        if (t < guard || t > tau - guard) continue; // endpoints handled directly
        if (!times.empty() && t - times.back() < std::max(1e-8 * tau, 32 * opts_.refine_tol * tau))
            continue;
        times.push_back(t);
    }

    IndexReport report;
    int raw = 0;

    auto add_crossing = [&](double t, const Mat& g, const CMat& x, bool at_end) {
        const int k = int(x.cols());
        if (k == 0) return;
        SignatureTriple sig = crossing_form(t, g, x);
        if (sig.m_zero > 0)
            throw DegenerateCrossing(t, "maslov: crossing form is degenerate at t = " +
                                            std::to_string(t));
        raw += at_end ? -sig.m_minus : sig.m_plus;
        report.crossings.push_back({t, k, std::move(sig)});
    };

    add_crossing(0.0, samples.front().gamma, x0, false);
    for (double t : times) {
        const Mat g = pv_.value(t);
        const CMat x = kernel_x(g);
        add_crossing(t, g, x, false);
    }
    add_crossing(tau, samples.back().gamma, xend, true);

    // isolation sanity: refined crossings closer than 10 h cannot be trusted
    for (std::size_t i = 1; i < report.crossings.size(); ++i)
        if (report.crossings[i].t - report.crossings[i - 1].t < 10 * h_max &&
            report.crossings[i].dim > 0)
            throw DegenerateCrossing(report.crossings[i].t,
                                     "maslov: crossings are not isolated on the sample grid");

    report.raw_maslov = raw;
    report.index = raw - (w_.subtracts_n() ? pv_.n : 0);
    report.nullity_at_end = int(xend.cols());
    return report;
}

PathView view_of(const SymplecticPath& gamma) {
    PathView pv;
    pv.n = gamma.n();
    pv.tau = gamma.tau();
    pv.samples = &gamma.samples();
    pv.value = [&gamma](double t) { return gamma.eval(t); };
    pv.b = gamma.source().get();
    return pv;
}

} // namespace

IndexReport maslov(const SymplecticPath& gamma, const BoundarySpec& w,
                   const MaslovOptions& opts) {
    CrossingEngine engine(view_of(gamma), w, opts);
    return engine.run();
}

IndexReport maslov_translated(const SymplecticPath& gamma, const Mat& p, const BoundarySpec& w,
                              const MaslovOptions& opts) {
    if (check_symplectic(p) > tol::symplectic)
        throw NotSymplectic("maslov_translated: the translation must be symplectic");
    auto translated = std::make_shared<std::vector<SymplecticPath::Sample>>();
    translated->reserve(gamma.samples().size());
    for (const auto& s : gamma.samples()) translated->push_back({s.t, Mat(s.gamma * p)});
    PathView pv;
    pv.n = gamma.n();
    pv.tau = gamma.tau();
    pv.samples = translated.get();
    pv.value = [&gamma, p](double t) { return Mat(gamma.eval(t) * p); };
    pv.b = gamma.source().get();
    CrossingEngine engine(std::move(pv), w, opts);
    return engine.run();
}

int nullity_of(const Mat& m, const BoundarySpec& w, double rank_tol) {
    const int n = int(m.rows()) / 2;
    auto kernel_dim = [rank_tol](const Mat& block) {
        return int(block.cols()) - rank_floored(block, rank_tol, 1.0);
    };
    switch (w.kind) {
    case BoundaryKind::L0: return kernel_dim(m.topRightCorner(n, n));
    case BoundaryKind::L1: return kernel_dim(m.bottomLeftCorner(n, n));
    case BoundaryKind::L0xL1: return kernel_dim(m.bottomRightCorner(n, n));
    case BoundaryKind::L1xL0: return kernel_dim(m.topLeftCorner(n, n));
    case BoundaryKind::Periodic: return kernel_dim(Mat(m - Mat::Identity(2 * n, 2 * n)));
    case BoundaryKind::Theta: return nullity_theta(m, w.theta_value, rank_tol);
    case BoundaryKind::General: {
        CMat graph(4 * n, 2 * n);
        graph.topRows(2 * n) = CMat::Identity(2 * n, 2 * n);
        graph.bottomRows(2 * n) = m.cast<Complex>();
        CMat stacked(4 * n, 4 * n);
        stacked << w.frame->span(), -graph;
        Mat e = real_embedding(stacked);
        return (int(e.cols()) - rank_floored(e, rank_tol, 1.0)) / 2;
    }
    }
    throw DimensionMismatch("nullity_of: unknown boundary kind");
}

EndpointNullities nullities(const Mat& m, double rank_tol) {
    if (check_symplectic(m) > tol::symplectic)
        throw NotSymplectic("nullities: matrix is not symplectic");
    EndpointNullities out;
    out.l0 = nullity_of(m, BoundarySpec::l0(), rank_tol);
    out.l1 = nullity_of(m, BoundarySpec::l1(), rank_tol);
    out.l0xl1 = nullity_of(m, BoundarySpec::l0xl1(), rank_tol);
    out.l1xl0 = nullity_of(m, BoundarySpec::l1xl0(), rank_tol);
    out.periodic = nullity_of(m, BoundarySpec::periodic(), rank_tol);
    return out;
}

int nullity_theta(const Mat& m, double theta, double rank_tol) {
    const int d = int(m.rows());
    CMat shifted = m.cast<Complex>() - std::polar(1.0, theta) * CMat::Identity(d, d);
    Mat e = real_embedding(shifted);
    return (int(e.cols()) - rank_floored(e, rank_tol, 1.0)) / 2;
}

IndexSuite index_suite(const SymplecticPath& gamma, const MaslovOptions& opts) {
    if (!gamma.source())
        throw MissingCoefficientPath("index_suite: the path must carry its coefficients");
    IndexSuite suite;
    suite.l0 = maslov(gamma, BoundarySpec::l0(), opts);
    suite.l1 = maslov(gamma, BoundarySpec::l1(), opts);
    suite.l0xl1 = maslov(gamma, BoundarySpec::l0xl1(), opts);
    suite.l1xl0 = maslov(gamma, BoundarySpec::l1xl0(), opts);
    suite.periodic = maslov(gamma, BoundarySpec::periodic(), opts);
    suite.end_nullities = nullities(gamma.endpoint(), opts.rank_tol);
    return suite;
}

} // namespace sympath
