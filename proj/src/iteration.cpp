#include "sympath/iteration.hpp"

#include <algorithm>
#include <cmath>

namespace sympath {

SymplecticPath concat(const SymplecticPath& gamma1, const SymplecticPath& gamma2) {
    if (gamma1.n() != gamma2.n())
        throw DimensionMismatch("concat: paths have different half-dimensions");
    const double tau1 = gamma1.tau(), tau2 = gamma2.tau();
    const Mat mid = gamma1.endpoint();

    std::vector<SymplecticPath::Sample> samples = gamma1.samples();
    for (const auto& s : gamma2.samples()) {
        if (s.t == 0.0) continue;
        samples.push_back({tau1 + s.t, Mat(s.gamma * mid)});
    }

    auto g1 = std::make_shared<SymplecticPath>(gamma1);
    auto g2 = std::make_shared<SymplecticPath>(gamma2);
    auto eval = [g1, g2, tau1, mid](double t) -> Mat {
        if (t <= tau1) return g1->eval(t);
        return g2->eval(t - tau1) * mid;
    };

    std::shared_ptr<const CoefficientPath> source;
    if (gamma1.source() && gamma2.source()) {
        auto b1 = gamma1.source();
        auto b2 = gamma2.source();
        source = std::make_shared<CoefficientPath>(
            gamma1.n(), tau1 + tau2,
            [b1, b2, tau1](double t) { return t <= tau1 ? (*b1)(t) : (*b2)(t - tau1); },
            CoefficientPath::Kind::Derived);
    }
    return SymplecticPath(gamma1.n(), tau1 + tau2, std::move(samples), std::move(source), eval);
}

SymplecticPath brake_iterate(const SymplecticPath& gamma, int k) {
    if (k < 1) throw DimensionMismatch("brake_iterate: k must be positive");
    if (k == 1) return gamma;

    const int n = gamma.n();
    const double s = gamma.tau();
    const Mat nn = standard_N(n);
    const Mat end = gamma.endpoint();
    const Mat p = nn * end.inverse() * nn * end; // gamma(2S)

    auto base = std::make_shared<SymplecticPath>(gamma);
    auto powers = std::make_shared<std::vector<Mat>>();
    powers->push_back(Mat::Identity(2 * n, 2 * n));
    for (int j = 1; j <= (k + 1) / 2 + 1; ++j) powers->push_back(Mat((*powers)[j - 1] * p));

    auto eval = [base, powers, nn, s, k](double t) -> Mat {
        const int branch = std::clamp(int(std::floor(t / s)), 0, k - 1);
        const int j = branch / 2;
        if (branch % 2 == 0) return base->eval(t - 2 * j * s) * (*powers)[std::size_t(j)];
        return nn * base->eval((2 * j + 2) * s - t) * nn * (*powers)[std::size_t(j) + 1];
    };

    std::vector<SymplecticPath::Sample> samples;
    const auto& bs = gamma.samples();
    samples.reserve(bs.size() * std::size_t(k));
    for (int branch = 0; branch < k; ++branch) {
        const int j = branch / 2;
        if (branch % 2 == 0) {
            for (const auto& smp : bs) {
                const double t = 2 * j * s + smp.t;
                if (!samples.empty() && t <= samples.back().t) continue;
                samples.push_back({t, Mat(smp.gamma * (*powers)[std::size_t(j)])});
            }
        } else {
            for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
                const double t = (2 * j + 2) * s - it->t;
                if (!samples.empty() && t <= samples.back().t) continue;
                samples.push_back({t, Mat(nn * it->gamma * nn * (*powers)[std::size_t(j) + 1])});
            }
        }
    }
    // snap the final time exactly onto k S
    samples.back().t = k * s;

    std::shared_ptr<const CoefficientPath> source;
    if (gamma.source()) {
        const CoefficientPath extended = brake_extend(*gamma.source());
        auto ext = std::make_shared<CoefficientPath>(extended);
        source = std::make_shared<CoefficientPath>(
            n, k * s, [ext](double t) { return (*ext)(t); }, CoefficientPath::Kind::Derived,
            /*periodic=*/false, /*brake=*/false);
    }
    return SymplecticPath(n, k * s, std::move(samples), std::move(source), eval);
}

SymplecticPath tilde_shift(const SymplecticPath& gamma) {
    const int n = gamma.n();
    const double s = gamma.tau();
    const Mat nn = standard_N(n);
    const Mat end_inv = gamma.endpoint().inverse();

    auto base = std::make_shared<SymplecticPath>(gamma);
    auto eval = [base, nn, end_inv, s](double t) -> Mat {
        return nn * base->eval(s - t) * end_inv * nn;
    };

    std::vector<SymplecticPath::Sample> samples;
    const auto& bs = gamma.samples();
    samples.reserve(bs.size());
    for (auto it = bs.rbegin(); it != bs.rend(); ++it)
        samples.push_back({s - it->t, Mat(nn * it->gamma * end_inv * nn)});
    samples.front().t = 0.0;
    samples.back().t = s;

    std::shared_ptr<const CoefficientPath> source;
    if (gamma.source()) {
        auto b = gamma.source();
        source = std::make_shared<CoefficientPath>(
            n, s, [b, nn, s](double t) { return Mat(nn * (*b)(s - t) * nn); },
            CoefficientPath::Kind::Derived, false, false);
    }
    return SymplecticPath(n, s, std::move(samples), std::move(source), eval);
}

} // namespace sympath
