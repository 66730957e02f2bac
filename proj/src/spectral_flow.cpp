#include "sympath/spectral_flow.hpp"

#include <cmath>

namespace sympath {

RelativeMorse relative_morse(const Mat& a, const Mat& b, int grid, double zero_tol) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw DimensionMismatch("relative_morse: matrices must be square of equal size");
    if (inf_norm(Mat(a - a.transpose())) > 10 * zero_tol ||
        inf_norm(Mat(b - b.transpose())) > 10 * zero_tol)
        throw NotSymmetric("relative_morse: inputs must be symmetric");
    {
        const auto bev = jacobi_eigenvalues(Mat(0.5 * (b + b.transpose())));
        if (!bev.empty() && bev.front() < -10 * zero_tol)
            throw NotPositiveDefinite("relative_morse: B must be positive semidefinite");
    }

    const int dim = int(a.rows());
    const double radius = operator_norm(b); // Lipschitz bound on d lambda / ds

    for (int attempt = 0;; ++attempt) {
        const int steps = grid << attempt;
        RelativeMorse out;
        out.grid.resize(std::size_t(steps) + 1);
        out.tracks.assign(std::size_t(dim), std::vector<double>(std::size_t(steps) + 1));

        bool ambiguous = false;
        std::vector<double> previous;
        for (int i = 0; i <= steps; ++i) {
            const double s = double(i) / steps;
            out.grid[std::size_t(i)] = s;
            const auto ev = jacobi_eigenvalues(Mat(a - s * b));
            if (i > 0) {
                // sorted matching must respect the Lipschitz radius
                const double allowed = 1.01 * radius / steps + 10 * zero_tol;
                for (int l = 0; l < dim; ++l)
                    if (std::abs(ev[std::size_t(l)] - previous[std::size_t(l)]) > allowed)
                        ambiguous = true;
            }
            for (int l = 0; l < dim; ++l) out.tracks[std::size_t(l)][std::size_t(i)] = ev[std::size_t(l)];
            previous = ev;
        }
        if (ambiguous && attempt < 2) continue;

        for (int l = 0; l < dim; ++l) {
            if (std::abs(out.tracks[std::size_t(l)].front()) <= zero_tol ||
                std::abs(out.tracks[std::size_t(l)].back()) <= zero_tol)
                throw DegenerateEndpoint("relative_morse: eigenvalue vanishes at s = 0 or 1");
        }

        // count tracks that leave zero downward
        int crossings = 0;
        for (int l = 0; l < dim; ++l) {
            const auto& tr = out.tracks[std::size_t(l)];
            bool was_positive = tr.front() > zero_tol;
            if (was_positive && tr.back() < -zero_tol) ++crossings;
        }
        out.index = crossings;
        return out;
    }
}

} // namespace sympath
