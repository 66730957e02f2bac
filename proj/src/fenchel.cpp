#include "sympath/fenchel.hpp"

#include <Eigen/LU>
#include <cmath>

namespace sympath {

FenchelResult fenchel(const ConvexMap& f, const Vec& y, double grad_tol) {
    Vec x = Vec::Zero(f.dimension);
    double obj = f.value(x) - x.dot(y); // minimize F(x) - x . y
    for (int it = 0; it < 100; ++it) {
        const Vec g = f.gradient(x) - y;
        if (g.norm() <= grad_tol) {
            FenchelResult out;
            out.maximizer = x;
            out.value = x.dot(y) - f.value(x);
            out.residual = g.norm();
            return out;
        }
        const Mat h = f.hessian(x);
        Vec step = -h.fullPivLu().solve(g);
        // step halving until the objective decreases
        double scale = 1.0;
        for (int half = 0; half < 60; ++half) {
            const Vec trial = x + scale * step;
            const double trial_obj = f.value(trial) - trial.dot(y);
            if (trial_obj < obj) {
                x = trial;
                obj = trial_obj;
                break;
            }
            scale *= 0.5;
            if (half == 59)
                throw NoConvergence("fenchel: line search stalled");
        }
    }
    throw NoConvergence("fenchel: Newton did not converge in 100 iterations");
}

} // namespace sympath
