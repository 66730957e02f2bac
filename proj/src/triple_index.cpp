#include "sympath/triple_index.hpp"

namespace sympath {

int triple_index(const LagrangianFrame& alpha, const LagrangianFrame& beta,
                 const LagrangianFrame& delta, double rank_tol) {
    const CMat q = triple_form(alpha, beta, delta, rank_tol);
    const SignatureTriple sig = signature(q);
    const int dim_ad = intersection_dim(alpha, delta, rank_tol).first;
    const int dim_abd = triple_intersection_dim(alpha, beta, delta, rank_tol);
    return sig.m_plus + dim_ad - dim_abd;
}

int hormander(const LagrangianFrame& lambda1, const LagrangianFrame& lambda2,
              const LagrangianFrame& mu1, const LagrangianFrame& mu2, double rank_tol) {
    return triple_index(lambda1, mu1, mu2, rank_tol) - triple_index(lambda2, mu1, mu2, rank_tol);
}

} // namespace sympath
