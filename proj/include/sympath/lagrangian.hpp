#pragma once

#include "sympath/numerics.hpp"
#include "sympath/symplectic.hpp"

namespace sympath {

/// Which symplectic form the frame lives in: (C^{2n}, w0) or the doubled
/// space (C^{2n} + C^{2n}, (-w0) + w0) used for graphs of symplectic maps.
enum class SpaceTag { Single, Doubled };

/// Complex frame spanning a Lagrangian subspace: a 2m x m matrix of full
/// column rank whose span is isotropic for the tagged form.
class LagrangianFrame {
public:
    LagrangianFrame(CMat span, SpaceTag tag, double rank_tol = tol::rank);

    int ambient_dim() const { return int(span_.rows()); }
    int dim() const { return int(span_.cols()); }
    SpaceTag tag() const { return tag_; }
    const CMat& span() const { return span_; }

    /// Matrix of the tagged symplectic form, so w(u,v) = (Omega conj(u)) . v.
    Mat form_matrix() const;

    /// Isotropy residual max_ij |F^H Omega^T F|; small for a Lagrangian frame.
    double isotropy_residual() const;

    // Named subspaces of (C^{2n}, w0)
    static LagrangianFrame alpha0(int n); // {0} x C^n
    static LagrangianFrame alpha1(int n); // C^n x {0}

    // Named subspaces of the doubled space
    static LagrangianFrame alpha_tilde(int j, int n);  // alpha_j x alpha_j
    static LagrangianFrame graph(const Mat& m);        // Graph(M), M real symplectic
    static LagrangianFrame graph_complex(const CMat& m);
    static LagrangianFrame graph_theta(double theta, int n); // Graph(e^{i theta} I)
    /// beta1 x beta2 from two single-space frames.
    static LagrangianFrame product(const LagrangianFrame& b1, const LagrangianFrame& b2);
    /// Image of a single-space frame under a symplectic matrix.
    static LagrangianFrame map(const Mat& m, const LagrangianFrame& b);

private:
    CMat span_;
    SpaceTag tag_;
};

/// w(u, v) for the tagged form of the given ambient dimension.
Complex symplectic_pairing(const CVec& u, const CVec& v, SpaceTag tag);

/// dim(span F1 ^ span F2) together with an orthonormal basis of the
/// intersection. Throws AmbientMismatch on incompatible frames.
std::pair<int, CMat> intersection_dim(const LagrangianFrame& f1, const LagrangianFrame& f2,
                                      double rank_tol = tol::rank);

/// dim of the triple intersection of three frames in the same space.
int triple_intersection_dim(const LagrangianFrame& a, const LagrangianFrame& b,
                            const LagrangianFrame& d, double rank_tol = tol::rank);

/// Hermitian form Q(alpha, beta; delta) on alpha ^ (beta + delta):
/// basis vectors x_j are split x_j = -y_j + z_j with y_j in beta, z_j in
/// delta (minimum-norm solve on the stacked frame), and
/// Q(x_i, x_j) = w(x_i, y_j). The value does not depend on the split.
CMat triple_form(const LagrangianFrame& alpha, const LagrangianFrame& beta,
                 const LagrangianFrame& delta, double rank_tol = tol::rank);

} // namespace sympath
