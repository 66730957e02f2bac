#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sympath/errors.hpp"

namespace sympath {

using Mat  = Eigen::MatrixXd;
using Vec  = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

namespace tol {
constexpr double symplectic = 1e-10;
constexpr double rank       = 1e-8;   // relative to the largest singular value
constexpr double zero       = 1e-9;
constexpr double jacobi     = 1e-13;
} // namespace tol

/// Inertia of a symmetric/Hermitian form: counts of positive, zero and
/// negative eigenvalues, plus the eigenvalues themselves (ascending).
struct SignatureTriple {
    int m_plus  = 0;
    int m_zero  = 0;
    int m_minus = 0;
    std::vector<double> eigenvalues;

    int dimension() const { return m_plus + m_zero + m_minus; }
    bool operator==(const SignatureTriple& o) const {
        return m_plus == o.m_plus && m_zero == o.m_zero && m_minus == o.m_minus;
    }
};

/// Eigenvalues of a real symmetric matrix by the cyclic Jacobi rotation
/// method, returned in ascending order. Sweeps stop once every off-diagonal
/// entry is below threshold * frobenius norm.
std::vector<double> jacobi_eigenvalues(const Mat& s, double threshold = tol::jacobi);

/// Inertia of a real symmetric matrix. Throws NotSymmetric when the symmetry
/// residual exceeds 10 * zero_tol.
SignatureTriple signature(const Mat& s, double zero_tol = tol::zero);

/// Inertia of a complex Hermitian matrix, computed on its real symmetric
/// 2k x 2k embedding with multiplicities halved.
SignatureTriple signature(const CMat& h, double zero_tol = tol::zero);

/// Real 2k x 2k embedding [[Re, -Im], [Im, Re]] of a complex matrix.
Mat real_embedding(const CMat& m);

/// max_ij |a_ij|
double inf_norm(const Mat& a);
double inf_norm(const CMat& a);

/// Largest singular value.
double operator_norm(const Mat& a);

/// Number of singular values above rank_tol * sigma_max.
int numeric_rank(const Mat& a, double rank_tol = tol::rank);
int numeric_rank(const CMat& a, double rank_tol = tol::rank);

/// Smallest singular value (0 for an empty matrix).
double sigma_min(const Mat& a);
double sigma_min(const CMat& a);

/// Orthonormal basis of the (right) null space, one column per kernel vector.
CMat null_space(const CMat& a, double rank_tol = tol::rank);
Mat  null_space(const Mat& a, double rank_tol = tol::rank);

/// Null space with the rank cut taken relative to an explicit scale, for
/// matrices that may vanish entirely (where a relative cut misreads rank).
CMat null_space_scaled(const CMat& a, double rank_tol, double scale_ref);

/// Deterministic, implementation-independent uniform variates. The standard
/// distributions are not portable across library implementations, so seeded
/// test corpora use this generator directly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        // xorshift* variant; period 2^64 - 1
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dULL;
    }

    /// Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, m).
    std::uint64_t below(std::uint64_t m) { return next_u64() % m; }

private:
    std::uint64_t state_;
};

/// Random symmetric matrix with entries uniform in [-scale, scale].
Mat random_symmetric(Rng& rng, int dim, double scale = 1.0);

} // namespace sympath
