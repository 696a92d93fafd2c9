#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <mutex>

#include "dynent/common.hpp"

namespace dynent {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

struct Eigensystem {
    RVec values;   // ascending
    CMat vectors;  // columns
};

// Dense complex Hermitian matrix with a lazily computed, shared
// eigendecomposition. Immutable after construction; copies share the cache,
// so concurrent reads from many threads are safe.
class HermitianOperator {
  public:
    explicit HermitianOperator(CMat entries, double tol = 1e-12);

    static HermitianOperator identity(Eigen::Index dim);
    static HermitianOperator zero(Eigen::Index dim);
    // Wraps V f(D) V^dag results and other products that are Hermitian up to
    // roundoff: symmetrizes (A + A^dag)/2 instead of rejecting.
    static HermitianOperator from_symmetrized(CMat a);

    Eigen::Index dim() const { return mat_.rows(); }
    const CMat& mat() const { return mat_; }
    const Eigensystem& eig() const;
    double min_eigenvalue() const { return eig().values(0); }
    double max_eigenvalue() const { return eig().values(dim() - 1); }
    double spectral_radius() const;
    double trace() const { return mat_.trace().real(); }

  private:
    struct Cache {
        std::once_flag flag;
        std::unique_ptr<Eigensystem> es;
    };
    HermitianOperator(CMat entries, int /*already_hermitian*/);
    CMat mat_;
    std::shared_ptr<Cache> cache_;
};

// Unit-trace positive-semidefinite HermitianOperator. Eigenvalues below
// -1e-12 or a trace off by more than 1e-10 are rejected.
class DensityMatrix {
  public:
    explicit DensityMatrix(HermitianOperator op);
    const HermitianOperator& op() const { return op_; }
    Eigen::Index dim() const { return op_.dim(); }
    const CMat& mat() const { return op_.mat(); }

  private:
    HermitianOperator op_;
};

// V f(D) V^dag. For f = x ln x the convention f(0) = 0 applies; callers pass
// f already handling its own limits otherwise.
HermitianOperator matrix_function(const HermitianOperator& a,
                                  const std::function<double(double)>& f);

// -sum_k p_k ln p_k in nats. Eigenvalues in [-1e-12, 0) are clamped to zero.
double von_neumann_entropy(const DensityMatrix& rho);

// Entropy of an eigenvalue vector that is known to sum to ~1. Shared by the
// monitoring sweeps, which renormalize leaf spectra in place.
double spectrum_entropy(const RVec& p, double clamp_tol = 1e-12);

// Tensor product. Rejects results larger than max_dim (default 4096).
HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b,
                       Eigen::Index max_dim = 4096);

// Tr[AB] without forming AB.
cdouble trace_product(const CMat& a, const CMat& b);
inline cdouble trace_product(const HermitianOperator& a, const HermitianOperator& b) {
    return trace_product(a.mat(), b.mat());
}

}  // namespace dynent
