#pragma once

// Floating-point linear algebra for the complex backend, on top of Eigen:
// rank/nullspace decisions with logged spectral gaps, least squares,
// orthonormal bases, subspace comparison, eigendecomposition with certified
// residuals.

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <stdexcept>

#include "g2calc/matrix.hpp"
#include "g2calc/operators.hpp"

namespace g2calc {

using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

template <class S>
MatrixXcd to_eigen(const DenseMat<S>& m) {
  MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scalar_traits<S>::to_complex(m(i, j));
  return out;
}

inline DenseMat<Complex> from_eigen(const MatrixXcd& m) {
  DenseMat<Complex> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

/// Outcome of a numerical rank decision. Singular values below
/// rel_tol * sigma_max count as zero; `gap` is the ratio between the smallest
/// accepted and the largest rejected singular value (infinite when clean).
struct RankDecision {
  int rank = 0;
  double sigma_max = 0.0;
  double smallest_kept = 0.0;
  double largest_dropped = 0.0;
  double rel_tol = 0.0;
  double gap() const {
    if (rank == 0 || largest_dropped == 0.0) return std::numeric_limits<double>::infinity();
    return smallest_kept / largest_dropped;
  }
};

constexpr double kDefaultRankTol = 1e-9;

namespace detail {
inline RankDecision decide_rank(const Eigen::VectorXd& sv, double rel_tol) {
  RankDecision d;
  d.rel_tol = rel_tol;
  d.sigma_max = sv.size() ? sv(0) : 0.0;
  const double thresh = d.sigma_max * rel_tol;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thresh) {
      d.rank = static_cast<int>(i) + 1;
      d.smallest_kept = sv(i);
    } else {
      d.largest_dropped = sv(i);
      break;
    }
  }
  return d;
}
}  // namespace detail

inline RankDecision numeric_rank(const MatrixXcd& m, double rel_tol = kDefaultRankTol) {
  if (m.size() == 0) return {};
  Eigen::BDCSVD<MatrixXcd> svd(m);
  return detail::decide_rank(svd.singularValues(), rel_tol);
}

/// Orthonormal basis of ker(m) (columns), with the rank decision that produced it.
struct SubspaceResult {
  MatrixXcd basis;
  RankDecision decision;
};

inline SubspaceResult numeric_nullspace(const MatrixXcd& m, double rel_tol = kDefaultRankTol) {
  if (m.rows() == 0) {  // everything is in the kernel
    return {MatrixXcd::Identity(m.cols(), m.cols()), RankDecision{}};
  }
  Eigen::BDCSVD<MatrixXcd> svd(m, Eigen::ComputeFullV);
  auto d = detail::decide_rank(svd.singularValues(), rel_tol);
  return {svd.matrixV().rightCols(m.cols() - d.rank), d};
}

/// Orthonormal basis of the column space of m.
inline SubspaceResult numeric_range(const MatrixXcd& m, double rel_tol = kDefaultRankTol) {
  if (m.cols() == 0 || m.rows() == 0) return {MatrixXcd(m.rows(), 0), RankDecision{}};
  Eigen::BDCSVD<MatrixXcd> svd(m, Eigen::ComputeThinU);
  auto d = detail::decide_rank(svd.singularValues(), rel_tol);
  return {svd.matrixU().leftCols(d.rank), d};
}

struct LeastSquaresResult {
  VectorXcd solution;
  double residual = 0.0;           // ||A x - b||
  double relative_residual = 0.0;  // residual / ||b||, 0 when b = 0
};

inline LeastSquaresResult least_squares(const MatrixXcd& a, const VectorXcd& b) {
  LeastSquaresResult r;
  Eigen::BDCSVD<MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  r.solution = svd.solve(b);
  r.residual = (a * r.solution - b).norm();
  const double bn = b.norm();
  r.relative_residual = bn > 0 ? r.residual / bn : 0.0;
  return r;
}

/// Columns of u span the same space as columns of v? Measured by the projector
/// difference ||P_u - P_v||_F; both inputs must have orthonormal columns.
inline double subspace_distance(const MatrixXcd& u, const MatrixXcd& v) {
  const MatrixXcd pu = u * u.adjoint();
  const MatrixXcd pv = v * v.adjoint();
  return (pu - pv).norm();
}

inline double orthonormality_defect(const MatrixXcd& u) {
  if (u.cols() == 0) return 0.0;
  return (u.adjoint() * u - MatrixXcd::Identity(u.cols(), u.cols())).norm();
}

struct EigenDecomposition {
  VectorXcd values;
  MatrixXcd vectors;
  double max_residual = 0.0;  // max over pairs of ||A v - lambda v||
};

/// Eigendecomposition of the (degree -> degree) block of a float operator,
/// with a per-pair residual certificate. Throws on solver failure.
inline EigenDecomposition eigen_decompose_block(const MatrixXcd& block, double tol) {
  EigenDecomposition out;
  Eigen::ComplexEigenSolver<MatrixXcd> es(block);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigen_decompose: solver did not converge");
  out.values = es.eigenvalues();
  out.vectors = es.eigenvectors();
  for (Eigen::Index i = 0; i < out.values.size(); ++i) {
    const double res = (block * out.vectors.col(i) - out.values(i) * out.vectors.col(i)).norm();
    out.max_residual = std::max(out.max_residual, res);
  }
  if (out.max_residual > tol)
    throw std::runtime_error("eigen_decompose: residual above tolerance");
  return out;
}

inline EigenDecomposition eigen_decompose(const GradedOperator<Complex>& a, int degree,
                                          double tol) {
  return eigen_decompose_block(to_eigen(a.block(degree, degree)), tol);
}

}  // namespace g2calc
