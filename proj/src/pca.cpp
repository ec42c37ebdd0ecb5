#include "movrec/pca.hpp"

#include <algorithm>
#include <cmath>

#include "movrec/error.hpp"

namespace movrec {

namespace {

void fix_column_signs(Eigen::MatrixXd& basis) {
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Eigen::Index imax = 0;
    basis.col(c).cwiseAbs().maxCoeff(&imax);
    if (basis(imax, c) < 0.0) basis.col(c) = -basis.col(c);
  }
}

}  // namespace

PcaModel fit_pca(const Eigen::MatrixXd& X, int k) {
  const Eigen::Index n = X.rows();
  const Eigen::Index d = X.cols();
  if (n < 2) throw Error(ErrorCode::TooFewSamples, "PCA needs at least 2 samples");
  if (k < 1) throw Error(ErrorCode::InvalidParams, "requested rank must be >= 1");

  PcaModel model;
  model.dim = static_cast<int>(d);
  model.mean = X.colwise().mean();
  const Eigen::MatrixXd centered = X.rowwise() - model.mean.transpose();

  Eigen::VectorXd eigvals;   // descending, covariance scale
  Eigen::MatrixXd eigvecs;   // d x m candidate directions, unit columns

  if (d > n) {
    // Snapshot method: the nonzero covariance spectrum lives in the n x n
    // Gram matrix G = Xc*Xc'; directions recover as Xc'*v / sqrt(lambda).
    const Eigen::MatrixXd gram = centered * centered.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
    const Eigen::VectorXd lam = solver.eigenvalues().reverse();
    const Eigen::MatrixXd vec = solver.eigenvectors().rowwise().reverse();
    eigvals = lam / static_cast<double>(n - 1);
    eigvecs.resize(d, lam.size());
    for (Eigen::Index j = 0; j < lam.size(); ++j) {
      if (lam(j) > 0.0) {
        eigvecs.col(j) = centered.transpose() * vec.col(j) / std::sqrt(lam(j));
      } else {
        eigvecs.col(j).setZero();
      }
    }
  } else {
    const Eigen::MatrixXd cov =
        centered.transpose() * centered / static_cast<double>(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    eigvals = solver.eigenvalues().reverse();
    eigvecs = solver.eigenvectors().rowwise().reverse();
  }

  // Numerical rank of the centered data.
  const double lead = std::max(eigvals(0), 0.0);
  const double tol = std::max(lead * 1e-10, 1e-14);
  int rank = 0;
  while (rank < eigvals.size() && eigvals(rank) > tol) ++rank;
  if (rank == 0) {
    throw Error(ErrorCode::DegenerateData, "all training rows are identical");
  }

  const int keep = std::min({k, rank, static_cast<int>(n - 1), static_cast<int>(d)});
  model.rank = keep;
  model.basis = eigvecs.leftCols(keep);
  model.eigenvalues = eigvals.head(keep).cwiseMax(0.0);
  fix_column_signs(model.basis);
  return model;
}

Eigen::VectorXd project(const PcaModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.dim) {
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match PCA dim");
  }
  return model.basis.transpose() * (x - model.mean);
}

}  // namespace movrec
