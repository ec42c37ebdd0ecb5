#ifndef MOVREC_PCA_HPP_
#define MOVREC_PCA_HPP_

#include <Eigen/Dense>

namespace movrec {

struct PcaModel {
  int dim = 0;
  int rank = 0;
  Eigen::VectorXd mean;         // length dim
  Eigen::MatrixXd basis;        // dim x rank, column-orthonormal
  Eigen::VectorXd eigenvalues;  // length rank, nonincreasing, >= 0
};

// Principal subspace of the sample covariance (divisor n-1) of the rows of
// X. Uses the n x n Gram matrix when dim exceeds the sample count, the
// dense covariance otherwise; the retained rank is clamped to the rank of
// the centered data. Eigenvector signs are fixed so each column's
// largest-magnitude entry is positive.
PcaModel fit_pca(const Eigen::MatrixXd& X, int k);

// basis' * (x - mean)
Eigen::VectorXd project(const PcaModel& model, const Eigen::VectorXd& x);

}  // namespace movrec

#endif  // MOVREC_PCA_HPP_
