#pragma once

#include <algorithm>
#include <cmath>

#include "qflavor/qcore/density.hpp"

namespace qflavor {

namespace detail {

// PSD square root via eigendecomposition. Eigenvalues below a rank cut
// (relative to the largest) are treated as exact zeros so that orthogonal
// supports stay numerically orthogonal after the square root.
inline Mat psd_sqrt(const Mat& rho, double psd_tol = kNormTol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  if (es.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");
  const auto& ev = es.eigenvalues();
  if (ev.minCoeff() < -psd_tol)
    throw numeric_error("matrix is not PSD within tolerance");
  const double cut =
      std::max(ev.maxCoeff(), 0.0) * static_cast<double>(ev.size()) * 1e-15;
  Eigen::VectorXd root(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    root[i] = ev[i] > cut ? std::sqrt(ev[i]) : 0.0;
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

/**
 * Uhlmann overlap sqrt(F) = || sqrt(rho) sqrt(sigma) ||_1, the trace norm of
 * the product of the square roots.
 */
inline double sqrt_fidelity(const DensityOp& a, const DensityOp& b) {
  if (!(a.layout == b.layout)) throw layout_error("fidelity across different layouts");
  Mat prod = detail::psd_sqrt(a.rho) * detail::psd_sqrt(b.rho);
  Eigen::JacobiSVD<Mat> svd(prod);
  return svd.singularValues().sum();
}

/**
 * Fidelity in the squared convention F = (Tr |sqrt(rho) sqrt(sigma)|)^2.
 */
inline double fidelity(const DensityOp& a, const DensityOp& b) {
  const double s = sqrt_fidelity(a, b);
  return std::min(s * s, 1.0 + 10 * kNormTol);
}

/**
 * Trace distance (1/2)||rho - sigma||_1: the optimal statistical
 * distinguishing advantage over all measurements.
 */
inline double trace_distance(const DensityOp& a, const DensityOp& b) {
  if (!(a.layout == b.layout)) throw layout_error("trace distance across different layouts");
  Eigen::SelfAdjointEigenSolver<Mat> es(a.rho - b.rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qflavor
