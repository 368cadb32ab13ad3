#pragma once

#include <random>

#include "qflavor/qcore/unitary.hpp"

namespace qflavor {

inline Vec gaussian_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v[i] = cplx(re, im);
  }
  return v;
}

// Haar state: complex Gaussian vector, normalized.
inline Vec haar_state_vector(Rng& rng, std::size_t dim) {
  Vec v = gaussian_vector(rng, dim);
  return v / v.norm();
}

inline QState random_state(Rng& rng, const RegisterLayout& layout) {
  return QState(layout, haar_state_vector(rng, layout.dim()));
}

// Haar unitary: QR of a Ginibre matrix with the R diagonal phase-fixed.
inline Mat haar_unitary_matrix(Rng& rng, std::size_t dim) {
  Mat g(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) g.col(j) = gaussian_vector(rng, dim);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < dim; ++j) {
    cplx d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : cplx(1.0);
  }
  return q;
}

inline UnitaryOp haar_unitary(Rng& rng, std::vector<Register> targets) {
  std::size_t d = 1;
  for (const auto& r : targets) d *= r.dim;
  return UnitaryOp{std::move(targets), haar_unitary_matrix(rng, d)};
}

// Random orthogonal pure-state pair on a layout (second state Gram-Schmidt
// orthogonalized against the first).
inline std::pair<QState, QState> random_orthogonal_pair(Rng& rng,
                                                        const RegisterLayout& layout) {
  if (layout.dim() < 2) throw dimension_error("need dim >= 2 for an orthogonal pair");
  Vec a = haar_state_vector(rng, layout.dim());
  Vec b = haar_state_vector(rng, layout.dim());
  b -= a.dot(b) * a;
  double n = b.norm();
  while (n < 1e-8) {  // astronomically unlikely; resample
    b = haar_state_vector(rng, layout.dim());
    b -= a.dot(b) * a;
    n = b.norm();
  }
  b /= n;
  return {QState(layout, std::move(a)), QState(layout, std::move(b))};
}

}  // namespace qflavor
