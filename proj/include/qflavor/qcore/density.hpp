#pragma once

#include <string>
#include <vector>

#include "qflavor/qcore/unitary.hpp"

namespace qflavor {

/**
 * Hermitian PSD trace-1 operator over (a subset of) registers; the result of
 * a partial trace.
 */
struct DensityOp {
  RegisterLayout layout;
  Mat rho;

  DensityOp() = default;
  DensityOp(RegisterLayout l, Mat m) : layout(std::move(l)), rho(std::move(m)) {
    if (static_cast<std::size_t>(rho.rows()) != layout.dim() || rho.rows() != rho.cols())
      throw dimension_error("density matrix does not match layout dimension");
  }
};

inline void check_density(const DensityOp& d, double tol = kNormTol) {
  if ((d.rho - d.rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw numeric_error("density operator is not Hermitian within tolerance");
  if (std::abs(d.rho.trace().real() - 1.0) > tol || std::abs(d.rho.trace().imag()) > tol)
    throw numeric_error("density operator trace is not 1 within tolerance");
  Eigen::SelfAdjointEigenSolver<Mat> es(d.rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw numeric_error("density operator has a negative eigenvalue beyond tolerance");
}

namespace detail {

inline std::vector<std::string> kept_in_layout_order(const RegisterLayout& layout,
                                                     const std::vector<std::string>& keep) {
  for (const auto& name : keep)
    if (!layout.has(name)) throw layout_error("unknown register: " + name);
  std::vector<std::string> ordered;
  for (const auto& r : layout.registers())
    for (const auto& name : keep)
      if (r.name == name) ordered.push_back(name);
  if (ordered.size() != keep.size()) throw layout_error("duplicate register in keep list");
  if (ordered.empty()) throw layout_error("keep list must not be empty");
  return ordered;
}

inline RegisterLayout sub_layout(const RegisterLayout& layout,
                                 const std::vector<std::string>& names) {
  std::vector<Register> regs;
  for (const auto& n : names) regs.push_back(Register{n, layout.dim_of(n)});
  // A sub-layout never exceeds the parent, which already passed its cap.
  return RegisterLayout(std::move(regs), layout.dim());
}

}  // namespace detail

/**
 * Reduced density operator on `keep` (result registers in layout order).
 */
inline DensityOp partial_trace(const QState& s, const std::vector<std::string>& keep) {
  const auto kept = detail::kept_in_layout_order(s.layout, keep);
  const auto idx = detail::subset_index(s.layout, kept);
  const std::size_t kd = idx.target_offsets.size();
  const std::size_t rd = idx.complement_offsets.size();
  Mat m(kd, rd);
  for (std::size_t k = 0; k < kd; ++k)
    for (std::size_t r = 0; r < rd; ++r)
      m(k, r) = s.amp[idx.target_offsets[k] + idx.complement_offsets[r]];
  Mat rho = m * m.adjoint();
  return DensityOp(detail::sub_layout(s.layout, kept), std::move(rho));
}

inline DensityOp partial_trace(const DensityOp& d, const std::vector<std::string>& keep) {
  const auto kept = detail::kept_in_layout_order(d.layout, keep);
  const auto idx = detail::subset_index(d.layout, kept);
  const std::size_t kd = idx.target_offsets.size();
  Mat rho = Mat::Zero(kd, kd);
  for (std::size_t r : idx.complement_offsets)
    for (std::size_t i = 0; i < kd; ++i)
      for (std::size_t j = 0; j < kd; ++j)
        rho(i, j) += d.rho(idx.target_offsets[i] + r, idx.target_offsets[j] + r);
  return DensityOp(detail::sub_layout(d.layout, kept), std::move(rho));
}

inline DensityOp full_density(const QState& s) {
  return DensityOp(s.layout, s.amp * s.amp.adjoint());
}

}  // namespace qflavor
