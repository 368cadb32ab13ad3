#pragma once

#include <string>
#include <vector>

#include "qflavor/qcore/state.hpp"

namespace qflavor {

/**
 * Dense unitary bound to an ordered list of target registers. The matrix is
 * row-major over the targets' joint dimension in the declared target order;
 * application matches targets to a state's registers by name.
 */
struct UnitaryOp {
  std::vector<Register> targets;
  Mat mat;

  std::size_t dim() const {
    std::size_t d = 1;
    for (const auto& r : targets) d *= r.dim;
    return d;
  }

  std::vector<std::string> target_names() const {
    std::vector<std::string> n;
    n.reserve(targets.size());
    for (const auto& r : targets) n.push_back(r.name);
    return n;
  }

  bool acts_on(const std::string& name) const {
    for (const auto& r : targets)
      if (r.name == name) return true;
    return false;
  }
};

inline bool is_unitary_matrix(const Mat& m, double tol = kNormTol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

inline UnitaryOp make_unitary(std::vector<Register> targets, Mat m,
                              double tol = kNormTol) {
  UnitaryOp u{std::move(targets), std::move(m)};
  if (static_cast<std::size_t>(u.mat.rows()) != u.dim() || u.mat.rows() != u.mat.cols())
    throw dimension_error("unitary matrix does not match target dimension");
  if (!is_unitary_matrix(u.mat, tol)) throw numeric_error("matrix is not unitary");
  return u;
}

inline UnitaryOp adjoint(const UnitaryOp& u) {
  return UnitaryOp{u.targets, u.mat.adjoint()};
}

inline UnitaryOp identity_on(std::vector<Register> targets) {
  std::size_t d = 1;
  for (const auto& r : targets) d *= r.dim;
  return UnitaryOp{std::move(targets), Mat::Identity(d, d)};
}

// e^{i theta} U. The result is unitary but no longer special-unitary-checked.
inline UnitaryOp phased(const UnitaryOp& u, double theta) {
  return UnitaryOp{u.targets, std::exp(cplx(0.0, theta)) * u.mat};
}

inline Mat hadamard2() {
  Mat h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

inline Mat pauli_x2() {
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

inline Mat pauli_z2() {
  Mat z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

inline UnitaryOp gate_on(const std::string& reg, const Mat& m2) {
  return UnitaryOp{{Register{reg, 2}}, m2};
}

namespace detail {

// Precomputed flat offsets for a register subset of a layout: offsets[k] is
// the contribution of joint value k (row-major over `regs` order) to the flat
// index. The complement offsets enumerate everything outside the subset.
struct SubsetIndex {
  std::vector<std::size_t> target_offsets;
  std::vector<std::size_t> complement_offsets;
};

inline std::vector<std::size_t> offsets_for(const RegisterLayout& layout,
                                            const std::vector<std::size_t>& reg_indices) {
  std::size_t joint = 1;
  for (std::size_t ri : reg_indices) joint *= layout.registers()[ri].dim;
  std::vector<std::size_t> offs(joint, 0);
  std::size_t repeat = joint;
  for (std::size_t ri : reg_indices) {
    const std::size_t d = layout.registers()[ri].dim;
    const std::size_t stride = layout.stride(ri);
    repeat /= d;
    // digit pattern: blocks of `repeat`, cycling through d values
    for (std::size_t k = 0; k < joint; ++k)
      offs[k] += ((k / repeat) % d) * stride;
  }
  return offs;
}

inline SubsetIndex subset_index(const RegisterLayout& layout,
                                const std::vector<std::string>& targets) {
  std::vector<std::size_t> tidx;
  tidx.reserve(targets.size());
  for (const auto& name : targets) tidx.push_back(layout.index_of(name));
  std::vector<bool> taken(layout.num_registers(), false);
  for (std::size_t i : tidx) {
    if (taken[i]) throw layout_error("register listed twice: " + layout.registers()[i].name);
    taken[i] = true;
  }
  std::vector<std::size_t> cidx;
  for (std::size_t i = 0; i < layout.num_registers(); ++i)
    if (!taken[i]) cidx.push_back(i);
  return SubsetIndex{offsets_for(layout, tidx), offsets_for(layout, cidx)};
}

inline void check_targets_exist(const RegisterLayout& layout, const UnitaryOp& u) {
  for (const auto& t : u.targets) {
    if (!layout.has(t.name)) throw layout_error("target register not in layout: " + t.name);
    if (layout.dim_of(t.name) != t.dim)
      throw dimension_error("target register dim mismatch: " + t.name);
  }
}

}  // namespace detail

/**
 * Apply `u` to the target registers of `s`, identity elsewhere.
 */
inline QState apply(const UnitaryOp& u, const QState& s) {
  detail::check_targets_exist(s.layout, u);
  const auto idx = detail::subset_index(s.layout, u.target_names());
  const std::size_t tdim = idx.target_offsets.size();
  Vec out(s.amp.size());
  Vec block(tdim);
  for (std::size_t c : idx.complement_offsets) {
    for (std::size_t t = 0; t < tdim; ++t) block[t] = s.amp[c + idx.target_offsets[t]];
    Vec res = u.mat * block;
    for (std::size_t t = 0; t < tdim; ++t) out[c + idx.target_offsets[t]] = res[t];
  }
  return QState(s.layout, std::move(out));
}

/**
 * Controlled application: the |1> branch of a dim-2 control register gets `u`,
 * the |0> branch is untouched. The control must be disjoint from u's targets.
 */
inline QState controlled_apply(const std::string& control, const UnitaryOp& u,
                               const QState& s) {
  if (s.layout.dim_of(control) != 2)
    throw layout_error("control register must have dim 2: " + control);
  if (u.acts_on(control))
    throw layout_error("control register overlaps unitary targets: " + control);
  const std::size_t d = u.dim();
  Mat m = Mat::Identity(2 * d, 2 * d);
  m.block(d, d, d, d) = u.mat;
  std::vector<Register> targets;
  targets.push_back(Register{control, 2});
  targets.insert(targets.end(), u.targets.begin(), u.targets.end());
  return apply(UnitaryOp{std::move(targets), std::move(m)}, s);
}

// Dense matrix of `u` promoted to the whole layout (row-major over the
// layout's declared order). Only sensible for small layouts.
inline Mat full_matrix(const UnitaryOp& u, const RegisterLayout& layout) {
  detail::check_targets_exist(layout, u);
  const auto idx = detail::subset_index(layout, u.target_names());
  const std::size_t tdim = idx.target_offsets.size();
  Mat f = Mat::Zero(layout.dim(), layout.dim());
  for (std::size_t c : idx.complement_offsets)
    for (std::size_t tr = 0; tr < tdim; ++tr)
      for (std::size_t tc = 0; tc < tdim; ++tc)
        f(c + idx.target_offsets[tr], c + idx.target_offsets[tc]) = u.mat(tr, tc);
  return f;
}

/**
 * Circuit composition over a fixed register list: ops[0] acts first.
 * Returns a single dense unitary over `regs`.
 */
inline UnitaryOp compose(const std::vector<Register>& regs,
                         const std::vector<UnitaryOp>& ops) {
  RegisterLayout layout(regs);
  Mat acc = Mat::Identity(layout.dim(), layout.dim());
  for (const auto& op : ops) acc = full_matrix(op, layout) * acc;
  return UnitaryOp{regs, std::move(acc)};
}

}  // namespace qflavor
