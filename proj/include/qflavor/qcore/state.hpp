#pragma once

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "qflavor/qcore/layout.hpp"

namespace qflavor {

/**
 * Pure state: a complex amplitude vector over a register layout.
 * Operations producing states keep the squared 2-norm within kNormTol of 1;
 * helpers that return deliberately unnormalized vectors say so.
 */
struct QState {
  RegisterLayout layout;
  Vec amp;

  QState() = default;
  QState(RegisterLayout l, Vec a) : layout(std::move(l)), amp(std::move(a)) {
    if (static_cast<std::size_t>(amp.size()) != layout.dim())
      throw dimension_error("amplitude vector does not match layout dimension");
  }
};

inline double norm_sq(const QState& s) { return s.amp.squaredNorm(); }

inline bool is_normalized(const QState& s, double tol = kNormTol) {
  return std::abs(norm_sq(s) - 1.0) <= tol;
}

inline void check_normalized(const QState& s, double tol = kNormTol) {
  if (!is_normalized(s, tol))
    throw numeric_error("state norm drifted: |amp|^2 = " + std::to_string(norm_sq(s)));
}

inline cplx inner(const QState& a, const QState& b) {
  if (!(a.layout == b.layout)) throw layout_error("inner product across different layouts");
  return a.amp.dot(b.amp);  // conjugates a
}

inline QState make_basis_state(const RegisterLayout& layout,
                               const std::vector<std::size_t>& values) {
  Vec amp = Vec::Zero(layout.dim());
  amp[layout.flat(values)] = 1.0;
  return QState(layout, std::move(amp));
}

inline QState make_zero_state(const RegisterLayout& layout) {
  return make_basis_state(layout, std::vector<std::size_t>(layout.num_registers(), 0));
}

/**
 * Equal-amplitude superposition 1/sqrt(|S|) over `subset` of one register's
 * basis values; every other register sits in |0>.
 */
inline QState uniform_superposition(const RegisterLayout& layout,
                                    const std::string& reg,
                                    const std::set<std::size_t>& subset) {
  if (subset.empty()) throw domain_error("uniform superposition over empty set");
  const std::size_t r = layout.index_of(reg);
  const std::size_t d = layout.registers()[r].dim;
  const double a = 1.0 / std::sqrt(static_cast<double>(subset.size()));
  Vec amp = Vec::Zero(layout.dim());
  std::vector<std::size_t> values(layout.num_registers(), 0);
  for (std::size_t v : subset) {
    if (v >= d) throw dimension_error("subset member out of register range");
    values[r] = v;
    amp[layout.flat(values)] = a;
  }
  return QState(layout, std::move(amp));
}

inline QState uniform_superposition_full(const RegisterLayout& layout,
                                         const std::string& reg) {
  std::set<std::size_t> all;
  for (std::size_t v = 0; v < layout.dim_of(reg); ++v) all.insert(v);
  return uniform_superposition(layout, reg, all);
}

inline QState tensor(const QState& a, const QState& b,
                     std::size_t cap = default_dim_cap()) {
  RegisterLayout joint = concat(a.layout, b.layout, cap);
  Vec amp(joint.dim());
  for (Eigen::Index i = 0; i < a.amp.size(); ++i)
    amp.segment(i * b.amp.size(), b.amp.size()) = a.amp[i] * b.amp;
  return QState(joint, std::move(amp));
}

inline QState superpose(const QState& a, const QState& b, cplx ca, cplx cb) {
  if (!(a.layout == b.layout)) throw layout_error("superposing different layouts");
  Vec amp = ca * a.amp + cb * b.amp;
  double n = amp.norm();
  if (n <= kNormTol) throw numeric_error("superposition has vanishing norm");
  amp /= n;
  return QState(a.layout, std::move(amp));
}

}  // namespace qflavor
