#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qflavor/qcore.hpp"

namespace qflavor::commitments {

// Above this total dimension the commit unitaries are not materialized as
// dense matrices; the scheme then carries only the two commit states, which
// determine every metric, the reveal check and the flavor conversion.
inline constexpr std::size_t kDenseUnitaryCap = std::size_t{1} << 10;

/**
 * Canonical bit commitment: two unitaries over a commit/reveal register
 * split, represented by their action on |0...0> plus (for small dimensions)
 * the dense Gram-Schmidt completions.
 */
struct CanonicalCommitment {
  RegisterLayout layout;
  std::vector<std::string> commit_regs;
  std::vector<std::string> reveal_regs;
  QState psi0, psi1;                 // Q_b|0>
  std::optional<UnitaryOp> q0, q1;   // dense unitaries when materialized
  std::string name;
};

namespace detail {

inline void check_roles(const RegisterLayout& layout,
                        const std::vector<std::string>& commit,
                        const std::vector<std::string>& reveal) {
  if (commit.empty() || reveal.empty())
    throw layout_error("commit and reveal register lists must be nonempty");
  std::vector<bool> seen(layout.num_registers(), false);
  for (const auto& n : commit) seen[layout.index_of(n)] = true;
  for (const auto& n : reveal) {
    const std::size_t i = layout.index_of(n);
    if (seen[i]) throw layout_error("register in both roles: " + n);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw layout_error("register without a role: " + layout.registers()[i].name);
}

}  // namespace detail

/**
 * Unitary whose first column is `v`, completed by Gram-Schmidt over the
 * canonical basis in order (with one re-orthogonalization pass).
 */
inline Mat complete_unitary_from_first_column(const Vec& v) {
  const std::size_t d = v.size();
  if (std::abs(v.norm() - 1.0) > kNormTol)
    throw numeric_error("first column is not normalized");
  Mat q(d, d);
  q.col(0) = v;
  std::size_t have = 1;
  for (std::size_t e = 0; e < d && have < d; ++e) {
    Vec cand = Vec::Unit(d, e);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < have; ++k) cand -= q.col(k).dot(cand) * q.col(k);
    const double n = cand.norm();
    if (n > 1e-8) {
      q.col(have) = cand / n;
      ++have;
    }
  }
  if (have != d) throw numeric_error("basis completion failed");
  return q;
}

inline CanonicalCommitment from_commit_states(RegisterLayout layout,
                                              std::vector<std::string> commit_regs,
                                              std::vector<std::string> reveal_regs,
                                              QState psi0, QState psi1,
                                              std::string name = {},
                                              std::size_t dense_cap = kDenseUnitaryCap) {
  detail::check_roles(layout, commit_regs, reveal_regs);
  if (!(psi0.layout == layout) || !(psi1.layout == layout))
    throw layout_error("commit states do not live on the scheme layout");
  check_normalized(psi0);
  check_normalized(psi1);
  CanonicalCommitment s{std::move(layout), std::move(commit_regs),
                        std::move(reveal_regs), std::move(psi0), std::move(psi1),
                        std::nullopt, std::nullopt, std::move(name)};
  if (s.layout.dim() <= dense_cap) {
    s.q0 = UnitaryOp{s.layout.registers(), complete_unitary_from_first_column(s.psi0.amp)};
    s.q1 = UnitaryOp{s.layout.registers(), complete_unitary_from_first_column(s.psi1.amp)};
  }
  return s;
}

inline CanonicalCommitment from_unitaries(RegisterLayout layout,
                                          std::vector<std::string> commit_regs,
                                          std::vector<std::string> reveal_regs, Mat q0,
                                          Mat q1, std::string name = {}) {
  detail::check_roles(layout, commit_regs, reveal_regs);
  UnitaryOp u0 = make_unitary(layout.registers(), std::move(q0));
  UnitaryOp u1 = make_unitary(layout.registers(), std::move(q1));
  QState psi0(layout, u0.mat.col(0));
  QState psi1(layout, u1.mat.col(0));
  return CanonicalCommitment{std::move(layout),  std::move(commit_regs),
                             std::move(reveal_regs), std::move(psi0),
                             std::move(psi1),    std::move(u0),
                             std::move(u1),      std::move(name)};
}

inline QState commit_state(const CanonicalCommitment& s, int b) {
  if (b != 0 && b != 1) throw domain_error("bit must be 0 or 1");
  return b == 0 ? s.psi0 : s.psi1;
}

// Acceptance probability of the reveal phase: project onto Q_b|0>.
inline double reveal_verify(const CanonicalCommitment& s, int b, const QState& state) {
  return std::norm(inner(commit_state(s, b), state));
}

inline DensityOp reduced_commit_state(const CanonicalCommitment& s, int b) {
  return partial_trace(commit_state(s, b), s.commit_regs);
}

// Optimal statistical advantage of a receiver holding only the commit
// registers; 0 iff perfectly hiding.
inline double hiding_advantage(const CanonicalCommitment& s) {
  return trace_distance(reduced_commit_state(s, 0), reduced_commit_state(s, 1));
}

// Unbounded optimum of the binding norm over all unitaries on the reveal
// side (with arbitrary advice): the Uhlmann overlap sqrt(F) of the reduced
// commit states. 0 iff perfectly binding.
inline double binding_sup(const CanonicalCommitment& s) {
  return sqrt_fidelity(reduced_commit_state(s, 0), reduced_commit_state(s, 1));
}

struct BindingNumericResult {
  double value = 0.0;
  bool converged = false;
  int iters = 0;
};

/**
 * Independent oracle for binding_sup: alternating polar-decomposition ascent
 * of || <psi1| (I_C (x) U_{R,Z}) |psi0>|0_Z> || over unitaries U on the
 * reveal registers joined with an advice register of dimension `advice_dim`
 * (1 = no advice). The objective is monotone nondecreasing in the iteration.
 */
inline BindingNumericResult binding_numeric(const CanonicalCommitment& s, int max_iters,
                                            std::uint64_t seed,
                                            std::size_t advice_dim = 1) {
  if (advice_dim < 1) throw dimension_error("advice dimension must be >= 1");
  // reshape the commit states to (C x R) matrices
  const auto sub = qflavor::detail::subset_index(s.layout, s.commit_regs);
  const std::size_t dc = sub.target_offsets.size();
  const std::size_t dr = sub.complement_offsets.size();
  Mat m0(dc, dr), m1(dc, dr);
  for (std::size_t c = 0; c < dc; ++c)
    for (std::size_t r = 0; r < dr; ++r) {
      m0(c, r) = s.psi0.amp[sub.target_offsets[c] + sub.complement_offsets[r]];
      m1(c, r) = s.psi1.amp[sub.target_offsets[c] + sub.complement_offsets[r]];
    }
  // cross matrix K[r, r'] = sum_c psi0[c,r'] conj(psi1[c,r])
  Mat k = m1.adjoint() * m0;  // dr x dr, K(r, r') in that orientation

  const std::size_t dz = advice_dim;
  const std::size_t du = dr * dz;
  Rng rng(seed);
  Mat u = haar_unitary_matrix(rng, du);

  auto overlap_vec = [&](const Mat& uu) {
    // w[z'] = sum_{r',r} conj(psi1-matrix...) u[(r'z'),(r0)] psi0 contraction
    Vec w = Vec::Zero(dz);
    for (std::size_t zp = 0; zp < dz; ++zp)
      for (std::size_t rp = 0; rp < dr; ++rp)
        for (std::size_t r = 0; r < dr; ++r)
          w[zp] += k(rp, r) * uu(rp * dz + zp, r * dz + 0);
    return w;
  };

  double value = overlap_vec(u).norm();
  bool converged = false;
  int it = 0;
  for (; it < max_iters; ++it) {
    Vec w = overlap_vec(u);
    Vec dir = w.norm() > 1e-300 ? Vec(w / w.norm()) : Vec(Vec::Unit(dz, 0));
    // G[(r,0),(r',z')] = K(r',r) * conj(dir[z'])  maximizes Re Tr(U G)
    Mat g = Mat::Zero(du, du);
    for (std::size_t r = 0; r < dr; ++r)
      for (std::size_t rp = 0; rp < dr; ++rp)
        for (std::size_t zp = 0; zp < dz; ++zp)
          g(r * dz + 0, rp * dz + zp) = k(rp, r) * std::conj(dir[zp]);
    Eigen::JacobiSVD<Mat> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
    u = svd.matrixV() * svd.matrixU().adjoint();
    const double next = overlap_vec(u).norm();
    if (next < value - 1e-12)
      throw numeric_error("binding ascent lost monotonicity");
    if (next - value < 1e-13) {
      value = next;
      converged = true;
      ++it;
      break;
    }
    value = next;
  }
  return BindingNumericResult{value, converged, it};
}

}  // namespace qflavor::commitments
