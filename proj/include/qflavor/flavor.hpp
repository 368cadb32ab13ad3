#pragma once

#include "qflavor/commitments.hpp"

namespace qflavor::flavor {

using commitments::CanonicalCommitment;

/**
 * One-call flavor conversion. The dual scheme commits |+>/|-> on a fresh
 * control qudit D and runs the original pair selected on D:
 *
 *   Q'_b = (Q_0 (x) |0><0|_D + Q_1 (x) |1><1|_D)(I (x) Z^b H),
 *
 * with commit register (R, D) and reveal register C. D is appended as the
 * last register. The construction makes exactly one controlled use of the
 * original pair plus constant extra gates.
 */
inline CanonicalCommitment convert(const CanonicalCommitment& s) {
  const std::string d_name = fresh_name(s.layout, "D");
  std::vector<Register> regs = s.layout.registers();
  regs.push_back(Register{d_name, 2});
  const std::size_t base = s.layout.dim();
  RegisterLayout layout(std::move(regs),
                        std::max(default_dim_cap(), 2 * base));

  // Q'_b|0> = (Q_0|0> (x) |0>_D + (-1)^b Q_1|0> (x) |1>_D)/sqrt2
  auto dual_state = [&](int b) {
    Vec amp(2 * base);
    const double sign = b == 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < base; ++i) {
      amp[2 * i + 0] = s.psi0.amp[i] / std::sqrt(2.0);
      amp[2 * i + 1] = sign * s.psi1.amp[i] / std::sqrt(2.0);
    }
    return QState(layout, std::move(amp));
  };

  std::vector<std::string> commit = s.reveal_regs;
  commit.push_back(d_name);
  CanonicalCommitment dual{layout,
                           std::move(commit),
                           s.commit_regs,
                           dual_state(0),
                           dual_state(1),
                           std::nullopt,
                           std::nullopt,
                           s.name.empty() ? std::string{} : s.name + "-dual"};

  if (s.q0 && s.q1 && 2 * base <= commitments::kDenseUnitaryCap) {
    // select(Q0, Q1; D) — the single controlled application of the pair
    Mat select = Mat::Zero(2 * base, 2 * base);
    for (std::size_t i = 0; i < base; ++i)
      for (std::size_t j = 0; j < base; ++j) {
        select(2 * i + 0, 2 * j + 0) = s.q0->mat(i, j);
        select(2 * i + 1, 2 * j + 1) = s.q1->mat(i, j);
      }
    for (int b = 0; b < 2; ++b) {
      Mat zh = hadamard2();
      if (b == 1) zh = pauli_z2() * zh;
      Mat prep = Mat::Zero(2 * base, 2 * base);
      for (std::size_t i = 0; i < base; ++i)
        for (int di = 0; di < 2; ++di)
          for (int dj = 0; dj < 2; ++dj)
            prep(2 * i + di, 2 * i + dj) = zh(di, dj);
      UnitaryOp q{layout.registers(), select * prep};
      (b == 0 ? dual.q0 : dual.q1) = std::move(q);
    }
  }
  return dual;
}

struct DualityReport {
  double h0 = 0, b0 = 0;  // original hiding advantage / binding overlap
  double h1 = 0, b1 = 0;  // converted
  bool hiding_to_binding_ok = false;  // h0 = 0 implies b1 = 0
  bool binding_to_hiding_ok = false;  // b0 = 0 implies h1 = 0
};

/**
 * Measures the four statistical quantities on a scheme and its dual, and
 * checks the perfect-case implications. Statistical (nonzero) values are
 * reported as data; the theorem gives no closed-form relation for them.
 */
inline DualityReport duality_check(const CanonicalCommitment& s, double tol = kIdTol) {
  DualityReport r;
  r.h0 = commitments::hiding_advantage(s);
  r.b0 = commitments::binding_sup(s);
  const CanonicalCommitment dual = convert(s);
  r.h1 = commitments::hiding_advantage(dual);
  r.b1 = commitments::binding_sup(dual);
  r.hiding_to_binding_ok = r.h0 > tol || r.b1 <= tol;
  r.binding_to_hiding_ok = r.b0 > tol || r.h1 <= tol;
  return r;
}

}  // namespace qflavor::flavor
