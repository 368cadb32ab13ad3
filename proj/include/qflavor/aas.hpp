#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qflavor/qcore.hpp"

namespace qflavor::aas {

/**
 * Numbers attached to one swap<->distinguish instance: the swap amplitude
 * gamma, the phase used to align it onto the real axis, and the exact
 * distinguishing advantage of the built circuit.
 */
struct SwapReport {
  double gamma = 0.0;
  double theta = 0.0;
  double advantage = 0.0;
};

/**
 * A distinguisher in unitary form: apply `v`, then measure `outcome_reg`
 * (dim 2) in the computational basis and output the result. `aux` holds the
 * fixed registers the distinguisher brings along (circuit ancilla and/or
 * advice); inputs are tensored with it before `v` acts.
 */
struct Distinguisher {
  UnitaryOp v;
  std::string outcome_reg;
  std::optional<QState> aux;
};

inline double pr_outcome1(const Distinguisher& d, const QState& input) {
  QState joint = d.aux ? tensor(input, *d.aux) : input;
  joint = apply(d.v, joint);
  return measure_probabilities(joint, d.outcome_reg)[1];
}

// |Pr[1 on phi] - Pr[1 on psi]|, computed exactly from projector expectations.
inline double advantage(const Distinguisher& d, const QState& psi, const QState& phi) {
  return std::abs(pr_outcome1(d, phi) - pr_outcome1(d, psi));
}

namespace detail {

inline void check_orthogonal_pair(const QState& x, const QState& y) {
  if (!(x.layout == y.layout))
    throw layout_error("the two states live on different layouts");
  check_normalized(x);
  check_normalized(y);
  if (std::abs(inner(x, y)) > kIdTol)
    throw precondition_error("input states are not orthogonal");
}

}  // namespace detail

// <y|U|x> + <x|U|y> with U acting on (a subset of) the states' registers.
inline cplx swap_overlap(const UnitaryOp& u, const QState& x, const QState& y) {
  detail::check_orthogonal_pair(x, y);
  const QState ux = apply(u, x);
  const QState uy = apply(u, y);
  return inner(y, ux) + inner(x, uy);
}

inline double gamma_of(const UnitaryOp& u, const QState& x, const QState& y) {
  return std::abs(swap_overlap(u, x, y));
}

// theta with Re(<y|e^{i theta}U|x> + <x|e^{i theta}U|y>) = gamma; 0 when the
// overlap sum vanishes.
inline double phase_angle(const UnitaryOp& u, const QState& x, const QState& y) {
  const cplx s = swap_overlap(u, x, y);
  if (std::abs(s) == 0.0) return 0.0;
  return -std::arg(s);
}

inline UnitaryOp phase_align(const UnitaryOp& u, const QState& x, const QState& y) {
  return phased(u, phase_angle(u, x, y));
}

namespace detail {

// Interference circuit: H on a fresh ancilla, controlled-U, H again. The
// ancilla is the first target, so the controlled block is block-diagonal.
inline UnitaryOp interference_circuit(const std::string& anc, const UnitaryOp& u) {
  const std::size_t d = u.dim();
  Mat cu = Mat::Identity(2 * d, 2 * d);
  cu.block(d, d, d, d) = u.mat;
  Mat h = Mat::Zero(2 * d, 2 * d);
  const Mat h2 = hadamard2();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      h.block(a * d, b * d, d, d) = h2(a, b) * Mat::Identity(d, d);
  std::vector<Register> targets;
  targets.push_back(Register{anc, 2});
  targets.insert(targets.end(), u.targets.begin(), u.targets.end());
  return UnitaryOp{std::move(targets), h * cu * h};
}

}  // namespace detail

struct DistinguisherBuild {
  Distinguisher dist;
  SwapReport report;
};

/**
 * Swap-to-distinguish direction: from U with swap amplitude gamma between
 * orthogonal x and y, build the one-ancilla interference circuit whose
 * advantage on (x+y)/sqrt2 vs (x-y)/sqrt2 is exactly gamma/2. The circuit
 * touches only U's targets plus the ancilla.
 */
inline DistinguisherBuild build_distinguisher(const UnitaryOp& u, const QState& x,
                                              const QState& y) {
  SwapReport rep;
  rep.gamma = gamma_of(u, x, y);
  rep.theta = phase_angle(u, x, y);
  const UnitaryOp aligned = phased(u, rep.theta);
  const std::string anc = fresh_name(x.layout, "anc");
  Distinguisher d{detail::interference_circuit(anc, aligned), anc,
                  make_basis_state(RegisterLayout({{anc, 2}}), {0})};
  const QState psi = superpose(x, y, 1.0, 1.0);
  const QState phi = superpose(x, y, 1.0, -1.0);
  rep.advantage = advantage(d, psi, phi);
  return DistinguisherBuild{std::move(d), rep};
}

/**
 * Distinguish-to-swap direction: v is the distinguisher's unitary part with
 * its first target (dim 2) carrying the outcome. Returns U = v^dag Z v and
 * the exact advantage of v on (psi, phi); the swap identity
 * |<y|U|x> + <x|U|y>|/2 = delta holds for x = (psi+phi)/sqrt2,
 * y = (psi-phi)/sqrt2.
 */
inline std::pair<UnitaryOp, double> build_swapper(const UnitaryOp& v, const QState& psi,
                                                  const QState& phi) {
  detail::check_orthogonal_pair(psi, phi);
  if (v.targets.empty() || v.targets.front().dim != 2)
    throw precondition_error("distinguisher's first target must be a dim-2 outcome register");
  const std::string outcome = v.targets.front().name;
  if (!psi.layout.has(outcome))
    throw layout_error("outcome register missing from the input states");
  Distinguisher d{v, outcome, std::nullopt};
  const double delta = advantage(d, psi, phi);
  RegisterLayout vspace(v.targets);
  Mat z = full_matrix(gate_on(outcome, pauli_z2()), vspace);
  UnitaryOp u{v.targets, v.mat.adjoint() * z * v.mat};
  return {std::move(u), delta};
}

// ---------------------------------------------------------------------------
// Auxiliary-input generalization
// ---------------------------------------------------------------------------

/**
 * gamma for the auxiliary-state setting:
 * || (<y| (x) I) U |x>|tau> + (<x| (x) I) U |y>|tau> ||.
 */
inline double generalized_gamma(const UnitaryOp& u, const QState& x, const QState& y,
                                const QState& tau) {
  detail::check_orthogonal_pair(x, y);
  const QState ux = apply(u, tensor(x, tau));
  const QState uy = apply(u, tensor(y, tau));
  const QState t_xy = contract_bra(y, ux);
  const QState t_yx = contract_bra(x, uy);
  return (t_xy.amp + t_yx.amp).norm();
}

struct GeneralizedBuild {
  Distinguisher dist;   // inputs over x's registers; aux = |0>_anc (x) advice
  QState advice;        // |tau> (x) (|x>|0> + |y>|1>)/sqrt2 on primed registers
  double claim_value;   // |<y,tau,sigma|U~|x,tau,sigma> + <x,tau,sigma|U~|y,tau,sigma>|
  SwapReport report;    // gamma, alignment phase, measured advantage (= gamma^2/4)
};

/**
 * Swap-to-distinguish with auxiliary input: U acts on x's registers plus tau's
 * registers and need not preserve |tau>. Doubling the swapped system with a
 * primed copy and a flag qubit yields U~ whose plain swap value is gamma^2/2,
 * so the interference circuit distinguishes (x+-y)/sqrt2 with advantage
 * gamma^2/4 given the advice state.
 */
inline GeneralizedBuild build_generalized_swapper_to_distinguisher(const UnitaryOp& u,
                                                                   const QState& x,
                                                                   const QState& y,
                                                                   const QState& tau) {
  detail::check_orthogonal_pair(x, y);
  const RegisterLayout a_layout = x.layout;
  const RegisterLayout z_layout = tau.layout;
  for (const auto& r : z_layout.registers())
    if (a_layout.has(r.name))
      throw layout_error("auxiliary register name collides with the system: " + r.name);

  // primed copy of the system registers
  const std::string prime = "'";
  const RegisterLayout a_primed = renamed(a_layout, prime);
  for (const auto& r : a_primed.registers())
    if (z_layout.has(r.name))
      throw layout_error("primed register name collides with the auxiliary: " + r.name);

  // U' = U with its system targets renamed to the primed copies
  std::vector<Register> primed_targets;
  for (const auto& t : u.targets) {
    if (a_layout.has(t.name)) {
      if (a_layout.dim_of(t.name) != t.dim)
        throw dimension_error("system/unitary register dim mismatch: " + t.name);
      primed_targets.push_back(Register{t.name + prime, t.dim});
    } else if (z_layout.has(t.name)) {
      primed_targets.push_back(t);
    } else {
      throw layout_error("unitary target outside system and auxiliary: " + t.name);
    }
  }

  const std::string flag = [&] {
    std::string name = "B";
    auto taken = [&](const std::string& n) {
      return a_layout.has(n) || z_layout.has(n) || a_primed.has(n);
    };
    for (std::size_t k = 1; taken(name); ++k) name = "B_" + std::to_string(k);
    return name;
  }();
  RegisterLayout flag_space({{flag, 2}});
  // sigma over (primed system, flag): (|x>|0> + |y>|1>)/sqrt2
  QState sigma = [&] {
    Vec amp(2 * a_primed.dim());
    for (std::size_t i = 0; i < a_primed.dim(); ++i) {
      amp[2 * i + 0] = x.amp[i] / std::sqrt(2.0);
      amp[2 * i + 1] = y.amp[i] / std::sqrt(2.0);
    }
    return QState(concat(a_primed, flag_space), std::move(amp));
  }();

  // U~ = X_flag U'^dag U over the union of touched registers
  std::vector<Register> union_regs = u.targets;
  for (const auto& t : primed_targets)
    if (std::none_of(union_regs.begin(), union_regs.end(),
                     [&](const Register& r) { return r.name == t.name; }))
      union_regs.push_back(t);
  union_regs.push_back(Register{flag, 2});
  UnitaryOp u_on_primed{primed_targets, u.mat};
  UnitaryOp tilde = compose(union_regs, {u, adjoint(u_on_primed), gate_on(flag, pauli_x2())});

  // full doubled space, ordered (system, auxiliary, primed system, B)
  const QState x_full = tensor(tensor(x, tau), sigma);
  const QState y_full = tensor(tensor(y, tau), sigma);

  const double claim = std::abs(swap_overlap(tilde, x_full, y_full));

  SwapReport rep;
  rep.gamma = generalized_gamma(u, x, y, tau);
  rep.theta = phase_angle(tilde, x_full, y_full);
  const UnitaryOp aligned = phased(tilde, rep.theta);
  const std::string anc = fresh_name(x_full.layout, "anc");
  QState aux = tensor(tensor(make_basis_state(RegisterLayout({{anc, 2}}), {0}), tau), sigma);
  Distinguisher d{detail::interference_circuit(anc, aligned), anc, std::move(aux)};

  const QState psi = superpose(x, y, 1.0, 1.0);
  const QState phi = superpose(x, y, 1.0, -1.0);
  rep.advantage = advantage(d, psi, phi);

  return GeneralizedBuild{std::move(d), tensor(tau, sigma), claim, rep};
}

/**
 * Distinguish-to-swap with advice: reduces to the plain direction on
 * |psi>|tau> and |phi>|tau>. The returned U satisfies
 * |<y|<tau|U|x>|tau> + <x|<tau|U|y>|tau>|/2 = delta.
 */
inline std::pair<UnitaryOp, double> generalized_distinguisher_to_swapper(
    const UnitaryOp& v, const QState& tau, const QState& psi, const QState& phi) {
  return build_swapper(v, tensor(psi, tau), tensor(phi, tau));
}

}  // namespace qflavor::aas
