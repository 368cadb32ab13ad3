#pragma once

#include <random>
#include <string>
#include <vector>

#include "qflavor/qcore/density.hpp"

namespace qflavor {

using Rng = std::mt19937_64;

/**
 * Exact outcome distribution of a computational-basis measurement of one
 * register. Probabilities sum to 1 within kNormTol.
 */
inline Eigen::VectorXd measure_probabilities(const QState& s, const std::string& reg) {
  const std::size_t ri = s.layout.index_of(reg);
  const std::size_t d = s.layout.registers()[ri].dim;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = 0; i < s.amp.size(); ++i)
    p[s.layout.value_at(i, ri)] += std::norm(s.amp[i]);
  return p;
}

/**
 * Post-measurement state after observing `outcome` on `reg` (renormalized).
 */
inline QState collapse(const QState& s, const std::string& reg, std::size_t outcome) {
  const std::size_t ri = s.layout.index_of(reg);
  if (outcome >= s.layout.registers()[ri].dim)
    throw dimension_error("measurement outcome out of register range");
  Vec amp = Vec::Zero(s.amp.size());
  double mass = 0.0;
  for (Eigen::Index i = 0; i < s.amp.size(); ++i) {
    if (s.layout.value_at(i, ri) == outcome) {
      amp[i] = s.amp[i];
      mass += std::norm(s.amp[i]);
    }
  }
  if (mass <= kNormTol) throw collapse_error("collapse onto zero-probability outcome");
  amp /= std::sqrt(mass);
  return QState(s.layout, std::move(amp));
}

inline std::size_t sample_outcome(const QState& s, const std::string& reg, Rng& rng) {
  const Eigen::VectorXd p = measure_probabilities(s, reg);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = u(rng), acc = 0.0;
  for (Eigen::Index v = 0; v + 1 < p.size(); ++v) {
    acc += p[v];
    if (r < acc) return static_cast<std::size_t>(v);
  }
  return static_cast<std::size_t>(p.size() - 1);
}

/**
 * Probability of outcome 1 (the |-> projector) when a dim-2 register is
 * measured in the Hadamard basis.
 */
inline double hadamard_outcome1_probability(const QState& s, const std::string& reg) {
  if (s.layout.dim_of(reg) != 2)
    throw layout_error("Hadamard-basis measurement needs a dim-2 register: " + reg);
  QState rotated = apply(gate_on(reg, hadamard2()), s);
  return measure_probabilities(rotated, reg)[1];
}

inline QState hadamard_collapse(const QState& s, const std::string& reg,
                                std::size_t outcome) {
  if (s.layout.dim_of(reg) != 2)
    throw layout_error("Hadamard-basis measurement needs a dim-2 register: " + reg);
  QState rotated = apply(gate_on(reg, hadamard2()), s);
  return apply(gate_on(reg, hadamard2()), collapse(rotated, reg, outcome));
}

/**
 * Remove a register that is (up to kNormTol mass) in the basis state |value>,
 * returning the state over the remaining registers.
 */
inline QState drop_register(const QState& s, const std::string& reg, std::size_t value) {
  const std::size_t ri = s.layout.index_of(reg);
  if (s.layout.num_registers() < 2)
    throw layout_error("cannot drop the only register");
  const auto idx = detail::subset_index(s.layout, {reg});
  Vec amp(idx.complement_offsets.size());
  double dropped = 0.0;
  for (std::size_t c = 0; c < idx.complement_offsets.size(); ++c)
    amp[c] = s.amp[idx.complement_offsets[c] + idx.target_offsets[value]];
  for (std::size_t v = 0; v < idx.target_offsets.size(); ++v) {
    if (v == value) continue;
    for (std::size_t coff : idx.complement_offsets)
      dropped += std::norm(s.amp[coff + idx.target_offsets[v]]);
  }
  if (dropped > kNormTol)
    throw collapse_error("register carries amplitude outside the dropped value");
  std::vector<Register> regs;
  for (std::size_t i = 0; i < s.layout.num_registers(); ++i)
    if (i != ri) regs.push_back(s.layout.registers()[i]);
  return QState(RegisterLayout(std::move(regs), s.layout.dim()), std::move(amp));
}

/**
 * Contraction (<bra| (x) I)|s>: the bra covers a subset of s's registers, the
 * result lives on the rest. The returned amplitudes are NOT normalized.
 */
inline QState contract_bra(const QState& bra, const QState& s) {
  std::vector<std::string> names;
  for (const auto& r : bra.layout.registers()) {
    if (!s.layout.has(r.name) || s.layout.dim_of(r.name) != r.dim)
      throw layout_error("bra register missing in state: " + r.name);
    names.push_back(r.name);
  }
  if (names.size() == s.layout.num_registers())
    throw layout_error("bra covers the whole state; use inner() instead");
  const auto idx = detail::subset_index(s.layout, names);
  Vec amp = Vec::Zero(idx.complement_offsets.size());
  for (std::size_t c = 0; c < idx.complement_offsets.size(); ++c)
    for (std::size_t t = 0; t < idx.target_offsets.size(); ++t)
      amp[c] += std::conj(bra.amp[t]) * s.amp[idx.complement_offsets[c] + idx.target_offsets[t]];
  std::vector<Register> rest;
  for (const auto& r : s.layout.registers()) {
    bool in_bra = false;
    for (const auto& n : names) in_bra = in_bra || n == r.name;
    if (!in_bra) rest.push_back(r);
  }
  return QState(RegisterLayout(std::move(rest), s.layout.dim()), std::move(amp));
}

}  // namespace qflavor
