#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "qflavor/qcore/common.hpp"

namespace qflavor {

struct Register {
  std::string name;
  std::size_t dim = 0;

  bool operator==(const Register&) const = default;
};

/**
 * An ordered list of named qudit registers. The flat index of a joint basis
 * state is row-major over the declared order: the first register is the most
 * significant digit.
 */
class RegisterLayout {
public:
  RegisterLayout() = default;

  explicit RegisterLayout(std::vector<Register> regs,
                          std::size_t cap = default_dim_cap())
      : regs_(std::move(regs)) {
    if (regs_.empty()) throw layout_error("layout needs at least one register");
    dim_ = 1;
    for (const auto& r : regs_) {
      if (r.dim < 1) throw dimension_error("register dim must be >= 1: " + r.name);
      if (dim_ > cap / r.dim)
        throw dimension_error("total dimension exceeds cap " + std::to_string(cap));
      dim_ *= r.dim;
    }
    for (std::size_t i = 0; i < regs_.size(); ++i)
      for (std::size_t j = i + 1; j < regs_.size(); ++j)
        if (regs_[i].name == regs_[j].name)
          throw layout_error("duplicate register name: " + regs_[i].name);
    strides_.assign(regs_.size(), 1);
    for (std::size_t i = regs_.size(); i-- > 1;)
      strides_[i - 1] = strides_[i] * regs_[i].dim;
  }

  const std::vector<Register>& registers() const { return regs_; }
  std::size_t num_registers() const { return regs_.size(); }
  std::size_t dim() const { return dim_; }

  bool has(const std::string& name) const {
    return std::any_of(regs_.begin(), regs_.end(),
                       [&](const Register& r) { return r.name == name; });
  }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
      if (regs_[i].name == name) return i;
    throw layout_error("unknown register: " + name);
  }

  std::size_t dim_of(const std::string& name) const {
    return regs_[index_of(name)].dim;
  }

  std::size_t stride(std::size_t reg_index) const { return strides_[reg_index]; }
  std::size_t stride_of(const std::string& name) const {
    return strides_[index_of(name)];
  }

  // Flat index from one value per register, in declared order.
  std::size_t flat(const std::vector<std::size_t>& values) const {
    if (values.size() != regs_.size())
      throw dimension_error("value count does not match register count");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < regs_.size(); ++i) {
      if (values[i] >= regs_[i].dim)
        throw dimension_error("index " + std::to_string(values[i]) +
                              " out of range for register " + regs_[i].name);
      idx += values[i] * strides_[i];
    }
    return idx;
  }

  std::vector<std::size_t> unflatten(std::size_t idx) const {
    if (idx >= dim_) throw dimension_error("flat index out of range");
    std::vector<std::size_t> v(regs_.size());
    for (std::size_t i = 0; i < regs_.size(); ++i) {
      v[i] = idx / strides_[i];
      idx %= strides_[i];
    }
    return v;
  }

  std::size_t value_at(std::size_t flat_index, std::size_t reg_index) const {
    return (flat_index / strides_[reg_index]) % regs_[reg_index].dim;
  }

  bool operator==(const RegisterLayout& other) const {
    return regs_ == other.regs_;
  }

private:
  std::vector<Register> regs_;
  std::vector<std::size_t> strides_;
  std::size_t dim_ = 0;
};

// Layout with `suffix` appended to every register name (fresh copies of the
// same register shapes, e.g. primed partners).
inline RegisterLayout renamed(const RegisterLayout& l, const std::string& suffix,
                              std::size_t cap = default_dim_cap()) {
  std::vector<Register> regs = l.registers();
  for (auto& r : regs) r.name += suffix;
  return RegisterLayout(std::move(regs), cap);
}

inline RegisterLayout concat(const RegisterLayout& a, const RegisterLayout& b,
                             std::size_t cap = default_dim_cap()) {
  std::vector<Register> regs = a.registers();
  regs.insert(regs.end(), b.registers().begin(), b.registers().end());
  return RegisterLayout(std::move(regs), cap);
}

// A register name not present in `l`: `base`, then `base_1`, `base_2`, ...
inline std::string fresh_name(const RegisterLayout& l, const std::string& base) {
  if (!l.has(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!l.has(cand)) return cand;
  }
}

}  // namespace qflavor
