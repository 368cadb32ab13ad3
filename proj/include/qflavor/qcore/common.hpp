#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qflavor {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Tolerance for structural invariants (normalization, unitarity, PSD checks).
inline constexpr double kNormTol = 1e-10;
// Tolerance for theorem identities verified numerically.
inline constexpr double kIdTol = 1e-9;

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Index out of range, size cap exceeded, matrix shape mismatch.
class dimension_error : public error {
public:
  using error::error;
};

// Unknown register, duplicate name, register/role bookkeeping violations.
class layout_error : public error {
public:
  using error::error;
};

// Empty sets, off-image points and similar value-domain violations.
class domain_error : public error {
public:
  using error::error;
};

// A documented theorem precondition does not hold (e.g. non-orthogonal inputs).
class precondition_error : public error {
public:
  using error::error;
};

// Numerical invariant broken beyond tolerance (non-PSD input, norm drift).
class numeric_error : public error {
public:
  using error::error;
};

// Conditioning on a zero-probability measurement outcome.
class collapse_error : public error {
public:
  using error::error;
};

// Global default cap on the total Hilbert-space dimension of a layout.
// Individual layouts may be constructed with an explicit (larger) cap.
inline std::size_t& detail_default_dim_cap() {
  static std::size_t cap = std::size_t{1} << 14;
  return cap;
}

inline std::size_t default_dim_cap() { return detail_default_dim_cap(); }

inline void set_default_dim_cap(std::size_t cap) {
  if (cap == 0) throw dimension_error("dimension cap must be positive");
  detail_default_dim_cap() = cap;
}

}  // namespace qflavor
