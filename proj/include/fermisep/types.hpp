#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fermisep {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Dense operators are only materialized up to this total dimension.
inline constexpr long kDenseCap = 4096;

inline constexpr double kDefaultVerdictTol = 1e-10;
inline constexpr double kDefaultAlgebraTol = 1e-12;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested dense object exceeds kDenseCap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spectral vector lies outside the required subspace.
struct SupportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Blockwise product failed to stay self-adjoint.
struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dim V_k < |Gamma_k|: no antisymmetric states fit.
struct EmptySpaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs lack the certification required by the operation.
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularOverlapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace fermisep
