#pragma once

#include <optional>
#include <vector>

#include "fermisep/symmetric_group.hpp"
#include "fermisep/tensor_core.hpp"

namespace fermisep {

// Pairwise-orthogonal subspaces V_k of C^d, each given as an orthonormal
// frame (columns).
struct OrthogonalStructure {
  int local_dim = 0;
  std::vector<Matrix> frames;

  int num_spaces() const { return static_cast<int>(frames.size()); }
  int space_dim(int k) const { return static_cast<int>(frames[k].cols()); }
};

OrthogonalStructure make_orthogonal_structure(int d, std::vector<Matrix> frames,
                                              double tol = 1e-12);

// Orthonormal Slater-determinant basis of W(Gamma_k, V_k), living on the
// block's ambient space (C^d)^(|Gamma_k|).
struct SubspaceBasis {
  int dim_local = 0;
  int block_size = 0;
  std::vector<StateVector> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }
};

// Matrix-free application of the plain anti-symmetrizer (1/N!) sum sgn pi.
StateVector apply_antisymmetrizer(const StateVector& v);

Operator antisymmetrizer(int n, int d);
// A(Gamma) = sqrt(M(Gamma)) * antisymmetrizer.
Operator rescaled_antisymmetrizer(const Partition& gamma, int d);

// Slater basis of Asym(tensor_{i in Gamma_k} V_k), indexed by increasing
// column subsets of the frame in colexicographic order.
SubspaceBasis subspace_w(int block_size, const Matrix& frame, int d);

// Full Slater basis of Asym (C^d)^N, dimension binomial(d, N).
SubspaceBasis slater_basis(int n, int d);

struct AntisymmetrizedProduct {
  StateVector state;
  // Set when d < N forces the result to vanish identically.
  bool degenerate_zero = false;
};

// |Psi> = A(Gamma) tensor_k |psi_k>, factors given on the block ambient
// spaces in partition order.
AntisymmetrizedProduct antisymmetrize_product(const Partition& gamma,
                                              const std::vector<StateVector>& factors);

// A(Gamma) applied to an already assembled full-space vector.
StateVector rescaled_antisymmetrize(const Partition& gamma, const StateVector& v);

struct MembershipResult {
  bool member = false;
  double residual = 0.0;
};

// residual = || A v - v ||
MembershipResult asym_membership(const StateVector& v, double tol = 1e-12);

long binomial(int n, int k);

}  // namespace fermisep
