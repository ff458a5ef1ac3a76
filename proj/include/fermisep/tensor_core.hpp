#pragma once

#include <vector>

#include "fermisep/types.hpp"

namespace fermisep {

// Basis ordering is row-major with site 1 most significant, matching the
// left-to-right tensor notation |a_1>|a_2>...|a_N>.
struct MultiIndex {
  std::vector<int> digits;
};

struct StateVector {
  int dim_local = 0;
  int num_sites = 0;
  Vector amplitudes;

  StateVector() = default;
  StateVector(int d, int n, Vector amps);

  long dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
  bool is_normalized(double tol = 1e-12) const;
};

struct Operator {
  int dim_local = 0;
  int num_sites = 0;
  Matrix entries;
  bool hermitian = false;

  Operator() = default;
  Operator(int d, int n, Matrix m, bool herm = false);

  long dim() const { return entries.rows(); }
};

long encode_index(const MultiIndex& idx, int d, int n);
MultiIndex decode_index(long flat, int d, int n);

StateVector basis_state(int d, int n, const std::vector<int>& digits);
Operator identity_operator(int d, int n);

StateVector tensor_product(const std::vector<StateVector>& factors);
Operator tensor_product(const std::vector<Operator>& factors);

Complex inner(const StateVector& bra, const StateVector& ket);

StateVector apply(const Operator& op, const StateVector& v);

// Scatter a vector living on the tensor factor of `sites` (0-based, in the
// given order) into the full N-site space; remaining sites must be covered by
// the other calls, so this is the building block for blockwise products.
// amplitude(a) = prod_k block_k[digits of a at sites_k].
StateVector assemble_blockwise(int d, int n,
                               const std::vector<std::vector<int>>& site_groups,
                               const std::vector<StateVector>& block_vectors);

// Dense operator acting as prod_k O_k on the given site groups, which must
// cover all N sites exactly once.
Operator assemble_blockwise_operator(int d, int n,
                                     const std::vector<std::vector<int>>& site_groups,
                                     const std::vector<Operator>& block_ops);

// prod_k O_k applied to a vector without materializing the full matrix.
StateVector apply_blockwise_operator(int d, int n,
                                     const std::vector<std::vector<int>>& site_groups,
                                     const std::vector<Operator>& block_ops,
                                     const StateVector& v);

// Restriction of a full-space vector's digits to a site group, used when
// transporting block vectors between partitions.
long restrict_index(long flat, int d, int n, const std::vector<int>& sites);

void check_dense_cap(int d, int n);

}  // namespace fermisep
