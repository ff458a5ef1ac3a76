#pragma once

#include <vector>

#include "fermisep/tensor_core.hpp"
#include "fermisep/types.hpp"

namespace fermisep {

// One-line notation, 0-based internally: images[i] = sigma(i).
// Composition convention: (sigma o tau)(i) = sigma(tau(i)).
struct Permutation {
  std::vector<int> images;
  int sign = 1;

  int size() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
};

Permutation make_permutation(std::vector<int> images);
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);

// All N! elements of S_N with signs; supported for 1 <= N <= 8.
std::vector<Permutation> enumerate_sn(int n);

// pi_sigma sends the basis ket with digit a_i at site i to the ket carrying
// a_i at site sigma(i).  Applied matrix-free by index remapping.
struct PermutationAction {
  Permutation sigma;
  int dim_local = 0;
};

PermutationAction permutation_operator(const Permutation& sigma, int d);
StateVector apply(const PermutationAction& action, const StateVector& v);
Operator dense(const PermutationAction& action, int n);

// Partition of the site labels {1..N} into ordered disjoint nonempty blocks.
// Labels are 1-based to match the usual notation; blocks are kept sorted.
struct Partition {
  std::vector<std::vector<int>> blocks;
  int n = 0;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  // M(Gamma) = N! / prod |Gamma_k|!
  long multinomial() const;
  // 0-based site list of block k.
  std::vector<int> block_sites0(int k) const;
  std::vector<std::vector<int>> all_sites0() const;
  bool operator==(const Partition& other) const;
};

Partition make_partition(std::vector<std::vector<int>> blocks, int n);

// Gamma^sigma, blockwise image sets; block order preserved.
Partition act_on_partition(const Permutation& sigma, const Partition& gamma);

// Blockwise stabilizer I(Gamma) = {sigma : sigma(Gamma_k) = Gamma_k for all k};
// cardinality prod |Gamma_k|!.
std::vector<Permutation> stabilizer(const Partition& gamma);

// One permutation per left coset of I(Gamma), M(Gamma) in total,
// each the lexicographically least member of its coset.
std::vector<Permutation> coset_representatives(const Partition& gamma);

}  // namespace fermisep
