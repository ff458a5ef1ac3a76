#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fermisep/antisym.hpp"
#include "fermisep/symmetric_group.hpp"
#include "fermisep/tensor_core.hpp"

namespace fermisep {

// Observable on a block's ambient space, given spectrally.  When an
// orthogonal structure is bound, every eigenvector must lie inside
// W(Gamma_k, V_k).
struct SubsystemObservable {
  std::vector<int> block;  // 1-based site labels, sorted
  int dim_local = 0;
  std::vector<std::pair<double, StateVector>> spectral_pairs;

  int block_size() const { return static_cast<int>(block.size()); }
  Operator dense() const;
};

SubsystemObservable build_subsystem_observable(
    const std::vector<int>& block, int d,
    std::vector<std::pair<double, StateVector>> spectral_pairs,
    const SubspaceBasis* support = nullptr, double tol = 1e-12);

// Block identity projector onto W(Gamma_k, V_k): all eigenvalues 1 over a
// full W basis.
SubsystemObservable w_identity(const std::vector<int>& block,
                               const SubspaceBasis& basis);

enum class AssemblyForm { kASandwich, kCosetSum };

struct AssembledObservable {
  Operator op;
  Partition gamma;
  std::optional<OrthogonalStructure> structure;
  std::vector<SubsystemObservable> factors;
  AssemblyForm form = AssemblyForm::kASandwich;
};

// O(Gamma) = A(Gamma) (tensor_k O_k) A(Gamma).  The overload with a
// structure validates eigenvector support in the W spaces first.
AssembledObservable assemble_o(const Partition& gamma,
                               std::vector<SubsystemObservable> obs);
AssembledObservable assemble_o(const Partition& gamma,
                               const OrthogonalStructure& v,
                               std::vector<SubsystemObservable> obs,
                               double support_tol = 1e-12);

// O~(Gamma) = sum over coset representatives pi_sigma (tensor O_k) pi_sigma^dag.
AssembledObservable assemble_o_tilde(const Partition& gamma,
                                     std::vector<SubsystemObservable> obs);

// O^(k) = A (I_1 x ... x O_k x ... x I_s) A with I_i the W-projectors.
AssembledObservable marginal_observable(int k, const Partition& gamma,
                                        const OrthogonalStructure& v,
                                        const SubsystemObservable& o_k);

// Blockwise product; the product of each O_k O'_k must stay self-adjoint.
AssembledObservable compose(const AssembledObservable& a,
                            const AssembledObservable& b, double tol = 1e-12);

// Builds O(Gamma^sigma) by transporting the spectral vectors with pi_sigma
// and compares it densely against O(Gamma).
bool permuted_assembly_equal(const Partition& gamma, const Permutation& sigma,
                             const std::vector<SubsystemObservable>& obs,
                             double tol = 1e-12);

// Transport of a block vector from sites Gamma_k to sites sigma(Gamma_k),
// both in sorted site order.
StateVector transport_block_vector(const StateVector& v,
                                   const std::vector<int>& block,
                                   const std::vector<int>& image_block,
                                   const Permutation& sigma);

}  // namespace fermisep
