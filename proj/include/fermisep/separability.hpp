#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermisep/antisym.hpp"
#include "fermisep/observables.hpp"

namespace fermisep {

enum class Verdict { kSeparable, kNotInSpan, kSpanButEntangled };

std::string to_string(Verdict v);

struct SeparabilityReport {
  Verdict verdict = Verdict::kNotInSpan;
  // One xi_k per block when separable, on the block ambient spaces,
  // first nonzero coordinate real positive.
  std::vector<StateVector> witnesses;
  double residual_span = 0.0;
  double residual_rank1 = 0.0;
  double tolerance = 0.0;
  Complex global_phase = 1.0;
  double witness_fidelity = 0.0;  // |<Xi|Psi>|
};

// A state known to be A(Gamma) applied to blockwise W-factors; carries the
// certification Lemma 2 and Theorem 1 need.
struct FactorizedState {
  Partition gamma;
  OrthogonalStructure structure;
  std::vector<StateVector> factors;  // block ambient spaces, in W(Gamma_k,V_k)
  StateVector full;
};

FactorizedState make_factorized_state(const Partition& gamma,
                                      const OrthogonalStructure& v,
                                      std::vector<StateVector> factors,
                                      double support_tol = 1e-12);

Complex expectation(const StateVector& psi, const Operator& o);
Complex expectation(const StateVector& psi, const AssembledObservable& o);

// <psi| A (x O_k) A |psi> evaluated as <A psi| x O_k |A psi> without
// materializing the full operator; the only route above the dense cap.
Complex expectation_assembled(const StateVector& psi, const Partition& gamma,
                              const std::vector<SubsystemObservable>& obs);

struct FactorizedInner {
  std::vector<Complex> per_block;
  Complex total;
};

// <Phi|Psi> = prod_k <phi_k|psi_k> for certified states sharing (Gamma, V).
FactorizedInner inner_product_factors(const FactorizedState& phi,
                                      const FactorizedState& psi);

struct WeakValueResult {
  Complex total;
  std::vector<Complex> per_block;
  std::vector<Complex> denominators;
};

WeakValueResult weak_value(const FactorizedState& phi, const FactorizedState& psi,
                           const AssembledObservable& o, double tol = 1e-12);

// Constructive decision procedure for membership in S(Gamma, V):
// project onto the isometric image of tensor_k W(Gamma_k, V_k), then peel
// the coefficient tensor block-by-block with dominant singular pairs.
SeparabilityReport separability_test(const StateVector& psi, const Partition& gamma,
                                     const OrthogonalStructure& v,
                                     double tol = kDefaultVerdictTol);

struct ProjectorCriterionResult {
  std::vector<double> values;  // <Psi|P^(k)|Psi>, in block order of supplied P_k
  bool verdict = false;
};

enum class ProjectorMode { kAllBlocks, kEconomical };

// Definition 1 (all s projectors) / Proposition 4 (economical: omit block t).
// projectors[k] must be rank-1 in W(Gamma_k, V_k); in economical mode the
// entry for the omitted block is ignored.
ProjectorCriterionResult projector_criterion(
    const StateVector& psi, const Partition& gamma, const OrthogonalStructure& v,
    const std::vector<std::optional<StateVector>>& rank1_vectors,
    ProjectorMode mode = ProjectorMode::kAllBlocks, double tol = kDefaultVerdictTol);

struct FullSeparabilityResult {
  std::vector<double> values;  // <Psi|E^(i)|Psi>
  bool verdict = false;
  double eaident_residual = 0.0;  // || A E A - P ||_max
};

// Proposition 5: E^(i) = 1 - (1 - P_i)^xN with mutually orthogonal rank-1
// single-site projectors P_i = |v_i><v_i|.
FullSeparabilityResult full_separability_e(const StateVector& psi,
                                           const std::vector<StateVector>& site_vectors,
                                           double tol = kDefaultVerdictTol);

enum class ChshFamily { kSpinOnly, kSpatialTagged };

struct ChshAxes {
  Eigen::Vector3d a, a_prime, b, b_prime;
};

// S = |C(a,b) + C(a,b') + C(a',b) - C(a',b')|.
// Spin-only family: C = <Psi| A sigma(x, y) A |Psi> on d=2, N=2.
// Spatial-tagged family: C = <Psi| A (sigma(x)|L><L| x sigma(y)|R><R|) A |Psi>
// on d=4 with local basis |spin>|tag>, tags L,R.
double chsh_value(const StateVector& psi, const ChshAxes& axes, ChshFamily family);
double chsh_correlation(const StateVector& psi, const Eigen::Vector3d& x,
                        const Eigen::Vector3d& y, ChshFamily family);

// Pauli matrix along a unit axis.
Matrix pauli(const Eigen::Vector3d& axis);

}  // namespace fermisep
