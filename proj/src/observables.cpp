#include "fermisep/observables.hpp"

#include <algorithm>
#include <cmath>

namespace fermisep {

Operator SubsystemObservable::dense() const {
  const long dim = ipow(dim_local, block_size());
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [value, vec] : spectral_pairs)
    m += value * (vec.amplitudes * vec.amplitudes.adjoint());
  return Operator(dim_local, block_size(), std::move(m), true);
}

SubsystemObservable build_subsystem_observable(
    const std::vector<int>& block, int d,
    std::vector<std::pair<double, StateVector>> spectral_pairs,
    const SubspaceBasis* support, double tol) {
  SubsystemObservable obs;
  obs.block = block;
  std::sort(obs.block.begin(), obs.block.end());
  obs.dim_local = d;
  const int p = obs.block_size();
  for (auto& [value, vec] : spectral_pairs) {
    if (!std::isfinite(value))
      throw DomainError("subsystem observable: eigenvalue must be real and finite");
    if (vec.dim_local != d || vec.num_sites != p)
      throw DomainError("subsystem observable: eigenvector lives off the block space");
    if (support != nullptr) {
      Vector projected = Vector::Zero(vec.dim());
      for (const auto& basis_vec : support->vectors)
        projected += basis_vec.amplitudes.dot(vec.amplitudes) * basis_vec.amplitudes;
      if ((vec.amplitudes - projected).norm() >= tol)
        throw SupportError("subsystem observable: eigenvector outside W(Gamma_k, V_k)");
    }
  }
  // Orthonormality across the supplied eigenvectors.
  for (size_t i = 0; i < spectral_pairs.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      const Complex overlap =
          spectral_pairs[i].second.amplitudes.dot(spectral_pairs[j].second.amplitudes);
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(overlap - want) >= 1e-10)
        throw DomainError("subsystem observable: eigenvectors not orthonormal");
    }
  obs.spectral_pairs = std::move(spectral_pairs);
  return obs;
}

SubsystemObservable w_identity(const std::vector<int>& block,
                               const SubspaceBasis& basis) {
  std::vector<std::pair<double, StateVector>> pairs;
  for (const auto& vec : basis.vectors) pairs.emplace_back(1.0, vec);
  return build_subsystem_observable(block, basis.dim_local, std::move(pairs));
}

namespace {

Operator blockwise_tensor(const Partition& gamma, int d,
                          const std::vector<SubsystemObservable>& obs) {
  if (static_cast<int>(obs.size()) != gamma.num_blocks())
    throw DomainError("assemble: one observable per block required");
  std::vector<Operator> block_ops;
  for (int k = 0; k < gamma.num_blocks(); ++k) {
    if (obs[k].block != gamma.blocks[k])
      throw DomainError("assemble: observable block does not match partition block");
    block_ops.push_back(obs[k].dense());
  }
  return assemble_blockwise_operator(d, gamma.n, gamma.all_sites0(), block_ops);
}

int local_dim(const std::vector<SubsystemObservable>& obs) {
  if (obs.empty()) throw DomainError("assemble: empty observable list");
  return obs.front().dim_local;
}

}  // namespace

AssembledObservable assemble_o(const Partition& gamma,
                               std::vector<SubsystemObservable> obs) {
  const int d = local_dim(obs);
  check_dense_cap(d, gamma.n);
  const Operator x = blockwise_tensor(gamma, d, obs);
  const Matrix a = rescaled_antisymmetrizer(gamma, d).entries;
  AssembledObservable out;
  out.op = Operator(d, gamma.n, a * x.entries * a, true);
  out.gamma = gamma;
  out.factors = std::move(obs);
  out.form = AssemblyForm::kASandwich;
  return out;
}

AssembledObservable assemble_o(const Partition& gamma,
                               const OrthogonalStructure& v,
                               std::vector<SubsystemObservable> obs,
                               double support_tol) {
  if (v.num_spaces() != gamma.num_blocks())
    throw DomainError("assemble_o: one V_k per block required");
  const int d = local_dim(obs);
  for (int k = 0; k < gamma.num_blocks(); ++k) {
    const SubspaceBasis basis =
        subspace_w(static_cast<int>(gamma.blocks[k].size()), v.frames[k], d);
    // Re-validate support via the builder.
    build_subsystem_observable(obs[k].block, d, obs[k].spectral_pairs, &basis,
                               support_tol);
  }
  AssembledObservable out = assemble_o(gamma, std::move(obs));
  out.structure = v;
  return out;
}

AssembledObservable assemble_o_tilde(const Partition& gamma,
                                     std::vector<SubsystemObservable> obs) {
  const int d = local_dim(obs);
  check_dense_cap(d, gamma.n);
  const Operator x = blockwise_tensor(gamma, d, obs);
  Matrix acc = Matrix::Zero(x.dim(), x.dim());
  // pi X pi^dag only relabels rows and columns, so scatter by the index map
  // of pi instead of multiplying dense permutation matrices.
  std::vector<long> map(x.dim());
  std::vector<int> target(gamma.n);
  for (const auto& sigma : coset_representatives(gamma)) {
    for (long f = 0; f < x.dim(); ++f) {
      const MultiIndex src = decode_index(f, d, gamma.n);
      for (int i = 0; i < gamma.n; ++i) target[sigma.images[i]] = src.digits[i];
      map[f] = encode_index({target}, d, gamma.n);
    }
    for (long c = 0; c < x.dim(); ++c)
      for (long r = 0; r < x.dim(); ++r) acc(map[r], map[c]) += x.entries(r, c);
  }
  AssembledObservable out;
  out.op = Operator(d, gamma.n, std::move(acc), true);
  out.gamma = gamma;
  out.factors = std::move(obs);
  out.form = AssemblyForm::kCosetSum;
  return out;
}

AssembledObservable marginal_observable(int k, const Partition& gamma,
                                        const OrthogonalStructure& v,
                                        const SubsystemObservable& o_k) {
  if (k < 0 || k >= gamma.num_blocks())
    throw DomainError("marginal_observable: block index out of range");
  const int d = o_k.dim_local;
  std::vector<SubsystemObservable> obs;
  for (int i = 0; i < gamma.num_blocks(); ++i) {
    if (i == k) {
      obs.push_back(o_k);
    } else {
      const SubspaceBasis basis =
          subspace_w(static_cast<int>(gamma.blocks[i].size()), v.frames[i], d);
      obs.push_back(w_identity(gamma.blocks[i], basis));
    }
  }
  AssembledObservable out = assemble_o(gamma, v, std::move(obs));
  return out;
}

AssembledObservable compose(const AssembledObservable& a,
                            const AssembledObservable& b, double tol) {
  if (!(a.gamma == b.gamma))
    throw DomainError("compose: observables assembled over different partitions");
  const int d = a.op.dim_local;
  std::vector<SubsystemObservable> product_factors;
  for (int k = 0; k < a.gamma.num_blocks(); ++k) {
    const Matrix prod = a.factors[k].dense().entries * b.factors[k].dense().entries;
    if ((prod - prod.adjoint()).cwiseAbs().maxCoeff() >= tol)
      throw ClosureError("compose: blockwise product is not self-adjoint");
    Eigen::SelfAdjointEigenSolver<Matrix> es((prod + prod.adjoint()) / 2.0);
    std::vector<std::pair<double, StateVector>> pairs;
    const int p = a.factors[k].block_size();
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
      if (std::abs(es.eigenvalues()[i]) < 1e-13) continue;
      pairs.emplace_back(es.eigenvalues()[i],
                         StateVector(d, p, es.eigenvectors().col(i)));
    }
    product_factors.push_back(
        build_subsystem_observable(a.gamma.blocks[k], d, std::move(pairs)));
  }
  if (a.structure.has_value())
    return assemble_o(a.gamma, *a.structure, std::move(product_factors));
  return assemble_o(a.gamma, std::move(product_factors));
}

StateVector transport_block_vector(const StateVector& v,
                                   const std::vector<int>& block,
                                   const std::vector<int>& image_block,
                                   const Permutation& sigma) {
  const int p = static_cast<int>(block.size());
  if (v.num_sites != p || static_cast<int>(image_block.size()) != p)
    throw DomainError("transport_block_vector: size mismatch");
  // position of sigma(site) within the sorted image block
  std::vector<int> target_pos(p);
  for (int i = 0; i < p; ++i) {
    const int image_label = sigma.images[block[i] - 1] + 1;
    const auto it = std::find(image_block.begin(), image_block.end(), image_label);
    if (it == image_block.end())
      throw DomainError("transport_block_vector: sigma does not map block to image");
    target_pos[i] = static_cast<int>(it - image_block.begin());
  }
  const int d = v.dim_local;
  Vector out(v.dim());
  std::vector<int> target(p);
  for (long f = 0; f < v.dim(); ++f) {
    const MultiIndex src = decode_index(f, d, p);
    for (int i = 0; i < p; ++i) target[target_pos[i]] = src.digits[i];
    out[encode_index({target}, d, p)] = v.amplitudes[f];
  }
  return StateVector(d, p, std::move(out));
}

bool permuted_assembly_equal(const Partition& gamma, const Permutation& sigma,
                             const std::vector<SubsystemObservable>& obs,
                             double tol) {
  const AssembledObservable original = assemble_o(gamma, obs);
  const Partition gamma_sigma = act_on_partition(sigma, gamma);
  std::vector<SubsystemObservable> transported;
  for (int k = 0; k < gamma.num_blocks(); ++k) {
    std::vector<std::pair<double, StateVector>> pairs;
    for (const auto& [value, vec] : obs[k].spectral_pairs)
      pairs.emplace_back(value, transport_block_vector(vec, gamma.blocks[k],
                                                       gamma_sigma.blocks[k], sigma));
    transported.push_back(build_subsystem_observable(
        gamma_sigma.blocks[k], obs[k].dim_local, std::move(pairs)));
  }
  const AssembledObservable moved = assemble_o(gamma_sigma, transported);
  return (original.op.entries - moved.op.entries).cwiseAbs().maxCoeff() < tol;
}

}  // namespace fermisep
