#include "fermisep/antisym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fermisep {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

OrthogonalStructure make_orthogonal_structure(int d, std::vector<Matrix> frames,
                                              double tol) {
  for (size_t k = 0; k < frames.size(); ++k) {
    if (frames[k].rows() != d || frames[k].cols() < 1)
      throw DomainError("orthogonal structure: frame must have d rows");
    const Matrix gram = frames[k].adjoint() * frames[k];
    if ((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() >= tol)
      throw DomainError("orthogonal structure: frame columns not orthonormal");
    for (size_t l = 0; l < k; ++l)
      if ((frames[l].adjoint() * frames[k]).cwiseAbs().maxCoeff() >= tol)
        throw DomainError("orthogonal structure: frames not pairwise orthogonal");
  }
  OrthogonalStructure v;
  v.local_dim = d;
  v.frames = std::move(frames);
  return v;
}

StateVector apply_antisymmetrizer(const StateVector& v) {
  const int n = v.num_sites;
  Vector acc = Vector::Zero(v.dim());
  for (const auto& sigma : enumerate_sn(n)) {
    const StateVector permuted = apply(permutation_operator(sigma, v.dim_local), v);
    acc += static_cast<double>(sigma.sign) * permuted.amplitudes;
  }
  acc /= std::tgamma(n + 1.0);
  return StateVector(v.dim_local, n, std::move(acc));
}

Operator antisymmetrizer(int n, int d) {
  check_dense_cap(d, n);
  const long dim = ipow(d, n);
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& sigma : enumerate_sn(n))
    m += static_cast<double>(sigma.sign) * dense(permutation_operator(sigma, d), n).entries;
  m /= std::tgamma(n + 1.0);
  return Operator(d, n, std::move(m), true);
}

Operator rescaled_antisymmetrizer(const Partition& gamma, int d) {
  Operator a = antisymmetrizer(gamma.n, d);
  a.entries *= std::sqrt(static_cast<double>(gamma.multinomial()));
  return a;
}

namespace {

// p-subsets of {0..m-1} in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int m, int p) {
  if (p == 0) return {{}};
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(p);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    subsets.push_back(pick);
    int i = p - 1;
    while (i >= 0 && pick[i] == m - p + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                  b.rbegin(), b.rend());
            });
  return subsets;
}

}  // namespace

SubspaceBasis subspace_w(int block_size, const Matrix& frame, int d) {
  if (frame.rows() != d) throw DomainError("subspace_w: frame must have d rows");
  const int m = static_cast<int>(frame.cols());
  if (m < block_size)
    throw EmptySpaceError("subspace_w: dim V_k < |Gamma_k|, no antisymmetric states fit");

  SubspaceBasis basis;
  basis.dim_local = d;
  basis.block_size = block_size;
  const double scale = std::sqrt(std::tgamma(block_size + 1.0));
  for (const auto& subset : colex_subsets(m, block_size)) {
    std::vector<StateVector> columns;
    for (int j : subset)
      columns.push_back(StateVector(d, 1, frame.col(j)));
    StateVector slater = apply_antisymmetrizer(tensor_product(columns));
    slater.amplitudes *= scale;
    basis.vectors.push_back(std::move(slater));
  }
  return basis;
}

SubspaceBasis slater_basis(int n, int d) {
  if (d < n)
    throw EmptySpaceError("slater_basis: requires d >= N");
  return subspace_w(n, Matrix::Identity(d, d), d);
}

AntisymmetrizedProduct antisymmetrize_product(const Partition& gamma,
                                              const std::vector<StateVector>& factors) {
  if (static_cast<int>(factors.size()) != gamma.num_blocks())
    throw DomainError("antisymmetrize_product: one factor per block required");
  const int d = factors.front().dim_local;
  const StateVector product = assemble_blockwise(d, gamma.n, gamma.all_sites0(), factors);
  AntisymmetrizedProduct out{rescaled_antisymmetrize(gamma, product), d < gamma.n};
  return out;
}

StateVector rescaled_antisymmetrize(const Partition& gamma, const StateVector& v) {
  if (v.num_sites != gamma.n)
    throw DomainError("rescaled_antisymmetrize: site count mismatch");
  StateVector out = apply_antisymmetrizer(v);
  out.amplitudes *= std::sqrt(static_cast<double>(gamma.multinomial()));
  return out;
}

MembershipResult asym_membership(const StateVector& v, double tol) {
  const StateVector av = apply_antisymmetrizer(v);
  const double residual = (av.amplitudes - v.amplitudes).norm();
  return MembershipResult{residual < tol, residual};
}

}  // namespace fermisep
