#pragma once

#include <functional>
#include <random>
#include <vector>

#include "fermisep/antisym.hpp"
#include "fermisep/observables.hpp"
#include "fermisep/separability.hpp"
#include "fermisep/symmetric_group.hpp"
#include "fermisep/tensor_core.hpp"

namespace testutil {

using namespace fermisep;

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Vector random_complex_vector(std::mt19937_64& rng, long n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (long i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v;
}

inline Vector random_unit_vector(std::mt19937_64& rng, long n) {
  Vector v = random_complex_vector(rng, n);
  return v / v.norm();
}

inline Eigen::Vector3d random_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d a;
  do {
    a = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
  } while (a.norm() < 1e-6);
  return a.normalized();
}

// Haar-ish random unitary via QR of a Gaussian matrix.
inline Matrix random_unitary(std::mt19937_64& rng, long n) {
  Matrix g(n, n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < n; ++j)
    if (std::abs(r(j, j)) > 0) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

// Normalized random element of the antisymmetric subspace; requires d >= N.
inline StateVector random_antisymmetric_state(std::mt19937_64& rng, int d, int n) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    StateVector raw(d, n, random_complex_vector(rng, ipow(d, n)));
    StateVector projected = apply_antisymmetrizer(raw);
    if (projected.norm() > 1e-8) {
      projected.amplitudes /= projected.norm();
      return projected;
    }
  }
  throw std::runtime_error("antisymmetric subspace too small for random draw");
}

// Random normalized vector inside W(Gamma_k, V_k), expressed on the block
// ambient space.
inline StateVector random_w_factor(std::mt19937_64& rng, const SubspaceBasis& basis) {
  const Vector coeffs = random_unit_vector(rng, basis.dim());
  Vector amps = Vector::Zero(basis.vectors[0].dim());
  for (int i = 0; i < basis.dim(); ++i)
    amps += coeffs[i] * basis.vectors[i].amplitudes;
  return StateVector(basis.dim_local, basis.block_size, std::move(amps));
}

// Random orthogonal structure for gamma: rotate the canonical basis by a
// random unitary and hand out consecutive column groups of sizes >= |block|.
inline OrthogonalStructure random_structure(std::mt19937_64& rng,
                                            const Partition& gamma, int d) {
  const Matrix u = random_unitary(rng, d);
  std::vector<Matrix> frames;
  int col = 0;
  int spare = d;
  for (int k = 0; k < gamma.num_blocks(); ++k)
    spare -= static_cast<int>(gamma.blocks[k].size());
  for (int k = 0; k < gamma.num_blocks(); ++k) {
    int width = static_cast<int>(gamma.blocks[k].size());
    if (spare > 0 && (rng() & 1)) {
      ++width;
      --spare;
    }
    frames.push_back(u.middleCols(col, width));
    col += width;
  }
  return make_orthogonal_structure(d, std::move(frames));
}

// Random spectral observable on an ambient space of dimension dim: random
// orthonormal eigenvectors (columns of a unitary) with Gaussian eigenvalues.
inline SubsystemObservable random_spectral_observable(std::mt19937_64& rng,
                                                      const std::vector<int>& block,
                                                      int d) {
  const long dim = ipow(d, static_cast<int>(block.size()));
  const Matrix u = random_unitary(rng, dim);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::pair<double, StateVector>> pairs;
  for (long c = 0; c < dim; ++c)
    pairs.emplace_back(gauss(rng),
                       StateVector(d, static_cast<int>(block.size()), u.col(c)));
  return build_subsystem_observable(block, d, std::move(pairs));
}

// Random observable supported in W(Gamma_k, V_k): rotate the Slater basis of
// the block by a unitary in coefficient space.
inline SubsystemObservable random_w_observable(std::mt19937_64& rng,
                                               const std::vector<int>& block,
                                               const SubspaceBasis& basis) {
  const int m = basis.dim();
  const Matrix u = random_unitary(rng, m);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::pair<double, StateVector>> pairs;
  for (int c = 0; c < m; ++c) {
    Vector amps = Vector::Zero(basis.vectors[0].dim());
    for (int i = 0; i < m; ++i) amps += u(i, c) * basis.vectors[i].amplitudes;
    pairs.emplace_back(gauss(rng),
                       StateVector(basis.dim_local, basis.block_size, std::move(amps)));
  }
  return build_subsystem_observable(block, basis.dim_local, std::move(pairs), &basis);
}

// All set partitions of {1..n}, each with blocks sorted and ordered by least
// element (restricted-growth enumeration).
inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> assign(n, 0);
  const std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(max_used);
      for (int j = 0; j < n; ++j) blocks[assign[j]].push_back(j + 1);
      out.push_back(make_partition(std::move(blocks), n));
      return;
    }
    for (int b = 0; b <= max_used; ++b) {
      assign[i] = b;
      rec(i + 1, std::max(max_used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

// Dense permutation matrix built directly from the defining action on basis
// kets, independent of the library's matrix-free implementation.
inline Matrix dense_permutation_oracle(const Permutation& sigma, int d, int n) {
  const long dim = ipow(d, n);
  Matrix m = Matrix::Zero(dim, dim);
  for (long a = 0; a < dim; ++a) {
    const MultiIndex digits = decode_index(a, d, n);
    std::vector<int> target(n);
    for (int i = 0; i < n; ++i) target[sigma.images[i]] = digits.digits[i];
    m(encode_index(MultiIndex{target}, d, n), a) = 1.0;
  }
  return m;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testutil
