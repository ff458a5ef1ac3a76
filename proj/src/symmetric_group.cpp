#include "fermisep/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fermisep {

namespace {

int inversion_sign(const std::vector<int>& images) {
  int inversions = 0;
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i) return false;
  return true;
}

Permutation make_permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int img : images) {
    if (img < 0 || img >= n || seen[img])
      throw DomainError("make_permutation: images must be a bijection");
    seen[img] = true;
  }
  Permutation p;
  p.sign = inversion_sign(images);
  p.images = std::move(images);
  return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size())
    throw DomainError("compose: size mismatch");
  std::vector<int> images(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) images[i] = sigma.images[tau.images[i]];
  return make_permutation(std::move(images));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> images(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) images[sigma.images[i]] = i;
  return make_permutation(std::move(images));
}

std::vector<Permutation> enumerate_sn(int n) {
  if (n < 1 || n > 8) throw DomainError("enumerate_sn: N must be in [1, 8]");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(make_permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

PermutationAction permutation_operator(const Permutation& sigma, int d) {
  if (d < 1) throw DomainError("permutation_operator: d must be positive");
  return PermutationAction{sigma, d};
}

StateVector apply(const PermutationAction& action, const StateVector& v) {
  const int n = action.sigma.size();
  if (v.num_sites != n || v.dim_local != action.dim_local)
    throw DomainError("apply: permutation/state dimension mismatch");
  const int d = v.dim_local;
  Vector out(v.dim());
  std::vector<int> target(n);
  for (long f = 0; f < v.dim(); ++f) {
    const MultiIndex src = decode_index(f, d, n);
    for (int i = 0; i < n; ++i) target[action.sigma.images[i]] = src.digits[i];
    out[encode_index({target}, d, n)] = v.amplitudes[f];
  }
  return StateVector(d, n, std::move(out));
}

Operator dense(const PermutationAction& action, int n) {
  const int d = action.dim_local;
  if (action.sigma.size() != n)
    throw DomainError("dense: permutation size mismatch");
  check_dense_cap(d, n);
  const long dim = ipow(d, n);
  Matrix m = Matrix::Zero(dim, dim);
  std::vector<int> target(n);
  for (long c = 0; c < dim; ++c) {
    const MultiIndex src = decode_index(c, d, n);
    for (int i = 0; i < n; ++i) target[action.sigma.images[i]] = src.digits[i];
    m(encode_index({target}, d, n), c) = 1.0;
  }
  return Operator(d, n, std::move(m), false);
}

long Partition::multinomial() const {
  auto factorial = [](int k) {
    long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  long m = factorial(n);
  for (const auto& block : blocks) m /= factorial(static_cast<int>(block.size()));
  return m;
}

std::vector<int> Partition::block_sites0(int k) const {
  std::vector<int> sites;
  for (int label : blocks[k]) sites.push_back(label - 1);
  return sites;
}

std::vector<std::vector<int>> Partition::all_sites0() const {
  std::vector<std::vector<int>> out;
  for (int k = 0; k < num_blocks(); ++k) out.push_back(block_sites0(k));
  return out;
}

bool Partition::operator==(const Partition& other) const {
  return n == other.n && blocks == other.blocks;
}

Partition make_partition(std::vector<std::vector<int>> blocks, int n) {
  if (n < 1) throw DomainError("make_partition: N must be positive");
  std::vector<bool> covered(n, false);
  for (auto& block : blocks) {
    if (block.empty()) throw DomainError("make_partition: empty block");
    std::sort(block.begin(), block.end());
    for (int label : block) {
      if (label < 1 || label > n || covered[label - 1])
        throw DomainError("make_partition: blocks must partition {1..N}");
      covered[label - 1] = true;
    }
  }
  for (bool c : covered)
    if (!c) throw DomainError("make_partition: blocks must partition {1..N}");
  Partition g;
  g.blocks = std::move(blocks);
  g.n = n;
  return g;
}

Partition act_on_partition(const Permutation& sigma, const Partition& gamma) {
  if (sigma.size() != gamma.n)
    throw DomainError("act_on_partition: size mismatch");
  std::vector<std::vector<int>> blocks;
  for (const auto& block : gamma.blocks) {
    std::vector<int> image;
    for (int label : block) image.push_back(sigma.images[label - 1] + 1);
    blocks.push_back(std::move(image));
  }
  return make_partition(std::move(blocks), gamma.n);
}

std::vector<Permutation> stabilizer(const Partition& gamma) {
  std::vector<Permutation> out;
  for (const auto& sigma : enumerate_sn(gamma.n)) {
    bool stabilizes = true;
    for (const auto& block : gamma.blocks) {
      std::set<int> orig(block.begin(), block.end());
      for (int label : block)
        if (!orig.count(sigma.images[label - 1] + 1)) {
          stabilizes = false;
          break;
        }
      if (!stabilizes) break;
    }
    if (stabilizes) out.push_back(sigma);
  }
  return out;
}

std::vector<Permutation> coset_representatives(const Partition& gamma) {
  const auto group = enumerate_sn(gamma.n);
  const auto stab = stabilizer(gamma);
  std::set<std::vector<int>> covered;
  std::vector<Permutation> reps;
  for (const auto& sigma : group) {
    if (covered.count(sigma.images)) continue;
    reps.push_back(sigma);
    for (const auto& rho : stab) covered.insert(compose(sigma, rho).images);
  }
  return reps;
}

}  // namespace fermisep
