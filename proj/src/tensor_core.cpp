#include "fermisep/tensor_core.hpp"

#include <cmath>

namespace fermisep {

StateVector::StateVector(int d, int n, Vector amps)
    : dim_local(d), num_sites(n), amplitudes(std::move(amps)) {
  if (d < 1 || n < 1) throw DomainError("StateVector: dims must be positive");
  if (amplitudes.size() != ipow(d, n))
    throw DomainError("StateVector: amplitude length must be d^N");
  if (!amplitudes.allFinite())
    throw DomainError("StateVector: amplitudes must be finite");
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) < tol;
}

Operator::Operator(int d, int n, Matrix m, bool herm)
    : dim_local(d), num_sites(n), entries(std::move(m)), hermitian(herm) {
  const long dim = ipow(d, n);
  if (entries.rows() != dim || entries.cols() != dim)
    throw DomainError("Operator: matrix must be square with side d^N");
  if (hermitian) {
    const double dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (dev >= 1e-12) throw DomainError("Operator: hermitian flag violated");
  }
}

long encode_index(const MultiIndex& idx, int d, int n) {
  if (static_cast<int>(idx.digits.size()) != n)
    throw DomainError("encode_index: wrong number of digits");
  long flat = 0;
  for (int i = 0; i < n; ++i) {
    const int a = idx.digits[i];
    if (a < 0 || a >= d) throw DomainError("encode_index: digit out of range");
    flat = flat * d + a;
  }
  return flat;
}

MultiIndex decode_index(long flat, int d, int n) {
  if (flat < 0 || flat >= ipow(d, n))
    throw DomainError("decode_index: flat index out of range");
  MultiIndex idx;
  idx.digits.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    idx.digits[i] = static_cast<int>(flat % d);
    flat /= d;
  }
  return idx;
}

StateVector basis_state(int d, int n, const std::vector<int>& digits) {
  Vector v = Vector::Zero(ipow(d, n));
  v[encode_index({digits}, d, n)] = 1.0;
  return StateVector(d, n, std::move(v));
}

Operator identity_operator(int d, int n) {
  const long dim = ipow(d, n);
  return Operator(d, n, Matrix::Identity(dim, dim), true);
}

StateVector tensor_product(const std::vector<StateVector>& factors) {
  if (factors.empty()) throw DomainError("tensor_product: empty factor list");
  const int d = factors.front().dim_local;
  Vector acc = factors.front().amplitudes;
  int n = factors.front().num_sites;
  for (size_t f = 1; f < factors.size(); ++f) {
    if (factors[f].dim_local != d)
      throw DomainError("tensor_product: mixed local dimensions");
    const Vector& b = factors[f].amplitudes;
    Vector next(acc.size() * b.size());
    for (long i = 0; i < acc.size(); ++i)
      next.segment(i * b.size(), b.size()) = acc[i] * b;
    acc = std::move(next);
    n += factors[f].num_sites;
  }
  return StateVector(d, n, std::move(acc));
}

Operator tensor_product(const std::vector<Operator>& factors) {
  if (factors.empty()) throw DomainError("tensor_product: empty factor list");
  const int d = factors.front().dim_local;
  Matrix acc = factors.front().entries;
  int n = factors.front().num_sites;
  bool herm = factors.front().hermitian;
  for (size_t f = 1; f < factors.size(); ++f) {
    if (factors[f].dim_local != d)
      throw DomainError("tensor_product: mixed local dimensions");
    const Matrix& b = factors[f].entries;
    Matrix next(acc.rows() * b.rows(), acc.cols() * b.cols());
    for (long i = 0; i < acc.rows(); ++i)
      for (long j = 0; j < acc.cols(); ++j)
        next.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
            acc(i, j) * b;
    acc = std::move(next);
    n += factors[f].num_sites;
    herm = herm && factors[f].hermitian;
  }
  return Operator(d, n, std::move(acc), herm);
}

Complex inner(const StateVector& bra, const StateVector& ket) {
  if (bra.dim_local != ket.dim_local || bra.num_sites != ket.num_sites)
    throw DomainError("inner: dimension mismatch");
  return bra.amplitudes.dot(ket.amplitudes);
}

StateVector apply(const Operator& op, const StateVector& v) {
  if (op.dim_local != v.dim_local || op.num_sites != v.num_sites)
    throw DomainError("apply: dimension mismatch");
  return StateVector(v.dim_local, v.num_sites, op.entries * v.amplitudes);
}

namespace {

// Strides for reading a site group's digits off a full flat index.
std::vector<long> site_strides(int d, int n) {
  std::vector<long> s(n);
  long acc = 1;
  for (int i = n - 1; i >= 0; --i) {
    s[i] = acc;
    acc *= d;
  }
  return s;
}

}  // namespace

long restrict_index(long flat, int d, int n, const std::vector<int>& sites) {
  long out = 0;
  for (int site : sites) {
    if (site < 0 || site >= n) throw DomainError("restrict_index: bad site");
    const long digit = (flat / ipow(d, n - 1 - site)) % d;
    out = out * d + digit;
  }
  return out;
}

StateVector assemble_blockwise(int d, int n,
                               const std::vector<std::vector<int>>& site_groups,
                               const std::vector<StateVector>& block_vectors) {
  if (site_groups.size() != block_vectors.size())
    throw DomainError("assemble_blockwise: group/vector count mismatch");
  std::vector<bool> covered(n, false);
  for (size_t k = 0; k < site_groups.size(); ++k) {
    if (static_cast<int>(site_groups[k].size()) != block_vectors[k].num_sites ||
        block_vectors[k].dim_local != d)
      throw DomainError("assemble_blockwise: block dimension mismatch");
    for (int site : site_groups[k]) {
      if (site < 0 || site >= n || covered[site])
        throw DomainError("assemble_blockwise: sites must cover 0..N-1 once");
      covered[site] = true;
    }
  }
  for (bool c : covered)
    if (!c) throw DomainError("assemble_blockwise: sites must cover 0..N-1 once");

  const long dim = ipow(d, n);
  Vector out(dim);
  for (long f = 0; f < dim; ++f) {
    Complex amp = 1.0;
    for (size_t k = 0; k < site_groups.size(); ++k)
      amp *= block_vectors[k].amplitudes[restrict_index(f, d, n, site_groups[k])];
    out[f] = amp;
  }
  return StateVector(d, n, std::move(out));
}

Operator assemble_blockwise_operator(int d, int n,
                                     const std::vector<std::vector<int>>& site_groups,
                                     const std::vector<Operator>& block_ops) {
  check_dense_cap(d, n);
  if (site_groups.size() != block_ops.size())
    throw DomainError("assemble_blockwise_operator: group/op count mismatch");
  bool herm = true;
  for (size_t k = 0; k < site_groups.size(); ++k) {
    if (static_cast<int>(site_groups[k].size()) != block_ops[k].num_sites ||
        block_ops[k].dim_local != d)
      throw DomainError("assemble_blockwise_operator: block dimension mismatch");
    herm = herm && block_ops[k].hermitian;
  }
  const long dim = ipow(d, n);
  Matrix out(dim, dim);
  for (long r = 0; r < dim; ++r) {
    std::vector<long> rsub(site_groups.size());
    for (size_t k = 0; k < site_groups.size(); ++k)
      rsub[k] = restrict_index(r, d, n, site_groups[k]);
    for (long c = 0; c < dim; ++c) {
      Complex e = 1.0;
      for (size_t k = 0; k < site_groups.size() && e != 0.0; ++k)
        e *= block_ops[k].entries(rsub[k], restrict_index(c, d, n, site_groups[k]));
      out(r, c) = e;
    }
  }
  return Operator(d, n, std::move(out), herm);
}

StateVector apply_blockwise_operator(int d, int n,
                                     const std::vector<std::vector<int>>& site_groups,
                                     const std::vector<Operator>& block_ops,
                                     const StateVector& v) {
  if (v.dim_local != d || v.num_sites != n)
    throw DomainError("apply_blockwise_operator: dimension mismatch");
  const long dim = v.dim();
  const size_t groups = site_groups.size();
  std::vector<std::vector<long>> sub(groups, std::vector<long>(dim));
  for (size_t k = 0; k < groups; ++k)
    for (long f = 0; f < dim; ++f)
      sub[k][f] = restrict_index(f, d, n, site_groups[k]);
  Vector out = Vector::Zero(dim);
  for (long r = 0; r < dim; ++r) {
    Complex acc = 0.0;
    for (long c = 0; c < dim; ++c) {
      if (v.amplitudes[c] == 0.0) continue;
      Complex e = 1.0;
      for (size_t k = 0; k < groups && e != 0.0; ++k)
        e *= block_ops[k].entries(sub[k][r], sub[k][c]);
      acc += e * v.amplitudes[c];
    }
    out[r] = acc;
  }
  return StateVector(d, n, std::move(out));
}

void check_dense_cap(int d, int n) {
  if (ipow(d, n) > kDenseCap)
    throw CapacityError("dense operators capped at d^N <= 4096");
}

}  // namespace fermisep
