#include "fermisep/scenario.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace fermisep {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Accumulates named numeric checks into a report section.
struct CheckList {
  Json checks = Json::array();
  bool all = true;

  void close(const std::string& name, double value, double expected, double tol) {
    const bool pass = std::abs(value - expected) <= tol;
    push(name, value, expected, tol, pass);
  }
  void below(const std::string& name, double value, double bound, double tol) {
    const bool pass = value <= bound + tol;
    push(name, value, bound, tol, pass);
  }
  void above(const std::string& name, double value, double bound) {
    const bool pass = value >= bound;
    push(name, value, bound, 0.0, pass);
  }
  void verdict(const std::string& name, Verdict got, Verdict want) {
    Json entry;
    entry["name"] = name;
    entry["value"] = to_string(got);
    entry["expected"] = to_string(want);
    entry["pass"] = (got == want);
    if (got != want) all = false;
    checks.push_back(std::move(entry));
  }

 private:
  void push(const std::string& name, double value, double expected, double tol,
            bool pass) {
    Json entry;
    entry["name"] = name;
    entry["value"] = round_sig(value);
    entry["expected"] = round_sig(expected);
    entry["tol"] = round_sig(tol);
    entry["pass"] = pass;
    checks.push_back(std::move(entry));
    if (!pass) all = false;
  }
};

Matrix frame_from_columns(int d, const std::vector<int>& cols) {
  Matrix frame = Matrix::Zero(d, static_cast<long>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) frame(cols[c], static_cast<long>(c)) = 1.0;
  return frame;
}

// Local basis |spin>|tag> with index spin * num_tags + tag.
Vector spin_tag(const Vector& spin, int tag, int num_tags) {
  Vector out = Vector::Zero(2 * num_tags);
  out[0 * num_tags + tag] = spin[0];
  out[1 * num_tags + tag] = spin[1];
  return out;
}

Vector spin_vec(Complex up, Complex down) {
  Vector v(2);
  v << up, down;
  return v;
}

Eigen::Vector3d unit(double x, double y, double z) {
  return Eigen::Vector3d(x, y, z).normalized();
}

// sigma(axis) projected behind a spatial tag, given spectrally on C^(2*num_tags).
SubsystemObservable tagged_pauli_obs(const std::vector<int>& block,
                                     const Eigen::Vector3d& axis, int tag,
                                     int num_tags) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(pauli(axis));
  const int d = 2 * num_tags;
  std::vector<std::pair<double, StateVector>> pairs;
  pairs.emplace_back(1.0, StateVector(d, 1, spin_tag(es.eigenvectors().col(1), tag, num_tags)));
  pairs.emplace_back(-1.0, StateVector(d, 1, spin_tag(es.eigenvectors().col(0), tag, num_tags)));
  return build_subsystem_observable(block, d, std::move(pairs));
}

Complex sandwich(const Vector& bra, const Matrix& m, const Vector& ket) {
  return bra.adjoint() * m * ket;
}

Eigen::Vector3d reproducible_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d axis;
  do {
    axis = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
  } while (axis.norm() < 1e-6);
  return axis / axis.norm();
}

StateVector singlet2() {
  Vector amps = Vector::Zero(4);
  amps[1] = 1.0 / std::sqrt(2.0);
  amps[2] = -1.0 / std::sqrt(2.0);
  return StateVector(2, 2, std::move(amps));
}

// ---------------------------------------------------------------------------
// sec2-chsh: singlet saturates the CHSH bound at the standard axes in both
// the spin-only and the spatially tagged realization, while the tagged
// product state stays below the classical bound over a seeded axis sweep.
// ---------------------------------------------------------------------------
CheckList run_sec2_chsh() {
  CheckList c;
  const double root8 = 2.0 * std::sqrt(2.0);
  const ChshAxes axes{unit(0, 0, 1), unit(1, 0, 0), unit(1, 0, 1), unit(-1, 0, 1)};

  c.close("spin_singlet_S", chsh_value(singlet2(), axes, ChshFamily::kSpinOnly),
          root8, 1e-12);

  const Partition gamma = make_partition({{1}, {2}}, 2);
  // Spin singlet times the symmetric spatial part (|LR> + |RL>)/sqrt(2):
  // antisymmetric overall, and the tagged observables see the full singlet
  // spin correlation.
  Vector lr_amps = Vector::Zero(16);
  const Vector spin_singlet =
      (Vector(4) << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0).finished();
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) {
      const Complex w = spin_singlet[s1 * 2 + s2] / std::sqrt(2.0);
      lr_amps[(s1 * 2 + 0) * 4 + (s2 * 2 + 1)] += w;  // |L>|R>
      lr_amps[(s1 * 2 + 1) * 4 + (s2 * 2 + 0)] += w;  // |R>|L>
    }
  const StateVector singlet_lr(4, 2, lr_amps);
  c.close("tagged_singlet_S",
          chsh_value(singlet_lr, axes, ChshFamily::kSpatialTagged), root8, 1e-12);

  const StateVector product =
      antisymmetrize_product(
          gamma,
          {StateVector(4, 1, spin_tag(spin_vec(std::cos(0.4), std::sin(0.4)), 0, 2)),
           StateVector(4, 1, spin_tag(spin_vec(Complex(0.6, 0.0),
                                               Complex(0.48, 0.64)), 1, 2))})
          .state;
  std::mt19937_64 rng(20240817);
  double max_s = 0.0;
  for (int i = 0; i < 250; ++i) {
    const ChshAxes sweep{reproducible_axis(rng), reproducible_axis(rng),
                         reproducible_axis(rng), reproducible_axis(rng)};
    max_s = std::max(max_s, chsh_value(product, sweep, ChshFamily::kSpatialTagged));
  }
  c.below("product_sweep_max_S", max_s, 2.0, 1e-12);
  return c;
}

// ---------------------------------------------------------------------------
// sec5a-nonunique-n3d4: the N=3, d=4 state A[(|01>-|10>)/sqrt2 x |3>] is
// separable with respect to two different orthogonal structures.
// ---------------------------------------------------------------------------
CheckList run_sec5a_nonunique() {
  CheckList c;
  const Partition gamma = make_partition({{1, 2}, {3}}, 3);
  Vector pair_amps = Vector::Zero(16);
  pair_amps[0 * 4 + 1] = 1.0 / std::sqrt(2.0);
  pair_amps[1 * 4 + 0] = -1.0 / std::sqrt(2.0);
  const StateVector psi =
      antisymmetrize_product(gamma, {StateVector(4, 2, pair_amps),
                                     basis_state(4, 1, {3})})
          .state;

  const OrthogonalStructure v = make_orthogonal_structure(
      4, {frame_from_columns(4, {0, 1}), frame_from_columns(4, {2, 3})});
  const OrthogonalStructure v_prime = make_orthogonal_structure(
      4, {frame_from_columns(4, {0, 1, 2}), frame_from_columns(4, {3})});

  const SeparabilityReport r1 = separability_test(psi, gamma, v);
  const SeparabilityReport r2 = separability_test(psi, gamma, v_prime);
  c.verdict("verdict_V", r1.verdict, Verdict::kSeparable);
  c.verdict("verdict_V_prime", r2.verdict, Verdict::kSeparable);
  c.above("fidelity_V", r1.witness_fidelity, 1.0 - 1e-10);
  c.above("fidelity_V_prime", r2.witness_fidelity, 1.0 - 1e-10);
  return c;
}

// ---------------------------------------------------------------------------
// sec5a-singlet-vtheta: the d=2 singlet is separable for a one-parameter
// family of rotated single-line structures.
// ---------------------------------------------------------------------------
CheckList run_sec5a_vtheta() {
  CheckList c;
  const Partition gamma = make_partition({{1}, {2}}, 2);
  const StateVector psi = singlet2();
  const std::vector<std::pair<double, double>> angles = {
      {0.0, 0.0}, {0.6, 1.1}, {kPi / 3.0, kPi / 4.0}};
  for (const auto& [theta, phi] : angles) {
    const Complex eip = std::exp(Complex(0, phi));
    Matrix f1(2, 1), f2(2, 1);
    f1 << std::cos(theta), eip * std::sin(theta);
    f2 << std::sin(theta), -eip * std::cos(theta);
    const OrthogonalStructure v = make_orthogonal_structure(2, {f1, f2});
    const SeparabilityReport r = separability_test(psi, gamma, v);
    const std::string tag =
        "theta=" + std::to_string(theta) + ",phi=" + std::to_string(phi);
    c.verdict("verdict[" + tag + "]", r.verdict, Verdict::kSeparable);
    c.above("fidelity[" + tag + "]", r.witness_fidelity, 1.0 - 1e-10);
  }
  return c;
}

// ---------------------------------------------------------------------------
// sec5b-nontransitive: factorizability of inner products does not propagate
// across two different orthogonal structures on an N=2, d=6 system.
// ---------------------------------------------------------------------------
CheckList run_sec5b_nontransitive() {
  CheckList c;
  const int d = 6;
  const Partition gamma = make_partition({{1}, {2}}, 2);
  const OrthogonalStructure v = make_orthogonal_structure(
      d, {frame_from_columns(d, {0, 1, 2}), frame_from_columns(d, {3, 4, 5})});
  const OrthogonalStructure v_prime = make_orthogonal_structure(
      d, {frame_from_columns(d, {0, 1, 3}), frame_from_columns(d, {2, 4, 5})});

  const auto embed = [d](const Vector& coeffs, const std::vector<int>& lines) {
    Vector out = Vector::Zero(d);
    for (int i = 0; i < 3; ++i) out[lines[i]] = coeffs[i];
    return StateVector(d, 1, std::move(out));
  };
  const auto c3 = [](double a, double b, double cc) {
    Vector v3(3);
    v3 << a, b, cc;
    return Vector(v3 / v3.norm());
  };
  const auto pair_state = [&](const StateVector& one, const StateVector& two) {
    return antisymmetrize_product(gamma, {one, two}).state;
  };

  const Vector alpha = c3(1, 1, 1), alpha_p = c3(1, -1, 2);
  const Vector beta = c3(1, 1, 0), beta_p = c3(0, 1, 1);
  const Vector g = c3(1, 2, 3), g_p = c3(3, -1, 1);

  // psi_k live on the unprimed lines, psi'_k on the primed ones.
  const StateVector psi1_a = embed(alpha, {0, 1, 2}), psi2_ap = embed(alpha_p, {3, 4, 5});
  const StateVector psi1_b = embed(beta, {0, 1, 2}), psi2_bp = embed(beta_p, {3, 4, 5});
  const StateVector psi1p_b = embed(beta, {0, 1, 3}), psi2p_bp = embed(beta_p, {2, 4, 5});
  const StateVector psi1p_g = embed(g, {0, 1, 3}), psi2p_gp = embed(g_p, {2, 4, 5});

  const StateVector big_a = pair_state(psi1_a, psi2_ap);
  const StateVector big_b = pair_state(psi1_b, psi2_bp);
  const StateVector big_bp = pair_state(psi1p_b, psi2p_bp);
  const StateVector big_g = pair_state(psi1p_g, psi2p_gp);

  // beta = (b1,b2,0), beta' = (0,b2,b3) lands in both spans simultaneously.
  c.close("intersection_state_gap", (big_b.amplitudes - big_bp.amplitudes).norm(),
          0.0, 1e-12);

  c.close("sepAB_first",
          std::abs(inner(big_a, big_b) -
                   inner(psi1_a, psi1_b) * inner(psi2_ap, psi2_bp)),
          0.0, 1e-12);
  c.close("sepAB_second",
          std::abs(inner(big_bp, big_g) -
                   inner(psi1p_b, psi1p_g) * inner(psi2p_bp, psi2p_gp)),
          0.0, 1e-12);
  c.above("insep_violation",
          std::abs(inner(big_a, big_g) -
                   inner(psi1_a, psi1p_g) * inner(psi2_ap, psi2p_gp)),
          1e-3);

  c.verdict("alpha_state_wrt_V", separability_test(big_a, gamma, v).verdict,
            Verdict::kSeparable);
  c.verdict("alpha_state_wrt_V_prime",
            separability_test(big_a, gamma, v_prime).verdict, Verdict::kNotInSpan);
  c.verdict("gamma_state_wrt_V_prime",
            separability_test(big_g, gamma, v_prime).verdict, Verdict::kSeparable);
  c.verdict("gamma_state_wrt_V", separability_test(big_g, gamma, v).verdict,
            Verdict::kNotInSpan);
  return c;
}

// ---------------------------------------------------------------------------
// sec5c-cluster-n2d4: two fermions localized left/right behave independently
// in their spins; the assembled spin observable's expectation factorizes.
// ---------------------------------------------------------------------------
CheckList run_sec5c_cluster() {
  CheckList c;
  const int d = 4;
  const Partition gamma = make_partition({{1}, {2}}, 2);
  const OrthogonalStructure vex = make_orthogonal_structure(
      d, {frame_from_columns(d, {0, 2}), frame_from_columns(d, {1, 3})});

  const Vector alpha = spin_vec(std::cos(0.3), std::exp(Complex(0, 0.2)) * std::sin(0.3));
  const Vector alpha_p = spin_vec(std::cos(1.1), std::exp(Complex(0, -0.7)) * std::sin(1.1));
  const StateVector psi =
      antisymmetrize_product(gamma, {StateVector(d, 1, spin_tag(alpha, 0, 2)),
                                     StateVector(d, 1, spin_tag(alpha_p, 1, 2))})
          .state;

  c.verdict("verdict", separability_test(psi, gamma, vex).verdict,
            Verdict::kSeparable);

  const std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>> axis_pairs = {
      {unit(0, 0, 1), unit(1, 0, 0)}, {unit(1, 1, 1), unit(0.2, -0.4, 0.6)}};
  int idx = 0;
  for (const auto& [a, b] : axis_pairs) {
    std::vector<SubsystemObservable> blocks = {tagged_pauli_obs({1}, a, 0, 2),
                                               tagged_pauli_obs({2}, b, 1, 2)};
    const Complex got = expectation_assembled(psi, gamma, blocks);
    const Complex want =
        sandwich(alpha, pauli(a), alpha) * sandwich(alpha_p, pauli(b), alpha_p);
    c.close("cdp_factorization[" + std::to_string(idx) + "]", std::abs(got - want),
            0.0, 1e-12);
    const Complex tilde = expectation(psi, assemble_o_tilde(gamma, blocks));
    c.close("coset_sum_agrees[" + std::to_string(idx) + "]", std::abs(tilde - got),
            0.0, 1e-12);
    ++idx;
  }
  return c;
}

// ---------------------------------------------------------------------------
// sec5c-helium-phi: the spin-entangled state with antisymmetrized spatial
// part sits inside the span of the localized structure but is not a single
// antisymmetrized product; its spin correlation does not factorize.
// ---------------------------------------------------------------------------
CheckList run_sec5c_helium() {
  CheckList c;
  const int d = 4;
  const Partition gamma = make_partition({{1}, {2}}, 2);
  const OrthogonalStructure vex = make_orthogonal_structure(
      d, {frame_from_columns(d, {0, 2}), frame_from_columns(d, {1, 3})});

  const Vector up = spin_vec(1, 0), down = spin_vec(0, 1);
  // (|+>|L> x |->|R> + |->|L> x |+>|R>) / sqrt(2), then A.
  Vector prod = Vector::Zero(16);
  const auto add_term = [&](const Vector& s1, const Vector& s2, double w) {
    const Vector t1 = spin_tag(s1, 0, 2), t2 = spin_tag(s2, 1, 2);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) prod[i * 4 + j] += w * t1[i] * t2[j];
  };
  add_term(up, down, 1.0 / std::sqrt(2.0));
  add_term(down, up, 1.0 / std::sqrt(2.0));
  const StateVector phi = rescaled_antisymmetrize(gamma, StateVector(d, 2, prod));
  c.close("phi_norm", phi.norm(), 1.0, 1e-12);

  const SeparabilityReport r = separability_test(phi, gamma, vex);
  c.verdict("verdict", r.verdict, Verdict::kSpanButEntangled);
  c.close("residual_span", r.residual_span, 0.0, 1e-10);
  c.above("residual_rank1", r.residual_rank1, 1e-3);

  const double half = 0.5;  // N(alpha,alpha')^2 at orthogonal spins
  const std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>> axis_pairs = {
      {unit(0, 0, 1), unit(0, 0, 1)},
      {unit(1, 0, 0), unit(1, 0, 0)},
      {unit(0.3, 0.5, 0.9), unit(-0.4, 0.2, 0.7)}};
  int idx = 0;
  for (const auto& [a, b] : axis_pairs) {
    std::vector<SubsystemObservable> blocks = {tagged_pauli_obs({1}, a, 0, 2),
                                               tagged_pauli_obs({2}, b, 1, 2)};
    const Complex got = expectation_assembled(phi, gamma, blocks);
    const Matrix sa = pauli(a), sb = pauli(b);
    const Complex four_terms =
        sandwich(up, sa, up) * sandwich(down, sb, down) +
        sandwich(down, sa, down) * sandwich(up, sb, up) +
        sandwich(up, sa, down) * sandwich(down, sb, up) +
        sandwich(down, sa, up) * sandwich(up, sb, down);
    c.close("four_term_formula[" + std::to_string(idx) + "]",
            std::abs(got - half * four_terms), 0.0, 1e-12);
    const Complex tilde = expectation(phi, assemble_o_tilde(gamma, blocks));
    c.close("coset_sum_agrees[" + std::to_string(idx) + "]", std::abs(tilde - got),
            0.0, 1e-12);
    ++idx;
  }

  // At a = b = x the four-term sum is 1 while the would-be product of the
  // individual spin expectations vanishes: no factorization.
  {
    std::vector<SubsystemObservable> blocks = {
        tagged_pauli_obs({1}, unit(1, 0, 0), 0, 2),
        tagged_pauli_obs({2}, unit(1, 0, 0), 1, 2)};
    const Complex got = expectation_assembled(phi, gamma, blocks);
    const Complex factored = sandwich(up, pauli(unit(1, 0, 0)), up) *
                             sandwich(down, pauli(unit(1, 0, 0)), down);
    c.above("nonfactorization_gap", std::abs(got - factored), 1e-3);
  }
  return c;
}

// ---------------------------------------------------------------------------
// sec5c-n4d6: N=4, d=6 cluster example with partition {{1},{2},{3,4}}; a
// genuine antisymmetrized product yields a factorized triple product while
// the spin-entangled variant produces the non-factorized four-term sum.
// ---------------------------------------------------------------------------
CheckList run_sec5c_n4d6() {
  CheckList c;
  const int d = 6;
  const Partition gamma = make_partition({{1}, {2}, {3, 4}}, 4);

  const Vector up = spin_vec(1, 0), down = spin_vec(0, 1);
  const Vector alpha = spin_vec(std::cos(0.5), std::exp(Complex(0, 0.9)) * std::sin(0.5));
  const Vector beta = spin_vec(std::cos(1.2), std::exp(Complex(0, -0.3)) * std::sin(1.2));

  // Block-3 factor: singlet spin pair, both particles tagged R.
  Vector gamma_amps = Vector::Zero(36);
  const auto add_pair = [&](Vector& out, const Vector& s1, const Vector& s2, double w) {
    const Vector t1 = spin_tag(s1, 2, 3), t2 = spin_tag(s2, 2, 3);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) out[i * 6 + j] += w * t1[i] * t2[j];
  };
  add_pair(gamma_amps, up, down, 1.0 / std::sqrt(2.0));
  add_pair(gamma_amps, down, up, -1.0 / std::sqrt(2.0));
  const StateVector gamma34(d, 2, gamma_amps);

  const StateVector psi =
      antisymmetrize_product(gamma, {StateVector(d, 1, spin_tag(alpha, 0, 3)),
                                     StateVector(d, 1, spin_tag(beta, 1, 3)),
                                     gamma34})
          .state;
  c.close("psi_norm", psi.norm(), 1.0, 1e-12);

  const Eigen::Vector3d a = unit(0.2, -0.7, 0.4), b = unit(0.9, 0.1, -0.3);
  std::vector<std::pair<double, StateVector>> proj_pair;
  proj_pair.emplace_back(1.0, gamma34);
  const SubsystemObservable o3 =
      build_subsystem_observable({3, 4}, d, std::move(proj_pair));
  std::vector<SubsystemObservable> blocks = {tagged_pauli_obs({1}, a, 0, 3),
                                             tagged_pauli_obs({2}, b, 1, 3), o3};

  const Complex triple = sandwich(alpha, pauli(a), alpha) *
                         sandwich(beta, pauli(b), beta);  // <gamma|O3|gamma> = 1
  c.close("triple_product", std::abs(expectation_assembled(psi, gamma, blocks) - triple),
          0.0, 1e-10);

  // Phi: spin-entangled pair across blocks 1 and 2, tags L and C; block 3
  // holds |+>|R> |->|R>.
  Vector pair12 = Vector::Zero(36);
  const auto add_lc = [&](const Vector& s1, const Vector& s2, double w) {
    const Vector t1 = spin_tag(s1, 0, 3), t2 = spin_tag(s2, 1, 3);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) pair12[i * 6 + j] += w * t1[i] * t2[j];
  };
  add_lc(up, down, 1.0 / std::sqrt(2.0));
  add_lc(down, up, 1.0 / std::sqrt(2.0));
  const StateVector site3(d, 1, spin_tag(up, 2, 3));
  const StateVector site4(d, 1, spin_tag(down, 2, 3));
  const StateVector product = tensor_product(
      std::vector<StateVector>{StateVector(d, 2, pair12), site3, site4});
  // The four-term sum below applies to the raw antisymmetrized image, whose
  // norm is 1/sqrt(2) here (the spin-entangled part straddles the blocks).
  const StateVector big_phi = rescaled_antisymmetrize(gamma, product);
  c.close("phi_norm", big_phi.norm(), 1.0 / std::sqrt(2.0), 1e-12);

  const Matrix sa = pauli(a), sb = pauli(b);
  const Complex four_terms =
      sandwich(up, sa, up) * sandwich(down, sb, down) +
      sandwich(down, sa, down) * sandwich(up, sb, up) +
      sandwich(up, sa, down) * sandwich(down, sb, up) +
      sandwich(down, sa, up) * sandwich(up, sb, down);
  const Complex phi_expect = expectation_assembled(big_phi, gamma, blocks);
  c.close("four_term_formula", std::abs(phi_expect - 0.25 * four_terms), 0.0, 1e-10);
  c.above("nonfactorization_gap",
          std::abs(phi_expect - 0.25 * (sandwich(up, sa, up) * sandwich(down, sb, down) +
                                        sandwich(down, sa, down) * sandwich(up, sb, up))),
          1e-3);
  return c;
}

struct ExampleEntry {
  ExampleInfo info;
  std::function<CheckList()> run;
};

const std::vector<ExampleEntry>& example_entries() {
  static const std::vector<ExampleEntry> entries = {
      {{"sec2-chsh", "II",
        "Singlet CHSH value 2*sqrt(2) in spin-only and tagged realizations; "
        "tagged product state stays at or below 2"},
       run_sec2_chsh},
      {{"sec5a-nonunique-n3d4", "V.A",
        "N=3, d=4 state separable with respect to two different orthogonal "
        "structures"},
       run_sec5a_nonunique},
      {{"sec5a-singlet-vtheta", "V.A",
        "d=2 singlet separable for a family of rotated line structures"},
       run_sec5a_vtheta},
      {{"sec5b-nontransitive", "V.B",
        "Inner-product factorizability is not transitive across structures "
        "(N=2, d=6)"},
       run_sec5b_nontransitive},
      {{"sec5c-cluster-n2d4", "V.C",
        "Left/right localized pair: assembled spin correlation factorizes "
        "(cluster decomposition)"},
       run_sec5c_cluster},
      {{"sec5c-helium-phi", "V.C",
        "Spin-entangled pair with antisymmetrized spatial part: in span but "
        "not separable; four-term correlation"},
       run_sec5c_helium},
      {{"sec5c-n4d6", "V.C",
        "N=4, d=6 partition {{1},{2},{3,4}}: factorized triple product versus "
        "non-factorized four-term sum"},
       run_sec5c_n4d6},
  };
  return entries;
}

}  // namespace

const std::vector<ExampleInfo>& example_catalog() {
  static const std::vector<ExampleInfo> catalog = [] {
    std::vector<ExampleInfo> out;
    for (const auto& e : example_entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

ReportDocument reproduce(const std::string& id) {
  for (const auto& entry : example_entries()) {
    if (entry.info.id != id) continue;
    CheckList result = entry.run();
    ReportDocument report;
    report.doc["tool"] = "fermisep";
    report.doc["tool_version"] = kToolVersion;
    report.doc["example"] = id;
    report.doc["section"] = entry.info.section;
    report.doc["description"] = entry.info.description;
    report.doc["checks"] = result.checks;
    report.doc["all_passed"] = result.all;
    report.all_passed = result.all;
    return report;
  }
  throw ParseError("unknown example id: " + id);
}

}  // namespace fermisep
