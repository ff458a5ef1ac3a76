#include "fermisep/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

namespace fermisep {

double round_sig(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::atof(buf);
}

Json complex_json(Complex z) {
  return Json::array({round_sig(z.real()), round_sig(z.imag())});
}

namespace {

Complex parse_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("complex numbers are [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Vector parse_complex_vector(const Json& j) {
  Vector v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v[i] = parse_complex(j[i]);
  return v;
}

Eigen::Vector3d parse_axis(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("axes are 3-vectors");
  return Eigen::Vector3d(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

struct ScenarioContext {
  int d = 0;
  int n = 0;
  std::optional<Partition> gamma;
  std::optional<OrthogonalStructure> structure;
  StateVector state;
  double tol = kDefaultVerdictTol;
};

StateVector named_state(const std::string& name) {
  if (name == "singlet") {
    Vector amps = Vector::Zero(4);
    amps[1] = 1.0 / std::sqrt(2.0);
    amps[2] = -1.0 / std::sqrt(2.0);
    return StateVector(2, 2, std::move(amps));
  }
  if (name == "singlet_lr") {
    // |Singlet> x (|LR> + |RL>)/sqrt(2) on d=4 locals |spin>|tag>.
    Vector spin = Vector::Zero(4);
    spin[1] = 1.0 / std::sqrt(2.0);
    spin[2] = -1.0 / std::sqrt(2.0);
    Vector amps = Vector::Zero(16);
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        const Complex c = spin[s1 * 2 + s2];
        amps[(s1 * 2 + 0) * 4 + (s2 * 2 + 1)] += c / std::sqrt(2.0);  // LR
        amps[(s1 * 2 + 1) * 4 + (s2 * 2 + 0)] += c / std::sqrt(2.0);  // RL
      }
    return StateVector(4, 2, std::move(amps));
  }
  throw ParseError("unknown named state: " + name);
}

StateVector parse_state(const Json& spec, const ScenarioContext& ctx) {
  const std::string type = spec.at("type").get<std::string>();
  if (type == "amplitudes") {
    Vector amps = parse_complex_vector(spec.at("values"));
    if (amps.size() != ipow(ctx.d, ctx.n))
      throw ParseError("state amplitudes must have length d^N");
    StateVector v(ctx.d, ctx.n, std::move(amps));
    if (spec.value("normalize", false)) v.amplitudes /= v.norm();
    return v;
  }
  if (type == "antisymmetrized_product") {
    if (!ctx.gamma) throw ParseError("antisymmetrized_product requires a partition");
    std::vector<StateVector> factors;
    const Json& list = spec.at("factors");
    for (size_t k = 0; k < list.size(); ++k) {
      const int p = static_cast<int>(ctx.gamma->blocks.at(k).size());
      Vector amps = parse_complex_vector(list[k].at("amplitudes"));
      if (amps.size() != ipow(ctx.d, p))
        throw ParseError("block factor has wrong length");
      factors.emplace_back(ctx.d, p, std::move(amps));
    }
    return antisymmetrize_product(*ctx.gamma, factors).state;
  }
  if (type == "named") return named_state(spec.at("name").get<std::string>());
  throw ParseError("unknown state type: " + type);
}

OrthogonalStructure parse_frames(const Json& frames_json, int d) {
  std::vector<Matrix> frames;
  for (const Json& frame_json : frames_json) {
    Matrix frame(d, frame_json.size());
    for (size_t c = 0; c < frame_json.size(); ++c) {
      Vector col = parse_complex_vector(frame_json[c]);
      if (col.size() != d) throw ParseError("frame columns must have length d");
      frame.col(c) = col;
    }
    frames.push_back(std::move(frame));
  }
  return make_orthogonal_structure(d, std::move(frames));
}

std::pair<Vector, Vector> pauli_eigenvectors(const Eigen::Vector3d& axis) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(pauli(axis));
  // eigenvalues ascend: col 0 -> -1, col 1 -> +1
  return {es.eigenvectors().col(1), es.eigenvectors().col(0)};
}

Vector spin_tag_vector(const Vector& spin, int tag, int num_tags) {
  Vector out = Vector::Zero(2 * num_tags);
  out[0 * num_tags + tag] = spin[0];
  out[1 * num_tags + tag] = spin[1];
  return out;
}

SubsystemObservable parse_block_observable(const Json& spec,
                                           const ScenarioContext& ctx, int k) {
  const std::string type = spec.at("type").get<std::string>();
  const std::vector<int>& block = ctx.gamma->blocks.at(k);
  const int p = static_cast<int>(block.size());
  if (type == "spectral") {
    std::vector<std::pair<double, StateVector>> pairs;
    for (const Json& pair_json : spec.at("pairs")) {
      Vector vec = parse_complex_vector(pair_json.at("vector"));
      if (vec.size() != ipow(ctx.d, p))
        throw ParseError("spectral vector has wrong length");
      pairs.emplace_back(pair_json.at("value").get<double>(),
                         StateVector(ctx.d, p, std::move(vec)));
    }
    return build_subsystem_observable(block, ctx.d, std::move(pairs));
  }
  if (type == "pauli_tagged") {
    if (p != 1) throw ParseError("pauli_tagged applies to single-site blocks");
    const int num_tags = spec.at("num_tags").get<int>();
    if (ctx.d != 2 * num_tags)
      throw ParseError("pauli_tagged requires d = 2 * num_tags");
    const int tag = spec.at("tag").get<int>();
    const auto [plus, minus] = pauli_eigenvectors(parse_axis(spec.at("axis")));
    std::vector<std::pair<double, StateVector>> pairs;
    pairs.emplace_back(1.0, StateVector(ctx.d, 1, spin_tag_vector(plus, tag, num_tags)));
    pairs.emplace_back(-1.0, StateVector(ctx.d, 1, spin_tag_vector(minus, tag, num_tags)));
    return build_subsystem_observable(block, ctx.d, std::move(pairs));
  }
  if (type == "w_identity") {
    if (!ctx.structure) throw ParseError("w_identity requires frames");
    return w_identity(block, subspace_w(p, ctx.structure->frames.at(k), ctx.d));
  }
  throw ParseError("unknown block observable type: " + type);
}

ChshFamily parse_family(const std::string& name) {
  if (name == "spin-only") return ChshFamily::kSpinOnly;
  if (name == "spatial-tagged") return ChshFamily::kSpatialTagged;
  throw ParseError("unknown chsh family: " + name);
}

Eigen::Vector3d random_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d axis;
  do {
    axis = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
  } while (axis.norm() < 1e-6);
  return axis / axis.norm();
}

void record_pass(Json& result, bool pass, bool& all_passed) {
  result["pass"] = pass;
  if (!pass) all_passed = false;
}

Json run_analysis(const Json& spec, ScenarioContext& ctx, bool& all_passed) {
  const std::string type = spec.at("type").get<std::string>();
  Json result;
  result["type"] = type;
  const double tol = spec.value("tol", ctx.tol);

  if (type == "asym") {
    const MembershipResult m = asym_membership(ctx.state, tol);
    result["member"] = m.member;
    result["residual"] = round_sig(m.residual);
    if (spec.contains("expect_member"))
      record_pass(result, m.member == spec["expect_member"].get<bool>(), all_passed);
    return result;
  }

  if (type == "separability") {
    if (!ctx.gamma || !ctx.structure)
      throw ParseError("separability analysis requires partition and frames");
    const SeparabilityReport report =
        separability_test(ctx.state, *ctx.gamma, *ctx.structure, tol);
    result["verdict"] = to_string(report.verdict);
    result["residual_span"] = round_sig(report.residual_span);
    result["residual_rank1"] = round_sig(report.residual_rank1);
    result["tolerance"] = round_sig(report.tolerance);
    if (report.verdict == Verdict::kSeparable) {
      result["witness_fidelity"] = round_sig(report.witness_fidelity);
      result["global_phase"] = complex_json(report.global_phase);
      Json witnesses = Json::array();
      for (const auto& xi : report.witnesses) {
        Json w = Json::array();
        for (long i = 0; i < xi.dim(); ++i) w.push_back(complex_json(xi.amplitudes[i]));
        witnesses.push_back(w);
      }
      result["witnesses"] = witnesses;
    }
    if (spec.contains("expect"))
      record_pass(result, to_string(report.verdict) == spec["expect"].get<std::string>(),
                  all_passed);
    return result;
  }

  if (type == "chsh") {
    const Json& axes_json = spec.at("axes");
    ChshAxes axes{parse_axis(axes_json.at("a")), parse_axis(axes_json.at("a_prime")),
                  parse_axis(axes_json.at("b")), parse_axis(axes_json.at("b_prime"))};
    const double s = chsh_value(ctx.state, axes, parse_family(spec.at("family")));
    result["S"] = round_sig(s);
    if (spec.contains("expect"))
      record_pass(result, std::abs(s - spec["expect"].get<double>()) < tol, all_passed);
    return result;
  }

  if (type == "chsh_sweep") {
    if (!spec.contains("seed"))
      throw ParseError("chsh_sweep requires an explicit seed");
    std::mt19937_64 rng(spec["seed"].get<uint64_t>());
    const int points = spec.value("points", 1000);
    const ChshFamily family = parse_family(spec.at("family"));
    double max_s = 0.0;
    for (int i = 0; i < points; ++i) {
      const ChshAxes axes{random_axis(rng), random_axis(rng), random_axis(rng),
                          random_axis(rng)};
      max_s = std::max(max_s, chsh_value(ctx.state, axes, family));
    }
    result["points"] = points;
    result["max_S"] = round_sig(max_s);
    if (spec.contains("bound"))
      record_pass(result, max_s <= spec["bound"].get<double>() + tol, all_passed);
    return result;
  }

  if (type == "expectation") {
    if (!ctx.gamma) throw ParseError("expectation analysis requires a partition");
    const Json& obs_spec = spec.at("observable");
    std::vector<SubsystemObservable> blocks;
    for (int k = 0; k < ctx.gamma->num_blocks(); ++k)
      blocks.push_back(parse_block_observable(obs_spec.at("blocks").at(k), ctx, k));
    Complex value;
    const std::string form = obs_spec.value("form", "A-sandwich");
    if (form == "A-sandwich") {
      value = expectation_assembled(ctx.state, *ctx.gamma, blocks);
    } else if (form == "coset-sum") {
      value = expectation(ctx.state, assemble_o_tilde(*ctx.gamma, blocks));
    } else {
      throw ParseError("unknown observable form: " + form);
    }
    result["value"] = complex_json(value);
    if (spec.contains("expect")) {
      const Complex want = parse_complex(spec["expect"]);
      record_pass(result, std::abs(value - want) < tol, all_passed);
    }
    return result;
  }

  throw ParseError("unknown analysis type: " + type);
}

}  // namespace

ReportDocument run_scenario(const Json& scenario, double default_tol) {
  if (!scenario.is_object()) throw ParseError("scenario must be a JSON object");
  if (scenario.value("version", 0) != 1)
    throw ParseError("unsupported scenario version (expected 1)");

  ScenarioContext ctx;
  ctx.d = scenario.at("local_dim").get<int>();
  ctx.n = scenario.at("num_sites").get<int>();
  if (ctx.d < 1 || ctx.n < 1) throw ParseError("local_dim and num_sites must be positive");
  ctx.tol = scenario.value("tol", default_tol);

  if (scenario.contains("partition")) {
    std::vector<std::vector<int>> blocks;
    for (const Json& block : scenario["partition"])
      blocks.push_back(block.get<std::vector<int>>());
    ctx.gamma = make_partition(std::move(blocks), ctx.n);
  }
  if (scenario.contains("frames"))
    ctx.structure = parse_frames(scenario["frames"], ctx.d);

  ctx.state = parse_state(scenario.at("state"), ctx);
  if (!ctx.state.amplitudes.allFinite())
    throw ParseError("state amplitudes must be finite");

  ReportDocument report;
  report.doc["tool"] = "fermisep";
  report.doc["tool_version"] = kToolVersion;
  report.doc["scenario_version"] = 1;
  report.doc["input"] = scenario;
  report.doc["tolerance"] = round_sig(ctx.tol);
  Json analyses = Json::array();
  for (const Json& spec : scenario.value("analyses", Json::array()))
    analyses.push_back(run_analysis(spec, ctx, report.all_passed));
  report.doc["analyses"] = analyses;
  report.doc["all_passed"] = report.all_passed;
  return report;
}

ReportDocument run_scenario_file(const std::string& path, double default_tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  Json scenario;
  try {
    scenario = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario parse error: ") + e.what());
  }
  return run_scenario(scenario, default_tol);
}

}  // namespace fermisep
