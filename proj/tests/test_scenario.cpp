#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fermisep/scenario.hpp"
#include "helpers.hpp"

using namespace fermisep;

namespace {

Json base_singlet_scenario() {
  Json scenario;
  scenario["version"] = 1;
  scenario["local_dim"] = 2;
  scenario["num_sites"] = 2;
  scenario["state"] = {{"type", "named"}, {"name", "singlet"}};
  return scenario;
}

}  // namespace

TEST_CASE("singlet CHSH scenario reports the saturated value") {
  Json scenario = base_singlet_scenario();
  scenario["analyses"] = Json::array({Json{
      {"type", "chsh"},
      {"family", "spin-only"},
      {"axes",
       {{"a", {0, 0, 1}},
        {"a_prime", {1, 0, 0}},
        {"b", {1.0 / std::sqrt(2.0), 0, 1.0 / std::sqrt(2.0)}},
        {"b_prime", {-1.0 / std::sqrt(2.0), 0, 1.0 / std::sqrt(2.0)}}}},
      {"expect", 2.0 * std::sqrt(2.0)},
      {"tol", 1e-12}}});
  const ReportDocument report = run_scenario(scenario, 1e-10);
  CHECK(report.all_passed);
  const double s = report.doc["analyses"][0]["S"].get<double>();
  CHECK(std::abs(s - 2.0 * std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("reports are byte-identical across runs") {
  Json scenario = base_singlet_scenario();
  scenario["analyses"] = Json::array({Json{{"type", "asym"}, {"expect_member", true}}});
  CHECK(run_scenario(scenario, 1e-10).to_string() ==
        run_scenario(scenario, 1e-10).to_string());
}

TEST_CASE("separability analysis through the scenario layer") {
  Json scenario;
  scenario["version"] = 1;
  scenario["local_dim"] = 2;
  scenario["num_sites"] = 2;
  scenario["partition"] = Json::array({Json::array({1}), Json::array({2})});
  // each frame: list of columns, each column a list of [re, im] pairs
  const Json col0 = Json::array({Json::array({1, 0}), Json::array({0, 0})});
  const Json col1 = Json::array({Json::array({0, 0}), Json::array({1, 0})});
  scenario["frames"] = Json::array({Json::array({col0}), Json::array({col1})});
  scenario["state"] = {{"type", "named"}, {"name", "singlet"}};
  scenario["analyses"] =
      Json::array({Json{{"type", "separability"}, {"expect", "separable"}}});
  const ReportDocument report = run_scenario(scenario, 1e-10);
  CHECK(report.all_passed);
  CHECK(report.doc["analyses"][0]["verdict"] == "separable");
}

TEST_CASE("expectation analysis factorizes for a tagged product state") {
  Json scenario;
  scenario["version"] = 1;
  scenario["local_dim"] = 4;
  scenario["num_sites"] = 2;
  scenario["partition"] = Json::array({Json::array({1}), Json::array({2})});
  // factors |+>|L> and |->|R| expressed as amplitude vectors
  scenario["state"] = {
      {"type", "antisymmetrized_product"},
      {"factors",
       Json::array(
           {Json{{"amplitudes", Json::array({Json::array({1, 0}), Json::array({0, 0}),
                                             Json::array({0, 0}), Json::array({0, 0})})}},
            Json{{"amplitudes",
                  Json::array({Json::array({0, 0}), Json::array({0, 0}),
                               Json::array({0, 0}), Json::array({1, 0})})}}})}};
  scenario["analyses"] = Json::array({Json{
      {"type", "expectation"},
      {"observable",
       {{"form", "A-sandwich"},
        {"blocks", Json::array({Json{{"type", "pauli_tagged"},
                                     {"axis", {0, 0, 1}},
                                     {"tag", 0},
                                     {"num_tags", 2}},
                                Json{{"type", "pauli_tagged"},
                                     {"axis", {0, 0, 1}},
                                     {"tag", 1},
                                     {"num_tags", 2}}})}}},
      {"expect", Json::array({-1.0, 0.0})},
      {"tol", 1e-12}}});
  const ReportDocument report = run_scenario(scenario, 1e-10);
  CHECK(report.all_passed);
}

TEST_CASE("scenario validation errors") {
  Json scenario = base_singlet_scenario();
  scenario["version"] = 2;
  CHECK_THROWS_AS(run_scenario(scenario, 1e-10), ParseError);

  Json bad_state = base_singlet_scenario();
  bad_state["state"] = {{"type", "amplitudes"},
                        {"values", Json::array({Json::array({1, 0})})}};
  CHECK_THROWS_AS(run_scenario(bad_state, 1e-10), ParseError);

  Json sweep = base_singlet_scenario();
  sweep["analyses"] =
      Json::array({Json{{"type", "chsh_sweep"}, {"family", "spin-only"}}});
  CHECK_THROWS_AS(run_scenario(sweep, 1e-10), ParseError);  // seed required

  const char* path = "malformed_scenario_test.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(run_scenario_file(path, 1e-10), ParseError);
  std::remove(path);
  CHECK_THROWS_AS(run_scenario_file("does_not_exist.json", 1e-10), ParseError);
}

TEST_CASE("float output is rounded to 15 significant digits") {
  CHECK(round_sig(1.0 / 3.0) == doctest::Approx(0.333333333333333).epsilon(1e-15));
  CHECK(round_sig(0.0) == 0.0);
  CHECK(round_sig(-2.5) == -2.5);
}

TEST_CASE("example catalog is stable and complete") {
  const auto& catalog = example_catalog();
  REQUIRE(catalog.size() == 7);
  CHECK(catalog[0].id == "sec2-chsh");
  CHECK(catalog[1].id == "sec5a-nonunique-n3d4");
  CHECK(catalog[2].id == "sec5a-singlet-vtheta");
  CHECK(catalog[3].id == "sec5b-nontransitive");
  CHECK(catalog[4].id == "sec5c-cluster-n2d4");
  CHECK(catalog[5].id == "sec5c-helium-phi");
  CHECK(catalog[6].id == "sec5c-n4d6");
}

TEST_CASE("every built-in example passes its embedded expectations") {
  for (const auto& entry : example_catalog()) {
    const ReportDocument report = reproduce(entry.id);
    INFO(entry.id);
    CHECK(report.all_passed);
  }
  CHECK_THROWS_AS(reproduce("nope"), ParseError);
}
