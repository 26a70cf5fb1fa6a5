#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "skewsep/cli/commands.hpp"
#include "skewsep/cli/problem_io.hpp"
#include "skewsep/separability.hpp"

using namespace skewsep;
using namespace skewsep::cli;
using namespace skewsep::testing;
using nlohmann::json;

namespace {

const std::string kData = SKEWSEP_TEST_DATA;

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::vector<Vec> rows_of(const json& basis) {
  std::vector<Vec> out;
  for (const auto& row : basis) {
    Vec v;
    for (const auto& x : row) v.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long>()));
    out.push_back(v);
  }
  return out;
}

// Report field versus a fresh library computation.
void check_submodule(const json& field, const Submodule& fresh) {
  CHECK(field["rank"].get<std::size_t>() == fresh.rank());
  CHECK(rows_of(field["basis"]) == fresh.generators());
}

std::string temp_problem(const ProblemFile& p, const std::string& tag) {
  const auto path = std::filesystem::temp_directory_path() / ("skewsep_cli_" + tag + ".json");
  std::ofstream(path) << problem_to_string(p);
  return path.string();
}

}  // namespace

TEST_CASE("parse problem files") {
  const ProblemFile p = load_problem(data("worked_example.json"));
  CHECK(p.coeff_modulus == 0);
  CHECK(p.rank == 3);
  CHECK(p.basis_names == std::vector<std::string>{"e11", "e12", "e22"});
  CHECK(p.poly.size() == 3);
  auto ring = make_ring(p);
  CHECK(make_poly(*ring, p) == worked_example_poly(*ring));

  const ProblemFile big = load_problem(data("big_integer_coeff.json"));
  CHECK(big.poly[0][0] == Int("-340282366920938463463374607431768211456"));

  // serialization round trip
  const ProblemFile again = parse_problem(problem_to_string(p));
  CHECK(again.structure_constants == p.structure_constants);
  CHECK(again.rho == p.rho);
  CHECK(again.poly == p.poly);
  CHECK(parse_problem(problem_to_string(big)).poly == big.poly);
}

TEST_CASE("parse diagnostics name line and field") {
  auto message = [](const std::string& file) {
    try {
      load_problem(data(file));
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("bad_rank_mismatch.json").find(":5: field 'unit'") != std::string::npos);
  CHECK(message("bad_float.json").find(":13: field 'poly[1][2]'") != std::string::npos);
  CHECK(message("bad_syntax.json").find(":5:") != std::string::npos);
  CHECK_THROWS_AS(parse_problem(R"({"coeff_modulus": 1, "rank": 1})"), InputError);
  CHECK_THROWS_AS(parse_problem(R"({"coeff_modulus": 2, "rank": 1, "extra": 0})"), InputError);
  CHECK_THROWS_AS(parse_problem(R"({"coeff_modulus": "2x", "rank": 1})"), InputError);
  CHECK_THROWS_AS(parse_problem("[1, 2]"), InputError);
  CHECK_THROWS_AS(load_problem(data("does_not_exist.json")), InputError);
}

TEST_CASE("exit codes") {
  CHECK(run({"decide", data("worked_example.json")}).rc == kExitOk);
  CHECK(run({"decide", data("bad_rank_mismatch.json")}).rc == kExitInput);
  CHECK(run({"decide", data("bad_syntax.json")}).rc == kExitInput);
  CHECK(run({"decide", data("bad_not_monic.json")}).rc == kExitInput);
  CHECK(run({"decide", data("bad_associativity.json")}).rc == kExitInput);
  CHECK(run({"validate", data("bad_rho.json")}).rc == kExitInput);
  CHECK(run({"validate", data("worked_example.json")}).rc == kExitOk);
  const Run scope = run({"decide", data("not_in_r0.json")});
  CHECK(scope.rc == kExitScope);
  CHECK(scope.err.find("not in R0") != std::string::npos);
  const Run fixed = run({"decide", data("not_rho_fixed.json")});
  CHECK(fixed.rc == kExitScope);
  CHECK(fixed.err.find("B^rho[X]") != std::string::npos);
  CHECK(run({"check-r0", data("not_rho_fixed.json")}).rc == kExitOk);
  CHECK(run({"oracle", data("not_in_r0.json")}).rc == kExitScope);
  CHECK(run({"sweep", data("worked_example.json"), "--max-degree", "2"}).rc == kExitInput);
  CHECK(run({"frobnicate"}).rc == kExitInput);
  CHECK(run({"sweep", data("ut2_z2_corner.json")}).rc == kExitInput);
  CHECK(run({"--help"}).rc == kExitOk);
}

TEST_CASE("decide report round-trips against the library") {
  for (const char* file : {"worked_example.json", "f4_over_f2.json", "dual_numbers_f2.json",
                           "x3_minus_x_f3.json", "worked_example_mod5.json", "big_integer_coeff.json"}) {
    const Run r = run({"decide", data(file), "--json", "--witness"});
    REQUIRE(r.rc == kExitOk);
    const json rep = json::parse(r.out);
    const ProblemFile p = load_problem(data(file));
    auto ring = make_ring(p);
    auto a = QuotientRing::build(ring, make_poly(*ring, p));
    const int m = static_cast<int>(a->degree());
    CHECK(rep["in_r0"].get<bool>() == ring->is_r0_lemma(a->f()).in_r0);
    CHECK(rep["separable"].get<bool>() == is_separable(*a).separable);
    const auto ws = is_weakly_separable(*a);
    CHECK(rep["weakly_separable"].get<bool>() == ws.weakly_separable);
    const auto& sm = rep["submodules"];
    check_submodule(sm["V"], a->centralizer_of_b());
    check_submodule(sm["center"], a->center());
    check_submodule(sm["A_1"], a->twisted_centralizer(1));
    check_submodule(sm["A_1_minus_m"], a->twisted_centralizer(1 - m));
    check_submodule(sm["ker_tau"], a->tau_kernel());
    check_submodule(sm["A_1_cap_ker_tau"], ws.s1);
    check_submodule(sm["I_x_V"], ws.s2);
    const auto ex = exactness_report(*a);
    CHECK(rep["exactness"]["exact_at_a1"].get<bool>() == ex.exact_at_a1);
    CHECK(rep["exactness"]["ker_ix_is_center"].get<bool>() == ex.ker_ix_is_center);
    if (rep["separable"].get<bool>()) {
      const AElement u = a->from_flat(rows_of(json::array({rep["witness"]["flat"]}))[0]);
      CHECK(a->tau(u) == a->one());
    } else {
      CHECK(rep["witness"].is_null());
    }
  }
}

TEST_CASE("worked example report") {
  const json rep = json::parse(run({"decide", data("worked_example.json"), "--json"}).out);
  CHECK(rep["in_r0"].get<bool>());
  CHECK(rep["weakly_separable"].get<bool>());
  CHECK_FALSE(rep["separable"].get<bool>());
  CHECK(rep["submodules"]["V"]["rank"] == 2);
  CHECK(rep["submodules"]["I_x_V"]["rank"] == 0);
  CHECK_FALSE(rep.contains("witness"));
  CHECK(rep["d_type"]["tau_v_in_center"].get<bool>());

  const json f4 = json::parse(run({"decide", data("f4_over_f2.json"), "--json", "--witness"}).out);
  CHECK(f4["separable"].get<bool>());
  CHECK(f4["witness"]["flat"] == json::array({1, 0}));
}

TEST_CASE("sweep census matches the oracle command instance by instance") {
  std::vector<RingCase> rings;
  for (auto& rc : sweep_rings()) rings.push_back(rc);
  int tag = 0;
  std::size_t checked = 0;
  for (const auto& rc : rings) {
    const std::string ring_path = temp_problem(problem_from_ring(*rc.ring), "ring" + std::to_string(tag++));
    const Run s = run({"sweep", ring_path, "--max-degree", "3", "--json", "--jobs", "2"});
    REQUIRE_MESSAGE(s.rc == kExitOk, rc.name << s.err);
    const json census = json::parse(s.out);
    for (const auto& row : census["instances"]) {
      ProblemFile p = problem_from_ring(*rc.ring);
      p.poly = rows_of(row["poly"]);
      const std::string path = temp_problem(p, "inst");
      const Run o = run({"oracle", path, "--json"});
      REQUIRE_MESSAGE(o.rc == kExitOk, rc.name << " " << row["f"].get<std::string>() << o.err);
      const json orc = json::parse(o.out);
      CHECK(orc["oracle_weakly_separable"] == row["weakly_separable"]);
      CHECK(orc["oracle_weakly_separable"] == row["oracle_weakly_separable"]);
      CHECK(orc["delta_x_matches"].get<bool>());
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("validate reports violations") {
  const Run r = run({"validate", data("bad_associativity.json"), "--json"});
  CHECK(r.rc == kExitInput);
  const json rep = json::parse(r.out);
  CHECK_FALSE(rep["ring_valid"].get<bool>());
  CHECK_FALSE(rep["violations"].empty());
}
