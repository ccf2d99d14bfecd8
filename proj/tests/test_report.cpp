#include <algorithm>

#include "doctest.h"
#include "hopf/report.hpp"

using namespace hopf;

namespace {

RunConfig base_config(const std::string& cmd, const std::string& family, int ell) {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.family = family;
  cfg.ell = ell;
  cfg.seed = 5;
  cfg.ch_samples = 8;  // keep unit tests quick; acceptance uses the full 64
  return cfg;
}

}  // namespace

TEST_CASE("analyze a single matrix-algebra fiber") {
  RunConfig cfg = base_config("analyze-fiber", "central-ext-finite", 3);
  cfg.param_values["s"] = {1};
  RunReport rep = run_analyze_fiber(cfg);
  REQUIRE(rep.records.size() == 1);
  const FiberRecord& r = rep.records[0];
  CHECK(r.sd == 9);
  CHECK(r.level == 10);
  CHECK(r.irr_dims == std::vector<int>{3});
  CHECK(r.num_characters == 0);
  CHECK(r.all_max_stable);
  CHECK_FALSE(r.in_winding_orbit);
  CHECK(r.basic_consistent);
  CHECK(r.matches_expected);
  CHECK(r.violations.empty());
  CHECK(rep.exit_code == 0);
}

TEST_CASE("analyze the torus and bulk strata of the Borel family") {
  {
    RunConfig cfg = base_config("analyze-fiber", "quantum-borel-rank1", 3);
    cfg.param_values["y"] = {1};
    cfg.param_values["x"] = {0};
    RunReport rep = run_analyze_fiber(cfg);
    const FiberRecord& r = rep.records.at(0);
    CHECK(r.sd == 3);
    CHECK(r.level == 4);
    CHECK(r.num_characters == 3);
    CHECK(r.all_max_stable);
    CHECK(r.in_winding_orbit);
    CHECK(r.matches_expected);
    CHECK(rep.exit_code == 0);
  }
  {
    RunConfig cfg = base_config("analyze-fiber", "quantum-borel-rank1", 3);
    cfg.param_values["y"] = {1};
    cfg.param_values["x"] = {1};
    RunReport rep = run_analyze_fiber(cfg);
    const FiberRecord& r = rep.records.at(0);
    CHECK(r.sd == 9);
    CHECK(r.level == 10);
    CHECK(r.irr_dims == std::vector<int>{3});
    CHECK_FALSE(r.all_max_stable);
    CHECK_FALSE(r.in_winding_orbit);
    CHECK(r.matches_expected);
    CHECK(rep.exit_code == 0);
  }
}

TEST_CASE("analyze the basic fiber") {
  RunConfig cfg = base_config("analyze-fiber", "central-ext-finite", 3);
  cfg.param_values["s"] = {0};
  RunReport rep = run_analyze_fiber(cfg);
  const FiberRecord& r = rep.records.at(0);
  CHECK(r.num_characters == 9);
  CHECK(r.irr_dims == std::vector<int>(9, 1));
  CHECK(r.in_winding_orbit);
  CHECK(r.basic_consistent);
  CHECK(r.matches_expected);
}

TEST_CASE("scan strata of the finite family") {
  RunConfig cfg = base_config("scan-family", "central-ext-finite", 4);
  RunReport rep = run_scan_family(cfg);
  CHECK(rep.records.size() == 4);
  REQUIRE(rep.strata.size() == 1);
  CHECK(rep.strata.begin()->first == 17);
  CHECK(rep.strata.begin()->second.size() == 4);
  CHECK(rep.exit_code == 0);
}

TEST_CASE("scan strata of the Borel family") {
  RunConfig cfg = base_config("scan-family", "quantum-borel-rank1", 3);
  cfg.grid_samples = 2;
  RunReport rep = run_scan_family(cfg);
  REQUIRE(rep.strata.size() == 2);
  auto it = rep.strata.begin();
  CHECK(it->first == 4);
  for (const FiberRecord* r : it->second) CHECK(r->point[1] == 0);
  ++it;
  CHECK(it->first == 10);
  for (const FiberRecord* r : it->second) CHECK(r->point[1] != 0);
  CHECK(rep.exit_code == 0);
}

TEST_CASE("skipped points are recorded and do not abort a scan") {
  RunConfig cfg = base_config("scan-family", "central-ext-infinite", 3);
  cfg.prime = 13;
  cfg.param_values["u"] = {2, 5};  // 2 is not a cube mod 13
  cfg.param_values["v"] = {8};
  cfg.param_values["s"] = {0, 1};
  RunReport rep = run_scan_family(cfg);
  CHECK(rep.records.size() == 4);
  CHECK(rep.skips() == 2);
  CHECK(rep.mismatches() == 0);
  CHECK(rep.exit_code == 0);

  // every CSV row carries the full column count
  std::string csv = render_csv(rep);
  size_t header_cols = std::count(csv.begin(), csv.begin() + csv.find('\n'), ',');
  size_t pos = 0;
  int rows = 0;
  while ((pos = csv.find('\n', pos)) != std::string::npos) {
    size_t next = csv.find('\n', pos + 1);
    if (next == std::string::npos) break;
    CHECK(static_cast<size_t>(std::count(csv.begin() + pos, csv.begin() + next, ',')) ==
          header_cols);
    pos = next;
    ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("analyze-fiber on an unconstructible point exits with code 2") {
  RunConfig cfg = base_config("analyze-fiber", "central-ext-infinite", 3);
  cfg.prime = 13;
  cfg.param_values["u"] = {2};
  cfg.param_values["v"] = {8};
  cfg.param_values["s"] = {0};
  RunReport rep = run_analyze_fiber(cfg);
  CHECK(rep.records.at(0).skipped());
  CHECK(rep.exit_code == 2);
}

TEST_CASE("config errors") {
  RunConfig cfg = base_config("scan-family", "central-ext-finite", 3);
  cfg.param_values["s"] = {};
  CHECK_THROWS_AS(run_scan_family(cfg), ConfigError);
  RunConfig cfg2 = base_config("analyze-fiber", "central-ext-finite", 3);
  cfg2.param_values["s"] = {0, 1};
  CHECK_THROWS_AS(run_analyze_fiber(cfg2), ConfigError);
  RunConfig cfg3 = base_config("scan-family", "central-ext-finite", 3);
  cfg3.param_values["u"] = {1};
  CHECK_THROWS_AS(run_scan_family(cfg3), ConfigError);
}

TEST_CASE("basic-fiber equivalences hold pointwise on both kinds of fiber") {
  Rng rng(71);
  {
    auto fam = make_family("central-ext-finite", 3, std::nullopt, 0);
    FamilyContext ctx = make_family_context(*fam);
    BasicFiberEquivalences id = basic_fiber_equivalences(ctx, fam->identity_point(), rng);
    CHECK(id.consistent());
    CHECK(id.has_character);
    CHECK(id.basic);
    CHECK(id.in_left_orbit);
    BasicFiberEquivalences m3 =
        basic_fiber_equivalences(ctx, {fam->field().eps_pow(1)}, rng);
    CHECK(m3.consistent());
    CHECK_FALSE(m3.has_character);
    CHECK_FALSE(m3.basic);
    CHECK_FALSE(m3.in_left_orbit);
  }
  {
    auto fam = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
    FamilyContext ctx = make_family_context(*fam);
    BasicFiberEquivalences torus = basic_fiber_equivalences(ctx, {1, 0}, rng);
    CHECK(torus.consistent());
    CHECK(torus.has_character);
    BasicFiberEquivalences bulk = basic_fiber_equivalences(ctx, {1, 1}, rng);
    CHECK(bulk.consistent());
    CHECK_FALSE(bulk.has_character);
    CHECK_FALSE(bulk.same_blocks_as_identity);
  }
}

TEST_CASE("verify-theorems produces an all-green matrix on a small family") {
  RunConfig cfg = base_config("verify-theorems", "central-ext-finite", 2);
  RunReport rep = run_verify_theorems(cfg);
  CHECK(!rep.suite.empty());
  for (const SuiteRow& row : rep.suite) {
    CAPTURE(row.check);
    CHECK(row.ok());
  }
  CHECK(rep.exit_code == 0);
}

TEST_CASE("reports are byte-identical across reruns with the same seed") {
  RunConfig cfg = base_config("scan-family", "quantum-borel-rank1", 3);
  cfg.grid_samples = 2;
  std::string a = render_json(run_scan_family(cfg));
  std::string b = render_json(run_scan_family(cfg));
  CHECK(a == b);
  std::string csv_a = render_csv(run_scan_family(cfg));
  std::string csv_b = render_csv(run_scan_family(cfg));
  CHECK(csv_a == csv_b);

  cfg.seed = 6;
  std::string c = render_json(run_scan_family(cfg));
  CHECK(a != c);  // the seed is part of the report
}

TEST_CASE("json reports carry the documented fields") {
  RunConfig cfg = base_config("analyze-fiber", "central-ext-finite", 2);
  cfg.param_values["s"] = {1};
  std::string js = render_json(run_analyze_fiber(cfg));
  for (const char* key :
       {"\"report_version\"", "\"config\"", "\"field_context\"", "\"parameter_space\"",
        "\"records\"", "\"strata\"", "\"suite_matrix\"", "\"summary\"",
        // record-level fields
        "\"point\"", "\"sd\"", "\"level\"", "\"irr_dims\"", "\"irr_count\"",
        "\"num_characters\"", "\"all_max_stable\"", "\"in_winding_orbit_of_identity\"",
        "\"basic_equivalences_consistent\"", "\"expected\"", "\"matches_expected\"",
        "\"violations\"",
        // field context
        "\"p\"", "\"m\"", "\"epsilon\"", "\"seed\""}) {
    CAPTURE(key);
    CHECK(js.find(key) != std::string::npos);
  }
  // a skipped record carries its reason instead
  RunConfig skip_cfg = base_config("analyze-fiber", "central-ext-infinite", 3);
  skip_cfg.prime = 13;
  skip_cfg.param_values["u"] = {2};
  skip_cfg.param_values["v"] = {8};
  skip_cfg.param_values["s"] = {0};
  std::string skipped = render_json(run_analyze_fiber(skip_cfg));
  CHECK(skipped.find("\"skipped_reason\"") != std::string::npos);
}
