#pragma once

#include <map>

#include "hopf/family.hpp"

namespace hopf {

struct CheckToggles {
  bool ch_check = true;
  bool cocycles = true;
  bool tensor_multiplicities = true;
};

struct RunConfig {
  std::string command = "analyze-fiber";  // analyze-fiber | scan-family | verify-theorems
  std::string family = "central-ext-finite";
  int ell = 3;
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 0;
  int grid_samples = 4;
  // explicit parameter values (full cartesian grid); empty = family defaults
  std::map<std::string, std::vector<long long>> param_values;
  std::string format = "json";
  std::string out_path;
  int ch_samples = 64;
  CheckToggles checks;
};

/// Everything computed for one fiber, against its closed-form expectation.
struct FiberRecord {
  FiberPoint point;
  std::vector<std::pair<std::string, long long>> params;
  int sd = 0;
  int level = 0;
  std::vector<int> irr_dims;
  int irr_count = 0;
  int num_characters = 0;
  bool all_max_stable = false;
  bool in_winding_orbit = false;
  bool basic_consistent = false;
  ExpectedReport expected;
  bool matches_expected = false;
  std::string skipped_reason;                // nonempty = skipped (no analysis)
  std::string error;                         // nonempty = computational failure
  std::vector<std::string> violations;       // failed internal checks, by key

  bool skipped() const { return !skipped_reason.empty(); }
  bool failed() const { return !error.empty(); }
};

struct SuiteRow {
  std::string check;
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

struct RunReport {
  RunConfig config;
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  Fe epsilon = 0;
  std::string parameter_space;
  std::vector<FiberRecord> records;
  std::map<int, std::vector<FiberRecord const*>> strata;  // level -> records
  std::vector<SuiteRow> suite;  // populated by verify-theorems
  int exit_code = 0;

  int mismatches() const;
  int failures() const;
  int skips() const;
};

/// Shared per-family analysis context (identity-fiber data, winding orbits).
struct FamilyContext {
  const FiberFamily* fam = nullptr;
  BlockReport identity_blocks;
  std::set<FiberPoint> orbit_left;
  std::set<FiberPoint> orbit_right;
};

FamilyContext make_family_context(const FiberFamily& fam);

/// The pointwise equivalences characterizing the basic stratum: the fiber has
/// a character, all blocks are one-dimensional, the block report equals the
/// identity fiber's, and the point lies in the winding orbits.
struct BasicFiberEquivalences {
  bool has_character = false;
  bool basic = false;
  bool same_blocks_as_identity = false;
  bool in_left_orbit = false;
  bool in_right_orbit = false;

  bool consistent() const {
    return has_character == basic && basic == same_blocks_as_identity &&
           same_blocks_as_identity == in_left_orbit && in_left_orbit == in_right_orbit;
  }
};

BasicFiberEquivalences basic_fiber_equivalences(const FamilyContext& ctx, const FiberPoint& pt,
                                                const BlockReport& blocks, int num_characters);
/// Convenience overload that computes the block report and character count.
BasicFiberEquivalences basic_fiber_equivalences(const FamilyContext& ctx, const FiberPoint& pt,
                                                Rng& rng);

/// Full single-fiber pipeline. `deep_properties` additionally runs the
/// exhaustive character-action and twist-stability property checks.
FiberRecord analyze_point(const FamilyContext& ctx, const FiberPoint& point,
                          const RunConfig& config, bool deep_properties);

RunReport run_analyze_fiber(const RunConfig& config);
RunReport run_scan_family(const RunConfig& config);
RunReport run_verify_theorems(const RunConfig& config);
RunReport run_command(const RunConfig& config);

std::string render_json(const RunReport& report);
std::string render_csv(const RunReport& report);
/// Short human-readable summary (one line per record plus totals).
std::string render_summary(const RunReport& report);

}  // namespace hopf
