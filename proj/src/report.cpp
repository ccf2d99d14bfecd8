#include "hopf/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hopf {

using ordered_json = nlohmann::ordered_json;

int RunReport::mismatches() const {
  int n = 0;
  for (const auto& r : records)
    if (!r.skipped() && !r.failed() && (!r.matches_expected || !r.violations.empty())) ++n;
  return n;
}

int RunReport::failures() const {
  int n = 0;
  for (const auto& r : records)
    if (r.failed()) ++n;
  return n;
}

int RunReport::skips() const {
  int n = 0;
  for (const auto& r : records)
    if (r.skipped()) ++n;
  return n;
}

FamilyContext make_family_context(const FiberFamily& fam) {
  FamilyContext ctx;
  ctx.fam = &fam;
  Rng rng(mix64(fam.field().seed() ^ 0x1d));
  FiberBundle id_bundle = fam.fiber(fam.identity_point());
  ctx.identity_blocks = wedderburn_blocks(id_bundle.algebra, rng);
  // the counit descends to a character of the identity fiber
  Character eps = counit_character(id_bundle.hopf);
  const std::vector<Character>& g0 = fam.identity_characters();
  if (std::find(g0.begin(), g0.end(), eps) == g0.end())
    throw InternalError("counit is not an algebra map on the identity fiber relations");
  ctx.orbit_left = winding_orbit_of_identity(fam, Side::left);
  ctx.orbit_right = winding_orbit_of_identity(fam, Side::right);
  return ctx;
}

BasicFiberEquivalences basic_fiber_equivalences(const FamilyContext& ctx, const FiberPoint& pt,
                                                const BlockReport& blocks, int num_characters) {
  BasicFiberEquivalences eq;
  eq.has_character = num_characters > 0;
  eq.basic = std::all_of(blocks.irreducible_dims.begin(), blocks.irreducible_dims.end(),
                         [](int d) { return d == 1; });
  eq.same_blocks_as_identity = (blocks == ctx.identity_blocks);
  eq.in_left_orbit = ctx.orbit_left.count(pt) > 0;
  eq.in_right_orbit = ctx.orbit_right.count(pt) > 0;
  return eq;
}

BasicFiberEquivalences basic_fiber_equivalences(const FamilyContext& ctx, const FiberPoint& pt,
                                                Rng& rng) {
  BlockReport blocks = wedderburn_blocks(ctx.fam->fiber(pt).algebra, rng);
  int chars = static_cast<int>(ctx.fam->fiber_characters(pt).size());
  return basic_fiber_equivalences(ctx, pt, blocks, chars);
}

namespace {

Rng point_rng(const FiberFamily& fam, const FiberPoint& point, std::uint64_t seed) {
  std::uint64_t h = mix64(seed);
  for (char ch : fam.name()) h = mix64(h ^ static_cast<unsigned char>(ch));
  h = mix64(h ^ static_cast<std::uint64_t>(fam.ell()));
  for (Fe c : point) h = mix64(h ^ c);
  return Rng(h);
}

// convolution of two characters through the generator coproducts
Character char_convolution(const PrimeField& F, const HopfSymbolTable& T, const Character& a,
                           const Character& b) {
  Character r;
  for (size_t g = 0; g < T.coproduct.size(); ++g) {
    Fe acc = 0;
    for (const auto& [left, right] : T.coproduct[g])
      acc = F.add(acc, F.mul(eval_word_scalar(F, a.values, left),
                             eval_word_scalar(F, b.values, right)));
    r.values.push_back(acc);
  }
  return r;
}

// substitute winding images into a word and evaluate inside the fiber
Vec eval_word_through(const StructureAlgebra& A, const Presentation& P,
                      const std::vector<Word>& images, const Word& w) {
  const PrimeField& F = A.field();
  Vec r = A.unit();
  for (auto& x : r) x = F.mul(w.coeff, x);
  for (const WordFactor& f : w.factors) {
    Vec img = eval_word_element(A, P, images[static_cast<size_t>(f.gen)].powered(F, f.exp));
    r = A.mul(r, img);
  }
  return r;
}

struct ClassData {
  GeneratorRep rep;
  Stabilizer stab;
  bool max_stable = false;
};

void deep_property_checks(const FamilyContext& ctx, const FiberBundle& B,
                          const std::vector<Character>& g0, const std::vector<ClassData>& classes,
                          FiberRecord& rec) {
  const FiberFamily& fam = *ctx.fam;
  const PrimeField& F = fam.field();
  auto check = [&](bool ok, const std::string& key) {
    if (!ok) rec.violations.push_back(key);
  };

  // group law: pointwise product agrees with convolution, inverses land in G0,
  // the counit is the identity
  {
    bool ok = true;
    Character eps = counit_character(B.hopf);
    if (std::find(g0.begin(), g0.end(), eps) == g0.end()) ok = false;
    for (const Character& a : g0) {
      Character ai = char_inverse(F, B.hopf, a);
      if (char_product(F, a, ai) != eps) ok = false;
      if (std::find(g0.begin(), g0.end(), ai) == g0.end()) ok = false;
      for (const Character& b : g0) {
        Character pw = char_product(F, a, b);
        if (pw != char_convolution(F, B.hopf, a, b)) ok = false;
        if (std::find(g0.begin(), g0.end(), pw) == g0.end()) ok = false;
      }
    }
    check(ok, "character-group-law");
  }

  // winding maps: relation-preserving, antihomomorphism property of the left
  // side and homomorphism of the right, inverse composes to the identity
  {
    bool ok = true;
    std::vector<std::vector<Word>> wl, wr;
    for (const Character& a : g0) {
      wl.push_back(winding(F, a, Side::left, B.hopf));
      wr.push_back(winding(F, a, Side::right, B.hopf));
    }
    for (size_t i = 0; i < g0.size(); ++i) {
      try {
        verify_winding_automorphism(B.algebra, B.pres, wl[i]);
        verify_winding_automorphism(B.algebra, B.pres, wr[i]);
      } catch (const Error&) {
        ok = false;
      }
      Character inv = char_inverse(F, B.hopf, g0[i]);
      std::vector<Word> wli = winding(F, inv, Side::left, B.hopf);
      for (int g = 0; g < B.pres.num_gens(); ++g) {
        Vec round = eval_word_through(B.algebra, B.pres, wli, wl[i][static_cast<size_t>(g)]);
        if (round != B.pres.gen_vectors[static_cast<size_t>(g)]) ok = false;
      }
    }
    for (size_t i = 0; i < g0.size() && ok; ++i)
      for (size_t j = 0; j < g0.size() && ok; ++j) {
        Character prod = char_product(F, g0[i], g0[j]);
        std::vector<Word> wprod = winding(F, prod, Side::left, B.hopf);
        for (int g = 0; g < B.pres.num_gens(); ++g) {
          // W_l(ab) = W_l(b) o W_l(a) on generators
          Vec lhs = eval_word_element(B.algebra, B.pres, wprod[static_cast<size_t>(g)]);
          Vec rhs = eval_word_through(B.algebra, B.pres, wl[j], wl[i][static_cast<size_t>(g)]);
          if (lhs != rhs) ok = false;
        }
      }
    check(ok, "winding-automorphisms");
  }

  // action axiom: chi (x) (theta (x) V) ~= (chi theta) (x) V on the seed
  {
    bool ok = true;
    for (const Character& a : g0)
      for (const Character& b : g0) {
        GeneratorRep lhs = twist_by_character(F, a, twist_by_character(F, b, B.seed, B.hopf), B.hopf);
        GeneratorRep rhs = twist_by_character(F, char_product(F, a, b), B.seed, B.hopf);
        if (!iso_witness(F, lhs, rhs)) ok = false;
      }
    check(ok, "character-action-axiom");
  }

  // maximal stability is twist-invariant
  {
    bool ok = true;
    bool seed_max = false;
    for (const ClassData& c : classes)
      if (iso_witness(F, c.rep, B.seed)) seed_max = c.max_stable;
    for (const Character& a : g0) {
      GeneratorRep tw = twist_by_character(F, a, B.seed, B.hopf);
      Stabilizer st = stabilizer(F, tw, g0, B.hopf);
      if (is_maximally_stable(tw, st) != seed_max) ok = false;
    }
    check(ok, "twist-preserves-maximal-stability");
  }
}

}  // namespace

FiberRecord analyze_point(const FamilyContext& ctx, const FiberPoint& point,
                          const RunConfig& config, bool deep_properties) {
  const FiberFamily& fam = *ctx.fam;
  const PrimeField& F = fam.field();
  FiberRecord rec;
  rec.point = point;

  std::string why;
  if (!fam.point_valid(point, &why)) {
    rec.skipped_reason = why;
    return rec;
  }
  rec.params = fam.point_params(point);
  Rng rng = point_rng(fam, point, config.seed);
  auto check = [&](bool ok, const std::string& key) {
    if (!ok) rec.violations.push_back(key);
  };

  try {
    FiberBundle B = fam.fiber(point);

    try {
      verify_hopf_table(B.algebra, B.pres, B.hopf);
    } catch (const Error& e) {
      rec.violations.push_back(std::string("hopf-table: ") + e.what());
    }

    std::string relwhy;
    check(check_relations(F, B.seed, B.pres, &relwhy) && is_irreducible(F, B.seed),
          "seed-module");

    TraceFunction tr = TraceFunction::regular(B.algebra);
    if (config.checks.ch_check) {
      CayleyHamiltonReport ch =
          cayley_hamilton_check(B.algebra, tr, B.algebra.dim(), config.ch_samples, rng);
      check(ch.pass, "cayley-hamilton");
    }

    int gram_rank = rank(F, gram_matrix(B.algebra, tr));
    BlockReport blocks = wedderburn_blocks(B.algebra, rng);
    rec.sd = blocks.sd;
    rec.level = gram_rank + 1;
    check(gram_rank == blocks.sd, "gram-rank-matches-block-sum");

    rec.num_characters = static_cast<int>(fam.fiber_characters(point).size());
    const std::vector<Character>& g0 = fam.identity_characters();

    // orbit of the seed module under G0 twists, split into iso classes
    std::vector<ClassData> classes;
    for (const Character& chi : g0) {
      GeneratorRep tw = twist_by_character(F, chi, B.seed, B.hopf);
      bool found = false;
      for (const ClassData& c : classes) {
        if (tw.dim == c.rep.dim && iso_witness(F, tw, c.rep)) {
          found = true;
          break;
        }
      }
      if (!found) {
        check(is_irreducible(F, tw), "twist-preserves-irreducibility");
        classes.push_back({std::move(tw), {}, false});
      }
    }
    std::vector<int> class_dims;
    for (const ClassData& c : classes) class_dims.push_back(c.rep.dim);
    std::sort(class_dims.begin(), class_dims.end());
    rec.irr_dims = class_dims;
    rec.irr_count = static_cast<int>(classes.size());
    check(class_dims == blocks.irreducible_dims, "orbit-classes-match-blocks");

    bool any_max = false, all_max = !classes.empty();
    for (ClassData& c : classes) {
      c.stab = stabilizer(F, c.rep, g0, B.hopf);
      try {
        c.max_stable = is_maximally_stable(c.rep, c.stab);
      } catch (const InternalError&) {
        rec.violations.push_back("stabilizer-order-bound");
        c.max_stable = false;
      }
      any_max = any_max || c.max_stable;
      all_max = all_max && c.max_stable;
      check(sd_formula_check(blocks.sd, static_cast<int>(c.stab.members.size()),
                             static_cast<int>(g0.size()), c.rep.dim),
            "sd-formula");
    }
    rec.all_max_stable = all_max;
    bool lowest = (blocks.sd == static_cast<int>(g0.size()));
    check(any_max == all_max && lowest == any_max, "max-stable-iff-lowest-level");

    if (config.checks.cocycles) {
      for (const ClassData& c : classes) {
        if (!c.max_stable) continue;
        try {
          CocycleTable ct = extract_cocycle(F, c.rep, c.stab, g0);
          std::string pq_why;
          check(verify_primitive_quotient(F, c.rep, c.stab, ct, rng, &pq_why),
                "primitive-quotient-single-block");
        } catch (const Error& e) {
          rec.violations.push_back(std::string("primitive-quotient-single-block: ") + e.what());
        }
      }
    }

    if (config.checks.tensor_multiplicities) {
      for (const ClassData& c : classes) {
        GeneratorRep dual = dual_rep(F, c.rep, B.hopf, fam.point_antipode(point));
        GeneratorRep vvd =
            tensor_rep(F, c.rep, dual, B.hopf, fam.point_product(point, dual.point));
        if (vvd.point != fam.identity_point()) {
          rec.violations.push_back("tensor-multiplicities-match-stabilizer");
          continue;
        }
        std::vector<int> mult = tensor_character_multiplicities(F, vvd, g0);
        std::vector<bool> in_stab(g0.size(), false);
        for (int m : c.stab.members) in_stab[static_cast<size_t>(m)] = true;
        bool ok = true;
        int mass = 0;
        for (size_t k = 0; k < g0.size(); ++k) {
          if (in_stab[k] != (mult[k] >= 1)) ok = false;
          mass += mult[k];
        }
        if (c.max_stable) {
          for (int m : mult)
            if (m > 1) ok = false;
          if (mass != c.rep.dim * c.rep.dim) ok = false;
        }
        check(ok, "tensor-multiplicities-match-stabilizer");
      }
    }

    BasicFiberEquivalences eq = basic_fiber_equivalences(ctx, point, blocks, rec.num_characters);
    check(eq.in_left_orbit == eq.in_right_orbit, "winding-orbit-sides-agree");
    rec.in_winding_orbit = eq.in_left_orbit;
    if (eq.in_left_orbit) check(lowest, "winding-orbit-within-lowest-level");
    rec.basic_consistent = eq.consistent();
    check(rec.basic_consistent, "basic-fiber-equivalences-agree");

    rec.expected = fam.expected_report(point);
    rec.matches_expected =
        rec.sd == rec.expected.sd && rec.level == rec.expected.level &&
        rec.irr_dims == rec.expected.irr_dims && rec.irr_count == rec.expected.irr_count &&
        rec.all_max_stable == rec.expected.all_max_stable &&
        lowest == rec.expected.in_lowest_stratum;
    check(rec.matches_expected, "closed-form-report");

    if (deep_properties) deep_property_checks(ctx, B, g0, classes, rec);
  } catch (const NonSplitBlockError& e) {
    rec.error = std::string("non-split block: ") + e.what();
  } catch (const RetryExhaustedError& e) {
    rec.error = std::string("retry exhausted: ") + e.what();
  }
  return rec;
}

namespace {

std::vector<FiberPoint> build_grid(const FiberFamily& fam, const RunConfig& config) {
  Rng grid_rng(mix64(config.seed ^ 0x9d1d));
  if (config.param_values.empty()) return fam.default_grid(config.grid_samples, grid_rng);

  // explicit grid: every family parameter must be given
  std::vector<std::string> names;
  for (const auto& [k, v] : fam.point_params(fam.identity_point())) names.push_back(k);
  std::vector<std::vector<long long>> axes;
  for (const std::string& n : names) {
    auto it = config.param_values.find(n);
    if (it == config.param_values.end() || it->second.empty())
      throw ConfigError("grid is missing values for parameter '" + n + "'");
    axes.push_back(it->second);
  }
  for (const auto& [k, v] : config.param_values) {
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw ConfigError("unknown parameter '" + k + "' for family " + fam.name());
  }
  std::vector<FiberPoint> pts;
  std::vector<size_t> cursor(axes.size(), 0);
  while (true) {
    std::vector<std::pair<std::string, long long>> named;
    for (size_t i = 0; i < axes.size(); ++i) named.emplace_back(names[i], axes[i][cursor[i]]);
    pts.push_back(fam.point_from_params(named));
    size_t i = 0;
    for (; i < axes.size(); ++i) {
      if (++cursor[i] < axes[i].size()) break;
      cursor[i] = 0;
    }
    if (i == axes.size()) break;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void aggregate_suite(RunReport& report) {
  std::map<std::string, SuiteRow> rows;
  auto note = [&](const std::string& key, bool pass) {
    SuiteRow& r = rows[key];
    r.check = key;
    (pass ? r.passed : r.failed) += 1;
  };
  // only checks that actually ran contribute rows
  std::vector<std::string> keys = {
      "seed-module",
      "gram-rank-matches-block-sum",
      "orbit-classes-match-blocks",
      "twist-preserves-irreducibility",
      "stabilizer-order-bound",
      "sd-formula",
      "max-stable-iff-lowest-level",
      "winding-orbit-sides-agree",
      "winding-orbit-within-lowest-level",
      "basic-fiber-equivalences-agree",
      "closed-form-report",
  };
  if (report.config.checks.ch_check) keys.push_back("cayley-hamilton");
  if (report.config.checks.cocycles) keys.push_back("primitive-quotient-single-block");
  if (report.config.checks.tensor_multiplicities)
    keys.push_back("tensor-multiplicities-match-stabilizer");
  if (report.config.command == "verify-theorems") {
    keys.push_back("character-group-law");
    keys.push_back("winding-automorphisms");
    keys.push_back("character-action-axiom");
    keys.push_back("twist-preserves-maximal-stability");
  }
  for (const FiberRecord& rec : report.records) {
    if (rec.skipped() || rec.failed()) continue;
    for (const std::string& k : keys) {
      bool violated = false;
      for (const std::string& v : rec.violations)
        if (v.rfind(k, 0) == 0) violated = true;
      note(k, !violated);
    }
  }
  // scan-level: the sampled minimum of sd is the character count of the
  // identity fiber, provided the grid contains a closed-form lowest point
  bool has_lowest = false;
  int min_sd = -1;
  for (const FiberRecord& rec : report.records) {
    if (rec.skipped() || rec.failed()) continue;
    has_lowest = has_lowest || rec.expected.in_lowest_stratum;
    if (min_sd < 0 || rec.sd < min_sd) min_sd = rec.sd;
  }
  if (has_lowest && report.config.command != "analyze-fiber") {
    // |G0| is the expected sd of any lowest point
    int g0 = 0;
    for (const FiberRecord& rec : report.records)
      if (!rec.skipped() && !rec.failed() && rec.expected.in_lowest_stratum)
        g0 = rec.expected.sd;
    note("minimum-sd-equals-character-count", min_sd == g0);
  }
  for (auto& [k, row] : rows) report.suite.push_back(row);
}

int resolve_exit_code(const RunReport& report) {
  if (report.failures() > 0) return 2;
  if (report.config.command == "analyze-fiber" && report.skips() > 0) return 2;
  if (report.mismatches() > 0) return 1;
  for (const SuiteRow& r : report.suite)
    if (!r.ok()) return 1;
  return 0;
}

RunReport run_pipeline(const RunConfig& config, bool deep) {
  RunConfig cfg = config;
  if (deep) cfg.checks = CheckToggles{};  // property suites need every check on
  std::unique_ptr<FiberFamily> fam = make_family(cfg.family, cfg.ell, cfg.prime, cfg.seed);
  RunReport report;
  report.config = cfg;
  report.p = fam->field().p();
  report.m = fam->field().m();
  report.epsilon = fam->field().epsilon();
  report.parameter_space = fam->parameter_space();

  FamilyContext ctx = make_family_context(*fam);
  std::vector<FiberPoint> grid = build_grid(*fam, cfg);
  if (grid.empty()) throw ConfigError("empty grid");
  if (cfg.command == "analyze-fiber" && grid.size() != 1)
    throw ConfigError("analyze-fiber needs exactly one point");

  for (const FiberPoint& pt : grid) report.records.push_back(analyze_point(ctx, pt, cfg, deep));

  for (const FiberRecord& rec : report.records)
    if (!rec.skipped() && !rec.failed())
      report.strata[rec.level].push_back(&rec);

  aggregate_suite(report);
  report.exit_code = resolve_exit_code(report);
  return report;
}

}  // namespace

RunReport run_analyze_fiber(const RunConfig& config) { return run_pipeline(config, false); }
RunReport run_scan_family(const RunConfig& config) { return run_pipeline(config, false); }
RunReport run_verify_theorems(const RunConfig& config) { return run_pipeline(config, true); }

RunReport run_command(const RunConfig& config) {
  if (config.command == "analyze-fiber") return run_analyze_fiber(config);
  if (config.command == "scan-family") return run_scan_family(config);
  if (config.command == "verify-theorems") return run_verify_theorems(config);
  throw ConfigError("unknown command '" + config.command + "'");
}

namespace {

ordered_json record_json(const FiberRecord& rec) {
  ordered_json j;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : rec.params) params[k] = v;
  j["point"] = params;
  if (rec.skipped()) {
    j["skipped_reason"] = rec.skipped_reason;
    return j;
  }
  if (rec.failed()) {
    j["error"] = rec.error;
    return j;
  }
  j["sd"] = rec.sd;
  j["level"] = rec.level;
  j["irr_dims"] = rec.irr_dims;
  j["irr_count"] = rec.irr_count;
  j["num_characters"] = rec.num_characters;
  j["all_max_stable"] = rec.all_max_stable;
  j["in_winding_orbit_of_identity"] = rec.in_winding_orbit;
  j["basic_equivalences_consistent"] = rec.basic_consistent;
  j["expected"] = {{"sd", rec.expected.sd},
                   {"level", rec.expected.level},
                   {"irr_dims", rec.expected.irr_dims},
                   {"irr_count", rec.expected.irr_count},
                   {"all_max_stable", rec.expected.all_max_stable},
                   {"in_lowest_stratum", rec.expected.in_lowest_stratum}};
  j["matches_expected"] = rec.matches_expected;
  j["violations"] = rec.violations;
  return j;
}

}  // namespace

std::string render_json(const RunReport& report) {
  const RunConfig& c = report.config;
  ordered_json j;
  j["report_version"] = 1;
  ordered_json cfg;
  cfg["command"] = c.command;
  cfg["family"] = c.family;
  cfg["ell"] = c.ell;
  if (c.prime)
    cfg["prime"] = *c.prime;
  else
    cfg["prime"] = nullptr;
  cfg["seed"] = c.seed;
  cfg["grid_samples"] = c.grid_samples;
  ordered_json pv = ordered_json::object();
  for (const auto& [k, v] : c.param_values) pv[k] = v;
  cfg["param_values"] = pv;
  cfg["format"] = c.format;
  cfg["ch_samples"] = c.ch_samples;
  cfg["checks"] = {{"ch_check", c.checks.ch_check},
                   {"cocycles", c.checks.cocycles},
                   {"tensor_multiplicities", c.checks.tensor_multiplicities}};
  j["config"] = cfg;
  j["field_context"] = {{"p", report.p}, {"m", report.m}, {"epsilon", report.epsilon},
                        {"seed", c.seed}};
  j["parameter_space"] = report.parameter_space;
  ordered_json recs = ordered_json::array();
  for (const FiberRecord& r : report.records) recs.push_back(record_json(r));
  j["records"] = recs;
  ordered_json strata = ordered_json::array();
  for (const auto& [level, members] : report.strata) {
    ordered_json pts = ordered_json::array();
    for (const FiberRecord* r : members) {
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : r->params) params[k] = v;
      pts.push_back(params);
    }
    strata.push_back({{"level", level}, {"points", pts}});
  }
  j["strata"] = strata;
  ordered_json suite = ordered_json::array();
  for (const SuiteRow& r : report.suite)
    suite.push_back({{"check", r.check}, {"passed", r.passed}, {"failed", r.failed}});
  j["suite_matrix"] = suite;
  j["summary"] = {{"points", report.records.size()},
                  {"skipped", report.skips()},
                  {"failures", report.failures()},
                  {"mismatches", report.mismatches()},
                  {"exit_code", report.exit_code}};
  return j.dump(2) + "\n";
}

namespace {

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string point_string(const FiberRecord& rec) {
  std::string s;
  for (size_t i = 0; i < rec.params.size(); ++i) {
    if (i) s += ";";
    s += rec.params[i].first + "=" + std::to_string(rec.params[i].second);
  }
  return s;
}

}  // namespace

std::string render_csv(const RunReport& report) {
  std::ostringstream out;
  out << "family,ell,p,point,sd,level,irr_dims,irr_count,num_characters,all_max_stable,"
         "in_winding_orbit,basic_consistent,matches_expected,expected_sd,expected_level,"
         "violations,skipped_reason,error\n";
  for (const FiberRecord& r : report.records) {
    out << report.config.family << ',' << report.config.ell << ',' << report.p << ','
        << point_string(r) << ',';
    if (r.skipped() || r.failed()) {
      out << std::string(12, ',') << r.skipped_reason << ',' << r.error << '\n';
      continue;
    }
    out << r.sd << ',' << r.level << ',' << join_ints(r.irr_dims, "+") << ',' << r.irr_count
        << ',' << r.num_characters << ',' << (r.all_max_stable ? 1 : 0) << ','
        << (r.in_winding_orbit ? 1 : 0) << ',' << (r.basic_consistent ? 1 : 0) << ','
        << (r.matches_expected ? 1 : 0) << ',' << r.expected.sd << ',' << r.expected.level << ',';
    std::string v;
    for (size_t i = 0; i < r.violations.size(); ++i) {
      if (i) v += "|";
      v += r.violations[i];
    }
    out << v << ",,\n";
  }
  return out.str();
}

std::string render_summary(const RunReport& report) {
  std::ostringstream out;
  out << report.config.command << " " << report.config.family << " ell=" << report.config.ell
      << " p=" << report.p << " epsilon=" << report.epsilon << " seed=" << report.config.seed
      << "\n"
      << "parameters: " << report.parameter_space << "\n";
  for (const FiberRecord& r : report.records) {
    out << "  [" << point_string(r) << "] ";
    if (r.skipped()) {
      out << "skipped: " << r.skipped_reason << "\n";
      continue;
    }
    if (r.failed()) {
      out << "error: " << r.error << "\n";
      continue;
    }
    out << "sd=" << r.sd << " level=" << r.level << " dims=" << join_ints(r.irr_dims, "+")
        << " chars=" << r.num_characters << (r.all_max_stable ? " max-stable" : "")
        << (r.in_winding_orbit ? " in-orbit" : "")
        << (r.matches_expected ? " ok" : " MISMATCH");
    if (!r.violations.empty()) out << " violations=" << r.violations.size();
    out << "\n";
  }
  if (!report.suite.empty()) {
    out << "checks:\n";
    for (const SuiteRow& row : report.suite)
      out << "  " << (row.ok() ? "PASS" : "FAIL") << " " << row.check << " (" << row.passed
          << "/" << (row.passed + row.failed) << ")\n";
  }
  out << "summary: points=" << report.records.size() << " skipped=" << report.skips()
      << " failures=" << report.failures() << " mismatches=" << report.mismatches()
      << " exit=" << report.exit_code << "\n";
  return out.str();
}

}  // namespace hopf
