#include <algorithm>

#include "doctest.h"
#include "hopf/family.hpp"
#include "hopf/trace.hpp"

using namespace hopf;

TEST_CASE("default prime selection and overrides") {
  CHECK(make_family("central-ext-finite", 3, std::nullopt, 0)->field().p() == 97);
  CHECK(make_family("central-ext-finite", 2, std::nullopt, 0)->field().p() == 17);
  CHECK(make_family("quantum-borel-rank1", 5, std::nullopt, 0)->field().p() == 631);
  // explicit override only needs p = 1 mod ell and p > fiber dim
  CHECK(make_family("central-ext-finite", 3, 13, 0)->field().p() == 13);
  CHECK_THROWS_AS(make_family("central-ext-finite", 3, 7, 0), ConfigError);   // 7 <= 9
  CHECK_THROWS_AS(make_family("central-ext-finite", 3, 17, 0), ConfigError);  // 17 != 1 mod 3
  CHECK_THROWS_AS(make_family("quantum-borel-rank1", 4, std::nullopt, 0), ConfigError);
  CHECK_THROWS_AS(make_family("quantum-borel-rank1", 1, std::nullopt, 0), ConfigError);
  CHECK_THROWS_AS(make_family("no-such-family", 3, std::nullopt, 0), ConfigError);
}

TEST_CASE("ell-th roots in F_p") {
  PrimeField F(13, 3, 0);
  // cubes mod 13 are {1, 5, 8, 12}
  for (Fe a : {1, 5, 8, 12}) {
    auto r = ell_th_root(F, a, 3);
    REQUIRE(r.has_value());
    CHECK(F.pow(*r, 3) == a);
  }
  for (Fe a : {2, 3, 4, 6, 7, 9, 10, 11}) CHECK_FALSE(ell_th_root(F, a, 3).has_value());
  CHECK(*ell_th_root(F, 0, 3) == 0);
}

TEST_CASE("point validity and skip reasons") {
  auto fam = make_family("central-ext-infinite", 3, 13, 0);
  std::string why;
  CHECK(fam->point_valid({5, 8, 1}, &why));
  CHECK_FALSE(fam->point_valid({2, 5, 1}, &why));  // 2 is not a cube mod 13
  CHECK(why.find("root") != std::string::npos);
  CHECK_FALSE(fam->point_valid({0, 5, 1}, &why));
  CHECK_FALSE(fam->point_valid({5, 5, 2}, &why));  // 2 is not a cube root of unity

  auto borel = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
  CHECK(borel->point_valid({1, 0}, &why));
  CHECK_FALSE(borel->point_valid({0, 0}, &why));
  Fe g = field_generator(borel->field().p());
  CHECK_FALSE(borel->point_valid({g, 0}, &why));
}

TEST_CASE("central point arithmetic") {
  auto borel = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
  const PrimeField& F = borel->field();
  Rng rng(41);
  for (int t = 0; t < 30; ++t) {
    FiberPoint a{rng.nonzero_elt(F), rng.field_elt(F)};
    FiberPoint b{rng.nonzero_elt(F), rng.field_elt(F)};
    FiberPoint c{rng.nonzero_elt(F), rng.field_elt(F)};
    // group law: associative, unital, with antipode inverses
    CHECK(borel->point_product(borel->point_product(a, b), c) ==
          borel->point_product(a, borel->point_product(b, c)));
    CHECK(borel->point_product(a, borel->identity_point()) == a);
    CHECK(borel->point_product(borel->identity_point(), a) == a);
    CHECK(borel->point_product(a, borel->point_antipode(a)) == borel->identity_point());
  }

  auto inf = make_family("central-ext-infinite", 3, std::nullopt, 0);
  FiberPoint q{5, 7, inf->field().eps_pow(2)};
  CHECK(inf->point_product(q, inf->point_antipode(q)) == inf->identity_point());
}

TEST_CASE("every sampled fiber passes construction invariants") {
  Rng grid_rng(42);
  for (const std::string& name : family_names()) {
    for (int ell : {2, 3}) {
      if (name == "quantum-borel-rank1" && ell != 3) continue;
      auto fam = make_family(name, ell, std::nullopt, 7);
      Rng r = grid_rng.fork(static_cast<std::uint64_t>(ell));
      for (const FiberPoint& pt : fam->default_grid(2, r)) {
        CAPTURE(name);
        FiberBundle B = fam->fiber(pt);
        CHECK(B.algebra.dim() == fam->fiber_dim());
        CHECK_NOTHROW(verify_hopf_table(B.algebra, B.pres, B.hopf));
        std::string why;
        CHECK(check_relations(fam->field(), B.seed, B.pres, &why));
        CHECK(is_irreducible(fam->field(), B.seed));
        // Cayley-Hamilton at the fiber dimension with the regular trace
        Rng ch_rng(static_cast<std::uint64_t>(ell) * 1000 + pt[0]);
        TraceFunction tr = TraceFunction::regular(B.algebra);
        CHECK(cayley_hamilton_check(B.algebra, tr, B.algebra.dim(), 8, ch_rng).pass);
      }
    }
  }
}

TEST_CASE("expected reports match the closed forms") {
  {
    auto fam = make_family("central-ext-finite", 6, std::nullopt, 0);
    ExpectedReport r = fam->expected_report({fam->field().eps_pow(4)});
    CHECK(r.sd == 36);
    CHECK(r.level == 37);
    CHECK(r.irr_count == 4);
    CHECK(r.irr_dims == std::vector<int>(4, 3));
    CHECK(r.all_max_stable);
    CHECK(r.in_lowest_stratum);
  }
  {
    auto fam = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
    ExpectedReport torus = fam->expected_report({1, 0});
    CHECK(torus.sd == 3);
    CHECK(torus.level == 4);
    CHECK(torus.irr_dims == std::vector<int>(3, 1));
    CHECK(torus.all_max_stable);
    ExpectedReport bulk = fam->expected_report({1, 1});
    CHECK(bulk.sd == 9);
    CHECK(bulk.level == 10);
    CHECK(bulk.irr_dims == std::vector<int>{3});
    CHECK_FALSE(bulk.all_max_stable);
    CHECK_FALSE(bulk.in_lowest_stratum);
  }
}

TEST_CASE("fiber of the infinite family over an explicit small prime") {
  auto fam = make_family("central-ext-infinite", 3, 13, 0);
  const PrimeField& F = fam->field();
  FiberPoint pt{5, 8, F.eps_pow(1)};
  FiberBundle B = fam->fiber(pt);
  Rng rng(43);
  BlockReport rep = wedderburn_blocks(B.algebra, rng);
  CHECK(rep.irreducible_dims == std::vector<int>{3});  // a full matrix algebra
  CHECK(rep.sd == 9);
  CHECK(fam->fiber_characters(pt).empty());
  // the identity fiber is basic with 9 characters
  CHECK(fam->fiber_characters(fam->identity_point()).size() == 9);
}

TEST_CASE("default grids contain only valid points and the distinguished ones") {
  Rng rng(44);
  for (const std::string& name : family_names()) {
    auto fam = make_family(name, 3, std::nullopt, 3);
    Rng r = rng.fork(1);
    auto grid = fam->default_grid(4, r);
    CHECK(!grid.empty());
    CHECK(std::find(grid.begin(), grid.end(), fam->identity_point()) != grid.end());
    for (const FiberPoint& pt : grid) CHECK(fam->point_valid(pt));
    CHECK(std::is_sorted(grid.begin(), grid.end()));
  }
}

TEST_CASE("torus points at a root of unity depend on the prime's power residues") {
  // over p = 97, epsilon is not a cube: the point (epsilon, 0) has no fiber
  // characters and falls outside the basic stratum
  {
    auto fam = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
    const PrimeField& F = fam->field();
    CHECK(F.p() == 97);
    FiberPoint pt{F.epsilon(), 0};
    CHECK_FALSE(fam->point_valid(pt));
    CHECK(fam->fiber_characters(pt).empty());
  }
  // over p = 19, epsilon = 2^6 = 7 is a cube: the same point is basic with
  // exactly ell characters and lies in the winding orbit
  {
    auto fam = make_family("quantum-borel-rank1", 3, 19, 0);
    const PrimeField& F = fam->field();
    FiberPoint pt{F.epsilon(), 0};
    REQUIRE(fam->point_valid(pt));
    CHECK(fam->fiber_characters(pt).size() == 3);
    Rng rng(45);
    BlockReport rep = wedderburn_blocks(fam->fiber(pt).algebra, rng);
    CHECK(rep.irreducible_dims == std::vector<int>(3, 1));
    CHECK(winding_orbit_of_identity(*fam, Side::left).count(pt) == 1);
  }
}

TEST_CASE("point parameter round trips") {
  auto fam = make_family("central-ext-infinite", 3, std::nullopt, 0);
  FiberPoint pt{9, 25, fam->field().eps_pow(2)};
  auto params = fam->point_params(pt);
  CHECK(fam->point_from_params(params) == pt);

  auto fin = make_family("central-ext-finite", 5, std::nullopt, 0);
  for (int s = 0; s < 5; ++s) {
    FiberPoint q{fin->field().eps_pow(s)};
    CHECK(fin->point_params(q) ==
          std::vector<std::pair<std::string, long long>>{{"s", s}});
    CHECK(fin->point_from_params({{"s", s}}) == q);
  }
}
