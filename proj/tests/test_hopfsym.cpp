#include <algorithm>

#include "doctest.h"
#include "hopf/family.hpp"

using namespace hopf;

TEST_CASE("hopf tables satisfy the generator-level axioms") {
  for (const std::string& name : family_names()) {
    int ell = 3;
    auto fam = make_family(name, ell, std::nullopt, 0);
    FiberBundle B = fam->fiber(fam->identity_point());
    CHECK_NOTHROW(verify_hopf_table(B.algebra, B.pres, B.hopf));
  }
}

TEST_CASE("character enumeration per family closed form") {
  {
    auto fam = make_family("central-ext-finite", 3, std::nullopt, 0);
    const PrimeField& F = fam->field();
    auto g0 = fam->identity_characters();
    CHECK(g0.size() == 9);
    for (const Character& chi : g0) {
      CHECK(F.pow(chi.values[0], 3) == 1);
      CHECK(F.pow(chi.values[1], 3) == 1);
    }
    // the matrix-algebra fiber has no characters
    CHECK(fam->fiber_characters({F.eps_pow(1)}).empty());
  }
  {
    auto fam = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
    const PrimeField& F = fam->field();
    auto g0 = fam->identity_characters();
    CHECK(g0.size() == 3);
    for (const Character& chi : g0) {
      CHECK(chi.values[0] == 0);               // E
      CHECK(F.pow(chi.values[1], 3) == 1);     // K in the cube roots of unity
    }
    CHECK(fam->fiber_characters({1, 1}).empty());  // single matrix block, no characters
    // off the ell-th-power locus there are no characters either
    Fe g = field_generator(F.p());
    CHECK(fam->fiber_characters({g, 0}).empty());
  }
}

TEST_CASE("winding images of generators") {
  auto fam = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
  const PrimeField& F = fam->field();
  FiberBundle B = fam->fiber({1, 0});
  Fe t = F.eps_pow(1);
  Character chi{{0, t}};

  std::vector<Word> wl = winding(F, chi, Side::left, B.hopf);
  // E -> t E, K -> t K
  CHECK(wl[0].coeff == t);
  CHECK(wl[0].factors.size() == 1);
  CHECK(wl[0].factors[0].gen == 0);
  CHECK(wl[1].coeff == t);
  CHECK(wl[1].factors[0].gen == 1);

  std::vector<Word> wr = winding(F, chi, Side::right, B.hopf);
  // E -> E, K -> t K
  CHECK(wr[0].coeff == 1);
  CHECK(wr[1].coeff == t);

  CHECK_NOTHROW(verify_winding_automorphism(B.algebra, B.pres, wl));
  CHECK_NOTHROW(verify_winding_automorphism(B.algebra, B.pres, wr));

  // an invalid "character" violates the relations
  std::vector<Word> broken = wl;
  broken[1] = broken[1].scaled(F, F.add(1, 1));  // K -> 2tK no longer satisfies K^3 = 1
  CHECK_THROWS_WITH_AS(verify_winding_automorphism(B.algebra, B.pres, broken),
                       doctest::Contains("relation"), Error);
}

TEST_CASE("orbits on central points") {
  {
    // every character fixes the central element: the orbit is the identity alone
    auto fam = make_family("central-ext-finite", 3, std::nullopt, 0);
    auto orbit = orbit_on_central_points(*fam, fam->identity_characters(),
                                         fam->identity_point(), Side::left);
    CHECK(orbit == std::set<FiberPoint>{fam->identity_point()});
    CHECK(winding_orbit_of_identity(*fam, Side::left) ==
          std::set<FiberPoint>{fam->identity_point()});
  }
  {
    auto fam = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
    const PrimeField& F = fam->field();
    // the full character family chi_t, t in F_p^*
    std::vector<Character> all;
    for (Fe t = 1; t < F.p(); ++t) all.push_back(Character{{0, t}});
    auto orbit = orbit_on_central_points(*fam, all, fam->identity_point(), Side::left);
    CHECK(orbit.size() == (F.p() - 1) / 3);
    for (const FiberPoint& q : orbit) {
      CHECK(q[1] == 0);                            // torus stratum
      CHECK(F.pow(q[0], (F.p() - 1) / 3) == 1);    // reachable = ell-th powers
      CHECK(!fam->fiber_characters(q).empty());
    }
    CHECK(orbit == winding_orbit_of_identity(*fam, Side::left));
    CHECK(orbit == winding_orbit_of_identity(*fam, Side::right));

    // the trivial character leaves every point unchanged
    Character triv{{0, 1}};
    auto fixed = orbit_on_central_points(*fam, {triv}, {1, 1}, Side::left);
    CHECK(fixed == std::set<FiberPoint>{FiberPoint{1, 1}});
  }
  {
    // the rank-two torus family: the orbit sweeps the reachable (u, v) pairs
    // at the identity cyclic coordinate
    auto fam = make_family("central-ext-infinite", 3, std::nullopt, 0);
    const PrimeField& F = fam->field();
    auto orbit = winding_orbit_of_identity(*fam, Side::left);
    std::uint64_t cubes = (F.p() - 1) / 3;
    CHECK(orbit.size() == cubes * cubes);
    for (const FiberPoint& q : orbit) {
      CHECK(F.pow(q[0], cubes) == 1);
      CHECK(F.pow(q[1], cubes) == 1);
      CHECK(q[2] == 1);
    }
    CHECK(orbit == winding_orbit_of_identity(*fam, Side::right));
  }
}

TEST_CASE("stabilizers with witnesses") {
  const auto& F4 = make_family("central-ext-finite", 4, std::nullopt, 0);
  const PrimeField& F = F4->field();
  FiberBundle B = F4->fiber({F.eps_pow(2)});
  auto g0 = F4->identity_characters();
  Stabilizer st = stabilizer(F, B.seed, g0, B.hopf);
  CHECK(st.members.size() == 4);
  for (int m : st.members) {
    const Character& chi = g0[static_cast<size_t>(m)];
    CHECK(F.pow(chi.values[0], 2) == 1);
    CHECK(F.pow(chi.values[1], 2) == 1);
  }
  CHECK(is_maximally_stable(B.seed, st));

  // a character as a 1-dim module: trivial stabilizer
  FiberBundle B0 = F4->fiber({1});
  Stabilizer st0 = stabilizer(F, B0.seed, g0, B0.hopf);
  CHECK(st0.members.size() == 1);
  CHECK(is_maximally_stable(B0.seed, st0));

  // Borel, x != 0: the one irreducible is stabilized by everything but is
  // far from maximally stable
  auto borel = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
  FiberBundle C = borel->fiber({1, 1});
  Stabilizer stb = stabilizer(borel->field(), C.seed, borel->identity_characters(), C.hopf);
  CHECK(stb.members.size() == 3);
  CHECK_FALSE(is_maximally_stable(C.seed, stb));
}

TEST_CASE("cocycle extraction and the primitive quotient") {
  Rng rng(31);
  {
    auto fam = make_family("central-ext-finite", 2, std::nullopt, 0);
    const PrimeField& F = fam->field();
    FiberBundle B = fam->fiber({F.eps_pow(1)});
    auto g0 = fam->identity_characters();
    Stabilizer st = stabilizer(F, B.seed, g0, B.hopf);
    REQUIRE(st.members.size() == 4);
    CocycleTable ct = extract_cocycle(F, B.seed, st, g0);
    // normalized but not trivial
    bool nontrivial = false;
    for (const auto& row : ct.gamma)
      for (Fe v : row)
        if (v != 1) nontrivial = true;
    CHECK(nontrivial);
    CHECK_NOTHROW(validate_cocycle(F, ct));
    std::string why;
    CHECK(verify_primitive_quotient(F, B.seed, st, ct, rng, &why));

    StructureAlgebra T = twisted_group_algebra(F, ct);
    CHECK(T.dim() == 4);
    BlockReport rep = wedderburn_blocks(T, rng);
    CHECK(rep.radical_dim == 0);
    CHECK(rep.irreducible_dims == std::vector<int>{2});

    // corrupting one entry breaks the cocycle identity with a named triple
    CocycleTable bad = ct;
    bad.gamma[1][2] = F.mul(bad.gamma[1][2], F.neg(1));
    CHECK_THROWS_WITH_AS(validate_cocycle(F, bad), doctest::Contains("triple"), Error);
  }
  {
    // one-dimensional module: trivial stabilizer, constant cocycle
    auto fam = make_family("central-ext-finite", 3, std::nullopt, 0);
    const PrimeField& F = fam->field();
    FiberBundle B0 = fam->fiber({1});
    auto g0 = fam->identity_characters();
    Stabilizer st = stabilizer(F, B0.seed, g0, B0.hopf);
    CocycleTable ct = extract_cocycle(F, B0.seed, st, g0);
    CHECK(ct.size() == 1);
    CHECK(ct.gamma[0][0] == 1);
    std::string why;
    CHECK(verify_primitive_quotient(F, B0.seed, st, ct, rng, &why));
  }
  {
    // the ell = 3 maximally stable module gives a single block of size 3
    auto fam = make_family("central-ext-finite", 3, std::nullopt, 0);
    const PrimeField& F = fam->field();
    FiberBundle B = fam->fiber({F.eps_pow(1)});
    auto g0 = fam->identity_characters();
    Stabilizer st = stabilizer(F, B.seed, g0, B.hopf);
    CocycleTable ct = extract_cocycle(F, B.seed, st, g0);
    std::string why;
    CHECK(verify_primitive_quotient(F, B.seed, st, ct, rng, &why));
    BlockReport rep = wedderburn_blocks(twisted_group_algebra(F, ct), rng);
    CHECK(rep.irreducible_dims == std::vector<int>{3});
  }
}

TEST_CASE("twisted modules are indexed by stabilizer cosets") {
  // chi (x) V ~= theta (x) V exactly when chi * theta^{-1} stabilizes V
  auto fam = make_family("central-ext-finite", 4, std::nullopt, 0);
  const PrimeField& F = fam->field();
  FiberBundle B = fam->fiber({F.eps_pow(2)});
  const auto& g0 = fam->identity_characters();
  Stabilizer st = stabilizer(F, B.seed, g0, B.hopf);
  std::vector<bool> in_stab(g0.size(), false);
  for (int m : st.members) in_stab[static_cast<size_t>(m)] = true;
  auto index_of = [&](const Character& c) {
    for (size_t i = 0; i < g0.size(); ++i)
      if (g0[i] == c) return static_cast<int>(i);
    return -1;
  };
  for (const Character& chi : g0)
    for (const Character& theta : g0) {
      GeneratorRep a = twist_by_character(F, chi, B.seed, B.hopf);
      GeneratorRep b = twist_by_character(F, theta, B.seed, B.hopf);
      Character ratio = char_product(F, chi, char_inverse(F, B.hopf, theta));
      int idx = index_of(ratio);
      REQUIRE(idx >= 0);
      CHECK(iso_witness(F, a, b).has_value() == in_stab[static_cast<size_t>(idx)]);
    }
}

TEST_CASE("twisting relates to submodules of the tensor square") {
  // chi (x) V ~= W exactly when chi embeds into W (x) V*
  auto fam = make_family("central-ext-finite", 4, std::nullopt, 0);
  const PrimeField& F = fam->field();
  FiberBundle B = fam->fiber({F.eps_pow(2)});
  const auto& g0 = fam->identity_characters();
  std::vector<GeneratorRep> classes;
  for (const Character& chi : g0) {
    GeneratorRep tw = twist_by_character(F, chi, B.seed, B.hopf);
    bool fresh = true;
    for (const GeneratorRep& c : classes)
      if (iso_witness(F, tw, c)) fresh = false;
    if (fresh) classes.push_back(tw);
  }
  REQUIRE(classes.size() == 4);
  FiberPoint dp = fam->point_antipode(B.point);
  for (const GeneratorRep& V : classes) {
    GeneratorRep Vd = dual_rep(F, V, B.hopf, dp);
    for (const GeneratorRep& W : classes) {
      GeneratorRep WVd = tensor_rep(F, W, Vd, B.hopf, fam->point_product(B.point, dp));
      for (const Character& chi : g0) {
        bool twisted_iso = iso_witness(F, twist_by_character(F, chi, V, B.hopf), W).has_value();
        bool embeds =
            hom_dim(F, GeneratorRep::from_character(chi, WVd.point), WVd) >= 1;
        CHECK(twisted_iso == embeds);
      }
    }
  }
}

TEST_CASE("a non-primitive root collapses the torus to the group algebra") {
  PrimeField F(13, 3, 0);
  CocycleTable ct = quantum_torus_cocycle(F, 3);
  for (auto& row : ct.gamma)
    for (auto& v : row) v = 1;  // as if epsilon were 1
  Rng rng(32);
  BlockReport rep = wedderburn_blocks(twisted_group_algebra(F, ct), rng);
  CHECK(rep.irreducible_dims == std::vector<int>(9, 1));  // not a single block
}

TEST_CASE("character multiplicities in V (x) V*") {
  auto mults = [](const FiberFamily& fam, const FiberPoint& pt, const GeneratorRep& V,
                  const Stabilizer& st) {
    const PrimeField& F = fam.field();
    FiberBundle B = fam.fiber(pt);
    GeneratorRep D = dual_rep(F, V, B.hopf, fam.point_antipode(pt));
    GeneratorRep VVd = tensor_rep(F, V, D, B.hopf, fam.point_product(pt, D.point));
    REQUIRE(VVd.point == fam.identity_point());
    auto m = tensor_character_multiplicities(F, VVd, fam.identity_characters());
    std::vector<bool> in_stab(fam.identity_characters().size(), false);
    for (int i : st.members) in_stab[static_cast<size_t>(i)] = true;
    return std::pair(m, in_stab);
  };

  {
    // maximally stable: the indicator of the stabilizer
    auto fam = make_family("central-ext-finite", 2, std::nullopt, 0);
    FiberBundle B = fam->fiber({fam->field().eps_pow(1)});
    Stabilizer st = stabilizer(fam->field(), B.seed, fam->identity_characters(), B.hopf);
    auto [m, in_stab] = mults(*fam, B.point, B.seed, st);
    int mass = 0;
    for (size_t k = 0; k < m.size(); ++k) {
      CHECK(m[k] == (in_stab[k] ? 1 : 0));
      mass += m[k];
    }
    CHECK(mass == 4);
  }
  {
    // 1-dim module: only the counit appears
    auto fam = make_family("central-ext-finite", 3, std::nullopt, 0);
    FiberBundle B0 = fam->fiber({1});
    Stabilizer st = stabilizer(fam->field(), B0.seed, fam->identity_characters(), B0.hopf);
    auto [m, in_stab] = mults(*fam, B0.point, B0.seed, st);
    int mass = 0;
    for (size_t k = 0; k < m.size(); ++k) mass += m[k];
    CHECK(mass == 1);
  }
  {
    // not maximally stable: stabilizer characters appear once, mass < dim^2
    auto fam = make_family("quantum-borel-rank1", 3, std::nullopt, 0);
    FiberBundle B = fam->fiber({1, 1});
    Stabilizer st = stabilizer(fam->field(), B.seed, fam->identity_characters(), B.hopf);
    auto [m, in_stab] = mults(*fam, B.point, B.seed, st);
    int mass = 0;
    for (size_t k = 0; k < m.size(); ++k) {
      CHECK(m[k] == (in_stab[k] ? 1 : 0));
      mass += m[k];
    }
    CHECK(mass == 3);  // strictly below dim^2 = 9
  }
}
