#include <doctest.h>

#include <random>

#include "equicat/classify.hpp"
#include "equicat/factorset.hpp"
#include "helpers.hpp"

using namespace equicat;
using namespace equicat::testing;

namespace {

FactorSet trivial_fs(EmPtr em) {
  return factor_set_from_cocycle(strict_gr_category(em), em, zero_cochain3(em));
}

// Random witness table with u(x,1) = 0; used to generate cohomologous
// variants of a factor set.
CohomologyWitness random_witness(EmPtr em, std::mt19937& rng) {
  const int n = em->pi.order(), m = em->gamma.order();
  std::uniform_int_distribution<int> pick(0, em->a.order() - 1);
  std::vector<int> u(n * m, 0);
  for (int x = 0; x < n; ++x)
    for (int s = 1; s < m; ++s) u[static_cast<std::size_t>(x) * m + s] = pick(rng);
  return CohomologyWitness{std::move(u)};
}

}  // namespace

TEST_CASE("the trivial factor set validates and is enough strict") {
  for (auto em : {trivial_module(2, 2, {2}), negation_module()}) {
    FactorSet fs = trivial_fs(em);
    FactorSetReport rep = validate_factor_set(fs);
    CHECK(rep.all_pass());
    CHECK(rep.enough_strict);
  }
}

TEST_CASE("factor sets built from cocycles validate") {
  auto em = trivial_module(2, 2, {2});
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      for (int a = 0; a < 2; ++a) {
        Cochain3 h = zero_cochain3(em);
        h.h_ppp[7] = a;
        h.h_ppg[(1 * 2 + 1) * 2 + 1] = b;
        h.h_pgg[(1 * 2 + 1) * 2 + 1] = c;
        GrCategory base = build_gr_category(em, h.h_ppp);
        FactorSet fs = factor_set_from_cocycle(base, em, h);
        CHECK(validate_factor_set(fs).all_pass());
        CHECK(enough_strict(fs));
      }
}

TEST_CASE("the perturbed 2-2-2 factor set with t_ss(p) = 1 is valid") {
  auto em = trivial_module(2, 2, {2});
  FactorSet fs = trivial_fs(em);
  fs.t[1][1][1] = 1;
  CHECK(validate_factor_set(fs).all_pass());
}

TEST_CASE("factor_set_from_cocycle rejects bad inputs") {
  auto em = trivial_module(2, 1, {3});
  GrCategory base = strict_gr_category(em);
  Cochain3 bad = zero_cochain3(em);
  bad.h_ppp[7] = 1;
  CHECK_THROWS_WITH_AS(factor_set_from_cocycle(base, em, bad), doctest::Contains("NotACocycle"),
                       Error);

  auto em222 = trivial_module(2, 2, {2});
  std::vector<int> xi(8, 0);
  xi[7] = 1;
  GrCategory base1 = build_gr_category(em222, xi);
  CHECK_THROWS_WITH_AS(factor_set_from_cocycle(base1, em222, zero_cochain3(em222)),
                       doctest::Contains("XiMismatch"), Error);
}

TEST_CASE("induce_cocycle round trips factor_set_from_cocycle exhaustively at 2-2-2") {
  auto em = trivial_module(2, 2, {2});
  std::int64_t seen = 0;
  for_each_cocycle(em, nullptr, 1 << 20, [&](const Cochain3& h) {
    ++seen;
    GrCategory base = build_gr_category(em, h.h_ppp);
    FactorSet fs = factor_set_from_cocycle(base, em, h);
    Cochain3 back = induce_cocycle(fs);
    CHECK(equal_values(back, h));
  });
  CHECK(seen == 8);
}

TEST_CASE("the round trip also holds with Z/3 coefficients and twisted actions") {
  // Gamma = Z/2 inverting Pi = Z/3, Z/2 coefficients.
  FiniteGroup z3 = cyclic(3), z2 = cyclic(2);
  FiniteAbelianGroup a2({2});
  auto inverted = share(validate_equivariant_module(
      z3, z2, a2, trivial_maps(3, 2), {{0, 1, 2}, {0, 2, 1}}, trivial_maps(2, 2)));

  for (auto em : {trivial_module(2, 2, {3}), negation_module(), trivial_module(2, 3, {2}),
                  inverted}) {
    std::int64_t seen = 0;
    for_each_cocycle(em, nullptr, 1 << 20, [&](const Cochain3& h) {
      ++seen;
      GrCategory base = build_gr_category(em, h.h_ppp);
      FactorSet fs = factor_set_from_cocycle(base, em, h);
      CHECK(validate_factor_set(fs).all_pass());
      CHECK(equal_values(induce_cocycle(fs), h));
    });
    CHECK(seen > 0);
  }
}

TEST_CASE("induce_cocycle requires enough strictness") {
  auto em = trivial_module(2, 2, {2});
  FactorSet fs = trivial_fs(em);
  fs.c[1] = 1;
  // Keep the unit laws coherent with the nonzero c.
  for (int x = 0; x < 2; ++x) {
    fs.ftilde[1][0 * 2 + x] = 1;
    fs.ftilde[1][x * 2 + 0] = 1;
  }
  CHECK_THROWS_WITH_AS(induce_cocycle(fs), doctest::Contains("NotEnoughStrict"), Error);
}

TEST_CASE("derive_equivariant_structure returns the forced actions") {
  auto em = trivial_module(2, 2, {2});
  EquivariantModule derived = derive_equivariant_structure(trivial_fs(em));
  CHECK(derived == *em);

  // phi inverts Pi = Z/3, f negates A = Z/3, Pi acts trivially.
  FiniteGroup pi = cyclic(3), gamma = cyclic(2);
  FiniteAbelianGroup z3({3});
  std::vector<std::vector<int>> inv_pi = {{0, 1, 2}, {0, 2, 1}};
  auto em2 = share(validate_equivariant_module(pi, gamma, z3, trivial_maps(3, 3), inv_pi,
                                               negation_maps_z2(3)));
  FactorSet fs2 = trivial_fs(em2);
  EquivariantModule derived2 = derive_equivariant_structure(fs2);
  CHECK(derived2.gamma_on_pi.maps[1] == std::vector<int>{0, 2, 1});
  CHECK(derived2.gamma_on_a.maps[1] == std::vector<int>{0, 2, 1});
  CHECK(derived2 == *em2);
}

TEST_CASE("strictify removes unit comparisons and returns a verified witness") {
  auto em = trivial_module(2, 2, {2});

  // Already enough strict: nothing changes and the witness vanishes.
  FactorSet fs0 = trivial_fs(em);
  auto [g0, w0] = strictify(fs0);
  CHECK(g0 == fs0);
  CHECK(w0.u == std::vector<int>(4, 0));

  // The c[s] = 1 example over a strict base, reached by transporting the
  // trivial set along u(1,s) = 1.
  CohomologyWitness u1{{0, 1, 0, 0}};
  FactorSet fs1 = transport_factor_set(fs0, u1);
  CHECK(fs1.c[1] == 1);
  CHECK(fs1.ft_at(1, 1, 0) == 1);  // ft(x,1) = -(phi x)c
  CHECK(fs1.ft_at(1, 0, 1) == 1);  // ft(1,x) = -c
  REQUIRE(validate_factor_set(fs1).all_pass());
  auto [g1, w1] = strictify(fs1);
  CHECK(enough_strict(g1));
  CHECK(validate_factor_set(g1).all_pass());
  CHECK(g1 == fs0);  // all comparison data collapses back to the trivial set
  // Witness direction: strict output -> original, u(1,s) = -c[s].
  CHECK(w1.at(0, 1, 2) == 1);
  CHECK(verify_witness(g1, fs1, w1).all_pass());

  // Idempotence.
  auto [g2, w2] = strictify(g1);
  CHECK(g2 == g1);
  CHECK(w2.u == std::vector<int>(4, 0));
}

TEST_CASE("strictify handles every transported corpus member") {
  std::mt19937 rng(37);
  for (auto em : {trivial_module(2, 2, {2}), negation_module()}) {
    FactorSet fs0 = trivial_fs(em);
    for (int iter = 0; iter < 12; ++iter) {
      CohomologyWitness u = random_witness(em, rng);
      FactorSet fs = transport_factor_set(fs0, u);
      REQUIRE(validate_factor_set(fs).all_pass());
      auto [g, w] = strictify(fs);
      CHECK(enough_strict(g));
      CHECK(validate_factor_set(g).all_pass());
      CHECK(verify_witness(g, fs, w).all_pass());
      CHECK(verify_witness(fs, g, negate_witness(*em, w)).all_pass());
    }
  }
}

TEST_CASE("condition i is derivable from the remaining laws") {
  std::mt19937 rng(53);
  for (auto em : {trivial_module(2, 2, {2}), negation_module()}) {
    FactorSet fs0 = trivial_fs(em);
    for (int iter = 0; iter < 8; ++iter) {
      FactorSet fs = transport_factor_set(fs0, random_witness(em, rng));
      FactorSetReport rep = validate_factor_set(fs, /*assume_condition_i=*/false);
      CHECK(rep.unit_functor_derived);
      CHECK(rep.all_pass());
      CHECK(rep.laws.passed("unit_functor"));
    }
  }
}

TEST_CASE("mutations are caught with correct witnesses") {
  auto em = trivial_module(2, 2, {2});
  FactorSet fs = trivial_fs(em);

  // Violate the left unit comparison law: c + ft(1,x) = 0.
  FactorSet bad_unit = fs;
  bad_unit.ftilde[1][0 * 2 + 1] = 1;
  FactorSetReport rep = validate_factor_set(bad_unit, false);
  CHECK_FALSE(rep.all_pass());
  const Check* ul = rep.laws.find("unit_left");
  REQUIRE(ul != nullptr);
  CHECK_FALSE(ul->pass);
  CHECK(ul->witness == std::vector<std::int64_t>{1, 1});

  // Violate the comparison-vs-tensor law with an asymmetric ftilde bump on
  // a module with a nontrivial Gamma-action on A.
  auto emn = negation_module();
  FactorSet fsn = trivial_fs(emn);
  fsn.ftilde[1][1 * 2 + 1] = 1;  // ft_s(p,p) = 1
  FactorSetReport repn = validate_factor_set(fsn, false);
  CHECK_FALSE(repn.all_pass());
}

TEST_CASE("cohomologousness: reflexive, transported, and negative cases") {
  auto em = trivial_module(2, 2, {2});
  FactorSet fs = trivial_fs(em);

  auto self = are_cohomologous_factor_sets(fs, fs);
  REQUIRE(self.has_value());
  CHECK(self->u == std::vector<int>(4, 0));

  std::mt19937 rng(61);
  for (auto m : {trivial_module(2, 2, {2}), trivial_module(2, 2, {3}), negation_module()}) {
    FactorSet base_fs = trivial_fs(m);
    for (int iter = 0; iter < 10; ++iter) {
      FactorSet fs1 = transport_factor_set(base_fs, random_witness(m, rng));
      FactorSet fs2 = transport_factor_set(base_fs, random_witness(m, rng));
      auto w = are_cohomologous_factor_sets(fs1, fs2);
      REQUIRE(w.has_value());
      CHECK(verify_witness(fs1, fs2, *w).all_pass());
    }
  }

  FactorSet fs3 = fs;
  fs3.t[1][1][1] = 1;  // the class with h_pgg(p,s,s) = 1; B^3 = 0 here
  CHECK_FALSE(are_cohomologous_factor_sets(fs, fs3).has_value());

  // Different autoequivalence families are never cohomologous.
  auto emn = negation_module();
  FactorSet f1 = trivial_fs(emn);
  FactorSet f2 = f1;
  f2.f[1] = {0, 1, 2};
  CHECK_FALSE(are_cohomologous_factor_sets(f1, f2).has_value());
}

TEST_CASE("enough-strict factor sets over a base match the fixed-xi cocycles") {
  auto em = trivial_module(2, 2, {2});

  // Enumerate every candidate table (ftilde_s over Pi^2, t_ss over Pi) and
  // count the valid enough-strict factor sets with the module's actions.
  int valid = 0;
  for (int bits = 0; bits < (1 << 6); ++bits) {
    FactorSet fs = trivial_fs(em);
    for (int i = 0; i < 4; ++i) fs.ftilde[1][i] = (bits >> i) & 1;
    fs.t[1][1][0] = (bits >> 4) & 1;
    fs.t[1][1][1] = (bits >> 5) & 1;
    if (validate_factor_set(fs).all_pass()) ++valid;
  }
  std::int64_t cocycles = 0;
  std::vector<int> xi0(8, 0);
  for_each_cocycle(em, &xi0, 1 << 20, [&](const Cochain3&) { ++cocycles; });
  CHECK(valid == cocycles);
  CHECK(valid == 4);

  // Same count identity with Z/3 coefficients (729 candidate tables).
  auto em3 = trivial_module(2, 2, {3});
  int valid3 = 0;
  for (int ft = 0; ft < 81; ++ft)
    for (int tv = 0; tv < 9; ++tv) {
      FactorSet fs = trivial_fs(em3);
      int f = ft;
      for (int i = 0; i < 4; ++i, f /= 3) fs.ftilde[1][i] = f % 3;
      fs.t[1][1][0] = tv % 3;
      fs.t[1][1][1] = tv / 3;
      if (validate_factor_set(fs).all_pass()) ++valid3;
    }
  std::int64_t cocycles3 = 0;
  for_each_cocycle(em3, &xi0, 1 << 20, [&](const Cochain3&) { ++cocycles3; });
  CHECK(valid3 == cocycles3);
}
