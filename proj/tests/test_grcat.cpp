#include <doctest.h>

#include "equicat/grcat.hpp"
#include "helpers.hpp"

using namespace equicat;
using namespace equicat::testing;

TEST_CASE("build_gr_category validates xi") {
  auto em = trivial_module(2, 2, {2});
  CHECK_NOTHROW(strict_gr_category(em));

  // 2-torsion coefficients admit the one-slot cocycle.
  std::vector<int> xi(8, 0);
  xi[7] = 1;
  CHECK_NOTHROW(build_gr_category(em, xi));

  // Over Z/3 the same table is not a cocycle; the first witness is the
  // diagonal instance.
  auto em3 = trivial_module(2, 2, {3});
  try {
    build_gr_category(em3, xi);
    FAIL("expected NotACocycle");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotACocycle");
    CHECK(e.witness() == std::vector<std::int64_t>{1, 1, 1, 1});
  }

  std::vector<int> unnormalized(8, 0);
  unnormalized[1] = 1;  // xi(1,1,p)
  CHECK_THROWS_WITH_AS(build_gr_category(em, unnormalized), doctest::Contains("NotNormalized"),
                       Error);
}

TEST_CASE("composition adds components at a fixed object") {
  auto em = trivial_module(2, 2, {3});
  GrCategory c = strict_gr_category(em);
  CHECK(compose_morphisms(c, {1, 0}, {1, 2}) == GrMorphism{1, 2});
  CHECK(compose_morphisms(c, {1, 1}, {1, 2}) == GrMorphism{1, 0});
  CHECK_THROWS_WITH_AS(compose_morphisms(c, {0, 1}, {1, 1}), doctest::Contains("ObjectMismatch"),
                       Error);

  FiniteAbelianGroup v4({2, 2});
  auto em4 = trivial_module(2, 2, {2, 2});
  GrCategory c4 = strict_gr_category(em4);
  int u = v4.from_tuple({1, 0}), v = v4.from_tuple({1, 1});
  CHECK(compose_morphisms(c4, {1, u}, {1, v}).component == v4.from_tuple({0, 1}));
}

TEST_CASE("tensor twists the second component by the first object") {
  // Pi = Z/2 negating A = Z/3: (p,0) @ (p,1) = (1, 2).
  FiniteGroup pi = cyclic(2), gamma = cyclic(1);
  FiniteAbelianGroup z3({3});
  auto em = share(validate_equivariant_module(pi, gamma, z3, negation_maps_z2(3),
                                              trivial_maps(1, 2), trivial_maps(1, 3)));
  GrCategory c = strict_gr_category(em);
  CHECK(tensor_morphisms(c, {1, 0}, {1, 1}) == GrMorphism{0, 2});
  CHECK(tensor_morphisms(c, {0, 0}, {1, 1}) == GrMorphism{1, 1});

  auto triv = trivial_module(2, 1, {3});
  GrCategory ct = strict_gr_category(triv);
  CHECK(tensor_morphisms(ct, {1, 1}, {1, 2}) == GrMorphism{0, 0});
}

TEST_CASE("tensor is functorial and compose is unital/associative") {
  auto em = negation_module();
  GrCategory c = strict_gr_category(em);
  const int n = 2, aord = 3;
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < aord; ++u) {
      CHECK(compose_morphisms(c, {x, 0}, {x, u}) == GrMorphism{x, u});
      CHECK(compose_morphisms(c, {x, u}, {x, 0}) == GrMorphism{x, u});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u1 = 0; u1 < aord; ++u1)
        for (int u2 = 0; u2 < aord; ++u2)
          for (int v1 = 0; v1 < aord; ++v1)
            for (int v2 = 0; v2 < aord; ++v2) {
              GrMorphism lhs = tensor_morphisms(c, compose_morphisms(c, {x, u1}, {x, u2}),
                                                compose_morphisms(c, {y, v1}, {y, v2}));
              GrMorphism rhs = compose_morphisms(c, tensor_morphisms(c, {x, u1}, {y, v1}),
                                                 tensor_morphisms(c, {x, u2}, {y, v2}));
              CHECK(lhs == rhs);
            }
}

TEST_CASE("check_gr_functor accepts the identity functor") {
  for (auto em : {trivial_module(2, 2, {2}), negation_module()}) {
    GrCategory c = strict_gr_category(em);
    CHECK(check_gr_functor(c, c, identity_functor_data(c)).all_pass());
  }
}

TEST_CASE("check_gr_functor accepts ordinary-2-cocycle comparisons between strict categories") {
  auto em = trivial_module(3, 1, {3});
  GrCategory c = strict_gr_category(em);
  // The Pi^2 part of any degree-1 coboundary is an ordinary 2-cocycle.
  Cochain1 f1 = make_cochain1(em, {0, 1, 2});
  Cochain2 db = d1(f1);
  GrFunctorData fd = identity_functor_data(c);
  fd.gtilde = db.g_pp;
  Report rep = check_gr_functor(c, c, fd);
  CHECK(rep.passed("hexagon"));
  CHECK(rep.all_pass());
}

TEST_CASE("no comparison fixes a functor onto a different cohomology class") {
  auto em = trivial_module(2, 2, {2});
  std::vector<int> xi(8, 0);
  xi[7] = 1;
  GrCategory src = build_gr_category(em, xi);
  GrCategory dst = strict_gr_category(em);
  // xi is not an ordinary coboundary, so the hexagon fails for every gtilde.
  for (int bits = 0; bits < 16; ++bits) {
    GrFunctorData fd = identity_functor_data(src);
    for (int i = 0; i < 4; ++i) fd.gtilde[i] = (bits >> i) & 1;
    CHECK_FALSE(check_gr_functor(src, dst, fd).passed("hexagon"));
  }
}

TEST_CASE("pentagon and the xi validity test agree on every table") {
  auto em = trivial_module(2, 2, {3});
  // All normalized tables over the single free slot.
  for (int v = 0; v < 3; ++v) {
    std::vector<int> xi(8, 0);
    xi[7] = v;
    bool builds = true;
    try {
      build_gr_category(em, xi);
    } catch (const Error&) {
      builds = false;
    }
    CHECK(builds == (v == 0));
  }
}
