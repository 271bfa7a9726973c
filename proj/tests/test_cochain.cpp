#include <doctest.h>

#include <random>

#include "equicat/cochain.hpp"
#include "helpers.hpp"

using namespace equicat;
using namespace equicat::testing;

namespace {

Cochain3 random_cochain3(EmPtr em, std::mt19937& rng) {
  const int n = em->pi.order(), m = em->gamma.order();
  std::uniform_int_distribution<int> pick(0, em->a.order() - 1);
  Cochain3 h = zero_cochain3(em);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z) h.h_ppp[(x * n + y) * n + z] = pick(rng);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int s = 1; s < m; ++s) h.h_ppg[(x * n + y) * m + s] = pick(rng);
  for (int x = 1; x < n; ++x)
    for (int s = 1; s < m; ++s)
      for (int t = 1; t < m; ++t) h.h_pgg[(x * m + s) * m + t] = pick(rng);
  return h;
}

Cochain2 random_cochain2(EmPtr em, std::mt19937& rng) {
  const int n = em->pi.order(), m = em->gamma.order();
  std::uniform_int_distribution<int> pick(0, em->a.order() - 1);
  Cochain2 g = zero_cochain2(em);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) g.g_pp[x * n + y] = pick(rng);
  for (int x = 1; x < n; ++x)
    for (int s = 1; s < m; ++s) g.g_pg[x * m + s] = pick(rng);
  return g;
}

}  // namespace

TEST_CASE("d1: zero map has zero coboundary") {
  auto em = trivial_module(2, 2, {2});
  Cochain2 g = d1(zero_cochain1(em));
  CHECK(g.g_pp == std::vector<int>(4, 0));
  CHECK(g.g_pg == std::vector<int>(4, 0));
}

TEST_CASE("d1: Pi=Gamma=A=Z/2 trivial, f(p)=1 has zero coboundary") {
  auto em = trivial_module(2, 2, {2});
  Cochain1 f = make_cochain1(em, {0, 1});
  Cochain2 g = d1(f);
  for (int v : g.g_pp) CHECK(v == 0);
  for (int v : g.g_pg) CHECK(v == 0);
}

TEST_CASE("d1: Pi=Z/3 trivial coefficients, f(p)=1, f(p^2)=0") {
  auto em = trivial_module(3, 1, {3});
  Cochain1 f = make_cochain1(em, {0, 1, 0});
  Cochain2 g = d1(f);
  // x·f(y) - f(xy) + f(x) at (p,p): 1 - 0 + 1 = 2.
  CHECK(g.pp(1, 1) == 2);
}

TEST_CASE("d2 of a zero cochain is zero and B^3 vanishes at 2-2-2") {
  auto em = trivial_module(2, 2, {2});
  CHECK(is_zero(d2(zero_cochain2(em))));

  Cochain2 g = zero_cochain2(em);
  g.g_pp[1 * 2 + 1] = 1;
  CHECK(is_zero(d2(g)));

  // Every degree-2 cochain here has a zero coboundary.
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) {
      Cochain2 gg = zero_cochain2(em);
      gg.g_pp[3] = u;
      gg.g_pg[3] = v;
      CHECK(is_zero(d2(gg)));
    }
}

TEST_CASE("d2 output is always a cocycle") {
  std::mt19937 rng(7);
  for (auto em : {trivial_module(3, 2, {3}), trivial_module(2, 3, {2}), negation_module()}) {
    for (int iter = 0; iter < 20; ++iter) {
      Cochain3 h = d2(random_cochain2(em, rng));
      CHECK(is_cocycle3(h).all_pass());
    }
  }
}

TEST_CASE("d2(d1(f)) is pointwise zero") {
  std::mt19937 rng(11);
  for (auto em : {trivial_module(3, 3, {3}), trivial_module(2, 2, {2}), negation_module()}) {
    for (int iter = 0; iter < 20; ++iter) {
      const int n = em->pi.order();
      std::uniform_int_distribution<int> pick(0, em->a.order() - 1);
      std::vector<int> f(n, 0);
      for (int x = 1; x < n; ++x) f[x] = pick(rng);
      CHECK(is_zero(d2(d1(make_cochain1(em, f)))));
    }
  }
}

TEST_CASE("is_cocycle3 examples") {
  auto em222 = trivial_module(2, 2, {2});
  CHECK(is_cocycle3(zero_cochain3(em222)).all_pass());

  Cochain3 h = zero_cochain3(em222);
  h.h_ppp[(1 * 2 + 1) * 2 + 1] = 1;
  CHECK(is_cocycle3(h).all_pass());

  auto em_z3 = trivial_module(2, 1, {3});
  Cochain3 bad = zero_cochain3(em_z3);
  bad.h_ppp[(1 * 2 + 1) * 2 + 1] = 1;
  Report rep = is_cocycle3(bad);
  CHECK_FALSE(rep.all_pass());
  const Check* c = rep.find("on_pi4");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->witness == std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("all eight 2-2-2 tables are cocycles") {
  auto em = trivial_module(2, 2, {2});
  int count = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Cochain3 h = zero_cochain3(em);
        h.h_ppp[7] = a;
        h.h_ppg[(1 * 2 + 1) * 2 + 1] = b;
        h.h_pgg[(1 * 2 + 1) * 2 + 1] = c;
        if (is_cocycle3(h).all_pass()) ++count;
      }
  CHECK(count == 8);
}

// The two alternative phrasings of the mixed conditions are rearrangements
// of the ones is_cocycle3 evaluates; on any table the predicates agree
// pointwise.
TEST_CASE("rearranged condition phrasings agree with the canonical ones") {
  std::mt19937 rng(23);
  for (auto em : {trivial_module(3, 2, {3}), negation_module()}) {
    const auto& m = *em;
    const int n = m.pi.order(), mm = m.gamma.order();
    const auto& A = m.a;
    for (int iter = 0; iter < 40; ++iter) {
      Cochain3 h = random_cochain3(em, rng);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            for (int s = 0; s < mm; ++s) {
              // canonical: s·h(x,y,z) + h(xy,z,s) + h(x,y,s)
              //              = h(sx,sy,sz) + (sx)·h(y,z,s) + h(x,yz,s)
              int lhs = A.add(A.add(m.g_a(s, h.ppp(x, y, z)), h.ppg(m.pi.mul(x, y), z, s)),
                              h.ppg(x, y, s));
              int sx = m.g_pi(s, x);
              int rhs = A.add(A.add(h.ppp(sx, m.g_pi(s, y), m.g_pi(s, z)),
                                    m.pi_act(sx, h.ppg(y, z, s))),
                              h.ppg(x, m.pi.mul(y, z), s));
              // rearranged: -(sx)·h(y,z,s) + h(xy,z,s) + h(x,y,s) - h(x,yz,s)
              //              = h(sx,sy,sz) - s·h(x,y,z)
              int lhs2 = A.sub(A.add(A.sub(h.ppg(m.pi.mul(x, y), z, s),
                                           m.pi_act(sx, h.ppg(y, z, s))),
                                     h.ppg(x, y, s)),
                               h.ppg(x, m.pi.mul(y, z), s));
              int rhs2 = A.sub(h.ppp(sx, m.g_pi(s, y), m.g_pi(s, z)), m.g_a(s, h.ppp(x, y, z)));
              CHECK((lhs == rhs) == (lhs2 == rhs2));
            }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int s = 0; s < mm; ++s)
            for (int t = 0; t < mm; ++t) {
              int st = m.gamma.mul(s, t);
              int lhs = A.add(A.add(A.add(m.g_a(s, h.ppg(x, y, t)),
                                          h.ppg(m.g_pi(t, x), m.g_pi(t, y), s)),
                                    h.pgg(x, s, t)),
                              m.pi_act(m.g_pi(st, x), h.pgg(y, s, t)));
              int rhs = A.add(h.ppg(x, y, st), h.pgg(m.pi.mul(x, y), s, t));
              // rearranged: ((st)x)·h(y,s,t) - h(xy,s,t) + h(x,s,t)
              //              = h(x,y,st) - h(tx,ty,s) - s·h(x,y,t)
              int lhs2 = A.add(A.sub(m.pi_act(m.g_pi(st, x), h.pgg(y, s, t)),
                                     h.pgg(m.pi.mul(x, y), s, t)),
                               h.pgg(x, s, t));
              int rhs2 = A.sub(A.sub(h.ppg(x, y, st), h.ppg(m.g_pi(t, x), m.g_pi(t, y), s)),
                               m.g_a(s, h.ppg(x, y, t)));
              CHECK((lhs == rhs) == (lhs2 == rhs2));
            }
    }
  }
}

TEST_CASE("combine arithmetic") {
  auto em = trivial_module(2, 2, {3});
  std::mt19937 rng(5);
  Cochain3 h = random_cochain3(em, rng);
  CHECK(is_zero(combine(h, -1, h)));
  CHECK(equal_values(combine(zero_cochain3(em), 1, h), h));
  CHECK(is_zero(combine(h, 2, h)));  // 3h = 0 in Z/3

  auto other = trivial_module(2, 2, {2});
  CHECK_THROWS_WITH_AS(combine(h, 1, zero_cochain3(other)), doctest::Contains("ModuleMismatch"),
                       Error);
}

TEST_CASE("normalization is enforced and closed under the coboundaries") {
  auto em = trivial_module(2, 2, {2});
  std::vector<int> bad(2, 0);
  bad[0] = 1;
  CHECK_THROWS_WITH_AS(make_cochain1(em, bad), doctest::Contains("NotNormalized"), Error);

  std::mt19937 rng(3);
  for (int iter = 0; iter < 10; ++iter) {
    Cochain2 g = random_cochain2(em, rng);
    Cochain3 h = d2(g);
    CHECK_NOTHROW(make_cochain3(em, h.h_ppp, h.h_ppg, h.h_pgg));
    Cochain2 gg = d1(make_cochain1(em, {0, 1}));
    CHECK_NOTHROW(make_cochain2(em, gg.g_pp, gg.g_pg));
  }
}
