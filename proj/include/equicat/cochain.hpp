#pragma once

#include <cstdint>
#include <vector>

#include "equicat/action.hpp"
#include "equicat/error.hpp"
#include "equicat/report.hpp"

namespace equicat {

// Normalized cochains of the truncated equivariant complex
//
//   0 -> C^1(Pi,A) -> C^2(Pi,A) -> Z^3(Pi,A) -> 0
//
// C^1 holds maps Pi -> A, C^2 maps on Pi^2 and Pi x Gamma, degree 3 maps on
// Pi^3, Pi^2 x Gamma and Pi x Gamma^2. "Normalized" means the value is zero
// whenever any argument is the identity of its group; normalized slots are
// stored and validated rather than omitted. Values are A-element indices and
// tables are dense, flattened in lexicographic index order.

struct Cochain1 {
  EmPtr em;
  std::vector<int> f;  // Pi -> A

  int at(int x) const { return f[x]; }
};

struct Cochain2 {
  EmPtr em;
  std::vector<int> g_pp;  // Pi^2 -> A
  std::vector<int> g_pg;  // Pi x Gamma -> A

  int pp(int x, int y) const { return g_pp[static_cast<std::size_t>(x) * em->pi.order() + y]; }
  int pg(int x, int s) const { return g_pg[static_cast<std::size_t>(x) * em->gamma.order() + s]; }
};

struct Cochain3 {
  EmPtr em;
  std::vector<int> h_ppp;  // Pi^3 -> A
  std::vector<int> h_ppg;  // Pi^2 x Gamma -> A
  std::vector<int> h_pgg;  // Pi x Gamma^2 -> A

  int ppp(int x, int y, int z) const {
    const int n = em->pi.order();
    return h_ppp[(static_cast<std::size_t>(x) * n + y) * n + z];
  }
  int ppg(int x, int y, int s) const {
    const int n = em->pi.order();
    return h_ppg[(static_cast<std::size_t>(x) * n + y) * em->gamma.order() + s];
  }
  int pgg(int x, int s, int t) const {
    const int m = em->gamma.order();
    return h_pgg[(static_cast<std::size_t>(x) * m + s) * m + t];
  }
};

namespace detail {

inline void require_value_range(const std::vector<int>& v, int order, const char* what) {
  for (int x : v)
    if (x < 0 || x >= order) throw ParseError(std::string(what) + ": value out of range");
}

}  // namespace detail

inline Cochain1 make_cochain1(EmPtr em, std::vector<int> f) {
  const int n = em->pi.order();
  if (static_cast<int>(f.size()) != n) throw ParseError("degree-1 table has wrong size");
  detail::require_value_range(f, em->a.order(), "degree-1 cochain");
  if (f[0] != 0) throw Error("NotNormalized", {0}, "f(1) must be 0");
  return Cochain1{std::move(em), std::move(f)};
}

inline Cochain2 make_cochain2(EmPtr em, std::vector<int> g_pp, std::vector<int> g_pg) {
  const int n = em->pi.order(), m = em->gamma.order();
  if (static_cast<int>(g_pp.size()) != n * n || static_cast<int>(g_pg.size()) != n * m)
    throw ParseError("degree-2 table has wrong size");
  detail::require_value_range(g_pp, em->a.order(), "degree-2 cochain");
  detail::require_value_range(g_pg, em->a.order(), "degree-2 cochain");
  Cochain2 g{std::move(em), std::move(g_pp), std::move(g_pg)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((x == 0 || y == 0) && g.pp(x, y) != 0)
        throw Error("NotNormalized", {x, y}, "g(x,y) must vanish on identity arguments");
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < m; ++s)
      if ((x == 0 || s == 0) && g.pg(x, s) != 0)
        throw Error("NotNormalized", {x, s}, "g(x,s) must vanish on identity arguments");
  return g;
}

inline Cochain3 make_cochain3(EmPtr em, std::vector<int> h_ppp, std::vector<int> h_ppg,
                              std::vector<int> h_pgg) {
  const int n = em->pi.order(), m = em->gamma.order();
  if (static_cast<int>(h_ppp.size()) != n * n * n ||
      static_cast<int>(h_ppg.size()) != n * n * m ||
      static_cast<int>(h_pgg.size()) != n * m * m)
    throw ParseError("degree-3 table has wrong size");
  detail::require_value_range(h_ppp, em->a.order(), "degree-3 cochain");
  detail::require_value_range(h_ppg, em->a.order(), "degree-3 cochain");
  detail::require_value_range(h_pgg, em->a.order(), "degree-3 cochain");
  Cochain3 h{std::move(em), std::move(h_ppp), std::move(h_ppg), std::move(h_pgg)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((x == 0 || y == 0 || z == 0) && h.ppp(x, y, z) != 0)
          throw Error("NotNormalized", {x, y, z}, "h(x,y,z) must vanish on identity arguments");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int s = 0; s < m; ++s)
        if ((x == 0 || y == 0 || s == 0) && h.ppg(x, y, s) != 0)
          throw Error("NotNormalized", {x, y, s}, "h(x,y,s) must vanish on identity arguments");
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        if ((x == 0 || s == 0 || t == 0) && h.pgg(x, s, t) != 0)
          throw Error("NotNormalized", {x, s, t}, "h(x,s,t) must vanish on identity arguments");
  return h;
}

inline Cochain1 zero_cochain1(EmPtr em) {
  return Cochain1{em, std::vector<int>(em->pi.order(), 0)};
}

inline Cochain2 zero_cochain2(EmPtr em) {
  const int n = em->pi.order(), m = em->gamma.order();
  return Cochain2{em, std::vector<int>(n * n, 0), std::vector<int>(n * m, 0)};
}

inline Cochain3 zero_cochain3(EmPtr em) {
  const int n = em->pi.order(), m = em->gamma.order();
  return Cochain3{em, std::vector<int>(n * n * n, 0), std::vector<int>(n * n * m, 0),
                  std::vector<int>(n * m * m, 0)};
}

// Coboundary C^1 -> C^2:
//   (df)(x,y) = x·f(y) - f(xy) + f(x)
//   (df)(x,s) = s·f(x) - f(s·x)
inline Cochain2 d1(const Cochain1& f) {
  const auto& em = *f.em;
  const int n = em.pi.order(), m = em.gamma.order();
  const auto& A = em.a;
  Cochain2 g = zero_cochain2(f.em);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = em.pi_act(x, f.at(y));
      v = A.sub(v, f.at(em.pi.mul(x, y)));
      v = A.add(v, f.at(x));
      g.g_pp[static_cast<std::size_t>(x) * n + y] = v;
    }
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < m; ++s) {
      int v = A.sub(em.g_a(s, f.at(x)), f.at(em.g_pi(s, x)));
      g.g_pg[static_cast<std::size_t>(x) * m + s] = v;
    }
  return g;
}

// Coboundary C^2 -> C^3:
//   (dg)(x,y,z) = x·g(y,z) - g(xy,z) + g(x,yz) - g(x,y)
//   (dg)(x,y,s) = s·g(x,y) - g(sx,sy) - (sx)·g(y,s) + g(xy,s) - g(x,s)
//   (dg)(x,s,t) = s·g(x,t) - g(x,st) + g(tx,s)
inline Cochain3 d2(const Cochain2& g) {
  const auto& em = *g.em;
  const int n = em.pi.order(), m = em.gamma.order();
  const auto& A = em.a;
  Cochain3 h = zero_cochain3(g.em);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int v = em.pi_act(x, g.pp(y, z));
        v = A.sub(v, g.pp(em.pi.mul(x, y), z));
        v = A.add(v, g.pp(x, em.pi.mul(y, z)));
        v = A.sub(v, g.pp(x, y));
        h.h_ppp[(static_cast<std::size_t>(x) * n + y) * n + z] = v;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int s = 0; s < m; ++s) {
        int v = em.g_a(s, g.pp(x, y));
        v = A.sub(v, g.pp(em.g_pi(s, x), em.g_pi(s, y)));
        v = A.sub(v, em.pi_act(em.g_pi(s, x), g.pg(y, s)));
        v = A.add(v, g.pg(em.pi.mul(x, y), s));
        v = A.sub(v, g.pg(x, s));
        h.h_ppg[(static_cast<std::size_t>(x) * n + y) * m + s] = v;
      }
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        int v = em.g_a(s, g.pg(x, t));
        v = A.sub(v, g.pg(x, em.gamma.mul(s, t)));
        v = A.add(v, g.pg(em.g_pi(t, x), s));
        h.h_pgg[(static_cast<std::size_t>(x) * m + s) * m + t] = v;
      }
  return h;
}

// The four cocycle conditions of degree 3, reported with the first failing
// witness of each. Normalization is re-checked first as its own item.
//   on_pi4:        x·h(y,z,t) - h(xy,z,t) + h(x,yz,t) - h(x,y,zt) + h(x,y,z) = 0
//   on_pi3_gamma:  s·h(x,y,z) + h(xy,z,s) + h(x,y,s)
//                    = h(sx,sy,sz) + (sx)·h(y,z,s) + h(x,yz,s)
//   on_pi2_gamma2: s·h(x,y,t) + h(tx,ty,s) + h(x,s,t) + ((st)x)·h(y,s,t)
//                    = h(x,y,st) + h(xy,s,t)
//   on_pi_gamma3:  s·h(x,t,u) + h(x,s,tu) = h(x,st,u) + h(ux,s,t)
inline Report is_cocycle3(const Cochain3& h) {
  const auto& em = *h.em;
  const int n = em.pi.order(), m = em.gamma.order();
  const auto& A = em.a;
  Report rep;
  rep.checks = {{"normalized"}, {"on_pi4"}, {"on_pi3_gamma"}, {"on_pi2_gamma2"}, {"on_pi_gamma3"}};
  Check& norm = rep.checks[0];
  Check& c8 = rep.checks[1];
  Check& c9 = rep.checks[2];
  Check& c10 = rep.checks[3];
  Check& c11 = rep.checks[4];

  for (int x = 0; x < n && norm.pass; ++x)
    for (int y = 0; y < n && norm.pass; ++y)
      for (int z = 0; z < n && norm.pass; ++z)
        if ((x == 0 || y == 0 || z == 0) && h.ppp(x, y, z) != 0) record(norm, false, {x, y, z});
  for (int x = 0; x < n && norm.pass; ++x)
    for (int y = 0; y < n && norm.pass; ++y)
      for (int s = 0; s < m && norm.pass; ++s)
        if ((x == 0 || y == 0 || s == 0) && h.ppg(x, y, s) != 0) record(norm, false, {x, y, s});
  for (int x = 0; x < n && norm.pass; ++x)
    for (int s = 0; s < m && norm.pass; ++s)
      for (int t = 0; t < m && norm.pass; ++t)
        if ((x == 0 || s == 0 || t == 0) && h.pgg(x, s, t) != 0) record(norm, false, {x, s, t});

  for (int x = 0; x < n && c8.pass; ++x)
    for (int y = 0; y < n && c8.pass; ++y)
      for (int z = 0; z < n && c8.pass; ++z)
        for (int t = 0; t < n && c8.pass; ++t) {
          int v = em.pi_act(x, h.ppp(y, z, t));
          v = A.sub(v, h.ppp(em.pi.mul(x, y), z, t));
          v = A.add(v, h.ppp(x, em.pi.mul(y, z), t));
          v = A.sub(v, h.ppp(x, y, em.pi.mul(z, t)));
          v = A.add(v, h.ppp(x, y, z));
          record(c8, v == 0, {x, y, z, t});
        }

  for (int x = 0; x < n && c9.pass; ++x)
    for (int y = 0; y < n && c9.pass; ++y)
      for (int z = 0; z < n && c9.pass; ++z)
        for (int s = 0; s < m && c9.pass; ++s) {
          int lhs = em.g_a(s, h.ppp(x, y, z));
          lhs = A.add(lhs, h.ppg(em.pi.mul(x, y), z, s));
          lhs = A.add(lhs, h.ppg(x, y, s));
          int rhs = h.ppp(em.g_pi(s, x), em.g_pi(s, y), em.g_pi(s, z));
          rhs = A.add(rhs, em.pi_act(em.g_pi(s, x), h.ppg(y, z, s)));
          rhs = A.add(rhs, h.ppg(x, em.pi.mul(y, z), s));
          record(c9, lhs == rhs, {x, y, z, s});
        }

  for (int x = 0; x < n && c10.pass; ++x)
    for (int y = 0; y < n && c10.pass; ++y)
      for (int s = 0; s < m && c10.pass; ++s)
        for (int t = 0; t < m && c10.pass; ++t) {
          int lhs = em.g_a(s, h.ppg(x, y, t));
          lhs = A.add(lhs, h.ppg(em.g_pi(t, x), em.g_pi(t, y), s));
          lhs = A.add(lhs, h.pgg(x, s, t));
          lhs = A.add(lhs, em.pi_act(em.g_pi(em.gamma.mul(s, t), x), h.pgg(y, s, t)));
          int rhs = h.ppg(x, y, em.gamma.mul(s, t));
          rhs = A.add(rhs, h.pgg(em.pi.mul(x, y), s, t));
          record(c10, lhs == rhs, {x, y, s, t});
        }

  for (int x = 0; x < n && c11.pass; ++x)
    for (int s = 0; s < m && c11.pass; ++s)
      for (int t = 0; t < m && c11.pass; ++t)
        for (int u = 0; u < m && c11.pass; ++u) {
          int lhs = em.g_a(s, h.pgg(x, t, u));
          lhs = A.add(lhs, h.pgg(x, s, em.gamma.mul(t, u)));
          int rhs = h.pgg(x, em.gamma.mul(s, t), u);
          rhs = A.add(rhs, h.pgg(em.g_pi(u, x), s, t));
          record(c11, lhs == rhs, {x, s, t, u});
        }

  return rep;
}

namespace detail {

inline void require_same_module(const EmPtr& l, const EmPtr& r) {
  if (!same_module(l, r)) throw Error("ModuleMismatch", "cochains belong to different modules");
}

}  // namespace detail

// Pointwise h1 + c·h2.
inline Cochain1 combine(const Cochain1& h1, std::int64_t c, const Cochain1& h2) {
  detail::require_same_module(h1.em, h2.em);
  Cochain1 r = h1;
  const auto& A = h1.em->a;
  for (std::size_t i = 0; i < r.f.size(); ++i) r.f[i] = A.add(h1.f[i], A.scalar(c, h2.f[i]));
  return r;
}

inline Cochain2 combine(const Cochain2& h1, std::int64_t c, const Cochain2& h2) {
  detail::require_same_module(h1.em, h2.em);
  Cochain2 r = h1;
  const auto& A = h1.em->a;
  for (std::size_t i = 0; i < r.g_pp.size(); ++i)
    r.g_pp[i] = A.add(h1.g_pp[i], A.scalar(c, h2.g_pp[i]));
  for (std::size_t i = 0; i < r.g_pg.size(); ++i)
    r.g_pg[i] = A.add(h1.g_pg[i], A.scalar(c, h2.g_pg[i]));
  return r;
}

inline Cochain3 combine(const Cochain3& h1, std::int64_t c, const Cochain3& h2) {
  detail::require_same_module(h1.em, h2.em);
  Cochain3 r = h1;
  const auto& A = h1.em->a;
  for (std::size_t i = 0; i < r.h_ppp.size(); ++i)
    r.h_ppp[i] = A.add(h1.h_ppp[i], A.scalar(c, h2.h_ppp[i]));
  for (std::size_t i = 0; i < r.h_ppg.size(); ++i)
    r.h_ppg[i] = A.add(h1.h_ppg[i], A.scalar(c, h2.h_ppg[i]));
  for (std::size_t i = 0; i < r.h_pgg.size(); ++i)
    r.h_pgg[i] = A.add(h1.h_pgg[i], A.scalar(c, h2.h_pgg[i]));
  return r;
}

inline bool equal_values(const Cochain3& l, const Cochain3& r) {
  return l.h_ppp == r.h_ppp && l.h_ppg == r.h_ppg && l.h_pgg == r.h_pgg;
}

inline bool is_zero(const Cochain3& h) {
  auto all0 = [](const std::vector<int>& v) {
    for (int x : v)
      if (x) return false;
    return true;
  };
  return all0(h.h_ppp) && all0(h.h_ppg) && all0(h.h_pgg);
}

}  // namespace equicat
