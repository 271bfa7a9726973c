#pragma once

#include <vector>

#include "equicat/action.hpp"
#include "equicat/cochain.hpp"
#include "equicat/report.hpp"

namespace equicat {

// The categorical group of type (Pi, A): objects are elements of Pi,
// morphisms are automorphisms Aut(x) = {x} x A, tensor is
// (x,u) @ (y,v) = (xy, u + x·v), units are strict, and the associativity
// constraint at (x,y,z) is the automorphism with component xi(x,y,z) for a
// normalized ordinary 3-cocycle xi on Pi.
struct GrCategory {
  EmPtr em;
  std::vector<int> xi;  // Pi^3 -> A, flattened

  int xi_at(int x, int y, int z) const {
    const int n = em->pi.order();
    return xi[(static_cast<std::size_t>(x) * n + y) * n + z];
  }

  bool operator==(const GrCategory& o) const { return same_module(em, o.em) && xi == o.xi; }
};

struct GrMorphism {
  int object = 0;
  int component = 0;

  bool operator==(const GrMorphism&) const = default;
};

inline GrCategory build_gr_category(EmPtr em, std::vector<int> xi) {
  const int n = em->pi.order();
  if (static_cast<int>(xi.size()) != n * n * n) throw ParseError("xi table has wrong size");
  for (int v : xi)
    if (v < 0 || v >= em->a.order()) throw ParseError("xi value out of range");
  GrCategory c{std::move(em), std::move(xi)};
  const auto& m = *c.em;
  const auto& A = m.a;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((x == 0 || y == 0 || z == 0) && c.xi_at(x, y, z) != 0)
          throw Error("NotNormalized", {x, y, z}, "xi must vanish on identity arguments");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t) {
          int v = m.pi_act(x, c.xi_at(y, z, t));
          v = A.sub(v, c.xi_at(m.pi.mul(x, y), z, t));
          v = A.add(v, c.xi_at(x, m.pi.mul(y, z), t));
          v = A.sub(v, c.xi_at(x, y, m.pi.mul(z, t)));
          v = A.add(v, c.xi_at(x, y, z));
          if (v != 0) throw Error("NotACocycle", {x, y, z, t}, "xi fails the 3-cocycle identity");
        }
  return c;
}

inline GrCategory strict_gr_category(EmPtr em) {
  const int n = em->pi.order();
  return build_gr_category(std::move(em), std::vector<int>(n * n * n, 0));
}

inline GrMorphism compose_morphisms(const GrCategory& c, const GrMorphism& m1,
                                    const GrMorphism& m2) {
  if (m1.object != m2.object)
    throw Error("ObjectMismatch", {m1.object, m2.object}, "morphisms live at different objects");
  return {m1.object, c.em->a.add(m1.component, m2.component)};
}

inline GrMorphism tensor_morphisms(const GrCategory& c, const GrMorphism& m1,
                                   const GrMorphism& m2) {
  const auto& em = *c.em;
  return {em.pi.mul(m1.object, m2.object),
          em.a.add(m1.component, em.pi_act(m1.object, m2.component))};
}

// Candidate data for a monoidal functor between type-(Pi, A) categories:
// object map phi, component map f, comparison components gtilde on Pi^2 and
// the unit comparison component chat.
struct GrFunctorData {
  std::vector<int> phi;     // Pi -> Pi'
  std::vector<int> f;       // A -> A'
  std::vector<int> gtilde;  // Pi^2 -> A', flattened over src Pi
  int chat = 0;
};

inline GrFunctorData identity_functor_data(const GrCategory& c) {
  const int n = c.em->pi.order(), aord = c.em->a.order();
  GrFunctorData fd;
  fd.phi.resize(n);
  for (int i = 0; i < n; ++i) fd.phi[i] = i;
  fd.f.resize(aord);
  for (int i = 0; i < aord; ++i) fd.f[i] = i;
  fd.gtilde.assign(n * n, 0);
  fd.chat = 0;
  return fd;
}

// Validates the monoidal-functor laws one by one:
//   phi_homomorphism / f_homomorphism  group homomorphisms
//   pairing                            f(x·a) = phi(x)·f(a)
//   hexagon   phi(x)·g(y,z) - g(xy,z) + g(x,yz) - g(x,y)
//               = xi'(phi x, phi y, phi z) - f(xi(x,y,z))
//   unit_right                         phi(x)·c + g(x,1) = 0
//   unit_left                          c + g(1,x) = 0
inline Report check_gr_functor(const GrCategory& src, const GrCategory& dst,
                               const GrFunctorData& fd) {
  const int n = src.em->pi.order();
  const int aord = src.em->a.order();
  if (static_cast<int>(fd.phi.size()) != n || static_cast<int>(fd.f.size()) != aord ||
      static_cast<int>(fd.gtilde.size()) != n * n)
    throw ParseError("functor data tables have wrong sizes");
  const auto& sp = src.em->pi;
  const auto& dp = dst.em->pi;
  const auto& sa = src.em->a;
  const auto& da = dst.em->a;
  for (int v : fd.phi)
    if (v < 0 || v >= dp.order()) throw ParseError("phi image out of range");
  for (int v : fd.f)
    if (v < 0 || v >= da.order()) throw ParseError("f image out of range");
  for (int v : fd.gtilde)
    if (v < 0 || v >= da.order()) throw ParseError("gtilde value out of range");
  if (fd.chat < 0 || fd.chat >= da.order()) throw ParseError("chat out of range");

  Report rep;
  rep.checks = {{"phi_homomorphism"}, {"f_homomorphism"}, {"pairing"},
                {"hexagon"},          {"unit_right"},     {"unit_left"}};
  Check& cphi = rep.checks[0];
  Check& cf = rep.checks[1];
  Check& cpair = rep.checks[2];
  Check& chex = rep.checks[3];
  Check& cur = rep.checks[4];
  Check& cul = rep.checks[5];

  auto g_at = [&](int x, int y) { return fd.gtilde[static_cast<std::size_t>(x) * n + y]; };

  for (int x = 0; x < n && cphi.pass; ++x)
    for (int y = 0; y < n && cphi.pass; ++y)
      record(cphi, fd.phi[sp.mul(x, y)] == dp.mul(fd.phi[x], fd.phi[y]), {x, y});
  for (int a = 0; a < aord && cf.pass; ++a)
    for (int b = 0; b < aord && cf.pass; ++b)
      record(cf, fd.f[sa.add(a, b)] == da.add(fd.f[a], fd.f[b]), {a, b});
  for (int x = 0; x < n && cpair.pass; ++x)
    for (int a = 0; a < aord && cpair.pass; ++a)
      record(cpair, fd.f[src.em->pi_act(x, a)] == dst.em->pi_act(fd.phi[x], fd.f[a]), {x, a});

  for (int x = 0; x < n && chex.pass; ++x)
    for (int y = 0; y < n && chex.pass; ++y)
      for (int z = 0; z < n && chex.pass; ++z) {
        int lhs = dst.em->pi_act(fd.phi[x], g_at(y, z));
        lhs = da.sub(lhs, g_at(sp.mul(x, y), z));
        lhs = da.add(lhs, g_at(x, sp.mul(y, z)));
        lhs = da.sub(lhs, g_at(x, y));
        int rhs = da.sub(dst.xi_at(fd.phi[x], fd.phi[y], fd.phi[z]), fd.f[src.xi_at(x, y, z)]);
        record(chex, lhs == rhs, {x, y, z});
      }

  for (int x = 0; x < n && cur.pass; ++x)
    record(cur, da.add(dst.em->pi_act(fd.phi[x], fd.chat), g_at(x, 0)) == 0, {x});
  for (int x = 0; x < n && cul.pass; ++x) record(cul, da.add(fd.chat, g_at(0, x)) == 0, {x});

  return rep;
}

}  // namespace equicat
