#pragma once

#include <memory>
#include <vector>

#include "equicat/abelian.hpp"
#include "equicat/error.hpp"
#include "equicat/group.hpp"

namespace equicat {

// An action of a finite group by automorphisms of a carrier (a group or a
// finite abelian group), stored as one full image table per actor element.
struct AutAction {
  std::vector<std::vector<int>> maps;

  int apply(int actor, int x) const { return maps[actor][x]; }

  bool operator==(const AutAction&) const = default;
};

namespace detail {

// Shared validator; `op` is the carrier's binary operation on indices.
template <typename Op>
AutAction validate_action_impl(const FiniteGroup& actor, int carrier_size, Op op,
                               const std::vector<std::vector<int>>& maps) {
  const int n = actor.order();
  if (static_cast<int>(maps.size()) != n) throw ParseError("one map required per actor element");
  for (const auto& m : maps)
    if (static_cast<int>(m.size()) != carrier_size)
      throw ParseError("action map must be total over the carrier");
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < carrier_size; ++x)
      if (maps[s][x] < 0 || maps[s][x] >= carrier_size)
        throw ParseError("action map image out of range");

  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(carrier_size, 0);
    for (int x = 0; x < carrier_size; ++x) {
      if (seen[maps[s][x]]) throw Error("NotBijective", {s}, "action map is not a bijection");
      seen[maps[s][x]] = 1;
    }
  }

  for (int s = 0; s < n; ++s)
    for (int x = 0; x < carrier_size; ++x)
      for (int y = 0; y < carrier_size; ++y)
        if (maps[s][op(x, y)] != op(maps[s][x], maps[s][y]))
          throw Error("NotHomomorphic", {s, x, y}, "action map is not a homomorphism");

  for (int x = 0; x < carrier_size; ++x)
    if (maps[FiniteGroup::identity][x] != x)
      throw Error("IdentityActsNontrivially", {x}, "identity of the actor must act as id");

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < carrier_size; ++x)
        if (maps[s][maps[t][x]] != maps[actor.mul(s, t)][x])
          throw Error("NotAnAction", {s, t}, "maps[s]∘maps[t] differs from maps[s·t]");

  return AutAction{maps};
}

}  // namespace detail

inline AutAction validate_action(const FiniteGroup& actor, const FiniteGroup& carrier,
                                 const std::vector<std::vector<int>>& maps) {
  return detail::validate_action_impl(
      actor, carrier.order(), [&](int x, int y) { return carrier.mul(x, y); }, maps);
}

inline AutAction validate_action(const FiniteGroup& actor, const FiniteAbelianGroup& carrier,
                                 const std::vector<std::vector<int>>& maps) {
  return detail::validate_action_impl(
      actor, carrier.order(), [&](int x, int y) { return carrier.add(x, y); }, maps);
}

inline AutAction trivial_action(const FiniteGroup& actor, int carrier_size) {
  std::vector<int> id(carrier_size);
  for (int i = 0; i < carrier_size; ++i) id[i] = i;
  return AutAction{std::vector<std::vector<int>>(actor.order(), id)};
}

// A Pi-module A together with compatible Gamma-actions on Pi and on A:
// s(x·a) = (s·x)·(s·a) for s in Gamma, x in Pi, a in A.
struct EquivariantModule {
  FiniteGroup pi;
  FiniteGroup gamma;
  FiniteAbelianGroup a;
  AutAction pi_on_a;
  AutAction gamma_on_pi;
  AutAction gamma_on_a;

  int pi_act(int x, int v) const { return pi_on_a.apply(x, v); }
  int g_pi(int s, int x) const { return gamma_on_pi.apply(s, x); }
  int g_a(int s, int v) const { return gamma_on_a.apply(s, v); }

  bool operator==(const EquivariantModule&) const = default;
};

using EmPtr = std::shared_ptr<const EquivariantModule>;

inline EquivariantModule validate_equivariant_module(const FiniteGroup& pi,
                                                     const FiniteGroup& gamma,
                                                     const FiniteAbelianGroup& a,
                                                     const std::vector<std::vector<int>>& pi_on_a,
                                                     const std::vector<std::vector<int>>& gamma_on_pi,
                                                     const std::vector<std::vector<int>>& gamma_on_a) {
  EquivariantModule em{pi,
                       gamma,
                       a,
                       validate_action(pi, a, pi_on_a),
                       validate_action(gamma, pi, gamma_on_pi),
                       validate_action(gamma, a, gamma_on_a)};
  for (int s = 0; s < gamma.order(); ++s)
    for (int x = 0; x < pi.order(); ++x)
      for (int v = 0; v < a.order(); ++v)
        if (em.g_a(s, em.pi_act(x, v)) != em.pi_act(em.g_pi(s, x), em.g_a(s, v)))
          throw Error("NotEquivariant", {s, x, v}, "s(x·a) != (s·x)(s·a)");
  return em;
}

inline EmPtr share(EquivariantModule em) {
  return std::make_shared<const EquivariantModule>(std::move(em));
}

inline bool same_module(const EmPtr& l, const EmPtr& r) { return l == r || *l == *r; }

}  // namespace equicat
