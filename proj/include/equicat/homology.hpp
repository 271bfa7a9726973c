#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "equicat/cochain.hpp"
#include "equicat/intmat.hpp"

namespace equicat {

// Integer matrix of an automorphism of A on invariant-factor coordinates:
// column j is the tuple of the image of the j-th generator.
inline IntMatrix action_matrix(const FiniteAbelianGroup& a, const std::vector<int>& table) {
  const int k = a.rank();
  IntMatrix m(k, k);
  for (int j = 0; j < k; ++j) {
    std::vector<std::int64_t> e(k, 0);
    e[j] = 1;
    auto img = a.tuple(table[a.from_tuple(e)]);
    for (int i = 0; i < k; ++i) m.at(i, j) = img[i];
  }
  return m;
}

namespace detail {

// Free-slot coordinate system for one cochain degree. Slots are the table
// positions not pinned to zero by normalization, listed part by part in
// increasing flat-index (lexicographic) order; each slot contributes one
// coordinate per invariant factor of A.
struct CoordLayout {
  std::vector<int> slot_part;             // per free slot
  std::vector<int> slot_flat;             // per free slot
  std::vector<std::vector<int>> pos;      // per part: flat -> free slot ordinal, -1 if pinned
  int k = 0;
  std::vector<std::int64_t> moduli;       // per coordinate

  int slot_count() const { return static_cast<int>(slot_part.size()); }
  int coord_count() const { return slot_count() * k; }

  void finish(const FiniteAbelianGroup& a) {
    k = a.rank();
    moduli.reserve(static_cast<std::size_t>(slot_count()) * k);
    for (int s = 0; s < slot_count(); ++s)
      for (int i = 0; i < k; ++i) moduli.push_back(a.invariant_factors()[i]);
  }
};

inline CoordLayout layout1(const EquivariantModule& em) {
  CoordLayout L;
  const int n = em.pi.order();
  L.pos.assign(1, std::vector<int>(n, -1));
  for (int x = 1; x < n; ++x) {
    L.pos[0][x] = L.slot_count();
    L.slot_part.push_back(0);
    L.slot_flat.push_back(x);
  }
  L.finish(em.a);
  return L;
}

inline CoordLayout layout2(const EquivariantModule& em) {
  CoordLayout L;
  const int n = em.pi.order(), m = em.gamma.order();
  L.pos.assign(2, {});
  L.pos[0].assign(n * n, -1);
  L.pos[1].assign(n * m, -1);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      L.pos[0][x * n + y] = L.slot_count();
      L.slot_part.push_back(0);
      L.slot_flat.push_back(x * n + y);
    }
  for (int x = 1; x < n; ++x)
    for (int s = 1; s < m; ++s) {
      L.pos[1][x * m + s] = L.slot_count();
      L.slot_part.push_back(1);
      L.slot_flat.push_back(x * m + s);
    }
  L.finish(em.a);
  return L;
}

inline CoordLayout layout3(const EquivariantModule& em) {
  CoordLayout L;
  const int n = em.pi.order(), m = em.gamma.order();
  L.pos.assign(3, {});
  L.pos[0].assign(n * n * n, -1);
  L.pos[1].assign(n * n * m, -1);
  L.pos[2].assign(n * m * m, -1);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int z = 1; z < n; ++z) {
        L.pos[0][(x * n + y) * n + z] = L.slot_count();
        L.slot_part.push_back(0);
        L.slot_flat.push_back((x * n + y) * n + z);
      }
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int s = 1; s < m; ++s) {
        L.pos[1][(x * n + y) * m + s] = L.slot_count();
        L.slot_part.push_back(1);
        L.slot_flat.push_back((x * n + y) * m + s);
      }
  for (int x = 1; x < n; ++x)
    for (int s = 1; s < m; ++s)
      for (int t = 1; t < m; ++t) {
        L.pos[2][(x * m + s) * m + t] = L.slot_count();
        L.slot_part.push_back(2);
        L.slot_flat.push_back((x * m + s) * m + t);
      }
  L.finish(em.a);
  return L;
}

// Accumulates signed, action-twisted references to input slots into one
// k-row block of an integer matrix. References to pinned slots vanish.
class BlockWriter {
 public:
  BlockWriter(IntMatrix& out, const CoordLayout& in, const FiniteAbelianGroup& a)
      : out_(out), in_(in), k_(a.rank()) {}

  void set_row_block(int block) { base_row_ = block * k_; }

  void add(int part, int flat, int sign, const IntMatrix* act) {
    int slot = in_.pos[part][flat];
    if (slot < 0) return;
    const int base_col = slot * k_;
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) {
        std::int64_t coef = act ? act->at(i, j) : (i == j ? 1 : 0);
        if (coef == 0) continue;
        auto& cell = out_.at(base_row_ + i, base_col + j);
        cell = checked::add(cell, sign * coef);
      }
  }

 private:
  IntMatrix& out_;
  const CoordLayout& in_;
  int k_;
  int base_row_ = 0;
};

struct ActionMatrices {
  std::vector<IntMatrix> pi_on_a;
  std::vector<IntMatrix> gamma_on_a;

  explicit ActionMatrices(const EquivariantModule& em) {
    for (const auto& t : em.pi_on_a.maps) pi_on_a.push_back(action_matrix(em.a, t));
    for (const auto& t : em.gamma_on_a.maps) gamma_on_a.push_back(action_matrix(em.a, t));
  }
};

}  // namespace detail

struct CoboundaryMatrix {
  IntMatrix m;                             // codomain coords x domain coords
  std::vector<std::int64_t> domain_moduli;
  std::vector<std::int64_t> codomain_moduli;
};

// The degree-1 or degree-2 coboundary as an integer-linear map on free-slot
// coordinates; each output coordinate is understood modulo its invariant
// factor. Mirrors d1/d2 exactly (tested against them on random cochains).
inline CoboundaryMatrix coboundary_matrix(const EquivariantModule& em, int degree) {
  const int n = em.pi.order(), m = em.gamma.order();
  detail::ActionMatrices acts(em);
  if (degree == 1) {
    auto in = detail::layout1(em);
    auto out = detail::layout2(em);
    IntMatrix mat(out.coord_count(), in.coord_count());
    detail::BlockWriter w(mat, in, em.a);
    for (int s = 0; s < out.slot_count(); ++s) {
      w.set_row_block(s);
      int flat = out.slot_flat[s];
      if (out.slot_part[s] == 0) {
        int x = flat / n, y = flat % n;
        w.add(0, y, +1, &acts.pi_on_a[x]);
        w.add(0, em.pi.mul(x, y), -1, nullptr);
        w.add(0, x, +1, nullptr);
      } else {
        int x = flat / m, sg = flat % m;
        w.add(0, x, +1, &acts.gamma_on_a[sg]);
        w.add(0, em.g_pi(sg, x), -1, nullptr);
      }
    }
    return {std::move(mat), in.moduli, out.moduli};
  }
  if (degree != 2) throw Error("DegreeMismatch", "coboundary_matrix supports degrees 1 and 2");
  auto in = detail::layout2(em);
  auto out = detail::layout3(em);
  IntMatrix mat(out.coord_count(), in.coord_count());
  detail::BlockWriter w(mat, in, em.a);
  for (int s = 0; s < out.slot_count(); ++s) {
    w.set_row_block(s);
    int flat = out.slot_flat[s];
    if (out.slot_part[s] == 0) {
      int x = flat / (n * n), y = (flat / n) % n, z = flat % n;
      w.add(0, y * n + z, +1, &acts.pi_on_a[x]);
      w.add(0, em.pi.mul(x, y) * n + z, -1, nullptr);
      w.add(0, x * n + em.pi.mul(y, z), +1, nullptr);
      w.add(0, x * n + y, -1, nullptr);
    } else if (out.slot_part[s] == 1) {
      int x = flat / (n * m), y = (flat / m) % n, sg = flat % m;
      int sx = em.g_pi(sg, x), sy = em.g_pi(sg, y);
      w.add(0, x * n + y, +1, &acts.gamma_on_a[sg]);
      w.add(0, sx * n + sy, -1, nullptr);
      w.add(1, y * m + sg, -1, &acts.pi_on_a[sx]);
      w.add(1, em.pi.mul(x, y) * m + sg, +1, nullptr);
      w.add(1, x * m + sg, -1, nullptr);
    } else {
      int x = flat / (m * m), sg = (flat / m) % m, tg = flat % m;
      w.add(1, x * m + tg, +1, &acts.gamma_on_a[sg]);
      w.add(1, x * m + em.gamma.mul(sg, tg), -1, nullptr);
      w.add(1, em.g_pi(tg, x) * m + sg, +1, nullptr);
    }
  }
  return {std::move(mat), in.moduli, out.moduli};
}

namespace detail {

// All four degree-3 cocycle conditions as one integer-linear map from C^3
// coordinates into a condition space (one A-block per condition instance).
inline CoboundaryMatrix cocycle_condition_matrix(const EquivariantModule& em) {
  const int n = em.pi.order(), m = em.gamma.order();
  const int k = em.a.rank();
  ActionMatrices acts(em);
  auto in = layout3(em);
  const int instances = n * n * n * n + n * n * n * m + n * n * m * m + n * m * m * m;
  IntMatrix mat(instances * k, in.coord_count());
  BlockWriter w(mat, in, em.a);
  std::vector<std::int64_t> out_moduli;
  out_moduli.reserve(static_cast<std::size_t>(instances) * k);
  for (int i = 0; i < instances; ++i)
    for (int j = 0; j < k; ++j) out_moduli.push_back(em.a.invariant_factors()[j]);

  int block = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t) {
          w.set_row_block(block++);
          w.add(0, (y * n + z) * n + t, +1, &acts.pi_on_a[x]);
          w.add(0, (em.pi.mul(x, y) * n + z) * n + t, -1, nullptr);
          w.add(0, (x * n + em.pi.mul(y, z)) * n + t, +1, nullptr);
          w.add(0, (x * n + y) * n + em.pi.mul(z, t), -1, nullptr);
          w.add(0, (x * n + y) * n + z, +1, nullptr);
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int s = 0; s < m; ++s) {
          w.set_row_block(block++);
          int sx = em.g_pi(s, x), sy = em.g_pi(s, y), sz = em.g_pi(s, z);
          w.add(0, (x * n + y) * n + z, +1, &acts.gamma_on_a[s]);
          w.add(1, (em.pi.mul(x, y) * n + z) * m + s, +1, nullptr);
          w.add(1, (x * n + y) * m + s, +1, nullptr);
          w.add(0, (sx * n + sy) * n + sz, -1, nullptr);
          w.add(1, (y * n + z) * m + s, -1, &acts.pi_on_a[sx]);
          w.add(1, (x * n + em.pi.mul(y, z)) * m + s, -1, nullptr);
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
          w.set_row_block(block++);
          int tx = em.g_pi(t, x), ty = em.g_pi(t, y);
          int stx = em.g_pi(em.gamma.mul(s, t), x);
          w.add(1, (x * n + y) * m + t, +1, &acts.gamma_on_a[s]);
          w.add(1, (tx * n + ty) * m + s, +1, nullptr);
          w.add(2, (x * m + s) * m + t, +1, nullptr);
          w.add(2, (y * m + s) * m + t, +1, &acts.pi_on_a[stx]);
          w.add(1, (x * n + y) * m + em.gamma.mul(s, t), -1, nullptr);
          w.add(2, (em.pi.mul(x, y) * m + s) * m + t, -1, nullptr);
        }
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        for (int u = 0; u < m; ++u) {
          w.set_row_block(block++);
          w.add(2, (x * m + t) * m + u, +1, &acts.gamma_on_a[s]);
          w.add(2, (x * m + s) * m + em.gamma.mul(t, u), +1, nullptr);
          w.add(2, (x * m + em.gamma.mul(s, t)) * m + u, -1, nullptr);
          w.add(2, (em.g_pi(u, x) * m + s) * m + t, -1, nullptr);
        }
  return {std::move(mat), in.moduli, std::move(out_moduli)};
}

inline std::vector<std::int64_t> pack3(const CoordLayout& L, const FiniteAbelianGroup& a,
                                       const Cochain3& h) {
  std::vector<std::int64_t> v;
  v.reserve(L.coord_count());
  const std::vector<int>* parts[3] = {&h.h_ppp, &h.h_ppg, &h.h_pgg};
  for (int s = 0; s < L.slot_count(); ++s) {
    auto t = a.tuple((*parts[L.slot_part[s]])[L.slot_flat[s]]);
    v.insert(v.end(), t.begin(), t.end());
  }
  return v;
}

inline Cochain2 unpack2(const CoordLayout& L, EmPtr em, const std::vector<std::int64_t>& coords) {
  Cochain2 g = zero_cochain2(em);
  const auto& a = em->a;
  std::vector<int>* parts[2] = {&g.g_pp, &g.g_pg};
  for (int s = 0; s < L.slot_count(); ++s) {
    std::vector<std::int64_t> t(L.k);
    for (int i = 0; i < L.k; ++i) {
      std::int64_t d = a.invariant_factors()[i];
      std::int64_t r = coords[static_cast<std::size_t>(s) * L.k + i] % d;
      if (r < 0) r += d;
      t[i] = r;
    }
    (*parts[L.slot_part[s]])[L.slot_flat[s]] = a.from_tuple(t);
  }
  return g;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// Solves d2(g) = target. The linear system [d2 | diag(moduli)] is factored
// once per module and reused across targets; `solve_pg` restricts the
// unknowns to the Pi x Gamma part (g on Pi^2 pinned to zero).
class CoboundarySolver {
 public:
  explicit CoboundarySolver(EmPtr em)
      : em_(std::move(em)), l2_(detail::layout2(*em_)), l3_(detail::layout3(*em_)) {
    CoboundaryMatrix cb = coboundary_matrix(*em_, 2);
    bd2_ = std::move(cb.m);
    const int n3 = l3_.coord_count(), n2 = l2_.coord_count();
    pp_coords_ = 0;
    for (int s = 0; s < l2_.slot_count(); ++s)
      if (l2_.slot_part[s] == 0) pp_coords_ += l2_.k;

    IntMatrix full(n3, n2 + n3);
    for (int i = 0; i < n3; ++i)
      for (int j = 0; j < n2; ++j) full.at(i, j) = bd2_.at(i, j);
    for (int i = 0; i < n3; ++i) full.at(i, n2 + i) = l3_.moduli[i];
    full_ = smith_normal_form(full);

    IntMatrix pg(n3, (n2 - pp_coords_) + n3);
    for (int i = 0; i < n3; ++i)
      for (int j = pp_coords_; j < n2; ++j) pg.at(i, j - pp_coords_) = bd2_.at(i, j);
    for (int i = 0; i < n3; ++i) pg.at(i, (n2 - pp_coords_) + i) = l3_.moduli[i];
    pg_ = smith_normal_form(pg);
  }

  const EmPtr& em() const { return em_; }
  const IntMatrix& d2_matrix() const { return bd2_; }

  std::optional<Cochain2> solve(const Cochain3& target) const {
    detail::require_same_module(em_, target.em);
    auto z = snf_solve(full_, detail::pack3(l3_, em_->a, target));
    if (!z) return std::nullopt;
    std::vector<std::int64_t> coords(z->begin(), z->begin() + l2_.coord_count());
    Cochain2 g = detail::unpack2(l2_, em_, coords);
    if (!equal_values(d2(g), target))
      throw Error("Internal", "coboundary solve verification failed");
    return g;
  }

  // Witness with null Pi^2 part, or nullopt when none exists.
  std::optional<Cochain2> solve_pg(const Cochain3& target) const {
    detail::require_same_module(em_, target.em);
    auto z = snf_solve(pg_, detail::pack3(l3_, em_->a, target));
    if (!z) return std::nullopt;
    std::vector<std::int64_t> coords(l2_.coord_count(), 0);
    for (int j = pp_coords_; j < l2_.coord_count(); ++j) coords[j] = (*z)[j - pp_coords_];
    Cochain2 g = detail::unpack2(l2_, em_, coords);
    if (!equal_values(d2(g), target))
      throw Error("Internal", "restricted coboundary solve verification failed");
    return g;
  }

 private:
  EmPtr em_;
  detail::CoordLayout l2_, l3_;
  IntMatrix bd2_;
  SmithDecomposition full_, pg_;
  int pp_coords_ = 0;
};

struct SolveOptions {
  std::int64_t cap = 1'000'000;
};

// Brute-force witness search over all of C^2; the independent fallback.
inline std::optional<Cochain2> solve_coboundary_enum(EmPtr em, const Cochain3& target,
                                                     std::int64_t cap = 1'000'000) {
  auto l2 = detail::layout2(*em);
  const int slots = l2.slot_count();
  const std::int64_t aord = em->a.order();
  std::int64_t total = 1;
  for (int i = 0; i < slots; ++i) {
    total = checked::mul(total, aord);
    if (total > cap) throw CapExceededError("degree-2 enumeration exceeds cap");
  }
  Cochain2 g = zero_cochain2(em);
  std::vector<int>* parts[2] = {&g.g_pp, &g.g_pg};
  std::vector<int> sv(slots, 0);
  for (;;) {
    if (equal_values(d2(g), target)) return g;
    int i = slots - 1;
    for (; i >= 0; --i) {
      if (++sv[i] < aord) {
        (*parts[l2.slot_part[i]])[l2.slot_flat[i]] = sv[i];
        break;
      }
      sv[i] = 0;
      (*parts[l2.slot_part[i]])[l2.slot_flat[i]] = 0;
    }
    if (i < 0) return std::nullopt;
  }
}

// Returns g with d2(g) = target, or nullopt when target is not a coboundary.
// Falls back to bounded enumeration if exact elimination overflows.
inline std::optional<Cochain2> solve_coboundary(EmPtr em, const Cochain3& target,
                                                const SolveOptions& opts = {}) {
  try {
    return CoboundarySolver(std::move(em)).solve(target);
  } catch (const OverflowError&) {
    return solve_coboundary_enum(target.em, target, opts.cap);
  }
}

struct AbelianPresentation {
  int generators = 0;
  IntMatrix relations;
  std::vector<std::int64_t> invariant_factors;  // entries > 1, divisibility chain
  std::int64_t order = 1;
};

// Quotient Z^generators / column lattice of `relations`; requires the
// quotient to be finite (full-rank relations).
inline AbelianPresentation presentation_from_relations(int generators, IntMatrix relations) {
  AbelianPresentation p;
  p.generators = generators;
  auto d = smith_normal_form(relations);
  p.relations = std::move(relations);
  if (d.rank < generators)
    throw Error("Internal", "relation lattice does not have full rank");
  for (int i = 0; i < generators; ++i) {
    std::int64_t di = d.diag(i);
    p.order = checked::mul(p.order, di);
    if (di > 1) p.invariant_factors.push_back(di);
  }
  return p;
}

enum class H3Method { snf, enumeration };

struct H3Options {
  std::int64_t cap = 1'000'000;      // candidate tables for the enumeration method
  std::int64_t rep_cap = 4096;       // attach representatives when order <= rep_cap
};

struct H3Result {
  std::int64_t order = 1;
  std::vector<std::int64_t> invariant_factors;
  std::optional<std::vector<Cochain3>> representatives;
};

// Streams every element of Z^3 (optionally with the Pi^3 part pinned to
// `fixed_xi`) in lexicographic order of the free-slot value vector. Returns
// the number of cocycles visited.
inline std::int64_t for_each_cocycle(EmPtr em, const std::vector<int>* fixed_xi,
                                     std::int64_t cap,
                                     const std::function<void(const Cochain3&)>& fn) {
  auto l3 = detail::layout3(*em);
  const std::int64_t aord = em->a.order();
  Cochain3 h = zero_cochain3(em);
  if (fixed_xi) {
    const int n = em->pi.order();
    if (static_cast<int>(fixed_xi->size()) != n * n * n)
      throw ParseError("fixed xi table has wrong size");
    h.h_ppp = *fixed_xi;
    // Re-validate normalization and range of the pinned part.
    h = make_cochain3(em, h.h_ppp, h.h_ppg, h.h_pgg);
  }
  std::vector<int> enum_slots;
  for (int s = 0; s < l3.slot_count(); ++s)
    if (!fixed_xi || l3.slot_part[s] != 0) enum_slots.push_back(s);

  std::int64_t total = 1;
  for (std::size_t i = 0; i < enum_slots.size(); ++i) {
    total = checked::mul(total, aord);
    if (total > cap) throw CapExceededError("degree-3 enumeration exceeds cap");
  }

  std::vector<int>* parts[3] = {&h.h_ppp, &h.h_ppg, &h.h_pgg};
  std::vector<int> sv(enum_slots.size(), 0);
  std::int64_t found = 0;

  // Fast boolean version of is_cocycle3; candidates mostly die early.
  const auto& m = *em;
  const int n = m.pi.order(), mm = m.gamma.order();
  const auto& A = m.a;
  auto passes = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int t = 0; t < n; ++t) {
            int v = m.pi_act(x, h.ppp(y, z, t));
            v = A.sub(v, h.ppp(m.pi.mul(x, y), z, t));
            v = A.add(v, h.ppp(x, m.pi.mul(y, z), t));
            v = A.sub(v, h.ppp(x, y, m.pi.mul(z, t)));
            v = A.add(v, h.ppp(x, y, z));
            if (v != 0) return false;
          }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int s = 0; s < mm; ++s) {
            int lhs = m.g_a(s, h.ppp(x, y, z));
            lhs = A.add(lhs, h.ppg(m.pi.mul(x, y), z, s));
            lhs = A.add(lhs, h.ppg(x, y, s));
            int sx = m.g_pi(s, x);
            int rhs = h.ppp(sx, m.g_pi(s, y), m.g_pi(s, z));
            rhs = A.add(rhs, m.pi_act(sx, h.ppg(y, z, s)));
            rhs = A.add(rhs, h.ppg(x, m.pi.mul(y, z), s));
            if (lhs != rhs) return false;
          }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int s = 0; s < mm; ++s)
          for (int t = 0; t < mm; ++t) {
            int lhs = m.g_a(s, h.ppg(x, y, t));
            lhs = A.add(lhs, h.ppg(m.g_pi(t, x), m.g_pi(t, y), s));
            lhs = A.add(lhs, h.pgg(x, s, t));
            lhs = A.add(lhs, m.pi_act(m.g_pi(m.gamma.mul(s, t), x), h.pgg(y, s, t)));
            int rhs = h.ppg(x, y, m.gamma.mul(s, t));
            rhs = A.add(rhs, h.pgg(m.pi.mul(x, y), s, t));
            if (lhs != rhs) return false;
          }
    for (int x = 0; x < n; ++x)
      for (int s = 0; s < mm; ++s)
        for (int t = 0; t < mm; ++t)
          for (int u = 0; u < mm; ++u) {
            int lhs = m.g_a(s, h.pgg(x, t, u));
            lhs = A.add(lhs, h.pgg(x, s, m.gamma.mul(t, u)));
            int rhs = h.pgg(x, m.gamma.mul(s, t), u);
            rhs = A.add(rhs, h.pgg(m.g_pi(u, x), s, t));
            if (lhs != rhs) return false;
          }
    return true;
  };

  for (;;) {
    if (passes()) {
      ++found;
      fn(h);
    }
    int i = static_cast<int>(enum_slots.size()) - 1;
    for (; i >= 0; --i) {
      int s = enum_slots[i];
      if (++sv[i] < aord) {
        (*parts[l3.slot_part[s]])[l3.slot_flat[s]] = sv[i];
        break;
      }
      sv[i] = 0;
      (*parts[l3.slot_part[s]])[l3.slot_flat[s]] = 0;
    }
    if (i < 0) break;
  }
  return found;
}

namespace detail {

// Free-slot value vector of a degree-3 cochain (compact canonical form).
inline std::vector<int> slot_values3(const CoordLayout& l3, const Cochain3& h) {
  std::vector<int> v(l3.slot_count());
  const std::vector<int>* parts[3] = {&h.h_ppp, &h.h_ppg, &h.h_pgg};
  for (int s = 0; s < l3.slot_count(); ++s) v[s] = (*parts[l3.slot_part[s]])[l3.slot_flat[s]];
  return v;
}

// Image of d2 over all of C^2, as a set of slot-value vectors plus a list.
inline std::pair<std::unordered_set<std::vector<int>, VecHash>, std::vector<std::vector<int>>>
coboundary_image(EmPtr em, const CoordLayout& l3) {
  auto l2 = layout2(*em);
  const std::int64_t aord = em->a.order();
  std::unordered_set<std::vector<int>, VecHash> set;
  std::vector<std::vector<int>> list;
  Cochain2 g = zero_cochain2(em);
  std::vector<int>* parts[2] = {&g.g_pp, &g.g_pg};
  std::vector<int> sv(l2.slot_count(), 0);
  for (;;) {
    auto img = slot_values3(l3, d2(g));
    if (set.insert(img).second) list.push_back(std::move(img));
    int i = l2.slot_count() - 1;
    for (; i >= 0; --i) {
      if (++sv[i] < aord) {
        (*parts[l2.slot_part[i]])[l2.slot_flat[i]] = sv[i];
        break;
      }
      sv[i] = 0;
      (*parts[l2.slot_part[i]])[l2.slot_flat[i]] = 0;
    }
    if (i < 0) break;
  }
  return {std::move(set), std::move(list)};
}

inline std::vector<std::int64_t> merge_prime_parts(
    std::int64_t order, const std::vector<std::pair<std::int64_t, std::vector<int>>>& parts) {
  std::size_t width = 0;
  for (const auto& [p, lambda] : parts) width = std::max(width, lambda.size());
  std::vector<std::int64_t> desc(width, 1);
  for (const auto& [p, lambda] : parts)
    for (std::size_t j = 0; j < lambda.size(); ++j)
      for (int e = 0; e < lambda[j]; ++e) desc[j] = checked::mul(desc[j], p);
  std::vector<std::int64_t> asc(desc.rbegin(), desc.rend());
  std::int64_t prod = 1;
  for (auto d : asc) prod = checked::mul(prod, d);
  if (prod != order) throw Error("Internal", "invariant factor reconstruction mismatch");
  return asc;
}

}  // namespace detail

// H^3 of the truncated complex: kernel of the cocycle conditions modulo the
// image of d2. `snf` computes the quotient presentation by exact elimination;
// `enumeration` filters every normalized degree-3 table and counts cosets of
// the enumerated coboundary image. Both report order and invariant factors.
inline H3Result compute_h3(EmPtr em, H3Method method, const H3Options& opts = {}) {
  H3Result res;
  auto l3 = detail::layout3(*em);

  if (method == H3Method::snf) {
    auto cond = detail::cocycle_condition_matrix(*em);
    const int n3 = l3.coord_count();
    const int n4 = cond.m.rows();
    if (n3 == 0) {
      res.order = 1;
      res.representatives = std::vector<Cochain3>{zero_cochain3(em)};
      return res;
    }
    // Lattice of integer vectors that satisfy the conditions mod moduli.
    IntMatrix ext(n4, n3 + n4);
    for (int i = 0; i < n4; ++i) {
      for (int j = 0; j < n3; ++j) ext.at(i, j) = cond.m.at(i, j);
      ext.at(i, n3 + i) = cond.codomain_moduli[i];
    }
    auto kernel = snf_kernel_basis(smith_normal_form(ext));
    IntMatrix gens(n3, static_cast<int>(kernel.size()));
    for (std::size_t j = 0; j < kernel.size(); ++j)
      for (int i = 0; i < n3; ++i) gens.at(i, static_cast<int>(j)) = kernel[j][i];
    auto gd = smith_normal_form(gens);
    if (gd.rank != n3) throw Error("Internal", "cocycle lattice is not full rank");
    // Basis of the cocycle lattice: nonzero columns of U^-1 * S.
    IntMatrix basis(n3, n3);
    for (int j = 0; j < n3; ++j)
      for (int i = 0; i < n3; ++i)
        basis.at(i, j) = checked::mul(gd.diag(j), gd.u_inv.at(i, j));
    auto basis_snf = smith_normal_form(basis);

    CoboundaryMatrix cb = coboundary_matrix(*em, 2);
    const int n2 = cb.m.cols();
    IntMatrix rel(n3, n2 + n3);
    for (int col = 0; col < n2 + n3; ++col) {
      std::vector<std::int64_t> b(n3, 0);
      if (col < n2)
        for (int i = 0; i < n3; ++i) b[i] = cb.m.at(i, col);
      else
        b[col - n2] = l3.moduli[col - n2];
      auto x = snf_solve(basis_snf, b);
      if (!x) throw Error("Internal", "coboundary does not lie in the cocycle lattice");
      for (int i = 0; i < n3; ++i) rel.at(i, col) = (*x)[i];
    }
    auto pres = presentation_from_relations(n3, rel);
    res.order = pres.order;
    res.invariant_factors = pres.invariant_factors;

    if (res.order <= opts.rep_cap) {
      auto rel_snf = smith_normal_form(pres.relations);
      std::vector<std::vector<std::int64_t>> gens_q;
      std::vector<std::int64_t> gen_orders;
      for (int i = 0; i < n3; ++i) {
        if (rel_snf.diag(i) <= 1) continue;
        std::vector<std::int64_t> w(n3, 0);
        for (int r = 0; r < n3; ++r) w[r] = rel_snf.u_inv.at(r, i);
        gens_q.push_back(basis.apply(w));
        gen_orders.push_back(rel_snf.diag(i));
      }
      std::vector<Cochain3> reps;
      std::vector<std::int64_t> c(gens_q.size(), 0);
      for (;;) {
        std::vector<std::int64_t> acc(n3, 0);
        for (std::size_t g = 0; g < gens_q.size(); ++g)
          for (int i = 0; i < n3; ++i)
            acc[i] = checked::add(acc[i], checked::mul(c[g], gens_q[g][i]));
        Cochain3 hc = zero_cochain3(em);
        std::vector<int>* parts[3] = {&hc.h_ppp, &hc.h_ppg, &hc.h_pgg};
        for (int s = 0; s < l3.slot_count(); ++s) {
          std::vector<std::int64_t> t(l3.k);
          for (int i = 0; i < l3.k; ++i) {
            std::int64_t d = em->a.invariant_factors()[i];
            std::int64_t r = acc[static_cast<std::size_t>(s) * l3.k + i] % d;
            if (r < 0) r += d;
            t[i] = r;
          }
          (*parts[l3.slot_part[s]])[l3.slot_flat[s]] = em->a.from_tuple(t);
        }
        reps.push_back(std::move(hc));
        int g = static_cast<int>(c.size()) - 1;
        for (; g >= 0; --g) {
          if (++c[g] < gen_orders[g]) break;
          c[g] = 0;
        }
        if (g < 0) break;
      }
      res.representatives = std::move(reps);
    }
    return res;
  }

  // Enumeration method.
  auto [bset, blist] = detail::coboundary_image(em, l3);
  const std::int64_t bsize = static_cast<std::int64_t>(bset.size());

  // Annihilator probes: p^j for each prime power in the exponent of A.
  std::vector<std::int64_t> probes;
  std::vector<std::pair<std::int64_t, int>> prime_pows;
  {
    std::int64_t e = em->a.exponent();
    for (std::int64_t p = 2; p * p <= e; ++p)
      if (e % p == 0) {
        int v = 0;
        while (e % p == 0) {
          e /= p;
          ++v;
        }
        prime_pows.emplace_back(p, v);
      }
    if (e > 1) prime_pows.emplace_back(e, 1);
    for (auto [p, v] : prime_pows) {
      std::int64_t pk = 1;
      for (int j = 0; j < v; ++j) {
        pk *= p;
        probes.push_back(pk);
      }
    }
  }
  std::vector<std::int64_t> killed(probes.size(), 0);

  const auto& A = em->a;
  std::int64_t count = 0;
  std::vector<std::vector<int>> reps_sv;
  std::unordered_set<std::vector<int>, detail::VecHash> classified;
  bool collect = true;
  // Collection walks the whole coset of every representative; bound the
  // classified-set size so huge cocycle sets only report order and factors.
  const std::int64_t collect_bound = 1 << 18;

  count = for_each_cocycle(em, nullptr, opts.cap, [&](const Cochain3& h) {
    auto sv = detail::slot_values3(l3, h);
    std::vector<int> mult(sv.size());
    for (std::size_t pi = 0; pi < probes.size(); ++pi) {
      for (std::size_t i = 0; i < sv.size(); ++i) mult[i] = A.scalar(probes[pi], sv[i]);
      if (bset.count(mult)) ++killed[pi];
    }
    if (collect && !classified.count(sv)) {
      reps_sv.push_back(sv);
      if (static_cast<std::int64_t>(reps_sv.size()) > opts.rep_cap ||
          static_cast<std::int64_t>(classified.size()) + static_cast<std::int64_t>(blist.size()) >
              collect_bound) {
        collect = false;
        reps_sv.clear();
        classified.clear();
      } else {
        for (const auto& b : blist) {
          std::vector<int> memb(sv.size());
          for (std::size_t i = 0; i < sv.size(); ++i) memb[i] = A.add(sv[i], b[i]);
          classified.insert(std::move(memb));
        }
      }
    }
  });

  if (count % bsize != 0) throw Error("Internal", "coboundary image does not tile the cocycles");
  res.order = count / bsize;

  std::vector<std::pair<std::int64_t, std::vector<int>>> parts;
  for (std::size_t pp = 0, idx = 0; pp < prime_pows.size(); ++pp) {
    auto [p, v] = prime_pows[pp];
    std::vector<int> s(v + 1, 0);  // s[j] = log_p of classes killed by p^j
    for (int j = 1; j <= v; ++j, ++idx) {
      std::int64_t classes = killed[idx] / bsize;
      int lg = 0;
      while (classes > 1) {
        if (classes % p != 0) throw Error("Internal", "annihilator count is not a prime power");
        classes /= p;
        ++lg;
      }
      s[j] = lg;
    }
    std::vector<int> ge(v + 2, 0);  // parts of size >= j
    for (int j = 1; j <= v; ++j) ge[j] = s[j] - s[j - 1];
    std::vector<int> lambda;
    for (int j = 1; j <= v; ++j)
      for (int cnt = 0; cnt < ge[j] - ge[j + 1]; ++cnt) lambda.push_back(j);
    std::sort(lambda.rbegin(), lambda.rend());
    if (!lambda.empty()) parts.emplace_back(p, std::move(lambda));
  }
  res.invariant_factors = detail::merge_prime_parts(res.order, parts);

  if (res.order <= opts.rep_cap && collect) {
    std::vector<Cochain3> reps;
    for (const auto& sv : reps_sv) {
      Cochain3 hc = zero_cochain3(em);
      std::vector<int>* hparts[3] = {&hc.h_ppp, &hc.h_ppg, &hc.h_pgg};
      for (int s = 0; s < l3.slot_count(); ++s) (*hparts[l3.slot_part[s]])[l3.slot_flat[s]] = sv[s];
      reps.push_back(std::move(hc));
    }
    res.representatives = std::move(reps);
  }
  return res;
}

}  // namespace equicat
