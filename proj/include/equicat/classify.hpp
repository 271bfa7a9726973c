#pragma once

#include <string>
#include <vector>

#include "equicat/crossed.hpp"

namespace equicat {

// All elements of Z^3 in lexicographic order, optionally restricted to
// tables whose Pi^3 part equals `fixed_xi`.
inline std::vector<Cochain3> enumerate_z3(EmPtr em, const std::vector<int>* fixed_xi,
                                          std::int64_t cap) {
  std::vector<Cochain3> out;
  for_each_cocycle(em, fixed_xi, cap, [&](const Cochain3& h) { out.push_back(h); });
  return out;
}

struct CocycleClass {
  Cochain3 representative;               // lexicographically smallest member
  std::vector<std::size_t> members;      // indices into the input list
};

namespace detail {

inline bool lex_less3(const Cochain3& l, const Cochain3& r) {
  if (l.h_ppp != r.h_ppp) return l.h_ppp < r.h_ppp;
  if (l.h_ppg != r.h_ppg) return l.h_ppg < r.h_ppg;
  return l.h_pgg < r.h_pgg;
}

}  // namespace detail

// Partition under h ~ h' iff h - h' is a coboundary.
inline std::vector<CocycleClass> partition_classes(EmPtr em, const std::vector<Cochain3>& cocycles) {
  CoboundarySolver solver(em);
  std::vector<CocycleClass> classes;
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    detail::require_same_module(em, cocycles[i].em);
    bool placed = false;
    for (auto& cls : classes) {
      if (solver.solve(combine(cocycles[i], -1, cls.representative)).has_value()) {
        cls.members.push_back(i);
        if (detail::lex_less3(cocycles[i], cls.representative)) cls.representative = cocycles[i];
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({cocycles[i], {i}});
  }
  return classes;
}

struct ClassPairing {
  Cochain3 h_rep;
  FactorSet fs_rep;
  std::string crossed_fingerprint;
};

struct ClassificationReport {
  GrCategory base;
  std::int64_t cocycle_count = 0;
  std::int64_t h_class_count = 0;
  std::int64_t fs_class_count = 0;
  bool factor_sets_valid = true;
  bool forward_well_defined = true;
  bool surjective = true;
  bool injective = true;
  bool crossed_products_valid = true;
  bool bijection_verified = false;
  std::vector<ClassPairing> pairs;
};

// Exhaustive two-sided verification of the classification bijection over one
// base category: enumerate the cocycles extending the base constraint,
// partition them into cohomology classes, independently build and validate
// the factor set of every cocycle, partition those by cohomologousness of
// factor sets, and confirm the correspondence is a bijection whose crossed
// products all verify.
inline ClassificationReport verify_omega(EmPtr em, const GrCategory& base, std::int64_t cap) {
  ClassificationReport rep;
  rep.base = base;

  std::vector<Cochain3> cocycles = enumerate_z3(em, &base.xi, cap);
  rep.cocycle_count = static_cast<std::int64_t>(cocycles.size());
  std::vector<CocycleClass> h_classes = partition_classes(em, cocycles);
  rep.h_class_count = static_cast<std::int64_t>(h_classes.size());

  std::vector<std::size_t> h_class_of(cocycles.size());
  for (std::size_t c = 0; c < h_classes.size(); ++c)
    for (std::size_t i : h_classes[c].members) h_class_of[i] = c;

  std::vector<FactorSet> sets;
  sets.reserve(cocycles.size());
  for (const Cochain3& h : cocycles) {
    FactorSet fs = factor_set_from_cocycle(base, em, h);
    if (!validate_factor_set(fs).all_pass()) rep.factor_sets_valid = false;
    if (!enough_strict(fs)) rep.factor_sets_valid = false;
    sets.push_back(std::move(fs));
  }

  struct FsClass {
    std::size_t rep_index;
    std::vector<std::size_t> members;
  };
  std::vector<FsClass> fs_classes;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool placed = false;
    for (auto& cls : fs_classes) {
      if (are_cohomologous_factor_sets(sets[i], sets[cls.rep_index]).has_value()) {
        cls.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) fs_classes.push_back({i, {i}});
  }
  rep.fs_class_count = static_cast<std::int64_t>(fs_classes.size());

  // Forward map cl(fs) -> cl(h), checked member by member.
  std::vector<std::size_t> image_class(fs_classes.size());
  std::vector<char> hit(h_classes.size(), 0);
  for (std::size_t c = 0; c < fs_classes.size(); ++c) {
    image_class[c] = h_class_of[fs_classes[c].rep_index];
    hit[image_class[c]] = 1;
    for (std::size_t i : fs_classes[c].members)
      if (h_class_of[i] != image_class[c]) rep.forward_well_defined = false;
  }
  for (char h : hit)
    if (!h) rep.surjective = false;
  for (std::size_t c1 = 0; c1 < fs_classes.size(); ++c1)
    for (std::size_t c2 = c1 + 1; c2 < fs_classes.size(); ++c2)
      if (image_class[c1] == image_class[c2]) rep.injective = false;

  for (std::size_t c = 0; c < fs_classes.size(); ++c) {
    CrossedProduct d = build_crossed_product(sets[fs_classes[c].rep_index]);
    if (!verify_crossed_product(d).all_pass()) rep.crossed_products_valid = false;
    rep.pairs.push_back({h_classes[image_class[c]].representative,
                         sets[fs_classes[c].rep_index], crossed_product_fingerprint(d)});
  }

  rep.bijection_verified = rep.h_class_count == rep.fs_class_count &&
                           rep.forward_well_defined && rep.surjective && rep.injective;
  return rep;
}

}  // namespace equicat
