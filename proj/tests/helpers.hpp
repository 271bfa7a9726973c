#pragma once

#include <vector>

#include "equicat/action.hpp"

namespace equicat::testing {

inline std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

inline FiniteGroup cyclic(int n) { return validate_group(cyclic_table(n)); }

// Symmetric group on 3 letters, elements enumerated as permutations of
// {0,1,2} in lexicographic one-line order (identity first).
inline FiniteGroup s3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto compose = [&](int a, int b) {
    std::vector<int> c(3);
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    for (int k = 0; k < 6; ++k)
      if (perms[k] == c) return k;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = compose(a, b);
  return validate_group(t);
}

inline std::vector<std::vector<int>> trivial_maps(int actor_order, int carrier_size) {
  std::vector<int> id(carrier_size);
  for (int i = 0; i < carrier_size; ++i) id[i] = i;
  return std::vector<std::vector<int>>(actor_order, id);
}

// Generator of Gamma = Z/2 negating every element of a cyclic carrier.
inline std::vector<std::vector<int>> negation_maps_z2(int carrier_size) {
  std::vector<int> id(carrier_size), neg(carrier_size);
  for (int i = 0; i < carrier_size; ++i) {
    id[i] = i;
    neg[i] = (carrier_size - i) % carrier_size;
  }
  return {id, neg};
}

// EquivariantModule with every action trivial.
inline EmPtr trivial_module(int pi_order, int gamma_order, std::vector<std::int64_t> factors) {
  FiniteGroup pi = cyclic(pi_order);
  FiniteGroup gamma = cyclic(gamma_order);
  FiniteAbelianGroup a(std::move(factors));
  return share(validate_equivariant_module(pi, gamma, a, trivial_maps(pi.order(), a.order()),
                                           trivial_maps(gamma.order(), pi.order()),
                                           trivial_maps(gamma.order(), a.order())));
}

// Pi = Z/2 acting on A = Z/3 by negation; Gamma = Z/2 trivial on Pi and
// negating A.
inline EmPtr negation_module() {
  FiniteGroup pi = cyclic(2);
  FiniteGroup gamma = cyclic(2);
  FiniteAbelianGroup a({3});
  return share(validate_equivariant_module(pi, gamma, a, negation_maps_z2(3),
                                           trivial_maps(2, 2), negation_maps_z2(3)));
}

}  // namespace equicat::testing
