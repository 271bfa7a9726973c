#pragma once

#include <cstdint>
#include <vector>

#include "equicat/error.hpp"

namespace equicat {

// A finite group given by its full Cayley table. Elements are their indices;
// the identity is canonically index 0 (validate_group relabels if needed).
class FiniteGroup {
 public:
  int order() const { return order_; }
  int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * order_ + j]; }
  int inv(int i) const { return inverse_[i]; }
  static constexpr int identity = 0;

  const std::vector<int>& table() const { return table_; }

  bool operator==(const FiniteGroup&) const = default;

  friend FiniteGroup validate_group(const std::vector<std::vector<int>>& table);

 private:
  FiniteGroup(int order, std::vector<int> table, std::vector<int> inverse)
      : order_(order), table_(std::move(table)), inverse_(std::move(inverse)) {}

  int order_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// Checks closure, identity, inverses and associativity, in that order, and
// names the first witness (in the input labeling) of the violated law. If
// the identity sits at an index other than 0, the labels 0 and e are swapped
// at the end so the identity lands on index 0.
inline FiniteGroup validate_group(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ParseError("group table is empty");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw ParseError("group table is not square");

  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw Error("NotClosed", {i, j}, "table entry out of range");
      flat[static_cast<std::size_t>(i) * n + j] = v;
    }

  auto at = [&](int i, int j) { return flat[static_cast<std::size_t>(i) * n + j]; };

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = at(cand, j) == j && at(j, cand) == j;
    if (ok) e = cand;
  }
  if (e < 0) throw Error("NoIdentity", "no two-sided identity element");

  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (at(i, j) == e && at(j, i) == e) {
        inverse[i] = j;
        break;
      }
    if (inverse[i] < 0) throw Error("NoInverse", {i}, "element has no two-sided inverse");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(at(i, j), k) != at(i, at(j, k)))
          throw Error("NotAssociative", {i, j, k}, "associativity fails");

  if (e != 0) {
    auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<int> relab(flat.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        relab[static_cast<std::size_t>(relabel(i)) * n + relabel(j)] = relabel(at(i, j));
    flat = std::move(relab);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        if (flat[static_cast<std::size_t>(i) * n + j] == 0) {
          inverse[i] = j;
          break;
        }
    }
  }

  return FiniteGroup(n, std::move(flat), std::move(inverse));
}

}  // namespace equicat
