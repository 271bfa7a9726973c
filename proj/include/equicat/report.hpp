#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equicat {

// One verified law. `witness` holds the first tuple of element indices at
// which the law failed; empty when the law holds.
struct Check {
  std::string name;
  bool pass = true;
  std::vector<std::int64_t> witness;

  Check() = default;
  Check(const char* n) : name(n) {}  // NOLINT: list-initialization of reports
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->pass;
  }
};

// Records a failure only the first time it is seen, so reports always carry
// the lexicographically first witness of a scan.
inline void record(Check& c, bool ok, std::initializer_list<std::int64_t> witness) {
  if (!ok && c.pass) {
    c.pass = false;
    c.witness.assign(witness);
  }
}

}  // namespace equicat
