#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace equicat {

// Every failure mode carries a stable kind string plus the first witness
// tuple (element indices) that exhibits it.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::vector<std::int64_t> witness, const std::string& detail)
      : std::runtime_error(format(kind, witness, detail)),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  Error(std::string kind, const std::string& detail) : Error(std::move(kind), {}, detail) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  static std::string format(const std::string& kind, const std::vector<std::int64_t>& w,
                            const std::string& detail) {
    std::ostringstream os;
    os << kind;
    if (!w.empty()) {
      os << "(";
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
      os << ")";
    }
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }

  std::string kind_;
  std::vector<std::int64_t> witness_;
};

// Structured-input failures (bad JSON shape, wrong dimensions, bad types).
struct ParseError : Error {
  explicit ParseError(const std::string& detail) : Error("ParseError", detail) {}
};

// Enumeration work would exceed the configured candidate cap.
struct CapExceededError : Error {
  explicit CapExceededError(const std::string& detail) : Error("CapExceeded", detail) {}
};

// 64-bit checked arithmetic overflowed during elimination.
struct OverflowError : Error {
  explicit OverflowError(const std::string& detail) : Error("Overflow", detail) {}
};

}  // namespace equicat
