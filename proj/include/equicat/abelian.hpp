#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "equicat/error.hpp"

namespace equicat {

// A finite abelian group in invariant-factor form: Z/d1 x ... x Z/dk with
// d_i >= 2 and d_i | d_{i+1}. Elements are mixed-radix indices of their
// residue tuples (first coordinate most significant), so index order is the
// lexicographic order on tuples. An empty factor list is the trivial group.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) throw ParseError("invariant factor below 2");
      if (i > 0 && factors_[i] % factors_[i - 1] != 0)
        throw ParseError("invariant factors must form a divisibility chain");
      order_ *= factors_[i];
      if (order_ > (std::int64_t{1} << 31)) throw ParseError("abelian group too large");
    }
    strides_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i)
      strides_[i] = strides_[i + 1] * factors_[i + 1];
    if (order_ <= kTableCap) {
      add_table_.resize(static_cast<std::size_t>(order_) * order_);
      neg_table_.resize(order_);
      for (int a = 0; a < order_; ++a) {
        neg_table_[a] = neg_slow(a);
        for (int b = 0; b < order_; ++b)
          add_table_[static_cast<std::size_t>(a) * order_ + b] = add_slow(a, b);
      }
    }
  }

  int order() const { return static_cast<int>(order_); }
  int rank() const { return static_cast<int>(factors_.size()); }
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  int zero() const { return 0; }

  int add(int a, int b) const {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
    return add_slow(a, b);
  }

  int neg(int a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  // c * a for any integer c.
  int scalar(std::int64_t c, int a) const {
    int acc = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::int64_t digit = (a / strides_[i]) % factors_[i];
      std::int64_t r = (digit * (c % factors_[i])) % factors_[i];
      if (r < 0) r += factors_[i];
      acc += static_cast<int>(r * strides_[i]);
    }
    return acc;
  }

  std::vector<std::int64_t> tuple(int a) const {
    std::vector<std::int64_t> t(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) t[i] = (a / strides_[i]) % factors_[i];
    return t;
  }

  int from_tuple(const std::vector<std::int64_t>& t) const {
    if (t.size() != factors_.size()) throw ParseError("element tuple has wrong length");
    std::int64_t a = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 0 || t[i] >= factors_[i]) throw ParseError("element coordinate out of range");
      a += t[i] * strides_[i];
    }
    return static_cast<int>(a);
  }

  bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }

 private:
  static constexpr std::int64_t kTableCap = 64;

  int add_slow(int a, int b) const {
    int acc = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::int64_t da = (a / strides_[i]) % factors_[i];
      std::int64_t db = (b / strides_[i]) % factors_[i];
      acc += static_cast<int>(((da + db) % factors_[i]) * strides_[i]);
    }
    return acc;
  }

  int neg_slow(int a) const {
    int acc = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::int64_t da = (a / strides_[i]) % factors_[i];
      acc += static_cast<int>(((factors_[i] - da) % factors_[i]) * strides_[i]);
    }
    return acc;
  }

  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
  std::vector<int> add_table_;
  std::vector<int> neg_table_;
};

}  // namespace equicat
