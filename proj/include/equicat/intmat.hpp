#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "equicat/error.hpp"

namespace equicat {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflowed");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflowed");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflowed");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

// Dense rectangular integer matrix. All arithmetic used in elimination goes
// through the checked helpers so entry blow-up is detected, never wrapped.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  std::int64_t at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  IntMatrix mul(const IntMatrix& o) const {
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        std::int64_t v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = checked::add(r.at(i, j), checked::mul(v, o.at(k, j)));
      }
    return r;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
    std::vector<std::int64_t> r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != 0) r[i] = checked::add(r[i], checked::mul(at(i, j), v[j]));
    return r;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

// U·M·V = S with U, V unimodular and S diagonal, S[i][i] >= 0 and
// S[i][i] | S[i+1][i+1]. The inverses of U and V are tracked alongside, so
// quotient presentations and lattice solves never invert a matrix afterward.
struct SmithDecomposition {
  IntMatrix s, u, v, u_inv, v_inv;
  int rank = 0;

  std::int64_t diag(int i) const { return i < std::min(s.rows(), s.cols()) ? s.at(i, i) : 0; }
};

inline SmithDecomposition smith_normal_form(const IntMatrix& input) {
  SmithDecomposition d;
  d.s = input;
  const int r = input.rows(), c = input.cols();
  d.u = IntMatrix::identity(r);
  d.u_inv = IntMatrix::identity(r);
  d.v = IntMatrix::identity(c);
  d.v_inv = IntMatrix::identity(c);
  IntMatrix& m = d.s;

  // Row op on m mirrors onto u; the inverse op lands on a column of u_inv.
  auto row_add = [&](int dst, int src, std::int64_t q) {
    if (q == 0) return;
    for (int j = 0; j < c; ++j) m.at(dst, j) = checked::add(m.at(dst, j), checked::mul(q, m.at(src, j)));
    for (int j = 0; j < r; ++j) d.u.at(dst, j) = checked::add(d.u.at(dst, j), checked::mul(q, d.u.at(src, j)));
    for (int i = 0; i < r; ++i)
      d.u_inv.at(i, src) = checked::sub(d.u_inv.at(i, src), checked::mul(q, d.u_inv.at(i, dst)));
  };
  auto col_add = [&](int dst, int src, std::int64_t q) {
    if (q == 0) return;
    for (int i = 0; i < r; ++i) m.at(i, dst) = checked::add(m.at(i, dst), checked::mul(q, m.at(i, src)));
    for (int i = 0; i < c; ++i) d.v.at(i, dst) = checked::add(d.v.at(i, dst), checked::mul(q, d.v.at(i, src)));
    for (int j = 0; j < c; ++j)
      d.v_inv.at(src, j) = checked::sub(d.v_inv.at(src, j), checked::mul(q, d.v_inv.at(dst, j)));
  };
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c; ++k) std::swap(m.at(i, k), m.at(j, k));
    for (int k = 0; k < r; ++k) std::swap(d.u.at(i, k), d.u.at(j, k));
    for (int k = 0; k < r; ++k) std::swap(d.u_inv.at(k, i), d.u_inv.at(k, j));
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < r; ++k) std::swap(m.at(k, i), m.at(k, j));
    for (int k = 0; k < c; ++k) std::swap(d.v.at(k, i), d.v.at(k, j));
    for (int k = 0; k < c; ++k) std::swap(d.v_inv.at(i, k), d.v_inv.at(j, k));
  };
  auto row_negate = [&](int i) {
    for (int k = 0; k < c; ++k) m.at(i, k) = checked::neg(m.at(i, k));
    for (int k = 0; k < r; ++k) d.u.at(i, k) = checked::neg(d.u.at(i, k));
    for (int k = 0; k < r; ++k) d.u_inv.at(k, i) = checked::neg(d.u_inv.at(k, i));
  };

  const int nmin = std::min(r, c);
  for (int s = 0; s < nmin; ++s) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      std::int64_t best = 0;
      for (int i = s; i < r; ++i)
        for (int j = s; j < c; ++j) {
          std::int64_t v = m.at(i, j) < 0 ? checked::neg(m.at(i, j)) : m.at(i, j);
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        pi = -2;
        break;
      }
      row_swap(s, pi);
      col_swap(s, pj);

      bool clean = true;
      for (int i = s + 1; i < r; ++i) {
        std::int64_t q = m.at(i, s) / m.at(s, s);
        row_add(i, s, checked::neg(q));
        if (m.at(i, s) != 0) clean = false;
      }
      for (int j = s + 1; j < c; ++j) {
        std::int64_t q = m.at(s, j) / m.at(s, s);
        col_add(j, s, checked::neg(q));
        if (m.at(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (int i = s + 1; i < r && divides; ++i)
        for (int j = s + 1; j < c && divides; ++j)
          if (m.at(i, j) % m.at(s, s) != 0) {
            row_add(s, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (m.at(s, s) == 0) break;
    if (m.at(s, s) < 0) row_negate(s);
  }

  d.rank = 0;
  for (int i = 0; i < nmin; ++i)
    if (m.at(i, i) != 0) ++d.rank;

#ifdef EQUICAT_VERIFY_SNF
  // Re-verify the factorization by multiplication on every call.
  if (d.u.mul(input).mul(d.v) != d.s || d.u.mul(d.u_inv) != IntMatrix::identity(r) ||
      d.v.mul(d.v_inv) != IntMatrix::identity(c))
    throw Error("Internal", "Smith normal form self-check failed");
#endif
  return d;
}

// Solves M·x = b over the integers from a precomputed decomposition of M.
// Returns std::nullopt when no integral solution exists.
inline std::optional<std::vector<std::int64_t>> snf_solve(const SmithDecomposition& d,
                                                          const std::vector<std::int64_t>& b) {
  const int r = d.s.rows(), c = d.s.cols();
  std::vector<std::int64_t> ub = d.u.apply(b);
  std::vector<std::int64_t> y(c, 0);
  for (int i = 0; i < r; ++i) {
    std::int64_t di = i < std::min(r, c) ? d.s.at(i, i) : 0;
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  return d.v.apply(y);
}

// Basis of the integer kernel lattice of M (columns x with M·x = 0).
inline std::vector<std::vector<std::int64_t>> snf_kernel_basis(const SmithDecomposition& d) {
  const int r = d.s.rows(), c = d.s.cols();
  std::vector<std::vector<std::int64_t>> basis;
  for (int j = 0; j < c; ++j) {
    bool zero_col = j >= std::min(r, c) || d.s.at(j, j) == 0;
    if (!zero_col) continue;
    std::vector<std::int64_t> col(c);
    for (int i = 0; i < c; ++i) col[i] = d.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace equicat
