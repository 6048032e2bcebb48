#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Smith
// normal form with unimodular transforms, integer kernel lattices and
// fraction-free determinants.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zcolor/error.hpp"

namespace zcolor {

using Int = mpz_class;
using IntVector = std::vector<Int>;

inline Int abs_value(const Int& x) {
  Int r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline Int gcd_of(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Quotient rounded toward negative infinity.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// gcd of all entries; 0 for an empty or all-zero vector.
inline Int content(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) {
    g = gcd_of(g, x);
    if (g == 1) break;
  }
  return g;
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

  // Row-major literal, e.g. IntMatrix{{2, 1}, {1, 2}}. All rows must have
  // the same length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      for (long x : row) entries_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("row length differs from column count");
      std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * cols);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Int> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Int> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  const std::vector<Int>& entries() const { return entries_; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Copy with row `drop_row` and column `drop_col` removed.
  IntMatrix minor(std::size_t drop_row, std::size_t drop_col) const {
    if (drop_row >= rows_ || drop_col >= cols_) throw ShapeError("minor index out of range");
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == drop_row) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == drop_col) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  // Copy with `extra` appended as a new last row.
  IntMatrix with_row(std::span<const Int> extra) const {
    if (extra.size() != cols_) throw ShapeError("appended row has wrong length");
    IntMatrix m = *this;
    m.entries_.insert(m.entries_.end(), extra.begin(), extra.end());
    ++m.rows_;
    return m;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (auto& x : row(i)) x = -x;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("multiply: inner dimensions differ");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

inline IntVector mat_vec(const IntMatrix& m, std::span<const Int> x) {
  if (x.size() != m.cols())
    throw ShapeError("mat_vec: vector length " + std::to_string(x.size()) +
                     " does not match column count " + std::to_string(m.cols()));
  IntVector y(m.rows(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

// Bareiss fraction-free elimination; every division is exact.
inline Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      a.swap_rows(i, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// U * M * V = D with U, V unimodular and D diagonal with a nonnegative
// divisibility chain d_1 | d_2 | ... | d_rank.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::size_t rank = 0;

  // Nonzero diagonal entries d_1..d_rank.
  IntVector invariant_factors() const {
    IntVector f;
    f.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) f.push_back(D(i, i));
    return f;
  }
};

namespace detail {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest |entry| among nonzero entries of the trailing submatrix starting
// at (from, from); ties go to the first in row-major order.
inline std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t from) {
  std::optional<Position> best;
  Int best_abs;
  for (std::size_t i = from; i < d.rows(); ++i)
    for (std::size_t j = from; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs_value(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto move_to_pivot = [&](std::size_t t, detail::Position p) {
    d.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    d.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    auto pivot = detail::smallest_nonzero(d, t);
    if (!pivot) break;
    move_to_pivot(t, *pivot);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
      }

      // Remainders left in the pivot row/column are strictly smaller than
      // the pivot; promote the smallest and go again.
      std::optional<detail::Position> remainder;
      Int remainder_abs;
      auto consider = [&](std::size_t i, std::size_t j) {
        if (d(i, j) == 0) return;
        Int a = abs_value(d(i, j));
        if (!remainder || a < remainder_abs) {
          remainder = detail::Position{i, j};
          remainder_abs = std::move(a);
        }
      };
      for (std::size_t i = t + 1; i < rows; ++i) consider(i, t);
      for (std::size_t j = t + 1; j < cols; ++j) consider(t, j);
      if (remainder) {
        move_to_pivot(t, *remainder);
        continue;
      }

      // Row and column are clear; enforce divisibility of the rest.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }

    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  return SmithDecomposition{std::move(u), std::move(v), std::move(d), t};
}

// Row-style Hermite normal form of the lattice spanned by `rows` (each of
// length `cols`): pivots strictly move right, pivots are positive and the
// entries above a pivot lie in [0, pivot). Zero rows are dropped. The result
// depends only on the lattice, not on the generating set.
inline std::vector<IntVector> hermite_rows(std::vector<IntVector> rows, std::size_t cols) {
  std::size_t t = 0;
  const std::size_t k = rows.size();
  for (std::size_t col = 0; col < cols && t < k; ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      Int best_abs;
      for (std::size_t i = t; i < k; ++i) {
        if (rows[i][col] == 0) continue;
        Int a = abs_value(rows[i][col]);
        if (!best || a < best_abs) {
          best = i;
          best_abs = std::move(a);
        }
      }
      if (!best) break;
      std::swap(rows[t], rows[*best]);
      bool residue = false;
      for (std::size_t i = t + 1; i < k; ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[t][col];
        for (std::size_t j = col; j < cols; ++j) rows[i][j] -= q * rows[t][j];
        residue = residue || rows[i][col] != 0;
      }
      if (!residue) break;
    }
    if (rows[t][col] == 0) continue;
    if (rows[t][col] < 0)
      for (auto& x : rows[t]) x = -x;
    for (std::size_t i = 0; i < t; ++i) {
      Int q = floor_div(rows[i][col], rows[t][col]);
      if (q == 0) continue;
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= q * rows[t][j];
    }
    ++t;
  }
  rows.resize(t);
  return rows;
}

// Lattice basis of {v in Z^cols : M v = 0}, in Hermite form (see
// hermite_rows), so two kernels of the same lattice compare equal.
struct KernelBasis {
  std::size_t dim = 0;
  std::vector<IntVector> vectors;
};

inline KernelBasis integer_kernel(const IntMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  std::vector<IntVector> generators;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) generators.push_back(snf.V.column(j));
  KernelBasis k;
  k.vectors = hermite_rows(std::move(generators), m.cols());
  k.dim = k.vectors.size();
  return k;
}

// Integer coordinates of `w` with respect to an echelon (Hermite) basis, or
// nullopt when `w` is not in the lattice.
inline std::optional<IntVector> lattice_coordinates(const KernelBasis& basis,
                                                    std::span<const Int> w) {
  IntVector residual(w.begin(), w.end());
  IntVector coords;
  coords.reserve(basis.dim);
  for (const auto& b : basis.vectors) {
    if (b.size() != residual.size()) throw ShapeError("lattice_coordinates: length mismatch");
    auto lead = std::find_if(b.begin(), b.end(), [](const Int& x) { return x != 0; });
    const auto p = static_cast<std::size_t>(lead - b.begin());
    if (mpz_divisible_p(residual[p].get_mpz_t(), b[p].get_mpz_t()) == 0) return std::nullopt;
    Int c = residual[p] / b[p];
    for (std::size_t j = 0; j < b.size(); ++j) residual[j] -= c * b[j];
    coords.push_back(std::move(c));
  }
  if (std::any_of(residual.begin(), residual.end(), [](const Int& x) { return x != 0; }))
    return std::nullopt;
  return coords;
}

// Integer combination sum_i coeffs[i] * vectors[i].
inline IntVector combine(const std::vector<IntVector>& vectors, std::span<const Int> coeffs,
                         std::size_t length) {
  if (coeffs.size() != vectors.size()) throw ShapeError("combine: coefficient count mismatch");
  IntVector w(length, Int(0));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < length; ++j) w[j] += coeffs[i] * vectors[i][j];
  }
  return w;
}

}  // namespace zcolor
