#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace cosop {

using Integer = mpz_class;

/// Sparse integer matrix stored column by column.
///
/// Every column keeps its entries sorted by row index and never stores an
/// explicit zero, so two matrices compare equal iff they are equal as maps.
class IntMatrix {
 public:
  struct Entry {
    std::size_t row;
    Integer value;
  };
  using Column = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const;

  Integer get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& value);
  void add(std::size_t r, std::size_t c, const Integer& value);

  const Column& column(std::size_t c) const { return cols_[c]; }
  void set_column(std::size_t c, Column column);

  IntMatrix transpose() const;
  std::vector<std::vector<Integer>> to_dense() const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;

  /// Rows [r0, r1) and columns [c0, c1).
  IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  /// Stacks `below` under this matrix (column counts must agree).
  IntMatrix vstack(const IntMatrix& below) const;
  IntMatrix hstack(const IntMatrix& right) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

/// Adds `scale * src` into the sorted sparse column `dst`.
void axpy(IntMatrix::Column& dst, const Integer& scale, const IntMatrix::Column& src);

}  // namespace cosop
