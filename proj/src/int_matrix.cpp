#include "cosop/int_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

#include "cosop/errors.hpp"

namespace cosop {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].push_back({i, Integer(1)});
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows[0].size() : 0;
  IntMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw InvalidInput("ragged dense matrix");
    for (std::size_t c = 0; c < nc; ++c)
      if (rows[r][c] != 0) m.cols_[c].push_back({r, Integer(rows[r][c])});
  }
  return m;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool IntMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

namespace {
template <class Col>
auto find_row(Col& col, std::size_t r) {
  return std::lower_bound(col.begin(), col.end(), r,
                          [](const IntMatrix::Entry& e, std::size_t row) { return e.row < row; });
}
}  // namespace

Integer IntMatrix::get(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = find_row(col, r);
  if (it != col.end() && it->row == r) return it->value;
  return 0;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= cols_.size()) throw IndexOutOfRange("matrix index out of range");
  auto& col = cols_[c];
  auto it = find_row(col, r);
  if (it != col.end() && it->row == r) {
    if (value == 0)
      col.erase(it);
    else
      it->value = value;
  } else if (value != 0) {
    col.insert(it, {r, value});
  }
}

void IntMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= cols_.size()) throw IndexOutOfRange("matrix index out of range");
  if (value == 0) return;
  auto& col = cols_[c];
  auto it = find_row(col, r);
  if (it != col.end() && it->row == r) {
    it->value += value;
    if (it->value == 0) col.erase(it);
  } else {
    col.insert(it, {r, value});
  }
}

void IntMatrix::set_column(std::size_t c, Column column) {
  std::sort(column.begin(), column.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  Column clean;
  clean.reserve(column.size());
  for (auto& e : column) {
    if (e.row >= rows_) throw IndexOutOfRange("row index out of range");
    if (!clean.empty() && clean.back().row == e.row) {
      clean.back().value += e.value;
      if (clean.back().value == 0) clean.pop_back();
    } else if (e.value != 0) {
      clean.push_back(std::move(e));
    }
  }
  cols_.at(c) = std::move(clean);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : cols_[c]) t.cols_[e.row].push_back({c, e.value});
  return t;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols(), 0));
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : cols_[c]) d[e.row][c] = e.value;
  return d;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols()) throw IncompatibleInputs("vector length does not match column count");
  std::vector<Integer> y(rows_, 0);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (x[c] == 0) continue;
    for (const auto& e : cols_[c]) y[e.row] += e.value * x[c];
  }
  return y;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  IntMatrix b(r1 - r0, c1 - c0);
  for (std::size_t c = c0; c < c1; ++c)
    for (const auto& e : cols_[c])
      if (e.row >= r0 && e.row < r1) b.cols_[c - c0].push_back({e.row - r0, e.value});
  return b;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (below.cols() != cols()) throw IncompatibleInputs("vstack: column counts differ");
  IntMatrix m(rows_ + below.rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    m.cols_[c] = cols_[c];
    for (const auto& e : below.cols_[c]) m.cols_[c].push_back({e.row + rows_, e.value});
  }
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (right.rows_ != rows_) throw IncompatibleInputs("hstack: row counts differ");
  IntMatrix m(rows_, cols() + right.cols());
  for (std::size_t c = 0; c < cols(); ++c) m.cols_[c] = cols_[c];
  for (std::size_t c = 0; c < right.cols(); ++c) m.cols_[cols() + c] = right.cols_[c];
  return m;
}

void axpy(IntMatrix::Column& dst, const Integer& scale, const IntMatrix::Column& src) {
  if (scale == 0 || src.empty()) return;
  IntMatrix::Column out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].row < src[j].row)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].row < dst[i].row) {
      out.push_back({src[j].row, scale * src[j].value});
      ++j;
    } else {
      Integer v = dst[i].value + scale * src[j].value;
      if (v != 0) out.push_back({dst[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw IncompatibleInputs("matrix product: inner dimensions differ");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    IntMatrix::Column acc;
    for (const auto& e : b.cols_[c]) axpy(acc, e.value, a.cols_[e.row]);
    m.cols_[c] = std::move(acc);
  }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw IncompatibleInputs("matrix sum: shapes differ");
  IntMatrix m = a;
  for (std::size_t c = 0; c < b.cols(); ++c) axpy(m.cols_[c], 1, b.cols_[c]);
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw IncompatibleInputs("matrix difference: shapes differ");
  IntMatrix m = a;
  for (std::size_t c = 0; c < b.cols(); ++c) axpy(m.cols_[c], -1, b.cols_[c]);
  return m;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  if (s == 0) return m;
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (const auto& e : a.cols_[c]) m.cols_[c].push_back({e.row, s * e.value});
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto& x = a.cols_[c];
    const auto& y = b.cols_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].row != y[i].row || x[i].value != y[i].value) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  const auto d = m.to_dense();
  os << "[";
  for (std::size_t r = 0; r < d.size(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < d[r].size(); ++c) os << (c ? ", " : "") << d[r][c];
    os << "]";
  }
  return os << "]";
}

}  // namespace cosop
