#include "cosop/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cosop/errors.hpp"

namespace cosop {

namespace {

using Dense = std::vector<std::vector<Integer>>;

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

// Floor-free quotient that keeps |remainder| < |divisor|.
Integer tquot(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct DenseSnf {
  Dense a;
  Dense u, v;  // optional tracking
  bool track;

  DenseSnf(Dense m, std::size_t nr, std::size_t nc, bool tr) : a(std::move(m)), track(tr) {
    if (track) {
      u.assign(nr, std::vector<Integer>(nr, 0));
      v.assign(nc, std::vector<Integer>(nc, 0));
      for (std::size_t i = 0; i < nr; ++i) u[i][i] = 1;
      for (std::size_t i = 0; i < nc; ++i) v[i][i] = 1;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (track) std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    if (track)
      for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < a[i].size(); ++c)
      if (a[j][c] != 0) a[i][c] += q * a[j][c];
    if (track)
      for (std::size_t c = 0; c < u[i].size(); ++c)
        if (u[j][c] != 0) u[i][c] += q * u[j][c];
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    for (auto& row : a)
      if (row[j] != 0) row[i] += q * row[j];
    if (track)
      for (auto& row : v)
        if (row[j] != 0) row[i] += q * row[j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    if (track)
      for (auto& x : u[i]) x = -x;
  }

  std::vector<Integer> run() {
    const std::size_t nr = a.size();
    const std::size_t nc = nr ? a[0].size() : 0;
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
      for (;;) {
        // smallest nonzero magnitude in the trailing block
        std::size_t pr = nr, pc = nc;
        for (std::size_t i = t; i < nr; ++i)
          for (std::size_t j = t; j < nc; ++j)
            if (a[i][j] != 0 && (pr == nr || abs(a[i][j]) < abs(a[pr][pc]))) {
              pr = i;
              pc = j;
            }
        if (pr == nr) return diag;
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool dirty = false;
        for (std::size_t i = t + 1; i < nr; ++i) {
          if (a[i][t] == 0) continue;
          add_row(i, t, -tquot(a[i][t], a[t][t]));
          if (a[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (a[t][j] == 0) continue;
          add_col(j, t, -tquot(a[t][j], a[t][t]));
          if (a[t][j] != 0) dirty = true;
        }
        if (dirty) continue;
        // divisibility of the trailing block by the pivot
        bool moved = false;
        for (std::size_t i = t + 1; i < nr && !moved; ++i)
          for (std::size_t j = t + 1; j < nc; ++j)
            if (a[i][j] % a[t][t] != 0) {
              add_row(t, i, 1);
              moved = true;
              break;
            }
        if (moved) continue;
        if (a[t][t] < 0) negate_row(t);
        diag.push_back(a[t][t]);
        break;
      }
    }
    return diag;
  }
};

IntMatrix dense_to_matrix(const Dense& d, std::size_t nr, std::size_t nc) {
  IntMatrix m(nr, nc);
  for (std::size_t c = 0; c < nc; ++c) {
    IntMatrix::Column col;
    for (std::size_t r = 0; r < nr; ++r)
      if (d[r][c] != 0) col.push_back({r, d[r][c]});
    m.set_column(c, std::move(col));
  }
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  DenseSnf s(m.to_dense(), m.rows(), m.cols(), true);
  SmithForm out;
  out.diagonal = s.run();
  out.u = dense_to_matrix(s.u, m.rows(), m.rows());
  out.v = dense_to_matrix(s.v, m.cols(), m.cols());
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  // Work on rows: the matrix transpose gives row-sparse storage directly.
  const IntMatrix t = m.transpose();
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<IntMatrix::Column> rows(nr);
  std::vector<std::vector<std::size_t>> col_rows(nc);
  std::vector<std::size_t> col_count(nc, 0);
  std::vector<bool> alive(nr, true);
  for (std::size_t r = 0; r < nr; ++r) {
    rows[r] = t.column(r);
    for (const auto& e : rows[r]) {
      col_rows[e.row].push_back(r);
      ++col_count[e.row];
    }
  }
  auto has = [&](std::size_t r, std::size_t c) -> const Integer* {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const IntMatrix::Entry& e, std::size_t x) { return e.row < x; });
    return (it != row.end() && it->row == c) ? &it->value : nullptr;
  };

  std::size_t unit_pivots = 0;
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<std::size_t> order;
    for (std::size_t r = 0; r < nr; ++r)
      if (alive[r] && !rows[r].empty()) order.push_back(r);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return rows[x].size() < rows[y].size(); });
    for (std::size_t r : order) {
      if (!alive[r] || rows[r].empty()) continue;
      std::size_t best = nc;
      for (const auto& e : rows[r])
        if (is_unit(e.value) && (best == nc || col_count[e.row] < col_count[best])) best = e.row;
      if (best == nc) continue;
      const Integer piv = *has(r, best);
      const auto targets = col_rows[best];
      for (std::size_t j : targets) {
        if (j == r || !alive[j]) continue;
        const Integer* a = has(j, best);
        if (!a) continue;
        const Integer scale = -(*a) * piv;
        for (const auto& e : rows[j]) --col_count[e.row];
        std::vector<std::size_t> before;
        before.reserve(rows[j].size());
        for (const auto& e : rows[j]) before.push_back(e.row);
        axpy(rows[j], scale, rows[r]);
        for (const auto& e : rows[j]) {
          ++col_count[e.row];
          if (!std::binary_search(before.begin(), before.end(), e.row)) col_rows[e.row].push_back(j);
        }
      }
      for (const auto& e : rows[r]) --col_count[e.row];
      alive[r] = false;
      ++unit_pivots;
      progress = true;
    }
  }

  // Dense Smith reduction on the remainder.
  std::vector<std::size_t> rest_rows;
  std::vector<std::size_t> col_index(nc, nc);
  std::size_t rest_cols = 0;
  for (std::size_t r = 0; r < nr; ++r) {
    if (!alive[r] || rows[r].empty()) continue;
    rest_rows.push_back(r);
    for (const auto& e : rows[r])
      if (col_index[e.row] == nc) col_index[e.row] = rest_cols++;
  }
  std::vector<Integer> out(unit_pivots, Integer(1));
  if (!rest_rows.empty()) {
    Dense d(rest_rows.size(), std::vector<Integer>(rest_cols, 0));
    for (std::size_t i = 0; i < rest_rows.size(); ++i)
      for (const auto& e : rows[rest_rows[i]]) d[i][col_index[e.row]] = e.value;
    DenseSnf s(std::move(d), rest_rows.size(), rest_cols, false);
    auto diag = s.run();
    out.insert(out.end(), diag.begin(), diag.end());
  }
  // Unit pivots can be placed first; the dense part already forms a chain
  // and every entry is divisible by 1.
  return out;
}

std::size_t rank(const IntMatrix& m) { return invariant_factors(m).size(); }

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  struct Pivot {
    IntMatrix::Column vec, tr;
  };
  std::map<std::size_t, Pivot> pivots;  // keyed by last row
  std::vector<IntMatrix::Column> kernel;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix::Column v = m.column(c);
    IntMatrix::Column tr{{c, Integer(1)}};
    while (!v.empty()) {
      const std::size_t r = v.back().row;
      auto it = pivots.find(r);
      if (it == pivots.end()) {
        pivots.emplace(r, Pivot{std::move(v), std::move(tr)});
        v.clear();
        tr.clear();
        break;
      }
      Pivot& p = it->second;
      const Integer a = v.back().value;
      const Integer b = p.vec.back().value;
      if (a % b == 0) {
        const Integer q = -(a / b);
        axpy(v, q, p.vec);
        axpy(tr, q, p.tr);
        continue;
      }
      // Unimodular 2x2 step: pivot <- x*v + y*p, v <- (b/g)*v - (a/g)*p.
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      IntMatrix::Column nv, ntr, pv, ptr;
      axpy(pv, x, v);
      axpy(pv, y, p.vec);
      axpy(ptr, x, tr);
      axpy(ptr, y, p.tr);
      axpy(nv, Integer(b / g), v);
      axpy(nv, Integer(-(a / g)), p.vec);
      axpy(ntr, Integer(b / g), tr);
      axpy(ntr, Integer(-(a / g)), p.tr);
      p.vec = std::move(pv);
      p.tr = std::move(ptr);
      v = std::move(nv);
      tr = std::move(ntr);
    }
    if (!tr.empty()) kernel.push_back(std::move(tr));
  }
  IntMatrix k(n, kernel.size());
  for (std::size_t i = 0; i < kernel.size(); ++i) k.set_column(i, std::move(kernel[i]));
  return k;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) throw IncompatibleInputs("right-hand side has wrong length");
  const SmithForm s = smith_normal_form(m);
  const std::vector<Integer> ub = s.u.apply(b);
  std::vector<Integer> y(m.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.diagonal.size()) {
      if (ub[i] % s.diagonal[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NonSplitKernel("inverse of a non-square matrix");
  const SmithForm s = smith_normal_form(m);
  if (s.diagonal.size() != m.rows() ||
      !std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const Integer& d) { return d == 1; }))
    throw NonSplitKernel("matrix is not unimodular");
  // u m v = 1, so m^{-1} = v u.
  return s.v * s.u;
}

CokernelPresentation cokernel_presentation(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  CokernelPresentation out;
  out.ambient = n;
  std::map<std::size_t, IntMatrix::Column> pivots;
  bool units_only = true;
  for (std::size_t c = 0; c < relations.cols() && units_only; ++c) {
    IntMatrix::Column v = relations.column(c);
    while (!v.empty()) {
      const std::size_t r = v.back().row;
      auto it = pivots.find(r);
      if (it == pivots.end()) {
        if (!is_unit(v.back().value)) units_only = false;
        pivots.emplace(r, std::move(v));
        break;
      }
      axpy(v, Integer(-v.back().value * it->second.back().value), it->second);
    }
  }
  if (units_only) {
    std::vector<std::size_t> coord(n, n);
    for (std::size_t r = 0; r < n; ++r)
      if (!pivots.count(r)) {
        coord[r] = out.chosen.size();
        out.chosen.push_back(r);
      }
    const std::size_t k = out.chosen.size();
    out.reduce = IntMatrix(k, n);
    out.section = IntMatrix(n, k);
    std::vector<IntMatrix::Column> red(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (coord[r] != n) {
        red[r] = {{coord[r], Integer(1)}};
        out.section.set(r, coord[r], 1);
      } else {
        const auto& w = pivots.at(r);
        const Integer u = w.back().value;
        IntMatrix::Column acc;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) axpy(acc, Integer(-u * w[i].value), red[w[i].row]);
        red[r] = std::move(acc);
      }
      out.reduce.set_column(r, red[r]);
    }
    return out;
  }
  const SmithForm s = smith_normal_form(relations);
  for (const auto& d : s.diagonal)
    if (d != 1) throw TorsionCokernel("cokernel has torsion factor " + d.get_str());
  const std::size_t r = s.diagonal.size();
  out.reduce = s.u.block(r, n, 0, n);
  out.section = unimodular_inverse(s.u).block(0, n, r, n);
  return out;
}

namespace modp {

namespace {
std::int64_t md(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}
std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = md(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, std::int64_t p) {
  std::vector<std::size_t> piv;
  const std::size_t nr = m.size();
  const std::size_t nc = nr ? m[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < nc && row < nr; ++c) {
    std::size_t sel = nr;
    for (std::size_t i = row; i < nr; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == nr) continue;
    std::swap(m[row], m[sel]);
    const std::int64_t iv = inv(m[row][c], p);
    for (auto& x : m[row]) x = x * iv % p;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t j = 0; j < nc; ++j) m[i][j] = md(m[i][j] - f * m[row][j], p);
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}
}  // namespace

std::size_t rank(Mat m, std::int64_t p) {
  for (auto& row : m)
    for (auto& x : row) x = md(x, p);
  return rref(m, p).size();
}

std::optional<std::vector<std::int64_t>> solve(Mat m, std::vector<std::int64_t> b, std::int64_t p) {
  const std::size_t nr = m.size();
  const std::size_t nc = nr ? m[0].size() : 0;
  if (b.size() != nr) throw IncompatibleInputs("right-hand side has wrong length");
  for (std::size_t i = 0; i < nr; ++i) {
    for (auto& x : m[i]) x = md(x, p);
    m[i].push_back(md(b[i], p));
  }
  const auto piv = rref(m, p);
  if (!piv.empty() && piv.back() == nc) return std::nullopt;
  std::vector<std::int64_t> x(nc, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][nc];
  return x;
}

std::vector<std::vector<std::int64_t>> kernel(Mat m, std::int64_t p) {
  const std::size_t nc = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = md(x, p);
  const auto piv = rref(m, p);
  std::vector<bool> is_piv(nc, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_piv[f]) continue;
    std::vector<std::int64_t> v(nc, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = md(-m[i][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

Mat from_int(const IntMatrix& m, std::int64_t p) {
  Mat out(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) {
      Integer r = e.value % p;
      out[e.row][c] = md(r.get_si(), p);
    }
  return out;
}

}  // namespace modp

}  // namespace cosop
