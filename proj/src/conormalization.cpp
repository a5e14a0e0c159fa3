#include "cosop/conormalization.hpp"

#include <algorithm>

#include "cosop/delta.hpp"
#include "cosop/errors.hpp"

namespace cosop {

namespace {

IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

// Left inverse of a matrix whose columns span a saturated sublattice.
IntMatrix left_inverse(const IntMatrix& k) {
  const SmithForm s = smith_normal_form(k);
  const std::size_t r = s.diagonal.size();
  if (r != k.cols() || !std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const Integer& d) { return d == 1; }))
    throw NonSplitKernel("kernel basis is not a direct summand");
  // u k v = [I; 0]  =>  v [I 0] u k = 1
  return s.v * s.u.block(0, r, 0, k.rows());
}

IntMatrix stacked_codegeneracies(const CosimplicialAbGroup& a, int m) {
  IntMatrix s(0, a.rank(m));
  for (int i = 0; i < m; ++i) s = s.vstack(a.codegeneracy[m][i]);
  return s;
}

IntMatrix alternating_coface(const CosimplicialAbGroup& a, int m) {
  IntMatrix d(a.rank(m + 1), a.rank(m));
  for (int i = 0; i <= m + 1; ++i) d = (i % 2 ? d - a.coface[m][i] : d + a.coface[m][i]);
  return d;
}

IntMatrix positive_cofaces(const CosimplicialAbGroup& a, int m) {
  IntMatrix rel(a.rank(m), 0);
  for (int i = 1; i <= m; ++i) rel = rel.hstack(a.coface[m - 1][i]);
  return rel;
}

std::vector<std::string> presentation_labels(const CokernelPresentation& p, const std::vector<std::string>& ambient,
                                             const std::string& prefix) {
  std::vector<std::string> out;
  if (p.by_labels()) {
    for (auto i : p.chosen) out.push_back(prefix + ambient[i]);
  } else {
    for (std::size_t i = 0; i < p.reduce.rows(); ++i) out.push_back(prefix + "c" + std::to_string(i));
  }
  return out;
}

}  // namespace

void CosimplicialAbGroup::validate() const {
  const int L = max_level;
  auto fail = [](const std::string& what, int m) {
    throw InvalidInput("cosimplicial identity " + what + " fails at level " + std::to_string(m));
  };
  if (static_cast<int>(labels.size()) != L + 1) throw InvalidInput("level count mismatch");
  for (int m = 0; m < L; ++m)
    for (int i = 0; i <= m + 1; ++i) {
      const auto& d = coface.at(m).at(i);
      if (d.rows() != rank(m + 1) || d.cols() != rank(m)) fail("shape of d", m);
    }
  for (int m = 1; m <= L; ++m)
    for (int i = 0; i < m; ++i) {
      const auto& s = codegeneracy.at(m).at(i);
      if (s.rows() != rank(m - 1) || s.cols() != rank(m)) fail("shape of s", m);
    }
  // d^j d^i = d^i d^{j-1}, i < j
  for (int m = 0; m + 2 <= L; ++m)
    for (int j = 1; j <= m + 2; ++j)
      for (int i = 0; i < j; ++i)
        if (coface[m + 1][j] * coface[m][i] != coface[m + 1][i] * coface[m][j - 1]) fail("dd", m);
  // s^j s^i = s^i s^{j+1}, i <= j
  for (int m = 2; m <= L; ++m)
    for (int j = 0; j + 1 <= m - 1; ++j)
      for (int i = 0; i <= j; ++i)
        if (codegeneracy[m - 1][j] * codegeneracy[m][i] != codegeneracy[m - 1][i] * codegeneracy[m][j + 1])
          fail("ss", m);
  // mixed relations on A^m -> A^{m+1} -> A^m
  for (int m = 0; m + 1 <= L; ++m)
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= m + 1; ++i) {
        const IntMatrix lhs = codegeneracy[m + 1][j] * coface[m][i];
        IntMatrix rhs;
        if (i == j || i == j + 1)
          rhs = IntMatrix::identity(rank(m));
        else if (i < j)
          rhs = coface[m - 1][i] * codegeneracy[m][j - 1];
        else
          rhs = coface[m - 1][i - 1] * codegeneracy[m][j];
        if (lhs != rhs) fail("sd", m);
      }
  if (has_empty_level && L >= 1) {
    if (augmentation.rows() != rank(0) || augmentation.cols() != empty_labels.size()) fail("shape of augmentation", 0);
    if (coface[0][0] * augmentation != coface[0][1] * augmentation) fail("augmentation", 0);
  }
}

CosimplicialAbGroup dual_cosimplicial_group(const FiniteSimplicialSet& w, int max_level) {
  CosimplicialAbGroup a;
  a.max_level = max_level;
  a.labels.resize(max_level + 1);
  a.coface.resize(max_level + 1);
  a.codegeneracy.resize(max_level + 1);
  for (int m = 0; m <= max_level; ++m)
    for (const auto& s : w.simplices(m)) {
      std::string l = w.generators()[s.generator].name;
      if (!s.nondegenerate()) l += "@" + s.degeneracy.to_string();
      a.labels[m].push_back(l + "*");
    }
  for (int m = 0; m < max_level; ++m)
    for (int i = 0; i <= m + 1; ++i) {
      IntMatrix d(a.rank(m + 1), a.rank(m));
      const auto& top = w.simplices(m + 1);
      for (std::size_t row = 0; row < top.size(); ++row) d.set(row, w.simplex_index(w.face(top[row], i)), 1);
      a.coface[m].push_back(std::move(d));
    }
  for (int m = 1; m <= max_level; ++m)
    for (int i = 0; i < m; ++i) {
      IntMatrix s(a.rank(m - 1), a.rank(m));
      const auto& low = w.simplices(m - 1);
      for (std::size_t row = 0; row < low.size(); ++row) s.set(row, w.simplex_index(w.degeneracy(low[row], i)), 1);
      a.codegeneracy[m].push_back(std::move(s));
    }
  return a;
}

CosimplicialAbGroup constant_cosimplicial_group(int max_level) {
  CosimplicialAbGroup a;
  a.max_level = max_level;
  a.labels.assign(max_level + 1, {"1"});
  a.coface.resize(max_level + 1);
  a.codegeneracy.resize(max_level + 1);
  for (int m = 0; m < max_level; ++m) a.coface[m].assign(m + 2, IntMatrix::identity(1));
  for (int m = 1; m <= max_level; ++m) a.codegeneracy[m].assign(m, IntMatrix::identity(1));
  return a;
}

CosimplicialAbGroup zero_cosimplicial_group(int max_level) {
  CosimplicialAbGroup a;
  a.max_level = max_level;
  a.labels.assign(max_level + 1, {});
  a.coface.resize(max_level + 1);
  a.codegeneracy.resize(max_level + 1);
  for (int m = 0; m < max_level; ++m) a.coface[m].assign(m + 2, zero(0, 0));
  for (int m = 1; m <= max_level; ++m) a.codegeneracy[m].assign(m, zero(0, 0));
  return a;
}

KernelConormalization conormalize_kernel_form(const CosimplicialAbGroup& a) {
  const int L = a.max_level;
  KernelConormalization out;
  out.complex.set_cohomological(true);
  std::vector<IntMatrix> linv(L + 1);
  for (int m = 0; m <= L; ++m) {
    IntMatrix k = m == 0 ? IntMatrix::identity(a.rank(0)) : integer_kernel(stacked_codegeneracies(a, m));
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < k.cols(); ++c) {
      // Name a kernel vector by its leading ambient label.
      const auto& col = k.column(c);
      labels.push_back("N" + std::to_string(m) + "[" + a.labels[m][col.back().row] + "]#" + std::to_string(c));
    }
    out.complex.set_basis(-m, std::move(labels));
    linv[m] = left_inverse(k);
    out.inclusion.push_back(std::move(k));
  }
  for (int m = 0; m < L; ++m) {
    const IntMatrix image = alternating_coface(a, m) * out.inclusion[m];
    const IntMatrix coords = linv[m + 1] * image;
    if (out.inclusion[m + 1] * coords != image)
      throw NormalizationFailure("coface image leaves the normalized part at level " + std::to_string(m));
    out.complex.set_differential(-m, coords);
  }
  out.complex.set_window(-L, GradedIntComplex::kUnbounded);
  out.complex.assert_d_squared_zero();
  return out;
}

GradedIntComplex conormalize_kernel(const CosimplicialAbGroup& a) { return conormalize_kernel_form(a).complex; }

CokernelConormalization conormalize_cokernel_form(const CosimplicialAbGroup& a) {
  const int L = a.max_level;
  CokernelConormalization out;
  out.complex.set_cohomological(true);
  for (int m = 0; m <= L; ++m) {
    out.presentation.push_back(cokernel_presentation(positive_cofaces(a, m)));
    out.complex.set_basis(-m, presentation_labels(out.presentation[m], a.labels[m], ""));
  }
  for (int m = 0; m < L; ++m)
    out.complex.set_differential(
        -m, out.presentation[m + 1].reduce * a.coface[m][0] * out.presentation[m].section);
  out.complex.set_window(-L, GradedIntComplex::kUnbounded);
  out.complex.assert_d_squared_zero();
  return out;
}

GradedIntComplex conormalize_cokernel(const CosimplicialAbGroup& a) { return conormalize_cokernel_form(a).complex; }

ConormalizationCertificate compare_conormalizations(const CosimplicialAbGroup& a) {
  const auto ker = conormalize_kernel_form(a);
  const auto cok = conormalize_cokernel_form(a);
  ConormalizationCertificate cert;
  const int L = a.max_level;
  for (int m = 0; m <= L; ++m) {
    IntMatrix f = cok.presentation[m].reduce * ker.inclusion[m];
    IntMatrix g;
    try {
      g = unimodular_inverse(f);
    } catch (const NonSplitKernel&) {
      throw ComparisonFailed("kernel and cokernel forms differ at level " + std::to_string(m));
    }
    if (g * f != IntMatrix::identity(f.cols()) || f * g != IntMatrix::identity(f.rows()))
      throw ComparisonFailed("composite is not the identity at level " + std::to_string(m));
    cert.forward.push_back(std::move(f));
    cert.backward.push_back(std::move(g));
  }
  for (int m = 0; m < L; ++m) {
    const IntMatrix dk = ker.complex.differential(-m);
    const IntMatrix dc = cok.complex.differential(-m);
    if (cert.forward[m + 1] * dk != dc * cert.forward[m] || cert.backward[m + 1] * dc != dk * cert.backward[m])
      throw ComparisonFailed("comparison does not commute with differentials at level " + std::to_string(m));
  }
  cert.levels_checked = L + 1;
  return cert;
}

int CosimplicialChainComplex::max_internal_degree() const {
  int m = 0;
  for (const auto& c : level)
    for (int d : c.degrees()) m = std::max(m, d);
  return m;
}

CosimplicialAbGroup CosimplicialChainComplex::internal_slice(int m) const {
  CosimplicialAbGroup a;
  a.max_level = max_level;
  a.coface.resize(max_level + 1);
  a.codegeneracy.resize(max_level + 1);
  for (int r = 0; r <= max_level; ++r) a.labels.push_back(level[r].basis(m));
  auto get = [&](const std::map<int, IntMatrix>& mats, std::size_t rows, std::size_t cols) {
    auto it = mats.find(m);
    return it == mats.end() ? IntMatrix(rows, cols) : it->second;
  };
  for (int r = 0; r < max_level; ++r)
    for (int i = 0; i <= r + 1; ++i) a.coface[r].push_back(get(coface[r][i], a.rank(r + 1), a.rank(r)));
  for (int r = 1; r <= max_level; ++r)
    for (int i = 0; i < r; ++i) a.codegeneracy[r].push_back(get(codegeneracy[r][i], a.rank(r - 1), a.rank(r)));
  return a;
}

CosimplicialChainComplex standard_cosimplicial_chains(int max_level) {
  CosimplicialChainComplex b;
  b.max_level = max_level;
  b.coface.resize(max_level + 1);
  b.codegeneracy.resize(max_level + 1);
  // inj[r][j] = injections [j] -> [r]
  std::vector<std::vector<std::vector<OrderedMap>>> inj(max_level + 1);
  for (int r = 0; r <= max_level; ++r) {
    b.level.push_back(standard_simplex_chains(r));
    for (int j = 0; j <= r; ++j) inj[r].push_back(all_injections(j + 1, r + 1));
  }
  auto index = [&](int r, int j, const OrderedMap& f) {
    const auto& v = inj[r][j];
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), f) - v.begin());
  };
  for (int r = 0; r < max_level; ++r)
    for (int i = 0; i <= r + 1; ++i) {
      std::map<int, IntMatrix> mats;
      const OrderedMap d = coface(r, i);
      for (int j = 0; j <= r; ++j) {
        IntMatrix m(inj[r + 1][j].size(), inj[r][j].size());
        for (std::size_t c = 0; c < inj[r][j].size(); ++c) m.set(index(r + 1, j, compose(d, inj[r][j][c])), c, 1);
        mats[j] = std::move(m);
      }
      b.coface[r].push_back(std::move(mats));
    }
  for (int r = 1; r <= max_level; ++r)
    for (int i = 0; i < r; ++i) {
      std::map<int, IntMatrix> mats;
      const OrderedMap s = codegeneracy(r, i);
      for (int j = 0; j <= r; ++j) {
        const std::size_t rows = j <= r - 1 ? inj[r - 1][j].size() : 0;
        IntMatrix m(rows, inj[r][j].size());
        for (std::size_t c = 0; c < inj[r][j].size(); ++c) {
          const OrderedMap img = compose(s, inj[r][j][c]);
          if (img.injective()) m.set(index(r - 1, j, img), c, 1);
        }
        mats[j] = std::move(m);
      }
      b.codegeneracy[r].push_back(std::move(mats));
    }
  return b;
}

CosimplicialChainComplex concentrated_in_degree_zero(const CosimplicialAbGroup& a) {
  CosimplicialChainComplex b;
  b.max_level = a.max_level;
  b.coface.resize(a.max_level + 1);
  b.codegeneracy.resize(a.max_level + 1);
  for (int r = 0; r <= a.max_level; ++r) {
    GradedIntComplex c;
    c.set_basis(0, a.labels[r]);
    b.level.push_back(std::move(c));
  }
  for (int r = 0; r < a.max_level; ++r)
    for (const auto& d : a.coface[r]) b.coface[r].push_back({{0, d}});
  for (int r = 1; r <= a.max_level; ++r)
    for (const auto& s : a.codegeneracy[r]) b.codegeneracy[r].push_back({{0, s}});
  return b;
}

GradedIntComplex conormalize_bicomplex(const CosimplicialChainComplex& b, int max_level, int lo, int hi) {
  if (max_level > b.max_level)
    throw WindowTooSmall("bicomplex has " + std::to_string(b.max_level) + " levels, " + std::to_string(max_level) +
                         " requested");
  const int M = b.max_internal_degree();
  // Cokernel presentations per internal degree and level.
  std::vector<CokernelConormalization> slices;
  for (int m = 0; m <= M; ++m) {
    CosimplicialAbGroup a = b.internal_slice(m);
    a.max_level = max_level;
    a.labels.resize(max_level + 1);
    slices.push_back(conormalize_cokernel_form(a));
  }
  // Generators grouped by total degree p = m - r.
  struct Cell {
    int r, m;
    std::size_t offset;
  };
  std::map<int, std::vector<Cell>> cells;
  std::map<int, std::vector<std::string>> labels;
  for (int r = 0; r <= max_level; ++r)
    for (int m = 0; m <= M; ++m) {
      const int p = m - r;
      if (p < lo - 1 || p > hi + 1) continue;
      const auto& names = slices[m].complex.basis(-r);
      if (names.empty()) continue;
      cells[p].push_back({r, m, labels[p].size()});
      for (const auto& n : names) labels[p].push_back("r" + std::to_string(r) + "m" + std::to_string(m) + ":" + n);
    }
  GradedIntComplex t;
  for (auto& [p, l] : labels) t.set_basis(p, l);
  auto find_cell = [&](int p, int r, int m) -> const Cell* {
    auto it = cells.find(p);
    if (it == cells.end()) return nullptr;
    for (const auto& c : it->second)
      if (c.r == r && c.m == m) return &c;
    return nullptr;
  };
  for (auto& [p, cs] : cells) {
    if (!t.rank(p - 1) && !cells.count(p - 1)) continue;
    IntMatrix d(t.rank(p - 1), t.rank(p));
    for (const auto& c : cs) {
      const auto& pres = slices[c.m].presentation;
      // internal part: (r, m) -> (r, m-1)
      if (const Cell* dst = find_cell(p - 1, c.r, c.m - 1)) {
        const IntMatrix inner = slices[c.m - 1].presentation[c.r].reduce * b.level[c.r].differential(c.m) *
                                pres[c.r].section;
        for (std::size_t col = 0; col < inner.cols(); ++col)
          for (const auto& e : inner.column(col)) d.add(dst->offset + e.row, c.offset + col, e.value);
      }
      // cosimplicial part: (r, m) -> (r+1, m), weighted by -(-1)^p
      if (const Cell* dst = find_cell(p - 1, c.r + 1, c.m)) {
        const IntMatrix delta = slices[c.m].complex.differential(-c.r);
        const int sign = (p % 2 == 0) ? -1 : 1;
        for (std::size_t col = 0; col < delta.cols(); ++col)
          for (const auto& e : delta.column(col)) d.add(dst->offset + e.row, c.offset + col, sign * e.value);
      }
    }
    t.set_differential(p, std::move(d));
  }
  t.set_window(lo - 1, hi + 1);
  t.assert_d_squared_zero();
  return t;
}

}  // namespace cosop
