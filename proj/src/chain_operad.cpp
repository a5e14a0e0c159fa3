#include "cosop/chain_operad.hpp"

#include <algorithm>
#include <unordered_map>

#include "cosop/errors.hpp"

namespace cosop {

namespace {

int parity(long long x) { return static_cast<int>(x & 1); }

}  // namespace

std::string total_label(const Symbol& s) {
  return "r" + std::to_string(s.r) + "m" + std::to_string(s.internal_degree()) + ":" + s.label();
}

Chain ChainOperad::differential(const Symbol& s) const {
  Chain out = project(internal_boundary(s));
  if (s.n && s.phi[0] == 0) {
    Symbol x = s;
    x.r = static_cast<std::uint8_t>(s.r + 1);
    for (int t = 0; t < s.n; ++t) ++x.phi[t];
    out.push_back({x, parity(s.degree()) ? 1 : -1});
  }
  normalize(out);
  return out;
}

Chain ChainOperad::differential(const Chain& c) const {
  Chain out;
  for (const auto& [s, v] : c)
    for (const auto& [x, w] : differential(s)) out.push_back({x, checked_mul(v, w)});
  normalize(out);
  return out;
}

Symbol ChainOperad::unit_component(int r) {
  std::vector<int> f(r + 1, 1), phi(r + 1);
  for (int i = 0; i <= r; ++i) phi[i] = i;
  return Symbol::make(1, r, f, phi);
}

Chain ChainOperad::gamma(const Symbol& h, const std::vector<Symbol>& g) const {
  const int k = h.k;
  if (static_cast<int>(g.size()) != k) throw IncompatibleInputs("γ needs one argument per input of h");
  if (k > kMaxPositions) throw BoundsExceeded("arity too large");
  std::array<int, 32> fib{};
  for (int t = 0; t < h.n; ++t) ++fib[h.f[t]];
  int total = 0, gdeg = 0, koszul = 0;
  std::array<int, kMaxPositions + 1> offset{};
  for (int i = 0; i < k; ++i) {
    // The component of g_i that h can see sits at level |f^{-1}(i)| - 1.
    if (g[i].r + 1 != fib[i + 1]) return {};
    total += g[i].n;
    offset[i + 1] = offset[i] + g[i].k;
    gdeg += g[i].degree();
  }
  if (total > kMaxPositions) throw BoundsExceeded("composite has too many positions");
  if (offset[k] > 30) throw BoundsExceeded("composite arity too large");
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) koszul += parity(g[b].degree()) * parity(fib[a + 1] - 1);
  const int sign0 = (parity(h.degree()) * parity(gdeg) + koszul) % 2 ? -1 : 1;

  std::array<const Chain*, kMaxPositions> lifts{};
  for (int i = 0; i < k; ++i) lifts[i] = &kernel_lift(g[i]);

  Chain out;
  std::array<std::size_t, kMaxPositions> idx{};
  for (;;) {
    long long coef = sign0;
    for (int i = 0; i < k; ++i) coef = checked_mul(coef, (*lifts[i])[idx[i]].second);
    // Walk h; position t of fiber i at index u receives the positions of
    // the i-th argument sitting over u.
    Symbol x;
    x.k = static_cast<std::uint8_t>(offset[k]);
    x.r = h.r;
    std::array<int, 32> seen{};
    int w = 0;
    for (int t = 0; t < h.n; ++t) {
      const int i = h.f[t] - 1;
      const int u = seen[i + 1]++;
      const Symbol& y = (*lifts[i])[idx[i]].first;
      for (int s = 0; s < y.n; ++s)
        if (y.phi[s] == u) {
          x.f[w] = static_cast<std::uint8_t>(offset[i] + y.f[s]);
          x.phi[w] = h.phi[t];
          ++w;
        }
    }
    x.n = static_cast<std::uint8_t>(w);
    if (x.condition_d() && x.condition_b()) out.push_back({x, coef});
    int i = k - 1;
    while (i >= 0 && ++idx[i] == lifts[i]->size()) idx[i--] = 0;
    if (i < 0) break;
  }
  normalize(out);
  return out;
}

Chain ChainOperad::gamma(const Chain& h, const std::vector<Chain>& g) const {
  Chain out;
  const std::size_t k = g.size();
  for (const auto& [hs, hv] : h) {
    if (hs.k != k) throw IncompatibleInputs("arity mismatch in γ");
    if (k == 0) {
      out.push_back({hs, hv});
      continue;
    }
    std::vector<std::size_t> idx(k, 0);
    bool empty = false;
    for (const auto& gi : g) empty = empty || gi.empty();
    if (empty) continue;
    std::vector<Symbol> args(k);
    for (;;) {
      long long coef = hv;
      for (std::size_t i = 0; i < k; ++i) {
        args[i] = g[i][idx[i]].first;
        coef = checked_mul(coef, g[i][idx[i]].second);
      }
      for (const auto& [x, v] : gamma(hs, args)) out.push_back({x, checked_mul(coef, v)});
      std::size_t i = k;
      while (i > 0 && ++idx[i - 1] == g[i - 1].size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  normalize(out);
  return out;
}

Chain ChainOperad::gamma_matrix(const Symbol& h, const std::vector<Symbol>& g) const {
  std::vector<Chain> maps;
  std::vector<int> arities;
  int gdeg = 0;
  for (const auto& gi : g) {
    maps.push_back({{gi, 1}});
    arities.push_back(gi.k);
    gdeg += gi.degree();
  }
  Chain out;
  for (const auto& [y, c] : kernel_lift(h))
    for (const auto& [x, v] : box_functorial_apply(y, maps, arities)) out.push_back({x, checked_mul(c, v)});
  normalize(out);
  out = project(out);
  return (parity(h.degree()) && parity(gdeg)) ? scaled(out, -1) : out;
}

Chain ChainOperad::act(const Chain& c, const std::vector<int>& perm) { return relabel(c, perm); }

std::vector<Symbol> ChainOperad::basis(int k, int p, int max_level) const {
  std::vector<Symbol> out;
  for (int r = 0; r <= max_level; ++r) {
    const int q = p + k - 1 + r;
    if (q < 0) continue;
    if (q + 1 > kMaxPositions) throw BoundsExceeded("degree needs more positions than supported");
    for (auto& s : enumerate_symbols(k, q, r, n_)) out.push_back(s);
  }
  return out;
}

GradedIntComplex ChainOperad::complex(int k, int max_level, int lo, int hi) const {
  GradedIntComplex c;
  std::map<int, std::unordered_map<Symbol, std::size_t, SymbolHash>> where;
  for (int p = lo - 1; p <= hi + 1; ++p) {
    const auto b = basis(k, p, max_level);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < b.size(); ++i) {
      labels.push_back(total_label(b[i]));
      where[p][b[i]] = i;
    }
    c.set_basis(p, std::move(labels));
  }
  for (int p = lo; p <= hi + 1; ++p) {
    IntMatrix d(where[p - 1].size(), where[p].size());
    for (const auto& [s, col] : where[p])
      for (const auto& [x, v] : differential(s)) {
        if (x.r > max_level) continue;  // quotient by the higher levels
        d.add(where[p - 1].at(x), col, Integer(static_cast<long>(v)));
      }
    c.set_differential(p, std::move(d));
  }
  c.set_window(lo - 1, hi + 1);
  return c;
}

CosimplicialChainComplex box_cosimplicial_chain_complex(int k, ComplexityBound n, int qmax, int max_level) {
  CosimplicialChainComplex b;
  b.max_level = max_level;
  for (int r = 0; r <= max_level; ++r) b.level.push_back(box_level(k, n, r, qmax));
  b.coface.resize(max_level + 1);
  b.codegeneracy.resize(max_level + 1);
  for (int m = 0; m + k - 1 <= qmax; ++m) {
    const CosimplicialAbGroup a = box_cosimplicial_group(k, n, m, max_level);
    for (int r = 0; r <= max_level; ++r) {
      if (r < max_level) {
        b.coface[r].resize(r + 2);
        for (int i = 0; i <= r + 1; ++i) b.coface[r][i][m] = a.coface[r][i];
      }
      if (r >= 1) {
        b.codegeneracy[r].resize(r);
        for (int i = 0; i < r; ++i) b.codegeneracy[r][i][m] = a.codegeneracy[r][i];
      }
    }
  }
  return b;
}

int truncation_level(int k, int hi, int qmax) { return qmax - (hi + 1) - (k - 1); }

}  // namespace cosop
