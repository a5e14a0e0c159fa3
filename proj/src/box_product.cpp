#include "cosop/box_product.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "cosop/errors.hpp"

namespace cosop {

ComplexityBound::ComplexityBound(int v) : n(v) {
  if (v < 1) throw ValueOutOfRange("complexity bound must be at least 1");
}

int complexity(const std::vector<int>& f) {
  int k = 0;
  for (int x : f) {
    if (x < 1) throw ValueOutOfRange("labels must be positive");
    k = std::max(k, x);
  }
  int best = 0;
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      int last = 0, changes = 0;
      for (int x : f) {
        if (x != a && x != b) continue;
        if (last && x != last) ++changes;
        last = x;
      }
      best = std::max(best, changes);
    }
  return best;
}

// ---------------------------------------------------------------- Symbol

int Symbol::fiber_size(int label) const {
  int c = 0;
  for (int t = 0; t < n; ++t) c += f[t] == label;
  return c;
}

bool Symbol::condition_d() const {
  for (int t = 0; t + 1 < n; ++t)
    if (phi[t] == phi[t + 1] && f[t] == f[t + 1]) return false;
  return true;
}

bool Symbol::condition_b() const {
  // φ is monotone, so it suffices that consecutive values never skip and
  // that the last value reaches r.
  if (r == 0) return true;
  if (n == 0) return false;
  if (phi[0] > 1) return false;
  for (int t = 1; t < n; ++t)
    if (phi[t] > phi[t - 1] + 1) return false;
  return phi[n - 1] == r;
}

bool Symbol::onto() const {
  std::uint32_t seen = 0;
  for (int t = 0; t < n; ++t) seen |= 1u << f[t];
  for (int i = 1; i <= k; ++i)
    if (!(seen & (1u << i))) return false;
  return true;
}

std::string Symbol::label() const {
  std::string s = "[";
  for (int t = 0; t < n; ++t) s += (t ? "," : "") + std::to_string(f[t]);
  s += ";";
  for (int t = 0; t < n; ++t) s += (t ? "," : "") + std::to_string(phi[t]);
  s += "]r" + std::to_string(r);
  return s;
}

nlohmann::json Symbol::to_json() const {
  return {{"k", k}, {"r", r}, {"f", f_values()}, {"phi", phi_values()}};
}

Symbol Symbol::make(int k, int r, const std::vector<int>& f, const std::vector<int>& phi) {
  if (f.size() != phi.size()) throw InvalidInput("f and phi must have the same length");
  if (static_cast<int>(f.size()) > kMaxPositions) throw BoundsExceeded("too many positions");
  if (k < 0 || k > 30 || r < 0 || r > 250) throw ValueOutOfRange("arity or level out of range");
  Symbol s;
  s.k = static_cast<std::uint8_t>(k);
  s.r = static_cast<std::uint8_t>(r);
  s.n = static_cast<std::uint8_t>(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (f[t] < 1 || f[t] > k) throw ValueOutOfRange("label out of range");
    if (phi[t] < 0 || phi[t] > r || (t && phi[t] < phi[t - 1])) throw InvalidInput("phi must be monotone into [r]");
    s.f[t] = static_cast<std::uint8_t>(f[t]);
    s.phi[t] = static_cast<std::uint8_t>(phi[t]);
  }
  return s;
}

bool Symbol::operator==(const Symbol& o) const {
  return k == o.k && r == o.r && n == o.n && f == o.f && phi == o.phi;
}

bool Symbol::operator<(const Symbol& o) const {
  if (k != o.k) return k < o.k;
  if (n != o.n) return n < o.n;
  if (int c = std::memcmp(f.data(), o.f.data(), kMaxPositions)) return c < 0;
  if (r != o.r) return r < o.r;
  return std::memcmp(phi.data(), o.phi.data(), kMaxPositions) < 0;
}

std::size_t SymbolHash::operator()(const Symbol& s) const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(s.k);
  mix(s.r);
  mix(s.n);
  for (int t = 0; t < s.n; ++t) mix(static_cast<std::uint64_t>(s.f[t]) << 8 | s.phi[t]);
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- chains

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw BoundsExceeded("coefficient overflow");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out)) throw BoundsExceeded("coefficient overflow");
  return out;
}

void normalize(Chain& c) {
  if (c.size() == 1) {
    if (c[0].second == 0) c.clear();
    return;
  }
  std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < c.size();) {
    std::size_t j = i;
    long long sum = 0;
    while (j < c.size() && c[j].first == c[i].first) sum = checked_add(sum, c[j++].second);
    if (sum != 0) c[w++] = {c[i].first, sum};
    i = j;
  }
  c.resize(w);
}

Chain add(const Chain& a, const Chain& b, long long scale) {
  Chain out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, checked_mul(scale, b[j].second)});
      ++j;
    } else {
      const long long v = checked_add(a[i].second, checked_mul(scale, b[j].second));
      if (v) out.push_back({a[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

Chain scaled(const Chain& a, long long s) {
  if (s == 0) return {};
  Chain out(a);
  for (auto& [sym, c] : out) c = checked_mul(c, s);
  return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

void enumerate_phi(Symbol& s, int t, bool need_b, std::vector<Symbol>& out) {
  if (t == s.n) {
    if (!need_b || s.condition_b()) out.push_back(s);
    return;
  }
  const int lo = t ? s.phi[t - 1] : 0;
  for (int v = lo; v <= s.r; ++v) {
    if (t && v == s.phi[t - 1] && s.f[t] == s.f[t - 1]) continue;
    if (need_b && t && v > s.phi[t - 1] + 1) break;
    if (need_b && t == 0 && v > 1) break;
    // Enough positions left to reach r?
    if (need_b && s.r - v > s.n - 1 - t) continue;
    s.phi[t] = static_cast<std::uint8_t>(v);
    enumerate_phi(s, t + 1, need_b, out);
  }
  s.phi[t] = 0;
}

std::vector<Symbol> enumerate(int k, int q, int r, ComplexityBound nb, bool need_b, bool surjective_only) {
  std::vector<Symbol> out;
  if (k < 1 || q < 0 || r < 0) return out;
  if (q + 1 > kMaxPositions) throw BoundsExceeded("q exceeds the supported number of positions");
  const int n = q + 1;
  std::vector<int> f(n, 1);
  for (;;) {
    bool onto = true;
    if (surjective_only) {
      std::uint32_t seen = 0;
      for (int x : f) seen |= 1u << x;
      for (int i = 1; i <= k; ++i) onto = onto && (seen & (1u << i));
    }
    if (onto && nb.admits(complexity(f))) {
      Symbol s;
      s.k = static_cast<std::uint8_t>(k);
      s.r = static_cast<std::uint8_t>(r);
      s.n = static_cast<std::uint8_t>(n);
      for (int t = 0; t < n; ++t) s.f[t] = static_cast<std::uint8_t>(f[t]);
      enumerate_phi(s, 0, need_b, out);
    }
    int i = n - 1;
    while (i >= 0 && f[i] == k) f[i--] = 1;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

}  // namespace

std::vector<Symbol> enumerate_symbols(int k, int q, int r, ComplexityBound n) {
  return enumerate(k, q, r, n, true, true);
}

std::vector<Symbol> enumerate_level_basis(int k, int q, int r, ComplexityBound n, bool surjective_only) {
  auto out = enumerate(k, q, r, n, false, surjective_only);
  // Non-surjective f contribute Δ^∅_* = 0 tensor factors.
  if (!surjective_only) out.erase(std::remove_if(out.begin(), out.end(), [](const Symbol& s) { return !s.onto(); }), out.end());
  return out;
}

// ---------------------------------------------------------------- structure maps

Chain internal_boundary(const Symbol& s) {
  Chain out;
  std::array<int, 32> size{}, seen{};
  for (int t = 0; t < s.n; ++t) ++size[s.f[t]];
  for (int t = 0; t < s.n; ++t) {
    const int i = s.f[t];
    const int idx = seen[i]++;
    if (size[i] < 2) continue;
    int e = idx;
    for (int j = 1; j < i; ++j) e += size[j] - 1;
    Symbol x;
    x.k = s.k;
    x.r = s.r;
    x.n = static_cast<std::uint8_t>(s.n - 1);
    for (int u = 0, w = 0; u < s.n; ++u) {
      if (u == t) continue;
      x.f[w] = s.f[u];
      x.phi[w] = s.phi[u];
      ++w;
    }
    if (!x.condition_d()) continue;
    out.push_back({x, e % 2 ? -1 : 1});
  }
  normalize(out);
  return out;
}

std::optional<Symbol> act(const OrderedMap& alpha, const Symbol& s) {
  if (alpha.source_size != s.r + 1) throw IncompatibleInputs("operator source does not match the level");
  Symbol x = s;
  x.r = static_cast<std::uint8_t>(alpha.target_size - 1);
  for (int t = 0; t < s.n; ++t) x.phi[t] = static_cast<std::uint8_t>(alpha.values[s.phi[t]]);
  if (!x.condition_d()) return std::nullopt;
  return x;
}

Chain act(const OrderedMap& alpha, const Chain& c) {
  Chain out;
  for (const auto& [s, v] : c)
    if (auto x = act(alpha, s)) out.push_back({*x, v});
  normalize(out);
  return out;
}

GradedIntComplex box_level(int k, ComplexityBound n, int r, int qmax) {
  if (qmax + 1 > kMaxPositions) throw BoundsExceeded("qmax exceeds the supported number of positions");
  GradedIntComplex c;
  std::map<int, std::vector<Symbol>> bases;
  for (int q = k - 1; q <= qmax; ++q) {
    auto b = enumerate_level_basis(k, q, r, n);
    std::vector<std::string> labels;
    for (const auto& s : b) labels.push_back(s.label());
    c.set_basis(q + 1 - k, std::move(labels));
    bases[q + 1 - k] = std::move(b);
  }
  for (auto& [m, b] : bases) {
    if (!bases.count(m - 1)) continue;
    const auto& low = bases[m - 1];
    IntMatrix d(low.size(), b.size());
    for (std::size_t col = 0; col < b.size(); ++col)
      for (const auto& [x, v] : internal_boundary(b[col])) {
        const auto it = std::lower_bound(low.begin(), low.end(), x);
        d.add(static_cast<std::size_t>(it - low.begin()), col, Integer(static_cast<long>(v)));
      }
    c.set_differential(m, std::move(d));
  }
  // Internal degree qmax + 1 - k is missing its boundary source only.
  c.set_window(-GradedIntComplex::kUnbounded, qmax - k);
  c.assert_d_squared_zero();
  return c;
}

namespace {

CosimplicialAbGroup group_from_levels(std::vector<std::vector<Symbol>> levels) {
  CosimplicialAbGroup a;
  const int L = static_cast<int>(levels.size()) - 1;
  a.max_level = L;
  a.coface.resize(L + 1);
  a.codegeneracy.resize(L + 1);
  for (auto& lv : levels) {
    std::sort(lv.begin(), lv.end());
    std::vector<std::string> labels;
    for (const auto& s : lv) labels.push_back(s.label());
    a.labels.push_back(std::move(labels));
  }
  auto index = [&](int r, const Symbol& s) {
    const auto& v = levels[r];
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || !(*it == s)) throw NormalizationFailure("operator leaves the level basis");
    return static_cast<std::size_t>(it - v.begin());
  };
  for (int r = 0; r < L; ++r)
    for (int i = 0; i <= r + 1; ++i) {
      IntMatrix d(levels[r + 1].size(), levels[r].size());
      const OrderedMap op = coface(r, i);
      for (std::size_t c = 0; c < levels[r].size(); ++c)
        if (auto x = act(op, levels[r][c])) d.set(index(r + 1, *x), c, 1);
      a.coface[r].push_back(std::move(d));
    }
  for (int r = 1; r <= L; ++r)
    for (int i = 0; i < r; ++i) {
      IntMatrix s(levels[r - 1].size(), levels[r].size());
      const OrderedMap op = codegeneracy(r, i);
      for (std::size_t c = 0; c < levels[r].size(); ++c)
        if (auto x = act(op, levels[r][c])) s.set(index(r - 1, *x), c, 1);
      a.codegeneracy[r].push_back(std::move(s));
    }
  return a;
}

}  // namespace

CosimplicialAbGroup box_cosimplicial_group(int k, ComplexityBound n, int m, int max_level) {
  std::vector<std::vector<Symbol>> levels;
  for (int r = 0; r <= max_level; ++r) levels.push_back(enumerate_level_basis(k, m + k - 1, r, n));
  return group_from_levels(std::move(levels));
}

CosimplicialAbGroup box_cosimplicial_group_for(const std::vector<int>& f, int max_level) {
  int k = 0;
  for (int x : f) k = std::max(k, x);
  const int q = static_cast<int>(f.size()) - 1;
  std::vector<std::vector<Symbol>> levels;
  for (int r = 0; r <= max_level; ++r) {
    std::vector<Symbol> lv;
    for (const auto& phi : all_ordered_maps(q + 1, r + 1)) {
      Symbol s = Symbol::make(k, r, f, phi.values);
      if (s.condition_d()) lv.push_back(s);
    }
    levels.push_back(std::move(lv));
  }
  return group_from_levels(std::move(levels));
}

// ---------------------------------------------------------------- lifts

const Chain& kernel_lift(const Symbol& s) {
  thread_local std::unordered_map<Symbol, Chain, SymbolHash> cache;
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  Chain c{{s, 1}};
  for (int i = 0; i < s.r; ++i) {
    const Chain down = act(codegeneracy(s.r, i), c);
    if (down.empty()) continue;
    c = add(c, act(coface(s.r - 1, i + 1), down), -1);
  }
  return cache.emplace(s, std::move(c)).first->second;
}

Chain project(const Chain& c) {
  Chain out;
  for (const auto& t : c)
    if (t.first.condition_b()) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------- symmetry

int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& order) {
  int e = 0;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (order[a] > order[b]) e += (degrees[order[a]] & 1) * (degrees[order[b]] & 1);
  return e % 2 ? -1 : 1;
}

std::pair<Symbol, int> relabel(const Symbol& s, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != s.k) throw IncompatibleInputs("permutation size differs from arity");
  std::vector<int> degrees(s.k), order(s.k);
  for (int i = 0; i < s.k; ++i) {
    degrees[i] = s.fiber_size(i + 1) - 1;
    order[perm[i] - 1] = i;
  }
  Symbol x = s;
  for (int t = 0; t < s.n; ++t) x.f[t] = static_cast<std::uint8_t>(perm[s.f[t] - 1]);
  return {x, koszul_sign(degrees, order)};
}

Chain relabel(const Chain& c, const std::vector<int>& perm) {
  Chain out;
  for (const auto& [s, v] : c) {
    auto [x, sign] = relabel(s, perm);
    out.push_back({x, sign * v});
  }
  normalize(out);
  return out;
}

// ---------------------------------------------------------------- coherence

std::optional<Symbol> coherence_flatten(const Symbol& outer, const std::vector<Symbol>& inner) {
  if (static_cast<int>(inner.size()) != outer.k) throw IncompatibleInputs("need one inner element per label");
  std::array<std::array<std::uint8_t, kMaxPositions>, 32> fib{};
  std::array<int, 32> size{};
  for (int t = 0; t < outer.n; ++t) fib[outer.f[t]][size[outer.f[t]]++] = static_cast<std::uint8_t>(t);
  // Sort key (Ψ, block, position) packed into one integer.
  std::array<int, 2 * kMaxPositions> items{};
  std::array<int, 33> offsets{};
  int total = 0;
  for (int i = 0; i < outer.k; ++i) {
    const Symbol& y = inner[i];
    if (y.r + 1 != size[i + 1]) throw IncompatibleInputs("inner element lives at the wrong level");
    offsets[i + 1] = offsets[i] + y.k;
    if (total + y.n > kMaxPositions) throw BoundsExceeded("flattened symbol has too many positions");
    for (int t = 0; t < y.n; ++t) items[total++] = (fib[i + 1][y.phi[t]] << 16) | (i << 8) | t;
  }
  std::sort(items.begin(), items.begin() + total);
  Symbol out;
  out.k = static_cast<std::uint8_t>(offsets[outer.k]);
  out.r = outer.r;
  out.n = static_cast<std::uint8_t>(total);
  for (int x = 0; x < total; ++x) {
    const int psi = items[x] >> 16, block = (items[x] >> 8) & 0xff, pos = items[x] & 0xff;
    out.f[x] = static_cast<std::uint8_t>(offsets[block] + inner[block].f[pos]);
    out.phi[x] = outer.phi[psi];
  }
  if (!out.condition_d()) return std::nullopt;
  return out;
}

namespace {

int chain_degree(const Chain& c) {
  if (c.empty()) return 0;
  const int d = c.front().first.degree();
  for (const auto& t : c)
    if (t.first.degree() != d) throw IncompatibleInputs("chain is not homogeneous");
  return d;
}

}  // namespace

Chain box_functorial_apply(const Symbol& s, const std::vector<Chain>& g, const std::vector<int>& arities) {
  const int k = s.k;
  if (static_cast<int>(g.size()) != k || static_cast<int>(arities.size()) != k)
    throw IncompatibleInputs("one map per tensor factor is required");
  std::vector<int> q(k), deg(k);
  for (int i = 0; i < k; ++i) {
    q[i] = s.fiber_size(i + 1) - 1;
    deg[i] = chain_degree(g[i]);
  }
  // Sign of moving each g_b past the top simplices of the earlier factors.
  int e = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) e += (deg[b] & 1) * (q[a] & 1);
  // Components of each g_i at the level of its fiber, in kernel form.
  std::vector<Chain> comp(k);
  for (int i = 0; i < k; ++i) {
    for (const auto& [y, c] : g[i]) {
      if (y.k != arities[i]) throw IncompatibleInputs("map has the wrong arity");
      if (y.r != q[i]) continue;
      comp[i] = add(comp[i], kernel_lift(y), c);
    }
    if (comp[i].empty()) return {};
  }
  Chain out;
  std::vector<std::size_t> idx(k, 0);
  std::vector<Symbol> inner(k);
  for (;;) {
    long long coef = e % 2 ? -1 : 1;
    for (int i = 0; i < k; ++i) {
      inner[i] = comp[i][idx[i]].first;
      coef = checked_mul(coef, comp[i][idx[i]].second);
    }
    if (auto x = coherence_flatten(s, inner)) out.push_back({*x, coef});
    int i = k - 1;
    while (i >= 0 && ++idx[i] == comp[i].size()) idx[i--] = 0;
    if (i < 0) break;
  }
  normalize(out);
  return out;
}

ChainMap box_functorial_map(int k, int r, int qmax, const std::vector<Chain>& g, const std::vector<int>& arities,
                            ComplexityBound n_source, ComplexityBound n_target, int qmax_out) {
  int J = 0, shift = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    J += arities[i];
    shift += chain_degree(g[i]);
  }
  ChainMap map;
  map.degree_shift = shift;
  for (int q = k - 1; q <= qmax; ++q) {
    const int m = q + 1 - k;
    const auto src = enumerate_level_basis(k, q, r, n_source);
    const int tq = m + shift + J - 1;
    const auto tgt = (tq >= 0 && tq <= qmax_out) ? enumerate_level_basis(J, tq, r, n_target) : std::vector<Symbol>{};
    IntMatrix mat(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [x, v] : box_functorial_apply(src[c], g, arities)) {
        auto it = std::lower_bound(tgt.begin(), tgt.end(), x);
        if (it == tgt.end() || !(*it == x)) throw BoundsExceeded("image leaves the target truncation: " + x.label());
        mat.add(static_cast<std::size_t>(it - tgt.begin()), c, Integer(static_cast<long>(v)));
      }
    map.matrices[m] = std::move(mat);
  }
  return map;
}

}  // namespace cosop
