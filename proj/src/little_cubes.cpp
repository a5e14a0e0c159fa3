#include "cosop/little_cubes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cosop/errors.hpp"

namespace cosop {

namespace {

std::string q_str(const Rational& x) { return x.get_str(); }

Rational q_parse(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    const std::string t = j.get<std::string>();
    if (const auto dot = t.find('.'); dot != std::string::npos) {
      // Decimal literal: read it exactly as digits over a power of ten.
      const std::string frac = t.substr(dot + 1);
      Rational x;
      if (x.set_str(t.substr(0, dot) + frac + "/1" + std::string(frac.size(), '0'), 10) != 0)
        throw InvalidInput("bad rational " + t);
      x.canonicalize();
      return x;
    }
    Rational x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad rational " + j.get<std::string>());
    x.canonicalize();
    return x;
  }
  throw InvalidInput("rationals are given as strings like \"3/10\" or integers");
}

}  // namespace

// ---------------------------------------------------------------- TD maps

bool TDMap::valid() const {
  if (b <= 0) return false;
  for (const auto& x : a)
    if (x < 0 || x + b > 1) return false;
  return true;
}

TDMap TDMap::compose(const TDMap& inner) const {
  if (inner.dim() != dim()) throw IncompatibleInputs("dimension mismatch");
  TDMap out;
  out.a.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + b * inner.a[i];
  out.b = b * inner.b;
  return out;
}

nlohmann::json TDMap::to_json() const {
  nlohmann::json av = nlohmann::json::array();
  for (const auto& x : a) av.push_back(q_str(x));
  return {{"a", av}, {"b", q_str(b)}};
}

TDMap TDMap::from_json(const nlohmann::json& j) {
  TDMap m;
  for (const auto& x : j.at("a")) m.a.push_back(q_parse(x));
  m.b = q_parse(j.at("b"));
  return m;
}

bool disjoint_interiors(const TDMap& x, const TDMap& y) {
  for (int i = 0; i < x.dim(); ++i)
    if (x.a[i] + x.b <= y.a[i] || y.a[i] + y.b <= x.a[i]) return true;
  return false;
}

// ---------------------------------------------------------------- elements

void CubesElement::validate() const {
  if (n < 1) throw InvalidInput("cube dimension must be positive");
  for (const auto& c : cubes) {
    if (c.dim() != n) throw InvalidInput("cube of the wrong dimension");
    if (!c.valid()) throw InvalidInput("cube leaves the unit cube or has nonpositive scale");
  }
  for (std::size_t i = 0; i < cubes.size(); ++i)
    for (std::size_t j = i + 1; j < cubes.size(); ++j)
      if (!disjoint_interiors(cubes[i], cubes[j]))
        throw DisjointnessViolation("cubes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
}

nlohmann::json CubesElement::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cubes) cs.push_back(c.to_json());
  return {{"n", n}, {"cubes", cs}};
}

CubesElement CubesElement::from_json(const nlohmann::json& j) {
  CubesElement c;
  c.n = j.at("n").get<int>();
  for (const auto& x : j.at("cubes")) c.cubes.push_back(TDMap::from_json(x));
  c.validate();
  return c;
}

CubesElement CubesElement::unit(int n) {
  CubesElement c;
  c.n = n;
  c.cubes.push_back({std::vector<Rational>(n, Rational(0)), Rational(1)});
  return c;
}

CubesElement gamma_cubes(const CubesElement& c, const std::vector<CubesElement>& d) {
  if (d.size() != c.cubes.size()) throw IncompatibleInputs("one element per cube is required");
  CubesElement out;
  out.n = c.n;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].n != c.n) throw IncompatibleInputs("dimension mismatch");
    for (const auto& l : d[i].cubes) out.cubes.push_back(c.cubes[i].compose(l));
  }
  out.validate();
  return out;
}

CubesElement sigma_cubes(const CubesElement& c, const std::vector<int>& perm) {
  if (perm.size() != c.cubes.size()) throw IncompatibleInputs("permutation size differs from arity");
  std::vector<bool> seen(perm.size(), false);
  CubesElement out;
  out.n = c.n;
  for (int p : perm) {
    if (p < 1 || p > static_cast<int>(perm.size()) || seen[p - 1]) throw InvalidInput("not a permutation");
    seen[p - 1] = true;
    out.cubes.push_back(c.cubes[p - 1]);
  }
  return out;
}

std::vector<int> block_permutation(const std::vector<int>& perm, const std::vector<int>& block_sizes) {
  std::vector<int> start(block_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < block_sizes.size(); ++i) start[i + 1] = start[i] + block_sizes[i];
  std::vector<int> out;
  for (int p : perm)
    for (int x = 1; x <= block_sizes[p - 1]; ++x) out.push_back(start[p - 1] + x);
  return out;
}

std::vector<int> block_sum(const std::vector<std::vector<int>>& perms) {
  std::vector<int> out;
  int off = 0;
  for (const auto& p : perms) {
    for (int x : p) out.push_back(off + x);
    off += static_cast<int>(p.size());
  }
  return out;
}

// ---------------------------------------------------------------- intervals

IntervalsElement::IntervalsElement(std::vector<std::pair<Rational, Rational>> iv) : intervals(std::move(iv)) {
  for (const auto& [u, v] : intervals) {
    if (v <= u) throw DegenerateInterval("interval [" + q_str(u) + "," + q_str(v) + "] is degenerate");
    if (u < 0 || v > 1) throw InvalidInput("interval leaves [0,1]");
  }
  std::sort(intervals.begin(), intervals.end());
  for (std::size_t i = 1; i < intervals.size(); ++i)
    if (intervals[i].first < intervals[i - 1].second) throw DisjointnessViolation("intervals overlap");
}

std::vector<Rational> IntervalsElement::coordinates() const {
  std::vector<Rational> out;
  for (const auto& [u, v] : intervals) {
    out.push_back(u);
    out.push_back(v);
  }
  return out;
}

IntervalsElement gamma_intervals(const IntervalsElement& a, const std::vector<IntervalsElement>& b) {
  if (b.size() != a.intervals.size()) throw IncompatibleInputs("one element per interval is required");
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& [u, v] = a.intervals[i];
    const Rational len = v - u;
    for (const auto& [x, y] : b[i].intervals) out.push_back({u + len * x, u + len * y});
  }
  return IntervalsElement(std::move(out));
}

CubesElement intervals_to_cubes(const IntervalsElement& a) {
  CubesElement c;
  c.n = 1;
  for (const auto& [u, v] : a.intervals) c.cubes.push_back({{u}, v - u});
  return c;
}

CubesElement generated_operad_element(const IntervalsElement& a, const std::vector<int>& perm) {
  return sigma_cubes(intervals_to_cubes(a), perm);
}

// ---------------------------------------------------------------- random elements

CubesElement random_cubes(int n, int k, std::mt19937_64& rng) {
  if (n < 1 || k < 0) throw ValueOutOfRange("invalid cube parameters");
  int grid = 1;
  long cells = 1;
  while (cells < k) {
    ++grid;
    cells = 1;
    for (int i = 0; i < n; ++i) cells *= grid;
  }
  grid += static_cast<int>(rng() % 2);
  cells = 1;
  for (int i = 0; i < n; ++i) cells *= grid;
  std::vector<long> order(cells);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int D = 7;
  CubesElement c;
  c.n = n;
  for (int i = 0; i < k; ++i) {
    long cell = order[i];
    const int s = 1 + static_cast<int>(rng() % D);
    TDMap m;
    m.b = Rational(s, grid * D);
    for (int x = 0; x < n; ++x) {
      const int coord = static_cast<int>(cell % grid);
      cell /= grid;
      const int t = static_cast<int>(rng() % (D - s + 1));
      m.a.push_back(Rational(coord * D + t, grid * D));
    }
    for (auto& x : m.a) x.canonicalize();
    m.b.canonicalize();
    c.cubes.push_back(std::move(m));
  }
  c.validate();
  return c;
}

IntervalsElement random_intervals(int k, std::mt19937_64& rng) {
  const int D = 5, cells = k + 1;
  std::vector<std::pair<Rational, Rational>> iv;
  std::vector<int> order(cells);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < k; ++i) {
    const int s = 1 + static_cast<int>(rng() % D);
    const int t = static_cast<int>(rng() % (D - s + 1));
    Rational u(order[i] * D + t, cells * D), v(order[i] * D + t + s, cells * D);
    u.canonicalize();
    v.canonicalize();
    iv.push_back({u, v});
  }
  return IntervalsElement(std::move(iv));
}

// ---------------------------------------------------------------- axioms

nlohmann::json CubesAxiomReport::to_json() const {
  return {{"configurations", configurations}, {"instances", instances}, {"failures", failures},
          {"seed", seed},                     {"passed", passed()},     {"witnesses", witnesses}};
}

namespace {

std::vector<int> random_perm(int k, std::mt19937_64& rng) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

CubesAxiomReport verify_cubes_axioms(int max_dim, int max_arity, std::size_t per_configuration, std::uint64_t seed) {
  CubesAxiomReport rep;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  auto fail = [&](const std::string& what, nlohmann::json detail) {
    ++rep.failures;
    if (rep.witnesses.size() < 5) rep.witnesses.push_back({{"identity", what}, {"detail", std::move(detail)}});
  };
  for (int n = 1; n <= max_dim; ++n)
    for (int k = 1; k <= max_arity; ++k) {
      std::vector<int> j(k, 0);
      for (;;) {
        ++rep.configurations;
        int J = 0;
        for (int x : j) J += x;
        for (std::size_t inst = 0; inst < per_configuration; ++inst) {
          ++rep.instances;
          const CubesElement c = random_cubes(n, k, rng);
          std::vector<CubesElement> d;
          for (int x : j) d.push_back(random_cubes(n, x, rng));
          std::vector<int> sizes;
          std::vector<CubesElement> e;
          for (int l = 0; l < J; ++l) {
            const int i = static_cast<int>(rng() % (max_arity + 1));
            sizes.push_back(i);
            e.push_back(random_cubes(n, i, rng));
          }
          const CubesElement cd = gamma_cubes(c, d);
          // Units.
          if (gamma_cubes(CubesElement::unit(n), {c}) != c) fail("left unit", c.to_json());
          if (gamma_cubes(c, std::vector<CubesElement>(k, CubesElement::unit(n))) != c) fail("right unit", c.to_json());
          // Associativity.
          const CubesElement lhs = gamma_cubes(cd, e);
          std::vector<CubesElement> mids;
          std::size_t pos = 0;
          for (int m = 0; m < k; ++m) {
            std::vector<CubesElement> part(e.begin() + static_cast<long>(pos), e.begin() + static_cast<long>(pos + j[m]));
            pos += j[m];
            mids.push_back(gamma_cubes(d[m], part));
          }
          if (gamma_cubes(c, mids) != lhs) fail("associativity", {{"c", c.to_json()}});
          // Equivariance: γ(c·σ; d) = γ(c; d_{σ^{-1}}) · σ(j_1..j_k).
          const auto sigma = random_perm(k, rng);
          std::vector<int> inv(k);
          for (int l = 0; l < k; ++l) inv[sigma[l] - 1] = l + 1;
          std::vector<CubesElement> dinv;
          std::vector<int> sizes_inv;
          for (int i = 0; i < k; ++i) {
            dinv.push_back(d[inv[i] - 1]);
            sizes_inv.push_back(j[inv[i] - 1]);
          }
          const CubesElement e1 = gamma_cubes(sigma_cubes(c, sigma), d);
          const CubesElement e2 = sigma_cubes(gamma_cubes(c, dinv), block_permutation(sigma, sizes_inv));
          if (e1 != e2) fail("equivariance (outer)", {{"c", c.to_json()}, {"sigma", sigma}});
          // γ(c; d_1·τ_1, ...) = γ(c; d) · (τ_1 ⊕ ... ⊕ τ_k).
          std::vector<std::vector<int>> taus;
          std::vector<CubesElement> dt;
          for (int i = 0; i < k; ++i) {
            taus.push_back(random_perm(j[i], rng));
            dt.push_back(sigma_cubes(d[i], taus.back()));
          }
          if (gamma_cubes(c, dt) != sigma_cubes(cd, block_sum(taus))) fail("equivariance (inner)", {{"c", c.to_json()}});
          // Non-symmetric intervals: axioms and compatibility with C_1.
          if (n == 1) {
            const IntervalsElement a = random_intervals(k, rng);
            std::vector<IntervalsElement> b;
            for (int x : j) b.push_back(random_intervals(x, rng));
            const IntervalsElement ab = gamma_intervals(a, b);
            std::vector<CubesElement> bc;
            for (const auto& x : b) bc.push_back(intervals_to_cubes(x));
            if (intervals_to_cubes(ab) != gamma_cubes(intervals_to_cubes(a), bc)) fail("intervals into cubes", {});
            std::vector<IntervalsElement> ee;
            for (int s : sizes) ee.push_back(random_intervals(s, rng));
            std::vector<IntervalsElement> mid;
            std::size_t p2 = 0;
            for (int m = 0; m < k; ++m) {
              std::vector<IntervalsElement> part(ee.begin() + static_cast<long>(p2), ee.begin() + static_cast<long>(p2 + j[m]));
              p2 += j[m];
              mid.push_back(gamma_intervals(b[m], part));
            }
            if (gamma_intervals(ab, ee) != gamma_intervals(a, mid)) fail("intervals associativity", {});
            const IntervalsElement unit({{Rational(0), Rational(1)}});
            if (gamma_intervals(unit, {a}) != a ||
                gamma_intervals(a, std::vector<IntervalsElement>(k, unit)) != a)
              fail("intervals unit", {});
          }
        }
        int i = k - 1;
        while (i >= 0 && j[i] == max_arity) j[i--] = 0;
        if (i < 0) break;
        ++j[i];
      }
    }
  return rep;
}

// ---------------------------------------------------------------- components

nlohmann::json ComponentCount::to_json() const {
  return {{"n", n},
          {"k", k},
          {"resolution", resolution},
          {"samples", samples},
          {"edges", edges},
          {"components", components},
          {"refined_components", refined_components},
          {"method", "heuristic: grid samples joined by straight segments"}};
}

namespace {

// Configurations scaled by the resolution: cube i has integer corner a and
// integer side b.
struct Config {
  std::vector<std::vector<int>> a;
  std::vector<int> b;
};

struct Frac {
  long long num, den;  // den > 0
  bool operator<(const Frac& o) const { return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den; }
  bool operator<=(const Frac& o) const { return !(o < *this); }
};

// Whether cubes x, y stay interior-disjoint along the segment c0 -> c1.
bool segment_disjoint(const Config& c0, const Config& c1, int x, int y, int n) {
  // Each side condition α + β t >= 0 holds on an interval of [0, 1].
  std::vector<std::pair<Frac, Frac>> good;
  auto add = [&](long long alpha, long long beta) {
    // alpha + beta t >= 0
    if (beta == 0) {
      if (alpha >= 0) good.push_back({{0, 1}, {1, 1}});
      return;
    }
    if (beta > 0) {
      Frac lo{-alpha, beta};
      if (lo < Frac{0, 1}) lo = {0, 1};
      if (lo <= Frac{1, 1}) good.push_back({lo, {1, 1}});
    } else {
      Frac hi{alpha, -beta};
      if (Frac{1, 1} < hi) hi = {1, 1};
      if (Frac{0, 1} <= hi) good.push_back({{0, 1}, hi});
    }
  };
  for (int i = 0; i < n; ++i) {
    // a_y - a_x - b_x >= 0 and a_x - a_y - b_y >= 0, each linear in t.
    const long long s0 = c0.a[y][i] - c0.a[x][i] - c0.b[x], s1 = c1.a[y][i] - c1.a[x][i] - c1.b[x];
    add(s0, s1 - s0);
    const long long u0 = c0.a[x][i] - c0.a[y][i] - c0.b[y], u1 = c1.a[x][i] - c1.a[y][i] - c1.b[y];
    add(u0, u1 - u0);
  }
  std::sort(good.begin(), good.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  Frac reach{0, 1};
  bool started = false;
  for (const auto& [lo, hi] : good) {
    if (reach < lo) break;
    if (!started || reach < hi) reach = hi;
    started = true;
    if (!(reach < Frac{1, 1})) return true;
  }
  return false;
}

int components_at(int n, int k, int R, std::size_t* samples, std::size_t* edges) {
  // Every placement of one cube on the grid.
  std::vector<std::pair<std::vector<int>, int>> single;
  for (int b = 1; b <= R; ++b) {
    std::vector<int> a(n, 0);
    for (;;) {
      single.push_back({a, b});
      int i = n - 1;
      while (i >= 0 && a[i] == R - b) a[i--] = 0;
      if (i < 0) break;
      ++a[i];
    }
  }
  std::vector<Config> configs;
  std::vector<std::size_t> pick(k, 0);
  if (k == 0) {
    configs.push_back({});
  } else {
    for (;;) {
      Config c;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        c.a.push_back(single[pick[i]].first);
        c.b.push_back(single[pick[i]].second);
        for (int j = 0; j < i && ok; ++j) {
          bool sep = false;
          for (int x = 0; x < n; ++x)
            sep = sep || c.a[i][x] + c.b[i] <= c.a[j][x] || c.a[j][x] + c.b[j] <= c.a[i][x];
          ok = sep;
        }
      }
      if (ok) configs.push_back(std::move(c));
      int i = k - 1;
      while (i >= 0 && ++pick[i] == single.size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  const std::size_t N = configs.size();
  std::vector<std::size_t> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t e = 0;
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = s + 1; t < N; ++t) {
      if (find(s) == find(t)) continue;
      bool ok = true;
      for (int x = 0; x < k && ok; ++x)
        for (int y = x + 1; y < k && ok; ++y) ok = segment_disjoint(configs[s], configs[t], x, y, n);
      if (ok) {
        parent[find(s)] = find(t);
        ++e;
      }
    }
  int comps = 0;
  for (std::size_t s = 0; s < N; ++s) comps += find(s) == s;
  if (samples) *samples = N;
  if (edges) *edges = e;
  return comps;
}

}  // namespace

ComponentCount count_components(int n, int k, int resolution) {
  if (n < 1 || n > 3 || k < 0 || k > 3) throw ValueOutOfRange("component counting supports n <= 3, k <= 3");
  if (resolution < 1 || resolution > 12) throw ValueOutOfRange("resolution must be in 1..12");
  ComponentCount c;
  c.n = n;
  c.k = k;
  c.resolution = resolution;
  c.components = components_at(n, k, resolution, &c.samples, &c.edges);
  c.refined_components = components_at(n, k, resolution + 1, nullptr, nullptr);
  if (c.components != c.refined_components || c.samples == 0)
    throw ResolutionTooCoarse("component count " + std::to_string(c.components) + " at resolution " +
                              std::to_string(resolution) + " but " + std::to_string(c.refined_components) +
                              " at the next refinement");
  return c;
}

}  // namespace cosop
