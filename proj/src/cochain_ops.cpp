#include "cosop/cochain_ops.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>

#include "cosop/delta.hpp"
#include "cosop/errors.hpp"

namespace cosop {

bool Cochain::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Integer& v) { return v == 0; });
}

nlohmann::json Cochain::to_json() const {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : values) vals.push_back(v.get_str());
  return {{"level", level}, {"values", vals}};
}

namespace {

unsigned fiber_mask(const std::vector<int>& f, int value) {
  unsigned mask = 0;
  for (std::size_t t = 0; t < f.size(); ++t)
    if (f[t] == value) mask |= 1u << t;
  return mask;
}

std::vector<int> mask_positions(unsigned mask) {
  std::vector<int> out;
  for (int t = 0; mask >> t; ++t)
    if (mask >> t & 1u) out.push_back(t);
  return out;
}

Cochain angle_impl(const CochainSystem& cs, const std::vector<int>& f, int k, const std::vector<Cochain>& xs,
                   bool drop_renumbering) {
  if (static_cast<int>(xs.size()) != k) throw LevelMismatch("angle: expected " + std::to_string(k) + " inputs");
  const int m = static_cast<int>(f.size()) - 1;
  std::vector<unsigned> masks(k);
  for (int i = 0; i < k; ++i) {
    masks[i] = fiber_mask(f, i + 1);
    if (xs[i].level != std::popcount(masks[i]) - 1)
      throw LevelMismatch("angle: input " + std::to_string(i + 1) + " sits at the wrong level");
    if (drop_renumbering) masks[i] = (1u << std::popcount(masks[i])) - 1;
  }
  for (int v : f)
    if (v < 1 || v > k) throw LevelMismatch("angle: function value out of range");
  Cochain out = cs.zero(m);
  for (std::size_t s = 0; s < out.values.size(); ++s) {
    Integer prod = 1;
    for (int i = 0; i < k && prod != 0; ++i)
      prod *= xs[i].values[masks[i] ? cs.restrict_index(m, s, masks[i]) : 0];
    out.values[s] = prod;
  }
  return out;
}

}  // namespace

CochainSystem::CochainSystem(FiniteSimplicialSet w, int max_level) : w_(std::move(w)), max_level_(max_level) {
  if (max_level < 0 || max_level > 7) throw InfeasibleSize("cochain levels are limited to 0..7");
  tables_.resize(max_level + 1);
  for (int m = 0; m <= max_level; ++m) {
    const auto& sims = w_.simplices(m);
    tables_[m].resize(std::size_t{1} << (m + 1));
    for (unsigned mask = 1; mask < (1u << (m + 1)); ++mask) {
      const OrderedMap alpha(m + 1, mask_positions(mask));
      auto& row = tables_[m][mask];
      row.reserve(sims.size());
      for (const auto& s : sims) row.push_back(static_cast<std::uint32_t>(w_.simplex_index(w_.apply(alpha, s))));
    }
  }
}

void CochainSystem::check_level(int level) const {
  if (level < -1 || level > max_level_)
    throw IndexOutOfRange("level " + std::to_string(level) + " outside -1.." + std::to_string(max_level_));
}

std::size_t CochainSystem::rank(int level) const {
  if (level < -1) throw IndexOutOfRange("negative level");
  return level == -1 ? 1 : w_.simplices(level).size();
}

Cochain CochainSystem::zero(int level) const { return {level, std::vector<Integer>(rank(level), 0)}; }

Cochain CochainSystem::basis(int level, std::size_t index) const {
  Cochain c = zero(level);
  c.values.at(index) = 1;
  return c;
}

Cochain CochainSystem::unit() const { return {0, std::vector<Integer>(rank(0), 1)}; }

bool CochainSystem::normalized(const Cochain& x) const {
  if (x.level < 0) return true;
  const auto& sims = w_.simplices(x.level);
  for (std::size_t s = 0; s < sims.size(); ++s)
    if (!sims[s].nondegenerate() && x.values[s] != 0) return false;
  return true;
}

Simplex CochainSystem::restrict(const Simplex& sigma, const std::vector<int>& subset) const {
  if (subset.empty()) throw InvalidInput("restriction to the empty set is the augmentation point");
  return w_.apply(OrderedMap(sigma.dim() + 1, subset), sigma);
}

std::size_t CochainSystem::restrict_index(int level, std::size_t sigma, unsigned mask) const {
  check_level(level);
  return tables_[level].at(mask).at(sigma);
}

Cochain CochainSystem::push(const OrderedMap& phi, const Cochain& x) const {
  if (phi.source_size != x.level + 1) throw LevelMismatch("push: map source does not match the cochain level");
  const int target = phi.target_size - 1;
  Cochain out = zero(target);
  if (phi.source_size == 0) {
    std::fill(out.values.begin(), out.values.end(), x.values[0]);
    return out;
  }
  const auto& sims = w_.simplices(target);
  for (std::size_t t = 0; t < sims.size(); ++t) out.values[t] = x.values[w_.simplex_index(w_.apply(phi, sims[t]))];
  return out;
}

Cochain CochainSystem::coface(const Cochain& x, int i) const { return push(cosop::coface(x.level, i), x); }

Cochain CochainSystem::codegeneracy(const Cochain& x, int i) const {
  return push(cosop::codegeneracy(x.level, i), x);
}

Cochain CochainSystem::cup(const Cochain& x, const Cochain& y) const {
  const int p = x.level, q = y.level;
  if (p < 0 || q < 0) throw LevelMismatch("cup needs nonnegative levels");
  const int m = p + q;
  check_level(m);
  const unsigned front = (1u << (p + 1)) - 1;
  const unsigned back = ((1u << (q + 1)) - 1) << p;
  Cochain out = zero(m);
  for (std::size_t s = 0; s < out.values.size(); ++s)
    out.values[s] = x.values[restrict_index(m, s, front)] * y.values[restrict_index(m, s, back)];
  return out;
}

Cochain CochainSystem::sqcup(const Cochain& x, const Cochain& y) const {
  const int p = x.level, q = y.level;
  if (p < 0 || q < 0) throw LevelMismatch("sqcup needs nonnegative levels");
  const int m = p + q + 1;
  check_level(m);
  const unsigned front = (1u << (p + 1)) - 1;
  const unsigned back = ((1u << (q + 1)) - 1) << (p + 1);
  Cochain out = zero(m);
  for (std::size_t s = 0; s < out.values.size(); ++s)
    out.values[s] = x.values[restrict_index(m, s, front)] * y.values[restrict_index(m, s, back)];
  return out;
}

Cochain CochainSystem::angle(const std::vector<int>& f, int k, const std::vector<Cochain>& xs) const {
  check_level(static_cast<int>(f.size()) - 1);
  return angle_impl(*this, f, k, xs, false);
}

std::string CochainSystem::simplex_label(int level, std::size_t index) const {
  if (level == -1) return "pt";
  const auto& s = w_.simplices(level).at(index);
  std::string out = w_.generators()[s.generator].name;
  if (!s.nondegenerate()) {
    out += "*s[";
    for (std::size_t i = 0; i < s.degeneracy.values.size(); ++i)
      out += (i ? "," : "") + std::to_string(s.degeneracy.values[i]);
    out += "]";
  }
  return out;
}

AngleFn corrupted_angle() {
  return [](const CochainSystem& cs, const std::vector<int>& f, int k, const std::vector<Cochain>& xs) {
    cs.angle(f, k, xs);  // same validation
    return angle_impl(cs, f, k, xs, true);
  };
}

// ---------------------------------------------------------------------------

bool CochainIdentityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed(); });
}

const AxiomCheck& CochainIdentityReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InvalidInput("no check named " + name);
}

nlohmann::json CochainIdentityReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"instances", c.instances},
                   {"failures", c.failures},
                   {"passed", c.passed()},
                   {"witnesses", c.witnesses}});
  return {{"space", space},
          {"max_level", max_level},
          {"ternary_level", ternary_level},
          {"passed", passed()},
          {"checks", arr}};
}

namespace {

constexpr std::size_t kWitnesses = 5;

/// All functions [m] -> {1..k} in lexicographic order.
std::vector<std::vector<int>> all_functions(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(m + 1, 1);
  while (true) {
    out.push_back(f);
    int i = m;
    while (i >= 0 && f[i] == k) f[i--] = 1;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

int fiber_level(const std::vector<int>& f, int value) {
  return static_cast<int>(std::count(f.begin(), f.end(), value)) - 1;
}

/// φ restricted to f^{-1}(i) -> g^{-1}(i), both renumbered.
OrderedMap restrict_map(const OrderedMap& phi, const std::vector<int>& f, const std::vector<int>& g, int i) {
  std::vector<int> gpos(g.size(), -1);
  int n = 0;
  for (std::size_t t = 0; t < g.size(); ++t)
    if (g[t] == i) gpos[t] = n++;
  std::vector<int> vals;
  for (std::size_t t = 0; t < f.size(); ++t)
    if (f[t] == i) vals.push_back(gpos[phi(static_cast<int>(t))]);
  return OrderedMap(n, std::move(vals));
}

/// g restricted to the preimage of `keep`, relabelled through `relabel`.
std::vector<int> sub_function(const std::vector<int>& g, const std::vector<int>& keep, const std::vector<int>& relabel) {
  std::vector<int> out;
  for (int v : g)
    if (std::find(keep.begin(), keep.end(), v) != keep.end()) out.push_back(relabel[v]);
  return out;
}

class Runner {
 public:
  Runner(const CochainSystem& cs, CochainIdentityReport& report) : cs_(cs), report_(report) {}

  void begin(const std::string& name) {
    report_.checks.push_back({});
    report_.checks.back().name = name;
    start_ = std::chrono::steady_clock::now();
  }
  void end() {
    report_.checks.back().seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  template <class W>
  void expect(bool ok, W&& witness) {
    auto& c = report_.checks.back();
    ++c.instances;
    ++c.available;
    if (ok) return;
    ++c.failures;
    if (c.witnesses.size() < kWitnesses) c.witnesses.push_back(witness());
  }
  nlohmann::json basis_label(int level, std::size_t i) const {
    return {{"level", level}, {"simplex", cs_.simplex_label(level, i)}};
  }

 private:
  const CochainSystem& cs_;
  CochainIdentityReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

CochainIdentityReport verify_cochain_identities(const FiniteSimplicialSet& w, const std::string& name,
                                                const CochainIdentityPolicy& policy) {
  return verify_cochain_identities(
      w, name, policy,
      [](const CochainSystem& cs, const std::vector<int>& f, int k, const std::vector<Cochain>& xs) {
        return cs.angle(f, k, xs);
      });
}

CochainIdentityReport verify_cochain_identities(const FiniteSimplicialSet& w, const std::string& name,
                                                const CochainIdentityPolicy& policy, const AngleFn& angle) {
  const int L = policy.max_level;
  const int L3 = std::min(policy.ternary_level, L);
  const CochainSystem cs(w, L);
  CochainIdentityReport report;
  report.space = name;
  report.max_level = L;
  report.ternary_level = L3;
  Runner run(cs, report);
  auto B = [&](int level, std::size_t i) { return cs.basis(level, i); };
  auto lab = [&](int level, std::size_t i) { return run.basis_label(level, i); };

  // Loop over basis pairs (x, y) with levels p, q satisfying pred(p, q).
  auto pairs = [&](auto pred, auto body) {
    for (int p = 0; p <= L; ++p)
      for (int q = 0; q <= L; ++q) {
        if (!pred(p, q)) continue;
        for (std::size_t a = 0; a < cs.rank(p); ++a)
          for (std::size_t b = 0; b < cs.rank(q); ++b) body(p, q, a, b, B(p, a), B(q, b));
      }
  };

  run.begin("functoriality");
  for (int a = -1; a <= std::min(L, 3); ++a)
    for (int b = -1; b <= std::min(L, 3); ++b)
      for (int c = -1; c <= std::min(L, 3); ++c)
        for (const auto& phi : all_ordered_maps(a + 1, b + 1))
          for (const auto& psi : all_ordered_maps(b + 1, c + 1))
            for (std::size_t i = 0; i < cs.rank(a); ++i) {
              const auto x = B(a, i);
              run.expect(cs.push(compose(psi, phi), x) == cs.push(psi, cs.push(phi, x)), [&] {
                return nlohmann::json{{"x", lab(a, i)}, {"phi", phi.to_string()}, {"psi", psi.to_string()}};
              });
            }
  run.end();

  run.begin("cup_coface");
  pairs([&](int p, int q) { return p + q + 1 <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          const auto z = cs.cup(x, y);
          for (int i = 0; i <= p + q + 1; ++i) {
            const auto rhs = i <= p ? cs.cup(cs.coface(x, i), y) : cs.cup(x, cs.coface(y, i - p));
            run.expect(cs.coface(z, i) == rhs, [&] {
              return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}, {"i", i}};
            });
          }
        });
  run.end();

  run.begin("cup_coface_middle");
  pairs([&](int p, int q) { return p + q + 1 <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          run.expect(cs.cup(cs.coface(x, p + 1), y) == cs.cup(x, cs.coface(y, 0)),
                     [&] { return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}}; });
        });
  run.end();

  run.begin("cup_codegeneracy");
  pairs([&](int p, int q) { return p + q >= 1 && p + q <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          const auto z = cs.cup(x, y);
          for (int i = 0; i < p + q; ++i) {
            const auto rhs = i <= p - 1 ? cs.cup(cs.codegeneracy(x, i), y) : cs.cup(x, cs.codegeneracy(y, i - p));
            run.expect(cs.codegeneracy(z, i) == rhs, [&] {
              return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}, {"i", i}};
            });
          }
        });
  run.end();

  run.begin("cup_unit");
  for (int p = 0; p <= L; ++p)
    for (std::size_t a = 0; a < cs.rank(p); ++a) {
      const auto x = B(p, a);
      run.expect(cs.cup(cs.unit(), x) == x && cs.cup(x, cs.unit()) == x,
                 [&] { return nlohmann::json{{"x", lab(p, a)}}; });
    }
  run.end();

  run.begin("cup_associative");
  pairs([&](int p, int q) { return p + q <= L3; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          const auto xy = cs.cup(x, y);
          for (int r = 0; p + q + r <= L3; ++r)
            for (std::size_t c = 0; c < cs.rank(r); ++c) {
              const auto z = B(r, c);
              run.expect(cs.cup(xy, z) == cs.cup(x, cs.cup(y, z)), [&] {
                return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}, {"z", lab(r, c)}};
              });
            }
        });
  run.end();

  run.begin("cup_preserves_normalized");
  pairs([&](int p, int q) { return p + q <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          if (!cs.normalized(x) || !cs.normalized(y)) return;
          run.expect(cs.normalized(cs.cup(x, y)), [&] { return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}}; });
        });
  run.end();

  run.begin("sqcup_coface");
  pairs([&](int p, int q) { return p + q + 2 <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          const auto z = cs.sqcup(x, y);
          for (int i = 0; i <= p + q + 2; ++i) {
            const auto rhs = i <= p + 1 ? cs.sqcup(cs.coface(x, i), y) : cs.sqcup(x, cs.coface(y, i - p - 1));
            run.expect(cs.coface(z, i) == rhs, [&] {
              return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}, {"i", i}};
            });
          }
        });
  run.end();

  run.begin("sqcup_codegeneracy");
  pairs([&](int p, int q) { return p + q + 1 <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          const auto z = cs.sqcup(x, y);
          for (int i = 0; i <= p + q; ++i) {
            if (i == p) continue;
            const auto rhs =
                i < p ? cs.sqcup(cs.codegeneracy(x, i), y) : cs.sqcup(x, cs.codegeneracy(y, i - p - 1));
            run.expect(cs.codegeneracy(z, i) == rhs, [&] {
              return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}, {"i", i}};
            });
          }
        });
  run.end();

  run.begin("sqcup_associative");
  pairs([&](int p, int q) { return p + q + 1 <= L3; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          const auto xy = cs.sqcup(x, y);
          for (int r = 0; p + q + r + 2 <= L3; ++r)
            for (std::size_t c = 0; c < cs.rank(r); ++c) {
              const auto z = B(r, c);
              run.expect(cs.sqcup(xy, z) == cs.sqcup(x, cs.sqcup(y, z)), [&] {
                return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}, {"z", lab(r, c)}};
              });
            }
        });
  run.end();

  run.begin("sqcup_unit");
  for (int p = 0; p + 1 <= L; ++p)
    for (std::size_t a = 0; a < cs.rank(p); ++a) {
      const auto x = B(p, a);
      const auto e = cs.unit();
      run.expect(cs.codegeneracy(cs.sqcup(x, e), p) == x && cs.codegeneracy(cs.sqcup(e, x), 0) == x,
                 [&] { return nlohmann::json{{"x", lab(p, a)}}; });
    }
  run.end();

  run.begin("sqcup_from_cup");
  pairs([&](int p, int q) { return p + q + 1 <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          const auto s = cs.sqcup(x, y);
          run.expect(s == cs.cup(cs.coface(x, p + 1), y) && s == cs.cup(x, cs.coface(y, 0)),
                     [&] { return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}}; });
        });
  run.end();

  run.begin("cup_from_sqcup");
  pairs([&](int p, int q) { return p + q + 1 <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          run.expect(cs.cup(x, y) == cs.codegeneracy(cs.sqcup(x, y), p),
                     [&] { return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}}; });
        });
  run.end();

  run.begin("sqcup_is_angle");
  pairs([&](int p, int q) { return p + q + 1 <= L; },
        [&](int p, int q, std::size_t a, std::size_t b, const Cochain& x, const Cochain& y) {
          std::vector<int> f(p + 1, 1);
          f.insert(f.end(), q + 1, 2);
          run.expect(angle(cs, f, 2, {x, y}) == cs.sqcup(x, y),
                     [&] { return nlohmann::json{{"x", lab(p, a)}, {"y", lab(q, b)}}; });
        });
  run.end();

  // Loop over every basis tuple matching the fibers of f.
  auto tuples = [&](const std::vector<int>& f, int k, auto body) {
    std::vector<int> levels(k);
    for (int i = 0; i < k; ++i) levels[i] = fiber_level(f, i + 1);
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<Cochain> xs;
      for (int i = 0; i < k; ++i) xs.push_back(B(levels[i], idx[i]));
      body(xs, levels, idx);
      int i = k - 1;
      while (i >= 0 && idx[i] + 1 == cs.rank(levels[i])) idx[i--] = 0;
      if (i < 0) break;
      ++idx[i];
    }
  };
  auto tuple_json = [&](const std::vector<int>& levels, const std::vector<std::size_t>& idx) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < idx.size(); ++i) arr.push_back(lab(levels[i], idx[i]));
    return arr;
  };
  auto fn_of = [](const std::vector<int>& g, const OrderedMap& phi) {
    std::vector<int> f(phi.source_size);
    for (int t = 0; t < phi.source_size; ++t) f[t] = g[phi(t)];
    return f;
  };

  auto naturality = [&](int k, int cap) {
    for (int mp = -1; mp <= cap; ++mp) {
      const auto gs = mp >= 0 ? all_functions(mp, k) : std::vector<std::vector<int>>{{}};
      for (const auto& g : gs)
        for (int m = -1; m <= cap; ++m)
          for (const auto& phi : all_ordered_maps(m + 1, mp + 1)) {
            const auto f = fn_of(g, phi);
            std::vector<OrderedMap> parts;
            for (int i = 1; i <= k; ++i) parts.push_back(restrict_map(phi, f, g, i));
            tuples(f, k, [&](const std::vector<Cochain>& xs, const auto& levels, const auto& idx) {
              std::vector<Cochain> pushed;
              for (int i = 0; i < k; ++i) pushed.push_back(cs.push(parts[i], xs[i]));
              run.expect(cs.push(phi, angle(cs, f, k, xs)) == angle(cs, g, k, pushed), [&] {
                return nlohmann::json{{"g", g}, {"phi", phi.to_string()}, {"inputs", tuple_json(levels, idx)}};
              });
            });
          }
    }
  };

  run.begin("angle_naturality");
  naturality(2, L);
  run.end();

  run.begin("angle_symmetry");
  for (int m = -1; m <= L; ++m) {
    const auto fs = m >= 0 ? all_functions(m, 2) : std::vector<std::vector<int>>{{}};
    for (const auto& f : fs) {
      std::vector<int> tf(f);
      for (int& v : tf) v = 3 - v;
      tuples(f, 2, [&](const std::vector<Cochain>& xs, const auto& levels, const auto& idx) {
        run.expect(angle(cs, f, 2, xs) == angle(cs, tf, 2, {xs[1], xs[0]}),
                   [&] { return nlohmann::json{{"f", f}, {"inputs", tuple_json(levels, idx)}}; });
      });
    }
  }
  run.end();

  run.begin("angle_associativity");
  for (int m = -1; m <= L3; ++m) {
    const auto gs = m >= 0 ? all_functions(m, 3) : std::vector<std::vector<int>>{{}};
    for (const auto& g : gs) {
      const auto g1 = sub_function(g, {1, 2}, {0, 1, 2, 0});
      const auto g2 = sub_function(g, {2, 3}, {0, 0, 1, 2});
      std::vector<int> ag(g), bg(g);
      for (int& v : ag) v = v <= 2 ? 1 : 2;
      for (int& v : bg) v = v == 1 ? 1 : 2;
      tuples(g, 3, [&](const std::vector<Cochain>& xs, const auto& levels, const auto& idx) {
        const auto lhs = angle(cs, ag, 2, {angle(cs, g1, 2, {xs[0], xs[1]}), xs[2]});
        const auto rhs = angle(cs, bg, 2, {xs[0], angle(cs, g2, 2, {xs[1], xs[2]})});
        run.expect(lhs == rhs, [&] { return nlohmann::json{{"g", g}, {"inputs", tuple_json(levels, idx)}}; });
      });
    }
  }
  run.end();

  run.begin("angle_unit");
  for (int m = 0; m <= L; ++m) {
    const std::vector<int> ones(m + 1, 1), twos(m + 1, 2);
    for (std::size_t a = 0; a < cs.rank(m); ++a) {
      const auto x = B(m, a);
      run.expect(angle(cs, ones, 2, {x, cs.epsilon()}) == x && angle(cs, twos, 2, {cs.epsilon(), x}) == x,
                 [&] { return nlohmann::json{{"x", lab(m, a)}}; });
    }
  }
  run.end();

  // Three-input analogs of the binary statements.
  run.begin("angle_naturality_ternary");
  naturality(3, L3);
  run.end();

  run.begin("angle_symmetry_ternary");
  for (int m = -1; m <= L3; ++m) {
    const auto gs = m >= 0 ? all_functions(m, 3) : std::vector<std::vector<int>>{{}};
    for (const auto& g : gs)
      for (const auto& pi : permutations(3)) {
        // ⟨π∘g⟩(x_{π^{-1}(1)}, ...) = ⟨g⟩(x_1, x_2, x_3)
        std::vector<int> pg(g);
        for (int& v : pg) v = pi[v - 1];
        tuples(g, 3, [&](const std::vector<Cochain>& xs, const auto& levels, const auto& idx) {
          std::vector<Cochain> permuted(3);
          for (int i = 0; i < 3; ++i) permuted[pi[i] - 1] = xs[i];
          run.expect(angle(cs, g, 3, xs) == angle(cs, pg, 3, permuted), [&] {
            return nlohmann::json{{"g", g}, {"pi", pi}, {"inputs", tuple_json(levels, idx)}};
          });
        });
      }
  }
  run.end();

  run.begin("angle_unit_ternary");
  for (int m = -1; m <= L3; ++m) {
    const auto gs = m >= 0 ? all_functions(m, 3) : std::vector<std::vector<int>>{{}};
    for (const auto& g : gs)
      for (int skip = 1; skip <= 3; ++skip) {
        if (std::count(g.begin(), g.end(), skip)) continue;
        std::vector<int> relabel{0, 1, 2, 3};
        for (int v = skip + 1; v <= 3; ++v) relabel[v] = v - 1;
        std::vector<int> keep;
        for (int v = 1; v <= 3; ++v)
          if (v != skip) keep.push_back(v);
        const auto h = sub_function(g, keep, relabel);
        tuples(g, 3, [&](const std::vector<Cochain>& xs, const auto& levels, const auto& idx) {
          std::vector<Cochain> rest;
          for (int i = 0; i < 3; ++i)
            if (i != skip - 1) rest.push_back(xs[i]);
          run.expect(angle(cs, g, 3, xs) == angle(cs, h, 2, rest), [&] {
            return nlohmann::json{{"g", g}, {"empty_fiber", skip}, {"inputs", tuple_json(levels, idx)}};
          });
        });
      }
  }
  run.end();

  run.begin("angle_ternary_from_binary");
  for (int m = -1; m <= L3; ++m) {
    const auto gs = m >= 0 ? all_functions(m, 3) : std::vector<std::vector<int>>{{}};
    for (const auto& g : gs) {
      const auto g1 = sub_function(g, {1, 2}, {0, 1, 2, 0});
      std::vector<int> ag(g);
      for (int& v : ag) v = v <= 2 ? 1 : 2;
      tuples(g, 3, [&](const std::vector<Cochain>& xs, const auto& levels, const auto& idx) {
        run.expect(angle(cs, g, 3, xs) == angle(cs, ag, 2, {angle(cs, g1, 2, {xs[0], xs[1]}), xs[2]}),
                   [&] { return nlohmann::json{{"g", g}, {"inputs", tuple_json(levels, idx)}}; });
      });
    }
  }
  run.end();

  return report;
}

}  // namespace cosop
