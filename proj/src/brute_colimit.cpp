#include "cosop/brute_colimit.hpp"

#include <bit>
#include <set>
#include <unordered_map>

#include "cosop/conormalization.hpp"
#include "cosop/errors.hpp"
#include "cosop/smith.hpp"

namespace cosop {

namespace {

struct Gen {
  Symbol obj;  // f and φ only; no (b) or (d) requirement
  std::uint32_t mask = 0;
  bool operator==(const Gen& o) const { return mask == o.mask && obj == o.obj; }
};

struct GenHash {
  std::size_t operator()(const Gen& g) const { return SymbolHash{}(g.obj) * 31 + g.mask; }
};

// All objects (f onto, φ monotone into [r]) of a fixed size.
std::vector<Symbol> objects(int k, int size, int r, ComplexityBound n) {
  if (size < k) return {};
  std::vector<Symbol> out;
  std::vector<int> f(size, 1);
  for (;;) {
    std::uint32_t seen = 0;
    for (int x : f) seen |= 1u << x;
    bool onto = true;
    for (int i = 1; i <= k; ++i) onto = onto && (seen & (1u << i));
    if (onto && n.admits(complexity(f))) {
      for (const auto& phi : all_ordered_maps(size, r + 1)) {
        Symbol s;
        s.k = static_cast<std::uint8_t>(k);
        s.r = static_cast<std::uint8_t>(r);
        s.n = static_cast<std::uint8_t>(size);
        for (int t = 0; t < size; ++t) {
          s.f[t] = static_cast<std::uint8_t>(f[t]);
          s.phi[t] = static_cast<std::uint8_t>(phi.values[t]);
        }
        out.push_back(s);
      }
    }
    int i = size - 1;
    while (i >= 0 && f[i] == k) f[i--] = 1;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

bool meets_every_fiber(const Symbol& s, std::uint32_t mask) {
  std::uint32_t seen = 0;
  for (int t = 0; t < s.n; ++t)
    if (mask & (1u << t)) seen |= 1u << s.f[t];
  for (int i = 1; i <= s.k; ++i)
    if (!(seen & (1u << i))) return false;
  return true;
}

struct Cell {
  std::vector<Gen> gens;
  std::unordered_map<Gen, std::size_t, GenHash> index;
  IntMatrix relations;
  std::vector<Symbol> canonical;
  IntMatrix canon_matrix;  // gens x canonical
};

Cell build_cell(int k, int r, int m, int bound, ComplexityBound n) {
  Cell c;
  const int need = m + k;
  std::vector<std::vector<Symbol>> objs(bound + 1);
  for (int size = k; size <= bound; ++size) {
    objs[size] = objects(k, size, r, n);
    for (const auto& o : objs[size])
      for (std::uint32_t mask = 0; mask < (1u << size); ++mask)
        if (std::popcount(mask) == need && meets_every_fiber(o, mask)) {
          c.index.emplace(Gen{o, mask}, c.gens.size());
          c.gens.push_back({o, mask});
        }
  }
  std::vector<IntMatrix::Column> rels;
  auto relation = [&](const Gen& src, const std::optional<Gen>& dst) {
    IntMatrix::Column col{{c.index.at(src), Integer(1)}};
    if (dst) {
      auto it = c.index.find(*dst);
      if (it == c.index.end()) return;  // target object beyond the bound
      if (it->second == col[0].row) return;
      col.push_back({it->second, Integer(-1)});
      if (col[1].row < col[0].row) std::swap(col[0], col[1]);
    }
    rels.push_back(std::move(col));
  };
  for (const Gen& g : c.gens) {
    const Symbol& o = g.obj;
    const int size = o.n;
    // Codegeneracy s^j merging positions j and j+1.
    for (int j = 0; j + 1 < size; ++j) {
      if (o.f[j] != o.f[j + 1] || o.phi[j] != o.phi[j + 1]) continue;
      if ((g.mask >> j & 1u) && (g.mask >> (j + 1) & 1u)) {
        relation(g, std::nullopt);
        continue;
      }
      Gen h;
      h.obj = o;
      h.obj.n = static_cast<std::uint8_t>(size - 1);
      for (int t = j + 1; t + 1 < size; ++t) {
        h.obj.f[t] = o.f[t + 1];
        h.obj.phi[t] = o.phi[t + 1];
      }
      h.obj.f[size - 1] = 0;
      h.obj.phi[size - 1] = 0;
      const std::uint32_t low = g.mask & ((1u << (j + 1)) - 1);
      const std::uint32_t high = g.mask >> (j + 2);
      h.mask = low | (high << (j + 1)) | ((g.mask >> (j + 1) & 1u) << j);
      relation(g, h);
    }
    // Coface d^j into a larger object: insert a position at j.
    if (size + 1 > bound) continue;
    for (int j = 0; j <= size; ++j) {
      const int lo = j ? o.phi[j - 1] : 0;
      const int hi = j < size ? o.phi[j] : r;
      for (int lab = 1; lab <= k; ++lab)
        for (int v = lo; v <= hi; ++v) {
          Gen h;
          h.obj = o;
          h.obj.n = static_cast<std::uint8_t>(size + 1);
          for (int t = size; t > j; --t) {
            h.obj.f[t] = o.f[t - 1];
            h.obj.phi[t] = o.phi[t - 1];
          }
          h.obj.f[j] = static_cast<std::uint8_t>(lab);
          h.obj.phi[j] = static_cast<std::uint8_t>(v);
          if (!n.admits(h.obj.complexity())) continue;
          const std::uint32_t low = g.mask & ((1u << j) - 1);
          h.mask = low | ((g.mask >> j) << (j + 1));
          relation(g, h);
        }
    }
  }
  c.relations = IntMatrix(c.gens.size(), rels.size());
  for (std::size_t i = 0; i < rels.size(); ++i) c.relations.set_column(i, std::move(rels[i]));
  if (need >= 1 && need <= kMaxPositions) c.canonical = enumerate_level_basis(k, need - 1, r, n);
  c.canon_matrix = IntMatrix(c.gens.size(), c.canonical.size());
  for (std::size_t i = 0; i < c.canonical.size(); ++i)
    c.canon_matrix.set(c.index.at(Gen{c.canonical[i], (1u << need) - 1}), i, 1);
  return c;
}

// Koszul tensor differential of a generator, with faces of the fiber
// simplices that become empty dropped.
std::vector<std::pair<Gen, int>> tensor_boundary(const Gen& g) {
  std::vector<std::pair<Gen, int>> out;
  const Symbol& o = g.obj;
  int before = 0;  // sum of (|x_j| - 1) for j < i
  for (int i = 1; i <= o.k; ++i) {
    std::vector<int> pos;
    for (int t = 0; t < o.n; ++t)
      if (o.f[t] == i && (g.mask >> t & 1u)) pos.push_back(t);
    if (pos.size() >= 2)
      for (std::size_t u = 0; u < pos.size(); ++u)
        out.push_back({Gen{o, g.mask & ~(1u << pos[u])}, (before + static_cast<int>(u)) % 2 ? -1 : 1});
    before += static_cast<int>(pos.size()) - 1;
  }
  return out;
}

}  // namespace

nlohmann::json BruteColimitReport::to_json() const {
  return {{"k", k},
          {"r", r},
          {"internal_degree", m},
          {"bound", bound},
          {"generators", generators},
          {"relations", relations},
          {"relation_rank", relation_rank},
          {"canonical", canonical},
          {"canonical_is_basis", canonical_is_basis},
          {"boundary_matches", boundary_matches}};
}

BruteColimitReport brute_force_colimit(int k, int r, int m, int bound, ComplexityBound n) {
  if (k < 1 || r < 0 || m < 0) throw ValueOutOfRange("invalid colimit cell");
  if (bound < m + k) throw WindowTooSmall("object bound below the canonical size");
  if (bound > 10) throw BoundsExceeded("object bound too large for the explicit quotient");
  BruteColimitReport rep;
  rep.k = k;
  rep.r = r;
  rep.m = m;
  rep.bound = bound;
  const Cell c = build_cell(k, r, m, bound, n);
  rep.generators = c.gens.size();
  rep.relations = c.relations.cols();
  rep.canonical = c.canonical.size();
  rep.relation_rank = rank(c.relations);
  const auto factors = invariant_factors(c.relations.hstack(c.canon_matrix));
  bool units = true;
  for (const auto& d : factors) units = units && abs(d) == 1;
  rep.canonical_is_basis = units && factors.size() == c.gens.size() && rep.relation_rank + rep.canonical == c.gens.size();
  if (m == 0 || !rep.canonical_is_basis) {
    rep.boundary_matches = rep.canonical_is_basis;
    return rep;
  }
  // Residual of the tensor differential minus the predicted boundary must lie
  // in the relation lattice of the lower cell. The quotient there is free, so
  // a rank test suffices.
  const Cell low = build_cell(k, r, m - 1, bound, n);
  IntMatrix residual(low.gens.size(), c.canonical.size());
  for (std::size_t i = 0; i < c.canonical.size(); ++i) {
    const Gen g{c.canonical[i], (1u << (m + k)) - 1};
    for (const auto& [h, s] : tensor_boundary(g)) residual.add(low.index.at(h), i, s);
    for (const auto& [x, v] : internal_boundary(c.canonical[i]))
      residual.add(low.index.at(Gen{x, (1u << (m + k - 1)) - 1}), i, Integer(static_cast<long>(-v)));
  }
  const std::size_t low_rank = rank(low.relations);
  const auto low_factors = invariant_factors(low.relations.hstack(low.canon_matrix));
  bool low_free = low_factors.size() == low.gens.size();
  for (const auto& d : low_factors) low_free = low_free && abs(d) == 1;
  rep.boundary_matches = low_free && rank(low.relations.hstack(residual)) == low_rank;
  return rep;
}

bool brute_force_colimit_stable(int k, int r, int m, ComplexityBound n) {
  const int b = m + k + 1;
  return brute_force_colimit(k, r, m, b, n).ok() && brute_force_colimit(k, r, m, b + 1, n).ok();
}

}  // namespace cosop

namespace cosop {

nlohmann::json BasisReconciliation::to_json() const {
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [key, v] : counts) c[key] = {{"expected", v.first}, {"found", v.second}};
  return {{"k_max", k_max},         {"q_max", q_max},     {"functions", functions},
          {"basis_elements", basis_elements}, {"mismatches", mismatches}, {"counts", c},
          {"witnesses", witnesses}, {"ok", ok()}};
}

BasisReconciliation reconcile_basis(int k_max, int q_max) {
  if (k_max < 1 || q_max < 0) throw ValueOutOfRange("reconcile_basis: need k_max >= 1 and q_max >= 0");
  if (q_max + 1 > kMaxPositions) throw BoundsExceeded("reconcile_basis: q_max too large");
  BasisReconciliation rep;
  rep.k_max = k_max;
  rep.q_max = q_max;
  for (int k = 1; k <= k_max; ++k) {
    for (int q = 0; q <= q_max; ++q) {
      const int top = q + 2;
      std::map<std::vector<int>, std::vector<std::set<std::string>>> want;
      for (int r = 0; r <= top; ++r)
        for (const auto& s : enumerate_symbols(k, q, r)) {
          auto& slot = want[s.f_values()];
          slot.resize(top + 1);
          slot[r].insert(s.label());
        }
      std::vector<int> f(q + 1, 1);
      while (true) {
        if (static_cast<int>(std::set<int>(f.begin(), f.end()).size()) == k) {
          ++rep.functions;
          auto& expected = want[f];
          expected.resize(top + 1);
          const auto g = box_cosimplicial_group_for(f, top);
          const auto cok = conormalize_cokernel_form(g);
          for (int r = 0; r <= top; ++r) {
            const auto& pr = cok.presentation[r];
            std::set<std::string> got;
            for (auto i : pr.chosen) got.insert(g.labels[r][i]);
            auto& cell = rep.counts["k" + std::to_string(k) + "q" + std::to_string(q) + "r" + std::to_string(r)];
            cell.first += expected[r].size();
            cell.second += pr.reduce.rows();
            rep.basis_elements += pr.reduce.rows();
            if (!pr.by_labels() || got != expected[r]) {
              ++rep.mismatches;
              if (rep.witnesses.size() < 8)
                rep.witnesses.push_back({{"f", f},
                                         {"r", r},
                                         {"by_labels", pr.by_labels()},
                                         {"expected", expected[r]},
                                         {"found", got}});
            }
          }
        }
        int i = q;
        while (i >= 0 && f[i] == k) f[i--] = 1;
        if (i < 0) break;
        ++f[i];
      }
    }
  }
  for (auto it = rep.counts.begin(); it != rep.counts.end();)
    it = (it->second.first == 0 && it->second.second == 0) ? rep.counts.erase(it) : std::next(it);
  return rep;
}

}  // namespace cosop
