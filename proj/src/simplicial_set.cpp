#include "cosop/simplicial_set.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cosop/errors.hpp"

namespace cosop {

int FiniteSimplicialSet::add_generator(std::string name, int dim, std::vector<Simplex> faces) {
  if (dim < 0) throw InvalidInput("negative simplex dimension");
  if (by_name_.count(name)) throw InvalidInput("duplicate simplex name " + name);
  if (dim == 0 && !faces.empty()) throw InvalidInput("vertices have no faces");
  if (dim > 0 && static_cast<int>(faces.size()) != dim + 1)
    throw InvalidInput("simplex " + name + " needs " + std::to_string(dim + 1) + " faces");
  for (const auto& f : faces) {
    if (f.generator < 0 || f.generator >= static_cast<int>(gens_.size()))
      throw InvalidInput("face of " + name + " refers to an unknown simplex");
    if (f.dim() != dim - 1) throw InvalidInput("face of " + name + " has the wrong dimension");
    if (!f.degeneracy.surjective() || f.degeneracy.target_size != gens_[f.generator].dim + 1)
      throw InvalidInput("face of " + name + " has a malformed degeneracy");
  }
  const int id = static_cast<int>(gens_.size());
  by_name_[name] = id;
  gens_.push_back({std::move(name), dim, std::move(faces)});
  level_cache_.clear();
  index_cache_.clear();
  return id;
}

void FiniteSimplicialSet::validate() const {
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const int d = gens_[g].dim;
    if (d < 2) continue;
    const Simplex s = generator_simplex(static_cast<int>(g));
    for (int j = 0; j <= d; ++j)
      for (int i = 0; i < j; ++i)
        if (face(face(s, j), i) != face(face(s, i), j - 1))
          throw InvalidInput("simplicial identity fails on " + gens_[g].name);
  }
}

int FiniteSimplicialSet::dimension() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.dim);
  return d;
}

std::vector<int> FiniteSimplicialSet::nondegenerate(int dim) const {
  std::vector<int> out;
  for (std::size_t g = 0; g < gens_.size(); ++g)
    if (gens_[g].dim == dim) out.push_back(static_cast<int>(g));
  return out;
}

int FiniteSimplicialSet::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw InvalidInput("unknown simplex " + name);
  return it->second;
}

Simplex FiniteSimplicialSet::generator_simplex(int id) const { return {id, identity_map(gens_.at(id).dim + 1)}; }

Simplex FiniteSimplicialSet::apply(const OrderedMap& alpha, const Simplex& s) const {
  if (alpha.target_size != s.degeneracy.source_size) throw IncompatibleInputs("operator does not match simplex");
  const auto [epi, mono] = factor_epi_mono(compose(s.degeneracy, alpha));
  if (mono.is_identity()) return {s.generator, epi};
  // Peel off the first missing vertex: mono = d^missing ∘ rest.
  const auto im = mono.image();
  int missing = 0;
  while (missing < static_cast<int>(im.size()) && im[missing] == missing) ++missing;
  std::vector<int> v(mono.values);
  for (int& x : v)
    if (x > missing) --x;
  const OrderedMap rest(mono.target_size - 1, std::move(v));
  const Simplex g = apply(rest, gens_[s.generator].faces[missing]);
  return {g.generator, compose(g.degeneracy, epi)};
}

Simplex FiniteSimplicialSet::face(const Simplex& s, int i) const {
  return apply(coface(s.dim() - 1, i), s);
}

Simplex FiniteSimplicialSet::degeneracy(const Simplex& s, int i) const {
  return apply(codegeneracy(s.dim() + 1, i), s);
}

const std::vector<Simplex>& FiniteSimplicialSet::simplices(int m) const {
  auto it = level_cache_.find(m);
  if (it != level_cache_.end()) return it->second;
  std::vector<Simplex> out;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const int d = gens_[g].dim;
    if (d > m) continue;
    for (auto& e : all_ordered_maps(m + 1, d + 1))
      if (e.surjective()) out.push_back({static_cast<int>(g), std::move(e)});
  }
  auto& idx = index_cache_[m];
  for (std::size_t i = 0; i < out.size(); ++i) idx[out[i]] = i;
  return level_cache_[m] = std::move(out);
}

std::size_t FiniteSimplicialSet::simplex_index(const Simplex& s) const {
  simplices(s.dim());
  const auto& idx = index_cache_.at(s.dim());
  auto it = idx.find(s);
  if (it == idx.end()) throw IndexOutOfRange("simplex not found");
  return it->second;
}

nlohmann::json FiniteSimplicialSet::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : gens_) {
    nlohmann::json e{{"name", g.name}, {"dim", g.dim}};
    if (g.dim > 0) {
      nlohmann::json faces = nlohmann::json::array();
      for (const auto& f : g.faces) {
        if (f.nondegenerate())
          faces.push_back(gens_[f.generator].name);
        else
          faces.push_back({{"simplex", gens_[f.generator].name}, {"degeneracy", f.degeneracy.values}});
      }
      e["faces"] = faces;
    }
    arr.push_back(e);
  }
  return {{"simplices", arr}};
}

FiniteSimplicialSet FiniteSimplicialSet::from_json(const nlohmann::json& j) {
  FiniteSimplicialSet w;
  if (!j.contains("simplices") || !j["simplices"].is_array()) throw InvalidInput("expected a 'simplices' array");
  for (const auto& e : j["simplices"]) {
    const std::string name = e.at("name").get<std::string>();
    const int dim = e.at("dim").get<int>();
    std::vector<Simplex> faces;
    if (e.contains("faces"))
      for (const auto& f : e["faces"]) {
        if (f.is_string()) {
          const int id = w.find(f.get<std::string>());
          faces.push_back(w.generator_simplex(id));
        } else {
          const int id = w.find(f.at("simplex").get<std::string>());
          faces.push_back({id, OrderedMap(w.gens_[id].dim + 1, f.at("degeneracy").get<std::vector<int>>())});
        }
      }
    w.add_generator(name, dim, std::move(faces));
  }
  w.validate();
  return w;
}

FiniteSimplicialSet FiniteSimplicialSet::point() { return simplicial_complex({{0}}); }

FiniteSimplicialSet FiniteSimplicialSet::standard_simplex(int n) {
  std::vector<int> all(n + 1);
  for (int i = 0; i <= n; ++i) all[i] = i;
  return simplicial_complex({all});
}

FiniteSimplicialSet FiniteSimplicialSet::circle() {
  FiniteSimplicialSet w;
  const int v = w.add_generator("v", 0, {});
  w.add_generator("e", 1, {w.generator_simplex(v), w.generator_simplex(v)});
  w.validate();
  return w;
}

FiniteSimplicialSet FiniteSimplicialSet::sphere(int n) {
  if (n < 1) throw InvalidInput("sphere dimension must be positive");
  FiniteSimplicialSet w;
  const int v = w.add_generator("v", 0, {});
  std::vector<Simplex> faces(n + 1, Simplex{v, OrderedMap(1, std::vector<int>(n, 0))});
  w.add_generator("s" + std::to_string(n), n, faces);
  w.validate();
  return w;
}

FiniteSimplicialSet FiniteSimplicialSet::simplicial_complex(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> faces;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    const int n = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  std::vector<std::vector<int>> order(faces.begin(), faces.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  FiniteSimplicialSet w;
  auto name = [](const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "." : "") + std::to_string(s[i]);
    return out;
  };
  for (const auto& s : order) {
    std::vector<Simplex> fs;
    if (s.size() > 1)
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> t = s;
        t.erase(t.begin() + static_cast<long>(i));
        fs.push_back(w.generator_simplex(w.find(name(t))));
      }
    w.add_generator(name(s), static_cast<int>(s.size()) - 1, std::move(fs));
  }
  return w;
}

FiniteSimplicialSet FiniteSimplicialSet::random(std::uint64_t seed, std::size_t max_simplices) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int kind = static_cast<int>(rng() % 4);
    FiniteSimplicialSet w;
    if (kind == 0) {
      w = circle();
    } else if (kind == 1) {
      w = sphere(1 + static_cast<int>(rng() % 3));
    } else {
      const int nv = 2 + static_cast<int>(rng() % 4);
      const int nf = 1 + static_cast<int>(rng() % 3);
      std::vector<std::vector<int>> facets;
      for (int f = 0; f < nf; ++f) {
        std::vector<int> s;
        for (int v = 0; v < nv; ++v)
          if (rng() % 2) s.push_back(v);
        if (s.empty()) s.push_back(static_cast<int>(rng() % nv));
        facets.push_back(s);
      }
      w = simplicial_complex(facets);
      if (kind == 3) {
        // Glue a loop at the first vertex to leave the world of complexes.
        const int v = 0;
        w.add_generator("loop", 1, {w.generator_simplex(v), w.generator_simplex(v)});
      }
    }
    if (w.nondegenerate_count() <= max_simplices) {
      w.validate();
      return w;
    }
  }
  throw InvalidInput("could not draw a simplicial set within the size cap");
}

GradedIntComplex cochains(const FiniteSimplicialSet& w) {
  GradedIntComplex c;
  c.set_cohomological(true);
  const int top = w.dimension();
  std::vector<std::vector<int>> nd(top + 1);
  std::vector<std::map<int, std::size_t>> pos(top + 1);
  for (int m = 0; m <= top; ++m) {
    nd[m] = w.nondegenerate(m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < nd[m].size(); ++i) {
      pos[m][nd[m][i]] = i;
      labels.push_back(w.generators()[nd[m][i]].name + "*");
    }
    c.set_basis(-m, std::move(labels));
  }
  for (int m = 0; m < top; ++m) {
    IntMatrix d(nd[m + 1].size(), nd[m].size());
    for (std::size_t row = 0; row < nd[m + 1].size(); ++row) {
      const Simplex s = w.generator_simplex(nd[m + 1][row]);
      for (int i = 0; i <= m + 1; ++i) {
        const Simplex f = w.face(s, i);
        if (f.nondegenerate()) d.add(row, pos[m].at(f.generator), i % 2 ? -1 : 1);
      }
    }
    c.set_differential(-m, std::move(d));
  }
  return c;
}

GradedIntComplex chains(const FiniteSimplicialSet& w) {
  GradedIntComplex c;
  const int top = w.dimension();
  std::vector<std::map<int, std::size_t>> pos(top + 1);
  for (int m = 0; m <= top; ++m) {
    std::vector<std::string> labels;
    for (int g : w.nondegenerate(m)) {
      pos[m][g] = labels.size();
      labels.push_back(w.generators()[g].name);
    }
    c.set_basis(m, std::move(labels));
  }
  for (int m = 1; m <= top; ++m) {
    IntMatrix d(pos[m - 1].size(), pos[m].size());
    for (const auto& [g, col] : pos[m])
      for (int i = 0; i <= m; ++i) {
        const Simplex f = w.face(w.generator_simplex(g), i);
        if (f.nondegenerate()) d.add(pos[m - 1].at(f.generator), col, i % 2 ? -1 : 1);
      }
    c.set_differential(m, std::move(d));
  }
  c.set_window(-1, top + 1);
  return c;
}

}  // namespace cosop
