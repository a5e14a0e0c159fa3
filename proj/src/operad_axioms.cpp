#include "cosop/operad_axioms.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "cosop/errors.hpp"
#include "cosop/parallel.hpp"

namespace cosop {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

nlohmann::json chain_json(const Chain& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [s, v] : c) out.push_back({{"symbol", s.to_json()}, {"coefficient", v}});
  return out;
}

nlohmann::json args_json(const std::vector<Symbol>& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : g) out.push_back(s.to_json());
  return out;
}

int sgn(int e) { return e % 2 ? -1 : 1; }

Chain multilinear(const GammaFn& gamma, const Chain& h, const std::vector<Chain>& g) {
  Chain out;
  const std::size_t k = g.size();
  for (const auto& gi : g)
    if (gi.empty()) return {};
  for (const auto& [hs, hv] : h) {
    std::vector<std::size_t> idx(k, 0);
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

std::vector<int> fibers(const Symbol& s) {
  std::vector<int> out(s.k, 0);
  for (int t = 0; t < s.n; ++t) ++out[s.f[t] - 1];
  return out;
}

// Window symbols by arity and level, sorted by number of positions.
struct Window {
  int k_max, qmax;
  std::map<std::pair<int, int>, std::vector<Symbol>> by;
  std::vector<Symbol> all;
  const std::vector<Symbol>& at(int j, int r) const {
    static const std::vector<Symbol> none;
    auto it = by.find({j, r});
    return it == by.end() ? none : it->second;
  }
};

Window make_window(const ChainOperad& op, int k_max, int qmax) {
  Window w{k_max, qmax, {}, {}};
  for (int j = 1; j <= k_max; ++j)
    for (int q = j - 1; q <= qmax; ++q)
      for (int r = 0; r <= q + 1; ++r)
        for (const auto& s : enumerate_symbols(j, q, r, op.complexity_bound())) {
          w.by[{j, r}].push_back(s);
          w.all.push_back(s);
        }
  return w;
}

// Calls visit(args) for every argument list with args[i] at one of the
// levels allowed for slot i, total arity <= arity_budget and total positions
// <= position_budget.
void for_each_args(const Window& w, const std::vector<std::vector<int>>& levels, int arity_budget,
                   int position_budget, const std::function<void(const std::vector<Symbol>&)>& visit) {
  const std::size_t slots = levels.size();
  std::vector<Symbol> args(slots);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int arity_left, int pos_left) {
    if (i == slots) {
      visit(args);
      return;
    }
    const int later = static_cast<int>(slots - i - 1);  // each later slot needs arity and a position
    for (int j = 1; j <= arity_left - later; ++j)
      for (int r : levels[i]) {
        if (r < 0) continue;
        for (const auto& s : w.at(j, r)) {
          if (s.n > pos_left - later) break;
          args[i] = s;
          rec(i + 1, arity_left - j, pos_left - s.n);
        }
      }
  };
  rec(0, arity_budget, position_budget);
}

std::vector<std::vector<int>> exact_levels(const std::vector<int>& fib) {
  std::vector<std::vector<int>> out;
  for (int x : fib) out.push_back({x - 1});
  return out;
}

// Shared bookkeeping for one check: counting pass, sampling, evaluation.
class Runner {
 public:
  Runner(const AxiomPolicy& p, OperadAxiomReport& rep) : policy_(p), rep_(rep) {}

  // `each(unit, emit)` enumerates the instances belonging to work unit
  // `unit`, calling emit(fn) where fn() returns a failure witness or null.
  using Eval = std::function<nlohmann::json()>;
  using Emit = std::function<void(const Eval*)>;
  void run(const std::string& name, std::size_t units,
           const std::function<void(std::size_t, const Emit&)>& each) {
    const auto t0 = std::chrono::steady_clock::now();
    AxiomCheck check;
    check.name = name;
    // Counting pass.
    std::vector<std::size_t> per(units, 0);
    parallel_for(units, [&](std::size_t u) {
      std::size_t c = 0;
      each(u, [&](const Eval*) { ++c; });
      per[u] = c;
    });
    std::vector<std::size_t> start(units + 1, 0);
    for (std::size_t u = 0; u < units; ++u) start[u + 1] = start[u] + per[u];
    check.available = start[units];
    std::vector<char> chosen;
    const bool sampled = check.available > policy_.cap;
    if (sampled) {
      rep_.exhaustive = false;
      chosen.assign(check.available, 0);
      std::mt19937_64 rng(policy_.seed ^ std::hash<std::string>{}(name));
      std::vector<std::size_t> idx(check.available);
      std::iota(idx.begin(), idx.end(), 0);
      for (std::size_t i = 0; i < policy_.cap; ++i) {
        std::uniform_int_distribution<std::size_t> d(i, idx.size() - 1);
        std::swap(idx[i], idx[d(rng)]);
        chosen[idx[i]] = 1;
      }
    }
    std::vector<std::size_t> evaluated(units, 0), failed(units, 0);
    std::vector<std::vector<nlohmann::json>> wit(units);
    parallel_for(units, [&](std::size_t u) {
      std::size_t i = start[u];
      each(u, [&](const Eval* fn) {
        const std::size_t me = i++;
        if (sampled && !chosen[me]) return;
        ++evaluated[u];
        nlohmann::json w = (*fn)();
        if (!w.is_null()) {
          ++failed[u];
          if (wit[u].size() < kMaxWitnesses) wit[u].push_back(std::move(w));
        }
      });
    });
    for (std::size_t u = 0; u < units; ++u) {
      check.instances += evaluated[u];
      check.failures += failed[u];
      for (auto& w : wit[u])
        if (check.witnesses.size() < kMaxWitnesses) check.witnesses.push_back(std::move(w));
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep_.checks.push_back(std::move(check));
  }

 private:
  const AxiomPolicy& policy_;
  OperadAxiomReport& rep_;
};

}  // namespace

std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool OperadAxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed(); });
}

const AxiomCheck& OperadAxiomReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw IndexOutOfRange("no check named " + name);
}

nlohmann::json OperadAxiomReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name},
                  {"instances", c.instances},
                  {"available", c.available},
                  {"failures", c.failures},
                  {"passed", c.passed()},
                  {"witnesses", c.witnesses}});
  return {{"family", family}, {"k_max", k_max},          {"qmax", qmax},   {"cap", cap},
          {"seed", seed},     {"exhaustive", exhaustive}, {"passed", passed()}, {"checks", cs}};
}

GammaFn corrupted_gamma(const ChainOperad& op) {
  const Symbol target = Symbol::make(2, 1, {1, 2, 1}, {0, 1, 1});
  return [&op, target](const Symbol& h, const std::vector<Symbol>& g) {
    Chain c = op.gamma(h, g);
    return h == target ? scaled(c, -1) : c;
  };
}

OperadAxiomReport verify_operad_axioms(const ChainOperad& op, const AxiomPolicy& policy) {
  return verify_operad_axioms(op, policy, [&op](const Symbol& h, const std::vector<Symbol>& g) { return op.gamma(h, g); });
}

OperadAxiomReport verify_operad_axioms(const ChainOperad& op, const AxiomPolicy& policy, const GammaFn& gamma) {
  if (policy.k_max < 1 || policy.k_max > 4) throw ValueOutOfRange("arity window must be 1..4");
  if (policy.qmax < 0 || policy.qmax + 1 > kMaxPositions) throw ValueOutOfRange("qmax outside the supported range");
  OperadAxiomReport rep;
  const ComplexityBound nb = op.complexity_bound();
  rep.family = nb.unbounded() ? "T" : "T" + nb.to_string();
  rep.k_max = policy.k_max;
  rep.qmax = policy.qmax;
  rep.cap = policy.cap;
  rep.seed = policy.seed;
  const Window w = make_window(op, policy.k_max, policy.qmax);
  const int K = policy.k_max, B = policy.qmax + 1;
  const std::size_t N = w.all.size();
  Runner run(policy, rep);
  auto in_filtration = [&](const Chain& c) {
    for (const auto& t : c)
      if (!nb.admits(t.first.complexity())) return false;
    return true;
  };

  run.run("differential_squared_zero", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& s = w.all[u];
    const Runner::Eval fn = [&] {
      const Chain d = op.differential(s);
      const Chain dd = op.differential(d);
      if (dd.empty() && in_filtration(d)) return nlohmann::json();
      return nlohmann::json{{"symbol", s.to_json()}, {"dd", chain_json(dd)}};
    };
    emit(&fn);
  });

  run.run("sigma_chain_map", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& s = w.all[u];
    for (const auto& perm : permutations(s.k)) {
      const Runner::Eval fn = [&] {
        const Chain lhs = op.differential(ChainOperad::act({{s, 1}}, perm));
        const Chain rhs = ChainOperad::act(op.differential(s), perm);
        if (lhs == rhs) return nlohmann::json();
        return nlohmann::json{{"symbol", s.to_json()}, {"perm", perm}, {"lhs", chain_json(lhs)}, {"rhs", chain_json(rhs)}};
      };
      emit(&fn);
    }
  });

  run.run("sigma_action_law", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& s = w.all[u];
    const auto perms = permutations(s.k);
    for (const auto& a : perms)
      for (const auto& b : perms) {
        const Runner::Eval fn = [&] {
          std::vector<int> ab(s.k);
          for (int i = 0; i < s.k; ++i) ab[i] = a[b[i] - 1];
          const Chain lhs = ChainOperad::act(ChainOperad::act({{s, 1}}, b), a);
          const Chain rhs = ChainOperad::act({{s, 1}}, ab);
          if (lhs == rhs) return nlohmann::json();
          return nlohmann::json{{"symbol", s.to_json()}, {"a", a}, {"b", b}};
        };
        emit(&fn);
      }
  });

  run.run("sigma_free", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& s = w.all[u];
    if (s.k < 2) return;
    const Runner::Eval fn = [&] {
      const auto perms = permutations(s.k);
      for (std::size_t i = 1; i < perms.size(); ++i)
        if (relabel(s, perms[i]).first == s) return nlohmann::json{{"symbol", s.to_json()}, {"perm", perms[i]}};
      return nlohmann::json();
    };
    emit(&fn);
  });

  run.run("unit_laws", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& s = w.all[u];
    const Runner::Eval fn = [&] {
      const Chain self{{s, 1}};
      const Chain left = gamma(ChainOperad::unit_component(s.r), {s});
      std::vector<Symbol> units;
      for (int x : fibers(s)) units.push_back(ChainOperad::unit_component(x - 1));
      const Chain right = gamma(s, units);
      if (left == self && right == self) return nlohmann::json();
      return nlohmann::json{{"symbol", s.to_json()}, {"left", chain_json(left)}, {"right", chain_json(right)}};
    };
    emit(&fn);
  });

  // Tuples (h; g) with each g_i at the level h can see.
  auto for_each_tuple = [&](const Symbol& h, const std::function<void(const std::vector<Symbol>&)>& visit) {
    for_each_args(w, exact_levels(fibers(h)), K, B, visit);
  };

  run.run("gamma_degree_additive", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& h = w.all[u];
    for_each_tuple(h, [&](const std::vector<Symbol>& g) {
      const Runner::Eval fn = [&] {
        int deg = h.degree();
        for (const auto& x : g) deg += x.degree();
        const Chain c = gamma(h, g);
        bool ok = in_filtration(c);
        for (const auto& t : c) ok = ok && t.first.degree() == deg;
        if (ok) return nlohmann::json();
        return nlohmann::json{{"h", h.to_json()}, {"g", args_json(g)}, {"gamma", chain_json(c)}};
      };
      emit(&fn);
    });
  });

  if (policy.compare_routes)
    run.run("gamma_routes_agree", N, [&](std::size_t u, const Runner::Emit& emit) {
      const Symbol& h = w.all[u];
      for_each_tuple(h, [&](const std::vector<Symbol>& g) {
        const Runner::Eval fn = [&] {
          const Chain a = gamma(h, g);
          const Chain b = op.gamma_matrix(h, g);
          if (a == b) return nlohmann::json();
          return nlohmann::json{{"h", h.to_json()}, {"g", args_json(g)}, {"substitution", chain_json(a)}, {"matrix", chain_json(b)}};
        };
        emit(&fn);
      });
    });

  run.run("gamma_chain_map", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& h = w.all[u];
    std::vector<std::vector<int>> levels;
    for (int x : fibers(h)) levels.push_back({x - 2, x - 1});
    for_each_args(w, levels, K, B, [&](const std::vector<Symbol>& g) {
      const Runner::Eval fn = [&] {
        std::vector<Chain> gc;
        for (const auto& x : g) gc.push_back({{x, 1}});
        const Chain lhs = op.differential(gamma(h, g));
        Chain rhs = multilinear(gamma, op.differential(h), gc);
        int e = h.degree();
        for (std::size_t i = 0; i < g.size(); ++i) {
          std::vector<Chain> mod = gc;
          mod[i] = op.differential(g[i]);
          rhs = add(rhs, multilinear(gamma, {{h, 1}}, mod), sgn(e));
          e += g[i].degree();
        }
        if (lhs == rhs) return nlohmann::json();
        return nlohmann::json{{"h", h.to_json()}, {"g", args_json(g)}, {"lhs", chain_json(lhs)}, {"rhs", chain_json(rhs)}};
      };
      emit(&fn);
    });
  });

  run.run("equivariance_outer", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& h = w.all[u];
    const int k = h.k;
    const auto perms = permutations(k);
    for_each_tuple(h, [&](const std::vector<Symbol>& g) {
      for (const auto& pi : perms) {
        const Runner::Eval fn = [&] {
          std::vector<int> inv(k), degs(k), arity(k);
          for (int i = 0; i < k; ++i) {
            inv[pi[i] - 1] = i;
            degs[i] = g[i].degree();
            arity[i] = g[i].k;
          }
          std::vector<Symbol> moved(k);
          for (int l = 0; l < k; ++l) moved[l] = g[inv[l]];
          const Chain lhs = multilinear(gamma, ChainOperad::act({{h, 1}}, pi), [&] {
            std::vector<Chain> v;
            for (const auto& x : moved) v.push_back({{x, 1}});
            return v;
          }());
          // Block permutation: block i moves to position pi(i).
          std::vector<int> offs(k + 1, 0), noffs(k, 0), block;
          for (int i = 0; i < k; ++i) offs[i + 1] = offs[i] + arity[i];
          for (int i = 0; i < k; ++i)
            for (int l = 0; l < pi[i] - 1; ++l) noffs[i] += arity[inv[l]];
          for (int i = 0; i < k; ++i)
            for (int x = 1; x <= arity[i]; ++x) block.push_back(noffs[i] + x);
          const Chain rhs = scaled(ChainOperad::act(gamma(h, g), block), koszul_sign(degs, inv));
          if (lhs == rhs) return nlohmann::json();
          return nlohmann::json{{"h", h.to_json()}, {"g", args_json(g)}, {"perm", pi}, {"lhs", chain_json(lhs)}, {"rhs", chain_json(rhs)}};
        };
        emit(&fn);
      }
    });
  });

  run.run("equivariance_inner", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& h = w.all[u];
    const int k = h.k;
    for_each_tuple(h, [&](const std::vector<Symbol>& g) {
      std::vector<std::vector<std::vector<int>>> choices;
      for (const auto& x : g) choices.push_back(permutations(x.k));
      std::vector<std::size_t> idx(k, 0);
      for (;;) {
        const Runner::Eval fn = [&] {
          std::vector<Chain> moved;
          std::vector<int> sum;
          int off = 0;
          for (int i = 0; i < k; ++i) {
            const auto& tau = choices[i][idx[i]];
            moved.push_back(ChainOperad::act({{g[i], 1}}, tau));
            for (int x : tau) sum.push_back(off + x);
            off += g[i].k;
          }
          const Chain lhs = multilinear(gamma, {{h, 1}}, moved);
          const Chain rhs = ChainOperad::act(gamma(h, g), sum);
          if (lhs == rhs) return nlohmann::json();
          return nlohmann::json{{"h", h.to_json()}, {"g", args_json(g)}, {"block_perm", sum}, {"lhs", chain_json(lhs)}, {"rhs", chain_json(rhs)}};
        };
        emit(&fn);
        int i = k - 1;
        while (i >= 0 && ++idx[i] == choices[i].size()) idx[i--] = 0;
        if (i < 0) break;
      }
    });
  });

  run.run("associativity", N, [&](std::size_t u, const Runner::Emit& emit) {
    const Symbol& h = w.all[u];
    const int k = h.k;
    std::map<std::vector<Symbol>, Chain> cache;  // (g_m, k_m...) -> γ(g_m; k_m)
    for_each_tuple(h, [&](const std::vector<Symbol>& g) {
      std::vector<std::vector<int>> levels;
      std::vector<std::size_t> first(k + 1, 0);
      for (int m = 0; m < k; ++m) {
        for (int x : fibers(g[m])) levels.push_back({x - 1});
        first[m + 1] = levels.size();
      }
      Chain inner;
      bool have_inner = false;
      for_each_args(w, levels, K, B, [&](const std::vector<Symbol>& kk) {
        const Runner::Eval fn = [&] {
          if (!have_inner) {
            inner = gamma(h, g);
            have_inner = true;
          }
          std::vector<Chain> flat;
          for (const auto& x : kk) flat.push_back({{x, 1}});
          const Chain lhs = multilinear(gamma, inner, flat);
          std::vector<Chain> mids;
          int e = 0, kdeg_before = 0;
          std::vector<int> kdeg(k, 0);
          for (int m = 0; m < k; ++m)
            for (std::size_t t = first[m]; t < first[m + 1]; ++t) kdeg[m] += kk[t].degree();
          for (int m = 0; m < k; ++m) {
            e += (g[m].degree() & 1) * (kdeg_before & 1);
            kdeg_before += kdeg[m];
            std::vector<Symbol> key{g[m]};
            key.insert(key.end(), kk.begin() + static_cast<long>(first[m]), kk.begin() + static_cast<long>(first[m + 1]));
            auto it = cache.find(key);
            if (it == cache.end())
              it = cache.emplace(key, gamma(g[m], std::vector<Symbol>(key.begin() + 1, key.end()))).first;
            mids.push_back(it->second);
          }
          const Chain rhs = scaled(multilinear(gamma, {{h, 1}}, mids), sgn(e));
          if (lhs == rhs) return nlohmann::json();
          return nlohmann::json{{"h", h.to_json()}, {"g", args_json(g)}, {"k", args_json(kk)}, {"lhs", chain_json(lhs)}, {"rhs", chain_json(rhs)}};
        };
        emit(&fn);
      });
    });
  });

  return rep;
}

}  // namespace cosop
