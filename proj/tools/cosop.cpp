#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosop/box_product.hpp"
#include "cosop/brute_colimit.hpp"
#include "cosop/chain_operad.hpp"
#include "cosop/cochain_ops.hpp"
#include "cosop/errors.hpp"
#include "cosop/hochschild.hpp"
#include "cosop/little_cubes.hpp"
#include "cosop/operad_axioms.hpp"
#include "cosop/operad_homology.hpp"
#include "cosop/parallel.hpp"

using namespace cosop;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Common {
  bool json_only = false;
  std::string out;
  int threads = 0;
};

struct OperadOpts {
  std::string family = "T";
  int n = 0;
  bool n_given = false;
};

ComplexityBound bound_for(const OperadOpts& o) {
  if (o.family == "T") {
    if (o.n_given) throw ConfigError("--n is only meaningful with --family Tn");
    return {};
  }
  if (o.family != "Tn") throw ConfigError("--family must be T or Tn");
  if (!o.n_given) throw ConfigError("--family Tn needs --n");
  if (o.n < 1) throw ConfigError("--n must be at least 1");
  return ComplexityBound(o.n);
}

std::string family_name(const OperadOpts& o) { return o.family == "T" ? "T" : "T_" + std::to_string(o.n); }

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    const int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
    if (a > b) throw ConfigError("empty degree range " + s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw ConfigError("degree range must look like A..B, got " + s);
  }
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

// Writes the report and returns the exit status.
int emit(const Common& common, const std::string& command, const json& config, const json& result, bool passed,
         const std::string& table, double seconds) {
  const json report{{"command", command}, {"config", config}, {"version", kVersion},
                    {"passed", passed},   {"result", result}};
  if (!common.out.empty()) {
    std::ofstream f(common.out);
    if (!f) throw ConfigError("cannot write " + common.out);
    f << report.dump(2) << "\n";
  }
  if (common.json_only) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << table;
    std::cout << (passed ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(2) << seconds << " s)\n";
  }
  return passed ? 0 : 1;
}

std::string checks_table(const std::vector<AxiomCheck>& checks) {
  std::ostringstream t;
  t << std::left << std::setw(34) << "check" << std::right << std::setw(12) << "instances" << std::setw(10)
    << "failures" << "\n";
  for (const auto& c : checks)
    t << std::left << std::setw(34) << c.name << std::right << std::setw(12) << c.instances << std::setw(10)
      << c.failures << "\n";
  return t.str();
}

std::string error_name(const Error& e) {
#define COSOP_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  COSOP_NAME(ConfigError)
  COSOP_NAME(InvalidInput)
  COSOP_NAME(DegreeOutsideWindow)
  COSOP_NAME(IndexOutOfRange)
  COSOP_NAME(NonSplitKernel)
  COSOP_NAME(TorsionCokernel)
  COSOP_NAME(ComparisonFailed)
  COSOP_NAME(WindowTooSmall)
  COSOP_NAME(ValueOutOfRange)
  COSOP_NAME(BoundsExceeded)
  COSOP_NAME(IncompatibleInputs)
  COSOP_NAME(NormalizationFailure)
  COSOP_NAME(NotStabilized)
  COSOP_NAME(UnsupportedInstance)
  COSOP_NAME(LevelMismatch)
  COSOP_NAME(InfeasibleSize)
  COSOP_NAME(DisjointnessViolation)
  COSOP_NAME(DegenerateInterval)
  COSOP_NAME(ResolutionTooCoarse)
#undef COSOP_NAME
  return "Error";
}

FiniteSimplicialSet builtin_complex(const std::string& name) {
  if (name == "point") return FiniteSimplicialSet::point();
  if (name == "circle") return FiniteSimplicialSet::circle();
  if (name.rfind("delta", 0) == 0) return FiniteSimplicialSet::standard_simplex(std::stoi(name.substr(5)));
  if (name.rfind("sphere", 0) == 0) return FiniteSimplicialSet::sphere(std::stoi(name.substr(6)));
  throw ConfigError("unknown builtin complex " + name + " (point, circle, deltaN, sphereN)");
}

FiniteRankAlgebra builtin_algebra(const std::string& name) {
  if (name == "Z") return FiniteRankAlgebra::integers();
  if (name == "dual2") return FiniteRankAlgebra::dual_numbers(2);
  if (name == "dual3") return FiniteRankAlgebra::dual_numbers(3);
  if (name == "upper2") return FiniteRankAlgebra::upper_triangular(2);
  if (name == "matrices2") return FiniteRankAlgebra::matrices(2);
  throw ConfigError("unknown builtin algebra " + name + " (Z, dual2, dual3, upper2, matrices2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chain operads, cochain operations and little cubes"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json_only, "Print the JSON report instead of a table");
  app.add_option("--out", common.out, "Also write the JSON report to this file");
  app.add_option("--threads", common.threads, "Worker threads (default: COSOP_THREADS or 1)");

  auto add_family = [](CLI::App* sub, OperadOpts& o) {
    sub->add_option("--family", o.family, "T or Tn")->check(CLI::IsMember({"T", "Tn"}));
    sub->add_option("--n", o.n, "Complexity bound for Tn");
  };

  // homology-operad
  OperadOpts hom_fam;
  int hom_k = 2, hom_qmax = 6;
  std::string hom_degrees = "0..2";
  auto* hom = app.add_subcommand("homology-operad", "Homology of T(k) or T_n(k) with a stabilization check");
  add_family(hom, hom_fam);
  hom->add_option("--k", hom_k, "Arity");
  hom->add_option("--qmax", hom_qmax, "Largest q; the check repeats at qmax + 1");
  hom->add_option("--degrees", hom_degrees, "Degree range A..B");

  // verify-operad
  OperadOpts ver_fam;
  AxiomPolicy ver_policy;
  ver_policy.qmax = 4;
  auto* ver = app.add_subcommand("verify-operad", "Check the operad axioms within a window");
  add_family(ver, ver_fam);
  ver->add_option("--k-max", ver_policy.k_max, "Largest arity");
  ver->add_option("--qmax", ver_policy.qmax, "Largest q of an input symbol");
  ver->add_option("--exhaustive-cap", ver_policy.cap, "Sample checks with more instances than this");
  ver->add_option("--seed", ver_policy.seed, "Sampling seed");
  bool ver_corrupt = false;
  ver->add_flag("--corrupt", ver_corrupt, "Negative control: flip one sign in gamma");

  // enumerate-basis
  int en_k = 2, en_q = 1, en_r = 0, en_n = 0;
  bool en_list = false;
  auto* en = app.add_subcommand("enumerate-basis", "Count the basis symbols of one (k, q, r) cell");
  en->add_option("--k", en_k)->required();
  en->add_option("--q", en_q)->required();
  en->add_option("--r", en_r)->required();
  en->add_option("--max-complexity", en_n, "Only symbols of complexity at most N");
  en->add_flag("--list", en_list, "Print every symbol in the table");

  // reconcile-basis
  int rb_k = 3, rb_q = 4;
  auto* rb = app.add_subcommand("reconcile-basis", "Compare the conormalized box-product basis with the symbol basis");
  rb->add_option("--k-max", rb_k, "Largest arity");
  rb->add_option("--qmax", rb_q, "Largest q");

  // verify-cochain-ops
  std::string co_file, co_builtin;
  int co_dim = 3, co_tdim = -1;
  bool co_corrupt = false;
  auto* co = app.add_subcommand("verify-cochain-ops", "Check the cochain operation identities on a simplicial set");
  co->add_option("--complex", co_file, "Simplicial set JSON");
  co->add_option("--builtin", co_builtin, "point, circle, deltaN or sphereN");
  co->add_option("--max-dim", co_dim, "Largest cochain level in any instance");
  co->add_option("--ternary-dim", co_tdim, "Level cap for three-input checks (default: max-dim)");
  co->add_flag("--corrupt", co_corrupt, "Negative control: drop the fiber renumbering");

  // hochschild
  std::string ho_file, ho_builtin, ho_report = "full";
  int ho_pmax = 3, ho_cpmax = -1;
  bool ho_skew = false;
  auto* ho = app.add_subcommand("hochschild", "Hochschild cohomology and Gerstenhaber checks");
  ho->add_option("--algebra", ho_file, "Algebra JSON");
  ho->add_option("--builtin", ho_builtin, "Z, dual2, dual3, upper2 or matrices2");
  ho->add_option("--pmax", ho_pmax, "Top cohomological degree");
  ho->add_option("--cochain-pmax", ho_cpmax, "Degree cap for cochain-level checks (default: pmax)");
  ho->add_option("--report", ho_report, "cohomology or gerstenhaber (full report)")
      ->check(CLI::IsMember({"cohomology", "gerstenhaber", "full"}));
  ho->add_flag("--skew", ho_skew, "Negative control: skewed cup product");

  // cubes
  std::string cu_compose;
  bool cu_components = false, cu_verify = false;
  int cu_n = 1, cu_k = 2, cu_res = 4, cu_dim = 2, cu_arity = 3;
  std::size_t cu_per = 1000;
  std::uint64_t cu_seed = 1;
  auto* cu = app.add_subcommand("cubes", "Little cubes: composition, axioms, component counts");
  cu->add_option("--compose", cu_compose, "JSON with \"outer\" and \"inner\" elements");
  cu->add_flag("--components", cu_components, "Count path components of C_n(k)");
  cu->add_flag("--verify", cu_verify, "Randomized exact axiom checks");
  cu->add_option("--n", cu_n, "Cube dimension");
  cu->add_option("--k", cu_k, "Arity");
  cu->add_option("--resolution", cu_res, "Grid resolution");
  cu->add_option("--max-dim", cu_dim, "Largest dimension for --verify");
  cu->add_option("--max-arity", cu_arity, "Largest arity for --verify");
  cu->add_option("--per-configuration", cu_per, "Instances per arity configuration");
  cu->add_option("--seed", cu_seed);

  // export-complex
  OperadOpts ex_fam;
  int ex_k = 2, ex_level = 3, ex_lo = 0, ex_hi = 2;
  auto* ex = app.add_subcommand("export-complex", "Write the truncated chain complex of T(k) or T_n(k)");
  add_family(ex, ex_fam);
  ex->add_option("--k", ex_k);
  ex->add_option("--max-level", ex_level, "Keep cosimplicial levels r <= this");
  ex->add_option("--lo", ex_lo);
  ex->add_option("--hi", ex_hi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };

  try {
    if (common.threads != 0 || app.count("--threads")) set_thread_count(common.threads);

    if (*hom) {
      hom_fam.n_given = given(hom, "--n");
      const auto n = bound_for(hom_fam);
      require(hom_k >= 1 && hom_k <= 3, "--k must be in 1..3");
      require(hom_qmax >= 1 && hom_qmax <= 8, "--qmax must be in 1..8");
      const auto [lo, hi] = parse_range(hom_degrees);
      const auto rep = operad_homology_unchecked(n, hom_k, lo, hi, hom_qmax);
      std::ostringstream t;
      t << family_name(hom_fam) << "(" << hom_k << "), qmax " << hom_qmax << " and " << hom_qmax + 1 << "\n";
      t << std::left << std::setw(8) << "degree" << std::setw(16) << "H" << "H (qmax+1)\n";
      for (const auto& [deg, g] : rep.groups)
        t << std::left << std::setw(8) << deg << std::setw(16) << g.to_string() << rep.refined.at(deg).to_string()
          << "\n";
      if (!rep.stabilized()) t << "not stabilized between qmax and qmax+1\n";
      const json cfg{{"family", hom_fam.family}, {"n", hom_fam.n_given ? json(hom_fam.n) : json(nullptr)},
                     {"k", hom_k}, {"qmax", hom_qmax}, {"degrees", {lo, hi}}};
      return emit(common, "homology-operad", cfg, rep.to_json(), rep.stabilized(), t.str(), elapsed());
    }

    if (*ver) {
      ver_fam.n_given = given(ver, "--n");
      const auto n = bound_for(ver_fam);
      require(ver_policy.k_max >= 1 && ver_policy.k_max <= 3, "--k-max must be in 1..3");
      require(ver_policy.qmax >= 0 && ver_policy.qmax <= 6, "--qmax must be in 0..6");
      require(ver_policy.cap >= 1, "--exhaustive-cap must be positive");
      const ChainOperad op(n);
      auto rep = ver_corrupt ? verify_operad_axioms(op, ver_policy, corrupted_gamma(op))
                             : verify_operad_axioms(op, ver_policy);
      rep.family = family_name(ver_fam);
      const json cfg{{"family", ver_fam.family}, {"n", ver_fam.n_given ? json(ver_fam.n) : json(nullptr)},
                     {"k_max", ver_policy.k_max}, {"qmax", ver_policy.qmax}, {"exhaustive_cap", ver_policy.cap},
                     {"seed", ver_policy.seed}, {"corrupt", ver_corrupt}};
      std::string table = rep.family + ", arity <= " + std::to_string(ver_policy.k_max) + ", q <= " +
                          std::to_string(ver_policy.qmax) + (rep.exhaustive ? ", exhaustive\n" : ", sampled\n");
      return emit(common, "verify-operad", cfg, rep.to_json(), rep.passed(), table + checks_table(rep.checks),
                  elapsed());
    }

    if (*rb) {
      require(rb_k >= 1 && rb_k <= 4, "--k-max must be in 1..4");
      require(rb_q >= 0 && rb_q <= 7, "--qmax must be in 0..7");
      const auto rep = reconcile_basis(rb_k, rb_q);
      std::ostringstream t;
      t << std::left << std::setw(14) << "cell" << std::right << std::setw(10) << "symbols" << std::setw(10)
        << "found" << "\n";
      for (const auto& [cell, c] : rep.counts)
        t << std::left << std::setw(14) << cell << std::right << std::setw(10) << c.first << std::setw(10)
          << c.second << "\n";
      t << rep.functions << " functions, " << rep.basis_elements << " basis elements, " << rep.mismatches
        << " mismatches\n";
      const json cfg{{"k_max", rb_k}, {"qmax", rb_q}};
      return emit(common, "reconcile-basis", cfg, rep.to_json(), rep.ok(), t.str(), elapsed());
    }

    if (*en) {
      require(en_k >= 1 && en_k <= 6, "--k must be in 1..6");
      require(en_q >= 0 && en_q < kMaxPositions, "--q out of range");
      require(en_r >= 0 && en_r <= en_q + 1, "--r must be in 0..q+1");
      if (given(en, "--max-complexity")) require(en_n >= 1, "--max-complexity must be at least 1");
      const ComplexityBound n = given(en, "--max-complexity") ? ComplexityBound(en_n) : ComplexityBound();
      const auto syms = enumerate_symbols(en_k, en_q, en_r, n);
      json arr = json::array();
      std::ostringstream t;
      t << "k " << en_k << ", q " << en_q << ", r " << en_r << ", complexity <= " << n.to_string() << ": "
        << syms.size() << " symbols\n";
      for (const auto& s : syms) {
        arr.push_back(s.to_json());
        if (en_list) t << "  " << s.label() << "  degree " << s.degree() << "\n";
      }
      const json cfg{{"k", en_k}, {"q", en_q}, {"r", en_r}, {"max_complexity", n.to_string()}};
      return emit(common, "enumerate-basis", cfg, {{"count", syms.size()}, {"symbols", arr}}, true, t.str(),
                  elapsed());
    }

    if (*co) {
      require(co_file.empty() != co_builtin.empty(), "give exactly one of --complex and --builtin");
      require(co_dim >= 0 && co_dim <= 6, "--max-dim must be in 0..6");
      const auto w = co_file.empty() ? builtin_complex(co_builtin) : FiniteSimplicialSet::from_json(read_json(co_file));
      const std::string name = co_file.empty() ? co_builtin : co_file;
      const CochainIdentityPolicy policy{co_dim, co_tdim < 0 ? co_dim : co_tdim};
      const auto rep = co_corrupt ? verify_cochain_identities(w, name, policy, corrupted_angle())
                                  : verify_cochain_identities(w, name, policy);
      const json cfg{{"complex", name}, {"max_dim", policy.max_level}, {"ternary_dim", policy.ternary_level},
                     {"corrupt", co_corrupt}};
      return emit(common, "verify-cochain-ops", cfg, rep.to_json(), rep.passed(),
                  name + ", levels <= " + std::to_string(co_dim) + "\n" + checks_table(rep.checks), elapsed());
    }

    if (*ho) {
      require(ho_file.empty() != ho_builtin.empty(), "give exactly one of --algebra and --builtin");
      require(ho_pmax >= 0 && ho_pmax <= 6, "--pmax must be in 0..6");
      const auto r = ho_file.empty() ? builtin_algebra(ho_builtin) : FiniteRankAlgebra::from_json(read_json(ho_file));
      const json cfg{{"algebra", r.to_json()}, {"pmax", ho_pmax}, {"report", ho_report}, {"skew", ho_skew}};
      std::ostringstream t;
      t << r.name() << (r.ring() == CoefficientRing::Integers ? " over Z" : "") << "\n";
      if (ho_report == "cohomology") {
        const auto groups = hochschild_cohomology(r, ho_pmax);
        json arr = json::array();
        t << std::left << std::setw(8) << "degree" << (r.ring() == CoefficientRing::Integers ? "rank" : "dim")
          << "\n";
        for (const auto& g : groups) {
          arr.push_back(g.to_json());
          t << std::left << std::setw(8) << g.degree << g.rank;
          for (const auto& x : g.torsion) t << " + Z/" << x;
          t << "\n";
        }
        return emit(common, "hochschild", cfg, {{"cohomology", arr}}, true, t.str(), elapsed());
      }
      const int cp = ho_cpmax < 0 ? ho_pmax : ho_cpmax;
      const auto rep = ho_skew ? hochschild_report(r, ho_pmax, cp, skewed_cup()) : hochschild_report(r, ho_pmax, cp);
      t << std::left << std::setw(8) << "degree" << std::setw(10) << "computed" << "oracle\n";
      for (std::size_t p = 0; p < rep.cohomology.size(); ++p)
        t << std::left << std::setw(8) << p << std::setw(10) << rep.cohomology[p].rank << rep.oracle.groups[p].rank
          << " (" << rep.oracle.methods[p] << ")\n";
      return emit(common, "hochschild", cfg, rep.to_json(), rep.passed(), t.str() + checks_table(rep.checks),
                  elapsed());
    }

    if (*cu) {
      require(int(!cu_compose.empty()) + int(cu_components) + int(cu_verify) == 1,
              "give exactly one of --compose, --components, --verify");
      if (!cu_compose.empty()) {
        const json in = read_json(cu_compose);
        const auto outer = CubesElement::from_json(in.at("outer"));
        std::vector<CubesElement> inner;
        for (const auto& x : in.at("inner")) inner.push_back(CubesElement::from_json(x));
        const auto out = gamma_cubes(outer, inner);
        std::ostringstream t;
        for (std::size_t i = 0; i < out.cubes.size(); ++i) {
          t << "cube " << i + 1 << ": a = (";
          for (std::size_t j = 0; j < out.cubes[i].a.size(); ++j)
            t << (j ? ", " : "") << out.cubes[i].a[j] << " = " << out.cubes[i].a[j].get_d();
          t << "), b = " << out.cubes[i].b << " = " << out.cubes[i].b.get_d() << "\n";
        }
        return emit(common, "cubes", {{"compose", cu_compose}}, out.to_json(), true, t.str(), elapsed());
      }
      if (cu_components) {
        require(cu_n >= 1, "--n must be at least 1");
        require(cu_k >= 0, "--k must be nonnegative");
        const auto c = count_components(cu_n, cu_k, cu_res);
        std::ostringstream t;
        t << "C_" << cu_n << "(" << cu_k << "): " << c.components << " components (sampling heuristic, "
          << c.samples << " samples at resolution " << cu_res << ", stable at " << cu_res + 1 << ")\n";
        return emit(common, "cubes", {{"n", cu_n}, {"k", cu_k}, {"resolution", cu_res}}, c.to_json(), true, t.str(),
                    elapsed());
      }
      require(cu_dim >= 1 && cu_arity >= 1, "--max-dim and --max-arity must be positive");
      const auto rep = verify_cubes_axioms(cu_dim, cu_arity, cu_per, cu_seed);
      std::ostringstream t;
      t << rep.configurations << " configurations, " << rep.instances << " instances, " << rep.failures
        << " failures (seed " << cu_seed << ")\n";
      return emit(common, "cubes",
                  {{"max_dim", cu_dim}, {"max_arity", cu_arity}, {"per_configuration", cu_per}, {"seed", cu_seed}},
                  rep.to_json(), rep.passed(), t.str(), elapsed());
    }

    if (*ex) {
      ex_fam.n_given = given(ex, "--n");
      const auto n = bound_for(ex_fam);
      require(ex_k >= 1 && ex_k <= 3, "--k must be in 1..3");
      require(ex_level >= 0 && ex_level <= 6, "--max-level must be in 0..6");
      require(ex_lo <= ex_hi, "--lo must not exceed --hi");
      const auto c = ChainOperad(n).complex(ex_k, ex_level, ex_lo, ex_hi);
      std::ostringstream t;
      t << family_name(ex_fam) << "(" << ex_k << "), levels <= " << ex_level << "\n";
      for (int d = ex_lo - 1; d <= ex_hi + 1; ++d) t << "  degree " << d << ": rank " << c.rank(d) << "\n";
      const json cfg{{"family", ex_fam.family}, {"n", ex_fam.n_given ? json(ex_fam.n) : json(nullptr)},
                     {"k", ex_k}, {"max_level", ex_level}, {"lo", ex_lo}, {"hi", ex_hi}};
      return emit(common, "export-complex", cfg, c.to_json(), true, t.str(), elapsed());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << error_name(e) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
