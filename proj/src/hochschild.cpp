#include "cosop/hochschild.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_set>

#include "cosop/errors.hpp"
#include "cosop/smith.hpp"

namespace cosop {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<int> digits(std::size_t index, int n, int len) {
  std::vector<int> d(len);
  for (int i = len - 1; i >= 0; --i) {
    d[i] = static_cast<int>(index % n);
    index /= n;
  }
  return d;
}

std::size_t encode(const std::vector<int>& d, int n, std::size_t from, std::size_t to) {
  std::size_t idx = 0;
  for (std::size_t i = from; i < to; ++i) idx = idx * n + d[i];
  return idx;
}

Integer sign(int e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace

// ---------------------------------------------------------------------------
// algebra

FiniteRankAlgebra::FiniteRankAlgebra(std::string name, CoefficientRing ring, long p, Tensor structure,
                                     std::vector<Integer> unit)
    : name_(std::move(name)), ring_(ring), p_(ring == CoefficientRing::Integers ? 0 : p),
      n_(static_cast<int>(structure.size())), c_(std::move(structure)), unit_(std::move(unit)) {
  if (ring_ == CoefficientRing::ModP && p_ < 2) throw InvalidInput("modulus must be at least 2");
  if (n_ < 1) throw InvalidInput("algebra rank must be positive");
  if (static_cast<int>(unit_.size()) != n_) throw InvalidInput("unit has the wrong length");
  for (auto& row : c_) {
    if (static_cast<int>(row.size()) != n_) throw InvalidInput("structure tensor has the wrong shape");
    for (auto& v : row) {
      if (static_cast<int>(v.size()) != n_) throw InvalidInput("structure tensor has the wrong shape");
      for (auto& x : v) x = reduce(x);
    }
  }
  for (auto& x : unit_) x = reduce(x);
  std::vector<std::vector<Integer>> e(n_, std::vector<Integer>(n_, 0));
  for (int i = 0; i < n_; ++i) e[i][i] = 1;
  for (int i = 0; i < n_; ++i) {
    if (multiply(unit_, e[i]) != e[i] || multiply(e[i], unit_) != e[i])
      throw InvalidInput(name_ + ": unit fails on basis element " + std::to_string(i));
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (multiply(multiply(e[i], e[j]), e[k]) != multiply(e[i], multiply(e[j], e[k])))
          throw InvalidInput(name_ + ": not associative on basis triple (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
  }
}

Integer FiniteRankAlgebra::reduce(const Integer& v) const {
  if (ring_ == CoefficientRing::Integers) return v;
  Integer r = v % p_;
  if (r < 0) r += p_;
  return r;
}

std::vector<Integer> FiniteRankAlgebra::multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
  std::vector<Integer> out(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      const Integer ab = a[i] * b[j];
      for (int k = 0; k < n_; ++k)
        if (c_[i][j][k] != 0) out[k] += ab * c_[i][j][k];
    }
  }
  for (auto& x : out) x = reduce(x);
  return out;
}

nlohmann::json FiniteRankAlgebra::to_json() const {
  nlohmann::json s = nlohmann::json::array();
  for (const auto& row : c_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) {
      nlohmann::json e = nlohmann::json::array();
      for (const auto& x : v) e.push_back(x.get_si());
      r.push_back(e);
    }
    s.push_back(r);
  }
  nlohmann::json u = nlohmann::json::array();
  for (const auto& x : unit_) u.push_back(x.get_si());
  nlohmann::json j{{"name", name_}, {"ring", ring_ == CoefficientRing::Integers ? "Z" : "Zp"},
                   {"rank", n_}, {"structure", s}, {"unit", u}};
  if (ring_ == CoefficientRing::ModP) j["p"] = p_;
  return j;
}

FiniteRankAlgebra FiniteRankAlgebra::from_json(const nlohmann::json& j) {
  try {
    const std::string ring = j.at("ring").get<std::string>();
    CoefficientRing cr;
    long p = 0;
    if (ring == "Z") {
      cr = CoefficientRing::Integers;
    } else if (ring == "Zp") {
      cr = CoefficientRing::ModP;
      p = j.at("p").get<long>();
    } else {
      throw InvalidInput("ring must be \"Z\" or \"Zp\"");
    }
    const int n = j.at("rank").get<int>();
    Tensor t;
    for (const auto& row : j.at("structure")) {
      std::vector<std::vector<Integer>> r;
      for (const auto& v : row) {
        std::vector<Integer> e;
        for (const auto& x : v) e.push_back(Integer(x.get<long>()));
        r.push_back(std::move(e));
      }
      t.push_back(std::move(r));
    }
    if (static_cast<int>(t.size()) != n) throw InvalidInput("rank does not match the structure tensor");
    std::vector<Integer> unit;
    for (const auto& x : j.at("unit")) unit.push_back(Integer(x.get<long>()));
    return FiniteRankAlgebra(j.value("name", std::string("algebra")), cr, p, std::move(t), std::move(unit));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed algebra: ") + e.what());
  }
}

namespace {
FiniteRankAlgebra::Tensor zero_tensor(int n) {
  return FiniteRankAlgebra::Tensor(n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n, 0)));
}
}  // namespace

FiniteRankAlgebra FiniteRankAlgebra::integers() {
  auto t = zero_tensor(1);
  t[0][0][0] = 1;
  return FiniteRankAlgebra("Z", CoefficientRing::Integers, 0, t, {Integer(1)});
}

FiniteRankAlgebra FiniteRankAlgebra::dual_numbers(long p) {
  auto t = zero_tensor(2);
  t[0][0][0] = 1;
  t[0][1][1] = 1;
  t[1][0][1] = 1;
  return FiniteRankAlgebra("Z/" + std::to_string(p) + "[x]/(x^2)", CoefficientRing::ModP, p, t,
                           {Integer(1), Integer(0)});
}

FiniteRankAlgebra FiniteRankAlgebra::upper_triangular(long p) {
  // E11 = 0, E12 = 1, E22 = 2
  auto t = zero_tensor(3);
  t[0][0][0] = 1;
  t[0][1][1] = 1;
  t[1][2][1] = 1;
  t[2][2][2] = 1;
  return FiniteRankAlgebra("upper triangular 2x2 over Z/" + std::to_string(p), CoefficientRing::ModP, p, t,
                           {Integer(1), Integer(0), Integer(1)});
}

FiniteRankAlgebra FiniteRankAlgebra::matrices(long p) {
  // E_ab at index 2a + b
  auto t = zero_tensor(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d) t[2 * a + b][2 * b + d][2 * a + d] = 1;
  return FiniteRankAlgebra("2x2 matrices over Z/" + std::to_string(p), CoefficientRing::ModP, p, t,
                           {Integer(1), Integer(0), Integer(0), Integer(1)});
}

// ---------------------------------------------------------------------------
// cochains

bool HochschildCochain::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& v) { return v == 0; });
}

std::size_t cochain_size(const FiniteRankAlgebra& r, int degree) {
  if (degree < 0) throw InvalidInput("negative cochain degree");
  return ipow(r.rank(), degree + 1);
}

HochschildCochain zero_cochain(const FiniteRankAlgebra& r, int degree) {
  return {degree, std::vector<Integer>(cochain_size(r, degree), 0)};
}

HochschildCochain basis_cochain(const FiniteRankAlgebra& r, int degree, std::size_t index) {
  auto c = zero_cochain(r, degree);
  c.coeffs.at(index) = 1;
  return c;
}

HochschildCochain unit_cochain(const FiniteRankAlgebra& r) { return {0, r.unit()}; }

namespace {
void reduce_all(const FiniteRankAlgebra& r, HochschildCochain& c) {
  if (r.ring() == CoefficientRing::ModP)
    for (auto& x : c.coeffs) x = r.reduce(x);
}
void check_shape(const FiniteRankAlgebra& r, const HochschildCochain& c) {
  if (c.coeffs.size() != cochain_size(r, c.degree)) throw IncompatibleInputs("cochain does not match its degree");
}
}  // namespace

HochschildCochain hochschild_differential(const FiniteRankAlgebra& r, const HochschildCochain& rho) {
  check_shape(r, rho);
  const int n = r.rank();
  const int p = rho.degree;
  HochschildCochain out = zero_cochain(r, p + 1);
  const std::size_t tuples = ipow(n, p + 1);
  std::vector<Integer> acc(n);
  for (std::size_t T = 0; T < tuples; ++T) {
    const auto t = digits(T, n, p + 1);
    std::fill(acc.begin(), acc.end(), 0);
    // r_1 ρ(r_2, ..., r_{p+1})
    const std::size_t rest = encode(t, n, 1, t.size());
    for (int a = 0; a < n; ++a) {
      const Integer& v = rho.coeffs[rest * n + a];
      if (v == 0) continue;
      for (int k = 0; k < n; ++k) acc[k] += r.c(t[0], a, k) * v;
    }
    // (-1)^i ρ(..., r_i r_{i+1}, ...)
    for (int i = 1; i <= p; ++i) {
      const Integer s = sign(i);
      for (int b = 0; b < n; ++b) {
        const Integer& cb = r.c(t[i - 1], t[i], b);
        if (cb == 0) continue;
        std::vector<int> u(t.begin(), t.begin() + (i - 1));
        u.push_back(b);
        u.insert(u.end(), t.begin() + i + 1, t.end());
        const std::size_t idx = encode(u, n, 0, u.size());
        for (int k = 0; k < n; ++k) acc[k] += s * cb * rho.coeffs[idx * n + k];
      }
    }
    // (-1)^{p+1} ρ(r_1, ..., r_p) r_{p+1}
    const std::size_t front = encode(t, n, 0, p);
    const Integer s = sign(p + 1);
    for (int a = 0; a < n; ++a) {
      const Integer& v = rho.coeffs[front * n + a];
      if (v == 0) continue;
      for (int k = 0; k < n; ++k) acc[k] += s * v * r.c(a, t[p], k);
    }
    for (int k = 0; k < n; ++k) out.coeffs[T * n + k] = acc[k];
  }
  reduce_all(r, out);
  return out;
}

HochschildCochain hochschild_cup(const FiniteRankAlgebra& r, const HochschildCochain& a, const HochschildCochain& b) {
  check_shape(r, a);
  check_shape(r, b);
  const int n = r.rank();
  const int p = a.degree, q = b.degree;
  HochschildCochain out = zero_cochain(r, p + q);
  const std::size_t tuples = ipow(n, p + q);
  const std::size_t right = ipow(n, q);
  for (std::size_t T = 0; T < tuples; ++T) {
    const std::size_t ia = T / right, ib = T % right;
    for (int u = 0; u < n; ++u) {
      const Integer& x = a.coeffs[ia * n + u];
      if (x == 0) continue;
      for (int v = 0; v < n; ++v) {
        const Integer& y = b.coeffs[ib * n + v];
        if (y == 0) continue;
        for (int k = 0; k < n; ++k) out.coeffs[T * n + k] += x * y * r.c(u, v, k);
      }
    }
  }
  reduce_all(r, out);
  return out;
}

HochschildCochain hochschild_circle(const FiniteRankAlgebra& r, const HochschildCochain& a,
                                    const HochschildCochain& b) {
  check_shape(r, a);
  check_shape(r, b);
  const int n = r.rank();
  const int p = a.degree, q = b.degree;
  if (p + q < 1) throw InvalidInput("circle product needs total degree at least 1");
  HochschildCochain out = zero_cochain(r, p + q - 1);
  const std::size_t tuples = ipow(n, p + q - 1);
  for (std::size_t T = 0; T < tuples; ++T) {
    const auto t = digits(T, n, p + q - 1);
    for (int i = 0; i < p; ++i) {
      const Integer s = sign(i * (q - 1));
      const std::size_t inner = encode(t, n, i, i + q);
      for (int u = 0; u < n; ++u) {
        const Integer& bv = b.coeffs[inner * n + u];
        if (bv == 0) continue;
        std::vector<int> w(t.begin(), t.begin() + i);
        w.push_back(u);
        w.insert(w.end(), t.begin() + i + q, t.end());
        const std::size_t outer = encode(w, n, 0, w.size());
        for (int k = 0; k < n; ++k) out.coeffs[T * n + k] += s * bv * a.coeffs[outer * n + k];
      }
    }
  }
  reduce_all(r, out);
  return out;
}

HochschildCochain add(const FiniteRankAlgebra& r, const HochschildCochain& a, const HochschildCochain& b, long scale) {
  if (a.degree != b.degree) throw IncompatibleInputs("adding cochains of different degrees");
  HochschildCochain out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i] * scale;
  reduce_all(r, out);
  return out;
}

HochschildCochain gerstenhaber_bracket(const FiniteRankAlgebra& r, const HochschildCochain& a,
                                       const HochschildCochain& b) {
  const int p = a.degree, q = b.degree;
  const long s = ((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1;
  return add(r, hochschild_circle(r, a, b), hochschild_circle(r, b, a), s);
}

IntMatrix differential_matrix(const FiniteRankAlgebra& r, int degree) {
  const std::size_t cols = cochain_size(r, degree);
  IntMatrix m(cochain_size(r, degree + 1), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const auto d = hochschild_differential(r, basis_cochain(r, degree, j));
    IntMatrix::Column col;
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
      if (d.coeffs[i] != 0) col.push_back({i, d.coeffs[i]});
    m.set_column(j, std::move(col));
  }
  return m;
}

nlohmann::json HochschildGroup::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& x : torsion) t.push_back(x.get_str());
  return {{"degree", degree}, {"rank", rank}, {"torsion", t}};
}

namespace {
constexpr std::size_t kMaxCochainSize = 20000;

void guard(const FiniteRankAlgebra& r, int pmax) {
  if (pmax < 0) throw InvalidInput("pmax must be nonnegative");
  if (ipow(r.rank(), pmax + 2) > kMaxCochainSize)
    throw InfeasibleSize("cochains of degree " + std::to_string(pmax + 1) + " exceed the size guard");
}

std::size_t matrix_rank(const FiniteRankAlgebra& r, const IntMatrix& m) {
  if (r.ring() == CoefficientRing::Integers) return rank(m);
  return modp::rank(modp::from_int(m, r.modulus()), r.modulus());
}
}  // namespace

std::vector<HochschildGroup> hochschild_cohomology(const FiniteRankAlgebra& r, int pmax) {
  guard(r, pmax);
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> ds;
  for (int p = 0; p <= pmax; ++p) {
    ds.push_back(differential_matrix(r, p));
    ranks.push_back(matrix_rank(r, ds.back()));
  }
  std::vector<HochschildGroup> out;
  for (int p = 0; p <= pmax; ++p) {
    HochschildGroup g;
    g.degree = p;
    const std::size_t in = p > 0 ? ranks[p - 1] : 0;
    g.rank = cochain_size(r, p) - ranks[p] - in;
    if (r.ring() == CoefficientRing::Integers && p > 0)
      for (const auto& f : invariant_factors(ds[p - 1]))
        if (f > 1) g.torsion.push_back(f);
    out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// oracle

namespace {

using Elem = std::vector<Integer>;

Elem basis_elem(int n, int i) {
  Elem e(n, 0);
  e[i] = 1;
  return e;
}

/// ρ evaluated on arbitrary elements by expanding every argument.
Elem eval_multilinear(const FiniteRankAlgebra& r, const HochschildCochain& rho, const std::vector<Elem>& args) {
  const int n = r.rank();
  Elem out(n, 0);
  const std::size_t combos = ipow(n, static_cast<int>(args.size()));
  for (std::size_t c = 0; c < combos; ++c) {
    const auto d = digits(c, n, static_cast<int>(args.size()));
    Integer w = 1;
    for (std::size_t i = 0; i < args.size() && w != 0; ++i) w *= args[i][d[i]];
    if (w == 0) continue;
    for (int k = 0; k < n; ++k) out[k] += w * rho.coeffs[c * n + k];
  }
  for (auto& x : out) x = r.reduce(x);
  return out;
}

std::vector<std::vector<Integer>> oracle_matrix(const FiniteRankAlgebra& r, int p) {
  const int n = r.rank();
  const std::size_t cols = ipow(n, p + 1), rows = ipow(n, p + 2);
  std::vector<std::vector<Integer>> cols_out(cols, std::vector<Integer>(rows, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    HochschildCochain rho{p, std::vector<Integer>(cols, 0)};
    rho.coeffs[j] = 1;
    for (std::size_t T = 0; T < ipow(n, p + 1); ++T) {
      const auto t = digits(T, n, p + 1);
      std::vector<Elem> args;
      for (int x : t) args.push_back(basis_elem(n, x));
      Elem acc = r.multiply(args[0], eval_multilinear(r, rho, {args.begin() + 1, args.end()}));
      for (int i = 1; i <= p; ++i) {
        std::vector<Elem> merged(args.begin(), args.begin() + (i - 1));
        merged.push_back(r.multiply(args[i - 1], args[i]));
        merged.insert(merged.end(), args.begin() + i + 1, args.end());
        const Elem v = eval_multilinear(r, rho, merged);
        for (int k = 0; k < n; ++k) acc[k] += (i % 2 ? -1 : 1) * v[k];
      }
      const Elem last = r.multiply(eval_multilinear(r, rho, {args.begin(), args.begin() + p}), args[p]);
      for (int k = 0; k < n; ++k) acc[k] += ((p + 1) % 2 ? -1 : 1) * last[k];
      for (int k = 0; k < n; ++k) cols_out[j][T * n + k] = r.reduce(acc[k]);
    }
  }
  return cols_out;
}

/// Rank by plain row reduction over Q or Z/p on a dense copy.
std::size_t oracle_rank(const FiniteRankAlgebra& r, const std::vector<std::vector<Integer>>& cols) {
  if (cols.empty()) return 0;
  const std::size_t nr = cols[0].size();
  std::size_t rank = 0;
  if (r.ring() == CoefficientRing::Integers) {
    std::vector<std::vector<mpq_class>> a(cols.size(), std::vector<mpq_class>(nr));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < nr; ++i) a[j][i] = cols[j][i];
    for (std::size_t i = 0; i < nr && rank < a.size(); ++i) {
      std::size_t piv = rank;
      while (piv < a.size() && a[piv][i] == 0) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[piv], a[rank]);
      for (std::size_t j = rank + 1; j < a.size(); ++j) {
        if (a[j][i] == 0) continue;
        const mpq_class f = a[j][i] / a[rank][i];
        for (std::size_t k = i; k < nr; ++k) a[j][k] -= f * a[rank][k];
      }
      ++rank;
    }
    return rank;
  }
  const long p = r.modulus();
  std::vector<std::vector<long>> a(cols.size(), std::vector<long>(nr));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < nr; ++i) a[j][i] = r.reduce(cols[j][i]).get_si();
  auto inv = [p](long x) {
    long res = 1, e = p - 2;
    for (long b = x; e; e >>= 1, b = b * b % p)
      if (e & 1) res = res * b % p;
    return res;
  };
  for (std::size_t i = 0; i < nr && rank < a.size(); ++i) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][i] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const long iv = inv(a[rank][i]);
    for (std::size_t j = rank + 1; j < a.size(); ++j) {
      if (a[j][i] == 0) continue;
      const long f = a[j][i] * iv % p;
      for (std::size_t k = i; k < nr; ++k) a[j][k] = ((a[j][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

constexpr double kEnumerationLimit = 1 << 18;

/// Walks every vector of (Z/p)^cols, calling visit with its image.
template <class Visit>
void enumerate_images(const std::vector<std::vector<Integer>>& cols, long p, std::size_t rows, Visit visit) {
  std::vector<std::vector<long>> c(cols.size(), std::vector<long>(rows));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) {
      long v = cols[j][i].get_si() % p;
      c[j][i] = v < 0 ? v + p : v;
    }
  std::vector<long> digit(cols.size(), 0), y(rows, 0);
  while (true) {
    visit(y);
    std::size_t j = 0;
    // Odometer step; every digit change adds its column once.
    while (j < cols.size()) {
      digit[j] = (digit[j] + 1) % p;
      for (std::size_t i = 0; i < rows; ++i) y[i] = (y[i] + c[j][i]) % p;
      if (digit[j] != 0) break;
      ++j;
    }
    if (j == cols.size()) break;
  }
}

std::size_t log_exact(std::size_t count, long p) {
  std::size_t e = 0;
  while (count > 1) {
    if (count % p) throw ComparisonFailed("subgroup order is not a power of p");
    count /= p;
    ++e;
  }
  return e;
}

}  // namespace

HochschildOracle hochschild_oracle(const FiniteRankAlgebra& r, int pmax) {
  guard(r, pmax);
  HochschildOracle o;
  std::vector<std::vector<std::vector<Integer>>> mats;
  std::vector<std::size_t> kernel_dim, image_dim;  // of d_p
  for (int p = 0; p <= pmax; ++p) {
    mats.push_back(oracle_matrix(r, p));
    const auto dense = differential_matrix(r, p).to_dense();
    for (std::size_t j = 0; j < mats.back().size(); ++j)
      for (std::size_t i = 0; i < dense.size(); ++i)
        if (r.reduce(dense[i][j]) != mats.back()[j][i]) o.differentials_agree = false;
  }
  for (int p = 0; p <= pmax; ++p) {
    const auto& m = mats[p];
    const std::size_t dim = m.size();
    const std::size_t rows = cochain_size(r, p + 1);
    const bool enumerable =
        r.ring() == CoefficientRing::ModP && std::pow(double(r.modulus()), double(dim)) <= kEnumerationLimit;
    if (enumerable) {
      std::size_t zeros = 0;
      std::unordered_set<std::string> images;
      enumerate_images(m, r.modulus(), rows, [&](const std::vector<long>& y) {
        if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) ++zeros;
        images.insert(std::string(reinterpret_cast<const char*>(y.data()), y.size() * sizeof(long)));
      });
      kernel_dim.push_back(log_exact(zeros, r.modulus()));
      image_dim.push_back(log_exact(images.size(), r.modulus()));
      o.methods.push_back("enumeration");
    } else {
      const std::size_t rk = oracle_rank(r, m);
      kernel_dim.push_back(dim - rk);
      image_dim.push_back(rk);
      o.methods.push_back("elimination");
    }
  }
  for (int p = 0; p <= pmax; ++p) {
    HochschildGroup g;
    g.degree = p;
    g.rank = kernel_dim[p] - (p > 0 ? image_dim[p - 1] : 0);
    o.groups.push_back(g);
  }
  return o;
}

CupFn skewed_cup() {
  return [](const FiniteRankAlgebra& r, const HochschildCochain& a, const HochschildCochain& b) {
    if (a.degree > b.degree) return zero_cochain(r, a.degree + b.degree);
    return hochschild_cup(r, a, b);
  };
}

// ---------------------------------------------------------------------------
// report

bool HochschildReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed(); });
}

const AxiomCheck& HochschildReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InvalidInput("no check named " + name);
}

nlohmann::json HochschildReport::to_json() const {
  nlohmann::json groups = nlohmann::json::array(), oracle_groups = nlohmann::json::array();
  for (const auto& g : cohomology) groups.push_back(g.to_json());
  for (const auto& g : oracle.groups) oracle_groups.push_back(g.to_json());
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"instances", c.instances},
                   {"failures", c.failures},
                   {"passed", c.passed()},
                   {"witnesses", c.witnesses}});
  return {{"algebra", algebra},
          {"pmax", pmax},
          {"cochain_pmax", cochain_pmax},
          {"passed", passed()},
          {"cohomology", groups},
          {"oracle", {{"groups", oracle_groups}, {"methods", oracle.methods},
                      {"differentials_agree", oracle.differentials_agree}}},
          {"checks", arr},
          {"certificates", certificates}};
}

namespace {

nlohmann::json cochain_json(const HochschildCochain& c) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : c.coeffs) v.push_back(x.get_str());
  return {{"degree", c.degree}, {"coeffs", v}};
}

class Checks {
 public:
  explicit Checks(HochschildReport& rep) : rep_(rep) {}
  void begin(const std::string& name) {
    rep_.checks.push_back({});
    rep_.checks.back().name = name;
    start_ = std::chrono::steady_clock::now();
  }
  void end() {
    rep_.checks.back().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  template <class W>
  void expect(bool ok, W&& witness) {
    auto& c = rep_.checks.back();
    ++c.instances;
    ++c.available;
    if (ok) return;
    ++c.failures;
    if (c.witnesses.size() < 5) c.witnesses.push_back(witness());
  }

 private:
  HochschildReport& rep_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

HochschildReport hochschild_report(const FiniteRankAlgebra& r, int pmax, int cochain_pmax) {
  return hochschild_report(r, pmax, cochain_pmax, hochschild_cup);
}

HochschildReport hochschild_report(const FiniteRankAlgebra& r, int pmax, int cochain_pmax, const CupFn& cup) {
  guard(r, std::max(pmax, cochain_pmax));
  HochschildReport rep;
  rep.algebra = r.name();
  rep.pmax = pmax;
  rep.cochain_pmax = cochain_pmax;
  Checks run(rep);
  const int cp = cochain_pmax;
  auto d = [&](const HochschildCochain& x) { return hochschild_differential(r, x); };
  auto br = [&](const HochschildCochain& x, const HochschildCochain& y) { return gerstenhaber_bracket(r, x, y); };
  auto sum = [&](const HochschildCochain& x, const HochschildCochain& y, long s = 1) { return add(r, x, y, s); };
  auto B = [&](int p, std::size_t i) { return basis_cochain(r, p, i); };
  auto lab = [](int p, std::size_t i) { return nlohmann::json{{"degree", p}, {"index", i}}; };

  run.begin("d_squared_zero");
  for (int p = 0; p <= cp; ++p)
    for (std::size_t i = 0; i < cochain_size(r, p); ++i)
      run.expect(d(d(B(p, i))).is_zero(), [&] { return lab(p, i); });
  run.end();

  run.begin("leibniz");
  for (int p = 0; p <= cp; ++p)
    for (int q = 0; p + q <= cp; ++q)
      for (std::size_t i = 0; i < cochain_size(r, p); ++i)
        for (std::size_t j = 0; j < cochain_size(r, q); ++j) {
          const auto x = B(p, i), y = B(q, j);
          const auto rhs = sum(cup(r, d(x), y), cup(r, x, d(y)), p % 2 ? -1 : 1);
          run.expect(d(cup(r, x, y)) == rhs, [&] { return nlohmann::json{lab(p, i), lab(q, j)}; });
        }
  run.end();

  run.begin("cup_associative");
  for (int p = 0; p <= cp; ++p)
    for (int q = 0; p + q <= cp; ++q)
      for (int s = 0; p + q + s <= cp; ++s)
        for (std::size_t i = 0; i < cochain_size(r, p); ++i)
          for (std::size_t j = 0; j < cochain_size(r, q); ++j)
            for (std::size_t k = 0; k < cochain_size(r, s); ++k) {
              const auto x = B(p, i), y = B(q, j), z = B(s, k);
              run.expect(cup(r, cup(r, x, y), z) == cup(r, x, cup(r, y, z)),
                         [&] { return nlohmann::json{lab(p, i), lab(q, j), lab(s, k)}; });
            }
  run.end();

  run.begin("cup_unit");
  for (int p = 0; p <= cp; ++p)
    for (std::size_t i = 0; i < cochain_size(r, p); ++i) {
      const auto x = B(p, i), u = unit_cochain(r);
      run.expect(cup(r, u, x) == x && cup(r, x, u) == x, [&] { return lab(p, i); });
    }
  run.end();

  // d[x,y] = (-1)^{q-1}[dx,y] + [x,dy]
  run.begin("bracket_compatible_with_d");
  for (int p = 0; p <= cp; ++p)
    for (int q = 0; p + q <= cp; ++q) {
      if (p + q < 1) continue;
      for (std::size_t i = 0; i < cochain_size(r, p); ++i)
        for (std::size_t j = 0; j < cochain_size(r, q); ++j) {
          const auto x = B(p, i), y = B(q, j);
          const auto dxy = br(d(x), y);
          const auto rhs = sum(br(x, d(y)), dxy, (q - 1) % 2 ? -1 : 1);
          run.expect(d(br(x, y)) == rhs, [&] { return nlohmann::json{lab(p, i), lab(q, j)}; });
        }
    }
  run.end();

  rep.cohomology = hochschild_cohomology(r, pmax);
  rep.oracle = hochschild_oracle(r, pmax);

  run.begin("differential_routes_agree");
  run.expect(rep.oracle.differentials_agree, [] { return nlohmann::json("rebuilt differential differs"); });
  run.end();

  run.begin("cohomology_matches_oracle");
  for (int p = 0; p <= pmax; ++p)
    run.expect(rep.cohomology[p].rank == rep.oracle.groups[p].rank, [&] {
      return nlohmann::json{{"degree", p}, {"computed", rep.cohomology[p].rank}, {"oracle", rep.oracle.groups[p].rank}};
    });
  run.end();

  // Cocycle generators and coboundary solving.
  std::vector<IntMatrix> dm;
  for (int p = 0; p <= pmax; ++p) dm.push_back(differential_matrix(r, p));
  std::vector<std::vector<HochschildCochain>> cocycles(pmax + 1);
  for (int p = 0; p <= pmax; ++p) {
    if (r.ring() == CoefficientRing::Integers) {
      const IntMatrix k = integer_kernel(dm[p]);
      for (std::size_t c = 0; c < k.cols(); ++c) {
        HochschildCochain z = zero_cochain(r, p);
        for (std::size_t i = 0; i < k.rows(); ++i) z.coeffs[i] = k.get(i, c);
        cocycles[p].push_back(z);
      }
    } else {
      for (const auto& v : modp::kernel(modp::from_int(dm[p], r.modulus()), r.modulus())) {
        HochschildCochain z = zero_cochain(r, p);
        for (std::size_t i = 0; i < v.size(); ++i) z.coeffs[i] = Integer(static_cast<long>(v[i]));
        cocycles[p].push_back(z);
      }
    }
  }

  // Finds c with dc = target and verifies it; the certificate is recorded.
  auto cobound = [&](const std::string& what, const HochschildCochain& target) {
    const int m = target.degree;
    if (target.is_zero()) return true;
    if (m == 0 || m - 1 > pmax) return false;
    HochschildCochain c = zero_cochain(r, m - 1);
    if (r.ring() == CoefficientRing::Integers) {
      const auto sol = solve_integer(dm[m - 1], target.coeffs);
      if (!sol) return false;
      c.coeffs = *sol;
    } else {
      std::vector<std::int64_t> b;
      for (const auto& x : target.coeffs) b.push_back(r.reduce(x).get_si());
      const auto sol = modp::solve(modp::from_int(dm[m - 1], r.modulus()), b, r.modulus());
      if (!sol) return false;
      for (std::size_t i = 0; i < sol->size(); ++i) c.coeffs[i] = Integer(static_cast<long>((*sol)[i]));
    }
    if (d(c) != target) return false;
    if (rep.certificates.size() < 24)
      rep.certificates.push_back({{"identity", what}, {"target", cochain_json(target)}, {"cobounding", cochain_json(c)}});
    return true;
  };

  auto each_pair = [&](auto pred, auto body) {
    for (int p = 0; p <= pmax; ++p)
      for (int q = 0; q <= pmax; ++q) {
        if (!pred(p, q)) continue;
        for (std::size_t i = 0; i < cocycles[p].size(); ++i)
          for (std::size_t j = 0; j < cocycles[q].size(); ++j) body(p, q, i, j);
      }
  };
  auto zlab = [](int p, std::size_t i) { return nlohmann::json{{"cocycle_degree", p}, {"generator", i}}; };

  run.begin("cup_graded_commutative");
  each_pair([&](int p, int q) { return p + q <= pmax; },
            [&](int p, int q, std::size_t i, std::size_t j) {
              const auto& x = cocycles[p][i];
              const auto& y = cocycles[q][j];
              const auto diff = sum(cup(r, x, y), cup(r, y, x), (p * q) % 2 ? 1 : -1);
              run.expect(cobound("cup_graded_commutative", diff), [&] { return nlohmann::json{zlab(p, i), zlab(q, j)}; });
            });
  run.end();

  run.begin("bracket_antisymmetric");
  each_pair([&](int p, int q) { return p + q >= 1 && p + q - 1 <= pmax; },
            [&](int p, int q, std::size_t i, std::size_t j) {
              const auto& x = cocycles[p][i];
              const auto& y = cocycles[q][j];
              const auto s = sum(br(x, y), br(y, x), ((p - 1) * (q - 1)) % 2 ? -1 : 1);
              run.expect(s.is_zero(), [&] { return nlohmann::json{zlab(p, i), zlab(q, j)}; });
            });
  run.end();

  run.begin("bracket_of_cocycles_is_cocycle");
  each_pair([&](int p, int q) { return p + q >= 1 && p + q - 1 <= pmax; },
            [&](int p, int q, std::size_t i, std::size_t j) {
              run.expect(d(br(cocycles[p][i], cocycles[q][j])).is_zero(),
                         [&] { return nlohmann::json{zlab(p, i), zlab(q, j)}; });
            });
  run.end();

  run.begin("bracket_with_unit");
  for (int q = 1; q <= pmax; ++q)
    for (std::size_t j = 0; j < cocycles[q].size(); ++j)
      run.expect(cobound("bracket_with_unit", br(unit_cochain(r), cocycles[q][j])),
                 [&] { return zlab(q, j); });
  run.end();

  run.begin("jacobi");
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= pmax; ++q)
      for (int s = 0; s <= pmax; ++s) {
        const int total = p + q + s - 2;
        if (total < 0 || total > pmax || p + q < 1 || q + s < 1 || s + p < 1) continue;
        for (std::size_t i = 0; i < cocycles[p].size(); ++i)
          for (std::size_t j = 0; j < cocycles[q].size(); ++j)
            for (std::size_t k = 0; k < cocycles[s].size(); ++k) {
              const auto& x = cocycles[p][i];
              const auto& y = cocycles[q][j];
              const auto& z = cocycles[s][k];
              auto term = [&](const HochschildCochain& a, const HochschildCochain& b, const HochschildCochain& c,
                              int da, int dc) {
                const auto t = br(a, br(b, c));
                return ((da - 1) * (dc - 1)) % 2 ? add(r, zero_cochain(r, total), t, -1) : t;
              };
              const auto j3 = sum(sum(term(x, y, z, p, s), term(y, z, x, q, p)), term(z, x, y, s, q));
              run.expect(cobound("jacobi", j3),
                         [&] { return nlohmann::json{zlab(p, i), zlab(q, j), zlab(s, k)}; });
            }
      }
  run.end();

  // [x, y⌣z] = [x,y]⌣z + (-1)^{(p-1)q} y⌣[x,z]
  run.begin("bracket_derivation");
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= pmax; ++q)
      for (int s = 0; s <= pmax; ++s) {
        const int total = p + q + s - 1;
        if (total < 0 || total > pmax || p + q < 1 || p + s < 1) continue;
        for (std::size_t i = 0; i < cocycles[p].size(); ++i)
          for (std::size_t j = 0; j < cocycles[q].size(); ++j)
            for (std::size_t k = 0; k < cocycles[s].size(); ++k) {
              const auto& x = cocycles[p][i];
              const auto& y = cocycles[q][j];
              const auto& z = cocycles[s][k];
              const auto lhs = br(x, cup(r, y, z));
              const auto rhs = sum(cup(r, br(x, y), z), cup(r, y, br(x, z)), ((p - 1) * q) % 2 ? -1 : 1);
              run.expect(cobound("bracket_derivation", sum(lhs, rhs, -1)),
                         [&] { return nlohmann::json{zlab(p, i), zlab(q, j), zlab(s, k)}; });
            }
      }
  run.end();

  return rep;
}

}  // namespace cosop
