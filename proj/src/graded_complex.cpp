#include "cosop/graded_complex.hpp"

#include <sstream>

#include "cosop/errors.hpp"
#include "cosop/smith.hpp"

namespace cosop {

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool any = false;
  if (betti) {
    os << "Z";
    if (betti > 1) os << "^" << betti;
    any = true;
  }
  for (const auto& t : torsion) {
    os << (any ? " + " : "") << "Z/" << t;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

void GradedIntComplex::set_basis(int degree, std::vector<std::string> labels) {
  auto& idx = index_[degree];
  idx.clear();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!idx.emplace(labels[i], i).second) throw InvalidInput("duplicate basis label " + labels[i]);
  basis_[degree] = std::move(labels);
}

void GradedIntComplex::set_differential(int degree, IntMatrix d) {
  if (d.cols() != rank(degree) || d.rows() != rank(degree - 1))
    throw IncompatibleInputs("differential shape does not match basis sizes at degree " + std::to_string(degree));
  diff_[degree] = std::move(d);
}

std::size_t GradedIntComplex::rank(int degree) const {
  auto it = basis_.find(degree);
  return it == basis_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& GradedIntComplex::basis(int degree) const {
  static const std::vector<std::string> empty;
  auto it = basis_.find(degree);
  return it == basis_.end() ? empty : it->second;
}

IntMatrix GradedIntComplex::differential(int degree) const {
  auto it = diff_.find(degree);
  if (it != diff_.end()) return it->second;
  return IntMatrix(rank(degree - 1), rank(degree));
}

std::vector<int> GradedIntComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [d, b] : basis_)
    if (!b.empty()) out.push_back(d);
  return out;
}

std::size_t GradedIntComplex::index_of(int degree, const std::string& label) const {
  auto it = index_.find(degree);
  if (it == index_.end()) return std::string::npos;
  auto jt = it->second.find(label);
  return jt == it->second.end() ? std::string::npos : jt->second;
}

bool GradedIntComplex::d_squared_zero() const {
  for (const auto& [d, m] : diff_) {
    if (!complete_at(d) || !complete_at(d - 1)) continue;
    auto it = diff_.find(d - 1);
    if (it == diff_.end()) continue;
    if (!(it->second * m).is_zero()) return false;
  }
  return true;
}

void GradedIntComplex::assert_d_squared_zero() const {
  for (const auto& [d, m] : diff_) {
    if (!complete_at(d) || !complete_at(d - 1)) continue;
    auto it = diff_.find(d - 1);
    if (it == diff_.end()) continue;
    if (!(it->second * m).is_zero())
      throw IncompatibleInputs("d^2 != 0 starting at degree " + std::to_string(d));
  }
}

HomologyGroup GradedIntComplex::homology(int degree) const {
  if (!complete_at(degree - 1) || !complete_at(degree) || !complete_at(degree + 1))
    throw DegreeOutsideWindow("degree " + std::to_string(degree) + " needs data in [" + std::to_string(degree - 1) +
                              ", " + std::to_string(degree + 1) + "]");
  HomologyGroup h;
  const std::size_t out_rank = cosop::rank(differential(degree));
  const auto inv = invariant_factors(differential(degree + 1));
  h.betti = rank(degree) - out_rank - inv.size();
  for (const auto& f : inv)
    if (f != 1) h.torsion.push_back(f);
  return h;
}

nlohmann::json GradedIntComplex::to_json() const {
  nlohmann::json j;
  j["degrees"] = degrees();
  j["cohomological"] = cohomological_;
  if (window_lo_ > -kUnbounded) j["window"] = {window_lo_, window_hi_};
  nlohmann::json basis = nlohmann::json::object();
  for (const auto& [d, b] : basis_)
    if (!b.empty()) basis[std::to_string(d)] = b;
  j["basis"] = basis;
  nlohmann::json diff = nlohmann::json::object();
  for (const auto& [d, m] : diff_) {
    if (m.is_zero()) continue;
    nlohmann::json triplets = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& e : m.column(c)) triplets.push_back({e.row, c, e.value.get_str()});
    diff[std::to_string(d)] = triplets;
  }
  j["differential"] = diff;
  return j;
}

GradedIntComplex tensor(const GradedIntComplex& a, const GradedIntComplex& b) {
  GradedIntComplex t;
  const auto da = a.degrees();
  const auto db = b.degrees();
  std::map<int, std::vector<std::pair<int, int>>> parts;  // degree -> (deg a, deg b) blocks
  for (int x : da)
    for (int y : db) parts[x + y].push_back({x, y});
  // Offsets of each block inside its total degree.
  std::map<int, std::map<std::pair<int, int>, std::size_t>> offset;
  for (auto& [d, blocks] : parts) {
    std::vector<std::string> labels;
    for (auto [x, y] : blocks) {
      offset[d][{x, y}] = labels.size();
      for (const auto& la : a.basis(x))
        for (const auto& lb : b.basis(y)) labels.push_back("(" + la + ")x(" + lb + ")");
    }
    t.set_basis(d, std::move(labels));
  }
  for (auto& [d, blocks] : parts) {
    IntMatrix m(t.rank(d - 1), t.rank(d));
    for (auto [x, y] : blocks) {
      const std::size_t src = offset[d][{x, y}];
      const std::size_t nb = b.rank(y);
      // d(u x v) = du x v + (-1)^x u x dv
      if (offset[d - 1].count({x - 1, y})) {
        const std::size_t dst = offset[d - 1][{x - 1, y}];
        const IntMatrix dx = a.differential(x);
        for (std::size_t i = 0; i < a.rank(x); ++i)
          for (const auto& e : dx.column(i))
            for (std::size_t j = 0; j < nb; ++j) m.add(dst + e.row * nb + j, src + i * nb + j, e.value);
      }
      if (offset[d - 1].count({x, y - 1})) {
        const std::size_t dst = offset[d - 1][{x, y - 1}];
        const std::size_t nb1 = b.rank(y - 1);
        const IntMatrix dy = b.differential(y);
        const int sign = (x % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < a.rank(x); ++i)
          for (std::size_t j = 0; j < nb; ++j)
            for (const auto& e : dy.column(j)) m.add(dst + i * nb1 + e.row, src + i * nb + j, sign * e.value);
      }
    }
    t.set_differential(d, std::move(m));
  }
  // A total degree is complete when every contributing pair is complete.
  // Windows are intervals, so the sum of the windows is the safe choice.
  const long lo = static_cast<long>(a.window_lo()) + b.window_lo();
  const long hi = static_cast<long>(a.window_hi()) + b.window_hi();
  auto clamp = [](long v) {
    return static_cast<int>(std::max<long>(-GradedIntComplex::kUnbounded, std::min<long>(GradedIntComplex::kUnbounded, v)));
  };
  if (a.window_lo() == -GradedIntComplex::kUnbounded && b.window_lo() == -GradedIntComplex::kUnbounded &&
      a.window_hi() == GradedIntComplex::kUnbounded && b.window_hi() == GradedIntComplex::kUnbounded)
    return t;
  t.set_window(clamp(lo), clamp(hi));
  return t;
}

bool is_chain_map(const GradedIntComplex& source, const GradedIntComplex& target, const ChainMap& f) {
  const int s = f.degree_shift;
  auto mat = [&](int d) {
    auto it = f.matrices.find(d);
    return it != f.matrices.end() ? it->second : IntMatrix(target.rank(d + s), source.rank(d));
  };
  for (const auto& [d, m] : f.matrices) {
    if (!source.complete_at(d) || !source.complete_at(d - 1)) continue;
    if (!target.complete_at(d + s) || !target.complete_at(d + s - 1)) continue;
    const IntMatrix lhs = target.differential(d + s) * m;
    IntMatrix rhs = mat(d - 1) * source.differential(d);
    if (s % 2 != 0) rhs = Integer(-1) * rhs;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace cosop
