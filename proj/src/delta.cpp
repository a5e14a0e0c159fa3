#include "cosop/delta.hpp"

#include <algorithm>
#include <sstream>

#include "cosop/errors.hpp"

namespace cosop {

OrderedMap::OrderedMap(int target, std::vector<int> vals)
    : source_size(static_cast<int>(vals.size())), target_size(target), values(std::move(vals)) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= target_size) throw InvalidInput("ordered map value out of range");
    if (i && values[i] < values[i - 1]) throw InvalidInput("map is not order-preserving");
  }
}

bool OrderedMap::injective() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1]) return false;
  return true;
}

bool OrderedMap::surjective() const { return static_cast<int>(image().size()) == target_size; }

bool OrderedMap::is_identity() const {
  if (source_size != target_size) return false;
  for (int i = 0; i < source_size; ++i)
    if (values[i] != i) return false;
  return true;
}

std::vector<int> OrderedMap::image() const {
  std::vector<int> im(values);
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

std::string OrderedMap::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ")->" << target_size;
  return os.str();
}

OrderedMap identity_map(int size) {
  std::vector<int> v(size);
  for (int i = 0; i < size; ++i) v[i] = i;
  return OrderedMap(size, std::move(v));
}

OrderedMap compose(const OrderedMap& outer, const OrderedMap& inner) {
  if (inner.target_size != outer.source_size) throw IncompatibleInputs("ordered maps are not composable");
  std::vector<int> v(inner.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = outer.values[inner.values[i]];
  return OrderedMap(outer.target_size, std::move(v));
}

OrderedMap coface(int m, int i) {
  if (m < 0 || i < 0 || i > m + 1) throw IndexOutOfRange("coface index out of range");
  std::vector<int> v(m + 1);
  for (int j = 0; j <= m; ++j) v[j] = j < i ? j : j + 1;
  return OrderedMap(m + 2, std::move(v));
}

OrderedMap codegeneracy(int m, int i) {
  if (m < 1 || i < 0 || i > m - 1) throw IndexOutOfRange("codegeneracy index out of range");
  std::vector<int> v(m + 1);
  for (int j = 0; j <= m; ++j) v[j] = j <= i ? j : j - 1;
  return OrderedMap(m, std::move(v));
}

std::pair<OrderedMap, OrderedMap> factor_epi_mono(const OrderedMap& phi) {
  const std::vector<int> im = phi.image();
  std::vector<int> e(phi.values.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = static_cast<int>(std::lower_bound(im.begin(), im.end(), phi.values[i]) - im.begin());
  return {OrderedMap(static_cast<int>(im.size()), std::move(e)), OrderedMap(phi.target_size, im)};
}

std::vector<OrderedMap> all_ordered_maps(int source_size, int target_size) {
  std::vector<OrderedMap> out;
  if (source_size == 0) {
    out.emplace_back(target_size, std::vector<int>{});
    return out;
  }
  if (target_size == 0) return out;
  std::vector<int> v(source_size, 0);
  for (;;) {
    out.emplace_back(target_size, v);
    int i = source_size - 1;
    while (i >= 0 && v[i] == target_size - 1) --i;
    if (i < 0) break;
    ++v[i];
    for (int j = i + 1; j < source_size; ++j) v[j] = v[i];
  }
  return out;
}

std::vector<OrderedMap> all_injections(int source_size, int target_size) {
  std::vector<OrderedMap> out;
  for (auto& m : all_ordered_maps(source_size, target_size))
    if (m.injective()) out.push_back(std::move(m));
  return out;
}

GradedIntComplex standard_simplex_chains(int m) {
  if (m < 0) throw InvalidInput("simplex dimension must be nonnegative");
  GradedIntComplex c;
  std::vector<std::vector<OrderedMap>> inj(m + 1);
  for (int j = 0; j <= m; ++j) {
    inj[j] = all_injections(j + 1, m + 1);
    std::vector<std::string> labels;
    for (const auto& f : inj[j]) {
      std::string s;
      for (int x : f.values) s += std::to_string(x);
      labels.push_back(s);
    }
    c.set_basis(j, std::move(labels));
  }
  for (int j = 1; j <= m; ++j) {
    IntMatrix d(inj[j - 1].size(), inj[j].size());
    for (std::size_t col = 0; col < inj[j].size(); ++col)
      for (int i = 0; i <= j; ++i) {
        const OrderedMap face = compose(inj[j][col], coface(j - 1, i));
        const auto it = std::lower_bound(inj[j - 1].begin(), inj[j - 1].end(), face);
        d.add(static_cast<std::size_t>(it - inj[j - 1].begin()), col, i % 2 ? -1 : 1);
      }
    c.set_differential(j, std::move(d));
  }
  return c;
}

}  // namespace cosop
