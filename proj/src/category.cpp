#include "forge/category.hpp"

#include <functional>

namespace forge {

std::size_t FiniteCategory::size(int a, int b) const {
  auto it = hom.find({a, b});
  return it == hom.end() ? 0 : it->second.size();
}

int FiniteCategory::compose(int a, int b, int c, int f, int g) const {
  return composition.at({a, b, c}).at(static_cast<std::size_t>(f) * size(b, c) + g);
}

Report FiniteCategory::validate() const {
  Report rep;
  const int n = static_cast<int>(objects.size());
  if (identity.size() != objects.size()) {
    rep.fail("one identity per object is required");
    return rep;
  }
  for (int o = 0; o < n; ++o)
    if (identity[o] < 0 || static_cast<std::size_t>(identity[o]) >= size(o, o)) rep.fail("identity of " + objects[o] + " is missing");
  if (!rep.ok()) return rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t ab = size(a, b), bc = size(b, c), ac = size(a, c);
        if (!ab || !bc) continue;
        auto it = composition.find({a, b, c});
        if (it == composition.end() || it->second.size() != ab * bc) {
          rep.fail("composition table " + objects[a] + "," + objects[b] + "," + objects[c] + " is incomplete");
          continue;
        }
        for (int v : it->second)
          if (v < 0 || static_cast<std::size_t>(v) >= ac) rep.fail("composite outside hom(" + objects[a] + "," + objects[c] + ")");
      }
  if (!rep.ok()) return rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (std::size_t f = 0; f < size(a, b); ++f) {
        const int fi = static_cast<int>(f);
        ++rep.checked;
        if (compose(a, a, b, identity[a], fi) != fi || compose(a, b, b, fi, identity[b]) != fi)
          rep.fail("identity law fails at " + hom.at({a, b})[f]);
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (std::size_t f = 0; f < size(a, b); ++f)
            for (std::size_t g = 0; g < size(b, c); ++g)
              for (std::size_t h = 0; h < size(c, d); ++h) {
                const int fi = static_cast<int>(f), gi = static_cast<int>(g), hi = static_cast<int>(h);
                ++rep.checked;
                if (compose(a, c, d, compose(a, b, c, fi, gi), hi) != compose(a, b, d, fi, compose(b, c, d, gi, hi)))
                  rep.fail("associativity fails at " + hom.at({a, b})[f] + ", " + hom.at({b, c})[g] + ", " +
                           hom.at({c, d})[h]);
              }
  return rep;
}

bool FiniteCategory::is_acyclic() const {
  const int n = static_cast<int>(objects.size());
  for (int o = 0; o < n; ++o)
    if (size(o, o) > 1) return false;
  // Depth-first search for a cycle through distinct objects.
  std::vector<int> state(n, 0);
  std::function<bool(int)> cyclic = [&](int a) {
    state[a] = 1;
    for (int b = 0; b < n; ++b) {
      if (b == a || !size(a, b)) continue;
      if (state[b] == 1 || (state[b] == 0 && cyclic(b))) return true;
    }
    state[a] = 2;
    return false;
  };
  for (int o = 0; o < n; ++o)
    if (state[o] == 0 && cyclic(o)) return false;
  return true;
}

FiniteCategory FiniteCategory::poset(std::vector<std::string> objects, const std::vector<std::pair<int, int>>& less) {
  const int n = static_cast<int>(objects.size());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int o = 0; o < n; ++o) le[o][o] = true;
  for (auto [a, b] : less) le[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le[a][k] && le[k][b]) le[a][b] = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && le[a][b] && le[b][a]) throw InvalidArgument("relations do not define a partial order");
  FiniteCategory c;
  c.objects = std::move(objects);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (le[a][b]) c.hom[{a, b}] = {a == b ? "id_" + c.objects[a] : c.objects[a] + "->" + c.objects[b]};
  c.identity.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        if (le[a][b] && le[b][d]) c.composition[{a, b, d}] = {0};
  return c;
}

}  // namespace forge
