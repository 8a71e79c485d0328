#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "forge/operads.hpp"

namespace forge {

/// A small category with finite hom-sets, given by tables.
struct FiniteCategory {
  std::vector<std::string> objects;
  /// Arrow names a -> b, keyed by (a, b).
  std::map<std::pair<int, int>, std::vector<std::string>> hom;
  std::vector<int> identity;  // identity[o] indexes hom[(o, o)]
  /// composition[(a, b, c)][f * |hom(b, c)| + g] = g o f for f: a -> b, g: b -> c.
  std::map<std::tuple<int, int, int>, std::vector<int>> composition;

  std::size_t size(int a, int b) const;
  int compose(int a, int b, int c, int f, int g) const;
  ColourSet colours() const { return ColourSet(objects); }

  /// Identity and associativity laws; empty when the tables form a category.
  Report validate() const;
  /// True when no non-identity arrows compose into a cycle, i.e. every
  /// endomorphism is an identity and the "arrow exists" relation has no
  /// cycles between distinct objects.
  bool is_acyclic() const;

  /// The category of a partial order given by generating relations a < b;
  /// arrows are named "a->b" and "id_a".
  static FiniteCategory poset(std::vector<std::string> objects, const std::vector<std::pair<int, int>>& less);
};

}  // namespace forge
