#pragma once

#include <map>
#include <memory>
#include <string>

#include "forge/labelled_trees.hpp"
#include "forge/operads.hpp"

namespace forge {

/// Canonical labelled trees of a tree-based operad, per ordered signature.
struct TreeIndex {
  std::map<Signature, std::vector<LTree>> elements;
  std::map<Signature, std::map<std::string, int>> lookup;

  int find(const Signature& sig, const LTree& canonical) const;
  const LTree& tree(const Signature& sig, int id) const { return elements.at(sig).at(id); }
};

struct TreeOperad {
  Operad operad;
  std::shared_ptr<const TreeIndex> index;

  /// The canonical tree of an element at an ordered signature.
  const LTree& tree(const Signature& sig, int id) const { return index->tree(sig, id); }
};

/// The free operad on a pointed collection, truncated to trees with at most
/// `max_vertices` vertices and `max_arity` inputs. Vertices labelled by a
/// unit are factored out, so the bare edge is the unit. Compositions with
/// too many vertices throw TruncationOverflow.
TreeOperad free_operad(const PointedCollection& k, std::size_t max_vertices, std::size_t max_arity);

}  // namespace forge
