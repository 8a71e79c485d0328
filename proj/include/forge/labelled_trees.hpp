#pragma once

#include <string>
#include <vector>

#include "forge/collections.hpp"

namespace forge {

/// Planar tree whose vertices carry elements of a collection and whose
/// leaves carry input numbers. This is the common carrier of free-operad and
/// W-construction elements: the numbering tau is stored on the leaves
/// (leaf with `input == i` is tau(i)).
struct LTree {
  ColourId colour = 0;
  int input = -1;   // leaf: input number; vertex: -1
  int label = -1;   // vertex: id in the component at its (ordered) signature
  int length = -1;  // length of the output edge when it is internal, else -1
  std::vector<LTree> children;

  bool is_leaf() const { return input >= 0; }
  Signature signature() const;

  static LTree leaf(ColourId c, int input) { return LTree{c, input, -1, -1, {}}; }
  bool operator==(const LTree&) const = default;
};

std::size_t vertex_count(const LTree& t);
std::size_t leaf_count(const LTree& t);
/// Colour of every input, in input order.
Signature input_signature(const LTree& t);

/// Injective serialization; equal keys iff equal labelled trees.
std::string key(const LTree& t);
/// Readable form, e.g. "b(b(1,3),2)" with 1-based inputs and edge lengths
/// written as "^h" after internal subtrees.
std::string display(const LTree& t, const Collection& labels, const std::vector<std::string>* length_names = nullptr);

/// Representative of the class of t under (non-planar) tree isomorphisms,
/// which act on labels through the collection's actions and carry lengths
/// and input numbers along. Two trees are isomorphic iff their canonical
/// forms are equal.
LTree canonicalize(const LTree& t, const Collection& labels);

/// Renumbers inputs: the leaf numbered j gets number perm_new[j].
void renumber(LTree& t, const std::vector<int>& perm_new);

/// Right action of sigma on the numbering: the result has input i at the
/// leaf of input sigma(i).
LTree act_on_inputs(const LTree& t, const Permutation& sigma);

/// Grafts parts[i] onto the leaf of input i; inputs of parts[i] are shifted
/// to follow those of parts[0..i-1]. Edges created by grafting a non-trivial
/// tree onto a leaf get length `graft_length`.
LTree substitute(const LTree& outer, const std::vector<LTree>& parts, int graft_length = -1);

}  // namespace forge
