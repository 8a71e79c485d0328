#pragma once

#include <string>
#include <vector>

#include "forge/colours.hpp"

namespace forge {

/// Planar rooted tree with coloured edges. A node is either a bare edge
/// (`is_edge`, a leaf when it sits above a vertex) or a vertex whose output
/// edge carries `colour` and whose i-th input edge is `children[i]`.
/// Input colours at every vertex are non-decreasing.
struct Tree {
  ColourId colour = 0;
  bool is_edge = true;
  std::vector<Tree> children;

  static Tree edge(ColourId c) { return Tree{c, true, {}}; }

  std::vector<ColourId> input_colours() const;
  /// Signature (inputs; output) of the root vertex.
  Signature root_signature() const;

  bool operator==(const Tree&) const = default;
};

Tree corolla(const Signature& sig);
Tree graft(const Signature& root_sig, std::vector<Tree> subtrees);

std::size_t vertex_count(const Tree& t);
std::size_t leaf_count(const Tree& t);
/// Leaf colours in planar (left-to-right) order.
std::vector<ColourId> leaf_colours(const Tree& t);
/// Throws when colours are out of range or vertex inputs are unsorted.
void validate(const Tree& t, const ColourSet& colours);

/// Structural key; equal keys iff equal planar trees.
std::string tree_key(const Tree& t);
std::string to_string(const Tree& t, const ColourSet& colours);

/// Preorder indexing of vertices and left-to-right indexing of leaves.
struct FlatTree {
  struct Vertex {
    int parent = -1;
    int parent_slot = -1;
    ColourId output = 0;
    std::vector<ColourId> inputs;
    /// Per input slot: the vertex above it, or -1 if the slot holds a leaf.
    std::vector<int> child_vertex;
    /// Per input slot: the leaf index, or -1 if the slot holds a vertex.
    std::vector<int> child_leaf;
    Signature signature() const { return {inputs, output}; }
  };
  struct Leaf {
    int parent = -1;  // -1 for the bare-edge tree
    int parent_slot = -1;
    ColourId colour = 0;
  };
  std::vector<Vertex> vertices;
  std::vector<Leaf> leaves;
};

FlatTree flatten(const Tree& t);

/// Colour-preserving, root-fixing isomorphism. `slot_map[v][j]` is the input
/// slot of `vertex_map[v]` that receives the j-th input of v; it need not
/// preserve planar order.
struct TreeIso {
  std::vector<int> vertex_map;
  std::vector<int> leaf_map;
  std::vector<std::vector<int>> slot_map;

  bool operator==(const TreeIso&) const = default;
};

/// Every isomorphism from `a` to `b`; find_isos(t, t) is Aut(t).
std::vector<TreeIso> find_isos(const Tree& a, const Tree& b);
TreeIso identity_iso(const Tree& t);
/// outer after inner.
TreeIso compose(const TreeIso& outer, const TreeIso& inner);
TreeIso inverse(const TreeIso& iso);

/// Representative of the isomorphism class: sibling subtrees sorted by
/// (colour, structural key), stable among equal keys.
Tree canonical_form(const Tree& t);

/// Canonical trees with n leaves, the given output colour and at most
/// `max_vertices` vertices, sorted by structural key.
std::vector<Tree> enumerate_trees(const ColourSet& colours, std::size_t n_inputs, ColourId output,
                                  std::size_t max_vertices);

/// An input numbering: numbering[i] is the leaf carrying input i.
using InputNumbering = std::vector<int>;

InputNumbering planar_numbering(const Tree& t);
/// The numbering phi o tau of the target's leaves.
InputNumbering lambda_action(const TreeIso& iso, const InputNumbering& tau);

/// Linear order on the vertices of t induced by the numbering: root first,
/// then subtrees ordered by their earliest-numbered leaf, recursively.
/// Subtrees without leaves come last, in planar order.
std::vector<int> vertex_order(const Tree& t, const InputNumbering& tau);

}  // namespace forge
