#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "forge/category.hpp"
#include "forge/operads.hpp"

namespace forge {

// Single-element-per-component operads given by a colour pattern. The
// non-symmetric data is exposed for the constructions that need it.
NonSymmetricOperad ns_ass(std::size_t max_arity);
NonSymmetricOperad ns_lmod(std::size_t max_arity);  // colours a < m
NonSymmetricOperad ns_rmod(std::size_t max_arity);  // colours a < m
NonSymmetricOperad ns_bimod(std::size_t max_arity);  // colours a < m < b
NonSymmetricOperad ns_cat_o(const std::vector<std::string>& objects, std::size_t max_arity);
NonSymmetricOperad ns_diag(const FiniteCategory& c);

Operad make_ass(std::size_t max_arity);
Operad make_lmod(std::size_t max_arity);
Operad make_rmod(std::size_t max_arity);
Operad make_bimod(std::size_t max_arity);
/// Colours are the pairs (x,y), named "x>y", in lexicographic order of
/// (x, y) by object position.
Operad make_cat_o(const std::vector<std::string>& objects, std::size_t max_arity);
/// Unary operad of a finite category; arity bound 1.
Operad make_diag(const FiniteCategory& c);

/// Operads built from an uncoloured P by copying P(k) onto the signatures
/// of a pattern. Element ids agree with those of P(k).
Operad make_mod_p(const Operad& p, std::size_t max_arity);
/// P^n on colours 0..n: P(k) on (i_1..i_k; i) when every i_j <= i.
Operad make_morphism_operad(const Operad& p, int n, std::size_t max_arity);

/// Gr(P) on grades 0..max_grade, with its map to P: the colour map to the
/// one-point set and the inclusion into the pulled-back operad.
struct GradedOperad {
  Operad operad;
  ColourMap alpha;
  Operad pulled;  // alpha^*(P) over the grades
  OperadMap inclusion;
};
GradedOperad make_gr(const Operad& p, int max_grade, std::size_t max_arity);

/// Planar tree with numbered vertices and numbered inputs, the element
/// shape of the operads whose algebras are operads. `vertex` is the vertex
/// number (-1 at a leaf) and `input` the input number (-1 at a vertex).
struct STree {
  int vertex = -1;
  int input = -1;
  std::vector<STree> children;

  bool is_leaf() const { return vertex < 0; }
  bool operator==(const STree&) const = default;
};

std::string s_key(const STree& t);
/// Valence of each vertex, by vertex number.
std::vector<int> valences(const STree& t);
std::size_t s_leaf_count(const STree& t);

/// Which trees a member of the family admits.
struct SVariant {
  int min_valence = 0;        // 1 for the operad of operads without 0-term
  bool planar_inputs = false;  // inputs numbered left to right, no relabelling
};

struct SOperad {
  Operad operad;
  SVariant variant;
  int colour_offset = 0;  // colour id c stands for valence c + offset
  std::shared_ptr<const std::map<Signature, std::vector<STree>>> elements;
  std::shared_ptr<const std::map<Signature, std::map<std::string, int>>> lookup;

  const STree& tree(const Signature& sig, int id) const { return elements->at(sig).at(id); }
  int find(const Signature& sig, const STree& t) const;
  int valence(ColourId c) const { return c + colour_offset; }
  ColourId colour(int valence) const { return valence - colour_offset; }
};

/// Truncation to valences <= max_colour and at most max_vertices vertices;
/// compositions with more vertices throw TruncationOverflow.
SOperad make_s_family(SVariant variant, int max_colour, std::size_t max_vertices);
SOperad make_s(int max_colour, std::size_t max_vertices);
SOperad make_s_plus(int max_colour, std::size_t max_vertices);
SOperad make_s0(int max_colour, std::size_t max_vertices);

/// Substitution of trees into the vertices of `outer`: vertex i is replaced
/// by parts[i], its l-th input edge glued to the input of parts[i] numbered
/// l; vertices are renumbered block by block.
STree s_substitute(const STree& outer, const std::vector<STree>& parts);

/// Compatibility of the vertex order induced by input numberings with
/// composition in S+: the non-symmetric candidate whose elements carry that
/// vertex order is checked for closure under composition. Each violation
/// names a composite whose block numbering differs from the induced order.
Report check_planar_order_compatibility(const SOperad& s_plus, std::size_t max_arity);

/// Evaluates an element of S on operations of an uncoloured operad: each
/// vertex is given the operation of its number, the tree is composed, and
/// the result acted on by the input numbering.
Element s_evaluate(const Operad& p, const STree& t, const std::vector<Element>& ops);

}  // namespace forge
