#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "forge/category.hpp"
#include "forge/free_operad.hpp"
#include "forge/labelled_trees.hpp"
#include "forge/operads.hpp"

namespace forge {

/// A finite set with points zero and one and an associative join in which
/// zero is neutral and one absorbing. Stands in for the interval.
struct Segment {
  std::vector<std::string> names;
  int zero = 0;
  int one = 1;
  std::vector<std::vector<int>> join;  // join[a][b] = a v b

  std::size_t size() const { return names.size(); }
  int operator()(int a, int b) const { return join.at(a).at(b); }

  /// {0, 1} with max.
  static Segment boolean();
  /// The chain names[0] < names[1] < ... with max; zero is the first name
  /// and one the last.
  static Segment chain(std::vector<std::string> names);
};

/// Associativity, neutral zero and absorbing one, exhaustively.
Report check_segment(const Segment& h);

/// Elements of the resolution are labelled trees: vertex labels are ids in
/// the operad's component at the (ordered) vertex signature and internal
/// edges carry ids of segment elements. The root edge and the leaves carry
/// no length.
using WElement = LTree;

/// Throws ColourMismatch or InvalidArgument when labels, colours or lengths
/// do not fit the operad and the segment.
void validate_w(const WElement& w, const Operad& p, const Segment& h);

/// A place where a rewrite rule applies. `path` leads from the root to a
/// vertex by child indices. Rule 1 contracts the zero-length edge below
/// that vertex into its parent; rule 2 deletes the vertex, which is a
/// unary unit.
struct Redex {
  std::vector<int> path;
  int rule = 1;

  bool operator==(const Redex&) const = default;
};

/// Redexes in postorder, innermost and leftmost first; at a vertex rule 1
/// precedes rule 2.
std::vector<Redex> w_redexes(const WElement& w, const Operad& p, const Segment& h);
WElement w_apply(const WElement& w, const Redex& r, const Operad& p, const Segment& h);

/// Applies the rules until none applies and canonicalizes. With `random_order`
/// each step picks a uniformly random redex instead of the first one. The
/// number of rewrites is stored in `steps` when given.
WElement w_normalize(const WElement& w, const Operad& p, const Segment& h, std::mt19937_64* random_order = nullptr,
                     std::size_t* steps = nullptr);

/// Grafts w2 onto input `slot` of w1 with length one on the new edge; inputs
/// of w2 take the numbers slot, slot + 1, ... Normalized.
WElement w_compose(const WElement& w1, int slot, const WElement& w2, const Operad& p, const Segment& h);

/// Forgets the lengths and composes the tree in p; the result has the
/// signature of the inputs in their numbering.
Element epsilon(const WElement& w, const Operad& p);

struct WOperad {
  Operad operad;
  std::shared_ptr<const TreeIndex> index;
  Segment segment;

  const WElement& tree(const Signature& sig, int id) const { return index->tree(sig, id); }
};

/// Normal forms with at most `vertex_bound` vertices and `arity_bound`
/// inputs, up to tree isomorphism. Grafting composes; composites with too
/// many vertices throw TruncationOverflow.
WOperad w_operad(const Operad& p, const Segment& h, std::size_t arity_bound, std::size_t vertex_bound);

/// A string of composable arrows c_0 -> c_1 -> ... -> c_{n+1} read left to
/// right, with a waiting time between consecutive arrows. A single identity
/// arrow is the empty string at its object.
struct CoherentString {
  std::vector<int> objects;  // c_0 .. c_{n+1}
  std::vector<int> arrows;   // arrows[i] in hom(c_i, c_{i+1})
  std::vector<int> waits;    // waits[i] sits between arrows[i] and arrows[i + 1]

  bool operator==(const CoherentString&) const = default;
};

void validate(const CoherentString& s, const FiniteCategory& c, const Segment& h);
CoherentString identity_string(const FiniteCategory& c, int object);
CoherentString arrow_string(int source, int target, int arrow);
/// Zero waits compose their neighbours, interior identities merge the waits
/// around them, and identities at either end are dropped with their wait.
CoherentString coherent_normalize(const CoherentString& s, const FiniteCategory& c, const Segment& h);
/// s1 followed by s2 with wait one at the junction, normalized.
CoherentString coherent_compose(const CoherentString& s1, const CoherentString& s2, const FiniteCategory& c,
                                const Segment& h);
std::string to_string(const CoherentString& s, const FiniteCategory& c, const Segment& h);

/// The unary tree of a string over the operad of the category: the last
/// arrow at the root, waits on the edges in between. The empty string is
/// the bare edge.
WElement coherent_tree(const CoherentString& s, const FiniteCategory& c);

}  // namespace forge
