#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "forge/colours.hpp"

namespace forge {

/// The stabilizer Sigma_{c_1...c_n} of an ordered tuple with an index for
/// looking up its elements. Shared and immutable once built.
struct StabilizerGroup {
  std::vector<Permutation> elements;  // lexicographic; elements[0] is the identity
  std::unordered_map<std::uint64_t, int> index;

  int index_of(const Permutation& p) const;
};

const StabilizerGroup& stabilizer(const std::vector<ColourId>& ordered_inputs);

/// A finite right Sigma_{c_1...c_n}-set sitting at an ordered signature.
/// Elements are 0..size()-1; `action[g][x]` is x acted on by the g-th group
/// element.
struct Component {
  Signature sig;
  std::vector<std::string> names;
  std::vector<std::vector<int>> action;

  std::size_t size() const { return names.size(); }
  const StabilizerGroup& group() const {
    if (!group_cache) group_cache = &stabilizer(sig.inputs);
    return *group_cache;
  }
  /// x . sigma for sigma in the stabilizer.
  int act(int x, const Permutation& sigma) const { return action[group().index_of(sigma)][x]; }
  int index_of(const std::string& name) const;
  /// Throws unless the table is a right action of the stabilizer.
  void validate() const;

  bool operator==(const Component& o) const { return sig == o.sig && names == o.names && action == o.action; }

  mutable const StabilizerGroup* group_cache = nullptr;
};

Component trivial_component(const Signature& sig, std::vector<std::string> names);

/// Collection in the ordered ("smaller") representation: one component per
/// ordered signature; absent signatures are empty.
class Collection {
 public:
  Collection() = default;
  explicit Collection(ColourSet colours) : colours_(std::move(colours)) {}

  const ColourSet& colours() const { return colours_; }
  const std::map<Signature, Component>& components() const { return components_; }

  /// Adds or replaces a component with the trivial action.
  Component& set(const Signature& sig, std::vector<std::string> names);
  Component& set(Component comp);
  const Component* find(const Signature& sig) const;
  Component* find_mutable(const Signature& sig);
  std::size_t size(const Signature& sig) const;
  std::size_t max_arity() const;
  std::size_t total_size() const;

  bool operator==(const Collection&) const = default;

 private:
  ColourSet colours_;
  std::map<Signature, Component> components_;
};

/// An element at an arbitrary (not necessarily ordered) signature. `id`
/// names the stored element x . pi of the ordered component, where pi is the
/// stable sort permutation of `sig`.
struct Element {
  Signature sig;
  int id = 0;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

/// Stored element at the ordered signature corresponding to an arbitrary one.
const Component* component_at(const Collection& x, const Signature& sig);

/// x . sigma, landing at x.sig permuted by sigma.
Element act(const Collection& coll, const Element& x, const Permutation& sigma);
/// Permutation of the ordered stabilizer that carries the stored form of x to
/// the stored form of x . sigma.
Permutation stored_transport(const Signature& sig, const Permutation& sigma);

/// Collection in the "all tuples" representation: a set at every signature
/// with transport maps sigma^*: K(d) -> K(d . sigma).
struct FullCollection {
  ColourSet colours;
  std::map<Signature, std::vector<std::string>> values;
  std::map<std::pair<Signature, Permutation>, std::vector<int>> transport;
};

FullCollection expand(const Collection& x, std::size_t max_arity);
Collection restrict(const FullCollection& f);
/// Violations of identity and composition laws of the transport maps.
std::vector<std::string> check_full(const FullCollection& f);

/// A pointed collection: a unit element in every K(c;c).
struct PointedCollection {
  Collection collection;
  std::vector<int> units;  // units[c] is an id in the component (c;c)
};

PointedCollection unit_collection(const ColourSet& colours);

/// Componentwise cartesian product with the diagonal action.
Collection pointwise_tensor(const Collection& x, const Collection& y);

/// An equivariant bijection, per signature, from one collection onto another
/// (map[sig][x] = image of x), or nothing if none exists.
using CollectionIso = std::map<Signature, std::vector<int>>;
std::optional<CollectionIso> find_equivariant_bijection(const Collection& a, const Collection& b,
                                                        std::size_t max_arity);
bool is_equivariant_bijection(const Collection& a, const Collection& b, const CollectionIso& iso,
                              std::size_t max_arity);

}  // namespace forge
