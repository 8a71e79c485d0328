#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forge/collections.hpp"

namespace forge {

/// Composition on stored data. `x` lives at the ordered signature `outer`,
/// `ys[i]` at the ordered signature `inner[i]` whose output is outer input i.
/// Returns the stored id, at the sorted concatenation of the inner inputs, of
/// the composite acted on by the stable sort permutation.
using ComposeFn =
    std::function<int(const Signature& outer, int x, std::span<const Signature> inner, std::span<const int> ys)>;

struct CompositionKey {
  Signature outer;
  int x = 0;
  std::vector<Signature> inner;
  std::vector<int> ys;

  Signature result_signature() const;
  auto operator<=>(const CompositionKey&) const = default;
  bool operator==(const CompositionKey&) const = default;
};

/// A coloured operad enriched in finite sets, materialized on components of
/// arity <= arity_bound. Compositions landing above the bound, or outside a
/// truncation of the underlying construction, throw TruncationOverflow.
class Operad {
 public:
  Operad() = default;
  Operad(std::string name, Collection collection, std::vector<int> units, ComposeFn compose,
         std::size_t arity_bound);

  const std::string& name() const { return name_; }
  const Collection& collection() const { return collection_; }
  Collection& mutable_collection() { return collection_; }
  const ColourSet& colours() const { return collection_.colours(); }
  std::size_t arity_bound() const { return arity_bound_; }
  const std::vector<int>& units() const { return units_; }
  Element unit(ColourId c) const { return {{{c}, c}, units_.at(c)}; }
  const ComposeFn& compose_fn() const { return compose_; }

  std::size_t size(const Signature& sig) const { return collection_.size(sort_signature(sig).ordered); }
  /// Every element at an arbitrary signature.
  std::vector<Element> elements(const Signature& sig) const;
  std::string element_name(const Element& e) const;
  Element element(const Signature& sig, const std::string& name) const;

  int compose_stored(const Signature& outer, int x, std::span<const Signature> inner, std::span<const int> ys) const;
  int compose_stored(const CompositionKey& key) const { return compose_stored(key.outer, key.x, key.inner, key.ys); }
  /// Full composition gamma(p; q_1, ..., q_n) at arbitrary signatures.
  Element compose(const Element& p, std::span<const Element> qs) const;
  Element act(const Element& x, const Permutation& sigma) const { return forge::act(collection_, x, sigma); }

 private:
  std::string name_;
  Collection collection_;
  std::vector<int> units_;
  ComposeFn compose_;
  std::size_t arity_bound_ = 0;
};

/// Outcome of an axiom check: every violated instance, plus counts.
struct Report {
  std::vector<std::string> violations;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // instances outside a truncation

  bool ok() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  void merge(const Report& other);
};

/// Readable form of a composition key for reports.
std::string describe(const Operad& p, const CompositionKey& k);

/// Enumerates every stored composition key with result arity <= max_arity
/// and non-empty components.
void for_each_composition(const Operad& p, std::size_t max_arity,
                          const std::function<void(const CompositionKey&)>& visit);

/// Right-action laws, units, associativity and both equivariance conditions
/// on all stored instances whose arities stay within max_arity.
Report check_operad(const Operad& p, std::size_t max_arity);

/// Componentwise maps between operads over the same colours, indexed by
/// ordered signature.
struct OperadMap {
  std::map<Signature, std::vector<int>> table;

  Element apply(const Element& e) const;
};

Report check_operad_map(const Operad& source, const Operad& target, const OperadMap& f, std::size_t max_arity);

/// Replaces the composition by a lookup table of all instances up to the
/// bound; the table can then be edited.
struct MaterializedOperad {
  Operad operad;
  std::shared_ptr<std::map<CompositionKey, int>> table;
};

MaterializedOperad materialize(const Operad& p, std::size_t max_arity);

/// All-functions operad on a family of finite sets.
Operad endomorphism_operad(const ColourSet& colours, const std::vector<std::size_t>& sizes, std::size_t arity_bound,
                           std::size_t max_component = std::size_t{1} << 20);

/// Function table of an element of an endomorphism operad at an ordered
/// signature: entry k is the value at the k-th input tuple in mixed radix
/// (first input most significant).
std::vector<int> decode_function(const std::vector<std::size_t>& sizes, const Signature& sig, int id);
int encode_function(const std::vector<std::size_t>& sizes, const Signature& sig, const std::vector<int>& table);

/// Operad given without symmetric group actions: components at arbitrary
/// signatures, composition landing at the concatenated signature.
struct NonSymmetricOperad {
  std::string name;
  ColourSet colours;
  std::map<Signature, std::vector<std::string>> components;
  std::vector<int> units;
  /// Composite of x at `outer` with ys[i] at inner[i], at the concatenation.
  ComposeFn compose;
  std::size_t arity_bound = 0;

  std::size_t size(const Signature& sig) const;
};

Operad symmetrize(const NonSymmetricOperad& p);
/// The element q of ns at the signature e, inside symmetrize(ns).
Element ns_element(const Operad& sym, const NonSymmetricOperad& ns, const Signature& e, int q);
Report check_non_symmetric(const NonSymmetricOperad& p, std::size_t max_arity);

using ColourMap = std::vector<ColourId>;  // alpha[d] in the target colour set

Signature apply_colours(const ColourMap& alpha, const Signature& sig);
/// alpha^*(P) over `source` colours, for alpha: source -> P's colours.
Operad pullback_colours(const ColourMap& alpha, const ColourSet& source, const Operad& p);
/// alpha_!(P) over `target` colours, for an injective alpha: P's colours -> target.
Operad pushforward_colours_injective(const ColourMap& alpha, const ColourSet& target, const Operad& p);
/// Sub-operad on the signatures satisfying `keep`; the predicate must be
/// closed under composition and contain the units.
Operad restrict_to_predicate(const Operad& p, const std::function<bool(const Signature&)>& keep, std::string name);

}  // namespace forge
