#pragma once

#include <map>
#include <vector>

#include "forge/collections.hpp"

namespace forge {

/// A summand of the ordered box-product formula at an ordered signature
/// (d_1..d_k; c). Input j of d goes to block `block[j]`; block i collects its
/// inputs in increasing order, so every block signature D_i is ordered and
/// the gluing permutation is a shuffle. `ys[i]` lives at (D_i; c_i).
struct BoxTerm {
  Signature outer;
  int x = 0;
  std::vector<int> block;
  std::vector<int> ys;

  auto operator<=>(const BoxTerm&) const = default;
  bool operator==(const BoxTerm&) const = default;
};

/// Block signatures D_i of a term at d.
std::vector<Signature> inner_signatures(const BoxTerm& t, const Signature& d);
/// The shuffle rho with concat(D) . rho = d.
Permutation gluing_permutation(const BoxTerm& t);

/// A general summand: ordered outer and block signatures but any gluing
/// permutation `rho` with concat(D) . rho = d.
struct GluedTerm {
  Signature outer;
  int x = 0;
  std::vector<Signature> inner;
  std::vector<int> ys;
  Permutation rho;
};

struct BoxProduct {
  Collection result;
  /// Representative (least term) of each element, per ordered signature.
  std::map<Signature, std::vector<BoxTerm>> representatives;
  /// Class of every shuffle term.
  std::map<Signature, std::map<BoxTerm, int>> classes;

  /// Class of a general summand at d, after moving its gluing permutation
  /// to a shuffle by acting on the blocks.
  int classify(const Signature& d, const GluedTerm& t, const Collection& y) const;
};

/// (X box Y) at every ordered signature of arity <= max_arity.
BoxProduct box_product(const Collection& x, const Collection& y, std::size_t max_arity);

}  // namespace forge
