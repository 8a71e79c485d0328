#pragma once

#include <map>

#include "forge/box_product.hpp"
#include "forge/operads.hpp"

namespace forge {

/// An operad seen as a monoid for the box product: the multiplication
/// P box P -> P and the unit U -> P, with the verdict on the monoid axioms.
struct MonoidStructure {
  BoxProduct square;
  /// multiplication[d][k] = image of the k-th element of (P box P)(d).
  std::map<Signature, std::vector<int>> multiplication;
  std::vector<int> unit;
  Report report;
};

/// Builds m and u from the composition and units of p and checks, up to
/// max_arity, that m is well defined on box-product classes and equivariant,
/// that both unit triangles commute, and that m o (m box id) = m o (id box m)
/// after rebracketing (P box P) box P into P box (P box P).
MonoidStructure as_monoid(const Operad& p, std::size_t max_arity);

}  // namespace forge
