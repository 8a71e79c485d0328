#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "forge/category.hpp"
#include "forge/operads.hpp"
#include "forge/w_construction.hpp"

namespace forge {

/// An algebra in finite sets. `actions[d][x]` is the table of the stored
/// element x at the ordered signature d, indexed by input tuples in mixed
/// radix (first input most significant). An entry of -1 marks a value
/// outside a truncation.
struct Algebra {
  ColourSet colours;
  std::vector<std::vector<std::string>> carrier;
  std::map<Signature, std::vector<std::vector<int>>> actions;

  std::size_t size(ColourId c) const { return carrier.at(c).size(); }
  std::vector<std::size_t> sizes() const;
  bool operator==(const Algebra&) const = default;
};

/// Position of an input tuple in an action table.
std::size_t tuple_index(const Algebra& a, std::span<const ColourId> colours, std::span<const int> inputs);
std::size_t tuple_count(const Algebra& a, std::span<const ColourId> colours);
/// All input tuples for the given colours, in table order.
std::vector<std::vector<int>> all_inputs(const Algebra& a, std::span<const ColourId> colours);

/// The action of e, at any signature, on inputs listed in that signature's
/// order. Throws TruncationOverflow on a -1 entry.
int evaluate(const Algebra& a, const Operad& p, const Element& e, std::span<const int> inputs);

/// Carrier and tables against the operad, units, equivariance and
/// compatibility with composition, on every stored instance up to max_arity.
Report check_algebra(const Algebra& a, const Operad& p, std::size_t max_arity);

/// The structure map into the endomorphism operad of the carrier.
struct EndMap {
  Operad end;
  OperadMap map;
};
EndMap to_end_map(const Algebra& a, const Operad& p, std::size_t max_arity);

/// Per colour, the function on carrier indices.
struct AlgebraMap {
  std::vector<std::vector<int>> components;

  int operator()(ColourId c, int x) const { return components.at(c).at(x); }
};

AlgebraMap identity_map(const Algebra& a);
/// g after f.
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);
Report check_algebra_map(const AlgebraMap& f, const Algebra& a, const Algebra& b, const Operad& p, std::size_t max_arity);

/// The P-algebra with the carrier of b and actions through phi: P -> Q.
Algebra restrict(const OperadMap& phi, const Algebra& b);

/// The counit of the resolution as an operad map into p.
OperadMap epsilon_map(const WOperad& w, const Operad& p);

/// Algebra over the symmetrization of ns, from an action of the
/// non-symmetric elements: act(e, q, inputs) with inputs in the order of e.
using NsAction = std::function<int(const Signature& e, int q, std::span<const int> inputs)>;
Algebra algebra_from_ns(const Operad& sym, const NonSymmetricOperad& ns, const ColourSet& colours,
                        std::vector<std::vector<std::string>> carrier, const NsAction& act, std::size_t max_arity);

/// The free algebra on X truncated to operations of arity <= support_bound:
/// F(c) is the union over ordered d of P(d) x X(d_1) x ... x X(d_n) modulo
/// the stabilizer. Actions whose result needs a larger arity are -1.
struct FreeAlgebra {
  Algebra algebra;
  struct Generator {
    Signature sig;
    int element = 0;
    std::vector<int> inputs;
  };
  std::vector<std::vector<Generator>> classes;  // per colour, a representative of each element
  std::vector<std::vector<int>> unit;           // X(c) -> F(c), through the unit of P
};
FreeAlgebra free_algebra(const Operad& p, const std::vector<std::vector<std::string>>& x, std::size_t support_bound);

/// Rectification of a diagram over W(H, Diag_C) to a strict diagram over
/// Diag_C, with the comparison D -> restrict(epsilon, strict).
struct Rectification {
  Algebra strict;
  AlgebraMap unit;
};

/// The resolution of Diag_C that rectify expects its diagrams over: every
/// string fits, since C is acyclic.
WOperad diagram_resolution(const FiniteCategory& c, const Segment& h);
Rectification rectify(const Algebra& d, const FiniteCategory& c, const Segment& h);

/// A strict diagram given by one function per arrow, as an algebra over
/// the symmetrized Diag_C.
Algebra diagram_algebra(const FiniteCategory& c, std::vector<std::vector<std::string>> carrier,
                        const std::map<std::pair<int, int>, std::vector<std::vector<int>>>& arrow_maps);

}  // namespace forge
