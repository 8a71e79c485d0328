#pragma once

#include <algorithm>
#include <functional>
#include <set>

#include "forge/w_construction.hpp"

namespace forge::testing {

/// Compares alpha_!(W(H,P)) with W(H, alpha_!(P)) for an injective alpha:
/// every element on the left is carried to the right by recolouring its
/// tree, and the resulting map must be an equivariant bijection per
/// component.
inline Report pushforward_w_iso(const Operad& p, const ColourMap& alpha, const ColourSet& target, const Segment& h,
                                std::size_t arity, std::size_t vertices) {
  Report rep;
  WOperad w = w_operad(p, h, arity, vertices);
  Operad left = pushforward_colours_injective(alpha, target, w.operad);
  Operad q = pushforward_colours_injective(alpha, target, p);
  WOperad right = w_operad(q, h, arity, vertices);

  std::vector<ColourId> back(target.size(), -1);
  for (std::size_t d = 0; d < alpha.size(); ++d) back[alpha[d]] = static_cast<ColourId>(d);
  auto preimage = [&](const Signature& t) {
    Signature s{{}, back[t.output]};
    for (ColourId c : t.inputs) s.inputs.push_back(back[c]);
    return s;
  };

  // A vertex labelled x at the ordered d equals the element {pre(T), e}
  // moved by the sorting permutation, so its children are reordered by the
  // inverse of that permutation.
  std::function<WElement(const WElement&)> move = [&](const WElement& t) -> WElement {
    if (t.is_leaf()) return WElement::leaf(alpha[t.colour], t.input);
    const Signature d = t.signature();
    const Signature big = sort_signature(apply_colours(alpha, d)).ordered;
    const Signature pre = preimage(big);
    const Permutation rho = sort_signature(pre).rho;
    const Component* qc = q.collection().find(big);
    int e = -1;
    for (std::size_t k = 0; k < qc->size() && e < 0; ++k)
      if (p.act({pre, static_cast<int>(k)}, rho).id == t.label) e = static_cast<int>(k);
    std::vector<WElement> kids;
    for (const auto& c : t.children) kids.push_back(move(c));
    return WElement{alpha[t.colour], -1, e, t.length, permute(kids, rho.inverse())};
  };

  const auto& lc = left.collection().components();
  const auto& rc = right.operad.collection().components();
  std::set<Signature> sigs;
  for (const auto& [s, c] : lc) sigs.insert(s);
  for (const auto& [s, c] : rc) sigs.insert(s);
  for (const auto& sig : sigs) {
    ++rep.checked;
    auto li = lc.find(sig);
    auto ri = rc.find(sig);
    const std::size_t ln = li == lc.end() ? 0 : li->second.size();
    const std::size_t rn = ri == rc.end() ? 0 : ri->second.size();
    if (ln != rn) {
      rep.fail("component sizes differ at " + to_string(sig, target) + ": " + std::to_string(ln) + " vs " +
               std::to_string(rn));
      continue;
    }
    if (ln == 0) continue;
    std::vector<int> map(ln, -1);
    std::set<int> hit;
    bool preserved = back[sig.output] >= 0;
    for (int c : sig.inputs) preserved = preserved && back[c] >= 0;
    for (std::size_t id = 0; id < ln; ++id) {
      WElement moved;
      if (!preserved) {
        moved = WElement::leaf(sig.output, 0);
      } else {
        const Signature pre = preimage(sig);
        auto sp = sort_signature(pre);
        const WElement& stored = w.tree(sp.ordered, static_cast<int>(id));
        moved = move(act_on_inputs(stored, sp.rho.inverse()));
      }
      map[id] = right.index->find(sig, canonicalize(moved, q.collection()));
      if (map[id] < 0) rep.fail("element " + li->second.names[id] + " has no image at " + to_string(sig, target));
      else hit.insert(map[id]);
    }
    if (hit.size() != ln) {
      rep.fail("map is not injective at " + to_string(sig, target));
      continue;
    }
    for (const auto& g : stabilizer(sig.inputs).elements)
      for (std::size_t id = 0; id < ln; ++id)
        if (map[li->second.act(static_cast<int>(id), g)] != ri->second.act(map[id], g))
          rep.fail("map is not equivariant at " + to_string(sig, target));
  }
  return rep;
}

}  // namespace forge::testing
