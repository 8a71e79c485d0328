#include "forge/free_operad.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace forge {

int TreeIndex::find(const Signature& sig, const LTree& canonical) const {
  auto it = lookup.find(sig);
  if (it == lookup.end()) return -1;
  auto jt = it->second.find(key(canonical));
  return jt == it->second.end() ? -1 : jt->second;
}

namespace {

// Planar shapes with output colour c, at most `budget` vertices and at most
// `max_leaves` leaves; leaves are numbered later.
void shapes(const PointedCollection& k, ColourId c, std::size_t budget, std::size_t max_leaves,
            std::vector<LTree>& out) {
  out.push_back(LTree::leaf(c, 0));
  if (budget == 0) return;
  for (const auto& [sig, comp] : k.collection.components()) {
    if (sig.output != c) continue;
    for (std::size_t x = 0; x < comp.size(); ++x) {
      const bool unit = sig.arity() == 1 && sig.inputs[0] == c && static_cast<int>(x) == k.units.at(c);
      if (unit) continue;
      LTree v{c, -1, static_cast<int>(x), -1, {}};
      std::function<void(std::size_t, std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left,
                                                                          std::size_t leaves) {
        if (i == sig.arity()) {
          out.push_back(v);
          return;
        }
        std::vector<LTree> subs;
        shapes(k, sig.inputs[i], left, max_leaves, subs);
        for (auto& s : subs) {
          std::size_t nv = vertex_count(s), nl = leaf_count(s);
          if (nv > left || leaves + nl > max_leaves) continue;
          if (!s.is_leaf()) s.length = -1;
          v.children.push_back(s);
          fill(i + 1, left - nv, leaves + nl);
          v.children.pop_back();
        }
      };
      fill(0, budget - 1, 0);
    }
  }
}

void number_leaves(LTree& t, int& next) {
  if (t.is_leaf()) {
    t.input = next++;
    return;
  }
  for (auto& c : t.children) number_leaves(c, next);
}

}  // namespace

TreeOperad free_operad(const PointedCollection& k, std::size_t max_vertices, std::size_t max_arity) {
  const ColourSet& colours = k.collection.colours();
  auto index = std::make_shared<TreeIndex>();
  std::map<Signature, std::set<std::string>> seen;
  for (std::size_t c = 0; c < colours.size(); ++c) {
    std::vector<LTree> all;
    shapes(k, static_cast<ColourId>(c), max_vertices, max_arity, all);
    for (auto& shape : all) {
      int n = 0;
      number_leaves(shape, n);
      if (static_cast<std::size_t>(n) > max_arity) continue;
      const Signature planar = input_signature(shape);
      const Signature d = sort_signature(planar).ordered;
      // Every numbering compatible with the colours of d.
      for (const auto& pi : Permutation::all(n)) {
        if (permute(planar.inputs, pi) != d.inputs) continue;
        LTree t = canonicalize(act_on_inputs(shape, pi), k.collection);
        if (seen[d].insert(key(t)).second) index->elements[d].push_back(std::move(t));
      }
    }
  }
  Collection coll(colours);
  for (auto& [sig, elems] : index->elements) {
    std::stable_sort(elems.begin(), elems.end(), [](const LTree& a, const LTree& b) {
      std::size_t va = vertex_count(a), vb = vertex_count(b);
      return va != vb ? va < vb : key(a) < key(b);
    });
    auto& look = index->lookup[sig];
    Component comp;
    comp.sig = sig;
    std::map<std::string, int> name_uses;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      look[key(elems[i])] = static_cast<int>(i);
      std::string name = elems[i].is_leaf() ? "1_" + colours.name(sig.output) : display(elems[i], k.collection);
      if (name_uses[name]++) name += "#" + std::to_string(name_uses[name] - 1);
      comp.names.push_back(std::move(name));
    }
    for (const auto& g : stabilizer(sig.inputs).elements) {
      std::vector<int> row;
      for (const auto& e : elems) row.push_back(look.at(key(canonicalize(act_on_inputs(e, g), k.collection))));
      comp.action.push_back(std::move(row));
    }
    coll.set(std::move(comp));
  }
  std::vector<int> units;
  for (std::size_t c = 0; c < colours.size(); ++c) {
    ColourId id = static_cast<ColourId>(c);
    units.push_back(index->find({{id}, id}, LTree::leaf(id, 0)));
  }
  std::shared_ptr<const TreeIndex> idx = index;
  Collection labels = k.collection;
  ComposeFn fn = [idx, labels, max_vertices](const Signature& outer, int x, std::span<const Signature> inner,
                                             std::span<const int> ys) {
    std::vector<LTree> parts;
    Signature glued{{}, outer.output};
    for (std::size_t i = 0; i < inner.size(); ++i) {
      parts.push_back(idx->tree(inner[i], ys[i]));
      glued.inputs.insert(glued.inputs.end(), inner[i].inputs.begin(), inner[i].inputs.end());
    }
    LTree t = substitute(idx->tree(outer, x), parts);
    if (vertex_count(t) > max_vertices)
      throw TruncationOverflow("free operad composite has " + std::to_string(vertex_count(t)) + " vertices");
    auto sg = sort_signature(glued);
    int id = idx->find(sg.ordered, canonicalize(act_on_inputs(t, sg.rho), labels));
    if (id < 0) throw TruncationOverflow("free operad composite outside the truncation");
    return id;
  };
  Operad op("free", std::move(coll), std::move(units), std::move(fn), max_arity);
  return {std::move(op), idx};
}

}  // namespace forge
