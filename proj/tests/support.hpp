#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "forge/collections.hpp"
#include "forge/trees.hpp"

namespace forge::testing {

using Rng = std::mt19937_64;

inline Tree random_tree(Rng& rng, int n_colours, ColourId colour, int& budget, int max_arity = 3,
                        int min_arity = 0) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (budget <= 0 || coin(rng) == 0) return Tree::edge(colour);
  --budget;
  int arity = std::uniform_int_distribution<int>(min_arity, max_arity)(rng);
  std::vector<ColourId> ins(arity);
  for (auto& c : ins) c = std::uniform_int_distribution<int>(0, n_colours - 1)(rng);
  std::sort(ins.begin(), ins.end());
  Tree t{colour, false, {}};
  for (ColourId c : ins) t.children.push_back(random_tree(rng, n_colours, c, budget, max_arity, min_arity));
  return t;
}

inline Tree random_tree(Rng& rng, int n_colours, int max_vertices, int max_arity = 3, int min_arity = 0) {
  int budget = max_vertices;
  ColourId c = std::uniform_int_distribution<int>(0, n_colours - 1)(rng);
  return random_tree(rng, n_colours, c, budget, max_arity, min_arity);
}

/// A random non-planar relabelling of t: siblings of equal colour are
/// shuffled. Returns the new tree and the isomorphism from t to it, built
/// directly from the shuffle rather than by search.
inline std::pair<Tree, TreeIso> shuffle_tree(const Tree& t, Rng& rng) {
  if (t.is_edge) return {t, TreeIso{{}, {0}, {}}};
  const std::size_t m = t.children.size();
  // p[i] = new slot of old child i; only permutes within runs of equal colour.
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t lo = 0; lo < m;) {
    std::size_t hi = lo;
    while (hi < m && t.children[hi].colour == t.children[lo].colour) ++hi;
    std::shuffle(p.begin() + lo, p.begin() + hi, rng);
    lo = hi;
  }
  std::vector<std::pair<Tree, TreeIso>> sub;
  for (const auto& c : t.children) sub.push_back(shuffle_tree(c, rng));
  Tree out{t.colour, false, std::vector<Tree>(m)};
  for (std::size_t i = 0; i < m; ++i) out.children[p[i]] = sub[i].first;

  std::vector<int> va(m + 1, 1), la(m + 1, 0), vb(m + 1, 1), lb(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    va[i + 1] = va[i] + static_cast<int>(vertex_count(t.children[i]));
    la[i + 1] = la[i] + static_cast<int>(leaf_count(t.children[i]));
    vb[i + 1] = vb[i] + static_cast<int>(vertex_count(out.children[i]));
    lb[i + 1] = lb[i] + static_cast<int>(leaf_count(out.children[i]));
  }
  TreeIso iso;
  iso.vertex_map.assign(va[m], -1);
  iso.slot_map.assign(va[m], {});
  iso.leaf_map.assign(la[m], -1);
  iso.vertex_map[0] = 0;
  iso.slot_map[0] = p;
  for (std::size_t i = 0; i < m; ++i) {
    const TreeIso& s = sub[i].second;
    for (std::size_t x = 0; x < s.vertex_map.size(); ++x) {
      iso.vertex_map[va[i] + x] = vb[p[i]] + s.vertex_map[x];
      iso.slot_map[va[i] + x] = s.slot_map[x];
    }
    for (std::size_t x = 0; x < s.leaf_map.size(); ++x) iso.leaf_map[la[i] + x] = lb[p[i]] + s.leaf_map[x];
  }
  return {out, iso};
}

inline std::vector<int> random_numbering(std::size_t n, Rng& rng) {
  std::vector<int> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  std::shuffle(tau.begin(), tau.end(), rng);
  return tau;
}

inline Permutation random_permutation(std::size_t n, Rng& rng) { return Permutation(random_numbering(n, rng)); }

/// Subgroups of a stabilizer, as sorted lists of element indices.
inline std::vector<std::vector<int>> subgroups(const StabilizerGroup& g) {
  const std::size_t n = g.elements.size();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1))
          closed = mask >> g.index_of(g.elements[a] * g.elements[b]) & 1;
    if (!closed) continue;
    std::vector<int> h;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1) h.push_back(static_cast<int>(a));
    out.push_back(std::move(h));
  }
  return out;
}

/// A random finite G-set at sig with at most max_size elements, built as a
/// disjoint union of coset spaces H\G.
inline Component random_component(const Signature& sig, int max_size, Rng& rng, const std::string& prefix) {
  const auto& g = stabilizer(sig.inputs);
  auto subs = subgroups(g);
  Component c;
  c.sig = sig;
  c.action.assign(g.elements.size(), {});
  int target = std::uniform_int_distribution<int>(1, max_size)(rng);
  int guard = 0;
  while (static_cast<int>(c.size()) < target && guard++ < 20) {
    const auto& h = subs[rng() % subs.size()];
    // Right cosets H g, each as a sorted list of element indices.
    std::vector<std::vector<int>> cosets;
    for (std::size_t a = 0; a < g.elements.size(); ++a) {
      std::vector<int> coset;
      for (int e : h) coset.push_back(g.index_of(g.elements[e] * g.elements[a]));
      std::sort(coset.begin(), coset.end());
      if (std::find(cosets.begin(), cosets.end(), coset) == cosets.end()) cosets.push_back(coset);
    }
    if (static_cast<int>(c.size() + cosets.size()) > max_size) continue;
    const int base = static_cast<int>(c.size());
    for (std::size_t i = 0; i < cosets.size(); ++i) c.names.push_back(prefix + std::to_string(base + i));
    for (std::size_t s = 0; s < g.elements.size(); ++s)
      for (const auto& coset : cosets) {
        std::vector<int> moved;
        for (int e : coset) moved.push_back(g.index_of(g.elements[e] * g.elements[s]));
        std::sort(moved.begin(), moved.end());
        c.action[s].push_back(base + static_cast<int>(std::find(cosets.begin(), cosets.end(), moved) - cosets.begin()));
      }
  }
  return c;
}

/// Random collection: each ordered signature up to max_arity is non-empty
/// with the given probability.
inline Collection random_collection(const ColourSet& colours, std::size_t max_arity, double density,
                                    int max_size, Rng& rng, const std::string& prefix) {
  Collection x(colours);
  std::bernoulli_distribution keep(density);
  for (const auto& sig : ordered_signatures(colours, max_arity))
    if (keep(rng)) {
      auto c = random_component(sig, max_size, rng, prefix);
      if (c.size()) x.set(std::move(c));
    }
  return x;
}

}  // namespace forge::testing

#include <set>

#include "forge/operads.hpp"

namespace forge::testing {

/// Commutative monoid Z/m (additive) or the two-element {1,0} multiplicative
/// monoid, as (size, product, unit).
struct SmallMonoid {
  int size;
  int unit;
  std::function<int(int, int)> mul;
};

inline SmallMonoid random_monoid(Rng& rng) {
  switch (rng() % 3) {
    case 0: return {1, 0, [](int, int) { return 0; }};
    case 1: return {2, 1, [](int a, int b) { return a * b; }};
    default: {
      int m = 2 + static_cast<int>(rng() % 2);
      return {m, 0, [m](int a, int b) { return (a + b) % m; }};
    }
  }
}

/// Random operad: every signature in a random composition-closed set (up to
/// max_arity) carries the monoid with trivial actions; composition multiplies.
/// Closures with more than max_sigs signatures are redrawn so that exhaustive
/// checks stay cheap.
inline Operad random_monoid_operad(Rng& rng, const ColourSet& colours, std::size_t max_arity, double density = 0.2,
                                   std::size_t max_sigs = 9) {
  SmallMonoid mon = random_monoid(rng);
  std::set<Signature> sigs;
  std::bernoulli_distribution keep(density);
redraw:
  sigs.clear();
  for (const auto& s : ordered_signatures(colours, max_arity))
    if (keep(rng) || (s.arity() == 1 && s.inputs[0] == s.output)) sigs.insert(s);
  // Close under composition.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Signature> list(sigs.begin(), sigs.end());
    for (const auto& outer : list) {
      std::vector<Signature> inner(outer.arity());
      std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t i, std::size_t left) {
        if (i == inner.size()) {
          Signature r{{}, outer.output};
          for (auto& s : inner) r.inputs.insert(r.inputs.end(), s.inputs.begin(), s.inputs.end());
          std::sort(r.inputs.begin(), r.inputs.end());
          if (sigs.insert(r).second) grew = true;
          return;
        }
        for (const auto& s : list)
          if (s.output == outer.inputs[i] && s.arity() <= left) {
            inner[i] = s;
            pick(i + 1, left - s.arity());
          }
      };
      pick(0, max_arity);
    }
    if (sigs.size() > max_sigs) goto redraw;
  }
  Collection coll(colours);
  std::vector<std::string> names;
  for (int v = 0; v < mon.size; ++v) names.push_back("m" + std::to_string(v));
  for (const auto& s : sigs) coll.set(s, names);
  std::vector<int> units(colours.size(), mon.unit);
  ComposeFn fn = [mon](const Signature&, int x, std::span<const Signature>, std::span<const int> ys) {
    int r = x;
    for (int y : ys) r = mon.mul(r, y);
    return r;
  };
  return Operad("random", std::move(coll), std::move(units), std::move(fn), max_arity);
}

}  // namespace forge::testing

#include "forge/w_construction.hpp"

namespace forge::testing {

/// Random element of the resolution over p: unit vertices and zero lengths
/// are drawn often so that normalization has work to do. Shapes whose vertex
/// arities sum above the arity bound of p are redrawn, since contracting
/// them could leave the materialized part of p.
inline WElement random_w_node(Rng& rng, const Operad& p, const Segment& h, ColourId c, int& budget) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (budget <= 0 || coin(rng) == 0) return WElement::leaf(c, 0);
  std::vector<const Component*> options;
  for (const auto& [sig, comp] : p.collection().components())
    if (sig.output == c && comp.size()) options.push_back(&comp);
  if (options.empty()) return WElement::leaf(c, 0);
  --budget;
  WElement v{c, -1, 0, -1, {}};
  if (std::bernoulli_distribution(0.3)(rng)) {
    v.label = p.units().at(c);
    v.children.push_back(WElement::leaf(c, 0));
  } else {
    const Component& comp = *options[rng() % options.size()];
    v.label = static_cast<int>(rng() % comp.size());
    for (ColourId in : comp.sig.inputs) v.children.push_back(WElement::leaf(in, 0));
  }
  for (auto& child : v.children) {
    child = random_w_node(rng, p, h, child.colour, budget);
    if (!child.is_leaf()) child.length = static_cast<int>(rng() % h.size());
  }
  return v;
}

inline std::size_t slot_count(const WElement& t) {
  std::size_t n = t.children.size();
  for (const auto& c : t.children) n += slot_count(c);
  return n;
}

inline WElement random_w(Rng& rng, const Operad& p, const Segment& h, int max_vertices) {
  for (;;) {
    int budget = max_vertices;
    const auto c = static_cast<ColourId>(rng() % p.colours().size());
    WElement t = random_w_node(rng, p, h, c, budget);
    if (slot_count(t) > p.arity_bound()) continue;
    int next = 0;
    std::function<void(WElement&)> number = [&](WElement& n) {
      if (n.is_leaf()) {
        n.input = next++;
        return;
      }
      for (auto& ch : n.children) number(ch);
    };
    number(t);
    return act_on_inputs(t, random_permutation(static_cast<std::size_t>(next), rng));
  }
}

}  // namespace forge::testing
