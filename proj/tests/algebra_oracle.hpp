#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "forge/algebras.hpp"
#include "forge/zoo.hpp"

namespace forge::testing {

/// A finite monoid by its multiplication table.
struct TableMonoid {
  int unit = 0;
  std::vector<std::vector<int>> mul;

  int size() const { return static_cast<int>(mul.size()); }
  int operator()(int a, int b) const { return mul[a][b]; }
};

/// Every monoid structure on {0..n-1} with unit 0 (not up to isomorphism).
inline std::vector<TableMonoid> all_monoids(int n) {
  std::vector<TableMonoid> out;
  const int free = (n - 1) * (n - 1);
  long total = 1;
  for (int i = 0; i < free; ++i) total *= n;
  for (long code = 0; code < total; ++code) {
    TableMonoid m{0, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    long c = code;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == 0) m.mul[a][b] = b;
        else if (b == 0) m.mul[a][b] = a;
        else {
          m.mul[a][b] = static_cast<int>(c % n);
          c /= n;
        }
      }
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int d = 0; d < n && assoc; ++d) assoc = m(m(a, b), d) == m(a, m(b, d));
    if (assoc) out.push_back(std::move(m));
  }
  return out;
}

/// Self-maps of {0, 1} under composition, a non-commutative monoid; the map
/// f is encoded as 2 f(0) + f(1).
inline TableMonoid transformation_monoid() {
  TableMonoid m{1, std::vector<std::vector<int>>(4, std::vector<int>(4))};
  auto at = [](int f, int x) { return x == 0 ? f / 2 : f % 2; };
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) m.mul[f][g] = 2 * at(f, at(g, 0)) + at(f, at(g, 1));
  return m;
}

inline std::vector<std::string> numbered_names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// The monoid as an algebra over the associative operad: mu_n multiplies its
/// inputs from left to right.
inline Algebra monoid_algebra(const Operad& ass, const NonSymmetricOperad& ns, const TableMonoid& m,
                              std::size_t max_arity) {
  return algebra_from_ns(ass, ns, ass.colours(), {numbered_names("m", m.size())},
                         [&m](const Signature&, int, std::span<const int> xs) {
                           int r = m.unit;
                           for (int x : xs) r = m(r, x);
                           return r;
                         },
                         max_arity);
}

/// A monoid acting on a set from the left, as a left-module algebra.
inline Algebra module_algebra(const Operad& lmod, const NonSymmetricOperad& ns, const TableMonoid& m,
                              const std::vector<std::vector<int>>& action, std::size_t max_arity) {
  const int n = static_cast<int>(action.front().size());
  return algebra_from_ns(lmod, ns, lmod.colours(), {numbered_names("m", m.size()), numbered_names("v", n)},
                         [&](const Signature& e, int, std::span<const int> xs) {
                           int r = m.unit;
                           const std::size_t scalars = e.output == 1 ? xs.size() - 1 : xs.size();
                           for (std::size_t i = 0; i < scalars; ++i) r = m(r, xs[i]);
                           return e.output == 1 ? action[r][xs.back()] : r;
                         },
                         max_arity);
}

/// Category from hom-sets and a composition rule g o f = comp(a, b, c, f, g).
inline FiniteCategory table_category(std::vector<std::string> objects,
                                     std::map<std::pair<int, int>, std::vector<std::string>> hom,
                                     std::vector<int> identity,
                                     const std::function<int(int, int, int, int, int)>& comp) {
  FiniteCategory c{std::move(objects), std::move(hom), std::move(identity), {}};
  const int n = static_cast<int>(c.objects.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const int ab = static_cast<int>(c.size(a, b)), bd = static_cast<int>(c.size(b, d));
        if (!ab || !bd) continue;
        auto& t = c.composition[{a, b, d}];
        for (int f = 0; f < ab; ++f)
          for (int g = 0; g < bd; ++g) t.push_back(comp(a, b, d, f, g));
      }
  return c;
}

/// Counts algebra maps A -> B by exhaustive backtracking over all families of
/// functions, each action constraint tested as soon as its values are
/// assigned. `fixed[c][i] >= 0` pins a value. Entries of -1 in A impose
/// nothing. The last map found is stored in `witness`.
inline std::size_t count_algebra_maps(const Algebra& a, const Algebra& b, const Operad& p, std::size_t max_arity,
                                      const std::vector<std::vector<int>>& fixed = {},
                                      AlgebraMap* witness = nullptr) {
  const std::size_t colours = a.carrier.size();
  std::vector<std::size_t> offset(colours + 1, 0);
  for (std::size_t c = 0; c < colours; ++c) offset[c + 1] = offset[c] + a.carrier[c].size();
  const std::size_t vars = offset.back();
  std::vector<ColourId> colour_of(vars);
  for (std::size_t c = 0; c < colours; ++c)
    for (std::size_t v = offset[c]; v < offset[c + 1]; ++v) colour_of[v] = static_cast<ColourId>(c);

  struct Constraint {
    std::size_t result;
    std::vector<std::size_t> args;
    const std::vector<int>* target;
    const Signature* sig;
  };
  std::vector<std::vector<Constraint>> at(vars + 1);
  for (const auto& [d, comp] : p.collection().components()) {
    if (d.arity() > max_arity || comp.size() == 0) continue;
    const auto inputs = all_inputs(a, d.inputs);
    for (std::size_t x = 0; x < comp.size(); ++x) {
      const auto& ta = a.actions.at(d)[x];
      const auto& tb = b.actions.at(d)[x];
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        if (ta[k] < 0) continue;
        Constraint con{offset[d.output] + ta[k], {}, &tb, &d};
        std::size_t last = con.result;
        for (std::size_t i = 0; i < d.arity(); ++i) {
          con.args.push_back(offset[d.inputs[i]] + inputs[k][i]);
          last = std::max(last, con.args.back());
        }
        at[last].push_back(std::move(con));
      }
    }
  }

  std::vector<int> value(vars, -1);
  std::size_t count = 0;
  std::vector<int> args;
  std::function<void(std::size_t)> search = [&](std::size_t v) {
    if (v == vars) {
      ++count;
      if (witness) {
        witness->components.assign(colours, {});
        for (std::size_t u = 0; u < vars; ++u) witness->components[colour_of[u]].push_back(value[u]);
      }
      return;
    }
    const ColourId c = colour_of[v];
    const int pin = fixed.empty() ? -1 : fixed[c][v - offset[c]];
    for (int y = 0; y < static_cast<int>(b.size(c)); ++y) {
      if (pin >= 0 && y != pin) continue;
      value[v] = y;
      bool ok = true;
      for (const auto& con : at[v]) {
        args.clear();
        for (std::size_t u : con.args) args.push_back(value[u]);
        if ((*con.target)[tuple_index(b, con.sig->inputs, args)] != value[con.result]) {
          ok = false;
          break;
        }
      }
      if (ok) search(v + 1);
    }
    value[v] = -1;
  };
  // With empty carriers the only family is the empty one.
  search(0);
  return count;
}

/// A diagram over the resolution of Diag_C from its values on strings that
/// cannot be split at a length-one edge; other strings act by composing
/// their pieces.
inline Algebra coherent_diagram(const WOperad& w, const Operad& diag, std::vector<std::vector<std::string>> carrier,
                                const std::function<std::vector<int>(const Signature&, const WElement&)>& value) {
  Algebra d{w.operad.colours(), std::move(carrier), {}};
  for (const auto& [sig, trees] : w.index->elements) {
    auto& rows = d.actions[sig];
    for (const auto& t : trees) {
      // Vertices from the root down, with the length of the edge below each.
      std::vector<const WElement*> chain;
      for (const WElement* v = &t; !v->is_leaf(); v = &v->children[0]) chain.push_back(v);
      std::vector<int> table(d.size(sig.inputs[0]));
      for (std::size_t x = 0; x < table.size(); ++x) table[x] = static_cast<int>(x);
      std::size_t end = chain.size();
      while (end > 0) {
        std::size_t begin = end - 1;
        while (begin > 0 && chain[begin]->length != w.segment.one) --begin;
        // The piece chain[begin .. end) is cut above chain[begin] unless that
        // is the root.
        const std::size_t top = begin;
        const ColourId bottom = chain[end - 1]->children[0].colour;
        std::function<WElement(std::size_t)> build = [&](std::size_t i) -> WElement {
          WElement v{chain[i]->colour, -1, chain[i]->label, i == top ? -1 : chain[i]->length, {}};
          v.children.push_back(i + 1 < end ? build(i + 1) : WElement::leaf(bottom, 0));
          return v;
        };
        WElement piece = build(top);
        const Signature ps{{bottom}, piece.colour};
        const std::vector<int> pv = value(ps, canonicalize(piece, diag.collection()));
        for (auto& y : table) y = pv.at(y);
        end = top;
      }
      rows.push_back(std::move(table));
    }
  }
  return d;
}

}  // namespace forge::testing
