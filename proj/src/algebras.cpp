#include "forge/algebras.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "forge/zoo.hpp"

namespace forge {

std::vector<std::size_t> Algebra::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : carrier) out.push_back(c.size());
  return out;
}

std::size_t tuple_index(const Algebra& a, std::span<const ColourId> colours, std::span<const int> inputs) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < colours.size(); ++i) k = k * a.size(colours[i]) + static_cast<std::size_t>(inputs[i]);
  return k;
}

std::size_t tuple_count(const Algebra& a, std::span<const ColourId> colours) {
  std::size_t n = 1;
  for (ColourId c : colours) n *= a.size(c);
  return n;
}

std::vector<std::vector<int>> all_inputs(const Algebra& a, std::span<const ColourId> colours) {
  std::vector<std::vector<int>> out;
  const std::size_t total = tuple_count(a, colours);
  std::vector<int> cur(colours.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.push_back(cur);
    for (std::size_t i = colours.size(); i-- > 0;) {
      if (static_cast<std::size_t>(++cur[i]) < a.size(colours[i])) break;
      cur[i] = 0;
    }
  }
  return out;
}

namespace {

const std::vector<int>& table_of(const Algebra& a, const Signature& d, int x) {
  auto it = a.actions.find(d);
  if (it == a.actions.end() || x < 0 || static_cast<std::size_t>(x) >= it->second.size())
    throw InvalidArgument("algebra has no action at " + to_string(d, a.colours));
  return it->second[x];
}

}  // namespace

int evaluate(const Algebra& a, const Operad&, const Element& e, std::span<const int> inputs) {
  if (inputs.size() != e.sig.arity()) throw ArityMismatch("evaluate: wrong number of inputs");
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (inputs[i] < 0 || static_cast<std::size_t>(inputs[i]) >= a.size(e.sig.inputs[i]))
      throw ColourMismatch("evaluate: input " + std::to_string(i) + " is not in the carrier of its colour");
  // e is the stored element moved by rho^{-1}, which reads its inputs
  // through rho.
  auto sr = sort_signature(e.sig);
  std::vector<int> xs(inputs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = inputs[sr.rho(i)];
  const int v = table_of(a, sr.ordered, e.id).at(tuple_index(a, sr.ordered.inputs, xs));
  if (v < 0) throw TruncationOverflow("action outside the truncation");
  return v;
}

Report check_algebra(const Algebra& a, const Operad& p, std::size_t max_arity) {
  Report rep;
  const ColourSet& cs = p.colours();
  if (!(a.colours == cs) || a.carrier.size() != cs.size()) {
    rep.fail("algebra and operad have different colours");
    return rep;
  }
  for (const auto& [d, comp] : p.collection().components()) {
    if (d.arity() > max_arity || comp.size() == 0) continue;
    auto it = a.actions.find(d);
    if (it == a.actions.end() || it->second.size() != comp.size()) {
      rep.fail("no action table at " + to_string(d, cs));
      continue;
    }
    const std::size_t n = tuple_count(a, d.inputs);
    for (std::size_t x = 0; x < comp.size(); ++x) {
      const auto& t = it->second[x];
      if (t.size() != n) {
        rep.fail("action table of " + comp.names[x] + " at " + to_string(d, cs) + " has the wrong length");
        continue;
      }
      for (int v : t)
        if (v < -1 || (v >= 0 && static_cast<std::size_t>(v) >= a.size(d.output))) {
          rep.fail("action of " + comp.names[x] + " at " + to_string(d, cs) + " leaves the carrier");
          break;
        }
    }
  }
  if (!rep.ok()) return rep;

  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto col = static_cast<ColourId>(c);
    const auto& t = table_of(a, {{col}, col}, p.units().at(c));
    for (std::size_t x = 0; x < a.size(col); ++x) {
      ++rep.checked;
      if (t[x] != static_cast<int>(x))
        rep.fail("unit of " + cs.name(col) + " moves " + a.carrier[c][x] + " to " + (t[x] < 0 ? "nothing" : a.carrier[c][t[x]]));
    }
  }

  // Equivariance: (x . g)(y) = x(y . g^{-1}).
  for (const auto& [d, comp] : p.collection().components()) {
    if (d.arity() > max_arity || comp.size() == 0) continue;
    const auto inputs = all_inputs(a, d.inputs);
    for (const auto& g : comp.group().elements) {
      if (g.is_identity()) continue;
      const Permutation gi = g.inverse();
      for (std::size_t x = 0; x < comp.size(); ++x) {
        const auto& moved = a.actions.at(d)[comp.act(static_cast<int>(x), g)];
        const auto& orig = a.actions.at(d)[x];
        ++rep.checked;
        for (std::size_t k = 0; k < inputs.size(); ++k)
          if (moved[k] != orig[tuple_index(a, d.inputs, permute(inputs[k], gi))]) {
            rep.fail("action is not equivariant at " + to_string(d, cs) + " for " + comp.names[x] + " and " + to_string(g));
            break;
          }
      }
    }
  }

  // gamma(x; y_1..y_n) acts as x after the y_i.
  for_each_composition(p, max_arity, [&](const CompositionKey& k) {
    int z;
    try {
      z = p.compose_stored(k);
    } catch (const TruncationOverflow&) {
      ++rep.skipped;
      return;
    }
    Signature concat{{}, k.outer.output};
    for (const auto& s : k.inner) concat.inputs.insert(concat.inputs.end(), s.inputs.begin(), s.inputs.end());
    const auto& outer = a.actions.at(k.outer)[k.x];
    for (const auto& xs : all_inputs(a, concat.inputs)) {
      int lhs;
      try {
        lhs = evaluate(a, p, {concat, z}, xs);
      } catch (const TruncationOverflow&) {
        ++rep.skipped;
        continue;
      }
      std::vector<int> mid(k.inner.size());
      bool defined = true;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < k.inner.size(); ++i) {
        const std::size_t m = k.inner[i].arity();
        std::span<const int> chunk(xs.data() + pos, m);
        mid[i] = a.actions.at(k.inner[i])[k.ys[i]][tuple_index(a, k.inner[i].inputs, chunk)];
        defined = defined && mid[i] >= 0;
        pos += m;
      }
      const int rhs = defined ? outer[tuple_index(a, k.outer.inputs, mid)] : -1;
      if (rhs < 0) {
        ++rep.skipped;
        continue;
      }
      ++rep.checked;
      if (lhs != rhs) {
        std::string in;
        for (std::size_t i = 0; i < xs.size(); ++i) in += (i ? "," : "") + a.carrier[concat.inputs[i]][xs[i]];
        rep.fail("action does not respect composition at " + describe(p, k) + " on (" + in + ")");
        return;
      }
    }
  });
  return rep;
}

EndMap to_end_map(const Algebra& a, const Operad& p, std::size_t max_arity) {
  const auto sizes = a.sizes();
  EndMap out{endomorphism_operad(p.colours(), sizes, max_arity), {}};
  for (const auto& [d, comp] : p.collection().components()) {
    if (d.arity() > max_arity || comp.size() == 0) continue;
    auto& row = out.map.table[d];
    for (std::size_t x = 0; x < comp.size(); ++x) {
      const auto& t = table_of(a, d, static_cast<int>(x));
      if (std::find(t.begin(), t.end(), -1) != t.end()) throw TruncationOverflow("partial actions have no endomorphism");
      row.push_back(encode_function(sizes, d, t));
    }
  }
  return out;
}

AlgebraMap identity_map(const Algebra& a) {
  AlgebraMap f;
  for (const auto& c : a.carrier) {
    std::vector<int> id(c.size());
    std::iota(id.begin(), id.end(), 0);
    f.components.push_back(std::move(id));
  }
  return f;
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  AlgebraMap h;
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    std::vector<int> row;
    for (int v : f.components[c]) row.push_back(g.components.at(c).at(v));
    h.components.push_back(std::move(row));
  }
  return h;
}

Report check_algebra_map(const AlgebraMap& f, const Algebra& a, const Algebra& b, const Operad& p, std::size_t max_arity) {
  Report rep;
  const ColourSet& cs = p.colours();
  if (f.components.size() != cs.size()) {
    rep.fail("one function per colour is required");
    return rep;
  }
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto col = static_cast<ColourId>(c);
    if (f.components[c].size() != a.size(col)) rep.fail("function at " + cs.name(col) + " has the wrong domain");
    for (int v : f.components[c])
      if (v < 0 || static_cast<std::size_t>(v) >= b.size(col)) rep.fail("function at " + cs.name(col) + " leaves the codomain");
  }
  if (!rep.ok()) return rep;
  for (const auto& [d, comp] : p.collection().components()) {
    if (d.arity() > max_arity || comp.size() == 0) continue;
    const auto inputs = all_inputs(a, d.inputs);
    for (std::size_t x = 0; x < comp.size(); ++x) {
      const auto& ta = table_of(a, d, static_cast<int>(x));
      const auto& tb = table_of(b, d, static_cast<int>(x));
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        std::vector<int> mapped(inputs[k].size());
        for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = f(d.inputs[i], inputs[k][i]);
        const int va = ta[k], vb = tb[tuple_index(b, d.inputs, mapped)];
        if (va < 0 || vb < 0) {
          ++rep.skipped;
          continue;
        }
        ++rep.checked;
        if (f(d.output, va) != vb) {
          rep.fail("map does not commute with " + comp.names[x] + " at " + to_string(d, cs));
          break;
        }
      }
    }
  }
  return rep;
}

Algebra restrict(const OperadMap& phi, const Algebra& b) {
  Algebra r{b.colours, b.carrier, {}};
  for (const auto& [d, row] : phi.table) {
    auto& out = r.actions[d];
    for (int y : row) out.push_back(table_of(b, d, y));
  }
  return r;
}

OperadMap epsilon_map(const WOperad& w, const Operad& p) {
  OperadMap f;
  for (const auto& [d, trees] : w.index->elements) {
    auto& row = f.table[d];
    for (const auto& t : trees) {
      Element e = epsilon(t, p);
      if (e.sig != d) throw InvalidArgument("counit lands at the wrong signature");
      row.push_back(e.id);
    }
  }
  return f;
}

Algebra algebra_from_ns(const Operad& sym, const NonSymmetricOperad& ns, const ColourSet& colours,
                        std::vector<std::vector<std::string>> carrier, const NsAction& act, std::size_t max_arity) {
  Algebra a{colours, std::move(carrier), {}};
  if (a.carrier.size() != colours.size()) throw InvalidArgument("one carrier per colour is required");
  for (const auto& [e, names] : ns.components) {
    if (e.arity() > max_arity) continue;
    auto sr = sort_signature(e);
    const Signature& d = sr.ordered;
    const Component* comp = sym.collection().find(d);
    auto& rows = a.actions[d];
    rows.resize(comp->size());
    const auto inputs = all_inputs(a, d.inputs);
    const Permutation rho_inv = sr.rho.inverse();
    for (std::size_t q = 0; q < names.size(); ++q) {
      const int id0 = ns_element(sym, ns, e, static_cast<int>(q)).id;
      // The stored element is the ns element moved by rho.
      std::vector<int> base(inputs.size());
      for (std::size_t k = 0; k < inputs.size(); ++k) base[k] = act(e, static_cast<int>(q), permute(inputs[k], rho_inv));
      for (const auto& g : comp->group().elements) {
        const Permutation gi = g.inverse();
        std::vector<int> t(inputs.size());
        for (std::size_t k = 0; k < inputs.size(); ++k) t[k] = base[tuple_index(a, d.inputs, permute(inputs[k], gi))];
        rows[comp->act(id0, g)] = std::move(t);
      }
    }
  }
  for (const auto& [d, rows] : a.actions)
    for (const auto& r : rows)
      if (r.size() != tuple_count(a, d.inputs)) throw InvalidArgument("the non-symmetric action misses elements at " + to_string(d, colours));
  return a;
}

namespace {

using Rep = std::tuple<Signature, int, std::vector<int>>;

// Least (x . g, xs . g) over the stabilizer.
Rep orbit_rep(const Operad& p, const Signature& d, int x, const std::vector<int>& xs) {
  const Component* comp = p.collection().find(d);
  Rep best{d, x, xs};
  for (const auto& g : comp->group().elements) {
    Rep cand{d, comp->act(x, g), permute(xs, g)};
    if (cand < best) best = std::move(cand);
  }
  return best;
}

std::string generator_name(const Operad& p, const std::vector<std::vector<std::string>>& x, const Rep& r) {
  const auto& [d, e, xs] = r;
  std::string s = p.collection().find(d)->names[e] + "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + x[d.inputs[i]][xs[i]];
  return s + ")";
}

}  // namespace

FreeAlgebra free_algebra(const Operad& p, const std::vector<std::vector<std::string>>& x, std::size_t support_bound) {
  if (support_bound > p.arity_bound())
    throw InvalidArgument("support bound " + std::to_string(support_bound) + " exceeds the arities the operad provides");
  const ColourSet& cs = p.colours();
  if (x.size() != cs.size()) throw InvalidArgument("one generating set per colour is required");
  FreeAlgebra f;
  f.algebra.colours = cs;
  f.algebra.carrier.assign(cs.size(), {});
  f.classes.assign(cs.size(), {});
  Algebra gens{cs, x, {}};
  std::vector<std::map<Rep, int>> index(cs.size());
  for (const auto& [d, comp] : p.collection().components()) {
    if (d.arity() > support_bound || comp.size() == 0) continue;
    for (std::size_t e = 0; e < comp.size(); ++e)
      for (const auto& xs : all_inputs(gens, d.inputs)) {
        Rep r = orbit_rep(p, d, static_cast<int>(e), xs);
        auto& idx = index[d.output];
        if (idx.count(r)) continue;
        idx.emplace(r, static_cast<int>(f.classes[d.output].size()));
        f.classes[d.output].push_back({std::get<0>(r), std::get<1>(r), std::get<2>(r)});
        f.algebra.carrier[d.output].push_back(generator_name(p, x, r));
      }
  }
  // Carrier names must be unique for the algebra to be well formed.
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto col = static_cast<ColourId>(c);
    for (std::size_t i = 0; i < x[c].size(); ++i)
      f.unit.resize(cs.size()), f.unit[c].push_back(index[c].at(orbit_rep(p, {{col}, col}, p.units().at(c), {static_cast<int>(i)})));
  }
  f.unit.resize(cs.size());
  for (const auto& [e, comp] : p.collection().components()) {
    if (e.arity() > support_bound || comp.size() == 0) continue;
    auto& rows = f.algebra.actions[e];
    const auto inputs = all_inputs(f.algebra, e.inputs);
    for (std::size_t y = 0; y < comp.size(); ++y) {
      std::vector<int> t(inputs.size(), -1);
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        std::vector<Element> qs;
        std::vector<int> concat;
        std::size_t arity = 0;
        for (std::size_t i = 0; i < e.arity(); ++i) {
          const auto& g = f.classes[e.inputs[i]][inputs[k][i]];
          qs.push_back({g.sig, g.element});
          concat.insert(concat.end(), g.inputs.begin(), g.inputs.end());
          arity += g.sig.arity();
        }
        if (arity > support_bound) continue;
        Element z = p.compose({e, static_cast<int>(y)}, qs);
        // (stored . rho^{-1}, concat) is identified with (stored, concat . rho).
        auto sr = sort_signature(z.sig);
        t[k] = index[e.output].at(orbit_rep(p, sr.ordered, z.id, permute(concat, sr.rho)));
      }
      rows.push_back(std::move(t));
    }
  }
  return f;
}

WOperad diagram_resolution(const FiniteCategory& c, const Segment& h) {
  if (!c.is_acyclic()) throw InvalidArgument("rectification needs an acyclic category");
  // Strings of non-identity arrows pass through distinct objects.
  const std::size_t longest = std::max<std::size_t>(1, c.objects.size() - 1);
  return w_operad(make_diag(c), h, 1, longest);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  // The smaller index stays the root, so classes are named by their first
  // generator.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Rectification rectify(const Algebra& d, const FiniteCategory& c, const Segment& h) {
  Report valid = c.validate();
  if (!valid.ok()) throw InvalidArgument("not a category: " + valid.violations.front());
  Report seg = check_segment(h);
  if (!seg.ok()) throw InvalidArgument("not a segment: " + seg.violations.front());
  const WOperad w = diagram_resolution(c, h);
  const Operad diag = make_diag(c);
  const int n = static_cast<int>(c.objects.size());
  if (d.carrier.size() != c.objects.size()) throw InvalidArgument("diagram has the wrong objects");
  for (const auto& [sig, comp] : w.operad.collection().components()) {
    auto it = d.actions.find(sig);
    if (it == d.actions.end() || it->second.size() != comp.size())
      throw InvalidArgument("diagram does not match the resolution of " + to_string(sig, w.operad.colours()) +
                            " for this segment");
  }
  Report coherent = check_algebra(d, w.operad, 1);
  if (!coherent.ok()) throw InvalidArgument("not a coherent diagram: " + coherent.violations.front());
  const OperadMap eps = epsilon_map(w, diag);

  Rectification r;
  r.strict.colours = c.colours();
  r.strict.carrier.assign(n, {});
  r.unit.components.assign(n, {});
  // Per target b: generators (a, f: a -> b, x in D(a)), identified along
  // every string w: a' -> a as (a', f eps(w), x) ~ (a, f, D(w) x).
  std::vector<std::map<std::tuple<int, int, int>, int>> gen_index(n);
  std::vector<std::vector<int>> class_of(n);
  std::vector<std::vector<std::tuple<int, int, int>>> gens(n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a)
      for (int f = 0; f < static_cast<int>(c.size(a, b)); ++f)
        for (int x = 0; x < static_cast<int>(d.size(a)); ++x) {
          gen_index[b][{a, f, x}] = static_cast<int>(gens[b].size());
          gens[b].push_back({a, f, x});
        }
    UnionFind uf(gens[b].size());
    for (const auto& [sig, trees] : w.index->elements) {
      const int a1 = sig.inputs[0], a = sig.output;
      for (std::size_t wi = 0; wi < trees.size(); ++wi) {
        const int e = eps.table.at(sig)[wi];
        const auto& dw = d.actions.at(sig)[wi];
        for (int f = 0; f < static_cast<int>(c.size(a, b)); ++f) {
          const int fe = c.compose(a1, a, b, e, f);
          for (int x = 0; x < static_cast<int>(d.size(a1)); ++x)
            uf.unite(gen_index[b].at({a1, fe, x}), gen_index[b].at({a, f, dw.at(x)}));
        }
      }
    }
    std::map<int, int> root_to_class;
    class_of[b].resize(gens[b].size());
    for (std::size_t g = 0; g < gens[b].size(); ++g) {
      const int root = uf.find(static_cast<int>(g));
      auto [it, fresh] = root_to_class.emplace(root, static_cast<int>(root_to_class.size()));
      if (fresh) {
        const auto& [a, f, x] = gens[b][g];
        r.strict.carrier[b].push_back("[" + c.hom.at({a, b})[f] + " " + d.carrier[a][x] + "]");
      }
      class_of[b][g] = it->second;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < static_cast<int>(d.size(a)); ++x)
      r.unit.components[a].push_back(class_of[a][gen_index[a].at({a, c.identity[a], x})]);
  // An arrow g: b -> b2 sends the class of (a, f, x) to that of (a, g f, x).
  for (int b = 0; b < n; ++b)
    for (int b2 = 0; b2 < n; ++b2) {
      const std::size_t arrows = c.size(b, b2);
      if (!arrows) continue;
      auto& rows = r.strict.actions[{{b}, b2}];
      rows.assign(arrows, std::vector<int>(r.strict.carrier[b].size(), -1));
      for (std::size_t g = 0; g < gens[b].size(); ++g) {
        const auto& [a, f, x] = gens[b][g];
        for (std::size_t ar = 0; ar < arrows; ++ar) {
          const int gf = c.compose(a, b, b2, f, static_cast<int>(ar));
          rows[ar][class_of[b][g]] = class_of[b2][gen_index[b2].at({a, gf, x})];
        }
      }
    }
  return r;
}

Algebra diagram_algebra(const FiniteCategory& c, std::vector<std::vector<std::string>> carrier,
                        const std::map<std::pair<int, int>, std::vector<std::vector<int>>>& arrow_maps) {
  Algebra a{c.colours(), std::move(carrier), {}};
  if (a.carrier.size() != c.objects.size()) throw InvalidArgument("one carrier per object is required");
  for (const auto& [ab, arrows] : c.hom) {
    if (arrows.empty()) continue;
    auto it = arrow_maps.find(ab);
    if (it == arrow_maps.end() || it->second.size() != arrows.size())
      throw InvalidArgument("missing functions for arrows " + c.objects[ab.first] + " -> " + c.objects[ab.second]);
    a.actions[{{ab.first}, ab.second}] = it->second;
  }
  return a;
}

}  // namespace forge
