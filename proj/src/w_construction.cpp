#include "forge/w_construction.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace forge {

Segment Segment::boolean() { return chain({"0", "1"}); }

Segment Segment::chain(std::vector<std::string> names) {
  if (names.size() < 2) throw InvalidArgument("a segment needs distinct zero and one");
  Segment h;
  const int n = static_cast<int>(names.size());
  h.names = std::move(names);
  h.zero = 0;
  h.one = n - 1;
  h.join.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.join[a][b] = std::max(a, b);
  return h;
}

Report check_segment(const Segment& h) {
  Report rep;
  const int n = static_cast<int>(h.size());
  auto in_range = [n](int v) { return v >= 0 && v < n; };
  if (!in_range(h.zero) || !in_range(h.one)) {
    rep.fail("zero or one is not an element");
    return rep;
  }
  if (h.zero == h.one) rep.fail("zero and one coincide");
  if (h.join.size() != h.size()) {
    rep.fail("join table has the wrong number of rows");
    return rep;
  }
  for (int a = 0; a < n; ++a) {
    if (h.join[a].size() != h.size()) {
      rep.fail("join row " + h.names[a] + " has the wrong length");
      return rep;
    }
    for (int v : h.join[a])
      if (!in_range(v)) {
        rep.fail("join of " + h.names[a] + " leaves the segment");
        return rep;
      }
  }
  const std::string& z = h.names[h.zero];
  const std::string& o = h.names[h.one];
  for (int x = 0; x < n; ++x) {
    const std::string& xn = h.names[x];
    ++rep.checked;
    if (h(h.zero, x) != x) rep.fail("unit fails: " + z + " v " + xn + " != " + xn);
    if (h(x, h.zero) != x) rep.fail("unit fails: " + xn + " v " + z + " != " + xn);
    if (h(h.one, x) != h.one) rep.fail("absorption fails: " + o + " v " + xn + " != " + o);
    if (h(x, h.one) != h.one) rep.fail("absorption fails: " + xn + " v " + o + " != " + o);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++rep.checked;
        if (h(h(a, b), c) != h(a, h(b, c)))
          rep.fail("associativity fails at " + h.names[a] + ", " + h.names[b] + ", " + h.names[c]);
      }
  return rep;
}

namespace {

void validate_node(const WElement& t, const Operad& p, const Segment& h, bool root, std::vector<int>& seen) {
  const auto nc = static_cast<ColourId>(p.colours().size());
  if (t.colour < 0 || t.colour >= nc) throw ColourMismatch("tree colour outside the operad's colours");
  if (t.is_leaf()) {
    if (static_cast<std::size_t>(t.input) >= seen.size()) seen.resize(t.input + 1, 0);
    if (seen[t.input]++) throw InvalidArgument("input " + std::to_string(t.input + 1) + " is numbered twice");
    return;
  }
  if (root) {
    if (t.length != -1) throw InvalidArgument("the root edge carries no length");
  } else if (t.length < 0 || static_cast<std::size_t>(t.length) >= h.size()) {
    throw InvalidArgument("internal edge without a segment length");
  }
  const Signature sig = t.signature();
  if (!sig.is_ordered()) throw ColourMismatch("vertex inputs are not in colour order");
  const Component* c = p.collection().find(sig);
  if (!c || t.label < 0 || static_cast<std::size_t>(t.label) >= c->size())
    throw ColourMismatch("vertex label is not an element at " + to_string(sig, p.colours()));
  for (const auto& child : t.children) validate_node(child, p, h, false, seen);
}

bool is_unit_vertex(const WElement& t, const Operad& p) {
  return t.children.size() == 1 && t.children[0].colour == t.colour && t.label == p.units().at(t.colour);
}

void collect_redexes(const WElement& t, const Operad& p, const Segment& h, std::vector<int>& path,
                     std::vector<Redex>& out) {
  if (t.is_leaf()) return;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_redexes(t.children[i], p, h, path, out);
    path.pop_back();
  }
  if (!path.empty() && t.length == h.zero) out.push_back({path, 1});
  if (is_unit_vertex(t, p)) out.push_back({path, 2});
}

WElement& node_at(WElement& t, std::span<const int> path) {
  WElement* cur = &t;
  for (int i : path) cur = &cur->children.at(i);
  return *cur;
}

}  // namespace

void validate_w(const WElement& w, const Operad& p, const Segment& h) {
  std::vector<int> seen;
  validate_node(w, p, h, true, seen);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidArgument("input numbering has a gap");
}

std::vector<Redex> w_redexes(const WElement& w, const Operad& p, const Segment& h) {
  std::vector<Redex> out;
  std::vector<int> path;
  collect_redexes(w, p, h, path, out);
  return out;
}

WElement w_apply(const WElement& w, const Redex& r, const Operad& p, const Segment& h) {
  WElement out = w;
  std::span<const int> path(r.path);
  if (r.rule == 1) {
    if (path.empty()) throw InvalidArgument("the root has no edge to contract");
    WElement& parent = node_at(out, path.first(path.size() - 1));
    const std::size_t j = static_cast<std::size_t>(path.back());
    WElement v = parent.children.at(j);
    if (v.is_leaf() || v.length != h.zero) throw InvalidArgument("no zero-length edge at this redex");
    std::vector<Element> args;
    std::vector<WElement> kids;
    for (std::size_t k = 0; k < parent.children.size(); ++k) {
      if (k == j) {
        args.push_back({v.signature(), v.label});
        kids.insert(kids.end(), v.children.begin(), v.children.end());
      } else {
        args.push_back(p.unit(parent.children[k].colour));
        kids.push_back(parent.children[k]);
      }
    }
    Element composite = p.compose({parent.signature(), parent.label}, args);
    // Store at the ordered signature; children follow the same permutation.
    auto sr = sort_signature(composite.sig);
    parent.label = p.act(composite, sr.rho).id;
    parent.children = permute(kids, sr.rho);
    return out;
  }
  WElement& v = node_at(out, path);
  if (!is_unit_vertex(v, p)) throw InvalidArgument("no unit vertex at this redex");
  WElement child = std::move(v.children[0]);
  // The edge above the unit comes first in the join. Next to an external
  // edge the internal length is dropped.
  if (!child.is_leaf()) child.length = path.empty() ? -1 : h(child.length, v.length);
  v = std::move(child);
  return out;
}

WElement w_normalize(const WElement& w, const Operad& p, const Segment& h, std::mt19937_64* random_order,
                     std::size_t* steps) {
  validate_w(w, p, h);
  WElement cur = w;
  std::size_t n = 0;
  for (;;) {
    auto redexes = w_redexes(cur, p, h);
    if (redexes.empty()) break;
    std::size_t pick = 0;
    if (random_order) pick = std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(*random_order);
    cur = w_apply(cur, redexes[pick], p, h);
    ++n;
  }
  if (steps) *steps = n;
  return canonicalize(cur, p.collection());
}

WElement w_compose(const WElement& w1, int slot, const WElement& w2, const Operad& p, const Segment& h) {
  validate_w(w1, p, h);
  validate_w(w2, p, h);
  const Signature s1 = input_signature(w1);
  if (slot < 0 || static_cast<std::size_t>(slot) >= s1.arity()) throw ArityMismatch("no input " + std::to_string(slot + 1));
  if (s1.inputs[slot] != w2.colour) throw ColourMismatch("grafting onto an input of another colour");
  std::vector<WElement> parts;
  for (std::size_t i = 0; i < s1.arity(); ++i)
    parts.push_back(static_cast<int>(i) == slot ? w2 : WElement::leaf(s1.inputs[i], 0));
  return w_normalize(substitute(w1, parts, h.one), p, h);
}

namespace {

// The composite of the subtree with its inputs in planar order, and the
// input number of each planar position.
Element evaluate_subtree(const WElement& t, const Operad& p, std::vector<int>& inputs) {
  if (t.is_leaf()) {
    inputs.push_back(t.input);
    return p.unit(t.colour);
  }
  std::vector<Element> qs;
  for (const auto& c : t.children) qs.push_back(evaluate_subtree(c, p, inputs));
  return p.compose({t.signature(), t.label}, qs);
}

}  // namespace

Element epsilon(const WElement& w, const Operad& p) {
  std::vector<int> planar;
  Element r = evaluate_subtree(w, p, planar);
  // Input i of the result is the planar position carrying number i.
  std::vector<int> sigma(planar.size());
  for (std::size_t pos = 0; pos < planar.size(); ++pos) sigma.at(planar[pos]) = static_cast<int>(pos);
  return p.act(r, Permutation(std::move(sigma)));
}

namespace {

// Normal shapes with output colour c: no unit vertices, no zero lengths.
// Leaves are numbered later.
void normal_shapes(const Operad& p, const Segment& h, ColourId c, std::size_t budget, std::size_t max_leaves,
                   std::vector<WElement>& out) {
  out.push_back(WElement::leaf(c, 0));
  if (budget == 0) return;
  for (const auto& [sig, comp] : p.collection().components()) {
    if (sig.output != c) continue;
    for (std::size_t x = 0; x < comp.size(); ++x) {
      if (sig.arity() == 1 && sig.inputs[0] == c && static_cast<int>(x) == p.units().at(c)) continue;
      WElement v{c, -1, static_cast<int>(x), -1, {}};
      std::function<void(std::size_t, std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left,
                                                                          std::size_t leaves) {
        if (i == sig.arity()) {
          out.push_back(v);
          return;
        }
        std::vector<WElement> subs;
        normal_shapes(p, h, sig.inputs[i], left, max_leaves, subs);
        for (auto& s : subs) {
          const std::size_t nv = vertex_count(s), nl = leaf_count(s);
          if (nv > left || leaves + nl > max_leaves) continue;
          if (s.is_leaf()) {
            v.children.push_back(s);
            fill(i + 1, left, leaves + nl);
            v.children.pop_back();
            continue;
          }
          for (int len = 0; len < static_cast<int>(h.size()); ++len) {
            if (len == h.zero) continue;
            s.length = len;
            v.children.push_back(s);
            fill(i + 1, left - nv, leaves + nl);
            v.children.pop_back();
          }
        }
      };
      fill(0, budget - 1, 0);
    }
  }
}

void number_leaves(WElement& t, int& next) {
  if (t.is_leaf()) {
    t.input = next++;
    return;
  }
  for (auto& c : t.children) number_leaves(c, next);
}

}  // namespace

WOperad w_operad(const Operad& p, const Segment& h, std::size_t arity_bound, std::size_t vertex_bound) {
  if (arity_bound < 1 || vertex_bound < 1) throw InvalidArgument("W bounds must be at least 1");
  Report seg = check_segment(h);
  if (!seg.ok()) throw InvalidArgument("not a segment: " + seg.violations.front());
  const ColourSet& colours = p.colours();
  const Collection& labels = p.collection();
  auto index = std::make_shared<TreeIndex>();
  std::map<Signature, std::set<std::string>> seen;
  for (std::size_t c = 0; c < colours.size(); ++c) {
    std::vector<WElement> all;
    normal_shapes(p, h, static_cast<ColourId>(c), vertex_bound, arity_bound, all);
    for (auto& shape : all) {
      int n = 0;
      number_leaves(shape, n);
      const Signature planar = input_signature(shape);
      const Signature d = sort_signature(planar).ordered;
      for (const auto& pi : Permutation::all(static_cast<std::size_t>(n))) {
        if (permute(planar.inputs, pi) != d.inputs) continue;
        WElement t = canonicalize(act_on_inputs(shape, pi), labels);
        if (seen[d].insert(key(t)).second) index->elements[d].push_back(std::move(t));
      }
    }
  }
  Collection coll(colours);
  for (auto& [sig, elems] : index->elements) {
    std::stable_sort(elems.begin(), elems.end(), [](const WElement& a, const WElement& b) {
      const std::size_t va = vertex_count(a), vb = vertex_count(b);
      return va != vb ? va < vb : key(a) < key(b);
    });
    auto& look = index->lookup[sig];
    Component comp;
    comp.sig = sig;
    std::map<std::string, int> name_uses;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      look[key(elems[i])] = static_cast<int>(i);
      std::string name = elems[i].is_leaf() ? "1_" + colours.name(sig.output) : display(elems[i], labels, &h.names);
      if (name_uses[name]++) name += "#" + std::to_string(name_uses[name] - 1);
      comp.names.push_back(std::move(name));
    }
    for (const auto& g : stabilizer(sig.inputs).elements) {
      std::vector<int> row;
      for (const auto& e : elems) row.push_back(look.at(key(canonicalize(act_on_inputs(e, g), labels))));
      comp.action.push_back(std::move(row));
    }
    coll.set(std::move(comp));
  }
  std::vector<int> units;
  for (std::size_t c = 0; c < colours.size(); ++c) {
    const auto id = static_cast<ColourId>(c);
    units.push_back(index->find({{id}, id}, WElement::leaf(id, 0)));
  }
  std::shared_ptr<const TreeIndex> idx = index;
  ComposeFn fn = [idx, p, h, vertex_bound](const Signature& outer, int x, std::span<const Signature> inner,
                                           std::span<const int> ys) {
    std::vector<WElement> parts;
    Signature glued{{}, outer.output};
    for (std::size_t i = 0; i < inner.size(); ++i) {
      parts.push_back(idx->tree(inner[i], ys[i]));
      glued.inputs.insert(glued.inputs.end(), inner[i].inputs.begin(), inner[i].inputs.end());
    }
    WElement t = w_normalize(substitute(idx->tree(outer, x), parts, h.one), p, h);
    if (vertex_count(t) > vertex_bound)
      throw TruncationOverflow("W composite has " + std::to_string(vertex_count(t)) + " vertices");
    auto sg = sort_signature(glued);
    const int id = idx->find(sg.ordered, canonicalize(act_on_inputs(t, sg.rho), p.collection()));
    if (id < 0) throw TruncationOverflow("W composite outside the truncation");
    return id;
  };
  Operad op("W(" + p.name() + ")", std::move(coll), std::move(units), std::move(fn), arity_bound);
  return {std::move(op), idx, h};
}

void validate(const CoherentString& s, const FiniteCategory& c, const Segment& h) {
  if (s.arrows.empty()) throw InvalidArgument("a string has at least one arrow");
  if (s.objects.size() != s.arrows.size() + 1 || s.waits.size() + 1 != s.arrows.size())
    throw InvalidArgument("string has mismatched objects, arrows and waits");
  const int n = static_cast<int>(c.objects.size());
  for (int o : s.objects)
    if (o < 0 || o >= n) throw InvalidArgument("string object outside the category");
  for (std::size_t i = 0; i < s.arrows.size(); ++i)
    if (s.arrows[i] < 0 || static_cast<std::size_t>(s.arrows[i]) >= c.size(s.objects[i], s.objects[i + 1]))
      throw InvalidArgument("arrow " + std::to_string(i) + " is not composable with its neighbours");
  for (int t : s.waits)
    if (t < 0 || static_cast<std::size_t>(t) >= h.size()) throw InvalidArgument("waiting time outside the segment");
}

CoherentString identity_string(const FiniteCategory& c, int object) {
  return {{object, object}, {c.identity.at(object)}, {}};
}

CoherentString arrow_string(int source, int target, int arrow) { return {{source, target}, {arrow}, {}}; }

CoherentString coherent_normalize(const CoherentString& s, const FiniteCategory& c, const Segment& h) {
  validate(s, c, h);
  CoherentString r = s;
  auto is_id = [&](std::size_t i) { return r.objects[i] == r.objects[i + 1] && r.arrows[i] == c.identity[r.objects[i]]; };
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < r.waits.size() && !changed; ++i) {
      if (r.waits[i] != h.zero) continue;
      r.arrows[i] = c.compose(r.objects[i], r.objects[i + 1], r.objects[i + 2], r.arrows[i], r.arrows[i + 1]);
      r.arrows.erase(r.arrows.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      r.objects.erase(r.objects.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      r.waits.erase(r.waits.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
    }
    const std::size_t n = r.arrows.size();
    for (std::size_t i = 0; i < n && n > 1 && !changed; ++i) {
      if (!is_id(i)) continue;
      const auto at = static_cast<std::ptrdiff_t>(i);
      if (i == 0) {
        r.waits.erase(r.waits.begin());
      } else if (i + 1 == n) {
        r.waits.pop_back();
      } else {
        r.waits[i - 1] = h(r.waits[i - 1], r.waits[i]);
        r.waits.erase(r.waits.begin() + at);
      }
      r.arrows.erase(r.arrows.begin() + at);
      r.objects.erase(r.objects.begin() + at + 1);
      changed = true;
    }
    if (!changed) return r;
  }
}

CoherentString coherent_compose(const CoherentString& s1, const CoherentString& s2, const FiniteCategory& c,
                                const Segment& h) {
  validate(s1, c, h);
  validate(s2, c, h);
  if (s1.objects.back() != s2.objects.front())
    throw ColourMismatch("strings are not composable: " + c.objects[s1.objects.back()] + " vs " + c.objects[s2.objects.front()]);
  CoherentString r = s1;
  r.objects.insert(r.objects.end(), s2.objects.begin() + 1, s2.objects.end());
  r.arrows.insert(r.arrows.end(), s2.arrows.begin(), s2.arrows.end());
  r.waits.push_back(h.one);
  r.waits.insert(r.waits.end(), s2.waits.begin(), s2.waits.end());
  return coherent_normalize(r, c, h);
}

std::string to_string(const CoherentString& s, const FiniteCategory& c, const Segment& h) {
  std::string out;
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    if (i) out += " <" + h.names.at(s.waits[i - 1]) + "> ";
    out += c.hom.at({s.objects[i], s.objects[i + 1]}).at(s.arrows[i]);
  }
  return out;
}

WElement coherent_tree(const CoherentString& s, const FiniteCategory& c) {
  WElement t = WElement::leaf(s.objects.at(0), 0);
  if (s.arrows.size() == 1 && s.objects[0] == s.objects[1] && s.arrows[0] == c.identity.at(s.objects[0])) return t;
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    if (i) t.length = s.waits[i - 1];
    t = WElement{s.objects[i + 1], -1, s.arrows[i], -1, {std::move(t)}};
  }
  return t;
}

}  // namespace forge
