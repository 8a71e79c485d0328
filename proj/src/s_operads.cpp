#include <algorithm>
#include <functional>
#include <set>

#include "forge/trees.hpp"
#include "forge/zoo.hpp"

namespace forge {

std::string s_key(const STree& t) {
  if (t.is_leaf()) return std::to_string(t.input + 1);
  std::string s = "v" + std::to_string(t.vertex + 1);
  if (t.children.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ",";
    s += s_key(t.children[i]);
  }
  return s + ")";
}

namespace {

void collect(const STree& t, std::vector<int>& val, std::size_t& leaves) {
  if (t.is_leaf()) {
    ++leaves;
    return;
  }
  if (static_cast<std::size_t>(t.vertex) >= val.size()) val.resize(t.vertex + 1, -1);
  val[t.vertex] = static_cast<int>(t.children.size());
  for (const auto& c : t.children) collect(c, val, leaves);
}

// Vertex j gets number new_number[j].
STree relabel(const STree& t, const std::vector<int>& new_number) {
  STree out = t;
  std::function<void(STree&)> go = [&](STree& s) {
    if (!s.is_leaf()) s.vertex = new_number.at(s.vertex);
    for (auto& c : s.children) go(c);
  };
  go(out);
  return out;
}

// x . g moves the vertex numbered g(i) to number i.
STree act_on_vertices(const STree& t, const Permutation& g) { return relabel(t, g.inverse().image()); }

}  // namespace

std::vector<int> valences(const STree& t) {
  std::vector<int> val;
  std::size_t leaves = 0;
  collect(t, val, leaves);
  return val;
}

std::size_t s_leaf_count(const STree& t) {
  std::vector<int> val;
  std::size_t leaves = 0;
  collect(t, val, leaves);
  return leaves;
}

int SOperad::find(const Signature& sig, const STree& t) const {
  auto it = lookup->find(sig);
  if (it == lookup->end()) return -1;
  auto jt = it->second.find(s_key(t));
  return jt == it->second.end() ? -1 : jt->second;
}

STree s_substitute(const STree& outer, const std::vector<STree>& parts) {
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + static_cast<int>(valences(parts[i]).size());
  std::function<STree(const STree&)> build = [&](const STree& node) -> STree {
    if (node.is_leaf()) return node;
    const std::size_t i = node.vertex;
    if (i >= parts.size()) throw ArityMismatch("substitution is missing a tree for a vertex");
    if (s_leaf_count(parts[i]) != node.children.size())
      throw ColourMismatch("substituted tree has the wrong number of inputs");
    std::function<STree(const STree&)> graft = [&](const STree& part) -> STree {
      if (part.is_leaf()) return build(node.children.at(part.input));
      STree v{part.vertex + offset[i], -1, {}};
      for (const auto& c : part.children) v.children.push_back(graft(c));
      return v;
    };
    return graft(parts[i]);
  };
  return build(outer);
}

namespace {

using Mask = unsigned;

// Planar trees whose vertices are exactly those in `mask`, leaves unnumbered.
class ShapeTable {
 public:
  explicit ShapeTable(std::vector<int> val) : val_(std::move(val)) {}

  const std::vector<STree>& trees(Mask mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<STree> out;
    if (mask == 0) out.push_back(STree{});
    for (std::size_t j = 0; j < val_.size(); ++j) {
      if (!(mask >> j & 1u)) continue;
      for (auto& kids : forests(mask & ~(1u << j), val_[j])) out.push_back(STree{static_cast<int>(j), -1, std::move(kids)});
    }
    return memo_[mask] = std::move(out);
  }

 private:
  std::vector<std::vector<STree>> forests(Mask mask, int count) {
    std::vector<std::vector<STree>> out;
    if (count == 0) {
      if (mask == 0) out.emplace_back();
      return out;
    }
    // Every submask for the first tree, including the empty one (a leaf).
    for (Mask sub = mask;; sub = (sub - 1) & mask) {
      const auto firsts = trees(sub);
      auto rests = forests(mask & ~sub, count - 1);
      for (const auto& f : firsts)
        for (const auto& r : rests) {
          std::vector<STree> v{f};
          v.insert(v.end(), r.begin(), r.end());
          out.push_back(std::move(v));
        }
      if (sub == 0) break;
    }
    return out;
  }

  std::vector<int> val_;
  std::map<Mask, std::vector<STree>> memo_;
};

void leaves_in_order(STree& t, std::vector<STree*>& out) {
  if (t.is_leaf()) {
    out.push_back(&t);
    return;
  }
  for (auto& c : t.children) leaves_in_order(c, out);
}

std::string display(const STree& t) { return t.is_leaf() ? "|" : s_key(t); }

}  // namespace

SOperad make_s_family(SVariant variant, int max_colour, std::size_t max_vertices) {
  if (max_colour < variant.min_valence) throw InvalidArgument("colour bound below the least valence");
  if (max_vertices > 8) throw InvalidArgument("at most 8 vertices are supported");
  const int offset = variant.min_valence;
  std::vector<std::string> names;
  for (int v = offset; v <= max_colour; ++v) names.push_back(std::to_string(v));
  ColourSet colours(names);

  auto elements = std::make_shared<std::map<Signature, std::vector<STree>>>();
  auto lookup = std::make_shared<std::map<Signature, std::map<std::string, int>>>();
  for (const auto& sig : ordered_signatures(colours, max_vertices)) {
    std::vector<int> val;
    int leaves = 1;
    for (ColourId c : sig.inputs) {
      val.push_back(c + offset);
      leaves += c + offset - 1;
    }
    if (leaves != sig.output + offset) continue;
    ShapeTable table(val);
    std::vector<STree> found;
    for (const auto& shape : table.trees((1u << val.size()) - 1)) {
      if (variant.planar_inputs) {
        STree t = shape;
        std::vector<STree*> ls;
        leaves_in_order(t, ls);
        for (std::size_t l = 0; l < ls.size(); ++l) ls[l]->input = static_cast<int>(l);
        found.push_back(std::move(t));
        continue;
      }
      for (const auto& pi : Permutation::all(leaves)) {
        STree t = shape;
        std::vector<STree*> ls;
        leaves_in_order(t, ls);
        for (std::size_t l = 0; l < ls.size(); ++l) ls[l]->input = pi(l);
        found.push_back(std::move(t));
      }
    }
    if (found.empty()) continue;
    std::sort(found.begin(), found.end(), [](const STree& a, const STree& b) { return s_key(a) < s_key(b); });
    auto& look = (*lookup)[sig];
    for (std::size_t i = 0; i < found.size(); ++i) look[s_key(found[i])] = static_cast<int>(i);
    (*elements)[sig] = std::move(found);
  }

  Collection coll(colours);
  for (const auto& [sig, trees] : *elements) {
    Component comp;
    comp.sig = sig;
    for (const auto& t : trees) comp.names.push_back(display(t));
    const auto& look = lookup->at(sig);
    for (const auto& g : stabilizer(sig.inputs).elements) {
      std::vector<int> row;
      for (const auto& t : trees) row.push_back(look.at(s_key(act_on_vertices(t, g))));
      comp.action.push_back(std::move(row));
    }
    coll.set(std::move(comp));
  }
  std::vector<int> units;
  for (std::size_t c = 0; c < colours.size(); ++c) {
    const int v = static_cast<int>(c) + offset;
    STree corolla{0, -1, {}};
    for (int l = 0; l < v; ++l) corolla.children.push_back(STree{-1, l, {}});
    units.push_back(lookup->at({{static_cast<ColourId>(c)}, static_cast<ColourId>(c)}).at(s_key(corolla)));
  }

  std::shared_ptr<const std::map<Signature, std::vector<STree>>> elems = elements;
  std::shared_ptr<const std::map<Signature, std::map<std::string, int>>> looks = lookup;
  ComposeFn fn = [elems, looks, max_vertices](const Signature& outer, int x, std::span<const Signature> inner,
                                              std::span<const int> ys) {
    std::vector<STree> parts;
    Signature glued{{}, outer.output};
    for (std::size_t i = 0; i < inner.size(); ++i) {
      parts.push_back(elems->at(inner[i]).at(ys[i]));
      glued.inputs.insert(glued.inputs.end(), inner[i].inputs.begin(), inner[i].inputs.end());
    }
    if (glued.arity() > max_vertices)
      throw TruncationOverflow("composite has " + std::to_string(glued.arity()) + " vertices");
    STree t = s_substitute(elems->at(outer).at(x), parts);
    auto sg = sort_signature(glued);
    return looks->at(sg.ordered).at(s_key(act_on_vertices(t, sg.rho)));
  };
  std::string name = variant.planar_inputs ? "S0" : offset > 0 ? "S+" : "S";
  SOperad s;
  s.operad = Operad(name, std::move(coll), std::move(units), std::move(fn), max_vertices);
  s.variant = variant;
  s.colour_offset = offset;
  s.elements = elems;
  s.lookup = looks;
  return s;
}

SOperad make_s(int max_colour, std::size_t max_vertices) { return make_s_family({0, false}, max_colour, max_vertices); }
SOperad make_s_plus(int max_colour, std::size_t max_vertices) {
  return make_s_family({1, false}, max_colour, max_vertices);
}
SOperad make_s0(int max_colour, std::size_t max_vertices) { return make_s_family({0, true}, max_colour, max_vertices); }

namespace {

Tree as_plain_tree(const STree& t) {
  if (t.is_leaf()) return Tree::edge(0);
  Tree out{0, false, {}};
  for (const auto& c : t.children) out.children.push_back(as_plain_tree(c));
  return out;
}

void vertices_in_preorder(const STree& t, std::vector<int>& out) {
  if (t.is_leaf()) return;
  out.push_back(t.vertex);
  for (const auto& c : t.children) vertices_in_preorder(c, out);
}

void inputs_in_order(const STree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.input);
    return;
  }
  for (const auto& c : t.children) inputs_in_order(c, out);
}

// The same tree and inputs with vertices numbered by the induced order.
STree with_induced_order(const STree& t) {
  if (t.is_leaf()) return t;
  std::vector<int> pre, planar;
  vertices_in_preorder(t, pre);
  inputs_in_order(t, planar);
  InputNumbering tau(planar.size());
  for (std::size_t l = 0; l < planar.size(); ++l) tau[planar[l]] = static_cast<int>(l);
  auto order = vertex_order(as_plain_tree(t), tau);
  std::vector<int> number(pre.size());
  for (std::size_t r = 0; r < order.size(); ++r) number[pre[order[r]]] = static_cast<int>(r);
  return relabel(t, number);
}

}  // namespace

Report check_planar_order_compatibility(const SOperad& s, std::size_t max_arity) {
  if (s.variant.min_valence < 1 || s.variant.planar_inputs)
    throw InvalidArgument("the induced vertex order is defined on the operad without 0-term");
  Report rep;
  // Candidates by valence sequence in their own vertex order.
  std::map<std::vector<int>, std::vector<STree>> by_valence;
  std::set<std::string> seen;
  for (const auto& [sig, trees] : *s.elements)
    for (const auto& t : trees) {
      STree c = with_induced_order(t);
      if (seen.insert(s_key(c)).second) by_valence[valences(c)].push_back(std::move(c));
    }
  std::map<std::size_t, std::vector<const STree*>> by_leaves;
  for (const auto& [val, trees] : by_valence)
    for (const auto& t : trees) by_leaves[s_leaf_count(t)].push_back(&t);

  for (const auto& [val, outers] : by_valence)
    for (const auto& x : outers) {
      const std::size_t k = val.size();
      std::vector<const STree*> parts(k);
      std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t used) {
        if (i == k) {
          std::vector<STree> ps;
          for (auto* p : parts) ps.push_back(*p);
          STree t = s_substitute(x, ps);
          ++rep.checked;
          if (!(with_induced_order(t) == t)) {
            std::string what = s_key(x) + " o (";
            for (std::size_t j = 0; j < k; ++j) what += (j ? ", " : "") + display(ps[j]);
            rep.fail(what + ") = " + s_key(t) + " but the induced order gives " + s_key(with_induced_order(t)));
          }
          return;
        }
        auto it = by_leaves.find(static_cast<std::size_t>(val[i]));
        if (it == by_leaves.end()) return;
        for (auto* p : it->second) {
          std::size_t nv = valences(*p).size();
          if (used + nv > max_arity) continue;
          parts[i] = p;
          fill(i + 1, used + nv);
        }
      };
      if (k <= max_arity) fill(0, 0);
    }
  return rep;
}

Element s_evaluate(const Operad& p, const STree& t, const std::vector<Element>& ops) {
  if (p.colours().size() != 1) throw ColourMismatch("operations must come from an uncoloured operad");
  std::function<Element(const STree&)> eval = [&](const STree& node) -> Element {
    if (node.is_leaf()) return p.unit(0);
    const Element& op = ops.at(node.vertex);
    if (op.sig.arity() != node.children.size()) throw ArityMismatch("operation arity differs from vertex valence");
    std::vector<Element> qs;
    for (const auto& c : node.children) qs.push_back(eval(c));
    return p.compose(op, qs);
  };
  Element f = eval(t);
  std::vector<int> planar;
  inputs_in_order(t, planar);
  std::vector<int> tau(planar.size());
  for (std::size_t l = 0; l < planar.size(); ++l) tau[planar[l]] = static_cast<int>(l);
  return p.act(f, Permutation(tau));
}

}  // namespace forge
