#include "forge/trees.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace forge {

std::vector<ColourId> Tree::input_colours() const {
  std::vector<ColourId> out;
  out.reserve(children.size());
  for (const auto& c : children) out.push_back(c.colour);
  return out;
}

Signature Tree::root_signature() const {
  if (is_edge) throw InvalidArgument("bare edge has no root vertex");
  return {input_colours(), colour};
}

Tree corolla(const Signature& sig) {
  if (!sig.is_ordered()) throw ColourMismatch("corolla needs an ordered signature");
  Tree t{sig.output, false, {}};
  for (ColourId c : sig.inputs) t.children.push_back(Tree::edge(c));
  return t;
}

Tree graft(const Signature& root_sig, std::vector<Tree> subtrees) {
  if (!root_sig.is_ordered()) throw ColourMismatch("graft needs an ordered root signature");
  if (subtrees.size() != root_sig.arity())
    throw ArityMismatch("graft: " + std::to_string(subtrees.size()) + " subtrees for arity " +
                        std::to_string(root_sig.arity()));
  for (std::size_t i = 0; i < subtrees.size(); ++i)
    if (subtrees[i].colour != root_sig.inputs[i])
      throw ColourMismatch("graft: subtree " + std::to_string(i) + " has the wrong output colour");
  return Tree{root_sig.output, false, std::move(subtrees)};
}

std::size_t vertex_count(const Tree& t) {
  if (t.is_edge) return 0;
  std::size_t n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

std::size_t leaf_count(const Tree& t) {
  if (t.is_edge) return 1;
  std::size_t n = 0;
  for (const auto& c : t.children) n += leaf_count(c);
  return n;
}

std::vector<ColourId> leaf_colours(const Tree& t) {
  std::vector<ColourId> out;
  std::function<void(const Tree&)> walk = [&](const Tree& n) {
    if (n.is_edge) {
      out.push_back(n.colour);
      return;
    }
    for (const auto& c : n.children) walk(c);
  };
  walk(t);
  return out;
}

void validate(const Tree& t, const ColourSet& colours) {
  if (t.colour < 0 || static_cast<std::size_t>(t.colour) >= colours.size())
    throw ColourMismatch("tree colour out of range");
  if (t.is_edge) {
    if (!t.children.empty()) throw InvalidArgument("bare edge with children");
    return;
  }
  auto in = t.input_colours();
  if (!std::is_sorted(in.begin(), in.end()))
    throw ColourMismatch("vertex input colours are not in colour order");
  for (const auto& c : t.children) validate(c, colours);
}

std::string tree_key(const Tree& t) {
  if (t.is_edge) return "|" + std::to_string(t.colour);
  std::string s = "(" + std::to_string(t.colour) + ":";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ",";
    s += tree_key(t.children[i]);
  }
  return s + ")";
}

std::string to_string(const Tree& t, const ColourSet& colours) {
  if (t.is_edge) return "|" + colours.name(t.colour);
  std::string s = "(" + colours.name(t.colour) + ":";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ",";
    s += to_string(t.children[i], colours);
  }
  return s + ")";
}

FlatTree flatten(const Tree& t) {
  FlatTree ft;
  if (t.is_edge) {
    ft.leaves.push_back({-1, -1, t.colour});
    return ft;
  }
  std::function<int(const Tree&, int, int)> walk = [&](const Tree& n, int parent, int slot) -> int {
    int id = static_cast<int>(ft.vertices.size());
    ft.vertices.push_back({});
    {
      auto& v = ft.vertices.back();
      v.parent = parent;
      v.parent_slot = slot;
      v.output = n.colour;
      v.inputs = n.input_colours();
      v.child_vertex.assign(n.children.size(), -1);
      v.child_leaf.assign(n.children.size(), -1);
    }
    for (std::size_t j = 0; j < n.children.size(); ++j) {
      const Tree& c = n.children[j];
      if (c.is_edge) {
        ft.vertices[id].child_leaf[j] = static_cast<int>(ft.leaves.size());
        ft.leaves.push_back({id, static_cast<int>(j), c.colour});
      } else {
        int cid = walk(c, id, static_cast<int>(j));
        ft.vertices[id].child_vertex[j] = cid;
      }
    }
    return id;
  };
  walk(t, -1, -1);
  return ft;
}

namespace {

std::vector<TreeIso> isos_impl(const Tree& a, const Tree& b) {
  if (a.colour != b.colour || a.is_edge != b.is_edge) return {};
  if (a.is_edge) return {TreeIso{{}, {0}, {}}};
  const std::size_t m = a.children.size();
  if (m != b.children.size() || a.input_colours() != b.input_colours()) return {};

  std::vector<std::vector<std::vector<TreeIso>>> sub(m, std::vector<std::vector<TreeIso>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) sub[i][j] = isos_impl(a.children[i], b.children[j]);

  auto offsets = [](const Tree& t) {
    std::vector<int> v(t.children.size() + 1, 1), l(t.children.size() + 1, 0);
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      v[i + 1] = v[i] + static_cast<int>(vertex_count(t.children[i]));
      l[i + 1] = l[i] + static_cast<int>(leaf_count(t.children[i]));
    }
    return std::pair{v, l};
  };
  auto [va, la] = offsets(a);
  auto [vb, lb] = offsets(b);
  const int nv = va[m];
  const int nl = la[m];

  std::vector<TreeIso> out;
  std::vector<int> pi(m, -1);
  std::vector<bool> used(m, false);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == m) {
      // Cartesian product of the child isomorphism lists.
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        TreeIso iso;
        iso.vertex_map.assign(nv, -1);
        iso.leaf_map.assign(nl, -1);
        iso.slot_map.assign(nv, {});
        iso.vertex_map[0] = 0;
        iso.slot_map[0] = pi;
        for (std::size_t k = 0; k < m; ++k) {
          const TreeIso& s = sub[k][pi[k]][pick[k]];
          for (std::size_t x = 0; x < s.vertex_map.size(); ++x) {
            iso.vertex_map[va[k] + x] = vb[pi[k]] + s.vertex_map[x];
            iso.slot_map[va[k] + x] = s.slot_map[x];
          }
          for (std::size_t x = 0; x < s.leaf_map.size(); ++x) iso.leaf_map[la[k] + x] = lb[pi[k]] + s.leaf_map[x];
        }
        out.push_back(std::move(iso));
        std::size_t k = 0;
        while (k < m) {
          if (++pick[k] < sub[k][pi[k]].size()) break;
          pick[k] = 0;
          ++k;
        }
        if (k == m) return;
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || sub[i][j].empty()) continue;
      used[j] = true;
      pi[i] = static_cast<int>(j);
      assign(i + 1);
      used[j] = false;
    }
  };
  assign(0);
  return out;
}

}  // namespace

std::vector<TreeIso> find_isos(const Tree& a, const Tree& b) { return isos_impl(a, b); }

TreeIso identity_iso(const Tree& t) {
  FlatTree ft = flatten(t);
  TreeIso iso;
  iso.vertex_map.resize(ft.vertices.size());
  std::iota(iso.vertex_map.begin(), iso.vertex_map.end(), 0);
  iso.leaf_map.resize(ft.leaves.size());
  std::iota(iso.leaf_map.begin(), iso.leaf_map.end(), 0);
  for (const auto& v : ft.vertices) {
    std::vector<int> s(v.inputs.size());
    std::iota(s.begin(), s.end(), 0);
    iso.slot_map.push_back(std::move(s));
  }
  return iso;
}

TreeIso compose(const TreeIso& outer, const TreeIso& inner) {
  TreeIso r;
  r.vertex_map.resize(inner.vertex_map.size());
  r.slot_map.resize(inner.vertex_map.size());
  for (std::size_t v = 0; v < inner.vertex_map.size(); ++v) {
    int mid = inner.vertex_map[v];
    r.vertex_map[v] = outer.vertex_map[mid];
    for (int s : inner.slot_map[v]) r.slot_map[v].push_back(outer.slot_map[mid][s]);
  }
  r.leaf_map.resize(inner.leaf_map.size());
  for (std::size_t l = 0; l < inner.leaf_map.size(); ++l) r.leaf_map[l] = outer.leaf_map[inner.leaf_map[l]];
  return r;
}

TreeIso inverse(const TreeIso& iso) {
  TreeIso r;
  r.vertex_map.resize(iso.vertex_map.size());
  r.slot_map.resize(iso.vertex_map.size());
  for (std::size_t v = 0; v < iso.vertex_map.size(); ++v) {
    int w = iso.vertex_map[v];
    r.vertex_map[w] = static_cast<int>(v);
    r.slot_map[w].assign(iso.slot_map[v].size(), 0);
    for (std::size_t j = 0; j < iso.slot_map[v].size(); ++j) r.slot_map[w][iso.slot_map[v][j]] = static_cast<int>(j);
  }
  r.leaf_map.resize(iso.leaf_map.size());
  for (std::size_t l = 0; l < iso.leaf_map.size(); ++l) r.leaf_map[iso.leaf_map[l]] = static_cast<int>(l);
  return r;
}

Tree canonical_form(const Tree& t) {
  if (t.is_edge) return t;
  Tree out{t.colour, false, {}};
  std::vector<std::pair<std::string, Tree>> kids;
  for (const auto& c : t.children) {
    Tree cc = canonical_form(c);
    kids.emplace_back(tree_key(cc), std::move(cc));
  }
  std::stable_sort(kids.begin(), kids.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second.colour, x.first) < std::tie(y.second.colour, y.first);
  });
  for (auto& k : kids) out.children.push_back(std::move(k.second));
  return out;
}

namespace {

struct Shape {
  Tree tree;
  std::string key;
  std::size_t leaves;
  std::size_t vertices;
};

class TreeEnumerator {
 public:
  explicit TreeEnumerator(std::size_t n_colours) : n_colours_(n_colours) {}

  // Canonical trees with exactly `leaves` leaves, output colour c and at most
  // `vmax` vertices, sorted by key.
  const std::vector<Shape>& trees(ColourId c, std::size_t leaves, std::size_t vmax) {
    auto k = std::tuple{c, leaves, vmax};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    std::map<std::string, Shape> found;
    if (leaves == 1) {
      Tree e = Tree::edge(c);
      found.emplace(tree_key(e), Shape{e, tree_key(e), 1, 0});
    }
    if (vmax >= 1) {
      // Candidate children: every canonical tree with <= leaves leaves and
      // <= vmax - 1 vertices, ordered by (colour, key).
      std::vector<const Shape*> cand;
      for (std::size_t col = 0; col < n_colours_; ++col)
        for (std::size_t l = 0; l <= leaves; ++l) {
          const auto& sub = trees(static_cast<ColourId>(col), l, vmax - 1);
          for (const auto& s : sub) cand.push_back(&s);
        }
      std::stable_sort(cand.begin(), cand.end(), [](const Shape* x, const Shape* y) {
        return std::tie(x->tree.colour, x->key) < std::tie(y->tree.colour, y->key);
      });
      std::vector<const Shape*> chosen;
      std::function<void(std::size_t, std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t l_left,
                                                                           std::size_t v_left) {
        if (l_left == 0) {
          Tree t{c, false, {}};
          for (const Shape* s : chosen) t.children.push_back(s->tree);
          std::string key = tree_key(t);
          std::size_t nv = 1;
          for (const Shape* s : chosen) nv += s->vertices;
          found.emplace(key, Shape{t, key, leaves, nv});
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
          const Shape* s = cand[i];
          if (s->leaves > l_left || s->vertices > v_left) continue;
          chosen.push_back(s);
          pick(i, l_left - s->leaves, v_left - s->vertices);
          chosen.pop_back();
        }
      };
      pick(0, leaves, vmax - 1);
    }
    std::vector<Shape> out;
    for (auto& [key, s] : found) out.push_back(std::move(s));
    return memo_.emplace(k, std::move(out)).first->second;
  }

 private:
  std::size_t n_colours_;
  std::map<std::tuple<ColourId, std::size_t, std::size_t>, std::vector<Shape>> memo_;
};

}  // namespace

std::vector<Tree> enumerate_trees(const ColourSet& colours, std::size_t n_inputs, ColourId output,
                                  std::size_t max_vertices) {
  if (colours.size() == 0) return {};
  if (output < 0 || static_cast<std::size_t>(output) >= colours.size())
    throw ColourMismatch("enumerate_trees: output colour out of range");
  TreeEnumerator e(colours.size());
  std::vector<Tree> out;
  for (const auto& s : e.trees(output, n_inputs, max_vertices)) out.push_back(s.tree);
  return out;
}

InputNumbering planar_numbering(const Tree& t) {
  InputNumbering tau(leaf_count(t));
  std::iota(tau.begin(), tau.end(), 0);
  return tau;
}

InputNumbering lambda_action(const TreeIso& iso, const InputNumbering& tau) {
  InputNumbering out(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) out[i] = iso.leaf_map.at(tau[i]);
  return out;
}

std::vector<int> vertex_order(const Tree& t, const InputNumbering& tau) {
  if (t.is_edge) throw InvalidArgument("vertex_order: tree has no vertices");
  FlatTree ft = flatten(t);
  if (tau.size() != ft.leaves.size()) throw ArityMismatch("vertex_order: numbering size mismatch");
  std::vector<int> rank(ft.leaves.size());
  for (std::size_t i = 0; i < tau.size(); ++i) rank[tau[i]] = static_cast<int>(i);

  std::vector<int> first(ft.vertices.size(), INT_MAX);
  for (int v = static_cast<int>(ft.vertices.size()) - 1; v >= 0; --v) {
    const auto& vx = ft.vertices[v];
    for (std::size_t j = 0; j < vx.inputs.size(); ++j) {
      int r = vx.child_leaf[j] >= 0 ? rank[vx.child_leaf[j]] : first[vx.child_vertex[j]];
      first[v] = std::min(first[v], r);
    }
  }
  std::vector<int> order;
  std::function<void(int)> walk = [&](int v) {
    order.push_back(v);
    std::vector<std::pair<int, int>> kids;  // (first leaf rank, slot)
    const auto& vx = ft.vertices[v];
    for (std::size_t j = 0; j < vx.inputs.size(); ++j)
      if (vx.child_vertex[j] >= 0) kids.emplace_back(first[vx.child_vertex[j]], static_cast<int>(j));
    std::sort(kids.begin(), kids.end());
    for (auto [r, j] : kids) walk(vx.child_vertex[j]);
  };
  walk(0);
  return order;
}

}  // namespace forge
