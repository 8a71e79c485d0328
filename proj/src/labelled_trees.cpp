#include "forge/labelled_trees.hpp"

#include <algorithm>

namespace forge {

Signature LTree::signature() const {
  Signature s{{}, colour};
  for (const auto& c : children) s.inputs.push_back(c.colour);
  return s;
}

std::size_t vertex_count(const LTree& t) {
  if (t.is_leaf()) return 0;
  std::size_t n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

std::size_t leaf_count(const LTree& t) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : t.children) n += leaf_count(c);
  return n;
}

namespace {

void collect_leaves(const LTree& t, std::vector<ColourId>& colours) {
  if (t.is_leaf()) {
    if (static_cast<std::size_t>(t.input) >= colours.size()) colours.resize(t.input + 1, -1);
    colours[t.input] = t.colour;
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, colours);
}

void shift_inputs(LTree& t, int offset) {
  if (t.is_leaf()) {
    t.input += offset;
    return;
  }
  for (auto& c : t.children) shift_inputs(c, offset);
}

}  // namespace

Signature input_signature(const LTree& t) {
  Signature s{{}, t.colour};
  collect_leaves(t, s.inputs);
  if (std::find(s.inputs.begin(), s.inputs.end(), -1) != s.inputs.end())
    throw InvalidArgument("labelled tree has a gap in its input numbering");
  return s;
}

std::string key(const LTree& t) {
  std::string s;
  if (t.is_leaf()) {
    s = "i" + std::to_string(t.input) + "c" + std::to_string(t.colour);
    return s;
  }
  s = "(" + std::to_string(t.colour) + ":" + std::to_string(t.label) + ":" + std::to_string(t.length);
  for (const auto& c : t.children) s += " " + key(c);
  return s + ")";
}

std::string display(const LTree& t, const Collection& labels, const std::vector<std::string>* length_names) {
  if (t.is_leaf()) return std::to_string(t.input + 1);
  const Component* comp = labels.find(t.signature());
  std::string s = comp ? comp->names.at(t.label) : "?" + std::to_string(t.label);
  s += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    const LTree& c = t.children[i];
    s += (i ? "," : "") + display(c, labels, length_names);
    if (!c.is_leaf() && c.length >= 0)
      s += "^" + (length_names ? length_names->at(c.length) : std::to_string(c.length));
  }
  return s + ")";
}

LTree canonicalize(const LTree& t, const Collection& labels) {
  if (t.is_leaf()) return t;
  std::vector<LTree> kids;
  std::vector<std::string> keys;
  for (const auto& c : t.children) {
    kids.push_back(canonicalize(c, labels));
    keys.push_back(key(kids.back()));
  }
  const Signature sig = t.signature();
  const Component* comp = labels.find(sig);
  if (!comp) throw InvalidArgument("vertex label outside the collection");
  // Among all re-orderings of equal-coloured slots pick the one with the
  // least (children keys, label).
  const Permutation* best = nullptr;
  std::vector<std::string> best_keys;
  int best_label = 0;
  for (const auto& g : comp->group().elements) {
    auto moved = permute(keys, g);
    int lab = comp->act(t.label, g);
    if (!best || moved < best_keys || (moved == best_keys && lab < best_label)) {
      best = &g;
      best_keys = std::move(moved);
      best_label = lab;
    }
  }
  LTree out{t.colour, -1, best_label, t.length, permute(kids, *best)};
  return out;
}

void renumber(LTree& t, const std::vector<int>& perm_new) {
  if (t.is_leaf()) {
    t.input = perm_new.at(t.input);
    return;
  }
  for (auto& c : t.children) renumber(c, perm_new);
}

LTree act_on_inputs(const LTree& t, const Permutation& sigma) {
  // Input i of the result is input sigma(i) of t.
  std::vector<int> to_new = sigma.inverse().image();
  LTree out = t;
  renumber(out, to_new);
  return out;
}

namespace {

LTree graft_into(const LTree& t, const std::vector<LTree>& parts, const std::vector<int>& offset, int graft_length,
                 bool at_root) {
  if (t.is_leaf()) {
    LTree p = parts.at(t.input);
    if (p.colour != t.colour) throw ColourMismatch("grafting a tree onto a leaf of another colour");
    shift_inputs(p, offset[t.input]);
    if (!p.is_leaf()) p.length = at_root ? t.length : graft_length;
    return p;
  }
  LTree out{t.colour, -1, t.label, t.length, {}};
  for (const auto& c : t.children) out.children.push_back(graft_into(c, parts, offset, graft_length, false));
  return out;
}

}  // namespace

LTree substitute(const LTree& outer, const std::vector<LTree>& parts, int graft_length) {
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + static_cast<int>(leaf_count(parts[i]));
  if (leaf_count(outer) != parts.size()) throw ArityMismatch("substitution needs one tree per input");
  return graft_into(outer, parts, offset, graft_length, true);
}

}  // namespace forge
