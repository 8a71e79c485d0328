#include "forge/collections.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace forge {

int StabilizerGroup::index_of(const Permutation& p) const {
  auto it = index.find(p.code());
  if (it == index.end()) throw InvalidArgument("permutation " + to_string(p) + " is not in the stabilizer");
  return it->second;
}

const StabilizerGroup& stabilizer(const std::vector<ColourId>& ordered_inputs) {
  static std::mutex mutex;
  static std::map<std::vector<ColourId>, StabilizerGroup> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(ordered_inputs);
  if (it != cache.end()) return it->second;
  StabilizerGroup g;
  g.elements = stabilizer_subgroup({ordered_inputs, 0});
  for (std::size_t i = 0; i < g.elements.size(); ++i) g.index.emplace(g.elements[i].code(), static_cast<int>(i));
  return cache.emplace(ordered_inputs, std::move(g)).first->second;
}

int Component::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InvalidArgument("no element '" + name + "'");
  return static_cast<int>(it - names.begin());
}

void Component::validate() const {
  if (!sig.is_ordered()) throw ColourMismatch("component at an unordered signature");
  const auto& g = group();
  if (action.size() != g.elements.size()) throw InvalidArgument("action table has the wrong number of rows");
  for (const auto& row : action) {
    if (row.size() != size()) throw InvalidArgument("action row has the wrong length");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= size()) throw InvalidArgument("action value out of range");
  }
  for (std::size_t x = 0; x < size(); ++x) {
    if (action[0][x] != static_cast<int>(x)) throw InvalidArgument("identity does not act trivially");
    for (std::size_t a = 0; a < g.elements.size(); ++a)
      for (std::size_t b = 0; b < g.elements.size(); ++b) {
        int ab = g.index_of(g.elements[a] * g.elements[b]);
        if (action[b][action[a][x]] != action[ab][x]) throw InvalidArgument("action is not a right action");
      }
  }
}

Component trivial_component(const Signature& sig, std::vector<std::string> names) {
  Component c;
  c.sig = sig;
  c.names = std::move(names);
  std::vector<int> id(c.names.size());
  std::iota(id.begin(), id.end(), 0);
  c.action.assign(stabilizer(sig.inputs).elements.size(), id);
  return c;
}

Component& Collection::set(const Signature& sig, std::vector<std::string> names) {
  return set(trivial_component(sig, std::move(names)));
}

Component& Collection::set(Component comp) {
  validate(comp.sig, colours_);
  if (!comp.sig.is_ordered()) throw ColourMismatch("components live at ordered signatures");
  comp.group_cache = nullptr;
  Signature key = comp.sig;
  auto& slot = components_[key];
  slot = std::move(comp);
  return slot;
}

const Component* Collection::find(const Signature& sig) const {
  auto it = components_.find(sig);
  return it == components_.end() ? nullptr : &it->second;
}

Component* Collection::find_mutable(const Signature& sig) {
  auto it = components_.find(sig);
  return it == components_.end() ? nullptr : &it->second;
}

std::size_t Collection::size(const Signature& sig) const {
  const Component* c = find(sig);
  return c ? c->size() : 0;
}

std::size_t Collection::max_arity() const {
  std::size_t m = 0;
  for (const auto& [sig, c] : components_)
    if (c.size()) m = std::max(m, sig.arity());
  return m;
}

std::size_t Collection::total_size() const {
  std::size_t n = 0;
  for (const auto& [sig, c] : components_) n += c.size();
  return n;
}

const Component* component_at(const Collection& x, const Signature& sig) {
  return x.find(sort_signature(sig).ordered);
}

Permutation stored_transport(const Signature& sig, const Permutation& sigma) {
  auto from = sort_signature(sig);
  auto to = sort_signature(sig.permuted(sigma));
  return from.rho.inverse() * sigma * to.rho;
}

Element act(const Collection& coll, const Element& x, const Permutation& sigma) {
  if (sigma.size() != x.sig.arity()) throw ArityMismatch("acting by a permutation of the wrong size");
  const Component* c = component_at(coll, x.sig);
  if (!c) throw InvalidArgument("acting on an element of an empty component");
  return {x.sig.permuted(sigma), c->act(x.id, stored_transport(x.sig, sigma))};
}

FullCollection expand(const Collection& x, std::size_t max_arity) {
  FullCollection f;
  f.colours = x.colours();
  const std::size_t nc = x.colours().size();
  for (std::size_t n = 0; n <= max_arity; ++n) {
    auto perms = Permutation::all(n);
    for (auto& tuple : all_tuples(nc, n))
      for (std::size_t out = 0; out < nc; ++out) {
        Signature d{tuple, static_cast<ColourId>(out)};
        const Component* c = component_at(x, d);
        if (!c || c->size() == 0) continue;
        f.values[d] = c->names;
        for (const auto& sigma : perms) {
          Permutation t = stored_transport(d, sigma);
          std::vector<int> map(c->size());
          for (std::size_t e = 0; e < c->size(); ++e) map[e] = c->act(static_cast<int>(e), t);
          f.transport[{d, sigma}] = std::move(map);
        }
      }
  }
  return f;
}

Collection restrict(const FullCollection& f) {
  Collection out(f.colours);
  for (const auto& [sig, names] : f.values) {
    if (!sig.is_ordered()) continue;
    Component c;
    c.sig = sig;
    c.names = names;
    for (const auto& g : stabilizer(sig.inputs).elements) c.action.push_back(f.transport.at({sig, g}));
    out.set(std::move(c));
  }
  return out;
}

std::vector<std::string> check_full(const FullCollection& f) {
  std::vector<std::string> bad;
  for (const auto& [sig, names] : f.values) {
    auto perms = Permutation::all(sig.arity());
    auto id = f.transport.at({sig, Permutation::identity(sig.arity())});
    for (std::size_t e = 0; e < names.size(); ++e)
      if (id[e] != static_cast<int>(e)) bad.push_back("identity moves an element at " + to_string(sig, f.colours));
    for (const auto& s : perms)
      for (const auto& t : perms) {
        const auto& first = f.transport.at({sig, s});
        const auto& second = f.transport.at({sig.permuted(s), t});
        const auto& both = f.transport.at({sig, s * t});
        for (std::size_t e = 0; e < names.size(); ++e)
          if (second[first[e]] != both[e])
            bad.push_back("transport is not a right action at " + to_string(sig, f.colours));
      }
  }
  return bad;
}

PointedCollection unit_collection(const ColourSet& colours) {
  PointedCollection p{Collection(colours), {}};
  for (std::size_t c = 0; c < colours.size(); ++c) {
    ColourId id = static_cast<ColourId>(c);
    p.collection.set({{id}, id}, {"1_" + colours.name(id)});
    p.units.push_back(0);
  }
  return p;
}

Collection pointwise_tensor(const Collection& x, const Collection& y) {
  if (!(x.colours() == y.colours())) throw ColourMismatch("pointwise tensor of collections over different colours");
  Collection out(x.colours());
  for (const auto& [sig, a] : x.components()) {
    const Component* b = y.find(sig);
    if (!b) continue;
    Component c;
    c.sig = sig;
    for (const auto& na : a.names)
      for (const auto& nb : b->names) c.names.push_back("(" + na + "," + nb + ")");
    const std::size_t nb = b->size();
    for (std::size_t g = 0; g < a.action.size(); ++g) {
      std::vector<int> row;
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < nb; ++j)
          row.push_back(static_cast<int>(a.action[g][i] * nb + b->action[g][j]));
      c.action.push_back(std::move(row));
    }
    out.set(std::move(c));
  }
  return out;
}

namespace {

std::vector<int> stabilizer_of(const Component& c, int x) {
  std::vector<int> s;
  for (std::size_t g = 0; g < c.action.size(); ++g)
    if (c.action[g][x] == x) s.push_back(static_cast<int>(g));
  return s;
}

std::optional<std::vector<int>> match_component(const Component& a, const Component& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t ng = a.action.size();
  std::vector<int> map(a.size(), -1);
  std::vector<bool> b_used(b.size(), false);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (map[x] >= 0) continue;
    auto sa = stabilizer_of(a, static_cast<int>(x));
    bool placed = false;
    for (std::size_t y = 0; y < b.size() && !placed; ++y) {
      if (b_used[y] || stabilizer_of(b, static_cast<int>(y)) != sa) continue;
      for (std::size_t g = 0; g < ng; ++g) {
        map[a.action[g][x]] = b.action[g][y];
        b_used[b.action[g][y]] = true;
      }
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  return map;
}

}  // namespace

bool is_equivariant_bijection(const Collection& a, const Collection& b, const CollectionIso& iso,
                              std::size_t max_arity) {
  std::set<Signature> sigs;
  for (const auto& [s, c] : a.components())
    if (s.arity() <= max_arity && c.size()) sigs.insert(s);
  for (const auto& [s, c] : b.components())
    if (s.arity() <= max_arity && c.size()) sigs.insert(s);
  for (const auto& s : sigs) {
    const Component* ca = a.find(s);
    const Component* cb = b.find(s);
    if (!ca || !cb || ca->size() != cb->size()) return false;
    auto it = iso.find(s);
    if (it == iso.end() || it->second.size() != ca->size()) return false;
    const auto& m = it->second;
    std::vector<bool> hit(cb->size(), false);
    for (int v : m) {
      if (v < 0 || static_cast<std::size_t>(v) >= cb->size() || hit[v]) return false;
      hit[v] = true;
    }
    for (std::size_t g = 0; g < ca->action.size(); ++g)
      for (std::size_t x = 0; x < ca->size(); ++x)
        if (m[ca->action[g][x]] != cb->action[g][m[x]]) return false;
  }
  return true;
}

std::optional<CollectionIso> find_equivariant_bijection(const Collection& a, const Collection& b,
                                                        std::size_t max_arity) {
  if (!(a.colours() == b.colours())) return std::nullopt;
  CollectionIso iso;
  std::set<Signature> sigs;
  for (const auto& [s, c] : a.components())
    if (s.arity() <= max_arity && c.size()) sigs.insert(s);
  for (const auto& [s, c] : b.components())
    if (s.arity() <= max_arity && c.size()) sigs.insert(s);
  for (const auto& s : sigs) {
    const Component* ca = a.find(s);
    const Component* cb = b.find(s);
    if (!ca || !cb) return std::nullopt;
    auto m = match_component(*ca, *cb);
    if (!m) return std::nullopt;
    iso[s] = std::move(*m);
  }
  if (!is_equivariant_bijection(a, b, iso, max_arity)) return std::nullopt;
  return iso;
}

}  // namespace forge
