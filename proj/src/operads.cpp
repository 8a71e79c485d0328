#include "forge/operads.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace forge {

Signature CompositionKey::result_signature() const {
  Signature s{{}, outer.output};
  for (const auto& in : inner) s.inputs.insert(s.inputs.end(), in.inputs.begin(), in.inputs.end());
  return sort_signature(s).ordered;
}

Operad::Operad(std::string name, Collection collection, std::vector<int> units, ComposeFn compose,
               std::size_t arity_bound)
    : name_(std::move(name)),
      collection_(std::move(collection)),
      units_(std::move(units)),
      compose_(std::move(compose)),
      arity_bound_(arity_bound) {
  if (units_.size() != collection_.colours().size()) throw InvalidArgument("one unit per colour is required");
  for (std::size_t c = 0; c < units_.size(); ++c) {
    ColourId id = static_cast<ColourId>(c);
    std::size_t n = collection_.size({{id}, id});
    if (units_[c] < 0 || static_cast<std::size_t>(units_[c]) >= n)
      throw InvalidArgument("unit of colour " + collection_.colours().name(id) + " is missing");
  }
}

std::vector<Element> Operad::elements(const Signature& sig) const {
  std::vector<Element> out;
  std::size_t n = size(sig);
  for (std::size_t i = 0; i < n; ++i) out.push_back({sig, static_cast<int>(i)});
  return out;
}

std::string Operad::element_name(const Element& e) const {
  auto s = sort_signature(e.sig);
  const Component* c = collection_.find(s.ordered);
  if (!c) throw InvalidArgument("element of an empty component");
  std::string name = c->names.at(e.id);
  // The element is the stored one acted on by rho^{-1}.
  if (!s.rho.is_identity()) name += "." + to_string(s.rho.inverse());
  return name;
}

Element Operad::element(const Signature& sig, const std::string& name) const {
  const Component* c = component_at(collection_, sig);
  if (!c) throw InvalidArgument("no elements at " + to_string(sig, colours()));
  return {sig, c->index_of(name)};
}

int Operad::compose_stored(const Signature& outer, int x, std::span<const Signature> inner,
                           std::span<const int> ys) const {
  if (inner.size() != outer.arity() || ys.size() != inner.size())
    throw ArityMismatch("composition with " + std::to_string(inner.size()) + " inputs for arity " +
                        std::to_string(outer.arity()));
  std::size_t total = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i].output != outer.inputs[i]) throw ColourMismatch("composition: colour mismatch at input " + std::to_string(i));
    total += inner[i].arity();
  }
  if (total > arity_bound_) throw TruncationOverflow("composite arity " + std::to_string(total) + " exceeds the bound");
  const Component* oc = collection_.find(outer);
  if (!oc || x < 0 || static_cast<std::size_t>(x) >= oc->size()) throw InvalidArgument("composition: bad outer element");
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const Component* ic = collection_.find(inner[i]);
    if (!ic || ys[i] < 0 || static_cast<std::size_t>(ys[i]) >= ic->size())
      throw InvalidArgument("composition: bad inner element");
  }
  return compose_(outer, x, inner, ys);
}

Element Operad::compose(const Element& p, std::span<const Element> qs) const {
  const std::size_t n = p.sig.arity();
  if (qs.size() != n) throw ArityMismatch("compose: wrong number of inputs");
  for (std::size_t i = 0; i < n; ++i)
    if (qs[i].sig.output != p.sig.inputs[i]) throw ColourMismatch("compose: colour mismatch at input " + std::to_string(i));

  auto sp = sort_signature(p.sig);
  // p = stored . sigma with sigma = rho_p^{-1}; input l of the stored element
  // receives q_{rho_p(l)}.
  const Permutation sigma = sp.rho.inverse();
  std::vector<Signature> inner(n);
  std::vector<int> ys(n);
  std::vector<Permutation> g(n);
  std::vector<std::size_t> sizes(n);
  for (std::size_t l = 0; l < n; ++l) {
    const Element& q = qs[sp.rho(l)];
    auto sq = sort_signature(q.sig);
    inner[l] = sq.ordered;
    ys[l] = q.id;
    g[l] = sq.rho.inverse();
    sizes[l] = q.sig.arity();
  }
  int z = compose_stored(sp.ordered, p.id, inner, ys);

  Signature glued{{}, p.sig.output};
  for (const auto& s : inner) glued.inputs.insert(glued.inputs.end(), s.inputs.begin(), s.inputs.end());
  auto sg = sort_signature(glued);
  Permutation h = sg.rho.inverse() * direct_sum(g) * block_permutation(sigma, sizes);

  Signature result{{}, p.sig.output};
  for (const auto& q : qs) result.inputs.insert(result.inputs.end(), q.sig.inputs.begin(), q.sig.inputs.end());
  auto sr = sort_signature(result);
  const Component* rc = collection_.find(sr.ordered);
  if (!rc) throw InvalidArgument("composite lands in an empty component of " + name_);
  return {result, rc->act(z, h * sr.rho)};
}

void Report::merge(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  checked += other.checked;
  skipped += other.skipped;
}

Element OperadMap::apply(const Element& e) const {
  auto s = sort_signature(e.sig);
  auto it = table.find(s.ordered);
  if (it == table.end()) throw InvalidArgument("operad map undefined at this signature");
  return {e.sig, it->second.at(e.id)};
}

void for_each_composition(const Operad& p, std::size_t max_arity,
                          const std::function<void(const CompositionKey&)>& visit) {
  std::map<ColourId, std::vector<Signature>> by_output;
  for (const auto& [sig, c] : p.collection().components())
    if (c.size() && sig.arity() <= max_arity) by_output[sig.output].push_back(sig);
  for (const auto& [outer, oc] : p.collection().components()) {
    if (oc.size() == 0) continue;
    const std::size_t n = outer.arity();
    CompositionKey key{outer, 0, std::vector<Signature>(n), std::vector<int>(n)};
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t budget) {
      if (i == n) {
        std::function<void(std::size_t)> fill = [&](std::size_t j) {
          if (j == n) {
            for (std::size_t e = 0; e < oc.size(); ++e) {
              key.x = static_cast<int>(e);
              visit(key);
            }
            return;
          }
          std::size_t m = p.collection().size(key.inner[j]);
          for (std::size_t v = 0; v < m; ++v) {
            key.ys[j] = static_cast<int>(v);
            fill(j + 1);
          }
        };
        fill(0);
        return;
      }
      auto it = by_output.find(outer.inputs[i]);
      if (it == by_output.end()) return;
      for (const auto& s : it->second) {
        if (s.arity() > budget) continue;
        key.inner[i] = s;
        choose(i + 1, budget - s.arity());
      }
    };
    choose(0, max_arity);
  }
}

MaterializedOperad materialize(const Operad& p, std::size_t max_arity) {
  auto table = std::make_shared<std::map<CompositionKey, int>>();
  for_each_composition(p, max_arity, [&](const CompositionKey& k) {
    try {
      (*table)[k] = p.compose_stored(k);
    } catch (const TruncationOverflow&) {
    }
  });
  ComposeFn fn = [table](const Signature& outer, int x, std::span<const Signature> inner, std::span<const int> ys) {
    CompositionKey k{outer, x, {inner.begin(), inner.end()}, {ys.begin(), ys.end()}};
    auto it = table->find(k);
    if (it == table->end()) throw TruncationOverflow("composition outside the materialized table");
    return it->second;
  };
  return {Operad(p.name(), p.collection(), p.units(), fn, std::min(max_arity, p.arity_bound())), table};
}

namespace {

std::size_t tuple_count(const std::vector<std::size_t>& sizes, const std::vector<ColourId>& ins) {
  std::size_t n = 1;
  for (ColourId c : ins) n *= sizes.at(c);
  return n;
}

// Table of f . sigma from the table of f at the full signature `sig`:
// (f . sigma)(y) = f(x) where x_{sigma(i)} = y_i.
std::vector<int> act_table(const std::vector<std::size_t>& sizes, const Signature& sig, const std::vector<int>& f,
                           const Permutation& sigma) {
  const std::size_t n = sig.arity();
  auto moved = permute(sig.inputs, sigma);
  std::vector<std::size_t> radix_x(n), radix_y(n);
  for (std::size_t i = 0; i < n; ++i) {
    radix_x[i] = sizes[sig.inputs[i]];
    radix_y[i] = sizes[moved[i]];
  }
  std::vector<std::size_t> wx(n, 1);
  for (std::size_t i = n; i-- > 1;) wx[i - 1] = wx[i] * radix_x[i];
  std::vector<int> out(f.size());
  std::vector<std::size_t> y(n, 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::size_t xk = 0;
    for (std::size_t i = 0; i < n; ++i) xk += y[i] * wx[sigma(i)];
    out[k] = f[xk];
    for (std::size_t i = n; i-- > 0;) {
      if (++y[i] < radix_y[i]) break;
      y[i] = 0;
    }
  }
  return out;
}

std::string function_name(const std::vector<int>& table) {
  std::string s = "f[";
  for (std::size_t i = 0; i < table.size(); ++i) s += (i ? "," : "") + std::to_string(table[i]);
  return s + "]";
}

}  // namespace

std::vector<int> decode_function(const std::vector<std::size_t>& sizes, const Signature& sig, int id) {
  const std::size_t n = tuple_count(sizes, sig.inputs);
  const std::size_t base = sizes.at(sig.output);
  std::vector<int> table(n);
  std::uint64_t v = static_cast<std::uint64_t>(id);
  for (std::size_t k = n; k-- > 0;) {
    table[k] = static_cast<int>(v % base);
    v /= base;
  }
  return table;
}

int encode_function(const std::vector<std::size_t>& sizes, const Signature& sig, const std::vector<int>& table) {
  const std::size_t base = sizes.at(sig.output);
  std::uint64_t v = 0;
  for (int t : table) v = v * base + static_cast<std::uint64_t>(t);
  return static_cast<int>(v);
}

Operad endomorphism_operad(const ColourSet& colours, const std::vector<std::size_t>& sizes, std::size_t arity_bound,
                           std::size_t max_component) {
  if (sizes.size() != colours.size()) throw InvalidArgument("one carrier size per colour is required");
  Collection coll(colours);
  for (const auto& sig : ordered_signatures(colours, arity_bound)) {
    const std::size_t n = tuple_count(sizes, sig.inputs);
    const std::size_t base = sizes[sig.output];
    std::size_t count = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (base && count > max_component / base) throw InvalidArgument("endomorphism component at " + to_string(sig, colours) + " is too large to materialize");
      count *= base;
    }
    if (count == 0) continue;
    Component c;
    c.sig = sig;
    c.names.reserve(count);
    std::vector<std::vector<int>> tables(count);
    for (std::size_t id = 0; id < count; ++id) {
      tables[id] = decode_function(sizes, sig, static_cast<int>(id));
      c.names.push_back(function_name(tables[id]));
    }
    for (const auto& g : stabilizer(sig.inputs).elements) {
      std::vector<int> row(count);
      for (std::size_t id = 0; id < count; ++id) row[id] = encode_function(sizes, sig, act_table(sizes, sig, tables[id], g));
      c.action.push_back(std::move(row));
    }
    coll.set(std::move(c));
  }
  std::vector<int> units;
  for (std::size_t c = 0; c < colours.size(); ++c) {
    std::vector<int> id(sizes[c]);
    std::iota(id.begin(), id.end(), 0);
    ColourId cc = static_cast<ColourId>(c);
    units.push_back(encode_function(sizes, {{cc}, cc}, id));
  }
  ComposeFn fn = [sizes](const Signature& outer, int x, std::span<const Signature> inner, std::span<const int> ys) {
    const std::size_t n = outer.arity();
    auto f = decode_function(sizes, outer, x);
    std::vector<std::vector<int>> gs(n);
    Signature glued{{}, outer.output};
    for (std::size_t i = 0; i < n; ++i) {
      gs[i] = decode_function(sizes, inner[i], ys[i]);
      glued.inputs.insert(glued.inputs.end(), inner[i].inputs.begin(), inner[i].inputs.end());
    }
    const std::size_t m = glued.arity();
    std::vector<std::size_t> radix(m);
    for (std::size_t j = 0; j < m; ++j) radix[j] = sizes[glued.inputs[j]];
    std::vector<std::size_t> outer_w(n, 1);
    for (std::size_t i = n; i-- > 1;) outer_w[i - 1] = outer_w[i] * sizes[outer.inputs[i]];
    const std::size_t total = tuple_count(sizes, glued.inputs);
    std::vector<int> composite(total);
    std::vector<std::size_t> in(m, 0);
    for (std::size_t k = 0; k < total; ++k) {
      std::size_t pos = 0, xk = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t yk = 0;
        for (std::size_t j = 0; j < inner[i].arity(); ++j) yk = yk * radix[pos + j] + in[pos + j];
        pos += inner[i].arity();
        xk += static_cast<std::size_t>(gs[i][yk]) * outer_w[i];
      }
      composite[k] = f[xk];
      for (std::size_t j = m; j-- > 0;) {
        if (++in[j] < radix[j]) break;
        in[j] = 0;
      }
    }
    auto sg = sort_signature(glued);
    return encode_function(sizes, sg.ordered, act_table(sizes, glued, composite, sg.rho));
  };
  return Operad("End", std::move(coll), std::move(units), std::move(fn), arity_bound);
}

std::size_t NonSymmetricOperad::size(const Signature& sig) const {
  auto it = components.find(sig);
  return it == components.end() ? 0 : it->second.size();
}

namespace {

struct CodeHash {
  std::size_t operator()(const std::pair<std::uint64_t, int>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k.second));
  }
};

struct SymIndex {
  // Per ordered signature: (sigma, p) of each element, and the reverse map
  // keyed by the packed permutation.
  std::map<Signature, std::vector<std::pair<Permutation, int>>> elements;
  std::map<Signature, std::unordered_map<std::pair<std::uint64_t, int>, int, CodeHash>> lookup;
};

}  // namespace

Element ns_element(const Operad& sym, const NonSymmetricOperad& ns, const Signature& e, int q) {
  // symmetrize stores p . s at e . s under the name "p.s"; with s the sorting
  // permutation of e, moving back by s^{-1} is the Element convention.
  auto sr = sort_signature(e);
  const std::string& base = ns.components.at(e).at(q);
  const std::string name = sr.rho.is_identity() ? base : base + "." + to_string(sr.rho);
  const Component* c = sym.collection().find(sr.ordered);
  if (!c) throw InvalidArgument("no symmetric component at the sorted signature");
  return {e, c->index_of(name)};
}

Operad symmetrize(const NonSymmetricOperad& p) {
  auto index = std::make_shared<SymIndex>();
  Collection coll(p.colours);
  for (const auto& sig : ordered_signatures(p.colours, p.arity_bound)) {
    std::vector<std::pair<Permutation, int>> elems;
    Component c;
    c.sig = sig;
    for (const auto& s : Permutation::all(sig.arity())) {
      // Element p . s with p at e = sig . s^{-1}.
      Signature e = sig.permuted(s.inverse());
      auto it = p.components.find(e);
      if (it == p.components.end()) continue;
      for (std::size_t q = 0; q < it->second.size(); ++q) {
        elems.emplace_back(s, static_cast<int>(q));
        c.names.push_back(s.is_identity() ? it->second[q] : it->second[q] + "." + to_string(s));
      }
    }
    if (elems.empty()) continue;
    auto& look = index->lookup[sig];
    for (std::size_t i = 0; i < elems.size(); ++i) look[{elems[i].first.code(), elems[i].second}] = static_cast<int>(i);
    for (const auto& g : stabilizer(sig.inputs).elements) {
      std::vector<int> row;
      for (auto& [s, q] : elems) row.push_back(look.at({(s * g).code(), q}));
      c.action.push_back(std::move(row));
    }
    index->elements[sig] = std::move(elems);
    coll.set(std::move(c));
  }
  std::vector<int> units;
  for (std::size_t c = 0; c < p.colours.size(); ++c) {
    ColourId id = static_cast<ColourId>(c);
    units.push_back(index->lookup.at({{id}, id}).at({Permutation::identity(1).code(), p.units.at(c)}));
  }
  auto ns_compose = p.compose;
  ComposeFn fn = [index, ns_compose](const Signature& outer, int x, std::span<const Signature> inner,
                                     std::span<const int> ys) {
    const std::size_t n = outer.arity();
    const auto& [sigma, px] = index->elements.at(outer)[x];
    const Permutation sigma_inv = sigma.inverse();
    // Input l of the non-symmetric element receives inner[sigma^{-1}(l)].
    std::vector<Signature> ns_inner(n);
    std::vector<int> qs(n);
    std::vector<Permutation> taus(n);
    std::vector<std::size_t> sizes(n);
    for (std::size_t l = 0; l < n; ++l) {
      std::size_t i = sigma_inv(l);
      const auto& [tau, q] = index->elements.at(inner[i])[ys[i]];
      ns_inner[l] = inner[i].permuted(tau.inverse());
      qs[l] = q;
      taus[l] = tau;
      sizes[l] = inner[i].arity();
    }
    Signature e = outer.permuted(sigma_inv);
    int r = ns_compose(e, px, ns_inner, qs);
    Signature glued{{}, outer.output};
    for (std::size_t i = 0; i < n; ++i) glued.inputs.insert(glued.inputs.end(), inner[i].inputs.begin(), inner[i].inputs.end());
    auto sg = sort_signature(glued);
    Permutation perm = direct_sum(taus) * block_permutation(sigma, sizes) * sg.rho;
    return index->lookup.at(sg.ordered).at({perm.code(), r});
  };
  return Operad(p.name + "^sym", std::move(coll), std::move(units), std::move(fn), p.arity_bound);
}

Report check_non_symmetric(const NonSymmetricOperad& p, std::size_t max_arity) {
  Report rep;
  auto name = [&](const Signature& s) { return to_string(s, p.colours); };
  std::map<ColourId, std::vector<Signature>> by_output;
  for (const auto& [sig, names] : p.components)
    if (!names.empty() && sig.arity() <= max_arity) by_output[sig.output].push_back(sig);
  auto concat = [](const Signature& out, std::span<const Signature> parts) {
    Signature s{{}, out.output};
    for (const auto& q : parts) s.inputs.insert(s.inputs.end(), q.inputs.begin(), q.inputs.end());
    return s;
  };
  for (const auto& [sig, names] : p.components) {
    if (sig.arity() > max_arity) continue;
    for (std::size_t x = 0; x < names.size(); ++x) {
      std::vector<Signature> us;
      std::vector<int> uids;
      for (ColourId c : sig.inputs) {
        us.push_back({{c}, c});
        uids.push_back(p.units.at(c));
      }
      ++rep.checked;
      if (p.compose(sig, static_cast<int>(x), us, uids) != static_cast<int>(x)) rep.fail("right unit fails at " + name(sig));
      Signature u{{sig.output}, sig.output};
      std::vector<Signature> one{sig};
      std::vector<int> xid{static_cast<int>(x)};
      ++rep.checked;
      if (p.compose(u, p.units.at(sig.output), one, xid) != static_cast<int>(x)) rep.fail("left unit fails at " + name(sig));
    }
  }
  // Associativity over outer x, inner ys and inner-inner zs.
  for (const auto& [outer, onames] : p.components) {
    const std::size_t n = outer.arity();
    std::vector<Signature> inner(n);
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t i, std::size_t budget) {
      if (i < n) {
        auto it = by_output.find(outer.inputs[i]);
        if (it == by_output.end()) return;
        for (const auto& s : it->second)
          if (s.arity() <= budget) {
            inner[i] = s;
            pick(i + 1, budget - s.arity());
          }
        return;
      }
      // Flattened inputs of the inner layer, then the top layer.
      Signature mid = concat(outer, inner);
      const std::size_t m = mid.arity();
      std::vector<Signature> top(m);
      std::function<void(std::size_t, std::size_t)> pick_top = [&](std::size_t j, std::size_t left) {
        if (j < m) {
          auto it = by_output.find(mid.inputs[j]);
          if (it == by_output.end()) return;
          for (const auto& s : it->second)
            if (s.arity() <= left) {
              top[j] = s;
              pick_top(j + 1, left - s.arity());
            }
          return;
        }
        std::vector<std::size_t> radix;
        for (const auto& s : inner) radix.push_back(p.size(s));
        for (const auto& s : top) radix.push_back(p.size(s));
        std::vector<int> digits(radix.size(), 0);
        while (true) {
          std::vector<int> ys(digits.begin(), digits.begin() + n), zs(digits.begin() + n, digits.end());
          for (std::size_t x = 0; x < onames.size(); ++x) {
            int lhs = p.compose(mid, p.compose(outer, static_cast<int>(x), inner, ys), top, zs);
            std::vector<Signature> merged(n);
            std::vector<int> mids(n);
            std::size_t pos = 0;
            for (std::size_t i = 0; i < n; ++i) {
              std::span<const Signature> tops(top.data() + pos, inner[i].arity());
              std::span<const int> zz(zs.data() + pos, inner[i].arity());
              mids[i] = p.compose(inner[i], ys[i], tops, zz);
              merged[i] = concat(inner[i], tops);
              pos += inner[i].arity();
            }
            int rhs = p.compose(outer, static_cast<int>(x), merged, mids);
            ++rep.checked;
            if (lhs != rhs) rep.fail("associativity fails at " + name(outer));
          }
          std::size_t d = 0;
          while (d < digits.size() && ++digits[d] == static_cast<int>(radix[d])) digits[d++] = 0;
          if (d == digits.size()) break;
        }
      };
      pick_top(0, max_arity);
    };
    pick(0, max_arity);
  }
  return rep;
}

}  // namespace forge
