#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "forge/operads.hpp"

namespace forge {

Signature apply_colours(const ColourMap& alpha, const Signature& sig) {
  Signature out{{}, alpha.at(sig.output)};
  for (ColourId c : sig.inputs) out.inputs.push_back(alpha.at(c));
  return out;
}

namespace {

Signature concat(ColourId output, std::span<const Signature> parts) {
  Signature s{{}, output};
  for (const auto& q : parts) s.inputs.insert(s.inputs.end(), q.inputs.begin(), q.inputs.end());
  return s;
}

}  // namespace

Operad pullback_colours(const ColourMap& alpha, const ColourSet& source, const Operad& p) {
  if (alpha.size() != source.size()) throw InvalidArgument("colour map must be defined on every source colour");
  for (ColourId c : alpha)
    if (c < 0 || static_cast<std::size_t>(c) >= p.colours().size()) throw ColourMismatch("colour map leaves the target");
  Collection coll(source);
  for (const auto& sig : ordered_signatures(source, p.arity_bound())) {
    Signature image = apply_colours(alpha, sig);
    const Component* pc = component_at(p.collection(), image);
    if (!pc || pc->size() == 0) continue;
    Component c;
    c.sig = sig;
    c.names = pc->names;
    for (const auto& g : stabilizer(sig.inputs).elements) {
      std::vector<int> row;
      for (std::size_t e = 0; e < pc->size(); ++e) row.push_back(p.act({image, static_cast<int>(e)}, g).id);
      c.action.push_back(std::move(row));
    }
    coll.set(std::move(c));
  }
  std::vector<int> units;
  for (ColourId a : alpha) units.push_back(p.units().at(a));
  // Many source instances share one image in P; composites in P are cached.
  struct Cache {
    std::mutex lock;
    std::map<CompositionKey, Element> results;
  };
  auto cache = std::make_shared<Cache>();
  ComposeFn fn = [alpha, p, cache](const Signature& outer, int x, std::span<const Signature> inner,
                                   std::span<const int> ys) {
    CompositionKey image{apply_colours(alpha, outer), x, {}, {ys.begin(), ys.end()}};
    for (const auto& s : inner) image.inner.push_back(apply_colours(alpha, s));
    auto sg = sort_signature(concat(outer.output, inner));
    if (p.colours().size() == 1) {
      // Images are ordered already: compose stored elements directly and
      // move the result by the sorting permutation of the source colours.
      const int z = p.compose_stored(image);
      return p.collection().find(image.result_signature())->act(z, sg.rho);
    }
    std::optional<Element> r;
    {
      std::lock_guard<std::mutex> guard(cache->lock);
      auto it = cache->results.find(image);
      if (it != cache->results.end()) r = it->second;
    }
    if (!r) {
      std::vector<Element> qs;
      for (std::size_t i = 0; i < inner.size(); ++i) qs.push_back({image.inner[i], ys[i]});
      r = p.compose({image.outer, x}, qs);
      std::lock_guard<std::mutex> guard(cache->lock);
      cache->results.emplace(std::move(image), *r);
    }
    return p.act(*r, sg.rho).id;
  };
  return Operad("pullback(" + p.name() + ")", std::move(coll), std::move(units), std::move(fn), p.arity_bound());
}

Operad pushforward_colours_injective(const ColourMap& alpha, const ColourSet& target, const Operad& p) {
  if (alpha.size() != p.colours().size()) throw InvalidArgument("colour map must be defined on every source colour");
  std::vector<ColourId> back(target.size(), -1);
  for (std::size_t d = 0; d < alpha.size(); ++d) {
    ColourId c = alpha[d];
    if (c < 0 || static_cast<std::size_t>(c) >= target.size()) throw ColourMismatch("colour map leaves the target");
    if (back[c] >= 0) throw InvalidArgument("pushforward requires an injective colour map");
    back[c] = static_cast<ColourId>(d);
  }
  auto preimage = [back](const Signature& s) -> std::optional<Signature> {
    Signature out{{}, back[s.output]};
    if (out.output < 0) return std::nullopt;
    for (ColourId c : s.inputs) {
      if (back[c] < 0) return std::nullopt;
      out.inputs.push_back(back[c]);
    }
    return out;
  };
  Collection coll(target);
  for (const auto& sig : ordered_signatures(target, p.arity_bound())) {
    auto pre = preimage(sig);
    if (!pre) {
      if (sig.arity() == 1 && sig.inputs[0] == sig.output && back[sig.output] < 0)
        coll.set(sig, {"1_" + target.name(sig.output)});
      continue;
    }
    const Component* pc = component_at(p.collection(), *pre);
    if (!pc || pc->size() == 0) continue;
    Component c;
    c.sig = sig;
    c.names = pc->names;
    for (const auto& g : stabilizer(sig.inputs).elements) {
      std::vector<int> row;
      for (std::size_t e = 0; e < pc->size(); ++e) row.push_back(p.act({*pre, static_cast<int>(e)}, g).id);
      c.action.push_back(std::move(row));
    }
    coll.set(std::move(c));
  }
  std::vector<int> units;
  for (std::size_t c = 0; c < target.size(); ++c) units.push_back(back[c] < 0 ? 0 : p.units().at(back[c]));
  ComposeFn fn = [preimage, p](const Signature& outer, int x, std::span<const Signature> inner,
                               std::span<const int> ys) {
    auto pre_outer = preimage(outer);
    // Outside the image only the units survive, and they compose trivially.
    if (!pre_outer) return ys[0];
    std::vector<Element> qs;
    for (std::size_t i = 0; i < inner.size(); ++i) qs.push_back({*preimage(inner[i]), ys[i]});
    Element r = p.compose({*pre_outer, x}, qs);
    auto sg = sort_signature(concat(outer.output, inner));
    return p.act(r, sg.rho).id;
  };
  return Operad("pushforward(" + p.name() + ")", std::move(coll), std::move(units), std::move(fn), p.arity_bound());
}

Operad restrict_to_predicate(const Operad& p, const std::function<bool(const Signature&)>& keep, std::string name) {
  Collection coll(p.colours());
  for (const auto& [sig, c] : p.collection().components())
    if (keep(sig)) coll.set(c);
  auto base = p.compose_fn();
  return Operad(std::move(name), std::move(coll), p.units(), base, p.arity_bound());
}

}  // namespace forge
