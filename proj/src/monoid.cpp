#include "forge/monoid.hpp"

#include <optional>

namespace forge {

namespace {

// m on a single summand at d: gamma(x; ys) moved to d by the gluing shuffle.
Element multiply(const Operad& p, const Signature& d, const BoxTerm& t, std::span<const int> ys) {
  auto inner = inner_signatures(t, d);
  std::vector<Element> qs;
  for (std::size_t i = 0; i < inner.size(); ++i) qs.push_back({inner[i], ys[i]});
  Element z = p.compose({t.outer, t.x}, qs);
  return p.act(z, gluing_permutation(t));
}

Element multiply(const Operad& p, const Signature& d, const BoxTerm& t) { return multiply(p, d, t, t.ys); }

template <class F>
std::optional<Element> guarded(Report& rep, F&& f) {
  try {
    auto e = f();
    ++rep.checked;
    return e;
  } catch (const TruncationOverflow&) {
    ++rep.skipped;
    return std::nullopt;
  }
}

std::string where(const Signature& d, const ColourSet& cs) { return " at " + to_string(d, cs); }

}  // namespace

MonoidStructure as_monoid(const Operad& p, std::size_t max_arity) {
  MonoidStructure out;
  Report& rep = out.report;
  const auto& cs = p.colours();
  const Collection& coll = p.collection();
  out.unit = p.units();
  out.square = box_product(coll, coll, max_arity);

  // m on representatives, then constancy on classes and equivariance.
  for (const auto& [d, reps] : out.square.representatives) {
    auto& m = out.multiplication[d];
    for (const auto& r : reps) {
      auto e = guarded(rep, [&] { return multiply(p, d, r); });
      m.push_back(e ? e->id : -1);
    }
    for (const auto& [term, cls] : out.square.classes.at(d)) {
      if (m[cls] < 0) continue;
      auto e = guarded(rep, [&] { return multiply(p, d, term); });
      if (e && e->id != m[cls])
        rep.fail("multiplication is not constant on the class of " + out.square.result.find(d)->names[cls] + where(d, cs));
    }
    const Component& sq = *out.square.result.find(d);
    const Component* target = coll.find(d);
    const auto& group = sq.group().elements;
    for (std::size_t g = 0; g < group.size(); ++g)
      for (std::size_t k = 0; k < reps.size(); ++k) {
        int moved = m[sq.action[g][k]];
        if (m[k] < 0 || moved < 0) continue;
        ++rep.checked;
        if (!target || target->act(m[k], group[g]) != moved)
          rep.fail("multiplication is not equivariant at " + sq.names[k] + where(d, cs) + " for " + to_string(group[g]));
      }
  }

  // Unit triangles: U box P -> P and P box U -> P.
  const Collection u = unit_collection(cs).collection;
  auto left = box_product(u, coll, max_arity);
  for (const auto& [d, reps] : left.representatives)
    for (const auto& r : reps) {
      std::vector<int> ys = r.ys;
      BoxTerm t = r;
      t.x = p.units().at(r.outer.output);
      auto e = guarded(rep, [&] { return multiply(p, d, t, ys); });
      if (e && e->id != r.ys[0]) rep.fail("left unit triangle fails" + where(d, cs) + " at " + coll.find(d)->names[r.ys[0]]);
    }
  auto right = box_product(coll, u, max_arity);
  for (const auto& [d, reps] : right.representatives)
    for (const auto& r : reps) {
      std::vector<int> ys;
      for (ColourId c : r.outer.inputs) ys.push_back(p.units().at(c));
      auto e = guarded(rep, [&] { return multiply(p, d, r, ys); });
      Element expected = p.act({r.outer, r.x}, gluing_permutation(r));
      if (e && *e != expected) rep.fail("right unit triangle fails" + where(d, cs) + " at " + coll.find(r.outer)->names[r.x]);
    }

  // Associativity on (P box P) box P, rebracketed by hand.
  auto cube = box_product(out.square.result, coll, max_arity);
  for (const auto& [d, reps] : cube.representatives)
    for (const auto& t : reps) {
      const Signature& e = t.outer;
      const int mw = out.multiplication.at(e).at(t.x);
      if (mw < 0) continue;
      const BoxTerm& w = out.square.representatives.at(e).at(t.x);
      const auto fs = inner_signatures(t, d);
      std::vector<Element> zs;
      for (std::size_t j = 0; j < fs.size(); ++j) zs.push_back({fs[j], t.ys[j]});
      auto lhs = guarded(rep, [&] { return p.act(p.compose({e, mw}, zs), gluing_permutation(t)); });
      auto rhs = guarded(rep, [&] {
        const auto es = inner_signatures(w, e);
        std::vector<Element> qs;
        std::vector<int> order;  // positions of e, block by block
        for (std::size_t i = 0; i < es.size(); ++i) {
          std::vector<Element> tops;
          for (std::size_t j = 0; j < w.block.size(); ++j)
            if (w.block[j] == static_cast<int>(i)) {
              tops.push_back(zs[j]);
              order.push_back(static_cast<int>(j));
            }
          qs.push_back(p.compose({es[i], w.ys[i]}, tops));
        }
        Element r0 = p.compose({w.outer, w.x}, qs);
        std::vector<std::size_t> sizes;
        std::vector<int> position(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
          sizes.push_back(fs[order[k]].arity());
          position[order[k]] = static_cast<int>(k);
        }
        Element r1 = p.act(r0, block_permutation(Permutation(position), sizes));
        return p.act(r1, gluing_permutation(t));
      });
      if (lhs && rhs && *lhs != *rhs)
        rep.fail("associativity square fails" + where(d, cs) + " at " + cube.result.find(d)->names[&t - reps.data()]);
    }
  return out;
}

}  // namespace forge
