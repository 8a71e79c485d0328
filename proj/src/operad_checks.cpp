#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "forge/operads.hpp"

namespace forge {

std::string describe(const Operad& p, const CompositionKey& k) {
  std::ostringstream os;
  const auto& cs = p.colours();
  os << to_string(k.outer, cs) << " " << p.collection().find(k.outer)->names[k.x] << " o [";
  for (std::size_t i = 0; i < k.inner.size(); ++i)
    os << (i ? ", " : "") << to_string(k.inner[i], cs) << " " << p.collection().find(k.inner[i])->names[k.ys[i]];
  os << "]";
  return os.str();
}

namespace {

std::vector<Element> inner_elements(const CompositionKey& k) {
  std::vector<Element> qs;
  for (std::size_t i = 0; i < k.inner.size(); ++i) qs.push_back({k.inner[i], k.ys[i]});
  return qs;
}

template <class F>
void guarded(Report& rep, F&& f) {
  try {
    f();
    ++rep.checked;
  } catch (const TruncationOverflow&) {
    ++rep.skipped;
  }
}

}  // namespace

Report check_operad(const Operad& p, std::size_t max_arity) {
  // Instances above the materialized arity cannot be formed.
  max_arity = std::min(max_arity, p.arity_bound());
  Report rep;
  const auto& cs = p.colours();
  const auto& coll = p.collection();

  for (const auto& [sig, c] : coll.components()) {
    if (sig.arity() > max_arity) continue;
    ++rep.checked;
    try {
      c.validate();
    } catch (const Error& e) {
      rep.fail("action at " + to_string(sig, cs) + ": " + e.what());
    }
  }

  for (const auto& [sig, c] : coll.components()) {
    if (sig.arity() > max_arity) continue;
    std::vector<Signature> us;
    std::vector<int> uids;
    for (ColourId col : sig.inputs) {
      us.push_back({{col}, col});
      uids.push_back(p.units().at(col));
    }
    Signature u{{sig.output}, sig.output};
    for (std::size_t x = 0; x < c.size(); ++x) {
      const int xi = static_cast<int>(x);
      guarded(rep, [&] {
        if (p.compose_stored(sig, xi, us, uids) != xi) rep.fail("right unit fails at " + to_string(sig, cs) + " " + c.names[x]);
      });
      guarded(rep, [&] {
        std::vector<Signature> one{sig};
        std::vector<int> id{xi};
        if (p.compose_stored(u, p.units().at(sig.output), one, id) != xi)
          rep.fail("left unit fails at " + to_string(sig, cs) + " " + c.names[x]);
      });
    }
  }

  std::map<ColourId, std::vector<Signature>> by_output;
  for (const auto& [sig, c] : coll.components())
    if (c.size() && sig.arity() <= max_arity) by_output[sig.output].push_back(sig);

  // Orbit representatives: once both equivariance conditions hold, moving
  // an argument within its orbit acts on both sides of a law alike.
  std::map<Signature, std::vector<int>> reps;
  std::map<Signature, std::vector<bool>> is_rep;
  for (const auto& [sig, c] : coll.components()) {
    std::vector<bool> seen(c.size(), false), rep_flag(c.size(), false);
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (seen[x]) continue;
      rep_flag[x] = true;
      reps[sig].push_back(static_cast<int>(x));
      for (const auto& row : c.action)
        if (static_cast<std::size_t>(row[x]) < c.size()) seen[row[x]] = true;
    }
    is_rep[sig] = std::move(rep_flag);
  }

  // Equivariance (ii) is checked for every x but only in slots holding a
  // representative; (i) and the comparison with partial compositions only
  // when x and every y_i are representatives. Every stored entry still
  // occurs in some instance, and the remaining instances follow since the
  // actions are group actions.
  for_each_composition(p, max_arity, [&](const CompositionKey& k) {
    const std::size_t n = k.outer.arity();
    bool all_reps = is_rep.at(k.outer)[k.x], some_rep = false;
    for (std::size_t i = 0; i < n; ++i) {
      const bool r = is_rep.at(k.inner[i])[k.ys[i]];
      all_reps = all_reps && r;
      some_rep = some_rep || (r && coll.find(k.inner[i])->group().elements.size() > 1);
    }
    if (!all_reps && !some_rep) return;
    const Component& oc = *coll.find(k.outer);
    const Element x{k.outer, k.x};
    const auto qs = inner_elements(k);
    std::optional<Element> base;
    guarded(rep, [&] { base = p.compose(x, qs); });
    if (!base) return;

    // (i): gamma(x.s; q_s(1), ..., q_s(n)) = gamma(x; q) . s-bar.
    std::vector<std::size_t> sizes;
    for (const auto& s : k.inner) sizes.push_back(s.arity());
    for (const auto& s : oc.group().elements) {
      if (s.is_identity() || !all_reps) continue;
      guarded(rep, [&] {
        Element lhs = p.compose({k.outer, oc.act(k.x, s)}, permute(qs, s));
        Element rhs = p.act(*base, block_permutation(s, sizes));
        if (lhs != rhs) rep.fail("equivariance (i) fails at " + describe(p, k) + " for " + to_string(s));
      });
    }
    // (ii): gamma(x; q_i . t_i) = gamma(x; q) . (t_1 + ... + t_n).
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_rep.at(k.inner[i])[k.ys[i]]) continue;
      const Component& ic = *coll.find(k.inner[i]);
      for (const auto& t : ic.group().elements) {
        if (t.is_identity()) continue;
        guarded(rep, [&] {
          auto moved = qs;
          moved[i].id = ic.act(k.ys[i], t);
          std::vector<Permutation> parts;
          for (std::size_t j = 0; j < n; ++j) parts.push_back(j == i ? t : Permutation::identity(sizes[j]));
          Element lhs = p.compose(x, moved);
          Element rhs = p.act(*base, direct_sum(parts));
          if (lhs != rhs) rep.fail("equivariance (ii) fails at " + describe(p, k) + " for " + to_string(t));
        });
      }
    }

    // gamma agrees with partial compositions applied one slot at a time,
    // nullary slots first so that no intermediate exceeds the final arity.
    if (!all_reps) return;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
    guarded(rep, [&] {
      Element cur = x;
      std::vector<bool> done(n, false);
      for (std::size_t i : order) {
        std::vector<Element> args;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) {
            args.push_back(qs[j]);
          } else if (done[j]) {
            for (ColourId c : k.inner[j].inputs) args.push_back(p.unit(c));
          } else {
            args.push_back(p.unit(k.outer.inputs[j]));
          }
        }
        cur = p.compose(cur, args);
        done[i] = true;
      }
      if (cur != *base) rep.fail("composition differs from iterated partial compositions at " + describe(p, k));
    });
  });

  // Sequential and parallel associativity of partial compositions on orbit
  // representatives; with the unit laws and the check above these imply
  // associativity of gamma.
  auto partial = [&](const Element& a, std::size_t i, const Element& b) {
    std::vector<Element> args;
    for (std::size_t j = 0; j < a.sig.arity(); ++j) args.push_back(j == i ? b : p.unit(a.sig.inputs[j]));
    return p.compose(a, args);
  };
  for (const auto& [xs, xids] : reps) {
    if (xs.arity() > max_arity) continue;
    for (int xi : xids)
      for (std::size_t i = 0; i < xs.arity(); ++i) {
        auto yo = by_output.find(xs.inputs[i]);
        if (yo == by_output.end()) continue;
        for (const auto& ysig : yo->second)
          for (int yi : reps.at(ysig)) {
            const Element x{xs, xi}, y{ysig, yi};
            const std::size_t m = xs.arity() + ysig.arity() - 1;
            if (m > max_arity) continue;
            std::optional<Element> a;
            guarded(rep, [&] { a = partial(x, i, y); });
            if (!a) continue;
            for (std::size_t j = 0; j < m; ++j) {
              auto zo = by_output.find(a->sig.inputs[j]);
              if (zo == by_output.end()) continue;
              for (const auto& zsig : zo->second) {
                if (m + zsig.arity() - 1 > max_arity) continue;
                for (int zi : reps.at(zsig)) {
                  const Element z{zsig, zi};
                  const std::size_t ny = ysig.arity(), nz = zsig.arity();
                  guarded(rep, [&] {
                    Element lhs = partial(*a, j, z);
                    Element rhs = j < i            ? partial(partial(x, j, z), i + nz - 1, y)
                                  : j < i + ny ? partial(x, i, partial(y, j - i, z))
                                               : partial(partial(x, j - ny + 1, z), i, y);
                    if (lhs != rhs) {
                      const auto& cs = p.colours();
                      rep.fail("associativity fails at " + to_string(xs, cs) + " " + coll.find(xs)->names[xi] + " o_" +
                               std::to_string(i + 1) + " " + to_string(ysig, cs) + " " + coll.find(ysig)->names[yi] +
                               " o_" + std::to_string(j + 1) + " " + to_string(zsig, cs) + " " +
                               coll.find(zsig)->names[zi]);
                    }
                  });
                }
              }
            }
          }
      }
  }
  return rep;
}

Report check_operad_map(const Operad& source, const Operad& target, const OperadMap& f, std::size_t max_arity) {
  Report rep;
  const auto& cs = source.colours();
  if (!(cs == target.colours())) {
    rep.fail("source and target have different colours");
    return rep;
  }
  for (const auto& [sig, c] : source.collection().components()) {
    if (sig.arity() > max_arity || c.size() == 0) continue;
    auto it = f.table.find(sig);
    const Component* tc = target.collection().find(sig);
    if (it == f.table.end() || it->second.size() != c.size() || !tc) {
      rep.fail("map undefined at " + to_string(sig, cs));
      continue;
    }
    for (int v : it->second)
      if (v < 0 || static_cast<std::size_t>(v) >= tc->size()) rep.fail("map leaves the target at " + to_string(sig, cs));
    if (!rep.ok()) continue;
    for (const auto& g : c.group().elements)
      for (std::size_t x = 0; x < c.size(); ++x) {
        ++rep.checked;
        if (it->second[c.act(static_cast<int>(x), g)] != tc->act(it->second[x], g))
          rep.fail("map is not equivariant at " + to_string(sig, cs) + " " + c.names[x]);
      }
  }
  if (!rep.ok()) return rep;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    ColourId col = static_cast<ColourId>(c);
    ++rep.checked;
    if (f.apply(source.unit(col)) != target.unit(col)) rep.fail("map does not preserve the unit of " + cs.name(col));
  }
  for_each_composition(source, max_arity, [&](const CompositionKey& k) {
    guarded(rep, [&] {
      int lhs = source.compose_stored(k);
      std::vector<int> mapped;
      for (std::size_t i = 0; i < k.inner.size(); ++i) mapped.push_back(f.table.at(k.inner[i]).at(k.ys[i]));
      int rhs = target.compose_stored(k.outer, f.table.at(k.outer).at(k.x), k.inner, mapped);
      if (f.table.at(k.result_signature()).at(lhs) != rhs) rep.fail("map does not preserve composition at " + describe(source, k));
    });
  });
  return rep;
}

}  // namespace forge
