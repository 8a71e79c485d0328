#include "forge/zoo.hpp"

#include <algorithm>

namespace forge {

namespace {

int zero_compose(const Signature&, int, std::span<const Signature>, std::span<const int>) { return 0; }

// A one-element-per-component operad on the signatures admitted by `keep`,
// which must be closed under composition.
NonSymmetricOperad pattern_operad(std::string name, ColourSet colours, std::size_t max_arity,
                                  const std::function<bool(const Signature&)>& keep, const std::string& prefix) {
  NonSymmetricOperad p;
  p.name = std::move(name);
  p.colours = std::move(colours);
  const int k = static_cast<int>(p.colours.size());
  for (std::size_t n = 0; n <= max_arity; ++n) {
    std::vector<ColourId> in(n, 0);
    for (;;) {
      for (ColourId c = 0; c < k; ++c) {
        Signature sig{in, c};
        if (keep(sig)) p.components[sig] = {prefix + std::to_string(n)};
      }
      std::size_t i = 0;
      while (i < n && ++in[i] == k) in[i++] = 0;
      if (i == n) break;
    }
  }
  p.units.assign(k, 0);
  p.compose = zero_compose;
  p.arity_bound = max_arity;
  return p;
}

bool all_of(const std::vector<ColourId>& v, std::size_t from, std::size_t to, ColourId c) {
  for (std::size_t i = from; i < to; ++i)
    if (v[i] != c) return false;
  return true;
}

}  // namespace

NonSymmetricOperad ns_ass(std::size_t max_arity) {
  return pattern_operad("Ass", ColourSet({"*"}), max_arity, [](const Signature&) { return true; }, "mu");
}

NonSymmetricOperad ns_lmod(std::size_t max_arity) {
  // a = 0, m = 1
  return pattern_operad("LMod", ColourSet({"a", "m"}), max_arity, [](const Signature& s) {
    const auto& in = s.inputs;
    if (s.output == 0) return all_of(in, 0, in.size(), 0);
    return !in.empty() && in.back() == 1 && all_of(in, 0, in.size() - 1, 0);
  }, "l");
}

NonSymmetricOperad ns_rmod(std::size_t max_arity) {
  return pattern_operad("RMod", ColourSet({"a", "m"}), max_arity, [](const Signature& s) {
    const auto& in = s.inputs;
    if (s.output == 0) return all_of(in, 0, in.size(), 0);
    return !in.empty() && in.front() == 1 && all_of(in, 1, in.size(), 0);
  }, "r");
}

NonSymmetricOperad ns_bimod(std::size_t max_arity) {
  // a = 0 acts on the left of m = 1, b = 2 on the right.
  return pattern_operad("BiMod", ColourSet({"a", "m", "b"}), max_arity, [](const Signature& s) {
    const auto& in = s.inputs;
    if (s.output != 1) return all_of(in, 0, in.size(), s.output);
    auto m = std::find(in.begin(), in.end(), 1);
    if (m == in.end()) return false;
    std::size_t at = static_cast<std::size_t>(m - in.begin());
    return all_of(in, 0, at, 0) && all_of(in, at + 1, in.size(), 2);
  }, "b");
}

NonSymmetricOperad ns_cat_o(const std::vector<std::string>& objects, std::size_t max_arity) {
  const int k = static_cast<int>(objects.size());
  if (k == 0) throw InvalidArgument("Cat_O needs at least one object");
  std::vector<std::string> names;
  for (const auto& x : objects)
    for (const auto& y : objects) names.push_back(x + ">" + y);
  auto src = [k](ColourId c) { return c / k; };
  auto tgt = [k](ColourId c) { return c % k; };
  return pattern_operad("Cat_O", ColourSet(names), max_arity, [=](const Signature& s) {
    if (s.inputs.empty()) return src(s.output) == tgt(s.output);
    for (std::size_t i = 0; i + 1 < s.inputs.size(); ++i)
      if (tgt(s.inputs[i]) != src(s.inputs[i + 1])) return false;
    return src(s.output) == src(s.inputs.front()) && tgt(s.output) == tgt(s.inputs.back());
  }, "c");
}

NonSymmetricOperad ns_diag(const FiniteCategory& c) {
  Report valid = c.validate();
  if (!valid.ok()) throw InvalidArgument("not a category: " + valid.violations.front());
  NonSymmetricOperad p;
  p.name = "Diag";
  p.colours = c.colours();
  for (const auto& [ab, arrows] : c.hom)
    if (!arrows.empty()) p.components[{{ab.first}, ab.second}] = arrows;
  p.units = c.identity;
  p.compose = [c](const Signature& outer, int g, std::span<const Signature> inner, std::span<const int> ys) {
    if (inner.size() != 1) throw ArityMismatch("Diag is unary");
    return c.compose(inner[0].inputs[0], outer.inputs[0], outer.output, ys[0], g);
  };
  p.arity_bound = 1;
  return p;
}

Operad make_ass(std::size_t max_arity) { return symmetrize(ns_ass(max_arity)); }
Operad make_lmod(std::size_t max_arity) { return symmetrize(ns_lmod(max_arity)); }
Operad make_rmod(std::size_t max_arity) { return symmetrize(ns_rmod(max_arity)); }
Operad make_bimod(std::size_t max_arity) { return symmetrize(ns_bimod(max_arity)); }
Operad make_cat_o(const std::vector<std::string>& objects, std::size_t max_arity) {
  return symmetrize(ns_cat_o(objects, max_arity));
}
Operad make_diag(const FiniteCategory& c) { return symmetrize(ns_diag(c)); }

namespace {

Operad copy_onto_pattern(const Operad& p, const ColourSet& colours, std::size_t max_arity,
                         const std::function<bool(const Signature&)>& keep, std::string name) {
  if (p.colours().size() != 1) throw ColourMismatch(name + " needs an uncoloured operad");
  if (p.arity_bound() < max_arity) throw InvalidArgument(name + ": the operad is materialized below the requested arity");
  ColourMap alpha(colours.size(), 0);
  Operad pulled = pullback_colours(alpha, colours, p);
  auto within = [keep, max_arity](const Signature& s) { return s.arity() <= max_arity && keep(s); };
  Operad r = restrict_to_predicate(pulled, within, name);
  return Operad(std::move(name), r.collection(), r.units(), r.compose_fn(), max_arity);
}

}  // namespace

Operad make_mod_p(const Operad& p, std::size_t max_arity) {
  return copy_onto_pattern(p, ColourSet({"a", "m"}), max_arity, [](const Signature& s) {
    auto ms = std::count(s.inputs.begin(), s.inputs.end(), 1);
    return s.output == 0 ? ms == 0 : ms == 1;
  }, "Mod(" + p.name() + ")");
}

Operad make_morphism_operad(const Operad& p, int n, std::size_t max_arity) {
  if (n < 0) throw InvalidArgument("P^n needs n >= 0");
  return copy_onto_pattern(p, ColourSet::numbered(n + 1), max_arity, [](const Signature& s) {
    // The empty maximum is -1, below every colour.
    return std::all_of(s.inputs.begin(), s.inputs.end(), [&](ColourId c) { return c <= s.output; });
  }, p.name() + "^" + std::to_string(n));
}

GradedOperad make_gr(const Operad& p, int max_grade, std::size_t max_arity) {
  if (max_grade < 0) throw InvalidArgument("Gr needs a non-negative grade bound");
  if (p.colours().size() != 1) throw ColourMismatch("Gr needs an uncoloured operad");
  ColourSet grades = ColourSet::numbered(max_grade + 1);
  GradedOperad g;
  g.alpha.assign(grades.size(), 0);
  g.pulled = pullback_colours(g.alpha, grades, p);
  g.operad = copy_onto_pattern(p, grades, max_arity, [](const Signature& s) {
    int sum = 0;
    for (ColourId c : s.inputs) sum += c;
    return sum == s.output;
  }, "Gr(" + p.name() + ")");
  for (const auto& [sig, comp] : g.operad.collection().components()) {
    auto& row = g.inclusion.table[sig];
    for (std::size_t i = 0; i < comp.size(); ++i) row.push_back(static_cast<int>(i));
  }
  return g;
}

}  // namespace forge
