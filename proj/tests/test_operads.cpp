#include "doctest.h"
#include "forge/operads.hpp"
#include "support.hpp"

using namespace forge;

namespace {

// Value of an element of End at the input tuple z, read straight off its
// stored function table: the stored element is x . rho, so x(z) = stored(z . rho).
int evaluate(const std::vector<std::size_t>& sizes, const Element& e, const std::vector<int>& z) {
  auto s = sort_signature(e.sig);
  auto table = decode_function(sizes, s.ordered, e.id);
  auto y = permute(z, s.rho);
  std::size_t k = 0;
  for (std::size_t i = 0; i < y.size(); ++i) k = k * sizes[s.ordered.inputs[i]] + y[i];
  return table[k];
}

std::vector<std::vector<int>> all_inputs(const std::vector<std::size_t>& sizes, const Signature& sig) {
  std::vector<std::vector<int>> out{{}};
  for (ColourId c : sig.inputs) {
    std::vector<std::vector<int>> next;
    for (auto& t : out)
      for (std::size_t v = 0; v < sizes[c]; ++v) {
        next.push_back(t);
        next.back().push_back(static_cast<int>(v));
      }
    out = std::move(next);
  }
  return out;
}

NonSymmetricOperad ns_ass(std::size_t bound) {
  NonSymmetricOperad p;
  p.name = "Ass";
  p.colours = ColourSet::numbered(1);
  for (std::size_t n = 0; n <= bound; ++n) p.components[{std::vector<ColourId>(n, 0), 0}] = {"m" + std::to_string(n)};
  p.units = {0};
  p.compose = [](const Signature&, int, std::span<const Signature>, std::span<const int>) { return 0; };
  p.arity_bound = bound;
  return p;
}

}  // namespace

TEST_CASE("endomorphism operad counts and unit") {
  ColourSet cs = ColourSet::numbered(3);
  std::vector<std::size_t> sizes{2, 3, 2};
  Operad end = endomorphism_operad(cs, sizes, 2);
  CHECK(end.size({{0, 1}, 2}) == 64);  // 2^(2*3)
  CHECK(end.size({{}, 1}) == 3);
  Element u = end.unit(1);
  for (int v = 0; v < 3; ++v) CHECK(evaluate(sizes, u, {v}) == v);
}

TEST_CASE("endomorphism operads satisfy the axioms") {
  // Exhaustive checks grow like |A|^(|A|^n); these are the sizes that stay quick.
  Operad a = endomorphism_operad(ColourSet::numbered(1), {2}, 2);
  auto rep = check_operad(a, 2);
  CHECK(rep.ok());
  CHECK(rep.checked > 1000);
  Operad b = endomorphism_operad(ColourSet::numbered(1), {3}, 1);
  CHECK(check_operad(b, 1).ok());
  Operad c = endomorphism_operad(ColourSet::numbered(2), {2, 1}, 2);
  CHECK(check_operad(c, 2).ok());
}

TEST_CASE("full-form composition agrees with function substitution") {
  ColourSet cs = ColourSet::numbered(2);
  // Unequal carrier sizes catch argument-order mistakes.
  std::vector<std::size_t> sizes{2, 3};
  Operad end = endomorphism_operad(cs, sizes, 2);
  testing::Rng rng(12);
  std::uniform_int_distribution<int> colour(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = rng() % 3;
    Signature outer{{}, colour(rng)};
    for (std::size_t i = 0; i < n; ++i) outer.inputs.push_back(colour(rng));
    std::size_t budget = 2;
    std::vector<Element> qs;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t k = rng() % (budget + 1);
      budget -= k;
      Signature s{{}, outer.inputs[i]};
      for (std::size_t j = 0; j < k; ++j) s.inputs.push_back(colour(rng));
      qs.push_back({s, static_cast<int>(rng() % end.size(s))});
    }
    Element p{outer, static_cast<int>(rng() % end.size(outer))};
    Element r = end.compose(p, qs);
    for (const auto& z : all_inputs(sizes, r.sig)) {
      std::vector<int> args;
      std::size_t pos = 0;
      for (const auto& q : qs) {
        std::vector<int> part(z.begin() + pos, z.begin() + pos + q.sig.arity());
        args.push_back(evaluate(sizes, q, part));
        pos += q.sig.arity();
      }
      CHECK(evaluate(sizes, r, z) == evaluate(sizes, p, args));
    }
    // Acting then evaluating permutes the arguments.
    if (n >= 2) {
      Permutation s = testing::random_permutation(n, rng);
      Element ps = end.act(p, s);
      for (const auto& y : all_inputs(sizes, ps.sig)) {
        std::vector<int> x(n);
        for (std::size_t i = 0; i < n; ++i) x[s(i)] = y[i];
        CHECK(evaluate(sizes, ps, y) == evaluate(sizes, p, x));
      }
    }
  }
}

TEST_CASE("symmetrized associative operad") {
  Operad ass = symmetrize(ns_ass(4));
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    CHECK(ass.size({std::vector<ColourId>(n, 0), 0}) == fact);
  }
  CHECK(check_non_symmetric(ns_ass(4), 4).ok());
  auto rep = check_operad(ass, 4);
  CHECK(rep.ok());
  for (auto& v : rep.violations) MESSAGE(v);

  // A unary-only operad keeps its component sizes.
  NonSymmetricOperad cat;
  cat.colours = ColourSet::numbered(2);
  cat.components[{{0}, 0}] = {"id0"};
  cat.components[{{1}, 1}] = {"id1"};
  cat.components[{{0}, 1}] = {"f", "g"};
  cat.units = {0, 0};
  cat.compose = [](const Signature& outer, int x, std::span<const Signature> inner, std::span<const int> ys) {
    return outer.inputs[0] == outer.output ? ys[0] : (inner[0].inputs[0] == inner[0].output ? x : -1);
  };
  cat.arity_bound = 1;
  Operad sym = symmetrize(cat);
  CHECK(sym.size({{0}, 1}) == 2);
  CHECK(check_operad(sym, 1).ok());
}

TEST_CASE("fault injection is reported at the corrupted signature") {
  auto m = materialize(symmetrize(ns_ass(3)), 3);
  REQUIRE(check_operad(m.operad, 3).ok());
  // Corrupt one binary-by-unary composition.
  CompositionKey key{{{0, 0}, 0}, 0, {{{0}, 0}, {{0, 0}, 0}}, {0, 0}};
  int& entry = m.table->at(key);
  entry = (entry + 1) % 6;
  auto rep = check_operad(m.operad, 3);
  REQUIRE_FALSE(rep.ok());
  bool named = false;
  for (auto& v : rep.violations) named = named || v.find("(0,0;0)") != std::string::npos;
  CHECK(named);

  // Corrupted action table.
  auto m2 = materialize(symmetrize(ns_ass(3)), 3);
  auto& row = m2.operad.mutable_collection().find_mutable({{0, 0, 0}, 0})->action[1];
  std::swap(row[0], row[1]);
  CHECK_FALSE(check_operad(m2.operad, 3).ok());
}

TEST_CASE("operad maps") {
  Operad ass = symmetrize(ns_ass(3));
  OperadMap id;
  for (auto& [sig, c] : ass.collection().components()) {
    std::vector<int> v(c.size());
    std::iota(v.begin(), v.end(), 0);
    id.table[sig] = v;
  }
  CHECK(check_operad_map(ass, ass, id, 3).ok());
  auto bad = id;
  std::swap(bad.table.at({{0, 0}, 0})[0], bad.table.at({{0, 0}, 0})[1]);
  CHECK_FALSE(check_operad_map(ass, ass, bad, 3).ok());
}

TEST_CASE("random monoid operads satisfy the axioms") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Operad p = testing::random_monoid_operad(rng, ColourSet::numbered(2), 3);
    CHECK(check_operad(p, 3).ok());
  }
}

TEST_CASE("pullback along colour maps") {
  Operad ass = symmetrize(ns_ass(3));
  ColourSet two = ColourSet::numbered(2);
  Operad pulled = pullback_colours({0, 0}, two, ass);
  CHECK(pulled.size({{0, 1}, 1}) == 2);
  CHECK(pulled.size({{0, 0, 1}, 0}) == 6);
  CHECK(check_operad(pulled, 3).ok());

  Operad same = pullback_colours({0}, ColourSet::numbered(1), ass);
  CHECK(same.collection() == ass.collection());

  // (alpha beta)^* = beta^* alpha^* on random operads: identical components
  // and composition tables.
  testing::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Operad p = testing::random_monoid_operad(rng, two, 3);
    ColourMap alpha{static_cast<ColourId>(rng() % 2), static_cast<ColourId>(rng() % 2)};
    ColourMap beta{static_cast<ColourId>(rng() % 2), static_cast<ColourId>(rng() % 2), static_cast<ColourId>(rng() % 2)};
    ColourMap ab(3);
    for (int e = 0; e < 3; ++e) ab[e] = alpha[beta[e]];
    ColourSet three = ColourSet::numbered(3);
    Operad lhs = pullback_colours(ab, three, p);
    Operad rhs = pullback_colours(beta, three, pullback_colours(alpha, two, p));
    CHECK(lhs.collection() == rhs.collection());
    CHECK(*materialize(lhs, 3).table == *materialize(rhs, 3).table);
    CHECK(check_operad(lhs, 2).ok());
  }
}

TEST_CASE("pushforward along injective colour maps") {
  Operad ass = symmetrize(ns_ass(3));
  ColourSet two = ColourSet::lexicographic({"a", "b"});
  Operad pushed = pushforward_colours_injective({0}, two, ass);
  CHECK(pushed.size({{1}, 1}) == 1);
  CHECK(pushed.size({{0, 1}, 1}) == 0);
  CHECK(pushed.size({{0, 0}, 0}) == 2);
  CHECK(check_operad(pushed, 3).ok());
  CHECK_THROWS_AS(pushforward_colours_injective({0, 0}, two, pullback_colours({0, 0}, two, ass)), InvalidArgument);

  Operad same = pushforward_colours_injective({0}, ColourSet::numbered(1), ass);
  CHECK(same.collection() == ass.collection());

  // (alpha beta)_! = alpha_! beta_! for injective maps.
  testing::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Operad p = testing::random_monoid_operad(rng, ColourSet::numbered(1), 3);
    ColourMap beta{static_cast<ColourId>(rng() % 2)};
    ColourMap alpha{2, static_cast<ColourId>(rng() % 2)};
    ColourMap ab{alpha[beta[0]]};
    Operad lhs = pushforward_colours_injective(ab, ColourSet::numbered(3), p);
    Operad rhs = pushforward_colours_injective(alpha, ColourSet::numbered(3),
                                               pushforward_colours_injective(beta, two, p));
    CHECK(find_equivariant_bijection(lhs.collection(), rhs.collection(), 3).has_value());
    CHECK(*materialize(lhs, 3).table == *materialize(rhs, 3).table);
  }
}
