#include "box_oracle.hpp"
#include "doctest.h"
#include "forge/box_product.hpp"
#include "forge/collections.hpp"
#include "support.hpp"

using namespace forge;

namespace {

// X(a,a;a) is the regular Sigma_2-set {b, b.s}, X(a;a) = {e}.
Collection regular_binary() {
  Collection x(ColourSet::numbered(1));
  x.set({{0}, 0}, {"e"});
  Component c;
  c.sig = {{0, 0}, 0};
  c.names = {"b", "b.s"};
  c.action = {{0, 1}, {1, 0}};
  x.set(std::move(c));
  return x;
}

}  // namespace

TEST_CASE("random components are valid actions") {
  testing::Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = testing::random_collection(ColourSet::numbered(2), 3, 0.5, 3, rng, "x");
    for (auto& [sig, c] : x.components()) CHECK_NOTHROW(c.validate());
  }
}

TEST_CASE("expand and restrict are inverse") {
  testing::Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = testing::random_collection(ColourSet::numbered(2), 3, 0.4, 3, rng, "x");
    FullCollection f = expand(x, 3);
    CHECK(check_full(f).empty());
    CHECK(restrict(f) == x);
  }
  // Ordered signature: identity transport; swapped: value of the sorted one.
  auto x = regular_binary();
  FullCollection f = expand(x, 2);
  CHECK(f.transport.at({Signature{{0, 0}, 0}, Permutation{0, 1}}) == std::vector<int>{0, 1});
  Collection two(ColourSet::numbered(2));
  two.set({{0, 1}, 0}, {"p", "q"});
  FullCollection g = expand(two, 2);
  CHECK(g.values.at({{1, 0}, 0}) == std::vector<std::string>{"p", "q"});
  CHECK(act(two, Element{Signature{{1, 0}, 0}, 1}, Permutation{1, 0}) == Element{Signature{{0, 1}, 0}, 1});
}

TEST_CASE("unit collection") {
  auto u = unit_collection(ColourSet::numbered(2));
  CHECK(u.collection.size({{0}, 0}) == 1);
  CHECK(u.collection.size({{1}, 1}) == 1);
  CHECK(u.collection.size({{0}, 1}) == 0);
  CHECK(u.collection.size({{0, 1}, 0}) == 0);
  auto uu = box_product(u.collection, u.collection, 3);
  CHECK(find_equivariant_bijection(uu.result, u.collection, 3).has_value());
}

TEST_CASE("pointwise tensor") {
  testing::Rng rng(4);
  ColourSet cs = ColourSet::numbered(2);
  Collection ones(cs);
  for (const auto& sig : ordered_signatures(cs, 3)) ones.set(sig, {"*"});
  for (int trial = 0; trial < 30; ++trial) {
    auto x = testing::random_collection(cs, 3, 0.5, 3, rng, "x");
    auto y = testing::random_collection(cs, 3, 0.5, 3, rng, "y");
    auto t = pointwise_tensor(x, y);
    for (const auto& sig : ordered_signatures(cs, 3)) CHECK(t.size(sig) == x.size(sig) * y.size(sig));
    for (auto& [sig, c] : t.components()) {
      CHECK_NOTHROW(c.validate());
      const Component& a = *x.find(sig);
      const Component& b = *y.find(sig);
      for (std::size_t g = 0; g < c.action.size(); ++g)
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j)
            CHECK(c.action[g][i * b.size() + j] ==
                  static_cast<int>(a.action[g][i] * b.size() + b.action[g][j]));
    }
    CHECK(find_equivariant_bijection(pointwise_tensor(x, ones), x, 3).has_value());
  }
}

TEST_CASE("small box products") {
  Collection e(ColourSet::numbered(1));
  e.set({{0}, 0}, {"e"});
  CHECK(box_product(e, e, 3).result.size({{0}, 0}) == 1);

  auto x = regular_binary();
  auto xx = box_product(x, x, 3);
  CHECK(xx.result.size({{0, 0, 0}, 0}) == 12);
  auto oracle = testing::familiar_box(x, x, 3);
  CHECK(oracle.size({{0, 0, 0}, 0}) == 12);
  CHECK(find_equivariant_bijection(xx.result, oracle, 3).has_value());
  for (auto& [sig, c] : xx.result.components()) CHECK_NOTHROW(c.validate());
}

TEST_CASE("box product agrees with the all-tuples form") {
  testing::Rng rng(6);
  ColourSet cs = ColourSet::numbered(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = testing::random_collection(cs, 2, 0.4, 3, rng, "x");
    auto y = testing::random_collection(cs, 2, 0.4, 3, rng, "y");
    auto ordered = box_product(x, y, 3).result;
    auto familiar = testing::familiar_box(x, y, 3);
    for (auto& [sig, c] : ordered.components()) CHECK_NOTHROW(c.validate());
    CHECK(find_equivariant_bijection(ordered, familiar, 3).has_value());
  }
}

TEST_CASE("box product unit and associativity") {
  testing::Rng rng(8);
  ColourSet cs = ColourSet::numbered(2);
  auto u = unit_collection(cs).collection;
  for (int trial = 0; trial < 10; ++trial) {
    auto x = testing::random_collection(cs, 2, 0.4, 3, rng, "x");
    auto y = testing::random_collection(cs, 2, 0.4, 2, rng, "y");
    auto z = testing::random_collection(cs, 2, 0.4, 2, rng, "z");
    CHECK(find_equivariant_bijection(box_product(u, x, 3).result, x, 3).has_value());
    CHECK(find_equivariant_bijection(box_product(x, u, 3).result, x, 3).has_value());
    auto left = box_product(box_product(x, y, 4).result, z, 3).result;
    auto right = box_product(x, box_product(y, z, 3).result, 3).result;
    CHECK(find_equivariant_bijection(left, right, 3).has_value());
  }
}
