#include <map>
#include <set>

#include "doctest.h"
#include "forge/colours.hpp"
#include "support.hpp"

using namespace forge;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("stabilizer subgroups of small signatures") {
  CHECK(stabilizer_subgroup({{0, 1, 2}, 0}).size() == 1);
  CHECK(stabilizer_subgroup({{0, 0, 0}, 0}).size() == 6);
  auto s = stabilizer_subgroup({{0, 0, 1}, 2});
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Permutation{0, 1, 2});
  CHECK(s[1] == Permutation{1, 0, 2});
}

TEST_CASE("stabilizer order is the product of multiplicity factorials") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (auto& tuple : all_tuples(3, n)) {
      if (!std::is_sorted(tuple.begin(), tuple.end())) continue;
      std::map<ColourId, std::size_t> mult;
      for (ColourId c : tuple) ++mult[c];
      std::size_t expected = 1;
      for (auto [c, k] : mult) expected *= factorial(k);
      auto group = stabilizer_subgroup({tuple, 0});
      CHECK(group.size() == expected);
      // Closed under composition and inverse.
      std::set<Permutation> members(group.begin(), group.end());
      CHECK(members.count(Permutation::identity(n)) == 1);
      if (group.size() <= 24)
        for (const auto& a : group) {
          CHECK(members.count(a.inverse()) == 1);
          for (const auto& b : group) CHECK(members.count(a * b) == 1);
        }
    }
  }
}

TEST_CASE("sort_signature is the stable sort") {
  auto r = sort_signature({{1, 0}, 2});
  CHECK(r.ordered == Signature{{0, 1}, 2});
  CHECK(r.rho == Permutation{1, 0});

  r = sort_signature({{0, 0}, 2});
  CHECK(r.rho.is_identity());

  // (b,a,a;c): positions (1,2,3) -> (2,3,1) in one-based notation.
  r = sort_signature({{1, 0, 0}, 2});
  CHECK(r.ordered == Signature{{0, 0, 1}, 2});
  CHECK(r.rho == Permutation::from_one_based({2, 3, 1}));
}

TEST_CASE("sort_signature agrees with permuting by rho on random tuples") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = rng() % 7;
    std::vector<ColourId> ins(n);
    for (auto& c : ins) c = static_cast<ColourId>(rng() % 3);
    Signature sig{ins, 0};
    auto r = sort_signature(sig);
    CHECK(r.ordered.is_ordered());
    CHECK(sig.permuted(r.rho) == r.ordered);
    // Stability: equal colours keep their relative order.
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (r.ordered.inputs[i] == r.ordered.inputs[i + 1]) CHECK(r.rho(i) < r.rho(i + 1));
  }
}

TEST_CASE("permutation algebra") {
  Permutation a{1, 2, 0}, b{0, 2, 1};
  CHECK((a * b)(1) == a(b(1)));
  CHECK((a * a.inverse()).is_identity());
  std::vector<int> seq{10, 20, 30};
  // Right action: permuting by a*b equals permuting by a then by b.
  CHECK(permute(seq, a * b) == permute(permute(seq, a), b));

  std::vector<Permutation> parts{Permutation{1, 0}, Permutation{0}};
  CHECK(direct_sum(parts) == Permutation{1, 0, 2});

  std::vector<std::size_t> sizes{2, 1};
  std::vector<int> blocks{1, 2, 3};  // blocks [1,2] and [3]
  auto bp = block_permutation(Permutation{1, 0}, sizes);
  CHECK(permute(blocks, bp) == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(Permutation({0, 0}), InvalidArgument);
}

TEST_CASE("colour sets") {
  auto cs = ColourSet::lexicographic({"b", "a"});
  CHECK(cs.index_of("a") == 0);
  CHECK_THROWS_AS(cs.index_of("z"), ColourMismatch);
  CHECK_THROWS_AS(ColourSet({"a", "a"}), InvalidArgument);
  CHECK(ordered_signatures(cs, 1).size() == 2 + 4);
}
