#include <cstdio>
#include <filesystem>

#include "algebra_oracle.hpp"
#include "doctest.h"
#include "forge/io.hpp"
#include "forge/zoo.hpp"
#include "support.hpp"

using namespace forge;
using namespace forge::testing;
using io::Document;
using io::Json;

namespace {

Document round_trip(const Document& d) { return io::parse(io::dump(d)); }

std::string schema_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

// Same collection, units and compositions.
void check_same_operad(const Operad& a, const Operad& b) {
  CHECK(a.name() == b.name());
  CHECK(a.arity_bound() == b.arity_bound());
  CHECK(a.collection() == b.collection());
  CHECK(a.units() == b.units());
  std::size_t compared = 0;
  for_each_composition(a, a.arity_bound(), [&](const CompositionKey& k) {
    int x = -1, y = -1;
    try {
      x = a.compose_stored(k);
    } catch (const TruncationOverflow&) {
    }
    try {
      y = b.compose_stored(k);
    } catch (const TruncationOverflow&) {
    }
    ++compared;
    if (x != y) CHECK(x == y);
  });
  CHECK(compared > 0);
}

}  // namespace

TEST_CASE("every zoo operad round-trips") {
  const FiniteCategory square = FiniteCategory::poset({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  std::vector<Operad> zoo{make_ass(3),
                          make_lmod(3),
                          make_rmod(3),
                          make_bimod(3),
                          make_mod_p(make_ass(3), 3),
                          make_morphism_operad(make_ass(3), 2, 3),
                          make_cat_o({"x", "y"}, 3),
                          make_diag(square),
                          make_gr(make_ass(3), 2, 3).operad,
                          make_s(2, 2).operad,
                          make_s_plus(2, 2).operad,
                          make_s0(2, 2).operad,
                          w_operad(make_ass(2), Segment::boolean(), 2, 2).operad};
  for (const auto& p : zoo) {
    CAPTURE(p.name());
    const Document d{"operad", io::encode(p)};
    const Document back = round_trip(d);
    CHECK(back == d);
    const Operad q = io::decode_operad(back.payload);
    check_same_operad(p, q);
    CHECK(io::dump({"operad", io::encode(q)}) == io::dump(d));
  }
}

TEST_CASE("other kinds round-trip") {
  const FiniteCategory square = FiniteCategory::poset({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const Segment h = Segment::chain({"0", "h", "1"});

  SUBCASE("files on disk") {
    const auto path = (std::filesystem::temp_directory_path() / "forge_io_test.json").string();
    const Document d{"segment", io::encode(h)};
    io::save(d, path);
    CHECK(io::load(path) == d);
    std::remove(path.c_str());
  }

  SUBCASE("algebras and maps") {
    NonSymmetricOperad ns = ns_ass(3);
    Operad ass = symmetrize(ns);
    Algebra a = monoid_algebra(ass, ns, transformation_monoid(), 3);
    a.actions.rbegin()->second[0][0] = -1;  // outside a truncation
    CHECK(io::decode_algebra(round_trip({"algebra", io::encode(a)}).payload) == a);
    FreeAlgebra f = free_algebra(ass, {{"x"}}, 3);
    CHECK(io::decode_algebra(round_trip({"algebra", io::encode(f.algebra)}).payload) == f.algebra);
    AlgebraMap m{{{0, 1, 1, 0}}};
    CHECK(io::decode_algebra_map(round_trip({"algebra_map", io::encode(m, ass.colours())}).payload, ass.colours())
              .components == m.components);
    const WOperad w = w_operad(ass, h, 3, 2);
    const OperadMap eps = epsilon_map(w, ass);
    CHECK(io::decode_operad_map(round_trip({"operad_map", io::encode(eps, ass.colours())}).payload, ass.colours()).table ==
          eps.table);
  }

  SUBCASE("segments, categories, strings and reports") {
    const Segment h2 = io::decode_segment(round_trip({"segment", io::encode(h)}).payload);
    CHECK(h2.names == h.names);
    CHECK(h2.join == h.join);
    CHECK(h2.zero == h.zero);
    CHECK(h2.one == h.one);

    const FiniteCategory c = io::decode_category(round_trip({"category", io::encode(square)}).payload);
    CHECK(c.objects == square.objects);
    CHECK(c.hom == square.hom);
    CHECK(c.identity == square.identity);
    CHECK(c.composition == square.composition);
    const FiniteCategory short_form =
        io::decode_category(Json{{"objects", {"a", "b", "c", "d"}}, {"less", Json::array({Json::array({"a", "b"}), Json::array({"a", "c"}),
                                                                              Json::array({"b", "d"}), Json::array({"c", "d"})})}});
    CHECK(short_form.composition == square.composition);

    const CoherentString s{{0, 1, 3}, {0, 0}, {1}};
    CHECK(io::decode_coherent_string(round_trip({"coherent_string", io::encode(s, square, h)}).payload, square, h) == s);

    Report r;
    r.checked = 7;
    r.skipped = 2;
    r.fail("something");
    const Report r2 = io::decode_report(round_trip({"report", io::encode(r)}).payload);
    CHECK(r2.violations == r.violations);
    CHECK(r2.checked == 7);
    CHECK(r2.skipped == 2);
  }

  SUBCASE("resolution elements") {
    Operad lmod = make_lmod(3);
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
      const WElement w = random_w(rng, lmod, h, 4);
      CHECK(io::decode_w_element(round_trip({"w_element", io::encode(w, lmod, h)}).payload, lmod, h) == w);
    }
  }
}

TEST_CASE("schema errors") {
  NonSymmetricOperad ns = ns_ass(2);
  Operad ass = symmetrize(ns);
  const Algebra a = monoid_algebra(ass, ns, all_monoids(2)[1], 2);
  const Json good = io::encode(a);

  SUBCASE("malformed action table names the signature") {
    Json bad = good;
    bad["actions"][2]["tables"][0].erase(0);
    const std::string msg = schema_message([&] { io::decode_algebra(bad); });
    CHECK(msg.find("(*,*;*)") != std::string::npos);
    CHECK(msg.find("algebra.actions[2].tables[0]") != std::string::npos);
    Json out_of_range = good;
    out_of_range["actions"][1]["tables"][0][0] = 5;
    CHECK(schema_message([&] { io::decode_algebra(out_of_range); }).find("leaves the carrier") != std::string::npos);
  }

  SUBCASE("kinds and versions") {
    CHECK(schema_message([] { io::parse(R"({"kind": "sheaf", "version": 1, "payload": {}})"); }).find("unknown kind") !=
          std::string::npos);
    CHECK(schema_message([] { io::parse(R"({"kind": "segment", "version": 9, "payload": {}})"); }).find("version 9") !=
          std::string::npos);
    CHECK(schema_message([] { io::parse("{\"kind\": \n \"segment\",, }"); }).find("line 2") != std::string::npos);
    CHECK(schema_message([] { io::expect_kind({"segment", {}}, "operad"); }).find("expected 'operad'") != std::string::npos);
    CHECK(schema_message([] { io::load("/nonexistent/forge.json"); }).find("cannot read") != std::string::npos);
  }

  SUBCASE("unresolved references") {
    Json op = io::encode(ass);
    Json unknown_colour = op;
    unknown_colour["units"] = Json{{"q", "mu1"}};
    CHECK(schema_message([&] { io::decode_operad(unknown_colour); }).find("missing field '*'") != std::string::npos);
    Json unknown_element = op;
    unknown_element["compositions"][0]["result"] = "nu";
    CHECK(schema_message([&] { io::decode_operad(unknown_element); }).find("unknown element") != std::string::npos);
    Json bad_sig = op;
    bad_sig["collection"]["components"][0]["signature"]["output"] = "q";
    CHECK(schema_message([&] { io::decode_operad(bad_sig); }).find("unknown colour 'q'") != std::string::npos);
    Json unsorted = io::encode(make_lmod(2).collection());
    for (auto& c : unsorted["components"])
      if (c["signature"]["inputs"].size() == 2) c["signature"]["inputs"] = {"m", "a"};
    CHECK(schema_message([&] { io::decode_collection(unsorted); }).find("not ordered") != std::string::npos);
  }

  SUBCASE("invalid actions are refused") {
    Collection c(ColourSet({"*"}));
    Component comp = trivial_component({{0, 0}, 0}, {"p", "q"});
    comp.action[1] = {1, 0};
    c.set(comp);
    Json j = io::encode(c);
    REQUIRE(j["components"][0].contains("action"));
    CHECK(io::decode_collection(j) == c);
    j["components"][0]["action"][0]["images"] = {0, 0};
    CHECK(schema_message([&] { io::decode_collection(j); }).find("collection.components[0]") != std::string::npos);
  }
}
