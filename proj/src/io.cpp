#include "forge/io.hpp"

#include <fstream>
#include <sstream>

namespace forge::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

std::vector<std::string> names(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(text(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> ints(const Json& j, const std::string& where) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i)
    out.push_back(static_cast<int>(integer(j[i], where + "[" + std::to_string(i) + "]")));
  return out;
}

ColourId colour(const std::string& name, const ColourSet& cs, const std::string& where) {
  if (!cs.contains(name)) fail(where, "unknown colour '" + name + "'");
  return cs.index_of(name);
}

int index_in(const std::vector<std::string>& list, const std::string& name, const std::string& where,
             const std::string& what) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == name) return static_cast<int>(i);
  fail(where, "unknown " + what + " '" + name + "'");
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

Signature ordered_signature(const Json& j, const ColourSet& cs, const std::string& where) {
  Signature s = decode_signature(j, cs);
  if (!sort_signature(s).rho.is_identity()) fail(where, "signature " + to_string(s, cs) + " is not ordered");
  return s;
}

Json element_ref(const Collection& c, const Signature& sig, int id) {
  const Component* comp = component_at(c, sig);
  return Json{{"signature", encode(sig, c.colours())}, {"element", comp->names.at(id)}};
}

int element_id(const Collection& c, const Signature& sig, const Json& name, const std::string& where) {
  const Component* comp = component_at(c, sig);
  if (!comp) fail(where, "no elements at " + to_string(sig, c.colours()));
  return index_in(comp->names, text(name, where), where, "element at " + to_string(sig, c.colours()));
}

template <class F>
auto guard(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

}  // namespace

const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> kinds{"algebra",  "algebra_map", "category", "coherent_string", "collection",
                                              "colour_set", "operad", "operad_map", "report", "segment",
                                              "w_element"};
  return kinds;
}

std::string dump(const Document& doc) {
  Json j{{"kind", doc.kind}, {"version", kFormatVersion}, {"payload", doc.payload}};
  return j.dump(2) + "\n";
}

Document parse(const std::string& body) {
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  const std::string kind = text(field(j, "kind", "document"), "document.kind");
  bool known = false;
  for (const auto& k : known_kinds()) known = known || k == kind;
  if (!known) fail("document.kind", "unknown kind '" + kind + "'");
  const long version = integer(field(j, "version", "document"), "document.version");
  if (version != kFormatVersion)
    fail("document.version", "version " + std::to_string(version) + " is not supported (expected " +
                                 std::to_string(kFormatVersion) + ")");
  return {kind, field(j, "payload", "document")};
}

Document load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void save(const Document& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << dump(doc);
  if (!out) throw SchemaError("failed writing " + path);
}

const Json& expect_kind(const Document& doc, const std::string& kind) {
  if (doc.kind != kind) fail("document.kind", "expected '" + kind + "', found '" + doc.kind + "'");
  return doc.payload;
}

Json encode(const ColourSet& cs) { return Json{{"colours", cs.names()}}; }

ColourSet decode_colour_set(const Json& j) {
  auto list = names(field(j, "colours", "colour_set"), "colour_set.colours");
  return guard("colour_set.colours", [&] { return ColourSet(list); });
}

Json encode(const Signature& sig, const ColourSet& cs) {
  Json in = Json::array();
  for (ColourId c : sig.inputs) in.push_back(cs.name(c));
  return Json{{"inputs", in}, {"output", cs.name(sig.output)}};
}

Signature decode_signature(const Json& j, const ColourSet& cs) {
  Signature s;
  const auto in = names(field(j, "inputs", "signature"), "signature.inputs");
  for (std::size_t i = 0; i < in.size(); ++i) s.inputs.push_back(colour(in[i], cs, at("signature.inputs", i)));
  s.output = colour(text(field(j, "output", "signature"), "signature.output"), cs, "signature.output");
  return s;
}

Json encode(const Collection& c) {
  Json comps = Json::array();
  for (const auto& [sig, comp] : c.components()) {
    Json e{{"signature", encode(sig, c.colours())}, {"elements", comp.names}};
    Json action = Json::array();
    bool trivial = true;
    const auto& g = comp.group().elements;
    for (std::size_t k = 1; k < g.size(); ++k) {
      action.push_back(Json{{"permutation", g[k].image()}, {"images", comp.action[k]}});
      for (std::size_t x = 0; x < comp.size(); ++x) trivial = trivial && comp.action[k][x] == static_cast<int>(x);
    }
    if (!trivial) e["action"] = action;
    comps.push_back(std::move(e));
  }
  return Json{{"colours", c.colours().names()}, {"components", comps}};
}

Collection decode_collection(const Json& j) {
  const ColourSet cs = decode_colour_set(j);
  Collection c(cs);
  const Json& comps = array(field(j, "components", "collection"), "collection.components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = at("collection.components", i);
    const Signature sig = ordered_signature(field(comps[i], "signature", where), cs, where + ".signature");
    if (c.find(sig)) fail(where, "signature " + to_string(sig, cs) + " appears twice");
    Component comp = trivial_component(sig, names(field(comps[i], "elements", where), where + ".elements"));
    auto it = comps[i].find("action");
    if (it != comps[i].end()) {
      const auto& g = comp.group().elements;
      std::vector<bool> seen(g.size(), false);
      seen[0] = true;
      for (std::size_t k = 0; k < array(*it, where + ".action").size(); ++k) {
        const std::string w = at(where + ".action", k);
        const Permutation perm = guard(w, [&] { return Permutation(ints(field((*it)[k], "permutation", w), w)); });
        if (perm.size() != sig.arity()) fail(w, "permutation has the wrong size");
        const int gi = guard(w, [&] { return comp.group().index_of(perm); });
        auto images = ints(field((*it)[k], "images", w), w + ".images");
        if (images.size() != comp.size()) fail(w, "action table at " + to_string(sig, cs) + " has the wrong length");
        comp.action[gi] = std::move(images);
        seen[gi] = true;
      }
      for (bool s : seen)
        if (!s) fail(where, "action table at " + to_string(sig, cs) + " misses a permutation");
    }
    guard(where, [&] {
      comp.validate();
      return 0;
    });
    c.set(std::move(comp));
  }
  return c;
}

Json encode(const PointedCollection& k) {
  Json j = encode(k.collection);
  Json units = Json::object();
  for (std::size_t c = 0; c < k.units.size(); ++c) {
    const auto col = static_cast<ColourId>(c);
    units[k.collection.colours().name(col)] = k.collection.find({{col}, col})->names.at(k.units[c]);
  }
  j["units"] = units;
  return j;
}

PointedCollection decode_pointed_collection(const Json& j) {
  PointedCollection k{decode_collection(j), {}};
  const ColourSet& cs = k.collection.colours();
  const Json& units = field(j, "units", "collection");
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto col = static_cast<ColourId>(c);
    const std::string where = "collection.units." + cs.name(col);
    k.units.push_back(element_id(k.collection, {{col}, col}, field(units, cs.name(col), "collection.units"), where));
  }
  return k;
}

Json encode(const Operad& p) {
  const ColourSet& cs = p.colours();
  Json units = Json::object();
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto col = static_cast<ColourId>(c);
    units[cs.name(col)] = p.collection().find({{col}, col})->names.at(p.units()[c]);
  }
  Json comps = Json::array();
  const auto table = materialize(p, p.arity_bound()).table;
  for (const auto& [k, z] : *table) {
    Json inner = Json::array();
    for (std::size_t i = 0; i < k.inner.size(); ++i) inner.push_back(element_ref(p.collection(), k.inner[i], k.ys[i]));
    comps.push_back(Json{{"outer", element_ref(p.collection(), k.outer, k.x)},
                         {"inner", inner},
                         {"result", component_at(p.collection(), k.result_signature())->names.at(z)}});
  }
  return Json{{"name", p.name()},
              {"arity_bound", p.arity_bound()},
              {"collection", encode(p.collection())},
              {"units", units},
              {"compositions", comps}};
}

Operad decode_operad(const Json& j) {
  const std::string name = text(field(j, "name", "operad"), "operad.name");
  const long bound = integer(field(j, "arity_bound", "operad"), "operad.arity_bound");
  if (bound < 0) fail("operad.arity_bound", "must not be negative");
  Json pointed = field(j, "collection", "operad");
  if (!pointed.is_object()) fail("operad.collection", "expected an object");
  pointed["units"] = field(j, "units", "operad");
  PointedCollection k = decode_pointed_collection(pointed);
  const Collection& c = k.collection;
  const ColourSet& cs = c.colours();

  auto table = std::make_shared<std::map<CompositionKey, int>>();
  const Json& comps = array(field(j, "compositions", "operad"), "operad.compositions");
  auto ref = [&](const Json& r, const std::string& where, Signature& sig) {
    sig = ordered_signature(field(r, "signature", where), cs, where + ".signature");
    return element_id(c, sig, field(r, "element", where), where + ".element");
  };
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = at("operad.compositions", i);
    CompositionKey key;
    key.x = ref(field(comps[i], "outer", where), where + ".outer", key.outer);
    const Json& inner = array(field(comps[i], "inner", where), where + ".inner");
    if (inner.size() != key.outer.arity()) fail(where, "needs one inner element per input of the outer one");
    for (std::size_t q = 0; q < inner.size(); ++q) {
      Signature s;
      key.ys.push_back(ref(inner[q], at(where + ".inner", q), s));
      if (s.output != key.outer.inputs[q]) fail(at(where + ".inner", q), "output colour does not match the outer input");
      key.inner.push_back(std::move(s));
    }
    const Signature result = key.result_signature();
    (*table)[key] = element_id(c, result, field(comps[i], "result", where), where + ".result");
  }
  ComposeFn fn = [table](const Signature& outer, int x, std::span<const Signature> inner, std::span<const int> ys) {
    auto it = table->find(CompositionKey{outer, x, {inner.begin(), inner.end()}, {ys.begin(), ys.end()}});
    if (it == table->end()) throw TruncationOverflow("composition outside the stored table");
    return it->second;
  };
  return Operad(name, c, k.units, fn, static_cast<std::size_t>(bound));
}

Json encode(const Algebra& a) {
  Json carrier = Json::object();
  for (std::size_t c = 0; c < a.carrier.size(); ++c) carrier[a.colours.name(static_cast<ColourId>(c))] = a.carrier[c];
  Json actions = Json::array();
  for (const auto& [sig, rows] : a.actions) actions.push_back(Json{{"signature", encode(sig, a.colours)}, {"tables", rows}});
  return Json{{"colours", a.colours.names()}, {"carrier", carrier}, {"actions", actions}};
}

Algebra decode_algebra(const Json& j) {
  Algebra a;
  a.colours = decode_colour_set(j);
  const Json& carrier = field(j, "carrier", "algebra");
  for (std::size_t c = 0; c < a.colours.size(); ++c) {
    const std::string& n = a.colours.name(static_cast<ColourId>(c));
    a.carrier.push_back(names(field(carrier, n, "algebra.carrier"), "algebra.carrier." + n));
  }
  const Json& actions = array(field(j, "actions", "algebra"), "algebra.actions");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const std::string where = at("algebra.actions", i);
    const Signature sig = ordered_signature(field(actions[i], "signature", where), a.colours, where + ".signature");
    const std::string at_sig = " at " + to_string(sig, a.colours);
    if (a.actions.count(sig)) fail(where, "actions" + at_sig + " appear twice");
    const Json& tables = array(field(actions[i], "tables", where), where + ".tables");
    const std::size_t n = tuple_count(a, sig.inputs);
    auto& rows = a.actions[sig];
    for (std::size_t x = 0; x < tables.size(); ++x) {
      auto row = ints(tables[x], at(where + ".tables", x));
      if (row.size() != n)
        fail(at(where + ".tables", x), "action table" + at_sig + " has " + std::to_string(row.size()) +
                                           " entries, expected " + std::to_string(n));
      for (int v : row)
        if (v < -1 || (v >= 0 && static_cast<std::size_t>(v) >= a.size(sig.output)))
          fail(at(where + ".tables", x), "action table" + at_sig + " leaves the carrier of " + a.colours.name(sig.output));
      rows.push_back(std::move(row));
    }
  }
  return a;
}

Json encode(const Segment& h) {
  return Json{{"elements", h.names}, {"zero", h.names.at(h.zero)}, {"one", h.names.at(h.one)}, {"join", h.join}};
}

Segment decode_segment(const Json& j) {
  Segment h;
  h.names = names(field(j, "elements", "segment"), "segment.elements");
  h.zero = index_in(h.names, text(field(j, "zero", "segment"), "segment.zero"), "segment.zero", "element");
  h.one = index_in(h.names, text(field(j, "one", "segment"), "segment.one"), "segment.one", "element");
  const Json& join = array(field(j, "join", "segment"), "segment.join");
  if (join.size() != h.size()) fail("segment.join", "needs one row per element");
  for (std::size_t a = 0; a < join.size(); ++a) {
    auto row = ints(join[a], at("segment.join", a));
    if (row.size() != h.size()) fail(at("segment.join", a), "needs one entry per element");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= h.size()) fail(at("segment.join", a), "entry outside the segment");
    h.join.push_back(std::move(row));
  }
  return h;
}

Json encode(const FiniteCategory& c) {
  Json hom = Json::array();
  for (const auto& [ab, arrows] : c.hom)
    hom.push_back(Json{{"source", c.objects[ab.first]}, {"target", c.objects[ab.second]}, {"arrows", arrows}});
  Json identity = Json::object();
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    identity[c.objects[o]] = c.hom.at({static_cast<int>(o), static_cast<int>(o)}).at(c.identity[o]);
  Json comp = Json::array();
  for (const auto& [abc, t] : c.composition) {
    const auto [a, b, d] = abc;
    const std::size_t bd = c.size(b, d);
    Json rows = Json::array();
    for (std::size_t f = 0; f < c.size(a, b); ++f) {
      Json row = Json::array();
      for (std::size_t g = 0; g < bd; ++g) row.push_back(c.hom.at({a, d}).at(t[f * bd + g]));
      rows.push_back(std::move(row));
    }
    comp.push_back(Json{{"objects", {c.objects[a], c.objects[b], c.objects[d]}}, {"table", rows}});
  }
  return Json{{"objects", c.objects}, {"hom", hom}, {"identity", identity}, {"composition", comp}};
}

FiniteCategory decode_category(const Json& j) {
  const auto objects = names(field(j, "objects", "category"), "category.objects");
  auto object = [&](const Json& n, const std::string& where) { return index_in(objects, text(n, where), where, "object"); };
  if (j.contains("less")) {
    std::vector<std::pair<int, int>> less;
    const Json& l = array(j["less"], "category.less");
    for (std::size_t i = 0; i < l.size(); ++i) {
      const std::string where = at("category.less", i);
      if (!l[i].is_array() || l[i].size() != 2) fail(where, "expected a pair of objects");
      less.emplace_back(object(l[i][0], where), object(l[i][1], where));
    }
    return guard("category.less", [&] { return FiniteCategory::poset(objects, less); });
  }
  FiniteCategory c;
  c.objects = objects;
  const Json& hom = array(field(j, "hom", "category"), "category.hom");
  for (std::size_t i = 0; i < hom.size(); ++i) {
    const std::string where = at("category.hom", i);
    const int a = object(field(hom[i], "source", where), where + ".source");
    const int b = object(field(hom[i], "target", where), where + ".target");
    if (c.hom.count({a, b})) fail(where, "hom(" + objects[a] + ", " + objects[b] + ") appears twice");
    c.hom[{a, b}] = names(field(hom[i], "arrows", where), where + ".arrows");
  }
  const Json& identity = field(j, "identity", "category");
  for (std::size_t o = 0; o < objects.size(); ++o) {
    const std::string where = "category.identity." + objects[o];
    const int oi = static_cast<int>(o);
    auto it = c.hom.find({oi, oi});
    if (it == c.hom.end()) fail(where, "no arrows " + objects[o] + " -> " + objects[o]);
    c.identity.push_back(index_in(it->second, text(field(identity, objects[o], "category.identity"), where), where, "arrow"));
  }
  const Json& comp = array(field(j, "composition", "category"), "category.composition");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string where = at("category.composition", i);
    const Json& obs = array(field(comp[i], "objects", where), where + ".objects");
    if (obs.size() != 3) fail(where + ".objects", "expected three objects");
    const int a = object(obs[0], where), b = object(obs[1], where), d = object(obs[2], where);
    const Json& rows = array(field(comp[i], "table", where), where + ".table");
    if (rows.size() != c.size(a, b)) fail(where + ".table", "needs one row per arrow " + objects[a] + " -> " + objects[b]);
    auto& t = c.composition[{a, b, d}];
    for (std::size_t f = 0; f < rows.size(); ++f) {
      auto row = names(rows[f], at(where + ".table", f));
      if (row.size() != c.size(b, d)) fail(at(where + ".table", f), "needs one entry per arrow " + objects[b] + " -> " + objects[d]);
      if (!c.size(a, d)) fail(where, "no arrows " + objects[a] + " -> " + objects[d]);
      for (const auto& n : row) t.push_back(index_in(c.hom.at({a, d}), n, at(where + ".table", f), "arrow"));
    }
  }
  return c;
}

namespace {

Json encode_node(const WElement& w, const Operad& p, const Segment& h) {
  const ColourSet& cs = p.colours();
  if (w.is_leaf()) return Json{{"colour", cs.name(w.colour)}, {"input", w.input}};
  Json kids = Json::array();
  for (const auto& c : w.children) kids.push_back(encode_node(c, p, h));
  Json j{{"colour", cs.name(w.colour)}, {"element", p.collection().find(w.signature())->names.at(w.label)}, {"children", kids}};
  if (w.length >= 0) j["length"] = h.names.at(w.length);
  return j;
}

WElement decode_node(const Json& j, const Operad& p, const Segment& h, const std::string& where) {
  WElement w;
  w.colour = colour(text(field(j, "colour", where), where + ".colour"), p.colours(), where + ".colour");
  if (j.contains("input")) {
    w.input = static_cast<int>(integer(j["input"], where + ".input"));
    if (w.input < 0) fail(where + ".input", "must not be negative");
    return w;
  }
  const Json& kids = array(field(j, "children", where), where + ".children");
  for (std::size_t i = 0; i < kids.size(); ++i) w.children.push_back(decode_node(kids[i], p, h, at(where + ".children", i)));
  const Signature sig = w.signature();
  if (!sort_signature(sig).rho.is_identity()) fail(where, "children must be listed in colour order");
  w.label = element_id(p.collection(), sig, field(j, "element", where), where + ".element");
  if (j.contains("length")) w.length = index_in(h.names, text(j["length"], where + ".length"), where + ".length", "length");
  return w;
}

}  // namespace

Json encode(const WElement& w, const Operad& p, const Segment& h) {
  return Json{{"operad", p.name()}, {"tree", encode_node(w, p, h)}};
}

WElement decode_w_element(const Json& j, const Operad& p, const Segment& h) {
  WElement w = decode_node(field(j, "tree", "w_element"), p, h, "w_element.tree");
  guard("w_element", [&] {
    validate_w(w, p, h);
    return 0;
  });
  return w;
}

Json encode(const CoherentString& s, const FiniteCategory& c, const Segment& h) {
  Json obs = Json::array(), arrows = Json::array(), waits = Json::array();
  for (int o : s.objects) obs.push_back(c.objects.at(o));
  for (std::size_t i = 0; i < s.arrows.size(); ++i) arrows.push_back(c.hom.at({s.objects[i], s.objects[i + 1]}).at(s.arrows[i]));
  for (int w : s.waits) waits.push_back(h.names.at(w));
  return Json{{"objects", obs}, {"arrows", arrows}, {"waits", waits}};
}

CoherentString decode_coherent_string(const Json& j, const FiniteCategory& c, const Segment& h) {
  CoherentString s;
  const auto obs = names(field(j, "objects", "coherent_string"), "coherent_string.objects");
  for (std::size_t i = 0; i < obs.size(); ++i)
    s.objects.push_back(index_in(c.objects, obs[i], at("coherent_string.objects", i), "object"));
  const auto arrows = names(field(j, "arrows", "coherent_string"), "coherent_string.arrows");
  if (obs.empty() || arrows.size() + 1 != obs.size()) fail("coherent_string.arrows", "needs one arrow between consecutive objects");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    auto it = c.hom.find({s.objects[i], s.objects[i + 1]});
    if (it == c.hom.end()) fail(at("coherent_string.arrows", i), "no arrows " + obs[i] + " -> " + obs[i + 1]);
    s.arrows.push_back(index_in(it->second, arrows[i], at("coherent_string.arrows", i), "arrow"));
  }
  const auto waits = names(field(j, "waits", "coherent_string"), "coherent_string.waits");
  for (std::size_t i = 0; i < waits.size(); ++i)
    s.waits.push_back(index_in(h.names, waits[i], at("coherent_string.waits", i), "segment element"));
  guard("coherent_string", [&] {
    validate(s, c, h);
    return 0;
  });
  return s;
}

Json encode(const Report& r) {
  return Json{{"ok", r.ok()}, {"checked", r.checked}, {"skipped", r.skipped}, {"violations", r.violations}};
}

Report decode_report(const Json& j) {
  Report r;
  r.violations = names(field(j, "violations", "report"), "report.violations");
  r.checked = static_cast<std::size_t>(integer(field(j, "checked", "report"), "report.checked"));
  r.skipped = static_cast<std::size_t>(integer(field(j, "skipped", "report"), "report.skipped"));
  return r;
}

Json encode(const OperadMap& f, const ColourSet& cs) {
  Json comps = Json::array();
  for (const auto& [sig, row] : f.table) comps.push_back(Json{{"signature", encode(sig, cs)}, {"images", row}});
  return Json{{"colours", cs.names()}, {"components", comps}};
}

OperadMap decode_operad_map(const Json& j, const ColourSet& cs) {
  OperadMap f;
  const Json& comps = array(field(j, "components", "operad_map"), "operad_map.components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = at("operad_map.components", i);
    const Signature sig = ordered_signature(field(comps[i], "signature", where), cs, where + ".signature");
    f.table[sig] = ints(field(comps[i], "images", where), where + ".images");
  }
  return f;
}

Json encode(const AlgebraMap& f, const ColourSet& cs) {
  Json comps = Json::object();
  for (std::size_t c = 0; c < f.components.size(); ++c) comps[cs.name(static_cast<ColourId>(c))] = f.components[c];
  return Json{{"colours", cs.names()}, {"components", comps}};
}

AlgebraMap decode_algebra_map(const Json& j, const ColourSet& cs) {
  AlgebraMap f;
  const Json& comps = field(j, "components", "algebra_map");
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const std::string& n = cs.name(static_cast<ColourId>(c));
    f.components.push_back(ints(field(comps, n, "algebra_map.components"), "algebra_map.components." + n));
  }
  return f;
}

}  // namespace forge::io
