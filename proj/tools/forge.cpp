// Command-line front end: builds, checks and transforms workbench files.
//
// Exit codes: 0 success, 1 a check found violations, 2 usage, schema or
// refused computation.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "forge/algebras.hpp"
#include "forge/box_product.hpp"
#include "forge/free_operad.hpp"
#include "forge/io.hpp"
#include "forge/trees.hpp"
#include "forge/w_construction.hpp"
#include "forge/zoo.hpp"

using namespace forge;
using io::Document;
using io::Json;

namespace {

struct Options {
  std::size_t bound = 3;
  bool bound_given = false;
  std::string segment;
  std::string out;
  std::string format = "json";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// "x=y,z=w" as ordered pairs.
std::vector<std::pair<std::string, std::string>> assignments(const std::string& s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& part : split(s, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=value in '" + part + "'");
    out.emplace_back(part.substr(0, eq), part.substr(eq + 1));
  }
  return out;
}

ColourId colour_named(const ColourSet& cs, const std::string& n) {
  if (!cs.contains(n)) throw UsageError("unknown colour '" + n + "'");
  return cs.index_of(n);
}

// "a,b->c:name" names an element at any signature.
Element parse_element(const Operad& p, const std::string& text) {
  const auto arrow = text.find("->");
  const auto colon = text.find(':', arrow == std::string::npos ? 0 : arrow);
  if (arrow == std::string::npos || colon == std::string::npos)
    throw UsageError("element '" + text + "' is not of the form inputs->output:name");
  Signature sig;
  for (const auto& c : split(text.substr(0, arrow), ',')) sig.inputs.push_back(colour_named(p.colours(), c));
  sig.output = colour_named(p.colours(), text.substr(arrow + 2, colon - arrow - 2));
  try {
    return p.element(sig, text.substr(colon + 1));
  } catch (const Error& e) {
    throw UsageError(std::string("element '") + text + "': " + e.what());
  }
}

std::string describe(const Operad& p, const Element& e) {
  std::string s;
  for (std::size_t i = 0; i < e.sig.inputs.size(); ++i) s += (i ? "," : "") + p.colours().name(e.sig.inputs[i]);
  return s + "->" + p.colours().name(e.sig.output) + ":" + p.element_name(e);
}

Document read(const std::string& path, const std::string& kind) {
  Document d = io::load(path);
  io::expect_kind(d, kind);
  return d;
}

Operad read_operad(const std::string& path) { return io::decode_operad(read(path, "operad").payload); }

Segment read_segment(const Options& o) {
  if (o.segment.empty()) return Segment::boolean();
  Segment h = io::decode_segment(read(o.segment, "segment").payload);
  Report r = check_segment(h);
  if (!r.ok()) throw SchemaError(o.segment + ": not a segment: " + r.violations.front());
  return h;
}

std::string component_lines(const Collection& c) {
  std::ostringstream os;
  for (const auto& [sig, comp] : c.components()) {
    os << "  " << to_string(sig, c.colours()) << ":";
    for (const auto& n : comp.names) os << " " << n;
    os << "\n";
  }
  return os.str();
}

std::string text_summary(const Document& d) {
  std::ostringstream os;
  const Json& p = d.payload;
  if (d.kind == "operad") {
    Operad op = io::decode_operad(p);
    os << "operad " << op.name() << " on " << op.colours().size() << " colours, arity <= " << op.arity_bound() << "\n"
       << component_lines(op.collection());
  } else if (d.kind == "collection") {
    os << "collection\n" << component_lines(io::decode_collection(p));
  } else if (d.kind == "algebra") {
    Algebra a = io::decode_algebra(p);
    os << "algebra\n";
    for (std::size_t c = 0; c < a.carrier.size(); ++c) {
      os << "  " << a.colours.name(static_cast<ColourId>(c)) << ":";
      for (const auto& x : a.carrier[c]) os << " " << x;
      os << "\n";
    }
  } else if (d.kind == "report") {
    Report r = io::decode_report(p);
    os << (r.ok() ? "ok" : "violations") << " (" << r.checked << " checked, " << r.skipped << " skipped)\n";
    for (const auto& v : r.violations) os << "  " << v << "\n";
  } else {
    os << p.dump(2) << "\n";
  }
  return os.str();
}

int emit(const Document& d, const Options& o) {
  if (!o.out.empty()) {
    io::save(d, o.out);
    if (o.format == "text") std::cout << "wrote " << d.kind << " to " << o.out << "\n";
  } else if (o.format == "text") {
    std::cout << text_summary(d);
  } else {
    std::cout << io::dump(d);
  }
  return 0;
}

int emit_report(const Report& r, const Options& o) {
  emit({"report", io::encode(r)}, o);
  if (!o.out.empty() && o.format != "text") std::cout << text_summary({"report", io::encode(r)});
  return r.ok() ? 0 : 1;
}

Operad zoo(const std::string& name, const Options& o, int n, const std::string& objects, const std::string& category,
           std::size_t vertices) {
  const std::size_t b = o.bound;
  if (name == "ass") return make_ass(b);
  if (name == "lmod") return make_lmod(b);
  if (name == "rmod") return make_rmod(b);
  if (name == "bimod") return make_bimod(b);
  if (name == "mod") return make_mod_p(make_ass(b), b);
  if (name == "morphism") return make_morphism_operad(make_ass(b), n, b);
  if (name == "cat") {
    auto obs = split(objects, ',');
    if (obs.empty()) throw UsageError("zoo cat needs --objects");
    return make_cat_o(obs, b);
  }
  if (name == "diag") {
    if (category.empty()) throw UsageError("zoo diag needs --category");
    return make_diag(io::decode_category(read(category, "category").payload));
  }
  if (name == "gr") return make_gr(make_ass(b), n, b).operad;
  if (name == "s") return make_s(static_cast<int>(b), vertices).operad;
  if (name == "s-plus") return make_s_plus(static_cast<int>(b), vertices).operad;
  if (name == "s0") return make_s0(static_cast<int>(b), vertices).operad;
  throw UsageError("unknown zoo operad '" + name +
                   "' (ass, lmod, rmod, bimod, mod, morphism, cat, diag, gr, s, s-plus, s0)");
}

PointedCollection read_generators(const std::string& path) {
  const Document d = read(path, "collection");
  const Json& p = d.payload;
  if (p.contains("units")) return io::decode_pointed_collection(p);
  // Without named units every colour gets a fresh one.
  PointedCollection k{io::decode_collection(p), {}};
  const ColourSet& cs = k.collection.colours();
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto col = static_cast<ColourId>(c);
    const Signature u{{col}, col};
    std::vector<std::string> names;
    if (const Component* comp = k.collection.find(u)) names = comp->names;
    const std::string unit = "1_" + cs.name(col);
    for (const auto& n : names)
      if (n == unit) throw SchemaError(path + ": element " + unit + " would clash with the unit");
    names.push_back(unit);
    Component fresh = trivial_component(u, names);
    if (const Component* comp = k.collection.find(u))
      for (std::size_t g = 0; g < fresh.action.size(); ++g)
        for (std::size_t x = 0; x < comp->size(); ++x) fresh.action[g][x] = comp->action[g][x];
    k.collection.set(std::move(fresh));
    k.units.push_back(static_cast<int>(names.size() - 1));
  }
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured operads, their algebras and resolutions in finite sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--bound", o.bound, "Arity bound (or colour bound for the S family)")
      ->each([&](const std::string&) { o.bound_given = true; });
  app.add_option("--segment", o.segment, "Segment file (default: {0, 1} with max)");
  app.add_option("--out", o.out, "Write the resulting document here");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string in1, in2;
  std::vector<std::string> inner;

  auto* zoo_cmd = app.add_subcommand("zoo", "Build an operad from the zoo");
  std::string zoo_name, objects, category_path, diagram_path, unit_out, generators, map_spec, colour_list, outer,
      element_spec, inputs_spec, output_colour;
  int n = 1;
  std::size_t vertices = 3, n_inputs = 2;
  zoo_cmd->add_option("name", zoo_name)->required();
  zoo_cmd->add_option("--n", n, "Index of P^n, or the top grade of Gr");
  zoo_cmd->add_option("--objects", objects, "Objects of Cat_O, comma separated");
  zoo_cmd->add_option("--category", category_path, "Category file for Diag");
  zoo_cmd->add_option("--vertices", vertices, "Vertex bound for the S family");

  auto* check = app.add_subcommand("check", "Check axioms");
  check->require_subcommand(1);
  auto* check_operad_cmd = check->add_subcommand("operad", "Operad axioms");
  check_operad_cmd->add_option("file", in1)->required();
  auto* check_algebra_cmd = check->add_subcommand("algebra", "Algebra axioms");
  check_algebra_cmd->add_option("file", in1)->required();
  check_algebra_cmd->add_option("--operad", in2)->required();
  auto* check_segment_cmd = check->add_subcommand("segment", "Segment axioms");
  check_segment_cmd->add_option("file", in1)->required();
  auto* check_map_cmd = check->add_subcommand("map", "Operad map axioms");
  std::string target_path;
  check_map_cmd->add_option("file", in1)->required();
  check_map_cmd->add_option("--source", in2)->required();
  check_map_cmd->add_option("--target", target_path)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose elements of an operad");
  compose_cmd->add_option("operad", in1)->required();
  compose_cmd->add_option("--outer", outer, "inputs->output:name")->required();
  compose_cmd->add_option("--inner", inner, "One per input of the outer element");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate an operation of an algebra");
  evaluate_cmd->add_option("algebra", in1)->required();
  evaluate_cmd->add_option("--operad", in2)->required();
  evaluate_cmd->add_option("--element", element_spec, "inputs->output:name")->required();
  evaluate_cmd->add_option("--inputs", inputs_spec, "Carrier elements, comma separated");

  auto* free_operad_cmd = app.add_subcommand("free-operad", "Free operad on a collection");
  free_operad_cmd->add_option("collection", in1)->required();
  free_operad_cmd->add_option("--vertices", vertices);

  auto* free_algebra_cmd = app.add_subcommand("free-algebra", "Free algebra on generators");
  free_algebra_cmd->add_option("operad", in1)->required();
  free_algebra_cmd->add_option("--generators", generators, "colour=x,colour=y,...")->required();

  auto* w_normalize_cmd = app.add_subcommand("w-normalize", "Normal form of a resolution element");
  w_normalize_cmd->add_option("element", in1)->required();
  w_normalize_cmd->add_option("--operad", in2)->required();

  auto* w_operad_cmd = app.add_subcommand("w-operad", "Resolution of an operad");
  w_operad_cmd->add_option("operad", in1)->required();
  w_operad_cmd->add_option("--vertices", vertices);

  auto* coherent = app.add_subcommand("coherent", "Strings of arrows with waiting times");
  coherent->require_subcommand(1);
  auto* coherent_compose_cmd = coherent->add_subcommand("compose", "Concatenate two strings");
  coherent_compose_cmd->add_option("first", in1)->required();
  coherent_compose_cmd->add_option("second", in2)->required();
  coherent_compose_cmd->add_option("--category", category_path)->required();
  auto* coherent_normalize_cmd = coherent->add_subcommand("normalize", "Normal form of a string");
  coherent_normalize_cmd->add_option("string", in1)->required();
  coherent_normalize_cmd->add_option("--category", category_path)->required();

  auto* rectify_cmd = app.add_subcommand("rectify", "Strict diagram from a coherent one");
  rectify_cmd->add_option("--category", category_path)->required();
  rectify_cmd->add_option("--diagram", diagram_path)->required();
  rectify_cmd->add_option("--unit-out", unit_out, "Write the comparison map here");

  auto* box_cmd = app.add_subcommand("box-product", "Box product of two collections");
  box_cmd->add_option("left", in1)->required();
  box_cmd->add_option("right", in2)->required();

  auto* colours_cmd = app.add_subcommand("colours", "Change of colours");
  colours_cmd->require_subcommand(1);
  auto* pullback_cmd = colours_cmd->add_subcommand("pullback", "Pull an operad back along a colour map");
  pullback_cmd->add_option("operad", in1)->required();
  pullback_cmd->add_option("--source", colour_list, "New colours, comma separated")->required();
  pullback_cmd->add_option("--map", map_spec, "new=old,...")->required();
  auto* pushforward_cmd = colours_cmd->add_subcommand("pushforward", "Push an operad forward along an injective map");
  pushforward_cmd->add_option("operad", in1)->required();
  pushforward_cmd->add_option("--target", colour_list, "New colours, comma separated")->required();
  pushforward_cmd->add_option("--map", map_spec, "old=new,...")->required();

  auto* trees_cmd = app.add_subcommand("enumerate-trees", "Isomorphism classes of coloured trees");
  trees_cmd->add_option("--colours", colour_list)->required();
  trees_cmd->add_option("--inputs", n_inputs);
  trees_cmd->add_option("--output", output_colour)->required();
  trees_cmd->add_option("--vertices", vertices);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*zoo_cmd) return emit({"operad", io::encode(zoo(zoo_name, o, n, objects, category_path, vertices))}, o);

    if (*check_operad_cmd) {
      Operad p = read_operad(in1);
      return emit_report(check_operad(p, o.bound_given ? o.bound : p.arity_bound()), o);
    }
    if (*check_algebra_cmd) {
      Operad p = read_operad(in2);
      Algebra a = io::decode_algebra(read(in1, "algebra").payload);
      return emit_report(check_algebra(a, p, o.bound_given ? o.bound : p.arity_bound()), o);
    }
    if (*check_segment_cmd) return emit_report(check_segment(io::decode_segment(read(in1, "segment").payload)), o);
    if (*check_map_cmd) {
      Operad s = read_operad(in2), t = read_operad(target_path);
      OperadMap f = io::decode_operad_map(read(in1, "operad_map").payload, s.colours());
      return emit_report(check_operad_map(s, t, f, o.bound_given ? o.bound : s.arity_bound()), o);
    }

    if (*compose_cmd) {
      Operad p = read_operad(in1);
      const Element x = parse_element(p, outer);
      std::vector<Element> qs;
      for (const auto& s : inner) qs.push_back(parse_element(p, s));
      if (qs.size() != x.sig.arity()) throw UsageError("compose needs one --inner per input of the outer element");
      const Element z = p.compose(x, qs);
      if (o.format == "text") std::cout << describe(p, z) << "\n";
      else std::cout << Json{{"signature", io::encode(z.sig, p.colours())}, {"element", p.element_name(z)}}.dump(2) << "\n";
      return 0;
    }

    if (*evaluate_cmd) {
      Operad p = read_operad(in2);
      Algebra a = io::decode_algebra(read(in1, "algebra").payload);
      const Element e = parse_element(p, element_spec);
      const auto names = split(inputs_spec, ',');
      if (names.size() != e.sig.arity()) throw UsageError("evaluate needs one input per input of the element");
      std::vector<int> xs;
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& carrier = a.carrier.at(e.sig.inputs[i]);
        auto it = std::find(carrier.begin(), carrier.end(), names[i]);
        if (it == carrier.end()) throw UsageError("'" + names[i] + "' is not in the carrier of input " + std::to_string(i));
        xs.push_back(static_cast<int>(it - carrier.begin()));
      }
      const std::string v = a.carrier[e.sig.output][evaluate(a, p, e, xs)];
      if (o.format == "text") std::cout << v << "\n";
      else std::cout << Json{{"value", v}}.dump(2) << "\n";
      return 0;
    }

    if (*free_operad_cmd)
      return emit({"operad", io::encode(free_operad(read_generators(in1), vertices, o.bound).operad)}, o);

    if (*free_algebra_cmd) {
      Operad p = read_operad(in1);
      std::vector<std::vector<std::string>> x(p.colours().size());
      for (const auto& [c, g] : assignments(generators)) x[colour_named(p.colours(), c)].push_back(g);
      return emit({"algebra", io::encode(free_algebra(p, x, o.bound_given ? o.bound : p.arity_bound()).algebra)}, o);
    }

    if (*w_normalize_cmd) {
      Operad p = read_operad(in2);
      Segment h = read_segment(o);
      WElement w = io::decode_w_element(read(in1, "w_element").payload, p, h);
      return emit({"w_element", io::encode(w_normalize(w, p, h), p, h)}, o);
    }
    if (*w_operad_cmd) {
      Operad p = read_operad(in1);
      return emit({"operad", io::encode(w_operad(p, read_segment(o), o.bound, vertices).operad)}, o);
    }

    if (*coherent_compose_cmd || *coherent_normalize_cmd) {
      FiniteCategory c = io::decode_category(read(category_path, "category").payload);
      Segment h = read_segment(o);
      CoherentString s = io::decode_coherent_string(read(in1, "coherent_string").payload, c, h);
      CoherentString r = *coherent_normalize_cmd
                             ? coherent_normalize(s, c, h)
                             : coherent_compose(s, io::decode_coherent_string(read(in2, "coherent_string").payload, c, h), c, h);
      if (o.format == "text" && o.out.empty()) {
        std::cout << to_string(r, c, h) << "\n";
        return 0;
      }
      return emit({"coherent_string", io::encode(r, c, h)}, o);
    }

    if (*rectify_cmd) {
      FiniteCategory c = io::decode_category(read(category_path, "category").payload);
      Algebra d = io::decode_algebra(read(diagram_path, "algebra").payload);
      Rectification r = rectify(d, c, read_segment(o));
      if (!unit_out.empty()) io::save({"algebra_map", io::encode(r.unit, r.strict.colours)}, unit_out);
      return emit({"algebra", io::encode(r.strict)}, o);
    }

    if (*box_cmd) {
      Collection x = io::decode_collection(read(in1, "collection").payload);
      Collection y = io::decode_collection(read(in2, "collection").payload);
      return emit({"collection", io::encode(box_product(x, y, o.bound).result)}, o);
    }

    if (*pullback_cmd) {
      Operad p = read_operad(in1);
      ColourSet source(split(colour_list, ','));
      ColourMap alpha(source.size(), -1);
      for (const auto& [from, to] : assignments(map_spec)) alpha[colour_named(source, from)] = colour_named(p.colours(), to);
      for (ColourId a : alpha)
        if (a < 0) throw UsageError("--map must send every source colour somewhere");
      return emit({"operad", io::encode(pullback_colours(alpha, source, p))}, o);
    }
    if (*pushforward_cmd) {
      Operad p = read_operad(in1);
      ColourSet target(split(colour_list, ','));
      ColourMap alpha(p.colours().size(), -1);
      for (const auto& [from, to] : assignments(map_spec)) alpha[colour_named(p.colours(), from)] = colour_named(target, to);
      for (ColourId a : alpha)
        if (a < 0) throw UsageError("--map must send every colour of the operad somewhere");
      return emit({"operad", io::encode(pushforward_colours_injective(alpha, target, p))}, o);
    }

    if (*trees_cmd) {
      ColourSet cs(split(colour_list, ','));
      const auto trees = enumerate_trees(cs, n_inputs, colour_named(cs, output_colour), vertices);
      Json list = Json::array();
      for (const auto& t : trees) list.push_back(to_string(t, cs));
      if (o.format == "text")
        for (const auto& t : list) std::cout << t.get<std::string>() << "\n";
      else
        std::cout << Json{{"count", trees.size()}, {"trees", list}}.dump(2) << "\n";
      return 0;
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
