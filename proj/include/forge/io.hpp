#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "forge/algebras.hpp"
#include "forge/category.hpp"
#include "forge/operads.hpp"
#include "forge/w_construction.hpp"

namespace forge::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// A workbench file: a kind tag, the format version and a payload whose
/// schema depends on the kind.
struct Document {
  std::string kind;
  Json payload;

  bool operator==(const Document&) const = default;
};

/// Kinds this version reads and writes.
const std::vector<std::string>& known_kinds();

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Document& doc);
/// Throws SchemaError on bad JSON (with line and column), an unknown kind or
/// another version.
Document parse(const std::string& text);
Document load(const std::string& path);
void save(const Document& doc, const std::string& path);

/// Throws SchemaError unless doc.kind is `kind`.
const Json& expect_kind(const Document& doc, const std::string& kind);

// Payload encoders and decoders. Decoders throw SchemaError naming the
// offending field. Names, not ids, refer to colours and elements wherever a
// reader needs context to resolve them.

Json encode(const ColourSet& cs);
ColourSet decode_colour_set(const Json& j);

Json encode(const Signature& sig, const ColourSet& cs);
Signature decode_signature(const Json& j, const ColourSet& cs);

Json encode(const Collection& c);
Collection decode_collection(const Json& j);

/// Collection with a unit at every (c; c); the units field names them.
Json encode(const PointedCollection& k);
PointedCollection decode_pointed_collection(const Json& j);

/// Stores the collection, units and every composition up to the arity
/// bound; the decoded operad composes by table lookup.
Json encode(const Operad& p);
Operad decode_operad(const Json& j);

Json encode(const Algebra& a);
Algebra decode_algebra(const Json& j);

Json encode(const Segment& h);
Segment decode_segment(const Json& j);

/// A category by tables, or the shorthand {"objects", "less"} for the
/// partial order generated by the listed pairs.
Json encode(const FiniteCategory& c);
FiniteCategory decode_category(const Json& j);

Json encode(const WElement& w, const Operad& p, const Segment& h);
WElement decode_w_element(const Json& j, const Operad& p, const Segment& h);

Json encode(const CoherentString& s, const FiniteCategory& c, const Segment& h);
CoherentString decode_coherent_string(const Json& j, const FiniteCategory& c, const Segment& h);

Json encode(const Report& r);
Report decode_report(const Json& j);

Json encode(const OperadMap& f, const ColourSet& cs);
OperadMap decode_operad_map(const Json& j, const ColourSet& cs);

Json encode(const AlgebraMap& f, const ColourSet& cs);
AlgebraMap decode_algebra_map(const Json& j, const ColourSet& cs);

}  // namespace forge::io
