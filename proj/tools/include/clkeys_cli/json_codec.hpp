#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "clkeys/closure.hpp"
#include "clkeys/error.hpp"
#include "clkeys/hypergraph.hpp"
#include "clkeys/reduction.hpp"

namespace clkeys::io {

using Json = nlohmann::ordered_json;

/// Malformed JSON or a document that does not match its schema.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Reads one JSON document; throws ParseError with the parser's message.
Json read_json(std::istream& in);
Json parse_json(const std::string& text);

Universe parse_universe(const Json& names);
/// Array of element names. Unknown or repeated names are rejected.
AttrSet parse_set(const Universe& u, const Json& names);
SetFamily parse_family(const Universe& u, const Json& sets);

/// {"universe":[...],"closure":{"type":...}}. A "system" closure must be a
/// valid closure system.
ClosureOperation parse_closure(const Json& doc);
/// Serializes every representation except FunctionMap.
Json closure_to_json(const ClosureOperation& f);

/// {"vertices":[...],"edges":[[...],...]}.
Hypergraph parse_hypergraph(const Json& doc);
Json hypergraph_to_json(const Hypergraph& h);

/// {"vertices":[...],"edges":[["u","v"],...]}; every edge is a 2-set.
Graph parse_graph(const Json& doc);
Json graph_to_json(const Graph& g);

/// Names in universe order.
Json set_to_json(const AttrSet& s);
/// Members sorted lexicographically by element position, so ∅ comes first.
/// The empty family is [] and {∅} is [[]].
Json family_to_json(const SetFamily& family);

}  // namespace clkeys::io
