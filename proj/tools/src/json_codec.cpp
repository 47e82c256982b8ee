#include "clkeys_cli/json_codec.hpp"

#include <algorithm>
#include <istream>

namespace clkeys::io {

namespace {

const Json& require_field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return *it;
}

const Json& require_array(const Json& value, const std::string& what) {
  if (!value.is_array()) throw ParseError(what + " must be an array");
  return value;
}

std::vector<Mask> parse_masks(const Universe& u, const Json& sets,
                              const std::string& what) {
  require_array(sets, what);
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(parse_set(u, s).bits());
  return out;
}

}  // namespace

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Universe parse_universe(const Json& names) {
  require_array(names, "universe");
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    if (!n.is_string()) throw ParseError("element names must be strings");
    out.push_back(n.get<std::string>());
  }
  try {
    return Universe(std::move(out));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

AttrSet parse_set(const Universe& u, const Json& names) {
  require_array(names, "set");
  Mask bits = 0;
  for (const auto& n : names) {
    if (!n.is_string()) throw ParseError("set members must be element names");
    const auto name = n.get<std::string>();
    auto index = u.index_of(name);
    if (!index) throw ParseError("unknown element '" + name + "'");
    if (bits & bit(*index)) {
      throw ParseError("element '" + name + "' repeated within a set");
    }
    bits |= bit(*index);
  }
  return u.from_mask(bits);
}

SetFamily parse_family(const Universe& u, const Json& sets) {
  return SetFamily(u, parse_masks(u, sets, "family"));
}

ClosureOperation parse_closure(const Json& doc) {
  const Universe u = parse_universe(require_field(doc, "universe"));
  const Json& spec = require_field(doc, "closure");
  const Json& type = require_field(spec, "type");
  if (!type.is_string()) throw ParseError("closure type must be a string");
  const auto kind = type.get<std::string>();

  if (kind == "maximal") return ClosureOperation::maximal(u);
  if (kind == "identity") return ClosureOperation::identity(u);
  if (kind == "translation") {
    return ClosureOperation::translation(parse_set(u, require_field(spec, "m")));
  }
  if (kind == "point") {
    const Json& a = require_field(spec, "a");
    if (!a.is_string()) throw ParseError("point element must be a name");
    const auto index = u.index_of(a.get<std::string>());
    if (!index) throw ParseError("unknown element '" + a.get<std::string>() + "'");
    return ClosureOperation::point(u, *index);
  }
  if (kind == "system") {
    SetFamily family = parse_family(u, require_field(spec, "closed_sets"));
    try {
      return ClosureOperation::from_system(ClosureSystem(std::move(family)));
    } catch (const InvalidInput& e) {
      throw ParseError(e.what());
    }
  }
  if (kind == "implications") {
    const Json& rules = require_array(require_field(spec, "rules"), "rules");
    std::vector<Implication> out;
    out.reserve(rules.size());
    for (const auto& r : rules) {
      out.push_back({parse_set(u, require_field(r, "lhs")).bits(),
                     parse_set(u, require_field(r, "rhs")).bits()});
    }
    return ClosureOperation::implications(u, std::move(out));
  }
  throw ParseError("unknown closure type '" + kind + "'");
}

Json closure_to_json(const ClosureOperation& f) {
  const Universe& u = f.universe();
  Json closure;
  closure["type"] = f.kind_name();
  if (const auto* s = std::get_if<SystemMap>(&f.representation())) {
    closure["closed_sets"] = family_to_json(s->closed);
  } else if (const auto* r = std::get_if<ImplicationMap>(&f.representation())) {
    Json rules = Json::array();
    for (const auto& rule : r->rules) {
      rules.push_back(Json{{"lhs", set_to_json(u.from_mask(rule.lhs))},
                           {"rhs", set_to_json(u.from_mask(rule.rhs))}});
    }
    closure["rules"] = std::move(rules);
  } else if (const auto* t = std::get_if<TranslationMap>(&f.representation())) {
    closure["m"] = set_to_json(u.from_mask(t->base));
  } else if (const auto* p = std::get_if<PointMap>(&f.representation())) {
    closure["a"] = u.name(p->element);
  } else if (std::holds_alternative<FunctionMap>(f.representation())) {
    throw InvalidInput("function-backed maps have no JSON form");
  }
  Json doc;
  doc["universe"] = u.names();
  doc["closure"] = std::move(closure);
  return doc;
}

Hypergraph parse_hypergraph(const Json& doc) {
  const Universe u = parse_universe(require_field(doc, "vertices"));
  return Hypergraph(u, parse_masks(u, require_field(doc, "edges"), "edges"));
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (Mask e : h.edge_sequence()) {
    edges.push_back(set_to_json(h.vertices().from_mask(e)));
  }
  Json doc;
  doc["vertices"] = h.vertices().names();
  doc["edges"] = std::move(edges);
  return doc;
}

Graph parse_graph(const Json& doc) {
  const Universe u = parse_universe(require_field(doc, "vertices"));
  const Json& edges = require_array(require_field(doc, "edges"), "edges");
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    const AttrSet s = parse_set(u, e);
    if (s.size() != 2) {
      throw ParseError("graph edge " + e.dump() +
                       " must have exactly two distinct endpoints");
    }
    const auto idx = s.indices();
    out.emplace_back(idx[0], idx[1]);
  }
  return Graph(u, std::move(out));
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) {
    edges.push_back(Json::array({g.vertices().name(a), g.vertices().name(b)}));
  }
  Json doc;
  doc["vertices"] = g.vertices().names();
  doc["edges"] = std::move(edges);
  return doc;
}

Json set_to_json(const AttrSet& s) {
  Json out = Json::array();
  for (auto& name : s.names()) out.push_back(std::move(name));
  return out;
}

Json family_to_json(const SetFamily& family) {
  std::vector<std::vector<std::size_t>> members;
  members.reserve(family.size());
  for (Mask m : family.masks()) {
    members.push_back(family.universe().from_mask(m).indices());
  }
  std::sort(members.begin(), members.end());
  Json out = Json::array();
  for (const auto& m : members) {
    Json set = Json::array();
    for (auto i : m) set.push_back(family.universe().name(i));
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace clkeys::io
