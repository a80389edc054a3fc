#include "bkn/graph_io.hpp"

#include <json.hpp>

namespace bkn {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  return *it;
}

}  // namespace

LabeledGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at " + position_of(text, e.byte > 0 ? e.byte - 1 : 0) +
                     ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");

  std::vector<std::pair<std::string, Rat>> vertices;
  const json& vs = require(doc, "vertices", "document");
  if (!vs.is_array()) throw ParseError("'vertices' must be an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const json& v = vs[i];
    if (!v.is_object()) throw ParseError(where + ": expected an object");
    const json& id = require(v, "id", where);
    if (!id.is_string()) throw ParseError(where + ".id: expected a string");
    const json& charge = require(v, "charge", where);
    if (!charge.is_string()) {
      throw ParseError(where + ".charge: expected a string \"p\" or \"p/q\" "
                       "(floating point is not accepted)");
    }
    Rat k;
    try {
      k = parse_rational(charge.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ".charge: " + e.what());
    }
    vertices.emplace_back(id.get<std::string>(), k);
  }

  std::vector<EdgeSpec> edges;
  const json& es = require(doc, "edges", "document");
  if (!es.is_array()) throw ParseError("'edges' must be an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = es[i];
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    const json& id = require(e, "id", where);
    if (!id.is_string()) throw ParseError(where + ".id: expected a string");
    const json& ends = require(e, "ends", where);
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string()) {
      throw ParseError(where + ".ends: expected two vertex ids");
    }
    const json& b = require(e, "b", where);
    if (!b.is_number_integer()) {
      throw ParseError(where + ".b: expected a nonzero integer");
    }
    EdgeSpec spec;
    spec.id = id.get<std::string>();
    spec.tail = ends[0].get<std::string>();
    spec.head = ends[1].get<std::string>();
    spec.b = b.get<long long>();
    if (spec.b == 0) throw ParseError(where + ": zero intersection index");
    edges.push_back(std::move(spec));
  }

  try {
    return LabeledGraph::build(vertices, edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
}

std::string serialize_graph(const LabeledGraph& g) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices) {
    ordered_json entry;
    entry["id"] = v.id;
    entry["charge"] = rat_to_string(v.charge);
    doc["vertices"].push_back(std::move(entry));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json entry;
    entry["id"] = e.id;
    entry["ends"] = {g.vertices[g.tail(e.dart_pos)].id, g.vertices[g.head(e.dart_pos)].id};
    entry["b"] = g.b(e.dart_pos);
    doc["edges"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace bkn
