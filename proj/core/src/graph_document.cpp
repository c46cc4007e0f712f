#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "regtrace/error.hpp"
#include "regtrace/graph.hpp"

namespace regtrace {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    fail(where + " must be an integer");
  }
  const auto wide = value.get<long long>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
    fail(where + " is out of range");
  }
  return static_cast<int>(wide);
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) {
    fail("graph document must be a JSON object");
  }
  for (const auto& [key, value] : root.items()) {
    if (key != "name" && key != "vertex_count" && key != "edges") {
      fail("unknown key '" + key + "'");
    }
  }
  for (const char* key : {"name", "vertex_count", "edges"}) {
    if (!root.contains(key)) {
      fail(std::string("missing key '") + key + "'");
    }
  }

  GraphDocument doc;
  if (!root["name"].is_string()) {
    fail("'name' must be a string");
  }
  doc.name = root["name"].get<std::string>();
  doc.vertex_count = as_int(root["vertex_count"], "'vertex_count'");

  const json& edges = root["edges"];
  if (!edges.is_array()) {
    fail("'edges' must be an array");
  }
  doc.edges.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) {
      fail(where + " must be a 2-element array");
    }
    doc.edges.push_back({as_int(e[0], where + "[0]"), as_int(e[1], where + "[1]")});
  }
  return doc;
}

std::string serialize_graph_document(const GraphDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"name\": " << json(doc.name).dump() << ",\n  \"vertex_count\": " << doc.vertex_count
      << ",\n  \"edges\": [";
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    out << (i == 0 ? "\n    " : ",\n    ") << '[' << doc.edges[i][0] << ", " << doc.edges[i][1] << ']';
  }
  out << (doc.edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

}  // namespace regtrace
