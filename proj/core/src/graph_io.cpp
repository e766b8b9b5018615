#include "steklov/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace steklov {

using nlohmann::json;

namespace {

std::size_t read_id(const json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

GraphWithBoundary parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  for (const char* key : {"n", "edges", "boundary"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  }

  const std::size_t n = read_id(doc["n"], "\"n\"");
  if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  if (!doc["boundary"].is_array()) throw ParseError("\"boundary\" must be an array");

  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const json& item : doc["edges"]) {
    if (!item.is_array() || item.size() < 2 || item.size() > 3) {
      throw ParseError("each edge must be [i, j] or [i, j, w]");
    }
    Edge e{read_id(item[0], "edge endpoint"), read_id(item[1], "edge endpoint"), 1.0};
    if (item.size() == 3) {
      if (!item[2].is_number()) throw ParseError("edge weight must be a number");
      e.weight = item[2].get<double>();
      if (!std::isfinite(e.weight) || e.weight <= 0.0) {
        throw ParseError("edge weight must be a positive finite number");
      }
    }
    if (e.u >= n || e.v >= n) {
      std::ostringstream msg;
      msg << "edge [" << e.u << ", " << e.v << "] has an id >= n = " << n;
      throw ParseError(msg.str());
    }
    if (e.u == e.v) throw ParseError("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      std::ostringstream msg;
      msg << "duplicate edge [" << e.u << ", " << e.v << "]";
      throw ParseError(msg.str());
    }
    edges.push_back(e);
  }

  std::vector<VertexId> boundary;
  for (const json& item : doc["boundary"]) {
    const std::size_t id = read_id(item, "boundary id");
    if (id >= n) throw ParseError("boundary id " + std::to_string(id) + " >= n");
    boundary.push_back(id);
  }
  return GraphWithBoundary(n, std::move(edges), std::move(boundary));
}

GraphWithBoundary read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

std::string to_graph_json(const GraphWithBoundary& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    if (e.weight == 1.0) {
      edges.push_back({e.u, e.v});
    } else {
      edges.push_back({e.u, e.v, e.weight});
    }
  }
  json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = std::move(edges);
  doc["boundary"] = std::vector<VertexId>(g.boundary().begin(), g.boundary().end());
  return doc.dump();
}

void write_graph_file(const GraphWithBoundary& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << to_graph_json(g) << '\n';
}

}  // namespace steklov
