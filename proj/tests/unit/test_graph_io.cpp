#include <filesystem>

#include "doctest.h"
#include "steklov/families.hpp"
#include "steklov/graph_io.hpp"

using namespace steklov;

TEST_CASE("parses unit and weighted edges") {
  const auto g = parse_graph_json(R"({"n": 4, "edges": [[0, 2], [2, 3, 0.5], [3, 1]], "boundary": [0, 1]})");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 3);
  CHECK(g.edges()[1] == Edge{1, 3, 1.0});
  CHECK(g.edges()[2] == Edge{2, 3, 0.5});
  CHECK(g.boundary_size() == 2);
}

TEST_CASE("rejects malformed documents") {
  CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
  CHECK_THROWS_AS(parse_graph_json("[]"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": -1, "edges": [], "boundary": []})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0]], "boundary": [0]})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 2]], "boundary": [0]})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[1, 1]], "boundary": [0]})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 1], [1, 0]], "boundary": [0]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 1, 0]], "boundary": [0]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 1, "x"]], "boundary": [0]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 1]], "boundary": [2]})"), ParseError);
}

TEST_CASE("parsing does not validate the boundary structure") {
  const auto g = parse_graph_json(R"({"n": 3, "edges": [[0, 1], [0, 2], [1, 2]], "boundary": [0, 1]})");
  CHECK_FALSE(validate(g).empty());
}

TEST_CASE("round trip through text and files") {
  RandomGraphOptions options;
  options.interior = 7;
  options.boundary = 4;
  options.seed = 11;
  options.weighted = true;
  const GraphWithBoundary g = random_valid_graph(options);
  CHECK(parse_graph_json(to_graph_json(g)) == g);

  const GraphWithBoundary h = h_family(5, 4);
  const auto path = std::filesystem::temp_directory_path() / "steklov_io_roundtrip.json";
  write_graph_file(h, path);
  CHECK(read_graph_file(path) == h);
  std::filesystem::remove(path);
  CHECK(to_graph_json(path_graph(2)).find("[0,1]") != std::string::npos);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.json"), ParseError);
}
