#include "cli/cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/format.hpp"
#include "cli/sweep.hpp"
#include "cli/verify.hpp"
#include "json.hpp"
#include "steklov/bounds.hpp"
#include "steklov/families.hpp"
#include "steklov/graph_io.hpp"
#include "steklov/search.hpp"
#include "steklov/steklov.hpp"

namespace steklov::cli {

using nlohmann::json;

namespace {

/// Writes to --out when given, otherwise to the command's stdout.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ParameterError("cannot open output file " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct CommonFlags {
  std::string norm = "unit";
  std::string format = "text";
  std::string out;
};

GraphWithBoundary load_valid(const std::string& path) {
  GraphWithBoundary g = read_graph_file(path);
  require_valid(g);
  return g;
}

int cmd_spectrum(const std::string& input, const CommonFlags& flags, std::ostream& out) {
  const GraphWithBoundary g = load_valid(input);
  const Normalization norm = parse_normalization(flags.norm);
  const SteklovSpectrum s = steklov_spectrum(g, norm);
  Output sink(flags.out, out);
  std::ostream& os = sink.stream();

  if (flags.format == "json") {
    json doc;
    doc["normalization"] = std::string(to_string(norm));
    doc["n"] = g.vertex_count();
    doc["b"] = g.boundary_size();
    doc["boundary"] = std::vector<VertexId>(g.boundary().begin(), g.boundary().end());
    doc["sigmas"] = s.sigmas;
    doc["sigma0_is_zero"] = s.sigma0_is_zero();
    doc["eigenvectors"] = s.boundary_eigvecs;
    os << doc.dump(2) << '\n';
  } else if (flags.format == "csv") {
    os << "k,sigma\n";
    for (std::size_t k = 0; k < s.size(); ++k) os << k << ',' << round_trip(s.sigmas[k]) << '\n';
  } else {
    os << "normalization: " << to_string(norm) << "\nb: " << g.boundary_size() << "\nsigma: ";
    for (std::size_t k = 0; k < s.size(); ++k) {
      const double shown = (k == 0 && s.sigma0_is_zero()) ? 0.0 : s.sigmas[k];
      os << (k ? ", " : "") << human(shown);
    }
    os << '\n';
  }
  return kOk;
}

int cmd_bounds(const std::string& input, const CommonFlags& flags, std::ostream& out,
               std::ostream& err) {
  const GraphWithBoundary g = load_valid(input);
  const Normalization norm = parse_normalization(flags.norm);
  const BoundReport r = check_bounds(g, norm, tolerance_from_env());
  Output sink(flags.out, out);
  std::ostream& os = sink.stream();

  if (flags.format == "json") {
    json doc;
    doc["normalization"] = std::string(to_string(norm));
    doc["b"] = r.b;
    doc["d_B"] = r.boundary_diam;
    doc["sigma1"] = r.sigma1;
    doc["thm1"] = r.thm1;
    doc["thm2"] = r.thm2;
    doc["weighted"] = r.weighted;
    doc["slack_thm2"] = r.slack_thm2;
    doc["thm_bounds_apply"] = r.thm_bounds_apply;
    doc["weighted_applies"] = r.weighted_applies;
    doc["violations"] = r.violations;
    os << doc.dump(2) << '\n';
  } else if (flags.format == "csv") {
    os << "b,d_B,sigma1,thm1,thm2,weighted,slack\n"
       << r.b << ',' << r.boundary_diam << ',' << round_trip(r.sigma1) << ','
       << round_trip(r.thm1) << ',' << round_trip(r.thm2) << ',' << round_trip(r.weighted) << ','
       << round_trip(r.slack_thm2) << '\n';
  } else {
    os << "normalization: " << to_string(norm) << "\nb: " << r.b << "\nd_B: " << r.boundary_diam
       << "\nsigma1: " << human(r.sigma1) << "\nthm1: " << human(r.thm1)
       << (r.thm_bounds_apply ? "" : " (not applicable)") << "\nthm2: " << human(r.thm2)
       << (r.thm_bounds_apply ? "" : " (not applicable)") << "\nweighted: " << human(r.weighted)
       << (r.weighted_applies ? "" : " (not applicable)") << "\nslack_thm2: "
       << human(r.slack_thm2) << '\n';
  }
  if (!r.ok()) {
    for (const std::string& v : r.violations) err << "BOUND VIOLATION: " << v << '\n';
    return kNumericFailure;
  }
  return kOk;
}

struct FamilyFlags {
  std::string kind;
  std::size_t n = 2;
  std::size_t b = 2;
  std::size_t boundary_diam = 3;
  std::size_t interior = 10;
  double p = 0.3;
  std::optional<std::uint64_t> seed;
  bool weighted = false;
  std::string out;
};

int cmd_family(const FamilyFlags& flags, std::ostream& out) {
  GraphWithBoundary g;
  switch (parse_family_kind(flags.kind)) {
    case FamilyKind::kPath:
      g = path_graph(flags.n);
      break;
    case FamilyKind::kD:
      g = d_family(flags.n);
      break;
    case FamilyKind::kH:
      g = h_family(flags.b, flags.boundary_diam);
      break;
    case FamilyKind::kRandom: {
      if (!flags.seed) throw ParameterError("random family requires --seed");
      RandomGraphOptions options;
      options.interior = flags.interior;
      options.boundary = flags.b;
      options.edge_probability = flags.p;
      options.seed = *flags.seed;
      options.weighted = flags.weighted;
      g = random_valid_graph(options);
      break;
    }
  }
  Output sink(flags.out, out);
  sink.stream() << to_graph_json(g) << '\n';
  return kOk;
}

struct SweepFlags {
  std::string kind;
  std::string b = "2";
  std::string boundary_diam = "3";
  std::string n = "2";
  std::string interior = "1:40";
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
  double p = 0.3;
  bool weighted = false;
  std::string norm = "unit";
  std::string out;
};

int cmd_sweep(const SweepFlags& flags, std::ostream& out) {
  SweepSpec spec;
  spec.family = parse_family_kind(flags.kind);
  spec.norm = parse_normalization(flags.norm);
  spec.b = parse_range(flags.b);
  spec.boundary_diam = parse_range(flags.boundary_diam);
  spec.n = parse_range(flags.n);
  spec.interior = parse_range(flags.interior);
  spec.count = flags.count;
  spec.seed = flags.seed;
  spec.edge_probability = flags.p;
  spec.weighted = flags.weighted;
  const std::vector<SweepRow> rows = run_sweep(spec);
  Output sink(flags.out, out);
  write_sweep_csv(rows, sink.stream());
  return kOk;
}

int cmd_verify(std::optional<std::uint64_t> seed, std::ostream& out) {
  VerifyOptions options;
  options.tolerance = tolerance_from_env();
  if (seed) options.seed = *seed;
  std::size_t failed = 0;
  const auto checks = run_verification_suite(options, [&out, &failed](const Check& c) {
    if (!c.pass) ++failed;
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " | expected " << c.expected
        << " | got " << c.got << " | tol " << human(c.tolerance) << std::endl;
  });
  out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kOk : 1;
}

struct SearchFlags {
  std::size_t b = 2;
  std::size_t boundary_diam = 2;
  std::size_t max_vertices = 6;
  std::string format = "text";
  std::string out;
};

int cmd_search(const SearchFlags& flags, std::ostream& out) {
  SearchOptions options;
  options.b = flags.b;
  options.boundary_diam = flags.boundary_diam;
  options.max_vertices = flags.max_vertices;
  const SearchResult r = exhaustive_minimizer_search(options);
  Output sink(flags.out, out);
  std::ostream& os = sink.stream();
  const std::string reference =
      r.reference_is_minimizer ? (*r.reference_is_minimizer ? "yes" : "no") : "not applicable";

  if (flags.format == "json") {
    json doc;
    doc["b"] = flags.b;
    doc["d_B"] = flags.boundary_diam;
    doc["max_vertices"] = flags.max_vertices;
    doc["graphs_examined"] = r.graphs_examined;
    doc["sigma1_min"] = r.sigma1_min ? json(*r.sigma1_min) : json(nullptr);
    doc["minimizer_count"] = r.minimizers.size();
    doc["reference"] = r.reference_name;
    doc["reference_is_minimizer"] =
        r.reference_is_minimizer ? json(*r.reference_is_minimizer) : json(nullptr);
    json graphs = json::array();
    for (const GraphWithBoundary& g : r.minimizers) graphs.push_back(json::parse(to_graph_json(g)));
    doc["minimizers"] = std::move(graphs);
    os << doc.dump(2) << '\n';
  } else {
    os << "b: " << flags.b << "\nd_B: " << flags.boundary_diam
       << "\nmax_vertices: " << flags.max_vertices << "\ngraphs examined: " << r.graphs_examined
       << "\nminimal sigma1: " << (r.sigma1_min ? human(*r.sigma1_min) : std::string("none"))
       << "\nminimizers (up to isomorphism): " << r.minimizers.size() << '\n';
    if (!r.reference_name.empty()) {
      os << r.reference_name << " among minimizers: " << reference << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Steklov spectra of graphs with boundary and lower bounds for sigma1",
               "steklov"};
  app.require_subcommand(1);
  const std::vector<std::string> norms{"unit", "measure"};
  const std::vector<std::string> formats{"json", "csv", "text"};

  std::string input;
  CommonFlags common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "Graph JSON file")->required();
    sub->add_option("--norm", common.norm, "Boundary normalization")
        ->check(CLI::IsMember(norms));
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", common.out, "Write output to this file");
  };
  CLI::App* spectrum = app.add_subcommand("spectrum", "Steklov spectrum of a graph");
  add_common(spectrum);
  CLI::App* bounds = app.add_subcommand("bounds", "sigma1 against the lower bounds");
  add_common(bounds);

  FamilyFlags family;
  CLI::App* fam = app.add_subcommand("family", "Generate a family graph as JSON");
  fam->add_option("kind", family.kind, "path | d | h | random")->required();
  fam->add_option("--n", family.n, "Path length or D-family parameter");
  fam->add_option("--b", family.b, "Boundary size");
  fam->add_option("--dB", family.boundary_diam, "Boundary diameter");
  fam->add_option("--interior", family.interior, "Interior size (random)");
  fam->add_option("--p", family.p, "Extra edge probability (random)");
  fam->add_option("--seed", family.seed, "Seed (random)");
  fam->add_flag("--weighted", family.weighted, "Random weights in [0.5, 2]");
  fam->add_option("--out", family.out, "Write output to this file");

  SweepFlags sweep;
  CLI::App* sw = app.add_subcommand("sweep", "Tabulate sigma1 and bounds over a family as CSV");
  sw->add_option("kind", sweep.kind, "path | d | h | random")->required();
  sw->add_option("--b", sweep.b, "Boundary size, x or lo:hi");
  sw->add_option("--dB", sweep.boundary_diam, "Boundary diameter, x or lo:hi");
  sw->add_option("--n", sweep.n, "Family parameter n, x or lo:hi");
  sw->add_option("--interior", sweep.interior, "Interior size range (random)");
  sw->add_option("--count", sweep.count, "Number of random graphs");
  sw->add_option("--seed", sweep.seed, "Seed (random)");
  sw->add_option("--p", sweep.p, "Extra edge probability (random)");
  sw->add_flag("--weighted", sweep.weighted, "Random weights in [0.5, 2]");
  sw->add_option("--norm", sweep.norm, "Boundary normalization")->check(CLI::IsMember(norms));
  sw->add_option("--out", sweep.out, "Write CSV to this file");

  std::optional<std::uint64_t> verify_seed;
  CLI::App* verify = app.add_subcommand("verify", "Run the reproduction checks");
  verify->add_option("--seed", verify_seed, "Seed of the random ensembles");

  SearchFlags search;
  CLI::App* se = app.add_subcommand("search", "Exhaustive search for sigma1 minimizers");
  se->add_option("--b", search.b, "Boundary size")->required();
  se->add_option("--dB", search.boundary_diam, "Boundary diameter")->required();
  se->add_option("--max-vertices", search.max_vertices, "Vertex budget (<= 10)")->required();
  se->add_option("--format", search.format, "Output format")
      ->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));
  se->add_option("--out", search.out, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterFailure;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(input, common, out);
    if (bounds->parsed()) return cmd_bounds(input, common, out, err);
    if (fam->parsed()) return cmd_family(family, out);
    if (sw->parsed()) return cmd_sweep(sweep, out);
    if (verify->parsed()) return cmd_verify(verify_seed, out);
    if (se->parsed()) return cmd_search(search, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const ValidationError& e) {
    err << "validation failed:\n";
    for (const Violation& v : e.violations()) err << "  " << v.message << '\n';
    return kValidationFailure;
  } catch (const NumericError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const ParameterError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kParameterFailure;
  }
  return kParameterFailure;
}

}  // namespace steklov::cli
