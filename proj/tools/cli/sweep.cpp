#include "cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "cli/format.hpp"
#include "steklov/bounds.hpp"

namespace steklov::cli {

IntRange parse_range(const std::string& text) {
  auto to_size = [&text](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ParameterError("malformed range '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoull(part));
  };
  const auto colon = text.find(':');
  IntRange r;
  if (colon == std::string::npos) {
    r.lo = r.hi = to_size(text);
  } else {
    r.lo = to_size(text.substr(0, colon));
    r.hi = to_size(text.substr(colon + 1));
  }
  if (r.lo > r.hi) throw ParameterError("empty range '" + text + "'");
  return r;
}

namespace {

SweepRow make_row(const std::string& family, std::size_t b, std::size_t d,
                  std::optional<std::size_t> n) {
  SweepRow row;
  row.family = family;
  row.b = b;
  row.boundary_diam = d;
  row.n = n;
  return row;
}

struct Task {
  SweepRow row;  // family parameters filled in, numbers computed later
  std::function<GraphWithBoundary()> build;
};

std::vector<Task> plan(const SweepSpec& spec) {
  std::vector<Task> tasks;
  const std::string family(to_string(spec.family));
  switch (spec.family) {
    case FamilyKind::kPath:
      for (std::size_t n = spec.n.lo; n <= spec.n.hi; ++n) {
        SweepRow row = make_row(family, 2, n, n);
        row.closed_form = 2.0 / static_cast<double>(n);
        tasks.push_back({row, [n] { return path_graph(n); }});
      }
      break;
    case FamilyKind::kD:
      for (std::size_t n = spec.n.lo; n <= spec.n.hi; ++n) {
        SweepRow row = make_row(family, 2, 2, n);
        row.closed_form = 1.0;
        tasks.push_back({row, [n] { return d_family(n); }});
      }
      break;
    case FamilyKind::kH:
      for (std::size_t b = spec.b.lo; b <= spec.b.hi; ++b) {
        for (std::size_t d = spec.boundary_diam.lo; d <= spec.boundary_diam.hi; ++d) {
          SweepRow row = make_row(family, b, d, std::nullopt);
          row.closed_form = h_family_sigma1(b, d);
          tasks.push_back({row, [b, d] { return h_family(b, d); }});
        }
      }
      break;
    case FamilyKind::kRandom: {
      if (!spec.seed) throw ParameterError("random sweep requires --seed");
      if (spec.count == 0) throw ParameterError("random sweep requires --count >= 1");
      if (spec.b.lo < 2) throw ParameterError("random sweep needs b >= 2");
      if (spec.interior.lo < 1) throw ParameterError("random sweep needs interior >= 1");
      for (std::size_t i = 0; i < spec.count; ++i) {
        std::mt19937_64 rng(*spec.seed + i);
        RandomGraphOptions options;
        options.interior =
            std::uniform_int_distribution<std::size_t>(spec.interior.lo, spec.interior.hi)(rng);
        options.boundary = std::uniform_int_distribution<std::size_t>(spec.b.lo, spec.b.hi)(rng);
        options.edge_probability = spec.edge_probability;
        options.seed = rng();
        options.weighted = spec.weighted;
        SweepRow row = make_row(family, options.boundary, 0, options.interior + options.boundary);
        tasks.push_back({row, [options] { return random_valid_graph(options); }});
      }
      break;
    }
  }
  return tasks;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<Task> tasks = plan(spec);
  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size() && !failed; i = next++) {
      try {
        const GraphWithBoundary g = tasks[i].build();
        const BoundReport report = check_bounds(g, spec.norm);
        SweepRow row = tasks[i].row;
        row.boundary_diam = report.boundary_diam;
        row.sigma1 = report.sigma1;
        row.thm1 = report.thm1;
        row.thm2 = report.thm2;
        row.weighted = report.weighted;
        row.slack = report.slack_thm2;
        rows[i] = std::move(row);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1,
                           static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  auto opt = [](const std::optional<double>& v) { return v ? round_trip(*v) : std::string(); };
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.family << ',' << r.b << ',' << r.boundary_diam << ','
        << (r.n ? std::to_string(*r.n) : std::string()) << ',' << round_trip(r.sigma1) << ','
        << round_trip(r.thm1) << ',' << round_trip(r.thm2) << ',' << opt(r.weighted) << ','
        << opt(r.closed_form) << ',' << round_trip(r.slack) << '\n';
  }
}

}  // namespace steklov::cli
