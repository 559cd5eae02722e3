#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dompack/dompack.hpp"

namespace {

using namespace dompack;

struct Options {
  std::string input;
  std::string format;
  std::string cls = "any";
  std::string n;
  std::string out;
  std::string dump_dir = "counterexamples";
  std::string experiment;
  Seed seed = 1;
  int samples = 0;
  int jobs = 0;
  long long budget = kDefaultBudget;
  std::vector<std::string> predicates;
  bool exhaustive = false;
};

// "12" or "4:18"
std::pair<int, int> parse_range(const std::string& text) {
  if (text.empty()) return {0, 0};
  try {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw PreconditionError("--n expects N or LO:HI, got '" + text + "'");
  }
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open input '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CorpusItem> read_items(const Options& opt) {
  if (opt.input.empty()) throw PreconditionError("--input is required");
  const std::string text = read_all(opt.input);
  const std::string stem = opt.input == "-" ? "stdin" : std::filesystem::path(opt.input).filename().string();
  std::vector<CorpusItem> items;
  if (opt.format.empty() || opt.format == "graph6") {
    std::istringstream in(text);
    for (auto& g : read_graph6_stream(in))
      items.push_back({stem + "#" + std::to_string(items.size() + 1), opt.cls, std::move(g), {}});
  } else {
    for (auto& e : read_edge_lists(text))
      items.push_back({stem + "#" + std::to_string(items.size() + 1), opt.cls, std::move(e.graph), std::move(e.ordering)});
  }
  return items;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot open output '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw Error("writing the report failed");
  }

 private:
  std::ofstream file_;
};

int jobs_or_default(int jobs) { return jobs > 0 ? jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

int cmd_compute(const Options& opt) {
  auto items = read_items(opt);
  Sink sink(opt.out);
  parallel_ordered<nlohmann::json>(
      items.size(), jobs_or_default(opt.jobs), [&](std::size_t i) { return compute_item(items[i], opt.budget); },
      [&](std::size_t, nlohmann::json& line) { sink.stream() << line.dump() << "\n"; });
  sink.finish();
  return 0;
}

int cmd_certify(const Options& opt) {
  auto items = read_items(opt);
  Sink sink(opt.out);
  ExitCode code = ExitCode::pass;
  parallel_ordered<CertifyReport>(
      items.size(), jobs_or_default(opt.jobs), [&](std::size_t i) { return certify_item(items[i], opt.budget); },
      [&](std::size_t, CertifyReport& report) {
        code = worst(code, report.exit_code());
        for (const auto& line : report.lines()) sink.stream() << line.dump() << "\n";
      });
  sink.finish();
  return static_cast<int>(code);
}

int cmd_decompose(const Options& opt) {
  auto items = read_items(opt);
  Sink sink(opt.out);
  for (const auto& item : items) sink.stream() << decompose_item(item).dump() << "\n";
  sink.finish();
  return 0;
}

int cmd_generate(const Options& opt) {
  auto [lo, hi] = parse_range(opt.n);
  const int samples = opt.samples > 0 ? opt.samples : 1;
  const bool ordered = opt.cls == "biconvex" || opt.cls == "tight";
  const std::string format = opt.format.empty() ? (ordered ? "edgelist" : "graph6") : opt.format;
  if (ordered && format != "edgelist")
    throw PreconditionError("biconvex output carries orderings and needs --format edgelist");
  Sink sink(opt.out);
  auto emit = [&](const Graph& g, const ConvexOrdering* ord) {
    if (format == "graph6")
      sink.stream() << encode_graph6(g) << "\n";
    else
      sink.stream() << write_edge_list(g, ord);
  };
  if (opt.cls == "tight" || opt.cls == "sun" || opt.cls == "rook") {
    if (opt.cls == "sun") {
      emit(gen_sun(), nullptr);
    } else {
      if (lo <= 0) throw PreconditionError("--n is required for the " + opt.cls + " family");
      for (int k = lo; k <= hi; ++k) {
        if (opt.cls == "rook") {
          emit(gen_rook(k), nullptr);
        } else {
          auto inst = gen_tight_family(k);
          emit(inst.graph, &inst.ordering);
        }
      }
    }
  } else {
    auto d = class_defaults(opt.cls);
    if (lo <= 0) std::tie(lo, hi) = std::pair{d.n_min, d.n_max};
    for (int i = 0; i < samples; ++i) {
      auto item = generate_item(opt.cls, lo, hi, opt.seed, i);
      emit(item.graph, item.ordering ? &*item.ordering : nullptr);
    }
  }
  sink.finish();
  return 0;
}

int cmd_scan(const Options& opt) {
  ScanSpec spec;
  spec.class_tag = opt.cls;
  std::tie(spec.n_min, spec.n_max) = parse_range(opt.n);
  spec.seed = opt.seed;
  spec.samples = opt.samples;
  spec.exhaustive = opt.exhaustive;
  spec.predicates = opt.predicates;
  spec.jobs = opt.jobs;
  spec.budget = opt.budget;
  auto items = opt.input.empty() ? build_corpus(spec) : read_items(opt);
  Sink sink(opt.out);
  auto summary = run_scan(items, spec, sink.stream(), std::filesystem::path(opt.dump_dir));
  sink.finish();
  if (summary.inconclusive > 0)
    std::cerr << summary.inconclusive << " graph(s) exceeded the solver budget; their records are not passes\n";
  return static_cast<int>(summary.exit_code());
}

int cmd_reproduce(const Options& opt) {
  ReproduceOptions ro;
  ro.seed = opt.seed;
  ro.jobs = opt.jobs;
  ro.budget = opt.budget;
  if (!opt.input.empty()) {
    for (auto& item : read_items(opt)) ro.corpus.push_back(std::move(item.graph));
  }
  Sink sink(opt.out);
  auto code = reproduce(opt.experiment, ro, sink.stream());
  sink.finish();
  return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination and packing numbers: exact solvers, certificates and conjecture scans"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::string> classes{"tree", "bicubic", "mop", "biconvex", "any"};
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "graph file, '-' for stdin");
    sub->add_option("--format", opt.format, "input format")->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_option("--out", opt.out, "output file (default stdout)");
    sub->add_option("--budget", opt.budget, "search-node budget per solve")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", opt.jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  };
  auto add_class = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--class", opt.cls, "graph class")->check(CLI::IsMember(allowed));
  };

  auto* compute = app.add_subcommand("compute", "exact gamma and rho with witnesses");
  add_input(compute);
  add_class(compute, classes);

  auto* certify = app.add_subcommand("certify", "run and verify the constructive pipeline of a class");
  add_input(certify);
  add_class(certify, classes);

  auto* decompose = app.add_subcommand("decompose", "print the structural decomposition of a class");
  add_input(decompose);
  add_class(decompose, classes);

  auto* generate = app.add_subcommand("generate", "emit graphs from a built-in family");
  add_class(generate, {"tree", "bicubic", "mop", "biconvex", "any", "tight", "sun", "rook"});
  generate->add_option("--n", opt.n, "order N or range LO:HI (k for tight, side for rook)");
  generate->add_option("--seed", opt.seed, "random seed");
  generate->add_option("--samples", opt.samples, "number of graphs")->check(CLI::PositiveNumber);
  generate->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"graph6", "edgelist"}));
  generate->add_option("--out", opt.out, "output file (default stdout)");

  auto* scan = app.add_subcommand("scan", "evaluate bounds and conjectures over a corpus");
  add_input(scan);
  add_class(scan, classes);
  scan->add_option("--n", opt.n, "order N or range LO:HI");
  scan->add_option("--seed", opt.seed, "random seed");
  scan->add_option("--samples", opt.samples, "number of random graphs")->check(CLI::PositiveNumber);
  scan->add_option("--predicate", opt.predicates, "bound to evaluate (repeatable; default: all in scope)");
  scan->add_flag("--exhaustive", opt.exhaustive, "all bicubic graphs up to order 12 instead of samples");
  scan->add_option("--dump-dir", opt.dump_dir, "where counterexample files go");

  auto* repro = app.add_subcommand("reproduce", "run a named experiment");
  repro->add_option("experiment", opt.experiment, "experiment name")
      ->required()
      ->check(CLI::IsMember(experiment_names()));
  add_input(repro);
  repro->add_option("--seed", opt.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    if (*compute) return cmd_compute(opt);
    if (*certify) return cmd_certify(opt);
    if (*decompose) return cmd_decompose(opt);
    if (*generate) return cmd_generate(opt);
    if (*scan) return cmd_scan(opt);
    if (*repro) return cmd_reproduce(opt);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return static_cast<int>(ExitCode::theorem_failure);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
  return static_cast<int>(ExitCode::usage);
}
