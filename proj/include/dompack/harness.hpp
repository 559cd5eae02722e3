#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dompack/biconvex.hpp"
#include "dompack/bicubic.hpp"
#include "dompack/bounds.hpp"
#include "dompack/exact.hpp"
#include "dompack/generators.hpp"
#include "dompack/graph.hpp"
#include "dompack/graph_io.hpp"
#include "dompack/outerplanar.hpp"
#include "dompack/report.hpp"

namespace dompack {

enum class ExitCode : int { pass = 0, usage = 1, counterexample = 2, theorem_failure = 3 };

inline ExitCode worst(ExitCode a, ExitCode b) {
  // theorem failures outrank counterexamples, which outrank a clean pass
  auto rank = [](ExitCode c) {
    switch (c) {
      case ExitCode::theorem_failure: return 3;
      case ExitCode::usage: return 2;
      case ExitCode::counterexample: return 1;
      default: return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

inline const std::vector<std::string>& class_tags() {
  static const std::vector<std::string> tags{"tree", "bicubic", "mop", "biconvex", "any"};
  return tags;
}

struct CorpusItem {
  std::string id;
  std::string class_tag;
  Graph graph;
  std::optional<ConvexOrdering> ordering;
};

struct ScanSpec {
  std::string class_tag = "any";
  int n_min = 0;  // 0 picks the class default
  int n_max = 0;
  Seed seed = 1;
  int samples = 0;
  bool exhaustive = false;
  std::vector<std::string> predicates;  // empty: every bound in scope of the class
  int jobs = 0;                         // 0: hardware concurrency
  long long budget = kDefaultBudget;
};

struct ClassDefaults {
  int n_min, n_max, samples;
};

inline ClassDefaults class_defaults(const std::string& tag) {
  if (tag == "tree") return {1, 40, 300};
  if (tag == "bicubic") return {16, 24, 100};
  if (tag == "mop") return {4, 18, 200};
  if (tag == "biconvex") return {2, 20, 200};
  if (tag == "any") return {1, 12, 500};
  throw PreconditionError("unknown class '" + tag + "'");
}

inline ScanSpec resolve(ScanSpec spec) {
  auto d = class_defaults(spec.class_tag);
  if (spec.n_min <= 0) spec.n_min = spec.exhaustive ? 6 : d.n_min;
  if (spec.n_max <= 0) spec.n_max = spec.exhaustive ? kMaxEnumeratedBicubic : std::max(d.n_max, spec.n_min);
  if (spec.samples <= 0) spec.samples = d.samples;
  if (spec.jobs <= 0) spec.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (spec.n_min > spec.n_max) throw PreconditionError("empty size range");
  if (spec.exhaustive && spec.class_tag != "bicubic")
    throw PreconditionError("exhaustive scans exist only for the bicubic class");
  for (const auto& p : spec.predicates) find_bound(p);
  return spec;
}

/// Sample i of a generated corpus depends only on (class, size range, seed, i).
inline CorpusItem generate_item(const std::string& tag, int n_min, int n_max, Seed seed, int index) {
  auto rng = make_rng(seed, static_cast<std::uint64_t>(index));
  const Seed sub = rng();
  auto pick_n = [&](int lo, int hi) { return detail::uniform_int(rng, lo, hi); };
  CorpusItem item;
  item.id = tag + "-s" + std::to_string(seed) + "-" + std::to_string(index);
  item.class_tag = tag;
  if (tag == "tree") {
    item.graph = gen_random_tree(pick_n(std::max(1, n_min), n_max), sub);
  } else if (tag == "bicubic") {
    int lo = std::max(6, n_min + (n_min % 2));
    int hi = n_max - (n_max % 2);
    if (lo > hi) throw PreconditionError("no even order >= 6 in the bicubic size range");
    item.graph = gen_random_bicubic(lo + 2 * pick_n(0, (hi - lo) / 2), sub);
  } else if (tag == "mop") {
    item.graph = gen_random_mop(pick_n(std::max(3, n_min), std::max(3, n_max)), sub);
  } else if (tag == "biconvex") {
    int n = pick_n(std::max(2, n_min), std::max(2, n_max));
    int nx = pick_n(1, n - 1);
    auto inst = gen_random_biconvex(nx, n - nx, sub);
    item.graph = std::move(inst.graph);
    item.ordering = std::move(inst.ordering);
  } else if (tag == "any") {
    item.graph = gen_random_connected(pick_n(std::max(1, n_min), n_max), sub);
  } else {
    throw PreconditionError("unknown class '" + tag + "'");
  }
  return item;
}

inline std::vector<CorpusItem> build_corpus(const ScanSpec& raw) {
  auto spec = resolve(raw);
  std::vector<CorpusItem> out;
  if (spec.exhaustive) {
    for (int n = std::max(6, spec.n_min); n <= std::min(spec.n_max, kMaxEnumeratedBicubic); ++n) {
      if (n % 2 != 0) continue;
      int index = 0;
      for (auto& g : enumerate_bicubic(n))
        out.push_back({"bicubic-n" + std::to_string(n) + "-" + std::to_string(++index), "bicubic", std::move(g), {}});
    }
    return out;
  }
  for (int i = 0; i < spec.samples; ++i) out.push_back(generate_item(spec.class_tag, spec.n_min, spec.n_max, spec.seed, i));
  return out;
}

/// Runs work(i) for i < count on `jobs` threads and hands results to emit(i, result) in
/// index order from the calling thread (the single writer).
template <class T>
void parallel_ordered(std::size_t count, int jobs, const std::function<T(std::size_t)>& work,
                      const std::function<void(std::size_t, T&)>& emit) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<char> done(count, 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      std::optional<T> value;
      std::exception_ptr err;
      try {
        value.emplace(work(i));
      } catch (...) {
        err = std::current_exception();
      }
      std::lock_guard lock(mu);
      slots[i] = std::move(value);
      errors[i] = err;
      done[i] = 1;
      cv.notify_all();
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < count && !first_error; ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return done[i] != 0; });
    if (errors[i]) {
      first_error = errors[i];
      break;
    }
    T value = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    try {
      emit(i, value);
    } catch (...) {
      first_error = std::current_exception();
    }
  }
  if (first_error) next.store(count);  // stop handing out work
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
}

struct RatioRecord {
  int gamma = 0;
  int rho = 1;
  std::string id;
};

struct ScanSummary {
  std::size_t graphs = 0;
  std::size_t records = 0;
  std::size_t theorem_failures = 0;
  std::size_t conjecture_violations = 0;
  std::size_t inconclusive = 0;
  std::map<std::string, RatioRecord> max_ratio;  // per class, max gamma / rho over exact solves
  std::vector<std::string> counterexamples;       // dump files written

  ExitCode exit_code() const {
    if (theorem_failures > 0) return ExitCode::theorem_failure;
    if (conjecture_violations > 0) return ExitCode::counterexample;
    return ExitCode::pass;
  }

  nlohmann::json to_json() const {
    nlohmann::json ratios = nlohmann::json::object();
    for (const auto& [tag, r] : max_ratio) ratios[tag] = {{"gamma", r.gamma}, {"rho", r.rho}, {"id", r.id}};
    return {{"summary",
             {{"graphs", graphs},
              {"records", records},
              {"theorem_failures", theorem_failures},
              {"conjecture_violations", conjecture_violations},
              {"inconclusive", inconclusive},
              {"max_ratio", ratios},
              {"counterexamples", counterexamples}}}};
  }
};

inline std::vector<ScanRecord> evaluate_predicates(const GraphFacts& facts, const std::vector<std::string>& predicates) {
  std::vector<ScanRecord> out;
  if (predicates.empty()) {
    for (const auto& spec : bound_registry())
      if (auto rec = evaluate_bound(spec, facts, false)) out.push_back(std::move(*rec));
  } else {
    for (const auto& name : predicates)
      if (auto rec = evaluate_bound(find_bound(name), facts, true)) out.push_back(std::move(*rec));
  }
  return out;
}

inline bool is_violation(const ScanRecord& r) { return r.status == SolveStatus::exact && !r.satisfied; }

inline std::string safe_file_stem(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

/// Writes a violated record as graph6 preceded by '#' lines with the bound and witnesses;
/// the file reads back through the ordinary graph6 reader.
inline std::string dump_counterexample(const std::filesystem::path& dir, const Graph& g, const ScanRecord& r) {
  std::filesystem::create_directories(dir);
  auto path = dir / (safe_file_stem(r.bound + "-" + r.graph_id) + ".g6");
  std::ofstream out(path);
  if (!out) throw Error("cannot write counterexample to " + path.string());
  out << "# " << format_record(r) << "\n" << encode_graph6(g) << "\n";
  if (!out.flush()) throw Error("cannot write counterexample to " + path.string());
  return path.string();
}

struct ScanItemResult {
  GraphFacts facts;
  std::vector<ScanRecord> records;
};

inline ScanSummary run_scan(const std::vector<CorpusItem>& items, const ScanSpec& raw, std::ostream& sink,
                            const std::optional<std::filesystem::path>& dump_dir = std::nullopt) {
  auto spec = resolve(raw);
  ScanSummary summary;
  parallel_ordered<ScanItemResult>(
      items.size(), spec.jobs,
      [&](std::size_t i) {
        const auto& item = items[i];
        ScanItemResult r;
        r.facts = solve_facts(item.graph, item.class_tag, item.id, spec.budget);
        r.records = evaluate_predicates(r.facts, spec.predicates);
        return r;
      },
      [&](std::size_t i, ScanItemResult& r) {
        ++summary.graphs;
        const auto& f = r.facts;
        if (!f.exact()) {
          ++summary.inconclusive;
        } else if (f.rho.value > 0) {
          auto& best = summary.max_ratio[f.class_tag];
          if (best.id.empty() || static_cast<long long>(f.gamma.value) * best.rho > static_cast<long long>(best.gamma) * f.rho.value)
            best = {f.gamma.value, f.rho.value, f.id};
        }
        for (const auto& rec : r.records) {
          write_record(sink, rec);
          ++summary.records;
          if (!is_violation(rec)) continue;
          if (rec.kind == BoundKind::theorem)
            ++summary.theorem_failures;
          else
            ++summary.conjecture_violations;
          if (dump_dir) summary.counterexamples.push_back(dump_counterexample(*dump_dir, items[i].graph, rec));
        }
      });
  sink << summary.to_json().dump() << "\n";
  if (!sink) throw Error("report sink failed");
  return summary;
}

/// One verified step of a class pipeline.
struct CheckResult {
  std::string name;
  BoundKind kind = BoundKind::theorem;
  bool passed = false;
  nlohmann::json detail;
};

struct CertifyReport {
  std::string id;
  std::string class_tag;
  std::vector<CheckResult> checks;

  ExitCode exit_code() const {
    ExitCode code = ExitCode::pass;
    for (const auto& c : checks)
      if (!c.passed) code = worst(code, c.kind == BoundKind::theorem ? ExitCode::theorem_failure : ExitCode::counterexample);
    return code;
  }

  std::vector<nlohmann::json> lines() const {
    std::vector<nlohmann::json> out;
    for (const auto& c : checks)
      out.push_back({{"id", id},
                     {"class", class_tag},
                     {"check", c.name},
                     {"kind", c.kind == BoundKind::theorem ? "theorem" : "conjecture"},
                     {"passed", c.passed},
                     {"detail", c.detail}});
    return out;
  }
};

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && static_cast<int>(g.size()) == g.order() - 1 && is_connected(g);
}

/// Rejects inputs outside the class with PreconditionError.
inline void validate_class(const CorpusItem& item) {
  const auto& g = item.graph;
  const auto& tag = item.class_tag;
  if (tag == "tree") {
    if (!is_tree(g)) throw PreconditionError(item.id + ": not a tree");
  } else if (tag == "bicubic") {
    if (!is_bicubic(g)) throw PreconditionError(item.id + ": not a connected cubic bipartite graph");
  } else if (tag == "mop") {
    auto rec = recognize_mop(g);
    if (!rec) throw PreconditionError(item.id + ": not maximal outerplanar (" + rec.rejection + ")");
  } else if (tag == "biconvex") {
    if (!item.ordering) throw PreconditionError(item.id + ": biconvex input needs orderX/orderY lines (edgelist format)");
    if (!validate_convex(g, *item.ordering)) throw PreconditionError(item.id + ": ordering is not biconvex");
    if (!is_connected(g)) throw PreconditionError(item.id + ": not connected");
  } else if (tag != "any") {
    throw PreconditionError("unknown class '" + tag + "'");
  }
}

namespace detail {

inline void add_bound_checks(CertifyReport& report, const GraphFacts& facts, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    auto rec = evaluate_bound(find_bound(name), facts, false);
    if (!rec) continue;
    report.checks.push_back({name, rec->kind, rec->satisfied, to_json(*rec)});
  }
}

// Runs a construction; a VerificationError becomes a failed theorem-level check.
inline void run_check(CertifyReport& report, const std::string& name, const std::function<nlohmann::json()>& body) {
  try {
    report.checks.push_back({name, BoundKind::theorem, true, body()});
  } catch (const VerificationError& e) {
    report.checks.push_back({name, BoundKind::theorem, false, {{"error", e.what()}}});
  }
}

inline void certify_bicubic(const CorpusItem& item, const GraphFacts& facts, CertifyReport& report) {
  const auto& g = item.graph;
  auto lab = *bipartition(g);
  if (g.order() >= 16) {
    std::optional<VertexSet> px;
    for (Side side : {Side::x, Side::y}) {
      run_check(report, side == Side::x ? "side-packing-x" : "side-packing-y", [&] {
        auto p = side_packing(g, lab, side);
        if (side == Side::x) px = p;
        return nlohmann::json{{"set", p.members()}, {"size", p.size()}, {"side_size", pick_side(lab, side).size()}};
      });
    }
    if (px) {
      run_check(report, "layer-decomposition", [&] {
        auto p = maximal_side_packing(g, *px, lab.side_x);
        auto d = layer_decompose(g, lab, p);
        auto pt = combined_packing(g, d);
        return nlohmann::json{{"p", d.p.members()}, {"t", d.t.members()}, {"packing", pt.members()},
                              {"packing_size", pt.size()}, {"rho", facts.rho.value}};
      });
    }
  }
  add_bound_checks(report, facts, {"bicubic-gamma-5n-14", "bicubic-rho-7n-48", "bicubic-ratio-120-49", "bicubic-small", "subcubic-2rho-plus-1"});
}

inline void certify_mop(const CorpusItem& item, const GraphFacts& facts, CertifyReport& report, long long budget) {
  auto t = require_mop(item.graph);
  auto dual = build_dual(t);
  auto cg = build_clique_graph(t);
  run_check(report, "tokunaga-coloring", [&] {
    auto c = tokunaga_color(t);
    if (!verify_four_coloring(t, dual, c)) throw VerificationError("edge-sharing triangles miss a color");
    return nlohmann::json{{"colors", c.colors}};
  });
  auto cg_gamma = domination_number(cg.graph, budget);
  auto cg_rho = packing_number(cg.graph, budget);
  const bool cg_exact = cg_gamma.exact() && cg_rho.exact();
  report.checks.push_back({"clique-graph-duality", BoundKind::theorem, cg_exact && cg_gamma.value == cg_rho.value,
                           {{"gamma", cg_gamma.value}, {"rho", cg_rho.value}, {"exact", cg_exact}}});
  run_check(report, "averaged-dominating", [&] {
    auto x = project_dominating(t, cg, cg_gamma.witness);
    auto av = averaged_dominating(t, x, tokunaga_color(t));
    return nlohmann::json{{"projected", x.members()}, {"set", av.best().members()}, {"size", av.best().size()},
                          {"t", av.low_degree_count}, {"gamma", facts.gamma.value}};
  });
  run_check(report, "lifted-packing", [&] {
    auto y = lift_packing(t, dual, cg, cg_rho.witness);
    if (static_cast<int>(y.size()) != cg_rho.value) throw VerificationError("lift changed the packing size");
    return nlohmann::json{{"set", y.members()}, {"size", y.size()}, {"rho", facts.rho.value}};
  });
  add_bound_checks(report, facts, {"mop-averaged", "mop-2rho"});
}

inline nlohmann::json certificate_json(const Certificate& c) {
  return {{"set", c.set.members()}, {"size", c.set.size()}, {"claimed", c.claimed}, {"width", c.width}, {"construction", c.construction}};
}

inline void certify_biconvex_item(const CorpusItem& item, const GraphFacts& facts, CertifyReport& report) {
  const auto& g = item.graph;
  std::optional<BiconvexCertificates> certs;
  run_check(report, "biconvex-certificates", [&] {
    certs = certify_biconvex(g, *item.ordering);
    return nlohmann::json{{"width", certs->decomposition.width()}, {"trimmed", certs->core.trimmed()}};
  });
  if (certs) {
    report.checks.push_back({certs->packing.construction, BoundKind::theorem, true, certificate_json(certs->packing)});
    report.checks.push_back({certs->dominating.construction, BoundKind::theorem, true, certificate_json(certs->dominating)});
    if (certs->end_packing)
      report.checks.push_back({certs->end_packing->construction, BoundKind::theorem, true, certificate_json(*certs->end_packing)});
    if (facts.exact()) {
      const int pk = static_cast<int>(certs->packing.set.size());
      const int dm = static_cast<int>(certs->dominating.set.size());
      bool ok = pk <= facts.rho.value && facts.rho.value <= facts.gamma.value && facts.gamma.value <= dm;
      report.checks.push_back({"certificate-sandwich", BoundKind::theorem, ok,
                               {{"packing", pk}, {"rho", facts.rho.value}, {"gamma", facts.gamma.value}, {"dominating", dm}}});
    }
  }
  add_bound_checks(report, facts, {"biconvex-2rho"});
}

}  // namespace detail

/// Runs the class pipeline and verifies every certificate it produces.
inline CertifyReport certify_item(const CorpusItem& item, long long budget = kDefaultBudget) {
  validate_class(item);
  CertifyReport report{item.id, item.class_tag, {}};
  auto facts = solve_facts(item.graph, item.class_tag, item.id, budget);
  const auto& tag = item.class_tag;
  if (tag == "tree") {
    detail::add_bound_checks(report, facts, {"trees", "rho-le-gamma"});
  } else if (tag == "bicubic") {
    detail::certify_bicubic(item, facts, report);
  } else if (tag == "mop") {
    detail::certify_mop(item, facts, report, budget);
  } else if (tag == "biconvex") {
    detail::certify_biconvex_item(item, facts, report);
  } else {
    for (const auto& rec : evaluate_predicates(facts, {}))
      report.checks.push_back({rec.bound, rec.kind, rec.satisfied, to_json(rec)});
  }
  if (!facts.exact())
    report.checks.push_back({"solver", BoundKind::theorem, false, {{"status", "inconclusive"}}});
  return report;
}

inline nlohmann::json compute_item(const CorpusItem& item, long long budget = kDefaultBudget) {
  auto gamma = domination_number(item.graph, budget);
  auto rho = packing_number(item.graph, budget);
  return {{"id", item.id},
          {"n", item.graph.order()},
          {"m", item.graph.size()},
          {"delta", item.graph.max_degree()},
          {"gamma", gamma.value},
          {"rho", rho.value},
          {"gamma_witness", gamma.witness.members()},
          {"rho_witness", rho.witness.members()},
          {"status", gamma.exact() && rho.exact() ? "exact" : "inconclusive"}};
}

/// Structural decomposition of one graph: dual tree and coloring for mops, core and
/// complete bipartite blocks for biconvex graphs, packing layers for bicubic graphs.
inline nlohmann::json decompose_item(const CorpusItem& item) {
  validate_class(item);
  const auto& g = item.graph;
  nlohmann::json out{{"id", item.id}, {"class", item.class_tag}};
  if (item.class_tag == "mop") {
    auto t = require_mop(g);
    auto dual = build_dual(t);
    std::vector<std::array<int, 2>> dual_edges;
    for (auto [a, b] : dual.tree.edges()) dual_edges.push_back({a, b});
    out["boundary"] = t.boundary;
    out["triangles"] = t.triangles;
    out["dual_edges"] = dual_edges;
    out["colors"] = tokunaga_color(t).colors;
  } else if (item.class_tag == "biconvex") {
    auto core = trim_core(g, *item.ordering);
    auto dec = cb_decompose(g, core);
    out["x_left"] = core.x_left();
    out["x_right"] = core.x_right();
    out["reversed"] = core.reversed;
    out["core_x"] = core.core_x;
    out["width"] = dec.width();
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : dec.blocks) {
      nlohmann::json jb{{"k_x", b.k_x}, {"k_y", b.k_y}, {"j", b.j}};
      jb["j_side"] = b.j_side ? (*b.j_side == Side::x ? "x" : "y") : "none";
      blocks.push_back(jb);
    }
    out["blocks"] = blocks;
  } else if (item.class_tag == "bicubic") {
    auto lab = *bipartition(g);
    auto start = g.order() >= 16 ? side_packing(g, lab, Side::x) : VertexSet(g.order(), {lab.side_x[0]});
    auto d = layer_decompose(g, lab, maximal_side_packing(g, start, lab.side_x));
    for (auto [key, set] : {std::pair<const char*, const VertexSet*>{"p", &d.p}, {"q", &d.q}, {"r", &d.r},
                            {"s", &d.s}, {"t", &d.t}, {"w", &d.w}})
      out[key] = set->members();
  } else {
    throw PreconditionError("decompose supports the mop, biconvex and bicubic classes");
  }
  return out;
}

/// Rows of the G'_k table: gamma = 2k, rho = k, and the certificate sizes.
inline nlohmann::json tight_family_row(int k, long long budget = kDefaultBudget) {
  auto inst = gen_tight_family(k);
  auto gamma = domination_number(inst.graph, budget);
  auto rho = packing_number(inst.graph, budget);
  auto certs = certify_biconvex(inst.graph, inst.ordering);
  const bool ok = gamma.exact() && rho.exact() && gamma.value == 2 * k && rho.value == k &&
                  certs.decomposition.width() == k;
  return {{"k", k},
          {"gamma", gamma.value},
          {"rho", rho.value},
          {"width", certs.decomposition.width()},
          {"packing_certificate", certs.packing.set.size()},
          {"dominating_certificate", certs.dominating.set.size()},
          {"passed", ok}};
}

struct ReproduceOptions {
  Seed seed = 1;
  int jobs = 0;
  long long budget = kDefaultBudget;
  std::vector<Graph> corpus;  // extra bicubic graphs (e.g. order 14) for bicubic-small
};

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"bicubic-small", "tight-family", "mop-theorem4", "biconvex-theorem12"};
  return names;
}

/// Runs a named experiment, streaming one JSON line per item and a final summary line.
inline ExitCode reproduce(const std::string& name, const ReproduceOptions& opt, std::ostream& sink) {
  const int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  ExitCode code = ExitCode::pass;
  std::size_t items = 0;
  std::size_t failed = 0;

  if (name == "tight-family") {
    for (int k = 1; k <= 6; ++k) {
      auto row = tight_family_row(k, opt.budget);
      ++items;
      if (!row["passed"].get<bool>()) {
        ++failed;
        code = ExitCode::theorem_failure;
      }
      sink << row.dump() << "\n";
    }
  } else if (name == "bicubic-small") {
    ScanSpec spec;
    spec.class_tag = "bicubic";
    spec.exhaustive = true;
    spec.predicates = {"bicubic-small"};
    spec.jobs = jobs;
    spec.budget = opt.budget;
    auto corpus = build_corpus(spec);
    int index = 0;
    for (const auto& g : opt.corpus) {
      CorpusItem item{"bicubic-corpus-" + std::to_string(++index), "bicubic", g, {}};
      validate_class(item);
      if (g.order() > 14) throw PreconditionError(item.id + ": the small-order check covers n <= 14");
      corpus.push_back(std::move(item));
    }
    std::ostringstream records;
    auto summary = run_scan(corpus, spec, records);
    sink << records.str();
    return summary.exit_code();
  } else if (name == "mop-theorem4" || name == "biconvex-theorem12") {
    const bool mop = name == "mop-theorem4";
    const int samples = mop ? 100 : 200;
    std::vector<CorpusItem> corpus;
    for (int i = 0; i < samples; ++i)
      corpus.push_back(mop ? generate_item("mop", 4, 18, opt.seed, i) : generate_item("biconvex", 2, 20, opt.seed, i));
    parallel_ordered<CertifyReport>(
        corpus.size(), jobs, [&](std::size_t i) { return certify_item(corpus[i], opt.budget); },
        [&](std::size_t, CertifyReport& report) {
          ++items;
          auto c = report.exit_code();
          if (c != ExitCode::pass) ++failed;
          code = worst(code, c);
          for (const auto& line : report.lines()) sink << line.dump() << "\n";
        });
  } else {
    throw PreconditionError("unknown experiment '" + name + "'");
  }
  sink << nlohmann::json{{"summary", {{"experiment", name}, {"items", items}, {"failed", failed}}}}.dump() << "\n";
  if (!sink) throw Error("report sink failed");
  return code;
}

}  // namespace dompack
