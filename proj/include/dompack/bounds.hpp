#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dompack/exact.hpp"
#include "dompack/graph.hpp"
#include "dompack/report.hpp"

namespace dompack {

/// Everything a bound needs about one solved graph.
struct GraphFacts {
  std::string id;
  std::string class_tag;
  int n = 0;
  int delta = 0;
  int min_degree = 0;
  int low_degree_count = 0;  // vertices of degree <= 3
  bool connected = true;
  GammaResult gamma;
  RhoResult rho;

  bool exact() const { return gamma.exact() && rho.exact(); }
};

inline GraphFacts solve_facts(const Graph& g, std::string class_tag, std::string id = "",
                              long long budget = kDefaultBudget) {
  GraphFacts f;
  f.id = std::move(id);
  f.class_tag = std::move(class_tag);
  f.n = g.order();
  f.delta = g.max_degree();
  f.min_degree = g.min_degree();
  f.connected = is_connected(g);
  for (Vertex v = 0; v < g.order(); ++v) f.low_degree_count += g.degree(v) <= 3 ? 1 : 0;
  f.gamma = domination_number(g, budget);
  f.rho = packing_number(g, budget);
  return f;
}

/// A named inequality between gamma or rho and a value computed from the facts.
struct BoundSpec {
  std::string name;
  BoundKind kind;
  std::string lhs;
  Relation relation;
  std::vector<std::string> scope;  // class tags; "any" admits every class
  std::function<std::optional<Rational>(const GraphFacts&)> value;

  bool in_scope(const std::string& class_tag) const {
    return std::find(scope.begin(), scope.end(), "any") != scope.end() ||
           std::find(scope.begin(), scope.end(), class_tag) != scope.end();
  }
};

inline const std::vector<BoundSpec>& bound_registry() {
  using F = const GraphFacts&;
  using R = std::optional<Rational>;
  static const std::vector<BoundSpec> registry = {
      {"rho-le-gamma", BoundKind::theorem, "rho", Relation::le, {"any"},
       [](F f) -> R { return f.n >= 1 ? R(Rational(f.gamma.value)) : std::nullopt; }},
      {"gamma-le-delta-rho", BoundKind::theorem, "gamma", Relation::le, {"any"},
       [](F f) -> R {
         if (f.n < 2 || f.min_degree < 1) return std::nullopt;
         return Rational(static_cast<long long>(f.delta) * f.rho.value);
       }},
      {"max-degree-2", BoundKind::theorem, "gamma", Relation::le, {"any"},
       [](F f) -> R {
         if (f.n < 1 || f.delta > 2 || !f.connected) return std::nullopt;
         return Rational(f.rho.value + 1);
       }},
      {"trees", BoundKind::theorem, "gamma", Relation::eq, {"tree"},
       [](F f) -> R { return Rational(f.rho.value); }},
      {"bicubic-gamma-5n-14", BoundKind::theorem, "gamma", Relation::le, {"bicubic"},
       [](F f) -> R { return f.n >= 9 ? R(Rational(5LL * f.n, 14)) : std::nullopt; }},
      {"bicubic-rho-7n-48", BoundKind::theorem, "rho", Relation::ge, {"bicubic"},
       [](F f) -> R { return f.n >= 16 ? R(Rational(7LL * f.n, 48)) : std::nullopt; }},
      {"bicubic-ratio-120-49", BoundKind::theorem, "gamma", Relation::le, {"bicubic"},
       [](F f) -> R { return Rational(120LL * f.rho.value, 49); }},
      {"bicubic-small", BoundKind::theorem, "gamma", Relation::le, {"bicubic"},
       [](F f) -> R { return f.n <= 14 ? R(Rational(2LL * f.rho.value)) : std::nullopt; }},
      {"mop-averaged", BoundKind::theorem, "gamma", Relation::le, {"mop"},
       [](F f) -> R {
         return std::min(Rational(3LL * f.rho.value),
                         Rational(9LL * f.rho.value + f.low_degree_count, 4));
       }},
      {"biconvex-2rho", BoundKind::theorem, "gamma", Relation::le, {"biconvex"},
       [](F f) -> R { return Rational(2LL * f.rho.value); }},
      {"subcubic-2rho-plus-1", BoundKind::conjecture, "gamma", Relation::le, {"any"},
       [](F f) -> R { return f.delta <= 3 && f.n >= 1 ? R(Rational(2LL * f.rho.value + 1)) : std::nullopt; }},
      {"delta-minus-1-rho-plus-1", BoundKind::conjecture, "gamma", Relation::le, {"any"},
       [](F f) -> R {
         if (f.n < 2 || !f.connected) return std::nullopt;
         return Rational(static_cast<long long>(f.delta - 1) * f.rho.value + 1);
       }},
      {"relaxed", BoundKind::conjecture, "gamma", Relation::le, {"any"},
       [](F f) -> R {
         if (f.n < 2 || !f.connected) return std::nullopt;
         long long a = static_cast<long long>(f.delta - 1) * f.rho.value;
         long long b = static_cast<long long>(f.delta) * (f.rho.value - 1);
         return Rational(std::max(a, b) + 1);
       }},
      {"mop-2rho", BoundKind::conjecture, "gamma", Relation::le, {"mop"},
       [](F f) -> R { return Rational(2LL * f.rho.value); }},
  };
  return registry;
}

inline const BoundSpec& find_bound(const std::string& name) {
  for (const auto& b : bound_registry())
    if (b.name == name) return b;
  throw PreconditionError("unknown bound '" + name + "'");
}

/// Evaluates one bound. Out-of-scope bounds yield nothing, except conjectures when
/// `forced` (an explicit request to test a conjecture beyond its stated class).
inline std::optional<ScanRecord> evaluate_bound(const BoundSpec& spec, const GraphFacts& f,
                                                bool forced) {
  const bool in_scope = spec.in_scope(f.class_tag);
  if (!in_scope && !(forced && spec.kind == BoundKind::conjecture)) return std::nullopt;
  auto value = spec.value(f);
  if (!value) return std::nullopt;
  ScanRecord r;
  r.graph_id = f.id;
  r.class_tag = f.class_tag;
  r.n = f.n;
  r.delta = f.delta;
  r.gamma = f.gamma.value;
  r.rho = f.rho.value;
  r.bound = spec.name;
  r.kind = spec.kind;
  r.lhs = spec.lhs;
  r.relation = spec.relation;
  r.value = *value;
  r.status = f.exact() ? SolveStatus::exact : SolveStatus::inconclusive;
  r.satisfied = f.exact() && ScanRecord::holds(r.lhs_value(), r.relation, r.value);
  r.certificates["gamma_witness"] = f.gamma.witness.members();
  r.certificates["rho_witness"] = f.rho.witness.members();
  return r;
}

}  // namespace dompack
