#pragma once

#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dompack/graph.hpp"

namespace dompack {

/// Exact rational with positive denominator, always reduced.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw PreconditionError("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
};

inline std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

enum class BoundKind { theorem, conjecture };
enum class Relation { le, ge, eq };
enum class SolveStatus { exact, inconclusive };

/// One bound evaluated on one graph. "lhs" names the quantity (gamma or rho) compared
/// against the bound value.
struct ScanRecord {
  std::string graph_id;
  std::string class_tag;
  int n = 0;
  int delta = 0;
  int gamma = 0;
  int rho = 0;
  std::string bound;
  BoundKind kind = BoundKind::theorem;
  std::string lhs = "gamma";
  Relation relation = Relation::le;
  Rational value;
  bool satisfied = false;
  SolveStatus status = SolveStatus::exact;
  std::map<std::string, std::vector<Vertex>> certificates;

  int lhs_value() const { return lhs == "rho" ? rho : gamma; }

  // satisfied must agree with the stored numbers; inconclusive records never pass.
  bool consistent() const {
    if (status == SolveStatus::inconclusive) return !satisfied;
    return satisfied == holds(lhs_value(), relation, value);
  }

  static bool holds(int lhs, Relation rel, const Rational& value) {
    const Rational l(lhs);
    switch (rel) {
      case Relation::le: return l <= value;
      case Relation::ge: return l >= value;
      case Relation::eq: return l == value;
    }
    return false;
  }

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "==";
  }
  return "?";
}

inline Relation relation_from_string(const std::string& s) {
  if (s == "<=") return Relation::le;
  if (s == ">=") return Relation::ge;
  if (s == "==") return Relation::eq;
  throw Error("unknown relation '" + s + "'");
}

inline nlohmann::json to_json(const ScanRecord& r) {
  nlohmann::json j;
  j["id"] = r.graph_id;
  j["class"] = r.class_tag;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["gamma"] = r.gamma;
  j["rho"] = r.rho;
  j["bound"] = r.bound;
  j["kind"] = r.kind == BoundKind::theorem ? "theorem" : "conjecture";
  j["lhs"] = r.lhs;
  j["relation"] = to_string(r.relation);
  j["value"] = {r.value.num, r.value.den};
  j["satisfied"] = r.satisfied;
  j["status"] = r.status == SolveStatus::exact ? "exact" : "inconclusive";
  if (!r.certificates.empty()) j["certificates"] = r.certificates;
  return j;
}

inline ScanRecord record_from_json(const nlohmann::json& j) {
  ScanRecord r;
  try {
    r.graph_id = j.at("id").get<std::string>();
    r.class_tag = j.at("class").get<std::string>();
    r.n = j.at("n").get<int>();
    r.delta = j.at("delta").get<int>();
    r.gamma = j.at("gamma").get<int>();
    r.rho = j.at("rho").get<int>();
    r.bound = j.at("bound").get<std::string>();
    r.kind = j.at("kind").get<std::string>() == "theorem" ? BoundKind::theorem : BoundKind::conjecture;
    r.lhs = j.at("lhs").get<std::string>();
    r.relation = relation_from_string(j.at("relation").get<std::string>());
    const auto& v = j.at("value");
    r.value = Rational(v.at(0).get<long long>(), v.at(1).get<long long>());
    r.satisfied = j.at("satisfied").get<bool>();
    r.status = j.at("status").get<std::string>() == "exact" ? SolveStatus::exact : SolveStatus::inconclusive;
    if (j.contains("certificates"))
      r.certificates = j.at("certificates").get<std::map<std::string, std::vector<Vertex>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report record: ") + e.what());
  }
  return r;
}

inline std::string format_record(const ScanRecord& r) { return to_json(r).dump(); }

inline ScanRecord parse_record(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("unparseable report line: ") + e.what());
  }
  return record_from_json(j);
}

inline void write_record(std::ostream& sink, const ScanRecord& r) {
  sink << format_record(r) << '\n';
  if (!sink) throw Error("report sink write failed");
}

/// One record per line, nothing else.
inline void write_report(const std::vector<ScanRecord>& records, std::ostream& sink) {
  for (const auto& r : records) write_record(sink, r);
  sink.flush();
  if (!sink) throw Error("report sink write failed");
}

}  // namespace dompack
