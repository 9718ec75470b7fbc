#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "parideal/irreducible.hpp"
#include "parideal/poset_ideals.hpp"
#include "parideal/report.hpp"
#include "parideal/root_system.hpp"

namespace parideal {

using json = nlohmann::json;

inline constexpr const char* kSchemaTag = "parideal/1";

namespace detail {

inline std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string coeff_tuple(const Coeffs& c) {
  return "(" + join_ints(c, ",") + ")";
}

inline json base_object(const RootSystem& rs, const std::string& command) {
  json j;
  j["schema"] = kSchemaTag;
  j["command"] = command;
  j["type"] = std::string(1, family_char(rs.family()));
  j["rank"] = rs.rank();
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// roots
// ---------------------------------------------------------------------------

inline void emit_roots_json(const RootSystem& rs, bool with_epsilon, std::ostream& out) {
  json j = detail::base_object(rs, "roots");
  j["num_positive"] = rs.num_positive();
  j["num_roots"] = rs.num_roots();
  j["theta"] = rs.root(rs.theta());
  json arr = json::array();
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    json r;
    r["index"] = idx;
    r["coeffs"] = rs.root(idx);
    r["height"] = rs.height_of(idx);
    r["positive"] = rs.is_positive(idx);
    r["long"] = rs.is_long(idx);
    if (with_epsilon) r["epsilon"] = rs.to_epsilon(idx);
    arr.push_back(std::move(r));
  }
  j["roots"] = std::move(arr);
  out << j.dump(2) << "\n";
}

inline void emit_roots_csv(const RootSystem& rs, bool with_epsilon, std::ostream& out) {
  out << "index,coeffs,height,positive,long";
  if (with_epsilon) out << ",epsilon";
  out << "\n";
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    out << idx << "," << detail::join_ints(rs.root(idx)) << "," << rs.height_of(idx) << ","
        << (rs.is_positive(idx) ? 1 : 0) << "," << (rs.is_long(idx) ? 1 : 0);
    if (with_epsilon) out << "," << detail::join_ints(rs.to_epsilon(idx));
    out << "\n";
  }
}

inline void emit_roots_pretty(const RootSystem& rs, bool with_epsilon, std::ostream& out) {
  out << rs.name() << ": " << rs.num_positive() << " positive roots, theta = "
      << detail::coeff_tuple(rs.root(rs.theta())) << "\n";
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    out << "  [" << idx << "] " << detail::coeff_tuple(rs.root(idx)) << "  height " << rs.height_of(idx)
        << "  " << (rs.is_positive(idx) ? "positive" : "negative") << "  "
        << (rs.is_long(idx) ? "long" : "short");
    if (with_epsilon) out << "  eps=" << detail::coeff_tuple(rs.to_epsilon(idx));
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// antichains
// ---------------------------------------------------------------------------

struct AntichainQuery {
  NodeSet J;                // 0-based nodes
  bool abelian = false;
  std::optional<int> size;
};

inline void emit_antichains_json(const RootSystem& rs, const AntichainQuery& q,
                                 const std::vector<RootSet>& sets, std::ostream& out) {
  json j = detail::base_object(rs, "antichains");
  json jn = json::array();
  for (int node : q.J) jn.push_back(node + 1);
  j["J"] = std::move(jn);
  j["abelian"] = q.abelian;
  if (q.size) j["size"] = *q.size;
  else j["size"] = nullptr;
  j["count"] = sets.size();
  json arr = json::array();
  for (const RootSet& a : sets) {
    json one = json::array();
    for (int idx : a) one.push_back(rs.root(idx));
    arr.push_back(std::move(one));
  }
  j["antichains"] = std::move(arr);
  out << j.dump(2) << "\n";
}

inline void emit_antichains_csv(const RootSystem& rs, const AntichainQuery&,
                                const std::vector<RootSet>& sets, std::ostream& out) {
  out << "index,size,roots\n";
  for (std::size_t k = 0; k < sets.size(); ++k) {
    out << k << "," << sets[k].size() << ",";
    for (std::size_t i = 0; i < sets[k].size(); ++i) {
      if (i) out << ";";
      out << detail::join_ints(rs.root(sets[k][i]));
    }
    out << "\n";
  }
}

inline void emit_antichains_pretty(const RootSystem& rs, const AntichainQuery& q,
                                   const std::vector<RootSet>& sets, std::ostream& out) {
  out << rs.name() << " antichains";
  if (!q.J.empty()) {
    out << " relative to J={";
    for (std::size_t k = 0; k < q.J.size(); ++k) out << (k ? "," : "") << (q.J[k] + 1);
    out << "}";
  }
  if (q.abelian) out << " (abelian)";
  if (q.size) out << " of size " << *q.size;
  out << ": " << sets.size() << "\n";
  for (const RootSet& a : sets) {
    out << "  " << describe_rootset(rs, a) << "\n";
  }
}

// ---------------------------------------------------------------------------
// verify reports
// ---------------------------------------------------------------------------

inline void emit_report_json(const RootSystem& rs, const Report& rep, std::ostream& out) {
  json j = detail::base_object(rs, "verify");
  j["suite"] = rep.suite;
  j["passed"] = rep.passed();
  j["total_instances"] = rep.total_instances();
  json arr = json::array();
  for (const CheckResult& c : rep.checks) {
    json one;
    one["claim"] = c.claim;
    one["instances_checked"] = c.instances_checked;
    one["failures"] = c.failures;
    one["suppressed_failures"] = c.suppressed_failures;
    one["passed"] = c.passed();
    arr.push_back(std::move(one));
  }
  j["checks"] = std::move(arr);
  out << j.dump(2) << "\n";
}

inline void emit_report_csv(const RootSystem&, const Report& rep, std::ostream& out) {
  out << "suite,claim,instances_checked,failure_count,passed\n";
  for (const CheckResult& c : rep.checks) {
    std::string claim = c.claim;
    for (char& ch : claim) {
      if (ch == ',') ch = ';';
    }
    out << rep.suite << "," << claim << "," << c.instances_checked << "," << c.failure_count()
        << "," << (c.passed() ? 1 : 0) << "\n";
  }
}

inline void emit_report_pretty(const RootSystem& rs, const Report& rep, std::ostream& out) {
  out << rs.name() << " suite '" << rep.suite << "'\n";
  for (const CheckResult& c : rep.checks) {
    out << "  [" << (c.passed() ? "PASS" : "FAIL") << "] " << c.claim << " ("
        << c.instances_checked << " instances";
    if (c.failure_count() > 0) out << ", " << c.failure_count() << " failures";
    out << ")\n";
    for (const std::string& f : c.failures) {
      out << "      failure: " << f << "\n";
    }
    if (c.suppressed_failures > 0) {
      out << "      (" << c.suppressed_failures << " further failures suppressed)\n";
    }
  }
  out << "suite " << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifiedRow {
  std::string family;
  std::vector<int> i_set;  // 1-based epsilon indices (empty when unlabeled)
  std::vector<int> j_set;
  RootSet roots;
  Coeffs two_rho;
  bool conditions_ok = false;
};

inline std::vector<ClassifiedRow> classify_rows(const RootSystem& rs) {
  std::vector<ClassifiedRow> rows;
  for (const LabeledS& s : classify_with_labels(rs)) {
    ClassifiedRow r;
    r.family = s.family;
    r.i_set = s.i_set;
    r.j_set = s.j_set;
    r.roots = s.roots;
    r.two_rho = two_rho_S(rs, s.roots);
    r.conditions_ok = cond_iv(rs, s.roots) && cond_i(rs, s.roots);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline void emit_classify_json(const RootSystem& rs, const std::vector<ClassifiedRow>& rows,
                               std::ostream& out) {
  json j = detail::base_object(rs, "classify");
  j["count"] = rows.size();
  json arr = json::array();
  for (const ClassifiedRow& r : rows) {
    json one;
    one["family"] = r.family;
    one["i_set"] = r.i_set;
    one["j_set"] = r.j_set;
    one["size"] = r.roots.size();
    json roots = json::array();
    for (int idx : r.roots) roots.push_back(rs.root(idx));
    one["roots"] = std::move(roots);
    one["two_rho_s"] = r.two_rho;
    one["conditions_ok"] = r.conditions_ok;
    arr.push_back(std::move(one));
  }
  j["sets"] = std::move(arr);
  out << j.dump(2) << "\n";
}

inline void emit_classify_csv(const RootSystem&, const std::vector<ClassifiedRow>& rows,
                              std::ostream& out) {
  out << "family,i_set,j_set,size,two_rho_s,conditions_ok\n";
  for (const ClassifiedRow& r : rows) {
    out << r.family << "," << detail::join_ints(r.i_set) << "," << detail::join_ints(r.j_set) << ","
        << r.roots.size() << "," << detail::join_ints(r.two_rho) << ","
        << (r.conditions_ok ? 1 : 0) << "\n";
  }
}

inline void emit_classify_pretty(const RootSystem& rs, const std::vector<ClassifiedRow>& rows,
                                 std::ostream& out) {
  out << rs.name() << " irreducible weight-space sets: " << rows.size() << "\n";
  for (const ClassifiedRow& r : rows) {
    out << "  family=" << r.family;
    if (!r.i_set.empty()) out << " I={" << detail::join_ints(r.i_set, ",") << "}";
    if (!r.j_set.empty()) out << " J={" << detail::join_ints(r.j_set, ",") << "}";
    out << " size=" << r.roots.size() << " 2rho_S=" << detail::coeff_tuple(r.two_rho)
        << (r.conditions_ok ? " ok" : " INVALID") << "\n";
  }
}

}  // namespace parideal
