#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "parideal/classical_families.hpp"
#include "parideal/irreducible.hpp"
#include "parideal/poset_ideals.hpp"
#include "parideal/root_system.hpp"
#include "parideal/serialization.hpp"
#include "parideal/verify.hpp"

namespace parideal {

namespace detail {

// Reads the worker-count override from the environment; defaults to one.
inline int threads_from_env() {
  const char* v = std::getenv("PARIDEAL_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long t = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || t < 1 || t > 64) {
    throw config_error("PARIDEAL_THREADS must be an integer between 1 and 64");
  }
  return static_cast<int>(t);
}

// Parses a comma-separated list of 1-based node labels into 0-based nodes.
inline NodeSet parse_node_list(const std::string& text, int rank) {
  NodeSet out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw usage_error("--J entries must be integers, got '" + cur + "'");
    }
    if (pos != cur.size()) throw usage_error("--J entries must be integers, got '" + cur + "'");
    if (v < 1 || v > rank) {
      throw usage_error("--J entry " + std::to_string(v) + " is out of range 1.." +
                        std::to_string(rank));
    }
    out.push_back(v - 1);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

inline Report run_verify_suite(const RootSystem& rs, const std::string& suite, int threads) {
  if (suite == "lemmas") return lemma_checks(rs);
  if (suite == "bijection") return verify_bijection(rs);
  if (suite == "nilpotence") return verify_nilpotence(rs);
  if (suite == "peterson") return verify_peterson(rs);
  if (suite == "theorem2") return verify_theorem2(rs, threads);
  if (suite == "classification") return verify_classification(rs);
  if (suite == "corollary") return verify_corollary_suite(rs);
  throw usage_error("unknown suite '" + suite + "'");
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite root systems and the combinatorics of parabolic nilpotent ideals"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "pretty"};
  const std::vector<std::string> suites{"lemmas",   "bijection",      "nilpotence", "peterson",
                                        "theorem2", "classification", "corollary"};
  const std::vector<std::string> types{"A", "B", "C", "D", "E", "F", "G",
                                       "a", "b", "c", "d", "e", "f", "g"};

  struct Common {
    std::string type;
    int rank = 0;
    std::string format = "pretty";
  };

  auto add_common = [&](CLI::App* sub, Common& c) {
    sub->add_option("--type", c.type, "root system family letter (A..G)")
        ->required()
        ->check(CLI::IsMember(types));
    sub->add_option("--rank", c.rank, "rank of the root system")->required();
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
  };

  Common roots_c, anti_c, verify_c, classify_c;
  bool roots_epsilon = false;
  std::string anti_j_text;
  bool anti_abelian = false;
  int anti_size = -1;
  std::string suite_name;

  CLI::App* roots_cmd = app.add_subcommand("roots", "list the roots of a finite root system");
  add_common(roots_cmd, roots_c);
  roots_cmd->add_flag("--epsilon", roots_epsilon, "include coordinates in the standard basis");

  CLI::App* anti_cmd =
      app.add_subcommand("antichains", "enumerate antichains avoiding a set of marked nodes");
  add_common(anti_cmd, anti_c);
  anti_cmd->add_option("--J", anti_j_text, "comma-separated 1-based marked nodes");
  anti_cmd->add_flag("--abelian", anti_abelian, "restrict to abelian antichains");
  anti_cmd->add_option("--size", anti_size, "restrict to antichains of this size");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  add_common(verify_cmd, verify_c);
  verify_cmd->add_option("--suite", suite_name, "verification suite to run")
      ->required()
      ->check(CLI::IsMember(suites));

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify irreducible weight-space root sets");
  add_common(classify_cmd, classify_c);

  std::vector<const char*> argv;
  argv.push_back("parideal");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots_cmd->parsed()) {
      RootSystem rs(RootSystemSpec{family_from_string(roots_c.type), roots_c.rank});
      if (roots_c.format == "json") emit_roots_json(rs, roots_epsilon, out);
      else if (roots_c.format == "csv") emit_roots_csv(rs, roots_epsilon, out);
      else emit_roots_pretty(rs, roots_epsilon, out);
      return 0;
    }
    if (anti_cmd->parsed()) {
      RootSystem rs(RootSystemSpec{family_from_string(anti_c.type), anti_c.rank});
      AntichainQuery q;
      q.J = detail::parse_node_list(anti_j_text, rs.rank());
      q.abelian = anti_abelian;
      if (anti_cmd->count("--size")) {
        if (anti_size < 0) throw usage_error("--size must be non-negative");
        q.size = anti_size;
      }
      auto sets = enumerate_J_antichains(rs, q.J, q.abelian, q.size);
      if (anti_c.format == "json") emit_antichains_json(rs, q, sets, out);
      else if (anti_c.format == "csv") emit_antichains_csv(rs, q, sets, out);
      else emit_antichains_pretty(rs, q, sets, out);
      return 0;
    }
    if (verify_cmd->parsed()) {
      RootSystem rs(RootSystemSpec{family_from_string(verify_c.type), verify_c.rank});
      Report rep = run_verify_suite(rs, suite_name, detail::threads_from_env());
      if (verify_c.format == "json") emit_report_json(rs, rep, out);
      else if (verify_c.format == "csv") emit_report_csv(rs, rep, out);
      else emit_report_pretty(rs, rep, out);
      return rep.passed() ? 0 : 1;
    }
    if (classify_cmd->parsed()) {
      RootSystem rs(RootSystemSpec{family_from_string(classify_c.type), classify_c.rank});
      auto rows = classify_rows(rs);
      if (classify_c.format == "json") emit_classify_json(rs, rows, out);
      else if (classify_c.format == "csv") emit_classify_csv(rs, rows, out);
      else emit_classify_pretty(rs, rows, out);
      return 0;
    }
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const scale_cap_error& e) {
    err << "scale cap: " << e.what() << "\n";
    return 3;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const config_error& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace parideal
