#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "parideal/classical_families.hpp"
#include "parideal/irreducible.hpp"
#include "parideal/poset_ideals.hpp"
#include "parideal/report.hpp"
#include "parideal/root_system.hpp"

namespace parideal {

namespace detail {

inline std::string format_nodeset(const NodeSet& j) {
  std::string s = "{";
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(j[k] + 1);  // 1-based for display
  }
  s += "}";
  return s;
}

inline std::vector<NodeSet> all_nodesets(int rank) {
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << rank); ++mask) {
    NodeSet j;
    for (int i = 0; i < rank; ++i) {
      if (mask >> i & 1) j.push_back(i);
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Foundational lemma sweeps
// ---------------------------------------------------------------------------

inline Report lemma_checks(const RootSystem& rs) {
  Report rep{"lemmas", {}};
  const int n = rs.rank();
  const Coeffs& th = rs.root(rs.theta());

  // Dominant root-lattice vectors under the highest root are zero or roots.
  // Dominance forces nonnegative simple-root coordinates, so the box scan
  // 0 <= v <= theta is exhaustive.
  {
    CheckResult c{"dominant lattice weights under the highest root are zero or roots"};
    Coeffs v(static_cast<std::size_t>(n), 0);
    auto scan = [&](auto&& self, int pos) -> void {
      if (pos == n) {
        for (int i = 0; i < n; ++i) {
          if (rs.cov_pairing(v, i) < 0) return;
        }
        c.instances_checked++;
        bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
        if (!zero && !rs.is_root(v)) {
          std::string msg = "v=(";
          for (int i = 0; i < n; ++i) msg += (i ? "," : "") + std::to_string(v[static_cast<std::size_t>(i)]);
          c.add_failure(msg + ") is dominant, <= theta, nonzero and not a root");
        }
        return;
      }
      for (int x = 0; x <= th[static_cast<std::size_t>(pos)]; ++x) {
        v[static_cast<std::size_t>(pos)] = x;
        self(self, pos + 1);
      }
      v[static_cast<std::size_t>(pos)] = 0;
    };
    scan(scan, 0);
    rep.checks.push_back(std::move(c));
  }

  // Strictly dominated positive roots split off a positive-root summand that
  // still dominates the smaller root.
  {
    CheckResult c{"strict dominance factors through a positive-root summand"};
    for (int a = 0; a < rs.num_positive(); ++a) {
      for (int b = 0; b < rs.num_positive(); ++b) {
        if (a == b || !leq_roots(rs, b, a)) continue;
        c.instances_checked++;
        bool found = false;
        for (int g = 0; g < rs.num_positive() && !found; ++g) {
          if (!leq_roots(rs, b, g)) continue;
          Coeffs rest = rs.root(a);
          const Coeffs& cg = rs.root(g);
          for (int i = 0; i < n; ++i) rest[static_cast<std::size_t>(i)] -= cg[static_cast<std::size_t>(i)];
          int d = rs.index_of(rest);
          if (d >= 0 && rs.is_positive(d)) found = true;
        }
        if (!found) {
          c.add_failure("alpha=" + describe_rootset(rs, {a}) + " beta=" + describe_rootset(rs, {b}));
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // If alpha+beta and alpha+beta+gamma are roots then one of alpha+gamma,
  // beta+gamma is a root or vanishes.  The zero escape is necessary: with
  // alpha the highest root, beta = -alpha_1 and gamma = -alpha the sums
  // alpha+beta and alpha+beta+gamma are roots while alpha+gamma = 0 and
  // beta+gamma is not a root.
  {
    CheckResult c{"triple sums recombine through a pairwise sum or a cancellation"};
    for (int a = 0; a < rs.num_roots(); ++a) {
      for (int b = 0; b < rs.num_roots(); ++b) {
        int ab = rs.add(a, b);
        if (ab < 0) continue;
        for (int g = 0; g < rs.num_roots(); ++g) {
          if (rs.add(ab, g) < 0) continue;
          c.instances_checked++;
          bool ag_ok = rs.add(a, g) >= 0 || g == rs.neg(a);
          bool bg_ok = rs.add(b, g) >= 0 || g == rs.neg(b);
          if (!ag_ok && !bg_ok) {
            c.add_failure("alpha=" + describe_rootset(rs, {a}) + " beta=" + describe_rootset(rs, {b}) +
                          " gamma=" + describe_rootset(rs, {g}));
          }
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // Antichain members cannot step down by a restricted positive root, and
  // their pairings with each other and with the J nodes are non-positive.
  {
    CheckResult sub{"antichain members minus restricted positive roots are never roots"};
    CheckResult inn{"antichain pairings with members and restricted nodes are non-positive"};
    for (const NodeSet& j : detail::all_nodesets(n)) {
      auto [both, pos] = restricted_roots(rs, j);
      for (const RootSet& a : enumerate_J_antichains(rs, j, /*abelian_only=*/false)) {
        for (int alpha : a) {
          for (int gamma : pos) {
            sub.instances_checked++;
            if (rs.add(alpha, rs.neg(gamma)) >= 0) {
              sub.add_failure("J=" + detail::format_nodeset(j) + " alpha=" +
                              describe_rootset(rs, {alpha}) + " gamma=" +
                              describe_rootset(rs, {gamma}));
            }
          }
          for (int node : j) {
            inn.instances_checked++;
            if (rs.pair6(alpha, rs.simple_root_index(node)) > 0) {
              inn.add_failure("J=" + detail::format_nodeset(j) + " alpha=" +
                              describe_rootset(rs, {alpha}) + " node=" + std::to_string(node + 1));
            }
          }
        }
        for (std::size_t x = 0; x < a.size(); ++x) {
          for (std::size_t y = x + 1; y < a.size(); ++y) {
            inn.instances_checked++;
            if (rs.pair6(a[x], a[y]) > 0) {
              inn.add_failure("J=" + detail::format_nodeset(j) + " pair " +
                              describe_rootset(rs, {a[x], a[y]}));
            }
          }
        }
      }
    }
    rep.checks.push_back(std::move(sub));
    rep.checks.push_back(std::move(inn));
  }

  // Orthogonal pairs with a long member admit a recombination witness.
  {
    CheckResult c{"orthogonal pairs with a long member recombine"};
    for (int b = 0; b < rs.num_roots(); ++b) {
      if (!rs.is_long(b)) continue;
      for (int a = 0; a < rs.num_roots(); ++a) {
        if (rs.pair6(a, b) != 0) continue;
        c.instances_checked++;
        if (!lemone_witness(rs, a, b)) {
          c.add_failure("alpha=" + describe_rootset(rs, {a}) + " beta=" + describe_rootset(rs, {b}));
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // Long-root classified sets have a constant within-set orthogonality count.
  if (rs.family() != Family::E) {
    CheckResult c{"long-root classified sets have constant orthogonality counts"};
    for (const RootSet& s : enumerate_irreducible_S(rs)) {
      bool all_long = std::all_of(s.begin(), s.end(), [&](int idx) { return rs.is_long(idx); });
      if (!all_long) continue;
      c.instances_checked++;
      auto census = perp_census(rs, s);
      if (census.size() > 1) {
        c.add_failure("S=" + describe_rootset(rs, s) + " has uneven orthogonality counts");
      }
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Antichain <-> ideal bijection
// ---------------------------------------------------------------------------

inline Report verify_bijection(const RootSystem& rs) {
  Report rep{"bijection", {}};
  CheckResult gen{"each antichain generates a J-ideal and is recovered as its minimal set"};
  CheckResult surj{"up-set enumeration matches the generated ideals exactly"};
  CheckResult inv{"each enumerated ideal is generated by its minimal antichain"};
  CheckResult oracle{"independent subset filter agrees with the up-set enumeration"};
  const bool use_subsets = rs.num_positive() <= 12;
  for (const NodeSet& j : detail::all_nodesets(rs.rank())) {
    auto antichains = enumerate_J_antichains(rs, j, /*abelian_only=*/false);
    auto ideals = enumerate_J_ideals_upsets(rs, j);
    std::vector<RootSet> generated;
    generated.reserve(antichains.size());
    for (const RootSet& a : antichains) {
      gen.instances_checked++;
      RootSet phi = ideal_from_antichain(rs, a, j);
      if (!is_J_ideal(rs, phi, j) || minimal_elements(rs, phi) != a) {
        gen.add_failure("J=" + detail::format_nodeset(j) + " A=" + describe_rootset(rs, a));
      }
      generated.push_back(std::move(phi));
    }
    std::sort(generated.begin(), generated.end());
    generated.erase(std::unique(generated.begin(), generated.end()), generated.end());
    surj.instances_checked++;
    if (generated != ideals || generated.size() != antichains.size()) {
      surj.add_failure("J=" + detail::format_nodeset(j) + ": " + std::to_string(antichains.size()) +
                       " antichains vs " + std::to_string(ideals.size()) + " ideals");
    }
    for (const RootSet& phi : ideals) {
      inv.instances_checked++;
      RootSet a = minimal_elements(rs, phi);
      if (!is_J_antichain(rs, a, j) || ideal_from_antichain(rs, a, j) != phi) {
        inv.add_failure("J=" + detail::format_nodeset(j) + " Phi=" + describe_rootset(rs, phi));
      }
    }
    if (use_subsets) {
      oracle.instances_checked++;
      if (enumerate_J_ideals_subsets(rs, j) != ideals) {
        oracle.add_failure("J=" + detail::format_nodeset(j) + ": subset filter disagrees");
      }
    }
  }
  rep.checks = {std::move(gen), std::move(surj), std::move(inv)};
  if (use_subsets) rep.checks.push_back(std::move(oracle));
  return rep;
}

// ---------------------------------------------------------------------------
// Nilpotence criteria
// ---------------------------------------------------------------------------

inline Report verify_nilpotence(const RootSystem& rs) {
  Report rep{"nilpotence", {}};
  {
    CheckResult c{"antichain sum criterion matches ideal nilpotence for k in 0..3"};
    for (const RootSet& a : enumerate_J_antichains(rs, {}, /*abelian_only=*/false)) {
      int nil = nilpotence_of_ideal(rs, ideal_from_antichain(rs, a, {}));
      for (int k = 0; k <= 3; ++k) {
        c.instances_checked++;
        if (antichain_sum_criterion(rs, a, k) != (nil <= k)) {
          c.add_failure("A=" + describe_rootset(rs, a) + " k=" + std::to_string(k) +
                        " nilpotence=" + std::to_string(nil));
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"abelian test matches nilpotence at most one"};
    for (const NodeSet& j : detail::all_nodesets(rs.rank())) {
      for (const RootSet& a : enumerate_J_antichains(rs, j, /*abelian_only=*/false)) {
        c.instances_checked++;
        int nil = nilpotence_of_ideal(rs, ideal_from_antichain(rs, a, j));
        if (is_abelian_J_antichain(rs, a, j) != (nil <= 1)) {
          c.add_failure("J=" + detail::format_nodeset(j) + " A=" + describe_rootset(rs, a) +
                        " nilpotence=" + std::to_string(nil));
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Counting: totals, per-size closed forms, families
// ---------------------------------------------------------------------------

namespace detail {

inline std::map<std::string, std::map<int, long long>> family_size_counts(
    const std::vector<LabeledAntichain>& fams) {
  std::map<std::string, std::map<int, long long>> counts;
  for (const auto& f : fams) {
    counts[f.family][static_cast<int>(f.roots.size())]++;
  }
  return counts;
}

// Expected per-family, per-size cardinalities for empty J.
inline long long family_closed_form(Family fam, int n, const std::string& label, int s) {
  if (fam == Family::A) return binom(n, 2 * s) + binom(n, 2 * s - 1);
  if (fam == Family::B) {
    if (label == "1") return binom(n, 2 * s);
    return binom(n - 1, 2 * s - 2) + binom(n - 1, 2 * s - 1);
  }
  if (fam == Family::C) {
    if (label == "1") return binom(n - 1, 2 * s) + binom(n - 1, 2 * s - 1);
    return binom(n - 1, 2 * s - 1) + binom(n - 1, 2 * s - 2);
  }
  if (fam == Family::D) {
    if (label == "1") return binom(n - 2, 2 * s);
    if (label == "2") return binom(n - 3, 2 * s - 2) + binom(n - 3, 2 * s - 1);
    if (label == "3") return binom(n - 3, 2 * s - 4);
    if (label == "4x") return 2 * binom(n - 2, 2 * s - 2);
    if (label == "5") return binom(n - 3, 2 * s - 5);
    if (label == "6") return 3 * binom(n - 2, 2 * s - 1);
  }
  throw usage_error("family_closed_form: unknown family label");
}

// For type B, checks a beta or alpha member against the printed parabolic
// index conditions; 1-based epsilon indices.
inline bool b_member_allowed(const RootSystem& rs, int idx, const std::set<int>& Jp) {
  auto eps = rs.to_epsilon(idx);
  std::vector<int> plus, minus;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (eps[k] == 1) plus.push_back(static_cast<int>(k) + 1);
    if (eps[k] == -1) minus.push_back(static_cast<int>(k) + 1);
  }
  const int n = rs.rank();
  if (plus.size() == 2) {  // beta_{i,j} = eps_i + eps_j
    int i = plus[0], j = plus[1];
    if (Jp.count(j)) return false;
    if (Jp.count(i)) return j == i + 1;
    return true;
  }
  // alpha_{1,l} = eps_1 - eps_{l+1} or eps_1
  int l = minus.empty() ? n : minus[0] - 1;
  return !Jp.count(1) && !Jp.count(l);
}

inline bool c_member_allowed(const RootSystem& rs, int idx, const std::set<int>& Jp,
                             const std::string& label) {
  auto eps = rs.to_epsilon(idx);
  const int n = rs.rank();
  std::vector<int> touched;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (eps[k] != 0) touched.push_back(static_cast<int>(k) + 1);
  }
  for (int t : touched) {
    if (Jp.count(t)) return false;
  }
  if (label == "2") {
    // the alpha_{l,n} member touches position n; the betas must not
    bool is_alpha = std::find(touched.begin(), touched.end(), n) != touched.end();
    if (is_alpha && Jp.count(n)) return false;
  }
  return true;
}

}  // namespace detail

inline Report verify_peterson(const RootSystem& rs) {
  Report rep{"peterson", {}};
  const int n = rs.rank();
  const RootSystemSpec& spec = rs.spec();

  auto abelian_all = enumerate_J_antichains(rs, {}, /*abelian_only=*/true);
  {
    CheckResult c{"abelian antichain total is 2^rank"};
    c.instances_checked = static_cast<long long>(abelian_all.size());
    if (static_cast<long long>(abelian_all.size()) != closed_form_total(spec, {})) {
      c.add_failure("counted " + std::to_string(abelian_all.size()) + ", expected " +
                    std::to_string(closed_form_total(spec, {})));
    }
    rep.checks.push_back(std::move(c));
  }

  if (rs.is_classical()) {
    std::map<int, long long> by_size;
    int smax = 0;
    for (const RootSet& a : abelian_all) {
      by_size[static_cast<int>(a.size())]++;
      smax = std::max(smax, static_cast<int>(a.size()));
    }
    {
      CheckResult c{"per-size counts match the closed forms"};
      for (int s = 0; s <= smax + 1; ++s) {
        c.instances_checked++;
        long long got = by_size.count(s) ? by_size[s] : 0;
        long long want = closed_form_count(spec, {}, s);
        if (got != want) {
          c.add_failure("size " + std::to_string(s) + ": counted " + std::to_string(got) +
                        ", closed form " + std::to_string(want));
        }
      }
      rep.checks.push_back(std::move(c));
    }

    auto fams = classical_abelian_families(rs, {});
    {
      CheckResult c{"labeled families are distinct abelian antichains"};
      std::set<RootSet> seen;
      for (const auto& f : fams) {
        c.instances_checked++;
        if (!seen.insert(f.roots).second) {
          c.add_failure("family " + f.family + " duplicates " + describe_rootset(rs, f.roots));
        } else if (!is_J_antichain(rs, f.roots, {}) || !is_abelian_J_antichain(rs, f.roots, {})) {
          c.add_failure("family " + f.family + " member " + describe_rootset(rs, f.roots) +
                        " is not an abelian antichain");
        }
      }
      rep.checks.push_back(std::move(c));
    }
    {
      CheckResult c{"labeled families with the empty set exhaust the abelian antichains"};
      std::vector<RootSet> family_sets{{}};
      for (const auto& f : fams) family_sets.push_back(f.roots);
      std::sort(family_sets.begin(), family_sets.end());
      std::vector<RootSet> enumerated = abelian_all;
      std::sort(enumerated.begin(), enumerated.end());
      c.instances_checked = static_cast<long long>(enumerated.size());
      if (family_sets != enumerated) {
        c.add_failure("family union has " + std::to_string(family_sets.size()) +
                      " sets, enumeration has " + std::to_string(enumerated.size()));
      }
      rep.checks.push_back(std::move(c));
    }
    {
      CheckResult c{"per-family counts match their closed forms"};
      auto counts = detail::family_size_counts(fams);
      std::vector<std::string> labels;
      if (spec.family == Family::A) labels = {"a"};
      if (spec.family == Family::B || spec.family == Family::C) labels = {"1", "2"};
      if (spec.family == Family::D) labels = {"1", "2", "3", "4x", "5", "6"};
      for (const std::string& label : labels) {
        for (int s = 1; s <= smax + 1; ++s) {
          c.instances_checked++;
          long long got = 0;
          if (label == "4x") {
            if (counts.count("4") && counts["4"].count(s)) got += counts["4"][s];
            if (counts.count("x") && counts["x"].count(s)) got += counts["x"][s];
          } else if (counts.count(label) && counts[label].count(s)) {
            got = counts[label][s];
          }
          long long want = detail::family_closed_form(spec.family, n, label, s);
          if (got != want) {
            c.add_failure("family " + label + " size " + std::to_string(s) + ": counted " +
                          std::to_string(got) + ", closed form " + std::to_string(want));
          }
        }
      }
      rep.checks.push_back(std::move(c));
    }
  }

  {
    CheckResult total{"parabolic totals follow the power law"};
    CheckResult filt{"family filter matches parabolic enumeration"};
    CheckResult a_sizes{"parabolic per-size counts match the closed forms"};
    CheckResult b_shape{"parabolic family members obey the printed index conditions"};
    for (const NodeSet& j : detail::all_nodesets(n)) {
      auto abelian_j = enumerate_J_antichains(rs, j, /*abelian_only=*/true);
      // The 2^(n-#J) total is a theorem only for the two families whose
      // parabolic counts telescope; other families obey it just at J empty
      // (covered above) and genuinely deviate otherwise, e.g. the rank-3
      // odd orthogonal system at J={1} has 3 abelian antichains, not 4.
      bool power_law_applies =
          j.empty() || spec.family == Family::A || spec.family == Family::C;
      if (power_law_applies) {
        total.instances_checked++;
        if (static_cast<long long>(abelian_j.size()) != closed_form_total(spec, j)) {
          total.add_failure("J=" + detail::format_nodeset(j) + ": counted " +
                            std::to_string(abelian_j.size()) + ", expected " +
                            std::to_string(closed_form_total(spec, j)));
        }
      }
      if (!rs.is_classical()) continue;
      auto fams_j = classical_abelian_families(rs, j);
      std::vector<RootSet> family_sets{{}};
      for (const auto& f : fams_j) family_sets.push_back(f.roots);
      std::sort(family_sets.begin(), family_sets.end());
      std::vector<RootSet> enumerated = abelian_j;
      std::sort(enumerated.begin(), enumerated.end());
      filt.instances_checked++;
      if (family_sets != enumerated) {
        filt.add_failure("J=" + detail::format_nodeset(j) + ": filtered families (" +
                         std::to_string(family_sets.size()) + ") vs enumeration (" +
                         std::to_string(enumerated.size()) + ")");
      }
      if (spec.family == Family::A) {
        std::map<int, long long> by_size;
        int smax = 0;
        for (const RootSet& a : abelian_j) {
          by_size[static_cast<int>(a.size())]++;
          smax = std::max(smax, static_cast<int>(a.size()));
        }
        for (int s = 0; s <= smax + 1; ++s) {
          a_sizes.instances_checked++;
          long long got = by_size.count(s) ? by_size[s] : 0;
          if (got != closed_form_count(spec, j, s)) {
            a_sizes.add_failure("J=" + detail::format_nodeset(j) + " size " + std::to_string(s));
          }
        }
      }
      if (spec.family == Family::B || spec.family == Family::C) {
        std::set<int> Jp;
        for (int node : j) Jp.insert(node + 1);
        for (const auto& f : fams_j) {
          for (int idx : f.roots) {
            b_shape.instances_checked++;
            bool ok = spec.family == Family::B ? detail::b_member_allowed(rs, idx, Jp)
                                               : detail::c_member_allowed(rs, idx, Jp, f.family);
            if (!ok) {
              b_shape.add_failure("J=" + detail::format_nodeset(j) + " family " + f.family +
                                  " member " + describe_rootset(rs, {idx}));
            }
          }
        }
      }
    }
    rep.checks.push_back(std::move(total));
    if (rs.is_classical()) rep.checks.push_back(std::move(filt));
    if (spec.family == Family::A) rep.checks.push_back(std::move(a_sizes));
    if (spec.family == Family::B || spec.family == Family::C) rep.checks.push_back(std::move(b_shape));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Subset equivalence sweep
// ---------------------------------------------------------------------------

inline Report verify_theorem2(const RootSystem& rs, int threads = 1) {
  return check_equivalence(rs, threads);
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

inline Report verify_classification(const RootSystem& rs) {
  Report rep{"classification", {}};
  const int n = rs.rank();
  std::vector<RootSet> cl = enumerate_irreducible_S(rs);

  {
    CheckResult c{"classified sets satisfy both defining conditions"};
    for (const RootSet& s : cl) {
      c.instances_checked++;
      if (!cond_iv(rs, s) || !cond_i(rs, s)) {
        c.add_failure("S=" + describe_rootset(rs, s));
      }
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"classification is closed under the Weyl group"};
    std::set<RootSet> known(cl.begin(), cl.end());
    for (const RootSet& s : cl) {
      for (int node = 0; node < n; ++node) {
        c.instances_checked++;
        RootSet img;
        img.reserve(s.size());
        for (int idx : s) img.push_back(rs.reflect(node, idx));
        std::sort(img.begin(), img.end());
        if (!known.count(img)) {
          c.add_failure("reflection of S=" + describe_rootset(rs, s) + " at node " +
                        std::to_string(node + 1) + " is unclassified");
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }
  if (rs.num_roots() <= 18) {
    CheckResult c{"exhaustive search agrees with the orbit closure"};
    c.instances_checked = static_cast<long long>(cl.size());
    if (enumerate_irreducible_S_exhaustive(rs) != enumerate_irreducible_S_orbit(rs)) {
      c.add_failure("exhaustive and orbit enumerations differ");
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"every standard parabolic irreducible ideal is classified"};
    CheckResult ab{"parabolic irreducible ideals are abelian and lie in every nonzero J-ideal"};
    std::set<RootSet> known(cl.begin(), cl.end());
    for (const NodeSet& j : detail::all_nodesets(n)) {
      if (static_cast<int>(j.size()) == n) continue;
      RootSet i0 = i0_of_parabolic(rs, j);
      c.instances_checked++;
      if (!known.count(i0)) {
        c.add_failure("J=" + detail::format_nodeset(j) + " ideal " + describe_rootset(rs, i0));
      }
      ab.instances_checked++;
      bool good = is_J_ideal(rs, i0, j) && nilpotence_of_ideal(rs, i0) <= 1;
      if (good) {
        for (const RootSet& phi : enumerate_J_ideals_upsets(rs, j)) {
          if (phi.empty()) continue;
          if (!std::includes(phi.begin(), phi.end(), i0.begin(), i0.end())) {
            good = false;
            break;
          }
        }
      }
      if (!good) {
        ab.add_failure("J=" + detail::format_nodeset(j) + " ideal " + describe_rootset(rs, i0));
      }
    }
    rep.checks.push_back(std::move(c));
    rep.checks.push_back(std::move(ab));
  }

  if (rs.is_classical()) {
    auto fams = classical_S_families(rs);
    std::set<RootSet> known(cl.begin(), cl.end());
    {
      CheckResult c{"printed family sets are classified"};
      for (const auto& f : fams) {
        c.instances_checked++;
        if (!known.count(f.roots)) {
          c.add_failure("family " + f.family + " set " + describe_rootset(rs, f.roots));
        }
      }
      rep.checks.push_back(std::move(c));
    }
    {
      CheckResult c{"printed family weight sums match their closed forms"};
      const int dim = rs.ambient_dim();
      for (const auto& f : fams) {
        c.instances_checked++;
        std::vector<int> expected(static_cast<std::size_t>(dim), 0);
        long long isz = static_cast<long long>(f.i_set.size());
        long long jsz = static_cast<long long>(f.j_set.size());
        long long coef = 0;
        if (f.family == "ij") {
          coef = rs.family() == Family::A ? 0 : isz + jsz + 1;  // A handled separately
        } else if (f.family == "a") {
          coef = isz + jsz - 1;
        } else {
          coef = rs.family() == Family::B ? 2 * n - 1 : 2 * n - 2;
          if (f.family == "b-") coef = -coef;
        }
        if (rs.family() == Family::A) {
          for (int i : f.i_set) expected[static_cast<std::size_t>(i - 1)] += static_cast<int>(jsz);
          for (int j : f.j_set) expected[static_cast<std::size_t>(j - 1)] -= static_cast<int>(isz);
        } else if (f.family == "b+" || f.family == "b-") {
          expected[static_cast<std::size_t>(f.i_set[0] - 1)] = static_cast<int>(coef);
        } else {
          for (int i : f.i_set) expected[static_cast<std::size_t>(i - 1)] += static_cast<int>(coef);
          for (int j : f.j_set) expected[static_cast<std::size_t>(j - 1)] -= static_cast<int>(coef);
        }
        if (rs.epsilon_of(two_rho_S(rs, f.roots)) != expected) {
          c.add_failure("family " + f.family + " set " + describe_rootset(rs, f.roots));
        }
      }
      rep.checks.push_back(std::move(c));
    }
    if (rs.family() == Family::A || rs.family() == Family::C) {
      CheckResult c{"printed families exhaust the classification"};
      std::set<RootSet> fam_sets;
      for (const auto& f : fams) fam_sets.insert(f.roots);
      c.instances_checked = static_cast<long long>(cl.size());
      for (const RootSet& s : cl) {
        if (!fam_sets.count(s)) {
          c.add_failure("unlabeled classified set " + describe_rootset(rs, s));
        }
      }
      rep.checks.push_back(std::move(c));
    } else {
      std::set<RootSet> fam_sets;
      for (const auto& f : fams) fam_sets.insert(f.roots);
      long long unmatched = 0;
      for (const RootSet& s : cl) {
        if (!fam_sets.count(s)) unmatched++;
      }
      CheckResult c{"printed patterns label " + std::to_string(cl.size() - unmatched) + " of " +
                    std::to_string(cl.size()) + " classified sets (remainder verified directly)"};
      c.instances_checked = static_cast<long long>(cl.size());
      rep.checks.push_back(std::move(c));
    }
  }

  if (rs.family() == Family::G) {
    CheckResult c{"no classified set contains a short root"};
    for (const RootSet& s : cl) {
      c.instances_checked++;
      for (int idx : s) {
        if (!rs.is_long(idx)) {
          c.add_failure("S=" + describe_rootset(rs, s) + " contains a short root");
          break;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Parabolic containment corollary
// ---------------------------------------------------------------------------

inline Report verify_corollary_suite(const RootSystem& rs) {
  Report rep{"corollary", {}};
  CheckResult transport{"dominant transport lands S in the positive roots with the highest root inside"};
  CheckResult ideal{"the zero-pairing nodes select a parabolic whose irreducible ideal is the transported S"};
  CheckResult containment{"every standard parabolic sharing the irreducible ideal is contained in the weight parabolic"};
  for (const RootSet& s : enumerate_irreducible_S(rs)) {
    Report one = verify_corollary(rs, s);
    for (std::size_t k = 0; k < one.checks.size(); ++k) {
      CheckResult* target = k == 0 ? &transport : k == 1 ? &ideal : &containment;
      target->instances_checked += one.checks[k].instances_checked;
      for (const auto& f : one.checks[k].failures) target->add_failure(f);
      target->suppressed_failures += one.checks[k].suppressed_failures;
    }
  }
  rep.checks = {std::move(transport), std::move(ideal), std::move(containment)};
  return rep;
}

}  // namespace parideal
