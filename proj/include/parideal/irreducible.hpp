#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "parideal/poset_ideals.hpp"
#include "parideal/report.hpp"
#include "parideal/root_system.hpp"

namespace parideal {

// Subsets S considered here live in the full root set (both signs).

inline std::string describe_rootset(const RootSystem& rs, const RootSet& S) {
  std::string s = "{";
  for (std::size_t k = 0; k < S.size(); ++k) {
    if (k) s += ",";
    const Coeffs& c = rs.root(S[k]);
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    s += ")";
  }
  s += "}";
  return s;
}

// Sum of the coefficient vectors of S; twice the half-sum of S.
inline Coeffs two_rho_S(const RootSystem& rs, const RootSet& S) {
  RootSet s = canonical_rootset(rs, S, /*require_positive=*/false);
  Coeffs acc(static_cast<std::size_t>(rs.rank()), 0);
  for (int idx : s) {
    const Coeffs& c = rs.root(idx);
    for (int i = 0; i < rs.rank(); ++i) acc[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
  }
  return acc;
}

inline Rational max_pairing(const RootSystem& rs, const Weight& lambda) {
  Rational best = rs.pairing(lambda, 0);
  for (int r = 1; r < rs.num_roots(); ++r) {
    Rational p = rs.pairing(lambda, r);
    if (best < p) best = p;
  }
  return best;
}

// The roots where (lambda, .) attains its maximum over the whole root set.
inline RootSet S_of_lambda(const RootSystem& rs, const Weight& lambda) {
  std::vector<Rational> vals;
  vals.reserve(static_cast<std::size_t>(rs.num_roots()));
  Rational best;
  for (int r = 0; r < rs.num_roots(); ++r) {
    vals.push_back(rs.pairing(lambda, r));
    if (r == 0 || best < vals.back()) best = vals.back();
  }
  RootSet out;
  for (int r = 0; r < rs.num_roots(); ++r) {
    if (vals[static_cast<std::size_t>(r)] == best) out.push_back(r);
  }
  return out;
}

namespace detail {

inline std::uint64_t pack_vec(const std::vector<int>& v) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    key |= static_cast<std::uint64_t>(v[i] + 64) << (7 * i);
  }
  return key;
}

inline std::vector<char> member_flags(const RootSystem& rs, const RootSet& s) {
  std::vector<char> f(static_cast<std::size_t>(rs.num_roots()), 0);
  for (int idx : s) f[static_cast<std::size_t>(idx)] = 1;
  return f;
}

}  // namespace detail

// Minimum number of roots (with repetition) summing to eta, searched
// breadth-first up to max_depth; 0 for eta = 0, nullopt when unreachable
// within the bound.
inline std::optional<int> bod(const RootSystem& rs, const Coeffs& eta, int max_depth) {
  if (static_cast<int>(eta.size()) != rs.rank()) throw usage_error("bod: dimension mismatch");
  if (max_depth < 0 || max_depth > 10) throw usage_error("bod: depth must be in 0..10");
  bool zero = true;
  for (int x : eta) zero = zero && x == 0;
  if (zero) return 0;
  std::vector<Coeffs> frontier{Coeffs(static_cast<std::size_t>(rs.rank()), 0)};
  std::unordered_set<std::uint64_t> seen{detail::pack_vec(frontier[0])};
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Coeffs> next;
    for (const Coeffs& v : frontier) {
      for (int r = 0; r < rs.num_roots(); ++r) {
        Coeffs w = v;
        const Coeffs& c = rs.root(r);
        bool in_range = true;
        for (int i = 0; i < rs.rank(); ++i) {
          w[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
          if (w[static_cast<std::size_t>(i)] > 63 || w[static_cast<std::size_t>(i)] < -63) {
            in_range = false;
          }
        }
        if (w == eta) return d;
        if (!in_range) continue;
        std::uint64_t key = detail::pack_vec(w);
        if (seen.insert(key).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// All multisets of at most `depth` roots, grouped by their sum: for each
// reachable sum, the minimum multiset size and every multiset attaining it.
struct BoundedDecompositions {
  int depth;
  struct Entry {
    int min_size = 0;
    std::vector<std::vector<int>> witnesses;  // sorted index multisets
  };
  std::unordered_map<std::uint64_t, Entry> by_sum;

  explicit BoundedDecompositions(const RootSystem& rs, int depth_in = 3) : depth(depth_in) {
    if (depth < 1 || depth > 4) throw usage_error("BoundedDecompositions: depth must be 1..4");
    Coeffs sum(static_cast<std::size_t>(rs.rank()), 0);
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int start) -> void {
      if (!stack.empty()) {
        std::uint64_t key = detail::pack_vec(sum);
        auto [it, inserted] = by_sum.try_emplace(key);
        Entry& e = it->second;
        int sz = static_cast<int>(stack.size());
        if (inserted || sz < e.min_size) {
          e.min_size = sz;
          e.witnesses.clear();
          e.witnesses.push_back(stack);
        } else if (sz == e.min_size) {
          e.witnesses.push_back(stack);
        }
      }
      if (static_cast<int>(stack.size()) == depth) return;
      for (int r = start; r < rs.num_roots(); ++r) {
        const Coeffs& c = rs.root(r);
        for (int i = 0; i < rs.rank(); ++i) sum[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
        stack.push_back(r);
        self(self, r);
        stack.pop_back();
        for (int i = 0; i < rs.rank(); ++i) sum[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i)];
      }
    };
    dfs(dfs, 0);
  }
};

// Closure/maximality condition: no two members (equal allowed) sum to a
// root, and no root outside S can reach S+S by adding a root.
inline bool cond_iv(const RootSystem& rs, const RootSet& S) {
  RootSet s = canonical_rootset(rs, S, /*require_positive=*/false);
  if (s.empty()) return false;
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x; y < s.size(); ++y) {
      if (rs.add(s[x], s[y]) >= 0) return false;
    }
  }
  std::unordered_set<std::uint64_t> sums;
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x; y < s.size(); ++y) {
      Coeffs v = rs.root(s[x]);
      const Coeffs& c = rs.root(s[y]);
      for (int i = 0; i < rs.rank(); ++i) v[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
      sums.insert(detail::pack_vec(v));
    }
  }
  auto member = detail::member_flags(rs, s);
  for (int g = 0; g < rs.num_roots(); ++g) {
    if (member[static_cast<std::size_t>(g)]) continue;
    for (int d = 0; d < rs.num_roots(); ++d) {
      Coeffs v = rs.root(g);
      const Coeffs& c = rs.root(d);
      for (int i = 0; i < rs.rank(); ++i) v[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
      if (sums.count(detail::pack_vec(v))) return false;
    }
  }
  return true;
}

// Extremal-weight condition at the canonical witness: the pairing with the
// doubled weight sum of S is maximized exactly on S, with positive maximum.
inline bool cond_i(const RootSystem& rs, const RootSet& S) {
  RootSet s = canonical_rootset(rs, S, /*require_positive=*/false);
  if (s.empty()) return false;
  Coeffs lambda = two_rho_S(rs, s);
  long long best = 0;
  bool first = true;
  std::vector<long long> vals(static_cast<std::size_t>(rs.num_roots()));
  for (int r = 0; r < rs.num_roots(); ++r) {
    long long p = rs.pair6_with(lambda, r);
    vals[static_cast<std::size_t>(r)] = p;
    if (first || p > best) {
      best = p;
      first = false;
    }
  }
  if (best <= 0) return false;
  RootSet arg;
  for (int r = 0; r < rs.num_roots(); ++r) {
    if (vals[static_cast<std::size_t>(r)] == best) arg.push_back(r);
  }
  return arg == s;
}

// Extremal-weight condition at an explicit witness lambda.
inline bool cond_ii(const RootSystem& rs, const RootSet& S, const Weight& lambda) {
  RootSet s = canonical_rootset(rs, S, /*require_positive=*/false);
  if (s.empty()) return false;
  if (!(Rational(0) < max_pairing(rs, lambda))) return false;
  return S_of_lambda(rs, lambda) == s;
}

// Bounded decomposition-minimality condition: every multiset of at most
// `table.depth` members of S attains the global minimum size among root
// decompositions of its sum, and every minimum-size decomposition of such a
// sum stays inside S.  The empty decomposition of 0 is not considered; mixed
// +/- multisets inside S still expose violations through their sums.
inline bool cond_iii(const RootSystem& rs, const RootSet& S, const BoundedDecompositions& table) {
  RootSet s = canonical_rootset(rs, S, /*require_positive=*/false);
  if (s.empty()) return false;
  auto member = detail::member_flags(rs, s);
  Coeffs sum(static_cast<std::size_t>(rs.rank()), 0);
  std::vector<int> stack;
  bool ok = true;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (!ok) return;
    if (!stack.empty()) {
      const auto& entry = table.by_sum.at(detail::pack_vec(sum));
      if (static_cast<int>(stack.size()) != entry.min_size) {
        ok = false;
        return;
      }
      for (const auto& w : entry.witnesses) {
        for (int idx : w) {
          if (!member[static_cast<std::size_t>(idx)]) {
            ok = false;
            return;
          }
        }
      }
    }
    if (static_cast<int>(stack.size()) == table.depth) return;
    for (std::size_t k = start; k < s.size() && ok; ++k) {
      const Coeffs& c = rs.root(s[k]);
      for (int i = 0; i < rs.rank(); ++i) sum[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
      stack.push_back(s[k]);
      self(self, k);
      stack.pop_back();
      for (int i = 0; i < rs.rank(); ++i) sum[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i)];
    }
  };
  dfs(dfs, 0);
  return ok;
}

inline bool cond_iii(const RootSystem& rs, const RootSet& S, int depth = 3) {
  BoundedDecompositions table(rs, depth);
  return cond_iii(rs, S, table);
}

// Checks over every nonempty subset of R that the three intrinsic conditions
// agree, and that the canonical weight witnesses the extremal condition
// whenever they hold.  Exhaustive; capped at 14 roots.
inline Report check_equivalence(const RootSystem& rs, int threads = 1) {
  if (rs.num_roots() > 14) {
    throw scale_cap_error("subset equivalence sweep is capped at 14 roots (2^14 subsets)");
  }
  if (threads < 1) threads = 1;
  BoundedDecompositions table(rs, 3);
  const std::uint32_t total = (std::uint32_t{1} << rs.num_roots()) - 1;

  struct Chunk {
    CheckResult i_iv{"condition (i) matches condition (iv) on every nonempty subset"};
    CheckResult iii_iv{"condition (iii) matches condition (iv) on every nonempty subset"};
    CheckResult witness{"condition (i) supplies an explicit extremal weight witness"};
  };
  std::vector<Chunk> chunks(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    Chunk& ch = chunks[static_cast<std::size_t>(t)];
    for (std::uint32_t mask = 1; mask <= total; ++mask) {
      if (static_cast<int>(mask % static_cast<std::uint32_t>(threads)) != t) continue;
      RootSet s;
      for (int r = 0; r < rs.num_roots(); ++r) {
        if (mask >> r & 1) s.push_back(r);
      }
      bool iv = cond_iv(rs, s);
      bool i = cond_i(rs, s);
      bool iii = cond_iii(rs, s, table);
      ch.i_iv.instances_checked++;
      if (i != iv) {
        ch.i_iv.add_failure("S=" + describe_rootset(rs, s) + ": cond_i=" + (i ? "true" : "false") +
                            " cond_iv=" + (iv ? "true" : "false"));
      }
      ch.iii_iv.instances_checked++;
      if (iii != iv) {
        ch.iii_iv.add_failure("S=" + describe_rootset(rs, s) + ": cond_iii=" +
                              (iii ? "true" : "false") + " cond_iv=" + (iv ? "true" : "false"));
      }
      if (i) {
        ch.witness.instances_checked++;
        Weight lambda = Weight::from_coeffs(two_rho_S(rs, s));
        if (!cond_ii(rs, s, lambda)) {
          ch.witness.add_failure("S=" + describe_rootset(rs, s) +
                                 ": doubled weight sum fails as witness");
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Report rep{"theorem2", {}};
  CheckResult a{"condition (i) matches condition (iv) on every nonempty subset"};
  CheckResult b{"condition (iii) matches condition (iv) on every nonempty subset"};
  CheckResult c{"condition (i) supplies an explicit extremal weight witness"};
  for (const Chunk& ch : chunks) {
    a.instances_checked += ch.i_iv.instances_checked;
    for (const auto& f : ch.i_iv.failures) a.add_failure(f);
    a.suppressed_failures += ch.i_iv.suppressed_failures;
    b.instances_checked += ch.iii_iv.instances_checked;
    for (const auto& f : ch.iii_iv.failures) b.add_failure(f);
    b.suppressed_failures += ch.iii_iv.suppressed_failures;
    c.instances_checked += ch.witness.instances_checked;
    for (const auto& f : ch.witness.failures) c.add_failure(f);
    c.suppressed_failures += ch.witness.suppressed_failures;
  }
  rep.checks = {std::move(a), std::move(b), std::move(c)};
  return rep;
}

// ---------------------------------------------------------------------------
// Parabolics and their irreducible ideals
// ---------------------------------------------------------------------------

struct Parabolic {
  std::optional<NodeSet> J;  // set when the parabolic is standard
  RootSet levi;              // roots of the reductive part
  RootSet nilradical;        // positive roots of the nilradical
};

inline Parabolic parabolic_from_J(const RootSystem& rs, const NodeSet& J) {
  NodeSet j = canonical_nodeset(rs, J);
  auto [both, pos] = restricted_roots(rs, j);
  Parabolic p;
  p.J = j;
  p.levi = both;
  std::vector<char> in_levi(static_cast<std::size_t>(rs.num_roots()), 0);
  for (int idx : both) in_levi[static_cast<std::size_t>(idx)] = 1;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    if (!in_levi[static_cast<std::size_t>(idx)]) p.nilradical.push_back(idx);
  }
  return p;
}

inline Parabolic parabolic_from_weight(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw usage_error("parabolic_from_weight: dimension mismatch");
  if (lambda.is_zero()) throw usage_error("parabolic_from_weight: weight must be nonzero");
  Parabolic p;
  bool dominant = true;
  for (int i = 0; i < rs.rank(); ++i) {
    if (rs.cov_pairing(lambda, i).sign() < 0) dominant = false;
  }
  for (int r = 0; r < rs.num_roots(); ++r) {
    int sgn = rs.pairing(lambda, r).sign();
    if (sgn == 0) p.levi.push_back(r);
    if (sgn > 0) p.nilradical.push_back(r);
  }
  if (dominant) {
    NodeSet j;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.cov_pairing(lambda, i).sign() == 0) j.push_back(i);
    }
    p.J = j;
  }
  return p;
}

// The irreducible ideal of the standard parabolic p_J: positive roots whose
// coordinates outside J agree with those of the highest root.
inline RootSet i0_of_parabolic(const RootSystem& rs, const NodeSet& J) {
  NodeSet j = canonical_nodeset(rs, J);
  if (static_cast<int>(j.size()) >= rs.rank()) {
    throw usage_error("i0_of_parabolic: J must be a proper subset of the nodes");
  }
  std::vector<char> in_j(static_cast<std::size_t>(rs.rank()), 0);
  for (int node : j) in_j[static_cast<std::size_t>(node)] = 1;
  const Coeffs& th = rs.root(rs.theta());
  RootSet out;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    const Coeffs& c = rs.root(idx);
    bool match = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!in_j[static_cast<std::size_t>(i)] &&
          c[static_cast<std::size_t>(i)] != th[static_cast<std::size_t>(i)]) {
        match = false;
        break;
      }
    }
    if (match) out.push_back(idx);
  }
  return out;
}

inline RootSet irreducible_ideal_of_parabolic(const RootSystem& rs, const Parabolic& p) {
  if (!p.J) {
    throw usage_error("irreducible_ideal_of_parabolic: parabolic must be standard (given by J)");
  }
  return i0_of_parabolic(rs, *p.J);
}

// ---------------------------------------------------------------------------
// Enumeration of all subsets satisfying the closure and extremal conditions
// ---------------------------------------------------------------------------

inline std::vector<RootSet> enumerate_irreducible_S_exhaustive(const RootSystem& rs) {
  if (rs.num_roots() > 18) {
    throw scale_cap_error("exhaustive irreducible-set search is capped at 18 roots");
  }
  std::vector<RootSet> out;
  const std::uint32_t total = (std::uint32_t{1} << rs.num_roots()) - 1;
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    RootSet s;
    for (int r = 0; r < rs.num_roots(); ++r) {
      if (mask >> r & 1) s.push_back(r);
    }
    if (cond_iv(rs, s) && cond_i(rs, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Weyl-orbit closure of the standard parabolic irreducible ideals, filtered
// by the defining conditions.  Every valid S is conjugate to a standard
// parabolic's irreducible ideal, so the closure is complete.
inline std::vector<RootSet> enumerate_irreducible_S_orbit(const RootSystem& rs) {
  std::set<RootSet> seen;
  std::vector<RootSet> queue;
  const int n = rs.rank();
  for (std::uint32_t jm = 0; jm + 1 < (std::uint32_t{1} << n); ++jm) {
    NodeSet j;
    for (int i = 0; i < n; ++i) {
      if (jm >> i & 1) j.push_back(i);
    }
    RootSet s = i0_of_parabolic(rs, j);
    if (seen.insert(s).second) queue.push_back(std::move(s));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    RootSet cur = queue[head];
    for (int node = 0; node < n; ++node) {
      RootSet img;
      img.reserve(cur.size());
      for (int idx : cur) img.push_back(rs.reflect(node, idx));
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  std::vector<RootSet> out;
  for (const RootSet& s : seen) {
    if (cond_iv(rs, s) && cond_i(rs, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<RootSet> enumerate_irreducible_S(const RootSystem& rs) {
  if (rs.family() == Family::E) {
    throw scale_cap_error("irreducible-set classification for the E series exceeds the supported scale");
  }
  if (rs.num_roots() <= 18) return enumerate_irreducible_S_exhaustive(rs);
  return enumerate_irreducible_S_orbit(rs);
}

// ---------------------------------------------------------------------------
// Dominant transport and the parabolic containment statement
// ---------------------------------------------------------------------------

// For S with cond_iv && cond_i: transports the doubled weight sum to the
// dominant chamber, checks the transported S is the irreducible ideal of the
// standard parabolic it selects, and that every standard parabolic with the
// same irreducible ideal is contained in it.
inline Report verify_corollary(const RootSystem& rs, const RootSet& S) {
  RootSet s = canonical_rootset(rs, S, /*require_positive=*/false);
  if (!cond_iv(rs, s)) {
    throw usage_error("verify_corollary: S must satisfy the closure condition");
  }
  Report rep{"corollary", {}};
  CheckResult transport{"dominant transport lands S in the positive roots with the highest root inside"};
  CheckResult ideal{"the zero-pairing nodes select a parabolic whose irreducible ideal is the transported S"};
  CheckResult containment{"every standard parabolic sharing the irreducible ideal is contained in the weight parabolic"};

  Weight lambda = Weight::from_coeffs(two_rho_S(rs, s));
  auto [dom, word] = dominant_representative(rs, lambda);
  RootSet moved;
  moved.reserve(s.size());
  for (int idx : s) moved.push_back(apply_word_to_root(rs, word, idx));
  std::sort(moved.begin(), moved.end());

  transport.instances_checked = static_cast<long long>(moved.size());
  bool all_pos = true;
  for (int idx : moved) all_pos = all_pos && rs.is_positive(idx);
  bool has_theta = std::find(moved.begin(), moved.end(), rs.theta()) != moved.end();
  if (!all_pos || !has_theta) {
    transport.add_failure("S=" + describe_rootset(rs, s) + " transported to " +
                          describe_rootset(rs, moved));
  }

  NodeSet j;
  for (int i = 0; i < rs.rank(); ++i) {
    if (rs.cov_pairing(dom, i).sign() == 0) j.push_back(i);
  }
  ideal.instances_checked = 1;
  if (static_cast<int>(j.size()) >= rs.rank()) {
    ideal.add_failure("transported weight pairs to zero with every simple root");
  } else if (i0_of_parabolic(rs, j) != moved) {
    ideal.add_failure("S=" + describe_rootset(rs, s) + ": parabolic ideal mismatch");
  }

  if (ideal.passed()) {
    auto [levi_roots, levi_pos] = restricted_roots(rs, j);
    std::vector<char> in_big(static_cast<std::size_t>(rs.num_roots()), 0);
    for (int idx = 0; idx < rs.num_positive(); ++idx) in_big[static_cast<std::size_t>(idx)] = 1;
    for (int idx : levi_roots) in_big[static_cast<std::size_t>(idx)] = 1;
    for (std::uint32_t jm = 0; jm + 1 < (std::uint32_t{1} << rs.rank()); ++jm) {
      NodeSet j2;
      for (int i = 0; i < rs.rank(); ++i) {
        if (jm >> i & 1) j2.push_back(i);
      }
      if (i0_of_parabolic(rs, j2) != moved) continue;
      containment.instances_checked++;
      for (int idx : restricted_roots(rs, j2).first) {
        if (!in_big[static_cast<std::size_t>(idx)]) {
          std::string nodes;
          for (std::size_t k = 0; k < j2.size(); ++k) {
            nodes += (k ? "," : "") + std::to_string(j2[k] + 1);
          }
          containment.add_failure("parabolic J={" + nodes + "} escapes the weight parabolic of S=" +
                                  describe_rootset(rs, s));
          break;
        }
      }
    }
  }

  rep.checks = {std::move(transport), std::move(ideal), std::move(containment)};
  return rep;
}

// For S of long roots satisfying cond_iv: histogram of the within-S
// orthogonality counts (count value -> number of members attaining it).
inline std::map<int, int> perp_census(const RootSystem& rs, const RootSet& S) {
  RootSet s = canonical_rootset(rs, S, /*require_positive=*/false);
  for (int idx : s) {
    if (!rs.is_long(idx)) throw usage_error("perp_census: S must consist of long roots");
  }
  if (!cond_iv(rs, s)) throw usage_error("perp_census: S must satisfy the closure condition");
  std::map<int, int> census;
  for (int a : s) {
    int c = 0;
    for (int b : s) {
      if (b != a && rs.pair6(a, b) == 0) ++c;
    }
    census[c]++;
  }
  return census;
}

// For beta long and alpha orthogonal to it: a pair (gamma, gamma') of roots
// with gamma not in {alpha, beta} and gamma + gamma' = alpha + beta.
inline std::optional<std::pair<int, int>> lemone_witness(const RootSystem& rs, int a, int b) {
  if (!rs.is_long(b)) throw usage_error("lemone_witness: beta must be long");
  if (rs.pair6(a, b) != 0) throw usage_error("lemone_witness: roots must be orthogonal");
  Coeffs target = rs.root(a);
  const Coeffs& cb = rs.root(b);
  for (int i = 0; i < rs.rank(); ++i) target[static_cast<std::size_t>(i)] += cb[static_cast<std::size_t>(i)];
  for (int g = 0; g < rs.num_roots(); ++g) {
    if (g == a || g == b) continue;
    Coeffs rest = target;
    const Coeffs& cg = rs.root(g);
    for (int i = 0; i < rs.rank(); ++i) rest[static_cast<std::size_t>(i)] -= cg[static_cast<std::size_t>(i)];
    int gp = rs.index_of(rest);
    if (gp >= 0) return std::make_pair(g, gp);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classical labeled families of irreducible sets
// ---------------------------------------------------------------------------

struct LabeledS {
  std::string family;      // "ij", "a", "b+", "b-"
  std::vector<int> i_set;  // 1-based epsilon indices
  std::vector<int> j_set;
  RootSet roots;
};

namespace detail {

inline int eps_index_of(const RootSystem& rs, const std::vector<int>& eps) {
  int idx = rs.index_from_epsilon(eps);
  if (idx < 0) throw std::logic_error("internal: family member is not a root");
  return idx;
}

inline std::vector<int> unit_eps(int dim, int pos1, int c) {
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(pos1 - 1)] = c;
  return v;
}

inline std::vector<int> pair_eps(int dim, int p1, int c1, int p2, int c2) {
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(p1 - 1)] += c1;
  v[static_cast<std::size_t>(p2 - 1)] += c2;
  return v;
}

// Iterates all (I, J) disjoint subset pairs of {1..dim} via ternary masks.
template <typename F>
inline void for_disjoint_pairs(int dim, F&& f) {
  std::vector<int> assign(static_cast<std::size_t>(dim), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == dim) {
      std::vector<int> I, J;
      for (int k = 0; k < dim; ++k) {
        if (assign[static_cast<std::size_t>(k)] == 1) I.push_back(k + 1);
        if (assign[static_cast<std::size_t>(k)] == 2) J.push_back(k + 1);
      }
      f(I, J);
      return;
    }
    for (int v = 0; v < 3; ++v) {
      assign[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// The printed classical patterns of irreducible sets with their epsilon
// index data.  Types A-D only; the classification itself can contain sets
// beyond these patterns in types B and D.
inline std::vector<LabeledS> classical_S_families(const RootSystem& rs) {
  if (!rs.is_classical()) {
    throw unsupported_error("classical_S_families: types A-D only");
  }
  const int n = rs.rank();
  const int dim = rs.ambient_dim();
  std::vector<LabeledS> out;
  auto finish = [&](LabeledS s) {
    std::sort(s.roots.begin(), s.roots.end());
    out.push_back(std::move(s));
  };
  switch (rs.family()) {
    case Family::A:
      detail::for_disjoint_pairs(dim, [&](const std::vector<int>& I, const std::vector<int>& J) {
        if (I.empty() || J.empty()) return;
        LabeledS s{"ij", I, J, {}};
        for (int i : I) {
          for (int j : J) {
            s.roots.push_back(detail::eps_index_of(rs, detail::pair_eps(dim, i, 1, j, -1)));
          }
        }
        finish(std::move(s));
      });
      break;
    case Family::C:
      detail::for_disjoint_pairs(dim, [&](const std::vector<int>& I, const std::vector<int>& J) {
        if (I.empty() && J.empty()) return;
        LabeledS s{"ij", I, J, {}};
        for (std::size_t x = 0; x < I.size(); ++x) {
          for (std::size_t y = x; y < I.size(); ++y) {
            s.roots.push_back(detail::eps_index_of(
                rs, I[x] == I[y] ? detail::unit_eps(dim, I[x], 2)
                                 : detail::pair_eps(dim, I[x], 1, I[y], 1)));
          }
        }
        for (std::size_t x = 0; x < J.size(); ++x) {
          for (std::size_t y = x; y < J.size(); ++y) {
            s.roots.push_back(detail::eps_index_of(
                rs, J[x] == J[y] ? detail::unit_eps(dim, J[x], -2)
                                 : detail::pair_eps(dim, J[x], -1, J[y], -1)));
          }
        }
        for (int i : I) {
          for (int j : J) {
            s.roots.push_back(detail::eps_index_of(rs, detail::pair_eps(dim, i, 1, j, -1)));
          }
        }
        finish(std::move(s));
      });
      break;
    case Family::B:
    case Family::D: {
      const bool has_short = rs.family() == Family::B;
      detail::for_disjoint_pairs(dim, [&](const std::vector<int>& I, const std::vector<int>& J) {
        if (static_cast<int>(I.size() + J.size()) < 2) return;
        LabeledS s{"a", I, J, {}};
        for (std::size_t x = 0; x < I.size(); ++x) {
          for (std::size_t y = x + 1; y < I.size(); ++y) {
            s.roots.push_back(detail::eps_index_of(rs, detail::pair_eps(dim, I[x], 1, I[y], 1)));
          }
        }
        for (std::size_t x = 0; x < J.size(); ++x) {
          for (std::size_t y = x + 1; y < J.size(); ++y) {
            s.roots.push_back(detail::eps_index_of(rs, detail::pair_eps(dim, J[x], -1, J[y], -1)));
          }
        }
        for (int i : I) {
          for (int j : J) {
            s.roots.push_back(detail::eps_index_of(rs, detail::pair_eps(dim, i, 1, j, -1)));
          }
        }
        finish(std::move(s));
      });
      for (int i = 1; i <= n; ++i) {
        for (int sign : {1, -1}) {
          LabeledS s{sign > 0 ? "b+" : "b-", {i}, {}, {}};
          if (has_short) {
            s.roots.push_back(detail::eps_index_of(rs, detail::unit_eps(dim, i, sign)));
          }
          for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            s.roots.push_back(detail::eps_index_of(rs, detail::pair_eps(dim, i, sign, j, 1)));
            s.roots.push_back(detail::eps_index_of(rs, detail::pair_eps(dim, i, sign, j, -1)));
          }
          finish(std::move(s));
        }
      }
      break;
    }
    default:
      break;
  }
  std::sort(out.begin(), out.end(), [](const LabeledS& a, const LabeledS& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.roots < b.roots;
  });
  return out;
}

// Classification with family labels attached: every classified set is matched
// against the printed patterns; unmatched sets are labeled "other".
inline std::vector<LabeledS> classify_with_labels(const RootSystem& rs) {
  std::vector<RootSet> all = enumerate_irreducible_S(rs);
  std::map<RootSet, LabeledS> by_roots;
  if (rs.is_classical()) {
    for (auto& fam : classical_S_families(rs)) {
      by_roots.emplace(fam.roots, fam);
    }
  }
  std::vector<LabeledS> out;
  out.reserve(all.size());
  for (auto& s : all) {
    auto it = by_roots.find(s);
    if (it != by_roots.end()) {
      out.push_back(it->second);
    } else {
      out.push_back(LabeledS{"other", {}, {}, s});
    }
  }
  return out;
}

}  // namespace parideal
