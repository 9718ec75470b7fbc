#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parideal/root_system.hpp"

namespace parideal {

// A set of roots, stored as sorted, duplicate-free indices into a RootSystem.
using RootSet = std::vector<int>;
// A set of simple-root nodes, 0-based, sorted.
using NodeSet = std::vector<int>;

inline RootSet canonical_rootset(const RootSystem& rs, RootSet s, bool require_positive) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int idx : s) {
    if (idx < 0 || idx >= rs.num_roots()) throw usage_error("root index out of range");
    if (require_positive && !rs.is_positive(idx)) {
      throw usage_error("root set must consist of positive roots");
    }
  }
  return s;
}

inline NodeSet canonical_nodeset(const RootSystem& rs, NodeSet j) {
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (int node : j) {
    if (node < 0 || node >= rs.rank()) throw usage_error("node index out of range");
  }
  return j;
}

inline bool leq_roots(const RootSystem& rs, int a, int b) {
  return leq(rs.root(a), rs.root(b));
}

// R(J) (both signs) and R+(J): the roots supported on the nodes of J.
inline std::pair<RootSet, RootSet> restricted_roots(const RootSystem& rs, const NodeSet& J) {
  NodeSet j = canonical_nodeset(rs, J);
  std::vector<char> in_j(static_cast<std::size_t>(rs.rank()), 0);
  for (int node : j) in_j[static_cast<std::size_t>(node)] = 1;
  RootSet both, pos;
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    const Coeffs& c = rs.root(idx);
    bool supported = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (c[static_cast<std::size_t>(i)] != 0 && !in_j[static_cast<std::size_t>(i)]) {
        supported = false;
        break;
      }
    }
    if (supported) {
      both.push_back(idx);
      if (rs.is_positive(idx)) pos.push_back(idx);
    }
  }
  return {both, pos};
}

namespace detail {

inline std::vector<char> support_flags(const RootSystem& rs, const NodeSet& J) {
  std::vector<char> in_j(static_cast<std::size_t>(rs.rank()), 0);
  for (int node : J) in_j[static_cast<std::size_t>(node)] = 1;
  return in_j;
}

inline bool supported_on(const RootSystem& rs, int idx, const std::vector<char>& in_j) {
  const Coeffs& c = rs.root(idx);
  for (int i = 0; i < rs.rank(); ++i) {
    if (c[static_cast<std::size_t>(i)] != 0 && !in_j[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

}  // namespace detail

// A is a J-antichain when A consists of positive roots outside R+(J), its
// members are pairwise incomparable, and alpha - alpha_j is never a root for
// alpha in A, j in J.
inline bool is_J_antichain(const RootSystem& rs, const RootSet& A, const NodeSet& J) {
  RootSet a = canonical_rootset(rs, A, /*require_positive=*/true);
  NodeSet j = canonical_nodeset(rs, J);
  auto in_j = detail::support_flags(rs, j);
  for (int idx : a) {
    if (detail::supported_on(rs, idx, in_j)) return false;
    for (int node : j) {
      if (rs.add(idx, rs.neg(rs.simple_root_index(node))) >= 0) return false;
    }
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      if (leq_roots(rs, a[x], a[y]) || leq_roots(rs, a[y], a[x])) return false;
    }
  }
  return true;
}

// Phi is a J-ideal when Phi consists of positive roots, avoids R+(J), and is
// closed under adding any beta in R+ or R(J) whenever the sum is a root.
inline bool is_J_ideal(const RootSystem& rs, const RootSet& Phi, const NodeSet& J) {
  RootSet phi = canonical_rootset(rs, Phi, /*require_positive=*/true);
  NodeSet j = canonical_nodeset(rs, J);
  auto in_j = detail::support_flags(rs, j);
  std::vector<char> member(static_cast<std::size_t>(rs.num_roots()), 0);
  for (int idx : phi) {
    if (detail::supported_on(rs, idx, in_j)) return false;
    member[static_cast<std::size_t>(idx)] = 1;
  }
  RootSet betas;
  for (int idx = 0; idx < rs.num_positive(); ++idx) betas.push_back(idx);
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    if (detail::supported_on(rs, idx, in_j)) betas.push_back(rs.neg(idx));
  }
  for (int alpha : phi) {
    for (int beta : betas) {
      int sum = rs.add(alpha, beta);
      if (sum >= 0 && !member[static_cast<std::size_t>(sum)]) return false;
    }
  }
  return true;
}

// The ideal generated by a J-antichain: all positive roots dominating some
// member of A.
inline RootSet ideal_from_antichain(const RootSystem& rs, const RootSet& A, const NodeSet& J) {
  if (!is_J_antichain(rs, A, J)) {
    throw usage_error("ideal_from_antichain: input is not a J-antichain");
  }
  RootSet a = canonical_rootset(rs, A, /*require_positive=*/true);
  RootSet phi;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    for (int b : a) {
      if (leq_roots(rs, b, idx)) {
        phi.push_back(idx);
        break;
      }
    }
  }
  return phi;
}

inline RootSet minimal_elements(const RootSystem& rs, const RootSet& Phi) {
  RootSet phi = canonical_rootset(rs, Phi, /*require_positive=*/true);
  RootSet mins;
  for (int alpha : phi) {
    bool minimal = true;
    for (int beta : phi) {
      if (beta != alpha && leq_roots(rs, beta, alpha)) {
        minimal = false;
        break;
      }
    }
    if (minimal) mins.push_back(alpha);
  }
  return mins;
}

// Largest k such that some multiset of k members of Phi sums to a root
// (0 for the empty set); equivalently the least k such that every k+1
// members sum to a non-root.  Partial sums are pruned against theta, which
// is sound because roots are componentwise <= theta and members are positive.
inline int nilpotence_of_ideal(const RootSystem& rs, const RootSet& Phi) {
  RootSet phi = canonical_rootset(rs, Phi, /*require_positive=*/true);
  if (phi.empty()) return 0;
  const Coeffs& th = rs.root(rs.theta());
  int best = 0;
  Coeffs sum(static_cast<std::size_t>(rs.rank()), 0);
  auto dfs = [&](auto&& self, std::size_t start, int depth) -> void {
    for (std::size_t k = start; k < phi.size(); ++k) {
      const Coeffs& r = rs.root(phi[k]);
      bool ok = true;
      for (int i = 0; i < rs.rank(); ++i) {
        sum[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i)];
        if (sum[static_cast<std::size_t>(i)] > th[static_cast<std::size_t>(i)]) ok = false;
      }
      if (ok) {
        if (rs.is_root(sum)) best = std::max(best, depth + 1);
        self(self, k, depth + 1);
      }
      for (int i = 0; i < rs.rank(); ++i) {
        sum[static_cast<std::size_t>(i)] -= r[static_cast<std::size_t>(i)];
      }
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

// True when every multiset of k+1 members of A sums to something not <= theta.
inline bool antichain_sum_criterion(const RootSystem& rs, const RootSet& A, int k) {
  RootSet a = canonical_rootset(rs, A, /*require_positive=*/true);
  if (k < 0) throw usage_error("antichain_sum_criterion: k must be >= 0");
  if (a.empty()) return true;
  const Coeffs& th = rs.root(rs.theta());
  bool found = false;
  Coeffs sum(static_cast<std::size_t>(rs.rank()), 0);
  auto dfs = [&](auto&& self, std::size_t start, int depth) -> void {
    if (found) return;
    if (depth == k + 1) {
      found = true;
      return;
    }
    for (std::size_t x = start; x < a.size() && !found; ++x) {
      const Coeffs& r = rs.root(a[x]);
      bool ok = true;
      for (int i = 0; i < rs.rank(); ++i) {
        sum[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i)];
        if (sum[static_cast<std::size_t>(i)] > th[static_cast<std::size_t>(i)]) ok = false;
      }
      if (ok) self(self, x, depth + 1);
      for (int i = 0; i < rs.rank(); ++i) {
        sum[static_cast<std::size_t>(i)] -= r[static_cast<std::size_t>(i)];
      }
    }
  };
  dfs(dfs, 0, 0);
  return !found;
}

// Abelian test for a J-antichain: for each alpha some coordinate of 2*alpha
// exceeds theta, and for each pair the coordinate sum exceeds theta somewhere.
inline bool is_abelian_J_antichain(const RootSystem& rs, const RootSet& A, const NodeSet& J) {
  if (!is_J_antichain(rs, A, J)) {
    throw usage_error("is_abelian_J_antichain: input is not a J-antichain");
  }
  RootSet a = canonical_rootset(rs, A, /*require_positive=*/true);
  const Coeffs& th = rs.root(rs.theta());
  auto exceeds = [&](const Coeffs& u, const Coeffs& v) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)] >
          th[static_cast<std::size_t>(i)]) {
        return true;
      }
    }
    return false;
  };
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!exceeds(rs.root(a[x]), rs.root(a[x]))) return false;
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      if (!exceeds(rs.root(a[x]), rs.root(a[y]))) return false;
    }
  }
  return true;
}

// Enumerates J-antichains (optionally only abelian ones, optionally only a
// given size) in lexicographic order on sorted index vectors.  The empty
// antichain is included unless a positive size is requested.
inline std::vector<RootSet> enumerate_J_antichains(const RootSystem& rs, const NodeSet& J,
                                                   bool abelian_only,
                                                   std::optional<int> size = std::nullopt) {
  NodeSet j = canonical_nodeset(rs, J);
  if (size && *size < 0) throw usage_error("enumerate_J_antichains: size must be >= 0");
  auto in_j = detail::support_flags(rs, j);
  const Coeffs& th = rs.root(rs.theta());
  auto exceeds = [&](const Coeffs& u, const Coeffs& v) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)] >
          th[static_cast<std::size_t>(i)]) {
        return true;
      }
    }
    return false;
  };
  RootSet cand;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    if (detail::supported_on(rs, idx, in_j)) continue;
    bool ok = true;
    for (int node : j) {
      if (rs.add(idx, rs.neg(rs.simple_root_index(node))) >= 0) {
        ok = false;
        break;
      }
    }
    if (ok && abelian_only && !exceeds(rs.root(idx), rs.root(idx))) ok = false;
    if (ok) cand.push_back(idx);
  }
  const std::size_t nc = cand.size();
  std::vector<std::vector<char>> compat(nc, std::vector<char>(nc, 0));
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t y = x + 1; y < nc; ++y) {
      bool ok = !leq_roots(rs, cand[x], cand[y]) && !leq_roots(rs, cand[y], cand[x]);
      if (ok && abelian_only) ok = exceeds(rs.root(cand[x]), rs.root(cand[y]));
      compat[x][y] = compat[y][x] = ok ? 1 : 0;
    }
  }
  std::vector<RootSet> out;
  RootSet cur;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (!size || static_cast<int>(cur.size()) == *size) {
      RootSet emitted;
      emitted.reserve(cur.size());
      for (int c : cur) emitted.push_back(cand[static_cast<std::size_t>(c)]);
      out.push_back(std::move(emitted));
    }
    if (size && static_cast<int>(cur.size()) >= *size) return;
    for (std::size_t k = start; k < nc; ++k) {
      bool ok = true;
      for (int c : cur) {
        if (!compat[static_cast<std::size_t>(c)][k]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.push_back(static_cast<int>(k));
      self(self, k + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

// All J-ideals, found as up-closed subsets of the admissible positive roots
// and then filtered by the full membership test.  Capped at 63 positive
// roots (bitmask addressing).
inline std::vector<RootSet> enumerate_J_ideals_upsets(const RootSystem& rs, const NodeSet& J) {
  NodeSet j = canonical_nodeset(rs, J);
  if (rs.num_positive() > 63) {
    throw scale_cap_error("up-set enumeration is capped at 63 positive roots");
  }
  auto in_j = detail::support_flags(rs, j);
  RootSet allowed;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    if (!detail::supported_on(rs, idx, in_j)) allowed.push_back(idx);
  }
  const std::size_t na = allowed.size();
  // above[k] = mask of allowed roots strictly dominating allowed[k].
  std::vector<std::uint64_t> above(na, 0);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b) {
      if (a != b && leq_roots(rs, allowed[a], allowed[b])) {
        above[a] |= std::uint64_t{1} << b;
      }
    }
  }
  std::vector<RootSet> out;
  // Decide membership from the top of the poset downward; a root may enter
  // only when everything above it is already in.
  std::vector<std::size_t> order(na);
  for (std::size_t k = 0; k < na; ++k) order[k] = na - 1 - k;
  auto dfs = [&](auto&& self, std::size_t pos, std::uint64_t mask) -> void {
    if (pos == na) {
      RootSet phi;
      for (std::size_t k = 0; k < na; ++k) {
        if (mask >> k & 1) phi.push_back(allowed[k]);
      }
      if (is_J_ideal(rs, phi, j)) out.push_back(std::move(phi));
      return;
    }
    std::size_t k = order[pos];
    self(self, pos + 1, mask);
    if ((above[k] & ~mask) == 0) self(self, pos + 1, mask | (std::uint64_t{1} << k));
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force oracle: tests every subset of R+ against the membership
// definition.  Exponential; capped at 16 positive roots.
inline std::vector<RootSet> enumerate_J_ideals_subsets(const RootSystem& rs, const NodeSet& J) {
  NodeSet j = canonical_nodeset(rs, J);
  const int m = rs.num_positive();
  if (m > 16) {
    throw scale_cap_error("subset-filter ideal enumeration is capped at 16 positive roots");
  }
  std::vector<RootSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    RootSet phi;
    for (int k = 0; k < m; ++k) {
      if (mask >> k & 1) phi.push_back(k);
    }
    if (is_J_ideal(rs, phi, j)) out.push_back(std::move(phi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parideal
