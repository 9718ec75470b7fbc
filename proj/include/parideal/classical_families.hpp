#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "parideal/poset_ideals.hpp"
#include "parideal/root_system.hpp"

namespace parideal {

inline long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of abelian J-antichains of size s, by the per-type closed forms.
// Available for type A with any J (only #J matters) and for types B, C, D
// with J empty.  The D form carries two corrections relative to the classic
// presentation: the fifth term is 2*C(n-2,2s-2), which at s = 1 also counts
// the two extra singleton antichains at the fork.
inline long long closed_form_count(const RootSystemSpec& spec, const NodeSet& J, int s) {
  const int n = spec.rank;
  if (s < 0) throw usage_error("closed_form_count: size must be >= 0");
  const int nj = static_cast<int>(J.size());
  switch (spec.family) {
    case Family::A:
      return binom(n - nj, 2 * s) + binom(n - nj, 2 * s - 1);
    case Family::B:
      if (nj) throw unsupported_error("closed_form_count: B-type form requires empty J");
      return binom(n, 2 * s) + binom(n - 1, 2 * s - 2) + binom(n - 1, 2 * s - 1);
    case Family::C:
      if (nj) throw unsupported_error("closed_form_count: C-type form requires empty J");
      return binom(n - 1, 2 * s) + binom(n - 1, 2 * s - 1) + binom(n - 1, 2 * s - 1) +
             binom(n - 1, 2 * s - 2);
    case Family::D:
      if (nj) throw unsupported_error("closed_form_count: D-type form requires empty J");
      return binom(n - 2, 2 * s) + binom(n - 3, 2 * s - 2) + binom(n - 3, 2 * s - 1) +
             3 * binom(n - 2, 2 * s - 1) + binom(n - 3, 2 * s - 4) +
             2 * binom(n - 2, 2 * s - 2) + binom(n - 3, 2 * s - 5);
    default:
      throw unsupported_error("closed_form_count: no per-size form for type " +
                              std::string(1, family_char(spec.family)));
  }
}

// Total number of abelian J-antichains.  With J empty this is 2^rank in
// every type.  For nonempty J the 2^(rank - #J) law holds only in families
// A and C; the other families deviate (e.g. type B rank 3 with J={1}
// has 3 abelian antichains, not 4), so they are rejected here.
inline long long closed_form_total(const RootSystemSpec& spec, const NodeSet& J) {
  const int free_nodes = spec.rank - static_cast<int>(J.size());
  if (free_nodes < 0) throw usage_error("closed_form_total: J larger than the node set");
  if (!J.empty() && spec.family != Family::A && spec.family != Family::C) {
    throw unsupported_error("closed_form_total: nonempty-J form requires type A or C");
  }
  return 1LL << free_nodes;
}

struct LabeledAntichain {
  std::string family;
  RootSet roots;
};

namespace detail {

// Calls f on every size-t ascending subset of {lo, ..., hi}.
template <typename F>
inline void for_subsets(int lo, int hi, int t, F&& f) {
  if (t < 0) return;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(t));
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == t) {
      f(cur);
      return;
    }
    int need = t - static_cast<int>(cur.size());
    for (int v = next; v + need - 1 <= hi; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, lo);
}

class FamilyBuilder {
 public:
  FamilyBuilder(const RootSystem& rs, std::optional<int> size)
      : rs_(rs), size_(size), dim_(rs.ambient_dim()) {}

  // epsilon basis vector combinations, positions 1-based to match the
  // classical index bookkeeping.
  std::vector<int> e(int i, int coeff) const {
    std::vector<int> v(static_cast<std::size_t>(dim_), 0);
    v[static_cast<std::size_t>(i - 1)] = coeff;
    return v;
  }
  std::vector<int> e2(int i, int ci, int j, int cj) const {
    std::vector<int> v(static_cast<std::size_t>(dim_), 0);
    v[static_cast<std::size_t>(i - 1)] += ci;
    v[static_cast<std::size_t>(j - 1)] += cj;
    return v;
  }

  void emit(const std::string& label, const std::vector<std::vector<int>>& eps_members) {
    if (size_ && static_cast<int>(eps_members.size()) != *size_) return;
    RootSet roots;
    roots.reserve(eps_members.size());
    for (const auto& eps : eps_members) {
      int idx = rs_.index_from_epsilon(eps);
      if (idx < 0) throw std::logic_error("internal: family member is not a root");
      roots.push_back(idx);
    }
    std::sort(roots.begin(), roots.end());
    out_.push_back({label, std::move(roots)});
  }

  std::vector<LabeledAntichain> take() {
    std::sort(out_.begin(), out_.end(), [](const LabeledAntichain& a, const LabeledAntichain& b) {
      if (a.family != b.family) return a.family < b.family;
      return a.roots < b.roots;
    });
    return std::move(out_);
  }

  bool wants(int s) const { return !size_ || *size_ == s; }

 private:
  const RootSystem& rs_;
  std::optional<int> size_;
  int dim_;
  std::vector<LabeledAntichain> out_;
};

// Nested pairing of a sorted even-size index vector: k-th pair is
// (T[k], T[2t-1-k]), so the i's ascend while the j's descend around them.
inline std::vector<std::pair<int, int>> nested_pairs(const std::vector<int>& T) {
  std::vector<std::pair<int, int>> p;
  std::size_t t = T.size() / 2;
  for (std::size_t k = 0; k < t; ++k) {
    p.emplace_back(T[k], T[T.size() - 1 - k]);
  }
  return p;
}

inline void families_A(const RootSystem& rs, FamilyBuilder& fb) {
  const int n = rs.rank();
  // alpha_{i,j} = eps_i - eps_{j+1}; members alpha_{i_k, j_k} with both index
  // lists ascending and max(i) <= min(j); the shared-value case uses 2s-1
  // indices.
  for (int s = 1; 2 * s - 1 <= n; ++s) {
    if (!fb.wants(s)) continue;
    auto emit_T = [&](const std::vector<int>& T) {
      std::vector<std::vector<int>> members;
      std::size_t sz = T.size();
      std::size_t su = static_cast<std::size_t>(s);
      for (std::size_t k = 0; k < su; ++k) {
        int i = T[k];
        int j = (sz == 2 * su) ? T[su + k] : T[su - 1 + k];
        members.push_back(fb.e2(i, 1, j + 1, -1));
      }
      fb.emit("a", members);
    };
    detail::for_subsets(1, n, 2 * s, emit_T);
    detail::for_subsets(1, n, 2 * s - 1, emit_T);
  }
}

inline void families_B(const RootSystem& rs, FamilyBuilder& fb) {
  const int n = rs.rank();
  auto beta = [&](int i, int j) { return fb.e2(i, 1, j, 1); };
  auto alpha_1l = [&](int l) {
    return l < n ? fb.e2(1, 1, l + 1, -1) : fb.e(1, 1);
  };
  // Family 1: nested strict pairs beta_{i_k, j_k}.
  for (int s = 1; 2 * s <= n; ++s) {
    if (!fb.wants(s)) continue;
    detail::for_subsets(1, n, 2 * s, [&](const std::vector<int>& T) {
      std::vector<std::vector<int>> members;
      for (auto [i, j] : detail::nested_pairs(T)) members.push_back(beta(i, j));
      fb.emit("1", members);
    });
  }
  // Family 2: alpha_{1,l} together with nested pairs over {2..n} whose
  // outermost j does not exceed l.
  if (fb.wants(1)) {
    for (int l = 1; l <= n; ++l) fb.emit("2", {alpha_1l(l)});
  }
  for (int s = 2; 2 * s - 2 <= n - 1; ++s) {
    if (!fb.wants(s)) continue;
    detail::for_subsets(2, n, 2 * s - 2, [&](const std::vector<int>& T) {
      std::vector<std::vector<int>> members;
      for (auto [i, j] : detail::nested_pairs(T)) members.push_back(beta(i, j));
      for (int l = T.back(); l <= n; ++l) {
        auto with_alpha = members;
        with_alpha.push_back(alpha_1l(l));
        fb.emit("2", with_alpha);
      }
    });
  }
}

inline void families_C(const RootSystem& rs, FamilyBuilder& fb) {
  const int n = rs.rank();
  auto beta = [&](int i, int j) { return i == j ? fb.e(i, 2) : fb.e2(i, 1, j, 1); };
  auto alpha_ln = [&](int l) { return l < n ? fb.e2(l, 1, n, 1) : fb.e(n, 2); };
  // Family 1 allows the diagonal member beta_{i,i} = 2*eps_i, realized by an
  // odd index set whose median is shared.
  auto fam1_sets = [&](int s, auto&& consume) {
    auto emit_T = [&](const std::vector<int>& T) {
      std::vector<std::pair<int, int>> pairs;
      std::size_t su = static_cast<std::size_t>(s);
      if (T.size() == 2 * su) {
        pairs = detail::nested_pairs(T);
      } else {
        for (std::size_t k = 0; k < su; ++k) {
          pairs.emplace_back(T[k], T[T.size() - 1 - k]);
        }
      }
      consume(pairs);
    };
    detail::for_subsets(1, n - 1, 2 * s, emit_T);
    detail::for_subsets(1, n - 1, 2 * s - 1, emit_T);
  };
  for (int s = 1; 2 * s - 1 <= n - 1; ++s) {
    if (!fb.wants(s)) continue;
    fam1_sets(s, [&](const std::vector<std::pair<int, int>>& pairs) {
      std::vector<std::vector<int>> members;
      for (auto [i, j] : pairs) members.push_back(beta(i, j));
      fb.emit("1", members);
    });
  }
  // Family 2: alpha_{l,n} below a family-1 configuration (l < innermost i).
  if (fb.wants(1)) {
    for (int l = 1; l <= n; ++l) fb.emit("2", {alpha_ln(l)});
  }
  for (int s = 2; 2 * s - 3 <= n - 1; ++s) {
    if (!fb.wants(s)) continue;
    fam1_sets(s - 1, [&](const std::vector<std::pair<int, int>>& pairs) {
      std::vector<std::vector<int>> members;
      for (auto [i, j] : pairs) members.push_back(beta(i, j));
      for (int l = 1; l < pairs.front().first; ++l) {
        auto with_alpha = members;
        with_alpha.push_back(alpha_ln(l));
        fb.emit("2", with_alpha);
      }
    });
  }
}

inline void families_D(const RootSystem& rs, FamilyBuilder& fb) {
  const int n = rs.rank();
  const int m = n - 2;  // the chain indices 1..n-2
  auto beta = [&](int p, int q) { return fb.e2(p, 1, q, 1); };
  auto alpha_1j = [&](int j) { return fb.e2(1, 1, j + 1, -1); };
  auto gamma_lo = [&](int i) { return fb.e2(i, 1, n, -1); };   // eps_i - eps_n
  auto gamma_hi = [&](int i) { return fb.e2(i, 1, n, 1); };    // eps_i + eps_n
  auto delta = [&](int i) { return fb.e2(i, 1, n - 1, 1); };   // eps_i + eps_{n-1}
  auto betas_of = [&](const std::vector<int>& T, std::size_t from) {
    std::vector<std::vector<int>> members;
    std::vector<int> rest(T.begin() + static_cast<std::ptrdiff_t>(from), T.end());
    for (auto [p, q] : detail::nested_pairs(rest)) members.push_back(beta(p, q));
    return members;
  };
  // Family 1: nested strict pairs on the chain.
  for (int s = 1; 2 * s <= m; ++s) {
    if (!fb.wants(s)) continue;
    detail::for_subsets(1, m, 2 * s, [&](const std::vector<int>& T) {
      fb.emit("1", betas_of(T, 0));
    });
  }
  // Family 2: alpha_{1,j0} with nested pairs over {2..n-2}, outermost j <= j0.
  if (fb.wants(1)) {
    for (int j0 = 1; j0 <= m; ++j0) fb.emit("2", {alpha_1j(j0)});
  }
  for (int s = 2; 2 * s - 2 <= m - 1; ++s) {
    if (!fb.wants(s)) continue;
    detail::for_subsets(2, m, 2 * s - 2, [&](const std::vector<int>& T) {
      auto members = betas_of(T, 0);
      for (int j0 = T.back(); j0 <= m; ++j0) {
        auto with_alpha = members;
        with_alpha.push_back(alpha_1j(j0));
        fb.emit("2", with_alpha);
      }
    });
  }
  // Family 3: both fork roots at index 1 above nested pairs over {2..n-2}.
  for (int s = 2; 2 * s - 4 <= m - 1; ++s) {
    if (!fb.wants(s)) continue;
    detail::for_subsets(2, m, 2 * s - 4, [&](const std::vector<int>& T) {
      auto members = betas_of(T, 0);
      members.push_back(gamma_lo(1));
      members.push_back(gamma_hi(1));
      fb.emit("3", members);
    });
  }
  // Family 4: one fork root and one delta below the nested pairs
  // (i0 < i1 < every pair index).
  for (int s = 2; 2 * s - 2 <= m; ++s) {
    if (!fb.wants(s)) continue;
    detail::for_subsets(1, m, 2 * s - 2, [&](const std::vector<int>& T) {
      auto members = betas_of(T, 2);
      members.push_back(delta(T[1]));
      for (int g = 0; g < 2; ++g) {
        auto with_gamma = members;
        with_gamma.push_back(g ? gamma_hi(T[0]) : gamma_lo(T[0]));
        fb.emit("4", with_gamma);
      }
    });
  }
  // Family 5: both fork roots at 1, a delta, then nested pairs above it.
  for (int s = 3; 2 * s - 5 <= m - 1; ++s) {
    if (!fb.wants(s)) continue;
    detail::for_subsets(2, m, 2 * s - 5, [&](const std::vector<int>& T) {
      auto members = betas_of(T, 1);
      members.push_back(gamma_lo(1));
      members.push_back(gamma_hi(1));
      members.push_back(delta(T[0]));
      fb.emit("5", members);
    });
  }
  // Family 6: a single fork-side root below the nested pairs.
  for (int s = 1; 2 * s - 1 <= m; ++s) {
    if (!fb.wants(s)) continue;
    detail::for_subsets(1, m, 2 * s - 1, [&](const std::vector<int>& T) {
      auto members = betas_of(T, 1);
      for (int g = 0; g < 3; ++g) {
        auto with_gamma = members;
        with_gamma.push_back(g == 0 ? gamma_lo(T[0]) : g == 1 ? gamma_hi(T[0]) : delta(T[0]));
        fb.emit("6", with_gamma);
      }
    });
  }
  // The two fork simple roots are abelian singleton antichains not covered by
  // the six patterns above; the corrected s=1 count includes them.
  if (fb.wants(1)) {
    fb.emit("x", {fb.e2(n - 1, 1, n, -1)});
    fb.emit("x", {fb.e2(n - 1, 1, n, 1)});
  }
}

}  // namespace detail

// The labeled classical families of abelian antichains.  With empty J these
// are generated directly from the per-type index patterns; with J nonempty
// the J=empty families are filtered by the J-antichain test (their labels are
// retained).  Types A-D only.
inline std::vector<LabeledAntichain> classical_abelian_families(
    const RootSystem& rs, const NodeSet& J, std::optional<int> size = std::nullopt) {
  if (!rs.is_classical()) {
    throw unsupported_error("classical_abelian_families: types A-D only");
  }
  if (size && *size < 0) throw usage_error("classical_abelian_families: size must be >= 0");
  NodeSet j = canonical_nodeset(rs, J);
  detail::FamilyBuilder fb(rs, size);
  switch (rs.family()) {
    case Family::A:
      detail::families_A(rs, fb);
      break;
    case Family::B:
      detail::families_B(rs, fb);
      break;
    case Family::C:
      detail::families_C(rs, fb);
      break;
    case Family::D:
      detail::families_D(rs, fb);
      break;
    default:
      break;
  }
  auto all = fb.take();
  if (j.empty()) return all;
  std::vector<LabeledAntichain> kept;
  for (auto& la : all) {
    if (is_J_antichain(rs, la.roots, j)) kept.push_back(std::move(la));
  }
  return kept;
}

}  // namespace parideal
