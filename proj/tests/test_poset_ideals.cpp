#include <doctest.h>

#include <algorithm>
#include <set>

#include "parideal/poset_ideals.hpp"

using namespace parideal;

namespace {

std::vector<NodeSet> node_subsets(int rank) {
  std::vector<NodeSet> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    NodeSet j;
    for (int i = 0; i < rank; ++i) {
      if (mask >> i & 1) j.push_back(i);
    }
    out.push_back(j);
  }
  return out;
}

}  // namespace

TEST_CASE("restricted roots pick out the sub-system spanned by J") {
  RootSystem b3(Family::B, 3);
  auto [both, pos] = restricted_roots(b3, NodeSet{1, 2});
  CHECK(pos.size() == 4);  // a B2 sub-system
  CHECK(both.size() == 8);
  for (int idx : pos) CHECK(b3.is_positive(idx));
  auto [all_both, all_pos] = restricted_roots(b3, NodeSet{0, 1, 2});
  CHECK(all_pos.size() == 9);
  auto [none_both, none_pos] = restricted_roots(b3, NodeSet{});
  CHECK(none_pos.empty());
}

TEST_CASE("partial order on positive roots follows coefficientwise comparison") {
  RootSystem a2(Family::A, 2);
  CHECK(leq_roots(a2, 0, 2));   // alpha_2 <= theta
  CHECK(leq_roots(a2, 1, 2));
  CHECK_FALSE(leq_roots(a2, 2, 0));
  CHECK_FALSE(leq_roots(a2, 0, 1));
  CHECK(leq_roots(a2, 0, 0));
}

TEST_CASE("antichain recognition") {
  RootSystem a2(Family::A, 2);
  CHECK(is_J_antichain(a2, RootSet{2}, NodeSet{}));       // {theta}
  CHECK(is_J_antichain(a2, RootSet{0, 1}, NodeSet{}));    // the two simples
  CHECK_FALSE(is_J_antichain(a2, RootSet{0, 2}, NodeSet{}));  // comparable pair
  CHECK(is_J_antichain(a2, RootSet{}, NodeSet{}));

  // J = {node 0}: members may not lie in R+(J) nor step down by alpha_1.
  CHECK(is_J_antichain(a2, RootSet{0}, NodeSet{0}));
  CHECK_FALSE(is_J_antichain(a2, RootSet{1}, NodeSet{0}));  // inside R+(J)
  CHECK_FALSE(is_J_antichain(a2, RootSet{2}, NodeSet{0}));  // theta - alpha_1 is a root
}

TEST_CASE("ideals generated by antichains") {
  RootSystem a2(Family::A, 2);
  RootSet phi = ideal_from_antichain(a2, RootSet{0}, NodeSet{0});
  CHECK(phi == RootSet{0, 2});
  CHECK(is_J_ideal(a2, phi, NodeSet{0}));
  CHECK(minimal_elements(a2, phi) == RootSet{0});

  // The full positive system is the ideal of the simple roots.
  RootSet all = ideal_from_antichain(a2, RootSet{0, 1}, NodeSet{});
  CHECK(all == RootSet{0, 1, 2});
  CHECK(is_J_ideal(a2, all, NodeSet{}));

  // {alpha_1} alone is not an ideal: adding alpha_2 escapes.
  CHECK_FALSE(is_J_ideal(a2, RootSet{1}, NodeSet{}));

  // Feeding a non-antichain is rejected.
  CHECK_THROWS_AS(ideal_from_antichain(a2, RootSet{0, 2}, NodeSet{}), usage_error);
  CHECK_THROWS_AS(ideal_from_antichain(a2, RootSet{1}, NodeSet{0}), usage_error);
}

TEST_CASE("nilpotence of ideals") {
  RootSystem a2(Family::A, 2);
  CHECK(nilpotence_of_ideal(a2, RootSet{}) == 0);
  CHECK(nilpotence_of_ideal(a2, RootSet{2}) == 1);
  CHECK(nilpotence_of_ideal(a2, RootSet{0, 1, 2}) == 2);
  RootSystem b2(Family::B, 2);
  RootSet full;
  for (int i = 0; i < b2.num_positive(); ++i) full.push_back(i);
  CHECK(nilpotence_of_ideal(b2, full) == 3);
}

TEST_CASE("antichain sum criterion matches nilpotence directly") {
  RootSystem a2(Family::A, 2);
  CHECK(antichain_sum_criterion(a2, RootSet{2}, 1));
  CHECK_FALSE(antichain_sum_criterion(a2, RootSet{0, 1}, 1));
  CHECK(antichain_sum_criterion(a2, RootSet{0, 1}, 2));
  CHECK(antichain_sum_criterion(a2, RootSet{}, 0));
}

TEST_CASE("abelian antichains") {
  RootSystem a2(Family::A, 2);
  CHECK(is_abelian_J_antichain(a2, RootSet{2}, NodeSet{}));
  CHECK_FALSE(is_abelian_J_antichain(a2, RootSet{0, 1}, NodeSet{}));
  CHECK(is_abelian_J_antichain(a2, RootSet{}, NodeSet{}));
  CHECK_THROWS_AS(is_abelian_J_antichain(a2, RootSet{0, 2}, NodeSet{}), usage_error);
}

TEST_CASE("antichain enumeration counts") {
  RootSystem a2(Family::A, 2);
  CHECK(enumerate_J_antichains(a2, {}, false).size() == 5);
  RootSystem a3(Family::A, 3);
  CHECK(enumerate_J_antichains(a3, {}, false).size() == 14);
  CHECK(enumerate_J_antichains(a3, {}, true).size() == 8);
  CHECK(enumerate_J_antichains(a3, {}, true, 1).size() == 6);
  CHECK(enumerate_J_antichains(a3, {}, true, 0).size() == 1);
  CHECK(enumerate_J_antichains(a3, NodeSet{0}, true).size() == 4);
  RootSystem b2(Family::B, 2);
  CHECK(enumerate_J_antichains(b2, {}, false).size() == 6);
  RootSystem g2(Family::G, 2);
  CHECK(enumerate_J_antichains(g2, {}, false).size() == 8);
  CHECK(enumerate_J_antichains(g2, {}, true).size() == 4);
  RootSystem d4(Family::D, 4);
  CHECK(enumerate_J_antichains(d4, {}, false).size() == 50);
  CHECK(enumerate_J_antichains(d4, {}, true).size() == 16);
}

TEST_CASE("every enumerated antichain passes the predicate and respects the size filter") {
  RootSystem b3(Family::B, 3);
  for (const NodeSet& j : node_subsets(3)) {
    for (const RootSet& a : enumerate_J_antichains(b3, j, false)) {
      CHECK(is_J_antichain(b3, a, j));
    }
    for (const RootSet& a : enumerate_J_antichains(b3, j, true)) {
      CHECK(is_abelian_J_antichain(b3, a, j));
    }
    auto sized = enumerate_J_antichains(b3, j, false, 2);
    for (const RootSet& a : sized) CHECK(a.size() == 2);
  }
}

TEST_CASE("ideal enumerations agree between the up-set walk and the subset filter") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 2}, {Family::C, 3}, {Family::G, 2}}) {
    RootSystem rs(f, n);
    for (const NodeSet& j : node_subsets(n)) {
      auto ups = enumerate_J_ideals_upsets(rs, j);
      auto subs = enumerate_J_ideals_subsets(rs, j);
      CHECK(ups == subs);
      // Bijection with antichains: counts agree.
      CHECK(ups.size() == enumerate_J_antichains(rs, j, false).size());
    }
  }
}

TEST_CASE("canonical root sets are validated") {
  RootSystem a2(Family::A, 2);
  CHECK(canonical_rootset(a2, RootSet{2, 0, 0}, true) == RootSet{0, 2});
  CHECK_THROWS_AS(canonical_rootset(a2, RootSet{7}, false), usage_error);
  CHECK_THROWS_AS(canonical_rootset(a2, RootSet{3}, true), usage_error);   // negative root
  CHECK_THROWS_AS(canonical_nodeset(a2, NodeSet{2}), usage_error);
}
