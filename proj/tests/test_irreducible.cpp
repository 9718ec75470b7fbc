#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "parideal/irreducible.hpp"

using namespace parideal;

TEST_CASE("weight sums of root sets") {
  RootSystem a2(Family::A, 2);
  CHECK(two_rho_S(a2, RootSet{a2.theta()}) == Coeffs{1, 1});
  CHECK(two_rho_S(a2, RootSet{0, 1}) == Coeffs{1, 1});
  CHECK(two_rho_S(a2, RootSet{}) == Coeffs{0, 0});
}

TEST_CASE("maximizing sets of weights") {
  RootSystem a2(Family::A, 2);
  Weight rho = a2.fundamental_weight(0) + a2.fundamental_weight(1);
  CHECK(S_of_lambda(a2, rho) == RootSet{a2.theta()});
  CHECK(max_pairing(a2, rho) == a2.pairing(rho, a2.theta()));
  // A weight pairing to zero with everything maximizes at zero on all roots.
  Weight zero(2);
  CHECK(max_pairing(a2, zero) == Rational(0));
  CHECK(S_of_lambda(a2, zero).size() == 6);
}

TEST_CASE("bounded decomposition depth") {
  RootSystem a2(Family::A, 2);
  CHECK(bod(a2, Coeffs{1, 1}, 3) == 1);
  CHECK(bod(a2, Coeffs{2, 2}, 3) == 2);
  CHECK(bod(a2, Coeffs{0, 0}, 3) == 0);
  CHECK(bod(a2, Coeffs{1, -1}, 3) == 2);
  CHECK_FALSE(bod(a2, Coeffs{5, 5}, 2).has_value());
  CHECK_THROWS_AS(bod(a2, Coeffs{1}, 3), usage_error);
  CHECK_THROWS_AS(bod(a2, Coeffs{1, 1}, 11), usage_error);
}

TEST_CASE("decomposition tables record minimum sizes and witnesses") {
  RootSystem a2(Family::A, 2);
  BoundedDecompositions table(a2, 3);
  Coeffs theta = a2.root(a2.theta());
  auto it = table.by_sum.find(detail::pack_vec(theta));
  REQUIRE(it != table.by_sum.end());
  CHECK(it->second.min_size == 1);
  REQUIRE(it->second.witnesses.size() == 1);
  CHECK(it->second.witnesses[0] == std::vector<int>{a2.theta()});

  // Zero is reachable only by +/- pairs; its recorded minimum size is 2.
  auto zero = table.by_sum.find(detail::pack_vec(Coeffs{0, 0}));
  REQUIRE(zero != table.by_sum.end());
  CHECK(zero->second.min_size == 2);

  CHECK_THROWS_AS(BoundedDecompositions(a2, 0), usage_error);
  CHECK_THROWS_AS(BoundedDecompositions(a2, 5), usage_error);
}

TEST_CASE("closure and extremal conditions on small examples") {
  RootSystem a2(Family::A, 2);
  CHECK(cond_iv(a2, RootSet{a2.theta()}));
  CHECK(cond_i(a2, RootSet{a2.theta()}));
  CHECK(cond_iii(a2, RootSet{a2.theta()}));

  CHECK(cond_iv(a2, RootSet{0}));  // singleton alpha_2
  CHECK(cond_i(a2, RootSet{0}));

  CHECK(cond_iv(a2, RootSet{0, 2}));  // {alpha_2, theta}
  CHECK(cond_i(a2, RootSet{0, 2}));

  CHECK_FALSE(cond_iv(a2, RootSet{0, 1}));  // the two simples sum to theta
  CHECK_FALSE(cond_i(a2, RootSet{0, 1}));
  CHECK_FALSE(cond_iii(a2, RootSet{0, 1}));

  CHECK_FALSE(cond_iv(a2, RootSet{2, a2.neg(2)}));  // 0 = gamma + delta escape

  CHECK_FALSE(cond_iv(a2, RootSet{}));
  CHECK_FALSE(cond_i(a2, RootSet{}));

  Weight rho = a2.fundamental_weight(0) + a2.fundamental_weight(1);
  CHECK(cond_ii(a2, RootSet{a2.theta()}, rho));
  CHECK_FALSE(cond_ii(a2, RootSet{0}, rho));
}

TEST_CASE("rank-one full-set degeneracy is reported honestly") {
  RootSystem a1(Family::A, 1);
  RootSet full{0, 1};
  CHECK(cond_iv(a1, full));
  CHECK_FALSE(cond_i(a1, full));
  CHECK_FALSE(cond_iii(a1, full));
  Report rep = check_equivalence(a1);
  CHECK_FALSE(rep.passed());
  CHECK(rep.checks[0].failure_count() == 1);
  CHECK(rep.checks[1].failure_count() == 1);
  CHECK(rep.checks[2].passed());
}

TEST_CASE("subset equivalence sweeps pass on rank-two systems") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}}) {
    RootSystem rs(f, n);
    Report rep = check_equivalence(rs);
    CHECK(rep.passed());
    REQUIRE(rep.checks.size() == 3);
    long long expect = (1LL << rs.num_roots()) - 1;
    CHECK(rep.checks[0].instances_checked == expect);
    CHECK(rep.checks[1].instances_checked == expect);
  }
  RootSystem b3(Family::B, 3);
  CHECK_THROWS_AS(check_equivalence(b3), scale_cap_error);
}

TEST_CASE("standard parabolics and their irreducible ideals") {
  RootSystem b3(Family::B, 3);
  Parabolic p = parabolic_from_J(b3, NodeSet{1, 2});
  REQUIRE(p.J.has_value());
  CHECK(p.levi.size() == 8);
  CHECK(p.nilradical.size() == 5);
  CHECK(irreducible_ideal_of_parabolic(b3, p) == i0_of_parabolic(b3, NodeSet{1, 2}));

  RootSystem a3(Family::A, 3);
  RootSet i0 = i0_of_parabolic(a3, NodeSet{0, 2});
  std::set<Coeffs> got;
  for (int idx : i0) got.insert(a3.root(idx));
  std::set<Coeffs> expect{{1, 1, 1}, {0, 1, 1}, {1, 1, 0}, {0, 1, 0}};
  CHECK(got == expect);

  // The irreducible ideal of the Borel (J empty) is the highest root alone.
  CHECK(i0_of_parabolic(a3, {}) == RootSet{a3.theta()});
  CHECK_THROWS_AS(i0_of_parabolic(a3, NodeSet{0, 1, 2}), usage_error);
}

TEST_CASE("parabolic from weight detects dominance and zero-pairing nodes") {
  RootSystem a2(Family::A, 2);
  Parabolic p = parabolic_from_weight(a2, a2.fundamental_weight(0));
  REQUIRE(p.J.has_value());
  CHECK(*p.J == NodeSet{1});
  CHECK(p.levi.size() == 2);
  CHECK(p.nilradical.size() == 2);

  Parabolic q = parabolic_from_weight(a2, Rational(-1) * a2.fundamental_weight(0));
  CHECK_FALSE(q.J.has_value());
  CHECK_THROWS_AS(parabolic_from_weight(a2, Weight(2)), usage_error);
}

TEST_CASE("the F4 fixture: marked nodes 1,2,3 give the seven-root ideal") {
  RootSystem f4(Family::F, 4);
  RootSet s = i0_of_parabolic(f4, NodeSet{0, 1, 2});
  CHECK(s.size() == 7);
  for (int idx : s) CHECK(d_coeff(f4.root(idx), 3) == 2);
  CHECK(cond_iv(f4, s));
  CHECK(cond_i(f4, s));
  Coeffs two_rho = two_rho_S(f4, s);
  CHECK(two_rho == Coeffs{7, 14, 21, 14});
  CHECK(Weight::from_coeffs(two_rho) == Rational(7) * f4.fundamental_weight(3));
}

TEST_CASE("classification counts at pinned ranks") {
  RootSystem a2(Family::A, 2);
  auto cl_a2 = enumerate_irreducible_S(a2);
  CHECK(cl_a2.size() == 12);
  RootSystem a3(Family::A, 3);
  CHECK(enumerate_irreducible_S(a3).size() == 50);
  RootSystem b2(Family::B, 2);
  CHECK(enumerate_irreducible_S(b2).size() == 8);
  RootSystem c2(Family::C, 2);
  CHECK(enumerate_irreducible_S(c2).size() == 8);
  RootSystem d3(Family::D, 3);
  CHECK(enumerate_irreducible_S(d3).size() == 50);

  RootSystem g2(Family::G, 2);
  auto cl_g2 = enumerate_irreducible_S(g2);
  CHECK(cl_g2.size() == 12);
  std::map<std::size_t, int> sizes;
  for (const RootSet& s : cl_g2) {
    sizes[s.size()]++;
    for (int idx : s) CHECK(g2.is_long(idx));
  }
  CHECK(sizes[1] == 6);
  CHECK(sizes[2] == 6);

  RootSystem e6(Family::E, 6);
  CHECK_THROWS_AS(enumerate_irreducible_S(e6), scale_cap_error);
}

TEST_CASE("orbit closure agrees with exhaustive search where both run") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::G, 2}, {Family::D, 3}}) {
    RootSystem rs(f, n);
    CHECK(enumerate_irreducible_S_exhaustive(rs) == enumerate_irreducible_S_orbit(rs));
  }
}

TEST_CASE("corollary verification on individual sets") {
  RootSystem a2(Family::A, 2);
  CHECK(verify_corollary(a2, RootSet{a2.theta()}).passed());
  CHECK(verify_corollary(a2, RootSet{0}).passed());
  CHECK_THROWS_AS(verify_corollary(a2, RootSet{0, 1}), usage_error);
}

TEST_CASE("orthogonality census of long-root sets") {
  RootSystem b2(Family::B, 2);
  auto census = perp_census(b2, RootSet{b2.theta()});
  CHECK(census == std::map<int, int>{{0, 1}});

  RootSystem a3(Family::A, 3);
  RootSet s = i0_of_parabolic(a3, NodeSet{0, 2});
  auto census4 = perp_census(a3, s);
  CHECK(census4 == std::map<int, int>{{1, 4}});

  // Short roots are rejected before the closure test.
  RootSystem b3(Family::B, 3);
  int short_root = b3.simple_root_index(2);
  CHECK_FALSE(b3.is_long(short_root));
  CHECK_THROWS_AS(perp_census(b3, RootSet{short_root}), usage_error);
}

TEST_CASE("recombination witnesses for orthogonal pairs with a long member") {
  RootSystem a3(Family::A, 3);
  int a = a3.index_from_epsilon({1, -1, 0, 0});
  int b = a3.index_from_epsilon({0, 0, 1, -1});
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(a3.pair6(a, b) == 0);
  auto w = lemone_witness(a3, a, b);
  REQUIRE(w.has_value());
  auto [g, gp] = *w;
  CHECK(g != a);
  CHECK(g != b);
  Coeffs total = a3.root(a);
  for (int i = 0; i < 3; ++i) total[static_cast<std::size_t>(i)] += a3.root(b)[static_cast<std::size_t>(i)];
  Coeffs got = a3.root(g);
  for (int i = 0; i < 3; ++i) got[static_cast<std::size_t>(i)] += a3.root(gp)[static_cast<std::size_t>(i)];
  CHECK(got == total);

  CHECK_THROWS_AS(lemone_witness(a3, a, a), usage_error);  // not orthogonal
  RootSystem b3(Family::B, 3);
  int short_root = b3.simple_root_index(2);
  int other = b3.index_from_epsilon({1, -1, 0});
  REQUIRE(other >= 0);
  CHECK(b3.pair6(other, short_root) == 0);
  CHECK_THROWS_AS(lemone_witness(b3, other, short_root), usage_error);  // beta short
}

TEST_CASE("classical labeled families of irreducible sets") {
  RootSystem a2(Family::A, 2);
  auto fams = classical_S_families(a2);
  CHECK(fams.size() == 12);
  for (const auto& f : fams) CHECK(f.family == "ij");

  RootSystem c2(Family::C, 2);
  auto fams_c = classical_S_families(c2);
  CHECK(fams_c.size() == 8);
  bool has_diagonal = false;
  for (const auto& f : fams_c) {
    if (f.roots == RootSet{c2.index_from_epsilon({2, 0})}) has_diagonal = true;
  }
  CHECK(has_diagonal);

  RootSystem b2(Family::B, 2);
  CHECK(classical_S_families(b2).size() == 8);

  RootSystem g2(Family::G, 2);
  CHECK_THROWS_AS(classical_S_families(g2), unsupported_error);
}

TEST_CASE("labels attach to the classification; gaps become `other`") {
  RootSystem a2(Family::A, 2);
  auto rows = classify_with_labels(a2);
  CHECK(rows.size() == 12);
  for (const auto& r : rows) CHECK(r.family == "ij");

  RootSystem d3(Family::D, 3);
  auto rows_d3 = classify_with_labels(d3);
  CHECK(rows_d3.size() == 50);
  int other = 0;
  for (const auto& r : rows_d3) {
    if (r.family == "other") ++other;
  }
  CHECK(classical_S_families(d3).size() == 26);
  CHECK(other == 24);

  // The pinned witness for the printed-pattern gap in type B at rank 4.
  RootSystem b4(Family::B, 4);
  RootSet gap = i0_of_parabolic(b4, NodeSet{1, 3});
  std::set<Coeffs> eps;
  for (int idx : gap) eps.insert(Coeffs(b4.to_epsilon(idx)));
  CHECK(eps == std::set<Coeffs>{{1, 1, 0, 0}, {1, 0, 1, 0}});
  CHECK(cond_iv(b4, gap));
  CHECK(cond_i(b4, gap));
  bool matched = false;
  for (const auto& f : classical_S_families(b4)) {
    if (f.roots == gap) matched = true;
  }
  CHECK_FALSE(matched);
}
