#include <doctest.h>

#include <algorithm>
#include <vector>

#include "parideal/root_system.hpp"

using namespace parideal;

TEST_CASE("positive root counts match the standard formulas") {
  auto count = [](Family f, int n) { return RootSystem(f, n).num_positive(); };
  CHECK(count(Family::A, 1) == 1);
  CHECK(count(Family::A, 2) == 3);
  CHECK(count(Family::A, 3) == 6);
  CHECK(count(Family::A, 4) == 10);
  CHECK(count(Family::A, 5) == 15);
  CHECK(count(Family::A, 6) == 21);
  CHECK(count(Family::B, 2) == 4);
  CHECK(count(Family::B, 3) == 9);
  CHECK(count(Family::B, 4) == 16);
  CHECK(count(Family::B, 5) == 25);
  CHECK(count(Family::C, 2) == 4);
  CHECK(count(Family::C, 3) == 9);
  CHECK(count(Family::C, 4) == 16);
  CHECK(count(Family::C, 5) == 25);
  CHECK(count(Family::D, 3) == 6);
  CHECK(count(Family::D, 4) == 12);
  CHECK(count(Family::D, 5) == 20);
  CHECK(count(Family::E, 6) == 36);
  CHECK(count(Family::E, 7) == 63);
  CHECK(count(Family::E, 8) == 120);
  CHECK(count(Family::F, 4) == 24);
  CHECK(count(Family::G, 2) == 6);
}

TEST_CASE("highest roots have the expected coefficients and heights") {
  auto theta = [](Family f, int n) {
    RootSystem rs(f, n);
    return rs.root(rs.theta());
  };
  CHECK(theta(Family::A, 2) == Coeffs{1, 1});
  CHECK(theta(Family::B, 3) == Coeffs{1, 2, 2});
  CHECK(theta(Family::C, 3) == Coeffs{2, 2, 1});
  CHECK(theta(Family::D, 4) == Coeffs{1, 2, 1, 1});
  CHECK(theta(Family::F, 4) == Coeffs{2, 3, 4, 2});
  CHECK(theta(Family::G, 2) == Coeffs{2, 3});

  auto theta_height = [](Family f, int n) {
    RootSystem rs(f, n);
    return rs.height_of(rs.theta());
  };
  CHECK(theta_height(Family::A, 3) == 3);
  CHECK(theta_height(Family::B, 3) == 5);
  CHECK(theta_height(Family::C, 3) == 5);
  CHECK(theta_height(Family::D, 4) == 5);
  CHECK(theta_height(Family::E, 6) == 11);
  CHECK(theta_height(Family::F, 4) == 11);
  CHECK(theta_height(Family::G, 2) == 5);
}

TEST_CASE("roots are ordered by height then ascending coefficients") {
  RootSystem rs(Family::A, 2);
  CHECK(rs.root(0) == Coeffs{0, 1});
  CHECK(rs.root(1) == Coeffs{1, 0});
  CHECK(rs.root(2) == Coeffs{1, 1});
  CHECK(rs.theta() == 2);
  RootSystem g2(Family::G, 2);
  for (int i = 1; i < g2.num_positive(); ++i) {
    const Coeffs& a = g2.root(i - 1);
    const Coeffs& b = g2.root(i);
    bool ordered = height(a) < height(b) || (height(a) == height(b) && a < b);
    CHECK(ordered);
  }
}

TEST_CASE("negative roots mirror the positive ones") {
  RootSystem rs(Family::B, 3);
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    CHECK(rs.neg(rs.neg(idx)) == idx);
    Coeffs flipped = rs.root(idx);
    for (int& x : flipped) x = -x;
    CHECK(rs.root(rs.neg(idx)) == flipped);
    CHECK(rs.is_positive(idx) != rs.is_positive(rs.neg(idx)));
    CHECK(rs.height_of(idx) == -rs.height_of(rs.neg(idx)));
  }
}

TEST_CASE("Cartan matrices are as expected") {
  RootSystem b3(Family::B, 3);
  CHECK(b3.cartan() == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  RootSystem c3(Family::C, 3);
  CHECK(c3.cartan() == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  RootSystem f4(Family::F, 4);
  CHECK(f4.cartan() ==
        std::vector<std::vector<int>>{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  RootSystem g2(Family::G, 2);
  CHECK(g2.cartan() == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
}

TEST_CASE("long and short roots are classified correctly") {
  RootSystem g2(Family::G, 2);
  CHECK(g2.is_long(g2.simple_root_index(0)));
  CHECK_FALSE(g2.is_long(g2.simple_root_index(1)));
  CHECK(g2.is_long(g2.theta()));

  RootSystem b3(Family::B, 3);
  CHECK_FALSE(b3.is_long(b3.simple_root_index(2)));
  CHECK(b3.is_long(b3.simple_root_index(0)));

  RootSystem c3(Family::C, 3);
  CHECK(c3.is_long(c3.simple_root_index(2)));
  CHECK_FALSE(c3.is_long(c3.simple_root_index(0)));
  CHECK(c3.is_long(c3.theta()));

  // Simply laced: every root is long.
  for (Family f : {Family::A, Family::D}) {
    RootSystem rs(f, f == Family::A ? 3 : 4);
    for (int idx = 0; idx < rs.num_roots(); ++idx) CHECK(rs.is_long(idx));
  }

  // The highest root is always long and has squared length 2.
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2},
                                                         {Family::B, 3},
                                                         {Family::C, 3},
                                                         {Family::D, 4},
                                                         {Family::F, 4},
                                                         {Family::G, 2}}) {
    RootSystem rs(f, n);
    CHECK(rs.pairing(rs.theta(), rs.theta()) == Rational(2));
  }
}

TEST_CASE("root addition tables agree with coefficient arithmetic") {
  RootSystem g2(Family::G, 2);
  auto sum = g2.add_roots(Coeffs{0, 1}, Coeffs{1, 2});
  REQUIRE(sum.has_value());
  CHECK(*sum == Coeffs{1, 3});
  CHECK_FALSE(g2.add_roots(Coeffs{1, 0}, Coeffs{1, 0}).has_value());

  for (Family f : {Family::G, Family::B}) {
    RootSystem rs(f, f == Family::G ? 2 : 3);
    for (int i = 0; i < rs.num_roots(); ++i) {
      for (int j = 0; j < rs.num_roots(); ++j) {
        auto s = rs.add_roots(rs.root(i), rs.root(j));
        int idx = rs.add(i, j);
        CHECK(s.has_value() == (idx >= 0));
        if (s && idx >= 0) CHECK(*s == rs.root(idx));
      }
    }
  }
}

TEST_CASE("is_root and index_of round trip") {
  RootSystem a2(Family::A, 2);
  CHECK(a2.is_root(Coeffs{1, 1}));
  CHECK_FALSE(a2.is_root(Coeffs{2, 0}));
  CHECK_FALSE(a2.is_root(Coeffs{0, 0}));
  RootSystem b3(Family::B, 3);
  for (int idx = 0; idx < b3.num_roots(); ++idx) {
    CHECK(b3.index_of(b3.root(idx)) == idx);
  }
}

TEST_CASE("epsilon coordinates round trip on the classical types") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
    RootSystem rs(f, n);
    for (int idx = 0; idx < rs.num_roots(); ++idx) {
      CHECK(rs.from_epsilon(rs.to_epsilon(idx)) == rs.root(idx));
      CHECK(rs.index_from_epsilon(rs.to_epsilon(idx)) == idx);
    }
  }
  RootSystem a3(Family::A, 3);
  for (int idx = 0; idx < a3.num_roots(); ++idx) {
    int total = 0;
    for (int x : a3.to_epsilon(idx)) total += x;
    CHECK(total == 0);
  }
  RootSystem b3(Family::B, 3);
  CHECK(b3.to_epsilon(b3.simple_root_index(2)) == std::vector<int>{0, 0, 1});
  RootSystem c3(Family::C, 3);
  CHECK(c3.to_epsilon(c3.simple_root_index(2)) == std::vector<int>{0, 0, 2});
  RootSystem d4(Family::D, 4);
  CHECK(d4.to_epsilon(d4.simple_root_index(3)) == std::vector<int>{0, 0, 1, 1});
  CHECK(d4.to_epsilon(d4.simple_root_index(2)) == std::vector<int>{0, 0, 1, -1});
}

TEST_CASE("fundamental weights are dual to the coroots") {
  RootSystem f4(Family::F, 4);
  for (int k = 0; k < 4; ++k) {
    Weight w = f4.fundamental_weight(k);
    for (int j = 0; j < 4; ++j) {
      CHECK(f4.cov_pairing(w, j) == Rational(k == j ? 1 : 0));
    }
  }
  RootSystem g2(Family::G, 2);
  CHECK(g2.fundamental_weight(0).coords == std::vector<Rational>{Rational(2), Rational(3)});
}

TEST_CASE("pair6 is symmetric and consistent with rational pairings") {
  RootSystem b3(Family::B, 3);
  for (int i = 0; i < b3.num_roots(); ++i) {
    for (int j = 0; j < b3.num_roots(); ++j) {
      CHECK(b3.pair6(i, j) == b3.pair6(j, i));
      CHECK(b3.pairing(i, j) == Rational(b3.pair6(i, j), 6));
      CHECK(b3.pairing(b3.weight_of_root(i), b3.weight_of_root(j)) == b3.pairing(i, j));
    }
  }
}

TEST_CASE("simple reflections act correctly") {
  RootSystem f4(Family::F, 4);
  for (int node = 0; node < 4; ++node) {
    CHECK(f4.reflect(node, f4.simple_root_index(node)) == f4.neg(f4.simple_root_index(node)));
    for (int idx = 0; idx < f4.num_roots(); ++idx) {
      CHECK(f4.reflect(node, f4.reflect(node, idx)) == idx);
    }
  }
  RootSystem b3(Family::B, 3);
  for (int node = 0; node < 3; ++node) {
    for (int idx = 0; idx < b3.num_roots(); ++idx) {
      CHECK(b3.reflect(b3.weight_of_root(idx), node) == b3.weight_of_root(b3.reflect(node, idx)));
    }
  }
}

TEST_CASE("dominant representatives are reached by the recorded word") {
  RootSystem a2(Family::A, 2);
  Weight lambda = Rational(-1) * a2.fundamental_weight(0);
  auto [dom, word] = dominant_representative(a2, lambda);
  CHECK(dom == a2.fundamental_weight(1));
  CHECK(apply_word(a2, word, lambda) == dom);

  // An already dominant weight is returned unchanged with an empty word.
  auto [dom2, word2] = dominant_representative(a2, a2.fundamental_weight(0));
  CHECK(dom2 == a2.fundamental_weight(0));
  CHECK(word2.empty());

  // Any root transported to the dominant chamber becomes the highest root
  // in a system where all roots are conjugate.
  for (int idx = 0; idx < a2.num_roots(); ++idx) {
    auto [d, w] = dominant_representative(a2, a2.weight_of_root(idx));
    CHECK(d == a2.weight_of_root(a2.theta()));
    CHECK(apply_word_to_root(a2, w, idx) == a2.theta());
  }
}

TEST_CASE("invalid specifications are rejected") {
  CHECK_THROWS_AS(RootSystem(Family::B, 1), config_error);
  CHECK_THROWS_AS(RootSystem(Family::C, 1), config_error);
  CHECK_THROWS_AS(RootSystem(Family::D, 2), config_error);
  CHECK_THROWS_AS(RootSystem(Family::E, 5), config_error);
  CHECK_THROWS_AS(RootSystem(Family::E, 9), config_error);
  CHECK_THROWS_AS(RootSystem(Family::F, 3), config_error);
  CHECK_THROWS_AS(RootSystem(Family::G, 3), config_error);
  CHECK_THROWS_AS(RootSystem(Family::A, 0), config_error);
  CHECK_THROWS_AS(RootSystem(Family::A, 10), config_error);
  CHECK_THROWS_AS(family_from_string("X"), config_error);
  CHECK_THROWS_AS(family_from_string("AB"), config_error);
  CHECK(family_from_string("b") == Family::B);
}

TEST_CASE("simple node bookkeeping round trips") {
  RootSystem d4(Family::D, 4);
  for (int node = 0; node < 4; ++node) {
    int idx = d4.simple_root_index(node);
    CHECK(d4.height_of(idx) == 1);
    CHECK(d4.simple_node_of(idx) == node);
  }
  CHECK(d4.simple_node_of(d4.theta()) == -1);
}

TEST_CASE("weights support arithmetic in the simple root basis") {
  RootSystem a2(Family::A, 2);
  Weight u = Weight::from_coeffs(Coeffs{1, 0});
  Weight v = Weight::from_coeffs(Coeffs{0, 1});
  CHECK((u + v) == Weight::from_coeffs(Coeffs{1, 1}));
  CHECK((u - u).is_zero());
  CHECK(Rational(2) * u == Weight::from_coeffs(Coeffs{2, 0}));
  CHECK(a2.pairing(u + v, u + v) == Rational(2));
}
