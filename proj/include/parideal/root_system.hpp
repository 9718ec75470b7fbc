#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parideal/rational.hpp"

namespace parideal {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Invalid construction input (family/rank out of bounds).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation called with arguments violating its precondition.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation not defined for this family (e.g. epsilon coordinates outside
// the classical types).
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested computation exceeds the explicit scale cap for its algorithm.
class scale_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Spec
// ---------------------------------------------------------------------------

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

inline Family family_from_char(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G') {
    throw config_error(std::string("unknown family '") + c + "'");
  }
  return static_cast<Family>(c);
}

inline Family family_from_string(const std::string& s) {
  if (s.size() != 1) throw config_error("unknown family '" + s + "'");
  return family_from_char(s[0]);
}

inline char family_char(Family f) { return static_cast<char>(f); }

struct RootSystemSpec {
  Family family;
  int rank;

  std::string name() const {
    return std::string(1, family_char(family)) + std::to_string(rank);
  }
};

// Engineering cap: root coefficients are packed 7 bits per coordinate into a
// 64-bit key, which accommodates rank <= 9 (enough for A1..A9 and E8).
inline constexpr int kMaxRank = 9;

inline void validate_spec(const RootSystemSpec& spec) {
  const int n = spec.rank;
  if (n < 1 || n > kMaxRank) {
    throw config_error("rank " + std::to_string(n) + " outside supported range 1.." +
                       std::to_string(kMaxRank));
  }
  switch (spec.family) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      if (n < 2) throw config_error(spec.name() + ": rank must be >= 2");
      break;
    case Family::D:
      if (n < 3) throw config_error(spec.name() + ": rank must be >= 3");
      break;
    case Family::E:
      if (n < 6 || n > 8) throw config_error(spec.name() + ": rank must be 6, 7 or 8");
      break;
    case Family::F:
      if (n != 4) throw config_error(spec.name() + ": rank must be 4");
      break;
    case Family::G:
      if (n != 2) throw config_error(spec.name() + ": rank must be 2");
      break;
  }
}

// ---------------------------------------------------------------------------
// Roots as integer coefficient vectors over the simple roots
// ---------------------------------------------------------------------------

using Coeffs = std::vector<int>;

inline int height(const Coeffs& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

inline int d_coeff(const Coeffs& c, int i) {
  if (i < 0 || i >= static_cast<int>(c.size())) {
    throw usage_error("d_coeff: node index out of range");
  }
  return c[static_cast<std::size_t>(i)];
}

// Dominance order: a <= b iff b - a has all coefficients >= 0.
inline bool leq(const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) throw usage_error("leq: dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Weights: exact-rational vectors in the simple-root basis
// ---------------------------------------------------------------------------

struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(int rank) : coords(static_cast<std::size_t>(rank)) {}
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}

  static Weight from_coeffs(const Coeffs& c) {
    Weight w;
    w.coords.reserve(c.size());
    for (int x : c) w.coords.emplace_back(x);
    return w;
  }

  int rank() const { return static_cast<int>(coords.size()); }

  bool is_zero() const {
    for (const auto& r : coords) {
      if (!r.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

  friend Weight operator+(const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size()) {
      throw usage_error("Weight addition: dimension mismatch");
    }
    Weight r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size()) {
      throw usage_error("Weight subtraction: dimension mismatch");
    }
    Weight r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
  }
  friend Weight operator*(const Rational& c, const Weight& w) {
    Weight r = w;
    for (auto& x : r.coords) x *= c;
    return r;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += coords[i].str();
    }
    s += ")";
    return s;
  }
};

// ---------------------------------------------------------------------------
// RootSystem
// ---------------------------------------------------------------------------

class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec) : spec_(spec) {
    validate_spec(spec_);
    build_cartan();
    generate_roots();
    build_tables();
    build_epsilon();
  }

  RootSystem(Family f, int rank) : RootSystem(RootSystemSpec{f, rank}) {}

  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;

  const RootSystemSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  int rank() const { return spec_.rank; }
  std::string name() const { return spec_.name(); }

  int num_positive() const { return m_; }
  int num_roots() const { return 2 * m_; }

  // Roots are indexed 0..2m-1: positives first in canonical order
  // (height ascending, then lexicographic on coefficient vectors), then the
  // negatives with neg(i) = i + m for positive i.
  const Coeffs& root(int idx) const { return roots_[check_index(idx)]; }
  int height_of(int idx) const { return heights_[check_index(idx)]; }
  bool is_positive(int idx) const { return check_index(idx) < m_; }
  int neg(int idx) const {
    check_index(idx);
    return idx < m_ ? idx + m_ : idx - m_;
  }
  int theta() const { return theta_idx_; }

  int simple_root_index(int node) const {
    if (node < 0 || node >= rank()) throw usage_error("simple root node out of range");
    return simple_idx_[static_cast<std::size_t>(node)];
  }
  // Node number of a simple root, or -1 if the root is not simple.
  int simple_node_of(int idx) const {
    check_index(idx);
    if (heights_[idx] != 1) return -1;
    const Coeffs& c = roots_[idx];
    for (int i = 0; i < rank(); ++i) {
      if (c[static_cast<std::size_t>(i)] == 1) return i;
    }
    return -1;
  }

  int index_of(const Coeffs& v) const {
    if (static_cast<int>(v.size()) != rank()) {
      throw usage_error("index_of: dimension mismatch");
    }
    for (int x : v) {
      if (x > 63 || x < -63) return -1;
    }
    auto it = index_.find(pack(v));
    return it == index_.end() ? -1 : it->second;
  }
  bool is_root(const Coeffs& v) const { return index_of(v) >= 0; }

  // Index of root_i + root_j, or -1 when the sum is not a root.
  int add(int i, int j) const {
    return add_[static_cast<std::size_t>(check_index(i)) * static_cast<std::size_t>(2 * m_) +
                static_cast<std::size_t>(check_index(j))];
  }

  std::optional<Coeffs> add_roots(const Coeffs& a, const Coeffs& b) const {
    if (a.size() != b.size() || static_cast<int>(a.size()) != rank()) {
      throw usage_error("add_roots: dimension mismatch");
    }
    Coeffs s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
    int idx = index_of(s);
    if (idx < 0) return std::nullopt;
    return s;
  }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Squared-length normalization: long roots have (alpha,alpha) = 2.
  // sym6(i) = 6 * d_i where d_i = (alpha_i,alpha_i)/2; always an integer.
  int sym6(int node) const { return sym6_[static_cast<std::size_t>(node)]; }
  Rational symmetrizer(int node) const { return Rational(sym6(node), 6); }

  // 6 * (root_i, root_j); integral for every pair.
  int pair6(int i, int j) const {
    return pair6_[static_cast<std::size_t>(check_index(i)) * static_cast<std::size_t>(2 * m_) +
                  static_cast<std::size_t>(check_index(j))];
  }
  bool is_long(int idx) const { return pair6(idx, idx) == 12; }

  // Simple reflection s_{alpha_j} acting on root indices (a permutation of R).
  int reflect(int node, int idx) const {
    if (node < 0 || node >= rank()) throw usage_error("reflect: node out of range");
    return reflect_[static_cast<std::size_t>(node) * static_cast<std::size_t>(2 * m_) +
                    static_cast<std::size_t>(check_index(idx))];
  }

  // --- pairing ------------------------------------------------------------

  Rational pairing(const Weight& a, const Weight& b) const {
    if (a.rank() != rank() || b.rank() != rank()) {
      throw usage_error("pairing: dimension mismatch");
    }
    Rational acc;
    for (int i = 0; i < rank(); ++i) {
      if (a.coords[static_cast<std::size_t>(i)].is_zero()) continue;
      Rational row;
      for (int j = 0; j < rank(); ++j) {
        if (b.coords[static_cast<std::size_t>(j)].is_zero()) continue;
        row += Rational(b6_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
               b.coords[static_cast<std::size_t>(j)];
      }
      acc += a.coords[static_cast<std::size_t>(i)] * row;
    }
    return acc / Rational(6);
  }
  Rational pairing(const Weight& a, int root_idx) const {
    return pairing(a, weight_of_root(root_idx));
  }
  Rational pairing(int root_idx, const Weight& b) const {
    return pairing(weight_of_root(root_idx), b);
  }
  Rational pairing(int i, int j) const { return Rational(pair6(i, j), 6); }

  // 6 * (lambda, root_idx) for an integer vector in the root lattice.
  long long pair6_with(const Coeffs& lambda, int root_idx) const {
    if (static_cast<int>(lambda.size()) != rank()) {
      throw usage_error("pair6_with: dimension mismatch");
    }
    const Coeffs& r = roots_[check_index(root_idx)];
    long long acc = 0;
    for (int i = 0; i < rank(); ++i) {
      if (!lambda[static_cast<std::size_t>(i)]) continue;
      long long row = 0;
      for (int j = 0; j < rank(); ++j) {
        row += static_cast<long long>(b6_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
               r[static_cast<std::size_t>(j)];
      }
      acc += lambda[static_cast<std::size_t>(i)] * row;
    }
    return acc;
  }

  // <v, alpha_node^vee> = 2(v,alpha_node)/(alpha_node,alpha_node); integral on
  // the root lattice.
  int cov_pairing(const Coeffs& v, int node) const {
    if (static_cast<int>(v.size()) != rank()) {
      throw usage_error("cov_pairing: dimension mismatch");
    }
    if (node < 0 || node >= rank()) throw usage_error("cov_pairing: node out of range");
    int acc = 0;
    for (int i = 0; i < rank(); ++i) {
      acc += v[static_cast<std::size_t>(i)] *
             cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(node)];
    }
    return acc;
  }
  Rational cov_pairing(const Weight& v, int node) const {
    if (v.rank() != rank()) throw usage_error("cov_pairing: dimension mismatch");
    if (node < 0 || node >= rank()) throw usage_error("cov_pairing: node out of range");
    Rational acc;
    for (int i = 0; i < rank(); ++i) {
      acc += v.coords[static_cast<std::size_t>(i)] *
             Rational(cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(node)]);
    }
    return acc;
  }

  Weight reflect(const Weight& v, int node) const {
    Rational k = cov_pairing(v, node);
    Weight r = v;
    r.coords[static_cast<std::size_t>(node)] -= k;
    return r;
  }

  Weight weight_of_root(int idx) const {
    return Weight::from_coeffs(roots_[check_index(idx)]);
  }

  // omega_k in the simple-root basis: row k of the inverse Cartan matrix.
  Weight fundamental_weight(int k) const {
    if (k < 0 || k >= rank()) throw usage_error("fundamental weight node out of range");
    return Weight(cartan_inv_[static_cast<std::size_t>(k)]);
  }

  // --- epsilon coordinates (classical families only) -----------------------

  bool is_classical() const {
    switch (spec_.family) {
      case Family::A:
      case Family::B:
      case Family::C:
      case Family::D:
        return true;
      default:
        return false;
    }
  }

  int ambient_dim() const {
    require_classical();
    return spec_.family == Family::A ? rank() + 1 : rank();
  }

  std::vector<int> to_epsilon(int idx) const {
    require_classical();
    return epsilon_of(roots_[check_index(idx)]);
  }

  // Epsilon coordinates of any integer vector in the root lattice.
  std::vector<int> epsilon_of(const Coeffs& c) const {
    require_classical();
    if (static_cast<int>(c.size()) != rank()) {
      throw usage_error("epsilon_of: dimension mismatch");
    }
    std::vector<int> v(static_cast<std::size_t>(ambient_dim()), 0);
    for (int i = 0; i < rank(); ++i) {
      for (int k = 0; k < ambient_dim(); ++k) {
        v[static_cast<std::size_t>(k)] +=
            c[static_cast<std::size_t>(i)] *
            eps_simple_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      }
    }
    return v;
  }

  // Root index for an epsilon-coordinate vector, or -1 when not a root.
  int index_from_epsilon(const std::vector<int>& eps) const {
    require_classical();
    if (static_cast<int>(eps.size()) != ambient_dim()) {
      throw usage_error("index_from_epsilon: dimension mismatch");
    }
    auto it = eps_index_.find(eps);
    return it == eps_index_.end() ? -1 : it->second;
  }

  Coeffs from_epsilon(const std::vector<int>& eps) const {
    int idx = index_from_epsilon(eps);
    if (idx < 0) throw usage_error("from_epsilon: vector is not a root");
    return roots_[static_cast<std::size_t>(idx)];
  }

 private:
  int check_index(int idx) const {
    if (idx < 0 || idx >= 2 * m_) throw usage_error("root index out of range");
    return idx;
  }

  void require_classical() const {
    if (!is_classical()) {
      throw unsupported_error(name() + ": epsilon coordinates are defined for types A-D only");
    }
  }

  static std::uint64_t pack(const Coeffs& v) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      key |= static_cast<std::uint64_t>(v[i] + 64) << (7 * i);
    }
    return key;
  }

  void build_cartan() {
    const int n = rank();
    cartan_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    auto edge = [&](int a, int b) {
      cartan_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = -1;
      cartan_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -1;
    };
    sym6_.assign(static_cast<std::size_t>(n), 6);
    switch (spec_.family) {
      case Family::A:
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        break;
      case Family::B:
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        cartan_[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;
        sym6_[static_cast<std::size_t>(n - 1)] = 3;
        break;
      case Family::C:
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        cartan_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;
        for (int i = 0; i + 1 < n; ++i) sym6_[static_cast<std::size_t>(i)] = 3;
        break;
      case Family::D:
        for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
        edge(n - 3, n - 1);
        break;
      case Family::E:
        edge(0, 2);
        edge(2, 3);
        edge(3, 4);
        edge(4, 5);
        edge(1, 3);
        if (n >= 7) edge(5, 6);
        if (n >= 8) edge(6, 7);
        break;
      case Family::F:
        edge(0, 1);
        edge(2, 3);
        cartan_[1][2] = -2;
        cartan_[2][1] = -1;
        sym6_[2] = 3;
        sym6_[3] = 3;
        break;
      case Family::G:
        cartan_[0][1] = -3;
        cartan_[1][0] = -1;
        sym6_[1] = 2;
        break;
    }
    // Symmetrized form: b6[i][j] = 6*(alpha_i, alpha_j) = cartan[i][j]*sym6[j].
    b6_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        b6_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
            sym6_[static_cast<std::size_t>(j)];
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (b6_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            b6_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
          throw std::logic_error("internal: symmetrized form is not symmetric");
        }
      }
    }
    // Inverse Cartan via exact Gaussian elimination; row k = omega_k in the
    // simple-root basis.
    std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(n),
                                           std::vector<Rational>(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            Rational(cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r) {
        if (!mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
          piv = r;
          break;
        }
      }
      if (piv < 0) throw std::logic_error("internal: singular Cartan matrix");
      std::swap(mat[static_cast<std::size_t>(col)], mat[static_cast<std::size_t>(piv)]);
      Rational inv = Rational(1) / mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (auto& x : mat[static_cast<std::size_t>(col)]) x *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        Rational f = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int c2 = 0; c2 < 2 * n; ++c2) {
          mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
              f * mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
        }
      }
    }
    cartan_inv_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    // omega_k solves sum_i omega_k[i]*C[i][j] = delta_{kj}, i.e. omega_k is
    // row k of C^{-1}; rows and columns differ for the non-symmetric Cartan
    // matrices (B, C, F, G).
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        cartan_inv_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
            mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(n + i)];
      }
    }
  }

  void generate_roots() {
    const int n = rank();
    std::vector<Coeffs> pos;
    std::unordered_map<std::uint64_t, int> seen;
    auto push = [&](const Coeffs& v) {
      std::uint64_t key = pack(v);
      if (seen.count(key)) return false;
      seen.emplace(key, static_cast<int>(pos.size()));
      pos.push_back(v);
      return true;
    };
    std::vector<Coeffs> level;
    for (int i = 0; i < n; ++i) {
      Coeffs e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      push(e);
      level.push_back(e);
    }
    // Breadth-first closure by root strings: beta + alpha_i is a root iff
    // q = p - <beta, alpha_i^vee> is positive, where p counts the steps the
    // string continues below beta. Processing by height keeps the walk-down
    // lookups complete.
    while (!level.empty()) {
      std::vector<Coeffs> next;
      for (const Coeffs& beta : level) {
        for (int i = 0; i < n; ++i) {
          int p = 0;
          Coeffs v = beta;
          for (;;) {
            v[static_cast<std::size_t>(i)] -= 1;
            bool neg = v[static_cast<std::size_t>(i)] < 0;
            if (neg || !seen.count(pack(v))) break;
            ++p;
          }
          int q = p - cov_pairing(beta, i);
          if (q >= 1) {
            Coeffs up = beta;
            up[static_cast<std::size_t>(i)] += 1;
            if (push(up)) next.push_back(up);
          }
        }
      }
      level = std::move(next);
    }
    std::sort(pos.begin(), pos.end(), [](const Coeffs& a, const Coeffs& b) {
      int ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    m_ = static_cast<int>(pos.size());
    roots_.reserve(static_cast<std::size_t>(2 * m_));
    roots_ = std::move(pos);
    for (int k = 0; k < m_; ++k) {
      Coeffs negv = roots_[static_cast<std::size_t>(k)];
      for (auto& x : negv) x = -x;
      roots_.push_back(std::move(negv));
    }
    heights_.resize(static_cast<std::size_t>(2 * m_));
    index_.reserve(static_cast<std::size_t>(2 * m_) * 2);
    for (int k = 0; k < 2 * m_; ++k) {
      heights_[static_cast<std::size_t>(k)] = height(roots_[static_cast<std::size_t>(k)]);
      index_.emplace(pack(roots_[static_cast<std::size_t>(k)]), k);
    }
    // The highest root is the unique dominance-maximum of the positives.
    theta_idx_ = m_ - 1;
    for (int k = 0; k < m_; ++k) {
      if (!leq(roots_[static_cast<std::size_t>(k)], roots_[static_cast<std::size_t>(theta_idx_)])) {
        throw std::logic_error("internal: highest root is not a dominance maximum");
      }
    }
    simple_idx_.assign(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < m_; ++k) {
      if (heights_[static_cast<std::size_t>(k)] == 1) {
        const Coeffs& c = roots_[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i) {
          if (c[static_cast<std::size_t>(i)] == 1) simple_idx_[static_cast<std::size_t>(i)] = k;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (simple_idx_[static_cast<std::size_t>(i)] < 0) {
        throw std::logic_error("internal: missing simple root after generation");
      }
    }
  }

  void build_tables() {
    const std::size_t nn = static_cast<std::size_t>(2 * m_);
    add_.assign(nn * nn, -1);
    pair6_.assign(nn * nn, 0);
    for (int i = 0; i < 2 * m_; ++i) {
      const Coeffs& a = roots_[static_cast<std::size_t>(i)];
      for (int j = 0; j < 2 * m_; ++j) {
        const Coeffs& b = roots_[static_cast<std::size_t>(j)];
        Coeffs s(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
        auto it = index_.find(pack(s));
        if (it != index_.end()) {
          add_[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)] =
              static_cast<std::int16_t>(it->second);
        }
        long long p6 = 0;
        for (int x = 0; x < rank(); ++x) {
          if (!a[static_cast<std::size_t>(x)]) continue;
          long long row = 0;
          for (int y = 0; y < rank(); ++y) {
            row += static_cast<long long>(b6_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) *
                   b[static_cast<std::size_t>(y)];
          }
          p6 += static_cast<long long>(a[static_cast<std::size_t>(x)]) * row;
        }
        pair6_[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)] =
            static_cast<int>(p6);
      }
    }
    reflect_.assign(static_cast<std::size_t>(rank()) * nn, -1);
    for (int node = 0; node < rank(); ++node) {
      for (int i = 0; i < 2 * m_; ++i) {
        const Coeffs& a = roots_[static_cast<std::size_t>(i)];
        int k = cov_pairing(a, node);
        Coeffs im = a;
        im[static_cast<std::size_t>(node)] -= k;
        auto it = index_.find(pack(im));
        if (it == index_.end()) {
          throw std::logic_error("internal: reflection left the root set");
        }
        reflect_[static_cast<std::size_t>(node) * nn + static_cast<std::size_t>(i)] =
            static_cast<std::int16_t>(it->second);
      }
    }
  }

  void build_epsilon() {
    if (!is_classical()) return;
    const int n = rank();
    const int dim = ambient_dim();
    eps_simple_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(dim), 0));
    auto set2 = [&](int i, int a, int va, int b, int vb) {
      eps_simple_[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = va;
      if (b >= 0) eps_simple_[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] = vb;
    };
    switch (spec_.family) {
      case Family::A:
        for (int i = 0; i < n; ++i) set2(i, i, 1, i + 1, -1);
        break;
      case Family::B:
        for (int i = 0; i + 1 < n; ++i) set2(i, i, 1, i + 1, -1);
        set2(n - 1, n - 1, 1, -1, 0);
        break;
      case Family::C:
        for (int i = 0; i + 1 < n; ++i) set2(i, i, 1, i + 1, -1);
        set2(n - 1, n - 1, 2, -1, 0);
        break;
      case Family::D:
        for (int i = 0; i + 1 < n; ++i) set2(i, i, 1, i + 1, -1);
        set2(n - 1, n - 2, 1, n - 1, 1);
        break;
      default:
        break;
    }
    for (int k = 0; k < 2 * m_; ++k) {
      eps_index_.emplace(to_epsilon_raw(k), k);
    }
  }

  std::vector<int> to_epsilon_raw(int idx) const {
    const Coeffs& c = roots_[static_cast<std::size_t>(idx)];
    std::vector<int> v(static_cast<std::size_t>(ambient_dim()), 0);
    for (int i = 0; i < rank(); ++i) {
      for (int k = 0; k < ambient_dim(); ++k) {
        v[static_cast<std::size_t>(k)] +=
            c[static_cast<std::size_t>(i)] *
            eps_simple_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      }
    }
    return v;
  }

  RootSystemSpec spec_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> b6_;
  std::vector<int> sym6_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<Coeffs> roots_;
  std::vector<int> heights_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> simple_idx_;
  std::vector<std::int16_t> add_;
  std::vector<int> pair6_;
  std::vector<std::int16_t> reflect_;
  std::vector<std::vector<int>> eps_simple_;
  std::map<std::vector<int>, int> eps_index_;
  int m_ = 0;
  int theta_idx_ = -1;
};

inline RootSystem build_root_system(RootSystemSpec spec) { return RootSystem(spec); }

// ---------------------------------------------------------------------------
// Weyl operations
// ---------------------------------------------------------------------------

// Applies simple reflections left to right: result = s_{w[k-1]}(...(s_{w[0]}(v))).
inline Weight apply_word(const RootSystem& rs, const std::vector<int>& word, Weight v) {
  for (int node : word) v = rs.reflect(v, node);
  return v;
}

inline int apply_word_to_root(const RootSystem& rs, const std::vector<int>& word, int idx) {
  for (int node : word) idx = rs.reflect(node, idx);
  return idx;
}

// Moves lambda into the dominant chamber by simple reflections (smallest
// negative node first) and returns the reflection word that was applied.
// Each step strictly decreases #{alpha in R+ : (lambda,alpha) < 0}.
inline std::pair<Weight, std::vector<int>> dominant_representative(const RootSystem& rs,
                                                                   Weight lambda) {
  std::vector<int> word;
  int guard = 0;
  for (;;) {
    int node = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.cov_pairing(lambda, i).sign() < 0) {
        node = i;
        break;
      }
    }
    if (node < 0) break;
    lambda = rs.reflect(lambda, node);
    word.push_back(node);
    if (++guard > rs.num_positive()) {
      throw std::logic_error("internal: dominance walk failed to terminate");
    }
  }
  return {std::move(lambda), std::move(word)};
}

}  // namespace parideal
