#pragma once

// Root and weight data for the classical families A_n, B_n, C_n, D_n, the
// exceptional F_4 and G_2, and the reducible nA_1.
//
// Weights are integer vectors in the basis of fundamental weights (the
// omega-basis). Simple roots are numbered in Dynkin order; C++ indices are
// 0-based, so index i refers to the Dynkin node i+1.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hybridweyl {

enum class Family { A, B, C, D, F, G, nA1 };

class AlgebraLabel {
 public:
  AlgebraLabel(Family family, int rank) : family_(family), rank_(rank) {
    auto fail = [&](const char* why) {
      throw ConstructionError("invalid algebra " + name() + ": " + why);
    };
    switch (family) {
      case Family::A:
        if (rank < 1) fail("A_n requires n >= 1");
        break;
      case Family::B:
        if (rank < 2) fail("B_n requires n >= 2");
        break;
      case Family::C:
        if (rank < 2) fail("C_n requires n >= 2");
        break;
      case Family::D:
        if (rank < 2) fail("D_n requires n >= 2");
        break;
      case Family::F:
        if (rank != 4) fail("F has rank 4 only");
        break;
      case Family::G:
        if (rank != 2) fail("G has rank 2 only");
        break;
      case Family::nA1:
        if (rank < 1) fail("nA1 requires at least one component");
        break;
    }
  }

  // Accepts "B3", "G2", ... and "3A1" for the reducible nA_1.
  static AlgebraLabel parse(std::string_view text) {
    auto bad = [&] { return ConstructionError("cannot parse algebra label '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view digits) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) throw bad();
      return value;
    };
    if (text.size() >= 3 && text.substr(text.size() - 2) == "A1" &&
        std::isdigit(static_cast<unsigned char>(text.front())))
      return AlgebraLabel(Family::nA1, parse_int(text.substr(0, text.size() - 2)));
    if (text.size() < 2) throw bad();
    const int rank = parse_int(text.substr(1));
    switch (text.front()) {
      case 'A': return AlgebraLabel(Family::A, rank);
      case 'B': return AlgebraLabel(Family::B, rank);
      case 'C': return AlgebraLabel(Family::C, rank);
      case 'D': return AlgebraLabel(Family::D, rank);
      case 'F': return AlgebraLabel(Family::F, rank);
      case 'G': return AlgebraLabel(Family::G, rank);
      default: throw bad();
    }
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }

  std::string name() const {
    static constexpr char letters[] = {'A', 'B', 'C', 'D', 'F', 'G'};
    if (family_ == Family::nA1) return std::to_string(rank_) + "A1";
    return letters[static_cast<int>(family_)] + std::to_string(rank_);
  }

  bool simply_laced() const {
    return family_ == Family::A || family_ == Family::D || family_ == Family::nA1;
  }

  friend bool operator==(const AlgebraLabel&, const AlgebraLabel&) = default;

 private:
  Family family_;
  int rank_;
};

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}

  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight ones(int rank) { return Weight(std::vector<int>(rank, 1)); }
  static Weight unit(int rank, int i) {
    Weight w = zero(rank);
    w.coords_[i] = 1;
    return w;
  }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }

  bool is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
  }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
  }

  Weight& operator+=(const Weight& o) {
    check_same_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (int& c : a.coords_) c *= k;
    return a;
  }
  Weight operator-() const { return -1 * *this; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  void check_same_rank(const Weight& o) const {
    if (o.coords_.size() != coords_.size())
      throw DimensionError("weight rank mismatch: " + str() + " vs " + o.str());
  }

  std::vector<int> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int c : w.coords()) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c));
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// A vector in the orthonormal e-basis of the ambient Euclidean space.
using LatticeVector = std::vector<Rational>;

inline Rational dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DimensionError("e-basis vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

enum class RootLength { long_root, short_root, only };

struct PositiveRoot {
  Weight omega;            // omega-basis coordinates
  std::vector<int> alpha;  // simple-root coordinates, all >= 0
  RootLength length;

  int height() const {
    int h = 0;
    for (int c : alpha) h += c;
    return h;
  }
};

struct RootSystemData {
  AlgebraLabel label;
  int ambient_dim;
  std::vector<LatticeVector> simple_roots;
  std::vector<LatticeVector> fundamental_weights;
  std::vector<std::vector<int>> cartan;       // cartan[j][k] = 2<a_j|a_k>/<a_k|a_k>
  std::vector<std::vector<Rational>> gram;    // <w_i|w_j>
  std::vector<PositiveRoot> positive_roots;
  std::vector<RootLength> simple_lengths;
  Weight rho;
  Weight rho_long;
  Weight rho_short;
  std::uint64_t weyl_order;

  int rank() const { return label.rank(); }

  void check(const Weight& w) const {
    if (w.rank() != rank())
      throw DimensionError("weight " + w.str() + " does not belong to " + label.name());
  }

  // Simple root alpha_i in omega-coordinates: row i of the Cartan matrix.
  Weight simple_root(int i) const { return Weight(cartan.at(i)); }
};

namespace detail {

inline LatticeVector e_vector(int dim, std::initializer_list<std::pair<int, Rational>> entries) {
  LatticeVector v(dim, Rational(0));
  for (const auto& [idx, val] : entries) v[idx] = val;
  return v;
}

inline LatticeVector scaled(LatticeVector v, const Rational& k) {
  for (auto& x : v) x *= k;
  return v;
}

struct Realization {
  int ambient_dim;
  std::vector<LatticeVector> roots;
  std::vector<LatticeVector> weights;
};

// e-basis realizations. B_n, C_n, F_4, G_2 follow the standard textbook
// vectors with Dynkin numbering; for F_4 the simple roots are
// alpha=e2-e3, beta=e3-e4, gamma=e4, delta=(e1-e2-e3-e4)/2.
inline Realization realize(const AlgebraLabel& label) {
  const int n = label.rank();
  Realization r;
  auto e = [&](int i) { return e_vector(r.ambient_dim, {{i, Rational(1)}}); };
  auto add = [](LatticeVector a, const LatticeVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  auto sub = [&](const LatticeVector& a, const LatticeVector& b) { return add(a, scaled(b, -1)); };
  auto prefix_sum = [&](int count) {
    LatticeVector v(r.ambient_dim, Rational(0));
    for (int j = 0; j < count; ++j) v[j] = 1;
    return v;
  };

  switch (label.family()) {
    case Family::A: {
      r.ambient_dim = n + 1;
      const LatticeVector all = prefix_sum(n + 1);
      for (int i = 0; i < n; ++i) {
        r.roots.push_back(sub(e(i), e(i + 1)));
        r.weights.push_back(sub(prefix_sum(i + 1), scaled(all, Rational(i + 1, n + 1))));
      }
      break;
    }
    case Family::B: {
      r.ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i) r.roots.push_back(sub(e(i), e(i + 1)));
      r.roots.push_back(e(n - 1));
      for (int i = 0; i + 1 < n; ++i) r.weights.push_back(prefix_sum(i + 1));
      r.weights.push_back(scaled(prefix_sum(n), Rational(1, 2)));
      break;
    }
    case Family::C: {
      r.ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i) r.roots.push_back(sub(e(i), e(i + 1)));
      r.roots.push_back(scaled(e(n - 1), 2));
      for (int i = 0; i < n; ++i) r.weights.push_back(prefix_sum(i + 1));
      break;
    }
    case Family::D: {
      r.ambient_dim = n;
      for (int i = 0; i + 1 < n; ++i) r.roots.push_back(sub(e(i), e(i + 1)));
      r.roots.push_back(add(e(n - 2), e(n - 1)));
      for (int i = 0; i + 2 < n; ++i) r.weights.push_back(prefix_sum(i + 1));
      r.weights.push_back(scaled(sub(prefix_sum(n - 1), e(n - 1)), Rational(1, 2)));
      r.weights.push_back(scaled(prefix_sum(n), Rational(1, 2)));
      break;
    }
    case Family::F: {
      r.ambient_dim = 4;
      const Rational h(1, 2);
      r.roots = {e_vector(4, {{1, 1}, {2, -1}}),
                 e_vector(4, {{2, 1}, {3, -1}}),
                 e_vector(4, {{3, 1}}),
                 e_vector(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}})};
      r.weights = {e_vector(4, {{0, 1}, {1, 1}}),
                   e_vector(4, {{0, 2}, {1, 1}, {2, 1}}),
                   e_vector(4, {{0, Rational(3, 2)}, {1, h}, {2, h}, {3, h}}),
                   e_vector(4, {{0, 1}})};
      break;
    }
    case Family::G: {
      r.ambient_dim = 3;
      const Rational t(1, 3);
      r.roots = {e_vector(3, {{0, 1}, {1, -1}}),
                 e_vector(3, {{0, -t}, {1, 2 * t}, {2, -t}})};
      r.weights = {e_vector(3, {{0, 1}, {2, -1}}),
                   e_vector(3, {{0, t}, {1, t}, {2, -2 * t}})};
      break;
    }
    case Family::nA1: {
      r.ambient_dim = n;
      for (int i = 0; i < n; ++i) {
        r.roots.push_back(scaled(e(i), 2));
        r.weights.push_back(e(i));
      }
      break;
    }
  }
  return r;
}

inline std::uint64_t classical_weyl_order(const AlgebraLabel& label) {
  const int n = label.rank();
  std::uint64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
  switch (label.family()) {
    case Family::A: return fact * static_cast<std::uint64_t>(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * fact;
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact;
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::nA1: return std::uint64_t{1} << n;
  }
  return 0;
}

inline Weight reflect(const std::vector<std::vector<int>>& cartan, int i, Weight w) {
  const int k = w[i];
  if (k != 0)
    for (std::size_t j = 0; j < cartan[i].size(); ++j) w[j] -= k * cartan[i][j];
  return w;
}

inline std::uint64_t orbit_count(const std::vector<std::vector<int>>& cartan, const Weight& seed) {
  std::unordered_set<Weight, WeightHash> seen{seed};
  std::deque<Weight> queue{seed};
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < cartan.size(); ++i) {
      Weight v = reflect(cartan, static_cast<int>(i), w);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return seen.size();
}

}  // namespace detail

inline RootSystemData build_root_system(const AlgebraLabel& label) {
  const int n = label.rank();
  detail::Realization real = detail::realize(label);

  std::vector<std::vector<int>> cartan(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Rational c = 2 * dot(real.roots[j], real.roots[k]) / dot(real.roots[k], real.roots[k]);
      if (!is_integer(c)) throw ConsistencyError("non-integral Cartan entry for " + label.name());
      cartan[j][k] = static_cast<int>(to_int64(c));
    }

  // Fundamental weights must be dual to the simple coroots.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rational p = 2 * dot(real.weights[i], real.roots[k]) / dot(real.roots[k], real.roots[k]);
      if (p != (i == k ? 1 : 0))
        throw ConsistencyError("fundamental weights of " + label.name() + " are not dual to coroots");
    }

  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = dot(real.weights[i], real.weights[j]);

  // All roots are the W-orbit of the simple roots; track alpha-coordinates
  // alongside omega-coordinates so positivity is a sign test.
  struct RootEntry {
    Weight omega;
    std::vector<int> alpha;
  };
  std::unordered_map<Weight, std::vector<int>, WeightHash> roots;
  std::deque<RootEntry> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 1;
    RootEntry entry{Weight(cartan[i]), a};
    roots.emplace(entry.omega, entry.alpha);
    queue.push_back(std::move(entry));
  }
  while (!queue.empty()) {
    RootEntry r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const int k = r.omega[i];
      if (k == 0) continue;
      RootEntry s{detail::reflect(cartan, i, r.omega), r.alpha};
      s.alpha[i] -= k;
      if (roots.emplace(s.omega, s.alpha).second) queue.push_back(std::move(s));
    }
  }

  auto squared_length = [&](const Weight& w) {
    Rational s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += w[i] * gram[i][j] * w[j];
    return s;
  };

  std::vector<PositiveRoot> positive;
  Rational max_len = 0, min_len = -1;
  for (const auto& [omega, alpha] : roots) {
    if (std::any_of(alpha.begin(), alpha.end(), [](int c) { return c < 0; })) continue;
    positive.push_back({omega, alpha, RootLength::only});
    const Rational len = squared_length(omega);
    max_len = std::max(max_len, len);
    min_len = (min_len < 0) ? len : std::min(min_len, len);
  }
  const bool two_lengths = max_len != min_len;
  if (two_lengths == label.simply_laced())
    throw ConsistencyError("unexpected root lengths for " + label.name());
  if (two_lengths)
    for (auto& r : positive)
      r.length = squared_length(r.omega) == max_len ? RootLength::long_root : RootLength::short_root;
  std::sort(positive.begin(), positive.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.alpha > b.alpha;
  });

  std::vector<RootLength> simple_lengths(n, RootLength::only);
  for (const auto& r : positive)
    if (r.height() == 1)
      for (int i = 0; i < n; ++i)
        if (r.alpha[i] == 1) simple_lengths[i] = r.length;

  // rho^L and rho^S are half-sums of the long and short positive roots.
  // Simply-laced systems put everything in rho_long.
  Weight twice_long = Weight::zero(n), twice_short = Weight::zero(n);
  for (const auto& r : positive) (r.length == RootLength::short_root ? twice_short : twice_long) += r.omega;
  Weight rho_long = Weight::zero(n), rho_short = Weight::zero(n);
  for (int i = 0; i < n; ++i) {
    if (twice_long[i] % 2 || twice_short[i] % 2)
      throw ConsistencyError("half-sum of roots is not integral for " + label.name());
    rho_long[i] = twice_long[i] / 2;
    rho_short[i] = twice_short[i] / 2;
  }
  if (rho_long + rho_short != Weight::ones(n))
    throw ConsistencyError("rho^L + rho^S != rho for " + label.name());

  const std::uint64_t order = detail::orbit_count(cartan, Weight::ones(n));
  if (order != detail::classical_weyl_order(label))
    throw ConsistencyError("Weyl group order mismatch for " + label.name());

  return RootSystemData{label,
                        real.ambient_dim,
                        std::move(real.roots),
                        std::move(real.weights),
                        std::move(cartan),
                        std::move(gram),
                        std::move(positive),
                        std::move(simple_lengths),
                        Weight::ones(n),
                        std::move(rho_long),
                        std::move(rho_short),
                        order};
}

inline Rational inner_product(const RootSystemData& rs, const Weight& a, const Weight& b) {
  rs.check(a);
  rs.check(b);
  Rational s = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rs.rank(); ++j)
      if (b[j] != 0) s += a[i] * rs.gram[i][j] * b[j];
  }
  return s;
}

inline LatticeVector to_e_basis(const RootSystemData& rs, const Weight& w) {
  rs.check(w);
  LatticeVector v(rs.ambient_dim, Rational(0));
  for (int i = 0; i < rs.rank(); ++i)
    if (w[i] != 0)
      for (int j = 0; j < rs.ambient_dim; ++j) v[j] += w[i] * rs.fundamental_weights[i][j];
  return v;
}

// Inverse of to_e_basis on the weight lattice: coordinate i is
// 2<v|alpha_i>/<alpha_i|alpha_i>. Throws when v is not an integral weight.
inline Weight from_e_basis(const RootSystemData& rs, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != rs.ambient_dim) throw DimensionError("e-basis vector length mismatch");
  Weight w = Weight::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    const Rational c = 2 * dot(v, rs.simple_roots[i]) / dot(rs.simple_roots[i], rs.simple_roots[i]);
    if (!is_integer(c)) throw PreconditionError("vector is not in the weight lattice");
    w[i] = static_cast<int>(to_int64(c));
  }
  return w;
}

}  // namespace hybridweyl
