#pragma once

// Finitely supported integer functions on the weight lattice, i.e. elements
// of the group algebra Z[P]. A term {mu -> c} stands for c * e^{2 pi i <mu|x>}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rootsystem.hpp"
#include "weyl.hpp"

namespace hybridweyl {

class ExpSum {
 public:
  using Terms = std::unordered_map<Weight, std::int64_t, WeightHash>;

  explicit ExpSum(AlgebraLabel algebra) : algebra_(algebra) {}
  ExpSum(AlgebraLabel algebra, const Terms& terms) : algebra_(algebra) {
    for (const auto& [w, c] : terms) add(w, c);
  }

  const AlgebraLabel& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  std::int64_t coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t coefficient_sum() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  void add(const Weight& w, std::int64_t c) {
    if (w.rank() != algebra_.rank())
      throw DimensionError("term " + w.str() + " does not belong to " + algebra_.name());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  ExpSum& add_scaled(const ExpSum& other, std::int64_t k) {
    check_same_algebra(other);
    for (const auto& [w, c] : other.terms_) add(w, k * c);
    return *this;
  }
  ExpSum& operator+=(const ExpSum& other) { return add_scaled(other, 1); }
  ExpSum& operator-=(const ExpSum& other) { return add_scaled(other, -1); }

  // Terms ordered lexicographically by weight, descending.
  std::vector<std::pair<Weight, std::int64_t>> sorted_terms() const {
    std::vector<std::pair<Weight, std::int64_t>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
  }

  void check_same_algebra(const ExpSum& other) const {
    if (!(other.algebra_ == algebra_))
      throw DimensionError("group-algebra elements of " + algebra_.name() + " and " +
                           other.algebra_.name() + " cannot be combined");
  }

  friend bool operator==(const ExpSum& a, const ExpSum& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

 private:
  AlgebraLabel algebra_;
  Terms terms_;
};

// The first weight (in descending order) where two elements differ.
inline std::optional<Weight> first_difference(const ExpSum& a, const ExpSum& b) {
  ExpSum diff = a;
  diff -= b;
  if (diff.empty()) return std::nullopt;
  return diff.sorted_terms().front().first;
}

inline ExpSum c_function(const RootSystemData& rs, const Weight& lambda) {
  rs.check(lambda);
  if (!lambda.is_dominant()) throw PreconditionError("C-function index " + lambda.str() + " is not dominant");
  ExpSum f(rs.label);
  const OrbitSet orbit = signed_orbit(rs, lambda);
  for (const auto& e : orbit.elements()) f.add(e.weight, 1);
  return f;
}

// Sign-weighted orbit sum. Kind plain gives S_seed, long gives S^L_seed,
// short gives S^S_seed.
inline ExpSum s_function(const RootSystemData& rs, Kind kind, const Weight& seed) {
  rs.check(seed);
  if (!seed.is_dominant()) throw PreconditionError("S-function seed " + seed.str() + " is not dominant");
  const OrbitSet orbit = signed_orbit(rs, seed);
  if (!orbit.well_defined(kind))
    throw DegeneracyError(to_string(kind) + " sign is not well defined on the orbit of seed " + seed.str() +
                          " in " + rs.label.name());
  ExpSum f(rs.label);
  for (const auto& e : orbit.elements()) f.add(e.weight, e.signs.of(kind));
  return f;
}

inline ExpSum multiply(const ExpSum& a, const ExpSum& b) {
  a.check_same_algebra(b);
  const ExpSum& outer = a.size() <= b.size() ? a : b;
  const ExpSum& inner = a.size() <= b.size() ? b : a;
  ExpSum::Terms acc;
  acc.reserve(outer.size() * inner.size());
  for (const auto& [u, cu] : outer.terms())
    for (const auto& [v, cv] : inner.terms()) acc[u + v] += cu * cv;
  return ExpSum(a.algebra(), acc);
}

// A point of the maximal torus, given in the e-basis of the ambient space
// (ambient_dim coordinates, which exceeds the rank for A_n and G_2).
struct EvaluationPoint {
  std::vector<Rational> coords;
};

// Each <mu|x> is formed exactly and reduced mod 1 before the exponential.
inline std::complex<double> evaluate(const RootSystemData& rs, const ExpSum& f, const EvaluationPoint& x) {
  if (static_cast<int>(x.coords.size()) != rs.ambient_dim)
    throw DimensionError("evaluation point has " + std::to_string(x.coords.size()) + " coordinates, " +
                         rs.label.name() + " needs " + std::to_string(rs.ambient_dim));
  std::vector<Rational> pairing(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) pairing[i] = dot(rs.fundamental_weights[i], x.coords);

  std::complex<double> sum = 0;
  for (const auto& [mu, c] : f.terms()) {
    Rational phase = 0;
    for (int i = 0; i < rs.rank(); ++i)
      if (mu[i] != 0) phase += mu[i] * pairing[i];
    const BigInt num = boost::multiprecision::numerator(phase);
    const BigInt den = boost::multiprecision::denominator(phase);
    BigInt rem = num % den;
    if (rem < 0) rem += den;
    const double angle = 2 * std::numbers::pi * (static_cast<double>(rem) / static_cast<double>(den));
    sum += static_cast<double>(c) * std::polar(1.0, angle);
  }
  return sum;
}

}  // namespace hybridweyl
