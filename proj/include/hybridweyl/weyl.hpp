#pragma once

// Simple reflections, orbits, and the three sign homomorphisms of the Weyl
// group: the determinant sign and its long/short factors. sign_long is -1
// exactly on reflections in long roots, sign_short on reflections in short
// roots. For simply-laced systems sign_long coincides with the determinant
// and sign_short is trivial.

#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "rootsystem.hpp"

namespace hybridweyl {

enum class Kind { plain, long_roots, short_roots };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::plain: return "plain";
    case Kind::long_roots: return "long";
    case Kind::short_roots: return "short";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  if (s == "plain") return Kind::plain;
  if (s == "long") return Kind::long_roots;
  if (s == "short") return Kind::short_roots;
  throw PreconditionError("unknown kind '" + std::string(s) + "' (expected plain, long or short)");
}

struct SignTriple {
  int sign = 1;
  int sign_long = 1;
  int sign_short = 1;

  int of(Kind k) const {
    switch (k) {
      case Kind::plain: return sign;
      case Kind::long_roots: return sign_long;
      case Kind::short_roots: return sign_short;
    }
    return 0;
  }

  friend SignTriple operator*(const SignTriple& a, const SignTriple& b) {
    return {a.sign * b.sign, a.sign_long * b.sign_long, a.sign_short * b.sign_short};
  }
  friend bool operator==(const SignTriple&, const SignTriple&) = default;
};

// rho, rho^L or rho^S depending on the kind.
inline const Weight& rho_of(const RootSystemData& rs, Kind k) {
  switch (k) {
    case Kind::plain: return rs.rho;
    case Kind::long_roots: return rs.rho_long;
    case Kind::short_roots: return rs.rho_short;
  }
  return rs.rho;
}

inline void check_index(const RootSystemData& rs, int i) {
  if (i < 0 || i >= rs.rank())
    throw PreconditionError("simple root index " + std::to_string(i) + " out of range for " +
                            rs.label.name());
}

// r_i(w) = w - w_i * alpha_i in omega-coordinates.
inline Weight reflect_simple(const RootSystemData& rs, int i, const Weight& w) {
  check_index(rs, i);
  rs.check(w);
  return detail::reflect(rs.cartan, i, w);
}

inline SignTriple sign_of_simple(const RootSystemData& rs, int i) {
  check_index(rs, i);
  const bool is_short = rs.simple_lengths[i] == RootLength::short_root;
  return {-1, is_short ? 1 : -1, is_short ? -1 : 1};
}

struct DominantResult {
  Weight weight;
  SignTriple signs;
};

// Repeatedly reflects in the smallest index with a negative coordinate.
inline DominantResult dominant_representative(const RootSystemData& rs, Weight w) {
  rs.check(w);
  SignTriple s;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && w[i] >= 0) ++i;
    if (i == rs.rank()) return {std::move(w), s};
    w = detail::reflect(rs.cartan, i, w);
    s = s * sign_of_simple(rs, i);
  }
}

struct SignedWeight {
  Weight weight;
  SignTriple signs;
};

class OrbitSet;
inline OrbitSet signed_orbit(const RootSystemData& rs, const Weight& seed);

class OrbitSet {
 public:
  const Weight& seed() const { return seed_; }
  const std::vector<SignedWeight>& elements() const& { return elements_; }
  // Safe in range-for over a temporary orbit.
  std::vector<SignedWeight> elements() && { return std::move(elements_); }
  std::size_t size() const { return elements_.size(); }
  std::uint64_t stabilizer_order() const { return stabilizer_order_; }

  // Whether the given sign map is constant on each fibre of W -> W.seed,
  // i.e. the stabilizer of the seed lies in its kernel.
  bool well_defined(Kind k) const { return well_defined_[static_cast<int>(k)]; }

  const SignedWeight* find(const Weight& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? nullptr : &elements_[it->second];
  }

 private:
  friend OrbitSet signed_orbit(const RootSystemData&, const Weight&);

  Weight seed_;
  std::vector<SignedWeight> elements_;
  std::unordered_map<Weight, std::size_t, WeightHash> index_;
  std::uint64_t stabilizer_order_ = 1;
  std::array<bool, 3> well_defined_{true, true, true};
};

// Breadth-first closure of a dominant seed under simple reflections. Every
// edge of the orbit graph is checked against the signs already assigned, so
// a contradiction on any cycle marks that sign map as ill defined.
inline OrbitSet signed_orbit(const RootSystemData& rs, const Weight& seed) {
  rs.check(seed);
  if (!seed.is_dominant()) throw PreconditionError("orbit seed " + seed.str() + " is not dominant");
  OrbitSet orbit;
  orbit.seed_ = seed;
  orbit.elements_.push_back({seed, SignTriple{}});
  orbit.index_.emplace(seed, 0);
  for (std::size_t cur = 0; cur < orbit.elements_.size(); ++cur) {
    for (int i = 0; i < rs.rank(); ++i) {
      const SignTriple s = orbit.elements_[cur].signs * sign_of_simple(rs, i);
      Weight w = detail::reflect(rs.cartan, i, orbit.elements_[cur].weight);
      auto [it, inserted] = orbit.index_.emplace(w, orbit.elements_.size());
      if (inserted) {
        orbit.elements_.push_back({std::move(w), s});
        continue;
      }
      const SignTriple& known = orbit.elements_[it->second].signs;
      if (known.sign != s.sign) orbit.well_defined_[0] = false;
      if (known.sign_long != s.sign_long) orbit.well_defined_[1] = false;
      if (known.sign_short != s.sign_short) orbit.well_defined_[2] = false;
    }
  }
  if (rs.weyl_order % orbit.elements_.size() != 0)
    throw ConsistencyError("orbit size does not divide |W| for " + rs.label.name());
  orbit.stabilizer_order_ = rs.weyl_order / orbit.elements_.size();
  return orbit;
}

// |W| as the orbit size of rho, cross-checked against the classical order
// when the root system is built.
inline std::uint64_t weyl_group_order(const RootSystemData& rs) { return rs.weyl_order; }

inline std::size_t orbit_size(const RootSystemData& rs, const Weight& w) {
  return detail::orbit_count(rs.cartan, dominant_representative(rs, w).weight);
}

}  // namespace hybridweyl
