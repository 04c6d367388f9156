#pragma once

// Long- and short-root subsystems of B_n, C_n, F_4, G_2 with the simple bases
//
//   parent  long subsystem                 short subsystem
//   B_n     D_n  {e1-e2,...,e_{n-1}+e_n}   nA1  {e1,...,en}
//   C_n     nA1  {2e1,...,2en}             D_n  {e1-e2,...,e_{n-1}+e_n}
//   F_4     D_4  {e1-e2,e2-e3,e3-e4,e3+e4} D_4  {e2,(e1-e2-e3-e4)/2,e3,e4}
//   G_2     A_2  {e1-e2,e2-e3}             A_2  {(2e1-e2-e3)/3,(-e1+2e2-e3)/3}
//
// The transversal group for the long subsystem is generated by the short
// simple reflections of the parent and vice versa. Each generator permutes
// the subsystem base, so it acts on subsystem coordinates by permutation.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "rootsystem.hpp"
#include "weyl.hpp"

namespace hybridweyl {

struct SubsystemEmbedding {
  AlgebraLabel parent;
  Kind kind;
  AlgebraLabel sub_label;
  std::vector<LatticeVector> base;
  // convert[i][j] = 2<omega_j|beta_i>/<beta_i|beta_i>: parent omega-coordinates
  // to subsystem omega'-coordinates.
  std::vector<std::vector<Rational>> convert;
  std::vector<std::vector<Rational>> convert_inverse;
  std::vector<int> transversal_generators;  // 0-based parent simple-root indices
  // generator_permutations[g][j] is the index of the image of base[j].
  std::vector<std::vector<int>> generator_permutations;

  Weight apply(const Weight& lambda) const {
    if (lambda.rank() != parent.rank()) throw DimensionError("weight rank mismatch in subsystem conversion");
    Weight out = Weight::zero(sub_label.rank());
    for (int i = 0; i < sub_label.rank(); ++i) {
      Rational s = 0;
      for (int j = 0; j < parent.rank(); ++j) s += convert[i][j] * lambda[j];
      out[i] = static_cast<int>(to_int64(s));
    }
    return out;
  }

  // The parent weight mapping to sub, if it is integral.
  std::optional<Weight> preimage(const Weight& sub) const {
    Weight out = Weight::zero(parent.rank());
    for (int i = 0; i < parent.rank(); ++i) {
      Rational s = 0;
      for (int j = 0; j < sub_label.rank(); ++j) s += convert_inverse[i][j] * sub[j];
      if (!is_integer(s)) return std::nullopt;
      out[i] = static_cast<int>(to_int64(s));
    }
    return out;
  }

  // Action of generator g on subsystem coordinates.
  Weight permute(std::size_t g, const Weight& sub) const {
    Weight out = Weight::zero(sub.rank());
    for (int j = 0; j < sub.rank(); ++j) out[generator_permutations[g][j]] = sub[j];
    return out;
  }
};

namespace detail {

inline LatticeVector reflect_vector(const LatticeVector& x, const LatticeVector& root) {
  const Rational k = 2 * dot(x, root) / dot(root, root);
  LatticeVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * root[i];
  return out;
}

inline std::vector<LatticeVector> subsystem_base(const AlgebraLabel& parent, Kind kind) {
  const int n = parent.rank();
  auto e = [&](int dim, int i, Rational v = 1) {
    LatticeVector x(dim, Rational(0));
    x[i] = v;
    return x;
  };
  auto d_base = [&] {
    std::vector<LatticeVector> b;
    for (int i = 0; i + 1 < n; ++i) {
      LatticeVector x(n, Rational(0));
      x[i] = 1;
      x[i + 1] = -1;
      b.push_back(x);
    }
    LatticeVector last(n, Rational(0));
    last[n - 2] = 1;
    last[n - 1] = 1;
    b.push_back(last);
    return b;
  };
  auto a1_base = [&](Rational scale) {
    std::vector<LatticeVector> b;
    for (int i = 0; i < n; ++i) b.push_back(e(n, i, scale));
    return b;
  };
  const bool is_long = kind == Kind::long_roots;
  const Rational h(1, 2), t(1, 3);
  switch (parent.family()) {
    case Family::B: return is_long ? d_base() : a1_base(1);
    case Family::C: return is_long ? a1_base(2) : d_base();
    case Family::F:
      if (is_long)
        return {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
      return {{0, 1, 0, 0}, {h, -h, -h, -h}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    case Family::G:
      if (is_long) return {{1, -1, 0}, {0, 1, -1}};
      return {{2 * t, -t, -t}, {-t, 2 * t, -t}};
    default:
      throw ConstructionError("no long/short subsystem for " + parent.name());
  }
}

inline AlgebraLabel subsystem_label(const AlgebraLabel& parent, Kind kind) {
  const int n = parent.rank();
  const bool is_long = kind == Kind::long_roots;
  switch (parent.family()) {
    case Family::B: return is_long ? AlgebraLabel(Family::D, n) : AlgebraLabel(Family::nA1, n);
    case Family::C: return is_long ? AlgebraLabel(Family::nA1, n) : AlgebraLabel(Family::D, n);
    case Family::F: return AlgebraLabel(Family::D, 4);
    case Family::G: return AlgebraLabel(Family::A, 2);
    default: throw ConstructionError("no long/short subsystem for " + parent.name());
  }
}

}  // namespace detail

inline SubsystemEmbedding build_embedding(const RootSystemData& parent, Kind kind) {
  if (kind == Kind::plain) throw ConstructionError("embedding kind must be long or short");
  const AlgebraLabel sub_label = detail::subsystem_label(parent.label, kind);
  std::vector<LatticeVector> base = detail::subsystem_base(parent.label, kind);
  const int n = parent.rank();

  // The base must have the Cartan matrix of the named subsystem.
  const RootSystemData sub = build_root_system(sub_label);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (2 * dot(base[j], base[k]) / dot(base[k], base[k]) != sub.cartan[j][k])
        throw ConsistencyError("subsystem base of " + parent.label.name() + " does not match " + sub_label.name());

  std::vector<std::vector<Rational>> convert(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      convert[i][j] = 2 * dot(parent.fundamental_weights[j], base[i]) / dot(base[i], base[i]);

  // The transversal group is generated by simple reflections of the other length.
  const RootLength wanted = kind == Kind::long_roots ? RootLength::short_root : RootLength::long_root;
  std::vector<int> generators;
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < n; ++i) {
    if (parent.simple_lengths[i] != wanted) continue;
    std::vector<int> perm(n, -1);
    for (int j = 0; j < n; ++j) {
      const LatticeVector image = detail::reflect_vector(base[j], parent.simple_roots[i]);
      for (int k = 0; k < n; ++k)
        if (image == base[k]) perm[j] = k;
      if (perm[j] < 0)
        throw ConsistencyError("reflection " + std::to_string(i + 1) + " of " + parent.label.name() +
                               " does not permute the subsystem base");
    }
    generators.push_back(i);
    perms.push_back(std::move(perm));
  }

  auto inverse = invert(convert);
  return {parent.label, kind,   sub_label,          std::move(base), std::move(convert),
          std::move(inverse),   std::move(generators), std::move(perms)};
}

inline SubsystemEmbedding build_embedding(const AlgebraLabel& parent, Kind kind) {
  return build_embedding(build_root_system(parent), kind);
}

// {convert(phi.lambda) : phi in the transversal group}, as a sorted set.
inline std::vector<Weight> transversal_orbit(const SubsystemEmbedding& emb, const Weight& lambda) {
  if (lambda.rank() != emb.parent.rank()) throw DimensionError("weight rank mismatch in transversal orbit");
  if (!lambda.is_dominant()) throw PreconditionError("weight " + lambda.str() + " is not dominant");
  std::set<Weight> seen{emb.apply(lambda)};
  std::vector<Weight> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (std::size_t g = 0; g < emb.transversal_generators.size(); ++g) {
        Weight v = emb.permute(g, w);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace hybridweyl
