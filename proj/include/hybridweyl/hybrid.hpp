#pragma once

// Expansions of the character chi_lambda and of the hybrid characters
//
//   chi^L_lambda = S^L_{rho^L+lambda} / S^L_{rho^L},
//   chi^S_lambda = S^S_{rho^S+lambda} / S^S_{rho^S},
//
// in the basis of C-functions. The hybrid coefficients are sums of
// subsystem multiplicities over the transversal orbit of lambda:
//
//   p^lambda_nu = sum_{mu in G_S.lambda} m^mu_nu(Phi_L),
//   q^lambda_nu = sum_{mu in G_L.lambda} m^mu_nu(Phi_S).

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "errors.hpp"
#include "expsum.hpp"
#include "multiplicity.hpp"
#include "rootsystem.hpp"
#include "subsystem.hpp"
#include "weyl.hpp"

namespace hybridweyl {

struct HybridExpansion {
  AlgebraLabel algebra;
  Weight highest;
  Kind kind;
  std::map<Weight, std::int64_t> coefficients;  // g-dominant weight -> p, q or m

  std::int64_t coefficient(const Weight& nu) const {
    auto it = coefficients.find(nu);
    return it == coefficients.end() ? 0 : it->second;
  }
};

namespace detail {

inline std::shared_ptr<const MultiplicityTable> table_for(const RootSystemData& rs, const Weight& highest,
                                                          MultiplicityCache* cache) {
  if (cache) return cache->get(rs, highest);
  return std::make_shared<const MultiplicityTable>(dominant_multiplicities(rs, highest));
}

}  // namespace detail

inline HybridExpansion character_expansion(const RootSystemData& rs, const Weight& highest,
                                           MultiplicityCache* cache = nullptr) {
  auto table = detail::table_for(rs, highest, cache);
  return {rs.label, highest, Kind::plain, table->entries};
}

inline HybridExpansion hybrid_expansion(const RootSystemData& rs, Kind kind, const Weight& highest,
                                        MultiplicityCache* cache = nullptr) {
  rs.check(highest);
  if (!highest.is_dominant()) throw PreconditionError("highest weight " + highest.str() + " is not dominant");
  if (kind == Kind::plain) return character_expansion(rs, highest, cache);

  const SubsystemEmbedding emb = build_embedding(rs, kind);
  const RootSystemData sub = build_root_system(emb.sub_label);
  HybridExpansion out{rs.label, highest, kind, {}};
  for (const Weight& mu : transversal_orbit(emb, highest)) {
    auto table = detail::table_for(sub, mu, cache);
    // Only subsystem weights that are images of g-dominant weights index a
    // C-function of g; the rest are other chamber representatives of the
    // same W(g)-orbits.
    for (const auto& [nu_sub, m] : table->entries) {
      auto nu = emb.preimage(nu_sub);
      if (nu && nu->is_dominant()) out.coefficients[*nu] += m;
    }
  }
  return out;
}

struct Verification {
  bool ok = true;
  std::optional<Weight> first_mismatch;
  std::int64_t product_coefficient = 0;
  std::int64_t expected_coefficient = 0;

  explicit operator bool() const { return ok; }
};

// Multiplies the C-function combination by S^kind_{rho^kind} and compares it
// with S^kind_{rho^kind+lambda} term by term.
inline Verification verify_expansion(const RootSystemData& rs, const HybridExpansion& exp) {
  if (!(exp.algebra == rs.label)) throw DimensionError("expansion does not belong to " + rs.label.name());
  const Weight& rho = rho_of(rs, exp.kind);
  const ExpSum product = multiply(s_function(rs, exp.kind, rho), character_sum(rs, exp.coefficients));
  const ExpSum expected = s_function(rs, exp.kind, rho + exp.highest);
  Verification v;
  if (auto at = first_difference(product, expected)) {
    v.ok = false;
    v.first_mismatch = at;
    v.product_coefficient = product.coefficient(*at);
    v.expected_coefficient = expected.coefficient(*at);
  }
  return v;
}

// sum_nu coeff_nu * |W.nu|, the value of the expansion at x = 0.
inline std::int64_t expansion_dimension(const RootSystemData& rs, const HybridExpansion& exp) {
  std::int64_t total = 0;
  for (const auto& [nu, c] : exp.coefficients) total += c * static_cast<std::int64_t>(orbit_size(rs, nu));
  return total;
}

// chi^kind_lambda(0), computed as |G.lambda| * dim L_lambda(Phi_sub) and as
// |G.lambda| * prod over positive long (short) roots of
// <lambda+rho^kind|alpha>/<rho^kind|alpha>. The two must agree.
inline std::int64_t hybrid_dimension(const RootSystemData& rs, Kind kind, const Weight& highest) {
  rs.check(highest);
  if (!highest.is_dominant()) throw PreconditionError("highest weight " + highest.str() + " is not dominant");
  if (kind == Kind::plain) return weyl_dimension(rs, highest);

  const SubsystemEmbedding emb = build_embedding(rs, kind);
  const RootSystemData sub = build_root_system(emb.sub_label);
  const auto orbit = static_cast<std::int64_t>(transversal_orbit(emb, highest).size());
  const std::int64_t via_subsystem = orbit * weyl_dimension(sub, emb.apply(highest));

  const RootLength wanted = kind == Kind::long_roots ? RootLength::long_root : RootLength::short_root;
  const Weight& rho = rho_of(rs, kind);
  Rational product = 1;
  for (const auto& root : rs.positive_roots)
    if (root.length == wanted)
      product *= inner_product(rs, highest + rho, root.omega) / inner_product(rs, rho, root.omega);
  const std::int64_t via_roots = orbit * to_int64(product);

  if (via_subsystem != via_roots)
    throw ConsistencyError("hybrid dimension forms disagree for " + rs.label.name() + " " + highest.str() + ": " +
                           std::to_string(via_subsystem) + " vs " + std::to_string(via_roots));
  return via_subsystem;
}

inline std::complex<double> evaluate_expansion(const RootSystemData& rs, const HybridExpansion& exp,
                                               const EvaluationPoint& x) {
  return evaluate(rs, character_sum(rs, exp.coefficients), x);
}

// Ratio form S^kind_{rho^kind+lambda}(x) / S^kind_{rho^kind}(x).
inline std::complex<double> evaluate_hybrid(const RootSystemData& rs, Kind kind, const Weight& highest,
                                            const EvaluationPoint& x) {
  rs.check(highest);
  if (!highest.is_dominant()) throw PreconditionError("highest weight " + highest.str() + " is not dominant");
  const Weight& rho = rho_of(rs, kind);
  const std::complex<double> den = evaluate(rs, s_function(rs, kind, rho), x);
  if (std::abs(den) < 1e-12)
    throw SingularPointError("denominator S-function vanishes at the evaluation point");
  return evaluate(rs, s_function(rs, kind, rho + highest), x) / den;
}

// Memo of expansions per (algebra, kind, lambda), sharing one multiplicity cache.
class ExpansionCache {
 public:
  explicit ExpansionCache(MultiplicityCache& tables) : tables_(tables) {}

  std::shared_ptr<const HybridExpansion> get(const RootSystemData& rs, Kind kind, const Weight& highest) {
    Key key{rs.label.name(), kind, highest};
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto exp = std::make_shared<const HybridExpansion>(hybrid_expansion(rs, kind, highest, &tables_));
    std::lock_guard lock(mutex_);
    return memo_.emplace(std::move(key), std::move(exp)).first->second;
  }

  MultiplicityCache& tables() { return tables_; }

 private:
  using Key = std::tuple<std::string, Kind, Weight>;
  MultiplicityCache& tables_;
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const HybridExpansion>> memo_;
};

}  // namespace hybridweyl
