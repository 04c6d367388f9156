#pragma once

// Dominant weight multiplicities of irreducible highest-weight modules by the
// Freudenthal recursion
//
//   m_mu * (|lambda+rho|^2 - |mu+rho|^2)
//       = 2 * sum_{alpha>0} sum_{k>=1} m_{mu+k alpha} <mu + k alpha | alpha>,
//
// evaluated over the dominant weights below lambda in order of increasing
// depth. Reducible systems split along connected components of the Dynkin
// diagram and multiply the component tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "expsum.hpp"
#include "rootsystem.hpp"
#include "weyl.hpp"

namespace hybridweyl {

struct MultiplicityTable {
  AlgebraLabel algebra;
  Weight highest;
  std::map<Weight, std::int64_t> entries;  // dominant weight -> multiplicity

  std::int64_t multiplicity(const Weight& mu) const {
    auto it = entries.find(mu);
    return it == entries.end() ? 0 : it->second;
  }
};

namespace detail {

// The Gram matrix scaled by the lcm of its denominators. Freudenthal is
// homogeneous in the inner product, so the integer version gives the same
// multiplicities.
inline std::vector<std::vector<std::int64_t>> integral_gram(const std::vector<std::vector<Rational>>& gram) {
  BigInt scale = 1;
  for (const auto& row : gram)
    for (const auto& g : row) {
      const BigInt d = boost::multiprecision::denominator(g);
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
  std::vector<std::vector<std::int64_t>> out(gram.size(), std::vector<std::int64_t>(gram.size()));
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j) out[i][j] = to_int64(Rational(gram[i][j] * scale));
  return out;
}

struct FreudenthalInput {
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<std::int64_t>> gram;
  std::vector<PositiveRoot> positive_roots;
};

inline std::int64_t pair(const std::vector<std::vector<std::int64_t>>& g, const Weight& a, const Weight& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

inline Weight dominant_weight(const std::vector<std::vector<int>>& cartan, Weight w) {
  for (;;) {
    std::size_t i = 0;
    while (i < cartan.size() && w[i] >= 0) ++i;
    if (i == cartan.size()) return w;
    w = reflect(cartan, static_cast<int>(i), w);
  }
}

inline std::map<Weight, std::int64_t> freudenthal(const FreudenthalInput& in, const Weight& highest) {
  const int n = static_cast<int>(in.cartan.size());
  if (n == 0) return {{highest, 1}};

  // Dominant support: every dominant weight below lambda is reachable from
  // lambda through dominant weights by subtracting single positive roots.
  std::unordered_map<Weight, int, WeightHash> depth{{highest, 0}};
  std::vector<Weight> order{highest};
  for (std::size_t cur = 0; cur < order.size(); ++cur) {
    const Weight mu = order[cur];
    const int d = depth[mu];
    for (const auto& root : in.positive_roots) {
      Weight nu = mu - root.omega;
      if (nu.is_dominant() && !depth.count(nu)) {
        depth.emplace(nu, d + root.height());
        order.push_back(std::move(nu));
      }
    }
  }
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    const int da = depth.at(a), db = depth.at(b);
    return da != db ? da < db : a > b;
  });

  const Weight rho = Weight::ones(n);
  const std::int64_t top = pair(in.gram, highest + rho, highest + rho);
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  std::unordered_map<Weight, Weight, WeightHash> dominant_memo;
  auto dominant_of = [&](const Weight& w) -> const Weight& {
    auto it = dominant_memo.find(w);
    if (it == dominant_memo.end()) it = dominant_memo.emplace(w, dominant_weight(in.cartan, w)).first;
    return it->second;
  };

  mult.emplace(highest, 1);
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& mu = order[idx];
    const std::int64_t denom = top - pair(in.gram, mu + rho, mu + rho);
    if (denom <= 0)
      throw ConsistencyError("Freudenthal denominator is not positive at " + mu.str());
    std::int64_t sum = 0;
    for (const auto& root : in.positive_roots) {
      Weight w = mu;
      for (;;) {
        w += root.omega;
        auto it = mult.find(dominant_of(w));
        if (it == mult.end()) break;  // alpha-strings are unbroken
        sum += it->second * pair(in.gram, w, root.omega);
      }
    }
    if ((2 * sum) % denom != 0)
      throw ConsistencyError("Freudenthal quotient is not integral at " + mu.str());
    const std::int64_t m = 2 * sum / denom;
    if (m <= 0) throw ConsistencyError("non-positive multiplicity at " + mu.str());
    mult.emplace(mu, m);
  }
  return {mult.begin(), mult.end()};
}

// Connected components of the Dynkin diagram, each a sorted index list.
inline std::vector<std::vector<int>> dynkin_components(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && (cartan[members[k]][j] != 0 || cartan[j][members[k]] != 0)) {
          comp[j] = comp[s];
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline Weight restrict(const Weight& w, const std::vector<int>& idx) {
  std::vector<int> c;
  c.reserve(idx.size());
  for (int i : idx) c.push_back(w[i]);
  return Weight(std::move(c));
}

}  // namespace detail

inline MultiplicityTable dominant_multiplicities(const RootSystemData& rs, const Weight& highest) {
  rs.check(highest);
  if (!highest.is_dominant())
    throw PreconditionError("highest weight " + highest.str() + " is not dominant");

  const auto gram = detail::integral_gram(rs.gram);
  const auto components = detail::dynkin_components(rs.cartan);

  // Component tables, each in component-local coordinates.
  std::vector<std::map<Weight, std::int64_t>> parts;
  for (const auto& idx : components) {
    detail::FreudenthalInput in;
    for (int i : idx) {
      std::vector<int> crow;
      std::vector<std::int64_t> grow;
      for (int j : idx) {
        crow.push_back(rs.cartan[i][j]);
        grow.push_back(gram[i][j]);
      }
      in.cartan.push_back(std::move(crow));
      in.gram.push_back(std::move(grow));
    }
    for (const auto& root : rs.positive_roots) {
      bool inside = true;
      for (int j = 0; j < rs.rank(); ++j)
        if (root.alpha[j] != 0 && !std::binary_search(idx.begin(), idx.end(), j)) inside = false;
      if (!inside) continue;
      PositiveRoot local{detail::restrict(root.omega, idx), {}, root.length};
      for (int j : idx) local.alpha.push_back(root.alpha[j]);
      in.positive_roots.push_back(std::move(local));
    }
    parts.push_back(detail::freudenthal(in, detail::restrict(highest, idx)));
  }

  // Product over components.
  std::map<Weight, std::int64_t> entries{{Weight::zero(rs.rank()), 1}};
  for (std::size_t c = 0; c < components.size(); ++c) {
    std::map<Weight, std::int64_t> next;
    for (const auto& [partial, m] : entries)
      for (const auto& [local, mc] : parts[c]) {
        Weight w = partial;
        for (std::size_t k = 0; k < components[c].size(); ++k) w[components[c][k]] = local[k];
        next.emplace(std::move(w), m * mc);
      }
    entries = std::move(next);
  }
  return {rs.label, highest, std::move(entries)};
}

// prod_{alpha>0} <lambda+rho|alpha> / <rho|alpha>, exactly.
inline std::int64_t weyl_dimension(const RootSystemData& rs, const Weight& highest) {
  rs.check(highest);
  if (!highest.is_dominant())
    throw PreconditionError("highest weight " + highest.str() + " is not dominant");
  Rational dim = 1;
  const Weight shifted = highest + rs.rho;
  for (const auto& root : rs.positive_roots)
    dim *= inner_product(rs, shifted, root.omega) / inner_product(rs, rs.rho, root.omega);
  return to_int64(dim);
}

// The table's C-function combination sum_mu m_mu C_mu.
inline ExpSum character_sum(const RootSystemData& rs, const std::map<Weight, std::int64_t>& coefficients) {
  ExpSum f(rs.label);
  for (const auto& [mu, m] : coefficients) {
    const OrbitSet orbit = signed_orbit(rs, mu);
    for (const auto& e : orbit.elements()) f.add(e.weight, m);
  }
  return f;
}

// Checks S_rho * sum_mu m_mu C_mu == S_{rho+lambda} exactly. Multiplication
// by S_rho is injective on Z[P], so equality certifies the whole table.
inline bool certify_table(const RootSystemData& rs, const MultiplicityTable& table, std::ostream* log = nullptr) {
  const ExpSum lhs = multiply(s_function(rs, Kind::plain, rs.rho), character_sum(rs, table.entries));
  const ExpSum rhs = s_function(rs, Kind::plain, table.highest + rs.rho);
  if (lhs == rhs) return true;
  if (log) {
    const Weight at = *first_difference(lhs, rhs);
    *log << "certificate mismatch for " << rs.label.name() << " highest " << table.highest.str() << " at "
         << at.str() << ": product " << lhs.coefficient(at) << ", expected " << rhs.coefficient(at) << "\n";
  }
  return false;
}

// Write-once memo of multiplicity tables keyed by (algebra, highest weight).
// Concurrent computations of one key may race; the first insert wins and
// later ones are discarded, which is harmless since both are identical.
class MultiplicityCache {
 public:
  using Key = std::pair<std::string, Weight>;

  std::shared_ptr<const MultiplicityTable> get(const RootSystemData& rs, const Weight& highest) {
    Key key{rs.label.name(), highest};
    {
      std::lock_guard lock(mutex_);
      if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const MultiplicityTable>(dominant_multiplicities(rs, highest));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = tables_.emplace(std::move(key), std::move(table));
    if (inserted) dirty_ = true;
    return it->second;
  }

  void insert(MultiplicityTable table) {
    Key key{table.algebra.name(), table.highest};
    std::lock_guard lock(mutex_);
    tables_.emplace(std::move(key), std::make_shared<const MultiplicityTable>(std::move(table)));
  }

  std::vector<std::shared_ptr<const MultiplicityTable>> snapshot() const {
    std::lock_guard lock(mutex_);
    std::vector<std::shared_ptr<const MultiplicityTable>> out;
    for (const auto& [k, t] : tables_) out.push_back(t);
    return out;
  }

  // True once a table was computed rather than loaded.
  bool dirty() const {
    std::lock_guard lock(mutex_);
    return dirty_;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return tables_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, std::shared_ptr<const MultiplicityTable>> tables_;
  bool dirty_ = false;
};

}  // namespace hybridweyl
