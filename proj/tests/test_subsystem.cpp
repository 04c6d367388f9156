#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracles.hpp"

using namespace hybridweyl;

namespace {

using Table = std::function<std::vector<int>(const std::vector<int>&)>;

std::vector<int> b_long(const std::vector<int>& N) {
  const int n = static_cast<int>(N.size());
  std::vector<int> out(N.begin(), N.end() - 1);
  out.push_back(N[n - 2] + N[n - 1]);
  return out;
}

std::vector<int> b_short(const std::vector<int>& N) {
  const int n = static_cast<int>(N.size());
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    int s = N[n - 1];
    for (int j = i; j < n - 1; ++j) s += 2 * N[j];
    out.push_back(s);
  }
  return out;
}

std::vector<int> c_long(const std::vector<int>& N) {
  std::vector<int> out;
  for (std::size_t i = 0; i < N.size(); ++i) {
    int s = 0;
    for (std::size_t j = i; j < N.size(); ++j) s += N[j];
    out.push_back(s);
  }
  return out;
}

std::vector<int> c_short_printed(const std::vector<int>& N) { return b_long(N); }

std::vector<int> c_short_derived(const std::vector<int>& N) {
  std::vector<int> out = b_long(N);
  out.back() += N.back();
  return out;
}

std::vector<int> f4_long(const std::vector<int>& N) { return {N[1] + N[2] + N[3], N[0], N[1], N[1] + N[2]}; }
std::vector<int> f4_short(const std::vector<int>& N) {
  return {2 * N[0] + 2 * N[1] + N[2], N[3], 2 * N[1] + N[2], N[2]};
}
std::vector<int> g2_long(const std::vector<int>& N) { return {N[0], N[0] + N[1]}; }
std::vector<int> g2_short(const std::vector<int>& N) { return {3 * N[0] + N[1], N[1]}; }

void expect_table(const std::string& name, Kind kind, const Table& table) {
  const auto emb = build_embedding(AlgebraLabel::parse(name), kind);
  const int n = emb.parent.rank();
  for (const Weight& l : oracle::box(n, 3)) EXPECT_EQ(emb.apply(l).coords(), table(l.coords())) << name << l.str();
}

std::size_t group_order(const std::vector<std::vector<int>>& gens, int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> todo{id};
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen.size();
}

const std::vector<std::string> kParents = {"B2", "B3", "B4", "C2", "C3", "C4", "F4", "G2"};

}  // namespace

TEST(Convert, TableOneLong) {
  for (const std::string name : {"B2", "B3", "B4"}) expect_table(name, Kind::long_roots, b_long);
  for (const std::string name : {"C2", "C3", "C4"}) expect_table(name, Kind::long_roots, c_long);
  expect_table("F4", Kind::long_roots, f4_long);
  expect_table("G2", Kind::long_roots, g2_long);
}

TEST(Convert, TableTwoShort) {
  for (const std::string name : {"B2", "B3", "B4"}) expect_table(name, Kind::short_roots, b_short);
  expect_table("F4", Kind::short_roots, f4_short);
  expect_table("G2", Kind::short_roots, g2_short);
}

// The printed C_n short row has last coordinate N_{n-1}+N_n. Pairing
// against e_{n-1}+e_n gives N_{n-1}+2N_n, and only the latter is
// consistent with the short-root dimension formula: for C_2 and omega_2 the
// printed row would give convert = (0,1), a D_2 = A1+A1 module of dimension
// 2, so chi^S(0) would be 2*2 = 4, while the short-root product gives 6.
TEST(Convert, CnShortRowDiffersFromPrintedTable) {
  for (const std::string name : {"C2", "C3", "C4"}) expect_table(name, Kind::short_roots, c_short_derived);
  const auto emb = build_embedding(AlgebraLabel::parse("C2"), Kind::short_roots);
  EXPECT_NE(emb.apply(Weight({0, 1})).coords(), c_short_printed({0, 1}));
  EXPECT_EQ(emb.apply(Weight({0, 1})), Weight({0, 2}));
  EXPECT_EQ(hybrid_dimension(build_root_system(AlgebraLabel::parse("C2")), Kind::short_roots, Weight({0, 1})), 6);
}

TEST(Embedding, SubsystemLabels) {
  EXPECT_EQ(build_embedding(AlgebraLabel::parse("B3"), Kind::long_roots).sub_label.name(), "D3");
  EXPECT_EQ(build_embedding(AlgebraLabel::parse("B3"), Kind::short_roots).sub_label.name(), "3A1");
  EXPECT_EQ(build_embedding(AlgebraLabel::parse("C3"), Kind::long_roots).sub_label.name(), "3A1");
  EXPECT_EQ(build_embedding(AlgebraLabel::parse("C3"), Kind::short_roots).sub_label.name(), "D3");
  EXPECT_EQ(build_embedding(AlgebraLabel::parse("F4"), Kind::short_roots).sub_label.name(), "D4");
  EXPECT_EQ(build_embedding(AlgebraLabel::parse("G2"), Kind::long_roots).sub_label.name(), "A2");
  EXPECT_THROW(build_embedding(AlgebraLabel::parse("A3"), Kind::long_roots), ConstructionError);
  EXPECT_THROW(build_embedding(AlgebraLabel::parse("G2"), Kind::plain), ConstructionError);
}

TEST(Embedding, TransversalGenerators) {
  auto gens = [](const std::string& name, Kind kind) {
    return build_embedding(AlgebraLabel::parse(name), kind).transversal_generators;
  };
  EXPECT_EQ(gens("B4", Kind::long_roots), (std::vector<int>{3}));
  EXPECT_EQ(gens("B4", Kind::short_roots), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(gens("C4", Kind::long_roots), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(gens("C4", Kind::short_roots), (std::vector<int>{3}));
  EXPECT_EQ(gens("F4", Kind::long_roots), (std::vector<int>{2, 3}));
  EXPECT_EQ(gens("F4", Kind::short_roots), (std::vector<int>{0, 1}));
  EXPECT_EQ(gens("G2", Kind::long_roots), (std::vector<int>{1}));
  EXPECT_EQ(gens("G2", Kind::short_roots), (std::vector<int>{0}));
}

TEST(Embedding, GeneratorsPreserveTheirOwnSign) {
  for (const auto& name : kParents) {
    const auto rs = build_root_system(AlgebraLabel::parse(name));
    for (Kind kind : {Kind::long_roots, Kind::short_roots})
      for (int g : build_embedding(rs, kind).transversal_generators) EXPECT_EQ(sign_of_simple(rs, g).of(kind), 1);
  }
}

TEST(Embedding, GeneratorsFixRhoOfTheirKind) {
  for (const auto& name : kParents) {
    const auto rs = build_root_system(AlgebraLabel::parse(name));
    for (Kind kind : {Kind::long_roots, Kind::short_roots}) {
      const auto emb = build_embedding(rs, kind);
      const Weight r = emb.apply(rho_of(rs, kind));
      for (std::size_t g = 0; g < emb.transversal_generators.size(); ++g) EXPECT_EQ(emb.permute(g, r), r) << name;
    }
  }
}

TEST(Embedding, PermutationsMatchParentReflection) {
  // The permutation action on subsystem coordinates agrees with reflecting
  // the parent weight and converting.
  std::mt19937_64 rng(7);
  for (const auto& name : kParents) {
    const auto rs = build_root_system(AlgebraLabel::parse(name));
    for (Kind kind : {Kind::long_roots, Kind::short_roots}) {
      const auto emb = build_embedding(rs, kind);
      for (int k = 0; k < 20; ++k) {
        const Weight l = oracle::random_weight(rng, rs.rank(), 0, 4);
        for (std::size_t g = 0; g < emb.transversal_generators.size(); ++g) {
          const Weight reflected = reflect_simple(rs, emb.transversal_generators[g], l);
          EXPECT_EQ(emb.apply(reflected), emb.permute(g, emb.apply(l))) << name;
        }
      }
    }
  }
}

TEST(Embedding, TransversalGroupOrder) {
  for (const auto& name : kParents) {
    const auto rs = build_root_system(AlgebraLabel::parse(name));
    for (Kind kind : {Kind::long_roots, Kind::short_roots}) {
      const auto emb = build_embedding(rs, kind);
      const auto sub = build_root_system(emb.sub_label);
      EXPECT_EQ(group_order(emb.generator_permutations, rs.rank()) * sub.weyl_order, rs.weyl_order) << name;
    }
  }
}

TEST(Embedding, ConvertIsInjectiveAndDominancePreserving) {
  std::mt19937_64 rng(13);
  for (const auto& name : kParents) {
    const auto rs = build_root_system(AlgebraLabel::parse(name));
    for (Kind kind : {Kind::long_roots, Kind::short_roots}) {
      const auto emb = build_embedding(rs, kind);
      for (int k = 0; k < 40; ++k) {
        const Weight w = oracle::random_weight(rng, rs.rank(), -5, 5);
        EXPECT_EQ(emb.preimage(emb.apply(w)), w);
        if (w.is_dominant()) EXPECT_TRUE(emb.apply(w).is_dominant());
      }
    }
  }
}

TEST(TransversalOrbit, Examples) {
  const auto g2 = build_root_system(AlgebraLabel::parse("G2"));
  const auto lo = build_embedding(g2, Kind::long_roots);
  const auto sh = build_embedding(g2, Kind::short_roots);
  EXPECT_EQ(transversal_orbit(lo, Weight({2, 2})), (std::vector<Weight>{Weight({2, 4}), Weight({4, 2})}));
  EXPECT_EQ(transversal_orbit(sh, Weight({2, 1})), (std::vector<Weight>{Weight({1, 7}), Weight({7, 1})}));
  for (const auto& name : kParents)
    for (Kind kind : {Kind::long_roots, Kind::short_roots}) {
      const auto emb = build_embedding(AlgebraLabel::parse(name), kind);
      const Weight zero = Weight::zero(emb.parent.rank());
      EXPECT_EQ(transversal_orbit(emb, zero), std::vector<Weight>{Weight::zero(emb.sub_label.rank())});
    }
  EXPECT_THROW(transversal_orbit(lo, Weight({-1, 2})), PreconditionError);
}

TEST(TransversalOrbit, ElementsAreDominantAndContainSeed) {
  for (const std::string name : {"B2", "B3", "C2", "C3", "G2"})
    for (Kind kind : {Kind::long_roots, Kind::short_roots}) {
      const auto emb = build_embedding(AlgebraLabel::parse(name), kind);
      for (const Weight& l : oracle::box(emb.parent.rank(), 3)) {
        const auto orbit = transversal_orbit(emb, l);
        EXPECT_NE(std::find(orbit.begin(), orbit.end(), emb.apply(l)), orbit.end());
        for (const auto& mu : orbit) EXPECT_TRUE(mu.is_dominant());
      }
    }
}
