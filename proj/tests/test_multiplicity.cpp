#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace hybridweyl;

namespace {

RootSystemData rs_of(const std::string& name) { return build_root_system(AlgebraLabel::parse(name)); }

}  // namespace

TEST(Multiplicity, A2Examples) {
  const auto a2 = rs_of("A2");
  const auto t = dominant_multiplicities(a2, Weight({2, 4}));
  EXPECT_EQ(t.multiplicity(Weight({1, 3})), 2);
  EXPECT_EQ(t.multiplicity(Weight({0, 2})), 3);
  EXPECT_EQ(dominant_multiplicities(a2, Weight({7, 1})).multiplicity(Weight({0, 0})), 2);
}

TEST(Multiplicity, A2AgainstKostkaNumbers) {
  const auto a2 = rs_of("A2");
  for (const Weight& l : oracle::box(2, 7)) {
    const auto t = dominant_multiplicities(a2, l);
    for (const Weight& mu : oracle::box(2, l[0] + l[1]))
      EXPECT_EQ(t.multiplicity(mu), oracle::a2_multiplicity(l, mu)) << l.str() << " " << mu.str();
  }
}

TEST(Multiplicity, HighestWeightHasMultiplicityOne) {
  for (const auto& name : {"B3", "C3", "G2", "F4", "D4", "3A1"}) {
    const auto rs = rs_of(name);
    for (const Weight& l : oracle::box(rs.rank(), 1)) {
      const auto t = dominant_multiplicities(rs, l);
      EXPECT_EQ(t.multiplicity(l), 1);
      for (const auto& [mu, m] : t.entries) EXPECT_GT(m, 0);
    }
  }
}

TEST(Multiplicity, SupportLiesBelowHighestWeight) {
  for (const auto& name : {"B2", "C3", "G2", "F4"}) {
    const auto rs = rs_of(name);
    for (const Weight& l : oracle::box(rs.rank(), 1)) {
      const auto t = dominant_multiplicities(rs, l);
      for (const auto& [mu, m] : t.entries) {
        const auto d = to_e_basis(rs, l - mu);
        for (int i = 0; i < rs.rank(); ++i) {
          // alpha-coordinates of lambda - mu are <d|omega_i> * 2 / <alpha_i|alpha_i>
          const Rational c = 2 * dot(d, rs.fundamental_weights[i]) / dot(rs.simple_roots[i], rs.simple_roots[i]);
          EXPECT_TRUE(is_integer(c) && c >= 0) << name << " " << mu.str();
        }
      }
    }
  }
}

TEST(Multiplicity, OrbitSumIsWeylDimension) {
  for (const auto& name : {"A2", "B2", "B3", "C2", "C3", "G2", "D4"}) {
    const auto rs = rs_of(name);
    for (const Weight& l : oracle::box(rs.rank(), rs.rank() <= 2 ? 3 : 2)) {
      const auto t = dominant_multiplicities(rs, l);
      EXPECT_EQ(oracle::coefficient_sum_dimension(rs, t.entries), weyl_dimension(rs, l)) << name << l.str();
    }
  }
}

TEST(WeylDimension, Values) {
  const auto a2 = rs_of("A2");
  EXPECT_EQ(weyl_dimension(a2, Weight({2, 4})), 60);
  EXPECT_EQ(weyl_dimension(a2, Weight({7, 1})), 80);
  for (const Weight& l : oracle::box(2, 6)) EXPECT_EQ(weyl_dimension(a2, l), oracle::a2_dimension(l));
  EXPECT_EQ(weyl_dimension(rs_of("G2"), Weight({0, 1})), 7);
  EXPECT_EQ(weyl_dimension(rs_of("G2"), Weight({1, 0})), 14);
  EXPECT_EQ(weyl_dimension(rs_of("F4"), Weight({0, 0, 0, 1})), 26);
  EXPECT_EQ(weyl_dimension(rs_of("F4"), Weight({1, 0, 0, 0})), 52);
  EXPECT_EQ(weyl_dimension(rs_of("B3"), Weight({0, 0, 1})), 8);
  EXPECT_EQ(weyl_dimension(rs_of("3A1"), Weight({1, 2, 3})), 2 * 3 * 4);
  for (const auto& name : {"B4", "C4", "F4", "G2", "D4"})
    EXPECT_EQ(weyl_dimension(rs_of(name), Weight::zero(rs_of(name).rank())), 1);
  EXPECT_THROW(weyl_dimension(a2, Weight({-1, 0})), PreconditionError);
  EXPECT_THROW(dominant_multiplicities(a2, Weight({1, -1})), PreconditionError);
}

TEST(Multiplicity, ReducibleProductRule) {
  const auto a1 = rs_of("A1");
  const auto three = rs_of("3A1");
  const Weight l({2, 1, 3});
  const auto t = dominant_multiplicities(three, l);
  for (const auto& [mu, m] : t.entries) {
    std::int64_t expected = 1;
    for (int i = 0; i < 3; ++i) expected *= dominant_multiplicities(a1, Weight({l[i]})).multiplicity(Weight({mu[i]}));
    EXPECT_EQ(m, expected);
  }
  EXPECT_EQ(t.entries.size(), 2u * 1u * 2u);
  EXPECT_EQ(dominant_multiplicities(rs_of("2A1"), Weight({2, 2})).multiplicity(Weight({0, 0})), 1);

  // D2 is A1 + A1 in disguise.
  const auto d2 = rs_of("D2");
  const auto two = rs_of("2A1");
  for (const Weight& w : oracle::box(2, 3))
    EXPECT_EQ(dominant_multiplicities(d2, w).entries, dominant_multiplicities(two, w).entries);
}

TEST(Multiplicity, GramRescalingInvariance) {
  for (const auto& name : {"B3", "C3", "G2", "F4"}) {
    const auto rs = rs_of(name);
    detail::FreudenthalInput in{rs.cartan, detail::integral_gram(rs.gram), rs.positive_roots};
    detail::FreudenthalInput doubled = in;
    for (auto& row : doubled.gram)
      for (auto& g : row) g *= 2;
    detail::FreudenthalInput tripled = in;
    for (auto& row : tripled.gram)
      for (auto& g : row) g *= 3;
    for (const Weight& l : oracle::box(rs.rank(), 1)) {
      const auto base = detail::freudenthal(in, l);
      EXPECT_EQ(detail::freudenthal(doubled, l), base);
      EXPECT_EQ(detail::freudenthal(tripled, l), base);
    }
  }
}

TEST(Certificate, AcceptsEmittedTables) {
  for (const auto& name : {"A2", "B2", "B3", "C2", "C3", "G2", "D4", "2A1"}) {
    const auto rs = rs_of(name);
    for (const Weight& l : oracle::box(rs.rank(), rs.rank() <= 3 ? 2 : 1))
      EXPECT_TRUE(certify_table(rs, dominant_multiplicities(rs, l))) << name << l.str();
  }
  const auto f4 = rs_of("F4");
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(certify_table(f4, dominant_multiplicities(f4, Weight::unit(4, i))));
}

TEST(Certificate, RejectsPerturbedTable) {
  const auto a2 = rs_of("A2");
  auto t = dominant_multiplicities(a2, Weight({2, 4}));
  ASSERT_EQ(t.entries[Weight({1, 3})], 2);
  t.entries[Weight({1, 3})] = 1;
  std::ostringstream log;
  EXPECT_FALSE(certify_table(a2, t, &log));
  EXPECT_NE(log.str().find("certificate mismatch"), std::string::npos);
}

TEST(Cache, WriteOnce) {
  const auto g2 = rs_of("G2");
  MultiplicityCache cache;
  EXPECT_FALSE(cache.dirty());
  auto a = cache.get(g2, Weight({1, 1}));
  auto b = cache.get(g2, Weight({1, 1}));
  EXPECT_EQ(a.get(), b.get());
  EXPECT_TRUE(cache.dirty());
  EXPECT_EQ(cache.size(), 1u);

  MultiplicityCache loaded;
  loaded.insert(*a);
  EXPECT_FALSE(loaded.dirty());
  EXPECT_EQ(loaded.get(g2, Weight({1, 1}))->entries, a->entries);
  EXPECT_FALSE(loaded.dirty());
}
