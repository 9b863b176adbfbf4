#include <gtest/gtest.h>

#include "awg/io.hpp"
#include "awg/verify.hpp"

using namespace awg;

namespace {

ClassDescriptor desc(Family f, std::size_t n, LabelledCycleType t, Residues r = {}) {
  return {GroupFamily(f, n), t, r};
}

TEST(Predict, RankFourSingleTranspositionIsDisconnected) {
  for (auto f : {Family::AffineB, Family::AffineBbar, Family::AffineC, Family::AffineD})
    for (const auto& d : enumerate_descriptors(GroupFamily(f, 4))) {
      if (d.type.m != 1) continue;
      auto v = predict_connectivity(d);
      EXPECT_FALSE(v.connected()) << to_string(d);
    }
  auto v = predict_connectivity(desc(Family::AffineC, 4, {1, 2, 0, 0}));
  EXPECT_EQ(to_string(v), "Disconnected(iv)");
  EXPECT_EQ(v.certificate, CertificateKind::FiniteProjection);
  EXPECT_EQ(to_string(predict_connectivity(desc(Family::AffineD, 4, {1, 0, 0, 2}))), "Disconnected(iv)");
}

TEST(Predict, RankSixBalanced) {
  auto v = predict_connectivity(desc(Family::AffineC, 6, {1, 2, 2, 0}));
  EXPECT_EQ(to_string(v), "Disconnected(v)");
  EXPECT_EQ(v.certificate, CertificateKind::ConservedPartition);
}

TEST(Predict, EarlierClauses) {
  EXPECT_EQ(to_string(predict_connectivity(desc(Family::AffineC, 3, {0, 2, 1, 0}))), "Disconnected(i)");
  EXPECT_EQ(to_string(predict_connectivity(desc(Family::AffineC, 5, {2, 1, 0, 0}))), "Disconnected(ii)");
  EXPECT_EQ(to_string(predict_connectivity(desc(Family::AffineC, 6, {2, 0, 1, 1}))), "Disconnected(iii)");
}

TEST(Predict, Bounds) {
  EXPECT_EQ(to_string(predict_connectivity(desc(Family::AffineB, 6, {2, 2, 0, 0}, {.f_mod4 = 0}))),
            "ConnectedWithBound(5)");
  EXPECT_EQ(predict_connectivity(desc(Family::AffineB, 6, {3, 0, 0, 0}, {.f_mod4 = 2})).bound, 3);
  EXPECT_EQ(predict_connectivity(desc(Family::AffineBbar, 6, {3, 0, 0, 0}, {.f_plus_minus_mod4 = 0})).bound, 3);
  EXPECT_EQ(
      predict_connectivity(desc(Family::AffineD, 6, {3, 0, 0, 0}, {.f_mod4 = 0, .minus_mod4 = 2})).bound, 4);
  EXPECT_EQ(predict_connectivity(desc(Family::AffineB, 6, {1, 4, 0, 0}, {.f_mod4 = 0})).bound, 7);
  EXPECT_EQ(predict_connectivity(desc(Family::AffineC, 6, {2, 2, 0, 0})).bound, 8);
  EXPECT_EQ(predict_connectivity(desc(Family::AffineC, 6, {2, 0, 0, 2})).bound, 8);
}

TEST(Predict, Errors) {
  EXPECT_THROW(predict_connectivity(desc(Family::AffineB, 4, {2, 0, 0, 0}, {.f_mod4 = 3})),
               UnrealizableDescriptor);
  EXPECT_THROW(predict_connectivity(desc(Family::AffineA, 4, {2, 0, 0, 0}, {.label_sum_mod2 = 0})), Error);
}

TEST(Window, IsolatedVerticesForOneCycleOnlyClass) {
  auto d = desc(Family::AffineC, 2, {0, 1, 1, 0});
  for (Label L : {0, 1, 2}) {
    auto wc = components_in_window(d, WindowSpec(L));
    EXPECT_EQ(wc.edges, 0u);
    EXPECT_EQ(wc.count, wc.vertices.size());
  }
  // Two choices of which point is odd, L+1 even labels and L odd labels each.
  EXPECT_EQ(components_in_window(d, WindowSpec(2)).vertices.size(), 2u * 3 * 2);
}

TEST(Window, EdgesAreExactlyCommutingPairs) {
  auto d = desc(Family::AffineB, 4, {1, 2, 0, 0}, {.f_mod4 = 0});
  auto wc = components_in_window(d, WindowSpec(1), true);
  std::size_t brute = 0;
  for (std::size_t i = 0; i < wc.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < wc.vertices.size(); ++j)
      brute += commutes_oracle(wc.vertices[i], wc.vertices[j]);
  EXPECT_EQ(wc.edges, brute);
  EXPECT_EQ(wc.edge_list.size(), brute);
}

TEST(Window, InvalidSpec) {
  EXPECT_THROW(WindowSpec(-1), Error);
  EXPECT_THROW(WindowSpec(1, 0), Error);
}

TEST(Window, ObstructionInvariantsConstantOnComponents) {
  for (const auto& d : {desc(Family::AffineC, 4, {1, 1, 1, 0}), desc(Family::AffineC, 4, {1, 1, 0, 1}),
                        desc(Family::AffineD, 4, {1, 2, 0, 0}, {.f_mod4 = 2}),
                        desc(Family::AffineC, 3, {0, 2, 1, 0})}) {
    auto v = predict_connectivity(d);
    auto c = verify_disconnection(d, v, WindowSpec(1));
    EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  }
}

TEST(Witness, DefectsAreReported) {
  auto d = desc(Family::AffineC, 3, {1, 0, 0, 1});
  auto x = parse_element("(+1 2)^0 (+3)^0");
  auto y = parse_element("(+1 3)^0 (+2)^0");
  EXPECT_TRUE(validate(PathWitness{{x}}, d));
  EXPECT_FALSE(validate(PathWitness{{x, y}}, d));
  EXPECT_FALSE(validate(PathWitness{{x, x}}, d));
  EXPECT_FALSE(validate(PathWitness{}, d));
  EXPECT_FALSE(validate(PathWitness{{parse_element("(-1)^0 (+2)^0 (+3)^0")}}, d));
}

TEST(Distance, SameElement) {
  auto x = parse_element("(+1 2)^0 (-3)^0 (-4)^0");
  auto r = distance(x, x, GroupFamily(Family::AffineB, 4));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->length, 0);
  EXPECT_EQ(r->witness.vertices.size(), 1u);
}

TEST(Distance, CommutingPair) {
  auto x = parse_element("(+1 2)^0 (-3)^0 (-4)^0");
  auto y = parse_element("(-1 2)^0 (-3)^0 (-4)^0");
  ASSERT_TRUE(commutes_oracle(x, y));
  auto r = distance(x, y, GroupFamily(Family::AffineC, 4));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->length, 1);
}

TEST(Distance, LowerBoundNeverExceedsLength) {
  std::mt19937_64 rng(51);
  for (auto f : {Family::AffineB, Family::AffineC, Family::AffineD}) {
    GroupFamily g(f, 5);
    for (const auto& d : enumerate_descriptors(g)) {
      if (!predict_connectivity(d).connected()) continue;
      auto members = class_members_in_window(d, 1);
      for (int it = 0; it < 3; ++it) {
        const auto& x = members[rng() % members.size()];
        const auto& y = members[rng() % members.size()];
        auto r = distance(x, y, g, {3, 12, 500'000});
        ASSERT_TRUE(r) << format_element(x) << " / " << format_element(y);
        EXPECT_TRUE(validate(r->witness, d));
        EXPECT_EQ(static_cast<int>(r->witness.length()), r->length);
        if (r->lower_bound) EXPECT_LE(*r->lower_bound, r->length);
        EXPECT_LE(r->length, predict_connectivity(d).bound);
      }
    }
  }
}

TEST(Distance, DifferentClassesThrow) {
  auto x = parse_element("(+1 2)^0 (-3)^0 (-4)^0");
  auto y = parse_element("(+1 2)^0 (-3)^1 (-4)^1");
  EXPECT_THROW(distance(x, y, GroupFamily(Family::AffineC, 4)), ClassMismatch);
}

TEST(Finite, PredictedClausesUpToRankSix) {
  for (auto f : {FiniteFamily::FiniteA, FiniteFamily::FiniteB, FiniteFamily::FiniteD})
    for (std::size_t n = 2; n <= 6; ++n)
      for (const auto& d : finite_classes(f, n)) {
        if (f == FiniteFamily::FiniteD && n < 4) continue;
        auto p = predict_finite(d);
        EXPECT_TRUE(finite_prediction_holds(finite_class_graph(d), p)) << to_string(d) << " " << p.clause;
      }
}

TEST(Finite, Examples) {
  auto& complete = finite_class_graph({FiniteFamily::FiniteB, 4, 0, 2, 2, std::nullopt});
  EXPECT_EQ(complete.diameter(), 1);
  auto& outlier = finite_class_graph({FiniteFamily::FiniteB, 5, 1, 2, 1, std::nullopt});
  EXPECT_EQ(outlier.diameter(), 5);
  auto& six = finite_class_graph({FiniteFamily::FiniteB, 6, 1, 2, 2, std::nullopt});
  ASSERT_TRUE(six.diameter());
  EXPECT_LE(*six.diameter(), 4);
  auto& sym = finite_class_graph({FiniteFamily::FiniteA, 5, 2, 0, 1, std::nullopt});
  EXPECT_FALSE(sym.diameter());
}

TEST(Finite, BaselineDistanceErrors) {
  auto a = SignedPermutation::from_images({{1, 1}, {0, 1}, {2, 1}});
  auto b = SignedPermutation::from_images({{0, -1}, {1, 1}, {2, 1}});
  EXPECT_THROW(finite_baseline_distance(a, b, FiniteFamily::FiniteB), ClassMismatch);
  EXPECT_EQ(finite_baseline_distance(a, a, FiniteFamily::FiniteB), 0);
}

}  // namespace
