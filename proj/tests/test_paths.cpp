#include <gtest/gtest.h>

#include "awg/io.hpp"
#include "awg/verify.hpp"

using namespace awg;

namespace {

TEST(RankFiveChain, ValidatesForAllSmallLabels) {
  ClassDescriptor d{GroupFamily(Family::AffineB, 5), {1, 3, 0, 0}, {.f_mod4 = 2}};
  int count = 0;
  for (Label lam = -2; lam <= 2; ++lam)
    for (Label p = -2; p <= 2; ++p)
      for (Label q = -2; q <= 2; ++q)
        for (Label r = -2; r <= 2; ++r) {
          if (detail::mod(lam + p + q + r, 2) != 1) continue;
          auto w = rank_five_chain(lam, p, q, r);
          ASSERT_EQ(w.vertices.size(), 5u);
          ASSERT_EQ(w.vertices.front(),
                    parse_element("(+1 5)^" + std::to_string(lam) + " (-2)^" + std::to_string(2 * p) +
                                  " (-3)^" + std::to_string(2 * q) + " (-4)^" + std::to_string(2 * r)));
          ASSERT_EQ(w.vertices.back(), parse_element("(-1 2)^1 (-3)^0 (-4)^0 (-5)^0"));
          ASSERT_EQ(witness_defect(w, d), "") << lam << p << q << r;
          ++count;
        }
  EXPECT_EQ(count, 312);
  EXPECT_EQ(canonical_representative(d), parse_element("(-1 2)^1 (-3)^0 (-4)^0 (-5)^0"));
  EXPECT_THROW(rank_five_chain(0, 0, 0, 0), Error);
}

TEST(RankFiveChain, DistanceSearchAgrees) {
  auto w = rank_five_chain(1, 0, 1, 1);
  auto r = distance(w.vertices.front(), w.vertices.back(), GroupFamily(Family::AffineB, 5));
  ASSERT_TRUE(r);
  EXPECT_LE(r->length, 4);
}

TEST(Constructive, Cases) {
  auto c = [](Family f, std::size_t n, LabelledCycleType t, Residues r = {}) {
    return constructive_case({GroupFamily(f, n), t, r});
  };
  EXPECT_EQ(c(Family::AffineB, 4, {2, 0, 0, 0}, {.f_mod4 = 0}), ConstructiveCase::AllTranspositions);
  EXPECT_EQ(c(Family::AffineD, 6, {3, 0, 0, 0}, {.f_mod4 = 0, .minus_mod4 = 0}),
            ConstructiveCase::AllTranspositions);
  EXPECT_EQ(c(Family::AffineB, 5, {1, 3, 0, 0}, {.f_mod4 = 0}), ConstructiveCase::OneTransposition);
  EXPECT_EQ(c(Family::AffineB, 6, {2, 2, 0, 0}, {.f_mod4 = 2}), ConstructiveCase::SeveralTranspositions);
  EXPECT_FALSE(c(Family::AffineC, 6, {2, 2, 0, 0}));
  EXPECT_FALSE(c(Family::AffineB, 6, {2, 0, 0, 2}));
  EXPECT_FALSE(c(Family::AffineB, 4, {1, 2, 0, 0}, {.f_mod4 = 0}));
  EXPECT_THROW(constructive_bound({GroupFamily(Family::AffineC, 6), {2, 2, 0, 0}, {}}), NotConstructive);
}

TEST(Constructive, RepresentativeGivesEmptyPath) {
  ClassDescriptor d{GroupFamily(Family::AffineB, 6), {2, 2, 0, 0}, {.f_mod4 = 0}};
  auto p = constructive_path(canonical_representative(d), d);
  EXPECT_EQ(p.length(), 0u);
}

TEST(Constructive, WrongClassThrows) {
  ClassDescriptor d{GroupFamily(Family::AffineB, 6), {2, 2, 0, 0}, {.f_mod4 = 0}};
  ClassDescriptor e{GroupFamily(Family::AffineB, 6), {2, 2, 0, 0}, {.f_mod4 = 2}};
  EXPECT_THROW(constructive_path(canonical_representative(e), d), ClassMismatch);
}

TEST(Constructive, RandomMembersWithinBound) {
  std::mt19937_64 rng(61);
  for (auto f : {Family::AffineB, Family::AffineBbar, Family::AffineD})
    for (std::size_t n = 4; n <= 6; ++n)
      for (const auto& d : enumerate_descriptors(GroupFamily(f, n))) {
        if (!constructive_case(d)) continue;
        auto c = verify_constructive(d, 2, 40, rng);
        EXPECT_TRUE(c.passed) << c.name << " " << c.counterexample.dump();
      }
}

}  // namespace
