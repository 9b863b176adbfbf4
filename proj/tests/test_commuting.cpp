#include <gtest/gtest.h>

#include <unordered_set>

#include "awg/io.hpp"
#include "awg/verify.hpp"

using namespace awg;

namespace {

AffineElement from_cycles(std::size_t n, std::vector<LabelledCycle> cycles) {
  return to_element({n, std::move(cycles)});
}

LabelledCycle neg(std::size_t a, Label l) { return {CycleKind::NegOneCycle, a, a, l}; }
LabelledCycle tr(bool pos, std::size_t a, std::size_t b, Label l) {
  return {pos ? CycleKind::PosTransposition : CycleKind::NegTransposition, a, b, l};
}

TEST(Commutes, WithItself) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 200; ++it) {
    auto x = random_involution(GroupFamily(Family::AffineC, 6), 4, rng);
    EXPECT_TRUE(commutes_fast(x, x));
  }
}

TEST(Commutes, SameOneCycleNeedsSameLabel) {
  for (Label a = -3; a <= 3; ++a)
    for (Label b = -3; b <= 3; ++b) {
      auto x = from_cycles(2, {neg(0, a), {CycleKind::FixedPoint, 1, 1, 0}});
      auto y = from_cycles(2, {neg(0, b), {CycleKind::FixedPoint, 1, 1, 0}});
      EXPECT_EQ(commutes_fast(x, y), a == b);
    }
}

TEST(Commutes, OppositeSignTranspositionsAlwaysCommute) {
  for (Label a = -3; a <= 3; ++a)
    for (Label b = -3; b <= 3; ++b)
      EXPECT_TRUE(commutes_fast(from_cycles(2, {tr(true, 0, 1, a)}), from_cycles(2, {tr(false, 0, 1, b)})));
}

TEST(Commutes, PositiveTranspositionAgainstTwoOneCycles) {
  auto t = from_cycles(2, {tr(true, 0, 1, 1)});
  EXPECT_TRUE(commutes_fast(t, from_cycles(2, {neg(0, 2), neg(1, 0)})));
  EXPECT_FALSE(commutes_fast(t, from_cycles(2, {neg(0, 0), neg(1, 0)})));
  for (Label l = -2; l <= 2; ++l)
    for (Label mu = -3; mu <= 3; ++mu)
      for (Label nu = -3; nu <= 3; ++nu)
        ASSERT_EQ(commutes_fast(from_cycles(2, {tr(true, 0, 1, l)}), from_cycles(2, {neg(0, mu), neg(1, nu)})),
                  mu - nu == 2 * l);
}

TEST(Commutes, CrossedTranspositionPairsNeverCommute) {
  // (+a b)(+c d) against (+a c)(-b d)
  for (Label l1 = -2; l1 <= 2; ++l1)
    for (Label l2 = -2; l2 <= 2; ++l2)
      for (Label m1 = -2; m1 <= 2; ++m1)
        for (Label m2 = -2; m2 <= 2; ++m2) {
          auto g = from_cycles(4, {tr(true, 0, 1, l1), tr(true, 2, 3, l2)});
          auto h = from_cycles(4, {tr(true, 0, 2, m1), tr(false, 1, 3, m2)});
          ASSERT_FALSE(commutes_fast(g, h));
          ASSERT_FALSE(commutes_oracle(g, h));
        }
}

TEST(Commutes, FastAgreesWithOracleExhaustively) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto xs = involutions_in_window(n, 2);
    for (const auto& x : xs)
      for (const auto& y : xs) ASSERT_EQ(commutes_fast(x, y), commutes_oracle(x, y));
  }
}

TEST(Commutes, FastAgreesWithOracleOnRandomPairs) {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 50000; ++it) {
    std::size_t n = 2 + it % 7;
    GroupFamily g(Family::AffineC, n);
    auto x = random_involution(g, 2, rng);
    // Half the pairs are conjugates of x, so both share a type.
    auto y = it % 2 ? random_involution(g, 2, rng) : conjugate(x, random_word(g, 2, rng));
    ASSERT_EQ(commutes_fast(x, y), commutes_oracle(x, y)) << format_element(x) << " / " << format_element(y);
  }
}

TEST(Commutes, Errors) {
  EXPECT_THROW(commutes_fast(AffineElement::identity(2), parse_element("(-1)^0 (+2)^0")), NotAnInvolution);
  EXPECT_THROW(commutes_fast(parse_element("(-1)^0"), parse_element("(-1)^0 (+2)^0")), RankMismatch);
}

TEST(Window, MembersMatchFilteredInvolutions) {
  for (auto f : {Family::AffineA, Family::AffineB, Family::AffineBbar, Family::AffineC, Family::AffineD})
    for (std::size_t n = std::max<std::size_t>(minimum_rank(f), 2); n <= 4; ++n) {
      GroupFamily g(f, n);
      auto all = involutions_in_window(n, 2, f == Family::AffineA);
      for (const auto& d : enumerate_descriptors(g)) {
        std::vector<AffineElement> expected;
        for (const auto& x : all)
          if (member_of(x, g) && class_of(x, g) == d) expected.push_back(x);
        auto got = class_members_in_window(d, 2);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, expected) << to_string(d);
      }
    }
}

TEST(Window, LabelFreeCountsMatchClosedForm) {
  // At L=0 only k_o = 0 types occur; every signed pairing qualifies, so the
  // count is n! / (m! k_e! l!), all with f = 0.
  auto fact = [](int k) {
    std::size_t r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& d : enumerate_descriptors(GroupFamily(Family::AffineC, n))) {
      const auto& t = d.type;
      std::size_t expected = t.k_o > 0 ? 0 : fact(n) / (fact(t.m) * fact(t.k_e) * fact(t.l));
      ASSERT_EQ(class_members_in_window(d, 0).size(), expected) << to_string(d);
    }
  // In B the f = 2 class of a splitting type has no label-free member.
  ClassDescriptor b2{GroupFamily(Family::AffineB, 6), {2, 2, 0, 0}, {.f_mod4 = 2}};
  EXPECT_TRUE(class_members_in_window(b2, 0).empty());
}

TEST(Window, BudgetExceededIsExplicit) {
  ClassDescriptor d{GroupFamily(Family::AffineC, 6), {2, 2, 0, 0}, {}};
  EXPECT_THROW(class_members_in_window(d, 2, 100), BudgetExceeded);
}

TEST(Neighbors, AgreeWithBruteForce) {
  std::mt19937_64 rng(43);
  for (auto f : {Family::AffineA, Family::AffineB, Family::AffineBbar, Family::AffineC, Family::AffineD})
    for (std::size_t n = std::max<std::size_t>(minimum_rank(f), 2); n <= 5; ++n)
      for (const auto& d : enumerate_descriptors(GroupFamily(f, n))) {
        auto c = verify_neighbors(d, n <= 4 ? 2 : 1, 6, rng);
        ASSERT_TRUE(c.passed) << c.name << " " << c.counterexample.dump();
      }
}

TEST(Neighbors, ExcludeSelfAndStayInClass) {
  ClassDescriptor d{GroupFamily(Family::AffineB, 5), {1, 2, 0, 1}, {}};
  auto x = canonical_representative(d);
  auto ys = neighbors_in_class(x, d, 2);
  ASSERT_FALSE(ys.empty());
  std::unordered_set<AffineElement> seen;
  for (const auto& y : ys) {
    EXPECT_NE(y, x);
    EXPECT_TRUE(seen.insert(y).second);
    EXPECT_EQ(class_of(y, d.family), d);
    EXPECT_TRUE(commutes_oracle(x, y));
    EXPECT_LE(y.max_abs_label(), 2);
  }
}

}  // namespace
