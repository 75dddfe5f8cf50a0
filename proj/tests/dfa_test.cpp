#include <gtest/gtest.h>

#include <random>

#include "dfadist/dfa.hpp"
#include "dfadist/dfa_io.hpp"
#include "test_support.hpp"

namespace dfadist {
namespace {

TEST(Alphabet, RejectsEmptyDuplicateAndWhitespace) {
  EXPECT_THROW(Alphabet(""), InputError);
  EXPECT_THROW(Alphabet("aba"), InputError);
  EXPECT_THROW(Alphabet("a b"), InputError);
  EXPECT_THROW(Alphabet("a;"), InputError);
  EXPECT_NO_THROW(Alphabet("01#"));
}

TEST(Alphabet, OrderIsSignificant) {
  const Alphabet a("01#");
  EXPECT_EQ(a.index_of('0'), 0u);
  EXPECT_EQ(a.index_of('#'), 2u);
  EXPECT_FALSE(a.index_of('x').has_value());
  EXPECT_NE(Alphabet("ab"), Alphabet("ba"));
}

TEST(Dfa, ConstructorEnforcesTotality) {
  const Alphabet ab("ab");
  EXPECT_THROW(Dfa(ab, 2, 0, {false, true}, {0, 1, 1}), InputError);
  EXPECT_THROW(Dfa(ab, 2, 0, {false, true}, {0, 1, 1, 2}), InputError);
  EXPECT_THROW(Dfa(ab, 2, 2, {false, true}, {0, 1, 1, 0}), InputError);
  EXPECT_THROW(Dfa(ab, 0, 0, {}, {}), InputError);
  EXPECT_THROW(Dfa::from_accepting_list(ab, 2, 0, std::vector<State>{5}, {0, 1, 1, 0}),
               InputError);
}

TEST(Dfa, RunFollowsTable) {
  const Dfa a = testing::fixture("cycle4.dfa");
  EXPECT_EQ(a.run(a.initial(), ""), 0u);
  EXPECT_EQ(a.run(a.initial(), "aaaaaaa"), 3u);
  EXPECT_THROW(a.run(a.initial(), "ab"), InputError);
}

TEST(Dfa, CanonicalNumberingKeepsUnreachableStatesLast) {
  // initial 2 -> 0 -> 2 cycle, state 1 unreachable
  const Dfa d = Dfa::from_accepting_list(Alphabet("a"), 3, 2, std::vector<State>{0}, {2, 1, 0});
  const Dfa c = canonical_numbering(d);
  EXPECT_EQ(c.initial(), 0u);
  EXPECT_EQ(c.state_count(), 3u);
  EXPECT_EQ(c.delta(), (std::vector<State>{1, 0, 2}));
  EXPECT_EQ(c.accepting_states(), (std::vector<State>{1}));
}

TEST(Dfa, RandomInstancesAreComplete) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Dfa d = testing::random_dfa(rng, Alphabet("abc"), 1 + i % 9);
    for (State q = 0; q < d.state_count(); ++q) {
      ASSERT_EQ(d.row(q).size(), 3u);
      for (State t : d.row(q)) ASSERT_LT(t, d.state_count());
    }
  }
}

}  // namespace
}  // namespace dfadist
