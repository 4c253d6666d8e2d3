#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "mltt/level.hpp"
#include "mltt/overloaded.hpp"
#include "mltt/syntax.hpp"

namespace mltt {
namespace {

using Assignment = std::map<std::string, std::uint64_t>;

// Reference semantics, written against the tree directly.
std::uint64_t oracle(const Level& l, const Assignment& a) {
  return std::visit(overloaded{
                        [](const Level::Zero&) -> std::uint64_t { return 0; },
                        [&](const Level::Var& v) { return a.at(v.name); },
                        [&](const Level::Suc& s) { return oracle(*s.inner, a) + 1; },
                        [&](const Level::Max& m) { return std::max(oracle(*m.lhs, a), oracle(*m.rhs, a)); },
                    },
                    l.node());
}

const std::vector<std::string> kVars{"u", "v", "w"};

// Two levels built from at most `max_const` successors agree everywhere iff they
// agree on every assignment with values up to max_const + 1.
bool oracle_equal(const Level& a, const Level& b, std::uint64_t max_const) {
  std::uint64_t top = max_const + 1;
  for (std::uint64_t x = 0; x <= top; ++x)
    for (std::uint64_t y = 0; y <= top; ++y)
      for (std::uint64_t z = 0; z <= top; ++z) {
        Assignment as{{"u", x}, {"v", y}, {"w", z}};
        if (oracle(a, as) != oracle(b, as)) return false;
      }
  return true;
}

LevelPtr random_level(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  switch (pick(rng)) {
    case 0: return Level::zero();
    case 1: return Level::var(kVars[rng() % kVars.size()]);
    case 2:
    case 3: return Level::suc(random_level(rng, depth - 1));
    default: return Level::max(random_level(rng, depth - 1), random_level(rng, depth - 1));
  }
}

// A semantically equal variant: commutes maxes and pushes successors through them.
LevelPtr rewrite(const LevelPtr& l, std::mt19937_64& rng) {
  return std::visit(overloaded{
                        [&](const Level::Zero&) { return rng() % 4 == 0 ? Level::max(l, l) : l; },
                        [&](const Level::Var&) { return rng() % 4 == 0 ? Level::max(Level::zero(), l) : l; },
                        [&](const Level::Suc& s) -> LevelPtr {
                          if (const auto* m = std::get_if<Level::Max>(&s.inner->node()); m && rng() % 2 == 0) {
                            return Level::max(rewrite(Level::suc(m->lhs), rng), rewrite(Level::suc(m->rhs), rng));
                          }
                          return Level::suc(rewrite(s.inner, rng));
                        },
                        [&](const Level::Max& m) {
                          auto a = rewrite(m.lhs, rng);
                          auto b = rewrite(m.rhs, rng);
                          return rng() % 2 == 0 ? Level::max(b, a) : Level::max(a, b);
                        },
                    },
                    l->node());
}

std::uint64_t successor_count(const Level& l) {
  return std::visit(overloaded{
                        [](const Level::Zero&) -> std::uint64_t { return 0; },
                        [](const Level::Var&) -> std::uint64_t { return 0; },
                        [](const Level::Suc& s) { return 1 + successor_count(*s.inner); },
                        [](const Level::Max& m) { return successor_count(*m.lhs) + successor_count(*m.rhs); },
                    },
                    l.node());
}

LevelPtr u() { return Level::var("u"); }
LevelPtr v() { return Level::var("v"); }

TEST(LevelNormalize, MaxWithZeroDropsTheConstant) {
  LevelNF nf = level_normalize(*Level::max(Level::zero(), u()));
  EXPECT_EQ(nf.constant(), 0u);
  EXPECT_EQ(nf.atoms(), (std::map<std::string, std::uint32_t>{{"u", 0}}));
}

TEST(LevelNormalize, SuccessorDistributesOverMax) {
  LevelNF a = level_normalize(*Level::suc(Level::max(u(), v())));
  LevelNF b = level_normalize(*Level::max(Level::suc(u()), Level::suc(v())));
  EXPECT_EQ(a.atoms(), (std::map<std::string, std::uint32_t>{{"u", 1}, {"v", 1}}));
  EXPECT_EQ(a.constant(), 0u);
  EXPECT_EQ(a, b);
}

TEST(LevelNormalize, LargerOffsetOfTheSameVariableWins) {
  LevelNF nf = level_normalize(*Level::max(u(), Level::suc(u())));
  EXPECT_EQ(nf.atoms(), (std::map<std::string, std::uint32_t>{{"u", 1}}));
  EXPECT_EQ(nf.constant(), 0u);
}

TEST(LevelEqual, Examples) {
  EXPECT_TRUE(level_equal(*Level::max(u(), v()), *Level::max(v(), u())));
  EXPECT_TRUE(level_equal(*u(), *Level::max(u(), u())));
  EXPECT_FALSE(level_equal(*Level::suc(u()), *Level::max(u(), Level::suc(Level::zero()))));
}

TEST(LevelEqual, DistinguishingAssignmentForSucVersusMax) {
  Assignment a{{"u", 5}};
  EXPECT_EQ(oracle(*Level::suc(u()), a), 6u);
  EXPECT_EQ(oracle(*Level::max(u(), Level::suc(Level::zero())), a), 5u);
}

TEST(LevelProperty, NormalFormDenotesLikeTheTree) {
  std::mt19937_64 rng(20261017);
  for (int i = 0; i < 10000; ++i) {
    LevelPtr l = random_level(rng, 5);
    LevelNF nf = level_normalize(*l);
    LevelPtr back = nf.to_level();
    for (int k = 0; k < 8; ++k) {
      Assignment a{{"u", rng() % 7}, {"v", rng() % 7}, {"w", rng() % 7}};
      auto value_of = [&](const std::string& x) { return a.at(x); };
      ASSERT_EQ(nf.denote(value_of), oracle(*l, a)) << print_level(*l);
      ASSERT_EQ(oracle(*back, a), oracle(*l, a)) << print_level(*l) << " vs " << print_level(*back);
    }
    ASSERT_EQ(level_normalize(*back), nf) << print_level(*l);
  }
}

TEST(LevelProperty, EqualityMatchesTheOracle) {
  std::mt19937_64 rng(7);
  int equal_pairs = 0;
  for (int i = 0; i < 10000; ++i) {
    LevelPtr a = random_level(rng, 4);
    LevelPtr b = rng() % 2 == 0 ? rewrite(a, rng) : random_level(rng, 4);
    bool expected = oracle_equal(*a, *b, successor_count(*a) + successor_count(*b));
    ASSERT_EQ(level_equal(*a, *b), expected) << print_level(*a) << " vs " << print_level(*b);
    equal_pairs += expected;
  }
  EXPECT_GT(equal_pairs, 4000);
}

}  // namespace
}  // namespace mltt
