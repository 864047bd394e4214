#include "rookdom/oracle.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "rookdom/closed_form.hpp"
#include "rookdom/recursion.hpp"

namespace rookdom {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TEST(RookBoardTest, MasksFollowRowMajorIndexing) {
  const RookBoard board({3, 4});
  ASSERT_EQ(board.neighbor_masks().size(), 12u);
  // Square (1, 2) has index 6: row 1 holds 4..7, column 2 holds 2, 6, 10.
  EXPECT_EQ(board.neighbor_masks()[6], (0b1111u << 4 | 1u << 2 | 1u << 10) & ~(1u << 6));
  EXPECT_EQ(board.closed_masks()[6], board.neighbor_masks()[6] | 1u << 6);
}

TEST(RookBoardTest, AdjacencyIsSymmetricWithExpectedDegree) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
      const RookBoard board({n, m});
      auto masks = board.neighbor_masks();
      for (std::size_t i = 0; i < masks.size(); ++i) {
        EXPECT_EQ(std::popcount(masks[i]), static_cast<int>(n - 1 + m - 1));
        for (std::size_t j = 0; j < masks.size(); ++j) {
          EXPECT_EQ((masks[i] >> j) & 1u, (masks[j] >> i) & 1u);
        }
      }
    }
  }
}

TEST(RookBoardTest, RejectsEmptyAndOversizedBoards) {
  EXPECT_THROW(RookBoard({0, 3}), DomainError);
  EXPECT_THROW(RookBoard({5, 5}), CapacityError);
  EXPECT_NO_THROW(RookBoard({4, 6}));
}

TEST(IsDominatingTest, Examples) {
  const RookBoard board({2, 2});
  EXPECT_FALSE(is_dominating(board, 0b0001));  // (0,0) misses (1,1)
  EXPECT_TRUE(is_dominating(board, 0b1001));
  EXPECT_FALSE(is_dominating(board, 0));
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const RookBoard b({n, 5});
    EXPECT_TRUE(is_dominating(b, b.full_mask()));
  }
}

TEST(BruteForceDominationTest, Examples) {
  EXPECT_EQ(brute_force_domination({2, 2}).counts, ints({0, 0, 6, 4, 1}));
  EXPECT_EQ(brute_force_domination({1, 2}).counts, ints({0, 2, 1}));
  EXPECT_EQ(brute_force_domination({1, 1}).counts, ints({0, 1}));
}

TEST(BruteForceDominationTest, CapacityError) {
  EXPECT_THROW(brute_force_domination({5, 5}), CapacityError);
  EXPECT_THROW(brute_force_domination({1, 25}), CapacityError);
  EXPECT_THROW(brute_force_domination({0, 0}), DomainError);
  try {
    brute_force_domination({5, 5});
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
  }
}

TEST(BruteForceEdgeCoverTest, Examples) {
  EXPECT_EQ(brute_force_edge_cover({2, 2}).counts, ints({0, 0, 2, 4, 1}));
  EXPECT_EQ(brute_force_edge_cover({1, 3}).counts, ints({0, 0, 0, 1}));
  const auto t = brute_force_edge_cover({2, 3});
  EXPECT_EQ(t.counts[2], 0);
  EXPECT_EQ(t.counts[3], 6);
  EXPECT_EQ(t.counts[4], 12);
  EXPECT_EQ(t.counts[3], edge_cover_poly({2, 3}).coeff(3));
  EXPECT_THROW(brute_force_edge_cover({3, 9}), CapacityError);
}

TEST(BruteForceTest, WorkerCountDoesNotChangeCounts) {
  EXPECT_EQ(brute_force_domination({3, 5}, 1), brute_force_domination({3, 5}, 4));
  EXPECT_EQ(brute_force_edge_cover({4, 4}, 1), brute_force_edge_cover({4, 4}, 3));
}

TEST(BruteForceTest, AgreesWithIsDominatingOnEverySubset) {
  const RookBoard board({3, 3});
  std::vector<BigInt> counts(10);
  for (std::uint32_t s = 0; s <= board.full_mask(); ++s) {
    if (is_dominating(board, s)) counts[std::popcount(s)] += 1;
  }
  EXPECT_EQ(brute_force_domination({3, 3}).counts, counts);
}

TEST(BruteForceTest, AgreesWithFormulasOnSmallBoards) {
  EdgeCoverMemo memo;
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t m = 1; m <= 5; ++m) {
      const BoardDims dims{n, m};
      const auto oracle = brute_force_domination(dims).to_polynomial();
      EXPECT_EQ(oracle, domination_poly_closed(dims)) << to_string(dims);
      EXPECT_EQ(oracle, domination_poly_symmetric(dims)) << to_string(dims);
      EXPECT_EQ(oracle, domination_poly_recursive(dims, memo)) << to_string(dims);
      EXPECT_EQ(brute_force_edge_cover(dims).to_polynomial(), edge_cover_poly(dims)) << to_string(dims);
    }
  }
}

TEST(BruteForceTest, FloorAndTop) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t m = 1; m <= 5; ++m) {
      const auto t = brute_force_domination({n, m});
      EXPECT_EQ(t.counts[n * m], 1);
      for (std::uint32_t k = 0; k < std::min(n, m); ++k) EXPECT_EQ(t.counts[k], 0);
      for (std::uint32_t k = 0; k <= n * m; ++k) EXPECT_LE(t.counts[k], binomial(n * m, k));
    }
  }
}

TEST(BruteForceTest, SupersetsOfDominatingSetsDominate) {
  std::mt19937_64 rng(7);
  for (BoardDims dims : {BoardDims{3, 4}, BoardDims{4, 5}, BoardDims{2, 7}}) {
    const RookBoard board(dims);
    std::uniform_int_distribution<std::uint32_t> pick(0, board.full_mask());
    int sampled = 0;
    while (sampled < 200) {
      const std::uint32_t s = pick(rng);
      if (!is_dominating(board, s)) continue;
      ++sampled;
      for (std::uint32_t sq = 0; sq < dims.cells(); ++sq) {
        ASSERT_TRUE(is_dominating(board, s | 1u << sq)) << to_string(dims) << " subset " << s;
      }
    }
  }
}

TEST(CoeffTableTest, RoundTripsThroughPolynomial) {
  const IntPolynomial p({0, 0, 6, 4, 1});
  const auto t = CoeffTable::from_polynomial(p, 5);
  EXPECT_EQ(t.counts, ints({0, 0, 6, 4, 1}));
  EXPECT_EQ(t.to_polynomial(), p);
  EXPECT_EQ(CoeffTable::from_polynomial(IntPolynomial{1}, 3).counts, ints({1, 0, 0}));
  EXPECT_THROW(CoeffTable::from_polynomial(IntPolynomial({1, -1}), 2), DomainError);
  EXPECT_THROW(CoeffTable::from_polynomial(p, 4), DomainError);
}

}  // namespace
}  // namespace rookdom
