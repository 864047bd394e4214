#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rookdom/board.hpp"
#include "rookdom/polynomial.hpp"

namespace rookdom {

/// Largest board (in squares) the brute-force enumerators accept: 2^24 subsets.
inline constexpr std::uint64_t kOracleMaxCells = 24;

/// Raw counts indexed by subset size k = 0..nm.
struct CoeffTable {
  std::vector<BigInt> counts;

  IntPolynomial to_polynomial() const { return IntPolynomial(counts); }
  /// Length-`length` table; throws DomainError on a negative coefficient or
  /// a degree that does not fit.
  static CoeffTable from_polynomial(const IntPolynomial& p, std::size_t length);

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

/// Rook-graph adjacency as bitboards. Square (x, y) has index x*m + y.
class RookBoard {
 public:
  /// Throws DomainError for an empty board, CapacityError past kOracleMaxCells.
  explicit RookBoard(BoardDims dims);

  BoardDims dims() const { return dims_; }
  std::uint32_t full_mask() const { return full_; }
  /// Squares sharing a row or column with `square`, excluding itself.
  std::span<const std::uint32_t> neighbor_masks() const { return neighbors_; }
  /// neighbor_masks() with the square's own bit added.
  std::span<const std::uint32_t> closed_masks() const { return closed_; }

 private:
  BoardDims dims_;
  std::uint32_t full_ = 0;
  std::vector<std::uint32_t> neighbors_;
  std::vector<std::uint32_t> closed_;
};

/// True iff every square is in `subset` or attacked by a rook in it.
bool is_dominating(const RookBoard& board, std::uint32_t subset);

/// d(k) for every k by enumerating all 2^{nm} rook placements. `workers`
/// splits the enumeration across threads; the result does not depend on it.
CoeffTable brute_force_domination(BoardDims dims, unsigned workers = 1);

/// E_{n,m}(k) for every k: placements with a rook in every row and column.
CoeffTable brute_force_edge_cover(BoardDims dims, unsigned workers = 1);

}  // namespace rookdom
