#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include "rookdom/board.hpp"
#include "rookdom/polynomial.hpp"

namespace rookdom {

/// Grow-only cache of edge-cover polynomials E_{n,m}(x) keyed by board size.
///
/// Entries are never replaced once stored. Not synchronized: give each
/// thread its own memo.
class EdgeCoverMemo {
 public:
  /// Nullptr if absent. Pointers stay valid for the memo's lifetime.
  const IntPolynomial* find(BoardDims dims) const;

  /// Stores `poly` unless an entry exists; returns the stored entry either way.
  const IntPolynomial& insert(BoardDims dims, IntPolynomial poly);

  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::pair<std::uint32_t, std::uint32_t>, IntPolynomial> table_;
};

/// E_{n,m}(x) by inclusion-exclusion over empty rows and columns:
///
///   E_{n,m}(k) = C(nm,k) - sum_{(r,c) != (0,0)} C(n,r) C(m,c) E_{n-r,m-c}(k)
///
/// with E_{0,0} = 1 and E_{0,m} = E_{n,0} = 0 otherwise. Fills `memo`
/// bottom-up for every sub-board n' <= n, m' <= m.
IntPolynomial edge_cover_poly_recursive(BoardDims dims, EdgeCoverMemo& memo);
IntPolynomial edge_cover_poly_recursive(BoardDims dims);

/// Domination polynomial by subtracting every non-dominating placement
/// (r >= 1 empty rows and c >= 1 empty columns, the rest fully covered):
///
///   d(k) = C(nm,k) - sum_{r>=1, c>=1} C(n,r) C(m,c) E_{n-r,m-c}(k)
///
/// Throws DomainError for an empty board.
IntPolynomial domination_poly_recursive(BoardDims dims, EdgeCoverMemo& memo);
IntPolynomial domination_poly_recursive(BoardDims dims);

/// d(k) = C(nm,k) - nm C((n-1)(m-1), k), valid for k > nm - n - m - min(n,m) + 2.
/// Throws DomainError for an empty board or k at or below that threshold.
BigInt high_density_coefficient(BoardDims dims, std::uint64_t k);

/// The exclusive lower bound on k accepted by high_density_coefficient.
std::int64_t high_density_threshold(BoardDims dims);

}  // namespace rookdom
