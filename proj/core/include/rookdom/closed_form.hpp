#pragma once

#include "rookdom/board.hpp"
#include "rookdom/polynomial.hpp"

namespace rookdom {

/// Edge-cover polynomial of the complete bipartite graph K_{n,m}:
///
///   sum_{k=0}^{m} (-1)^{m-k} C(m,k) ((1+x)^k - 1)^n
///
/// The coefficient of x^k counts placements of k rooks that occupy every
/// row and every column. Returns 1 for the 0x0 board and 0 when exactly one
/// side is empty.
IntPolynomial edge_cover_poly(BoardDims dims);

/// Domination polynomial of the n x m rook graph via the single-sum form
///
///   ((1+x)^n - 1)^m - (-1)^m sum_{k=0}^{m-1} (-1)^k C(m,k) ((1+x)^k - 1)^n
///
/// Empty boards give the constant 1.
IntPolynomial domination_poly_closed(BoardDims dims);

/// Same polynomial via the form that is symmetric in n and m:
///
///   ((1+x)^n - 1)^m + ((1+x)^m - 1)^n
///     - (-1)^{n+m} sum_{l=0}^{n} sum_{k=0}^{m} C(n,l) C(m,k) (-1)^{k+l} (1+x)^{kl}
///
/// Every term is a signed multiple of some (1+x)^p, so weights are gathered per
/// exponent p and each binomial row is expanded once.
IntPolynomial domination_poly_symmetric(BoardDims dims);

/// D(1), the total number of dominating sets, evaluated directly in powers of 2.
BigInt total_dominating_sets(BoardDims dims);

/// min(n, m). Throws DomainError for an empty board.
std::uint32_t domination_number(BoardDims dims);

/// Number of minimum dominating sets: max(n,m)^min(n,m) when n != m,
/// 2 n^n - n! when n == m. Throws DomainError for an empty board.
BigInt lowest_coefficient(BoardDims dims);

}  // namespace rookdom
