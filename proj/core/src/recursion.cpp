#include "rookdom/recursion.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace rookdom {

const IntPolynomial* EdgeCoverMemo::find(BoardDims dims) const {
  auto it = table_.find({dims.rows, dims.cols});
  return it == table_.end() ? nullptr : &it->second;
}

const IntPolynomial& EdgeCoverMemo::insert(BoardDims dims, IntPolynomial poly) {
  return table_.try_emplace({dims.rows, dims.cols}, std::move(poly)).first->second;
}

namespace {

// C(nm, k) for all k, minus sum over (r, c) in [r_min..n] x [c_min..m] of
// C(n,r) C(m,c) E_{n-r,m-c}. Every needed E must already be in the memo.
IntPolynomial subtract_uncovered(BoardDims dims, std::uint32_t r_min, std::uint32_t c_min,
                                 const EdgeCoverMemo& memo) {
  const std::uint32_t n = dims.rows;
  const std::uint32_t m = dims.cols;
  std::vector<BigInt> acc = binomial_row(dims.cells());
  const std::vector<BigInt> row_n = binomial_row(n);
  const std::vector<BigInt> row_m = binomial_row(m);
  BigInt scale;
  for (std::uint32_t r = r_min; r <= n; ++r) {
    for (std::uint32_t c = c_min; c <= m; ++c) {
      if (r == 0 && c == 0) continue;
      const IntPolynomial* sub = memo.find({n - r, m - c});
      if (sub->is_zero()) continue;
      scale = -(row_n[r] * row_m[c]);
      add_scaled(acc, *sub, scale);
    }
  }
  return IntPolynomial(std::move(acc));
}

void fill_memo(BoardDims dims, EdgeCoverMemo& memo) {
  for (std::uint32_t a = 0; a <= dims.rows; ++a) {
    for (std::uint32_t b = 0; b <= dims.cols; ++b) {
      const BoardDims sub{a, b};
      if (memo.find(sub) != nullptr) continue;
      if (sub.empty()) {
        memo.insert(sub, a == 0 && b == 0 ? IntPolynomial::constant(1) : IntPolynomial{});
        continue;
      }
      memo.insert(sub, subtract_uncovered(sub, 0, 0, memo));
    }
  }
}

}  // namespace

IntPolynomial edge_cover_poly_recursive(BoardDims dims, EdgeCoverMemo& memo) {
  fill_memo(dims, memo);
  return *memo.find(dims);
}

IntPolynomial edge_cover_poly_recursive(BoardDims dims) {
  EdgeCoverMemo memo;
  return edge_cover_poly_recursive(dims, memo);
}

IntPolynomial domination_poly_recursive(BoardDims dims, EdgeCoverMemo& memo) {
  if (dims.empty()) throw DomainError("recursive domination polynomial needs a nonempty board, got " + to_string(dims));
  fill_memo({dims.rows - 1, dims.cols - 1}, memo);
  return subtract_uncovered(dims, 1, 1, memo);
}

IntPolynomial domination_poly_recursive(BoardDims dims) {
  EdgeCoverMemo memo;
  return domination_poly_recursive(dims, memo);
}

std::int64_t high_density_threshold(BoardDims dims) {
  const auto n = static_cast<std::int64_t>(dims.rows);
  const auto m = static_cast<std::int64_t>(dims.cols);
  return n * m - n - m - std::min(n, m) + 2;
}

BigInt high_density_coefficient(BoardDims dims, std::uint64_t k) {
  if (dims.empty()) throw DomainError("high-density formula needs a nonempty board, got " + to_string(dims));
  const std::int64_t threshold = high_density_threshold(dims);
  if (static_cast<std::int64_t>(k) <= threshold) {
    throw DomainError("high-density formula for " + to_string(dims) + " holds only for k > " +
                      std::to_string(threshold) + ", got k = " + std::to_string(k));
  }
  const std::uint64_t cells = dims.cells();
  const std::uint64_t free_cells = std::uint64_t{dims.rows - 1} * (dims.cols - 1);
  const auto kk = static_cast<std::int64_t>(k);
  return binomial(cells, kk) - BigInt(static_cast<unsigned long>(cells)) * binomial(free_cells, kk);
}

}  // namespace rookdom
