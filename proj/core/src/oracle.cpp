#include "rookdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

namespace rookdom {
namespace {

void check_capacity(BoardDims dims) {
  if (dims.empty()) throw DomainError("brute-force oracle needs a nonempty board, got " + to_string(dims));
  if (dims.cells() > kOracleMaxCells) {
    throw CapacityError("brute-force oracle is capped at nm <= " + std::to_string(kOracleMaxCells) +
                        " squares; board " + to_string(dims) + " has " + std::to_string(dims.cells()));
  }
}

// Coverage of every subset of `masks`, built from the subset without its lowest bit.
std::vector<std::uint32_t> subset_coverage(std::span<const std::uint32_t> masks) {
  std::vector<std::uint32_t> cov(std::size_t{1} << masks.size());
  for (std::size_t s = 1; s < cov.size(); ++s) {
    cov[s] = cov[s & (s - 1)] | masks[std::countr_zero(s)];
  }
  return cov;
}

// Counts subsets S of the squares, by |S|, whose masks OR to `target`.
// The squares are split into a low and a high half; the coverage of S is
// lo_cov[S_lo] | hi_cov[S_hi].
CoeffTable count_covering(std::span<const std::uint32_t> masks, std::uint32_t target, unsigned workers) {
  const std::size_t total = masks.size();
  const std::size_t lo_bits = total / 2;
  const auto lo_cov = subset_coverage(masks.first(lo_bits));
  const auto hi_cov = subset_coverage(masks.subspan(lo_bits));

  const std::size_t hi_count = hi_cov.size();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(hi_count)));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(total + 1));

  auto run = [&](unsigned w) {
    auto& counts = partial[w];
    for (std::size_t hi = w; hi < hi_count; hi += workers) {
      const std::uint32_t hc = hi_cov[hi];
      const int hp = std::popcount(hi);
      for (std::size_t lo = 0; lo < lo_cov.size(); ++lo) {
        if ((hc | lo_cov[lo]) == target) ++counts[hp + std::popcount(lo)];
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  CoeffTable out;
  out.counts.assign(total + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t k = 0; k <= total; ++k) out.counts[k] += static_cast<unsigned long>(p[k]);
  }
  return out;
}

}  // namespace

CoeffTable CoeffTable::from_polynomial(const IntPolynomial& p, std::size_t length) {
  if (p.degree() >= static_cast<std::int64_t>(length)) {
    throw DomainError("polynomial of degree " + std::to_string(p.degree()) + " does not fit a table of length " +
                      std::to_string(length));
  }
  CoeffTable t{p.padded(length)};
  for (const auto& c : t.counts) {
    if (c < 0) throw DomainError("coefficient table entries must be non-negative");
  }
  return t;
}

RookBoard::RookBoard(BoardDims dims) : dims_(dims) {
  check_capacity(dims);
  const std::uint32_t n = dims.rows;
  const std::uint32_t m = dims.cols;
  full_ = static_cast<std::uint32_t>((std::uint64_t{1} << dims.cells()) - 1);
  neighbors_.resize(dims.cells());
  closed_.resize(dims.cells());
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      std::uint32_t mask = 0;
      for (std::uint32_t i = 0; i < m; ++i) mask |= 1u << (x * m + i);
      for (std::uint32_t i = 0; i < n; ++i) mask |= 1u << (i * m + y);
      const std::uint32_t self = 1u << (x * m + y);
      neighbors_[x * m + y] = mask & ~self;
      closed_[x * m + y] = mask;
    }
  }
}

bool is_dominating(const RookBoard& board, std::uint32_t subset) {
  std::uint32_t covered = 0;
  auto closed = board.closed_masks();
  for (std::uint32_t s = subset; s != 0; s &= s - 1) covered |= closed[std::countr_zero(s)];
  return covered == board.full_mask();
}

CoeffTable brute_force_domination(BoardDims dims, unsigned workers) {
  const RookBoard board(dims);
  return count_covering(board.closed_masks(), board.full_mask(), workers);
}

CoeffTable brute_force_edge_cover(BoardDims dims, unsigned workers) {
  check_capacity(dims);
  const std::uint32_t n = dims.rows;
  const std::uint32_t m = dims.cols;
  // Square (x, y) is the edge joining row vertex x and column vertex n + y.
  std::vector<std::uint32_t> ends(dims.cells());
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) ends[x * m + y] = (1u << x) | (1u << (n + y));
  }
  const std::uint32_t all_vertices = static_cast<std::uint32_t>((std::uint64_t{1} << (n + m)) - 1);
  return count_covering(ends, all_vertices, workers);
}

}  // namespace rookdom
