#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rookdom {

/// An n x m chessboard: `rows` = n, `cols` = m. Either may be zero.
struct BoardDims {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;

  constexpr std::uint64_t cells() const { return std::uint64_t{rows} * cols; }
  constexpr bool empty() const { return rows == 0 || cols == 0; }
  constexpr BoardDims transposed() const { return {cols, rows}; }

  friend constexpr bool operator==(BoardDims, BoardDims) = default;
  friend constexpr auto operator<=>(BoardDims, BoardDims) = default;
};

std::string to_string(BoardDims dims);

/// An operation was asked for something it does not define
/// (an empty board, a coefficient outside a formula's range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A board exceeds a hard enumeration limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace rookdom
