#pragma once

#include <chrono>
#include <optional>
#include <string_view>

#include "rookdom/board.hpp"
#include "rookdom/polynomial.hpp"

namespace rookdom::cli {

enum class Method { closed, symmetric, recursive, oracle };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// One polynomial computed by one method, with its wall time.
struct MethodReport {
  Method method;
  BoardDims dims;
  IntPolynomial poly;
  std::chrono::nanoseconds elapsed;
};

/// Domination polynomial of `dims` by `method`. Empty boards give 1 for the
/// formula methods; recursive and oracle throw DomainError on them, and
/// oracle throws CapacityError past its cap.
IntPolynomial compute(Method method, BoardDims dims);

MethodReport run_method(Method method, BoardDims dims);

}  // namespace rookdom::cli
