#include "method.hpp"

#include <algorithm>

#include "rookdom/closed_form.hpp"
#include "rookdom/oracle.hpp"
#include "rookdom/recursion.hpp"

namespace rookdom::cli {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::closed: return "closed";
    case Method::symmetric: return "symmetric";
    case Method::recursive: return "recursive";
    case Method::oracle: return "oracle";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::closed, Method::symmetric, Method::recursive, Method::oracle}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

IntPolynomial compute(Method method, BoardDims dims) {
  switch (method) {
    case Method::closed: return domination_poly_closed(dims);
    case Method::symmetric: return domination_poly_symmetric(dims);
    case Method::recursive: return domination_poly_recursive(dims);
    case Method::oracle: return brute_force_domination(dims).to_polynomial();
  }
  return {};
}

MethodReport run_method(Method method, BoardDims dims) {
  const auto start = std::chrono::steady_clock::now();
  IntPolynomial poly = compute(method, dims);
  const auto stop = std::chrono::steady_clock::now();
  // steady_clock can tick coarser than the work on tiny boards.
  auto elapsed = std::max(std::chrono::nanoseconds(1),
                          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start));
  return {method, dims, std::move(poly), elapsed};
}

}  // namespace rookdom::cli
