#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "format.hpp"
#include "method.hpp"

namespace rookdom::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

/// Parses `args` (without the program name) and runs the chosen subcommand.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

struct PolyRequest {
  BoardDims dims;
  Method method = Method::closed;
  Format format = Format::text;
};
int run_poly(const PolyRequest& req, std::ostream& out, std::ostream& err);

struct CheckRequest {
  std::uint32_t max_n = 1;
  std::uint32_t max_m = 1;
  std::uint64_t oracle_cap = 20;
  /// Test hook: may alter any computed polynomial before comparison.
  std::function<void(Method, BoardDims, IntPolynomial&)> tamper;
};
int run_check(const CheckRequest& req, std::ostream& out, std::ostream& err);

struct EvalRequest {
  BoardDims dims;
  std::string x;
};
int run_eval(const EvalRequest& req, std::ostream& out, std::ostream& err);

struct SequenceRequest {
  std::string id;
  std::uint32_t limit = 1;
  bool json = false;
};
int run_sequence(const SequenceRequest& req, std::ostream& out, std::ostream& err);

struct BenchRequest {
  BoardDims dims;
  std::vector<Method> methods{Method::closed};
  std::uint32_t repeats = 3;
};
int run_bench(const BenchRequest& req, std::ostream& out, std::ostream& err);

}  // namespace rookdom::cli
