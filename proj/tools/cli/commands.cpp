#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "rookdom/closed_form.hpp"
#include "rookdom/oracle.hpp"
#include "rookdom/recursion.hpp"

namespace rookdom::cli {
namespace {

// Maps library exceptions onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::string join(std::span<const BigInt> values, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < values.size(); ++i) {
    if (!s.empty()) s += ' ';
    s += values[i].get_str();
  }
  return s;
}

}  // namespace

int run_poly(const PolyRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IntPolynomial poly = compute(req.method, req.dims);
    out << render(req.format, poly, req.dims, req.method);
    return kExitOk;
  });
}

int run_check(const CheckRequest& req, std::ostream& out, std::ostream& err) {
  if (req.max_n < 1 || req.max_m < 1) {
    err << "error: --max-n and --max-m must be at least 1\n";
    return kExitUsage;
  }
  if (req.oracle_cap > kOracleMaxCells) {
    err << "error: --oracle-cap " << req.oracle_cap << " exceeds the oracle limit of " << kOracleMaxCells
        << " squares\n";
    return kExitCapacity;
  }

  EdgeCoverMemo memo;
  std::size_t boards = 0;
  std::size_t failures = 0;
  for (std::uint32_t n = 1; n <= req.max_n; ++n) {
    for (std::uint32_t m = 1; m <= req.max_m; ++m) {
      const BoardDims dims{n, m};
      std::vector<std::pair<Method, IntPolynomial>> results;
      results.emplace_back(Method::closed, domination_poly_closed(dims));
      results.emplace_back(Method::symmetric, domination_poly_symmetric(dims));
      results.emplace_back(Method::recursive, domination_poly_recursive(dims, memo));
      if (dims.cells() <= req.oracle_cap) {
        results.emplace_back(Method::oracle, brute_force_domination(dims).to_polynomial());
      }
      if (req.tamper) {
        for (auto& [method, poly] : results) req.tamper(method, dims, poly);
      }

      ++boards;
      const auto mismatch = std::find_if(results.begin() + 1, results.end(),
                                         [&](const auto& r) { return !(r.second == results.front().second); });
      if (mismatch == results.end()) {
        out << to_string(dims) << " pass (" << results.size() << " methods)\n";
        continue;
      }
      ++failures;
      std::size_t k = 0;
      while (results.front().second.coeff(k) == mismatch->second.coeff(k)) ++k;
      out << to_string(dims) << " FAIL at k=" << k << ':';
      for (const auto& [method, poly] : results) out << ' ' << method_name(method) << '=' << poly.coeff(k).get_str();
      out << '\n';
    }
  }
  out << boards << " boards checked, " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitVerificationFailure;
}

int run_eval(const EvalRequest& req, std::ostream& out, std::ostream& err) {
  const auto x0 = parse_exact_integer(req.x);
  if (!x0) {
    err << "error: --x expects an exact integer, got '" << req.x << "'\n";
    return kExitUsage;
  }
  const IntPolynomial poly = domination_poly_closed(req.dims);
  const BigInt value = poly_eval_int(poly, *x0);
  if (*x0 == 1) {
    const BigInt direct = total_dominating_sets(req.dims);
    if (direct != value) {
      err << "error: D(1) = " << value.get_str() << " but the total-count formula gives " << direct.get_str()
          << '\n';
      return kExitVerificationFailure;
    }
  }
  out << value.get_str() << '\n';
  return kExitOk;
}

int run_sequence(const SequenceRequest& req, std::ostream& out, std::ostream& err) {
  if (req.limit < 1) {
    err << "error: --limit must be at least 1\n";
    return kExitUsage;
  }
  // Each entry is one row of terms.
  std::vector<std::vector<BigInt>> rows;
  if (req.id == "A368831") {
    for (std::uint32_t n = 1; n <= req.limit; ++n) {
      const IntPolynomial d = domination_poly_closed({n, n});
      rows.emplace_back(d.coeffs().begin() + n, d.coeffs().end());
    }
  } else if (req.id == "A287274") {
    for (std::uint32_t n = 1; n <= req.limit; ++n) rows.push_back({total_dominating_sets({n, n})});
  } else if (req.id == "A055599") {
    EdgeCoverMemo memo;
    for (std::uint32_t n = 1; n <= req.limit; ++n) {
      const IntPolynomial e = edge_cover_poly_recursive({n, n}, memo);
      rows.emplace_back(e.coeffs().begin() + n, e.coeffs().end());
    }
  } else {
    err << "error: unknown sequence '" << req.id << "' (expected A368831, A287274 or A055599)\n";
    return kExitUsage;
  }

  if (req.json) {
    nlohmann::ordered_json doc;
    doc["id"] = req.id;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& v : row) r.push_back(v.get_str());
      arr.push_back(std::move(r));
    }
    doc["rows"] = std::move(arr);
    out << doc.dump() << '\n';
  } else {
    for (const auto& row : rows) out << join(row, 0) << '\n';
  }
  return kExitOk;
}

int run_bench(const BenchRequest& req, std::ostream& out, std::ostream& err) {
  if (req.repeats < 1) {
    err << "error: --repeats must be at least 1\n";
    return kExitUsage;
  }
  if (req.methods.empty()) {
    err << "error: --methods is empty\n";
    return kExitUsage;
  }
  return guarded(err, [&] {
    struct Row {
      Method method;
      std::chrono::nanoseconds median;
    };
    std::vector<Row> rows;
    std::optional<IntPolynomial> reference;
    for (Method method : req.methods) {
      std::vector<std::chrono::nanoseconds> times;
      for (std::uint32_t i = 0; i < req.repeats; ++i) {
        MethodReport report = run_method(method, req.dims);
        if (!reference) {
          reference = std::move(report.poly);
        } else if (!(report.poly == *reference)) {
          err << "error: " << method_name(method) << " disagrees with " << method_name(req.methods.front())
              << " on " << to_string(req.dims) << " (hash " << result_hash(report.poly) << " vs "
              << result_hash(*reference) << ")\n";
          return static_cast<int>(kExitVerificationFailure);
        }
        times.push_back(report.elapsed);
      }
      std::sort(times.begin(), times.end());
      rows.push_back({method, times[times.size() / 2]});
    }

    out << "board " << to_string(req.dims) << '\n';
    out << "degree " << reference->degree() << '\n';
    out << "result fnv1a64 " << result_hash(*reference) << '\n';
    out << "methods agree:";
    for (Method m : req.methods) out << ' ' << method_name(m);
    out << '\n';
    out << "\n[timings: machine-dependent, " << req.repeats << " repeats, median]\n";
    out << std::left << std::setw(12) << "method" << std::right << std::setw(16) << "median_ns" << std::setw(14)
        << "median_s" << '\n';
    for (const auto& row : rows) {
      out << std::left << std::setw(12) << method_name(row.method) << std::right << std::setw(16)
          << row.median.count() << std::setw(14) << std::fixed << std::setprecision(6)
          << std::chrono::duration<double>(row.median).count() << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination polynomials of rook graphs", "rookdom"};
  app.require_subcommand(1);

  std::function<int()> action;

  PolyRequest poly;
  std::string poly_method = "closed";
  std::string poly_format = "text";
  auto* poly_cmd = app.add_subcommand("poly", "Print the domination polynomial of the n x m rook graph");
  poly_cmd->add_option("--n", poly.dims.rows, "Rows")->required();
  poly_cmd->add_option("--m", poly.dims.cols, "Columns")->required();
  poly_cmd->add_option("--method", poly_method, "closed | symmetric | recursive | oracle")->capture_default_str();
  poly_cmd->add_option("--format", poly_format, "text | json | csv")->capture_default_str();
  poly_cmd->callback([&] {
    action = [&]() -> int {
      auto method = parse_method(poly_method);
      auto format = parse_format(poly_format);
      if (!method) {
        err << "error: unknown method '" << poly_method << "'\n";
        return kExitUsage;
      }
      if (!format) {
        err << "error: unknown format '" << poly_format << "'\n";
        return kExitUsage;
      }
      poly.method = *method;
      poly.format = *format;
      return run_poly(poly, out, err);
    };
  });

  CheckRequest check;
  auto* check_cmd = app.add_subcommand("check", "Cross-validate all methods on every board up to a size");
  check_cmd->add_option("--max-n", check.max_n, "Largest row count")->required();
  check_cmd->add_option("--max-m", check.max_m, "Largest column count")->required();
  check_cmd->add_option("--oracle-cap", check.oracle_cap, "Run the brute-force oracle where nm <= cap")
      ->capture_default_str();
  check_cmd->callback([&] { action = [&] { return run_check(check, out, err); }; });

  EvalRequest eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate D(x) at an integer point");
  eval_cmd->add_option("--n", eval.dims.rows, "Rows")->required();
  eval_cmd->add_option("--m", eval.dims.cols, "Columns")->required();
  eval_cmd->add_option("--x", eval.x, "Exact integer, may be negative")->required();
  eval_cmd->callback([&] { action = [&] { return run_eval(eval, out, err); }; });

  SequenceRequest seq;
  std::string seq_format = "text";
  auto* seq_cmd = app.add_subcommand("sequence", "Generate OEIS A368831, A287274 or A055599 terms");
  seq_cmd->add_option("id", seq.id, "Sequence id")->required();
  seq_cmd->add_option("--limit", seq.limit, "Number of rows (n = 1..limit)")->required();
  seq_cmd->add_option("--format", seq_format, "text | json")->capture_default_str();
  seq_cmd->callback([&] {
    action = [&]() -> int {
      if (seq_format != "text" && seq_format != "json") {
        err << "error: sequence supports --format text or json\n";
        return kExitUsage;
      }
      seq.json = seq_format == "json";
      return run_sequence(seq, out, err);
    };
  });

  BenchRequest bench;
  std::string bench_methods = "closed";
  auto* bench_cmd = app.add_subcommand("bench", "Time methods on one board and verify they agree");
  bench_cmd->add_option("--n", bench.dims.rows, "Rows")->required();
  bench_cmd->add_option("--m", bench.dims.cols, "Columns")->required();
  bench_cmd->add_option("--methods", bench_methods, "Comma-separated methods")->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per method")->capture_default_str();
  bench_cmd->callback([&] {
    action = [&]() -> int {
      bench.methods.clear();
      for (const auto& name : split_list(bench_methods)) {
        auto method = parse_method(name);
        if (!method) {
          err << "error: unknown method '" << name << "'\n";
          return kExitUsage;
        }
        bench.methods.push_back(*method);
      }
      return run_bench(bench, out, err);
    };
  });

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return action ? action() : kExitUsage;
}

}  // namespace rookdom::cli
