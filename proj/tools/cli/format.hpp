#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "method.hpp"

namespace rookdom::cli {

enum class Format { text, json, csv };

std::optional<Format> parse_format(std::string_view name);

// All renderers end with a newline. JSON and CSV always carry nm + 1
// entries (k = 0..nm) with coefficients as decimal strings / integers.
std::string render_text(const IntPolynomial& poly);
std::string render_json(const IntPolynomial& poly, BoardDims dims, Method method);
std::string render_csv(const IntPolynomial& poly, BoardDims dims);
std::string render(Format format, const IntPolynomial& poly, BoardDims dims, Method method);

// Inverse of the JSON and CSV renderers; throw std::invalid_argument on malformed input.
std::vector<BigInt> parse_json_coeffs(std::string_view json);
std::vector<BigInt> parse_csv_coeffs(std::string_view csv);

/// Strict decimal integer with optional leading '-'.
std::optional<BigInt> parse_exact_integer(std::string_view text);

/// FNV-1a over the decimal coefficient list, for compact equality reporting.
std::string result_hash(const IntPolynomial& poly);

}  // namespace rookdom::cli
