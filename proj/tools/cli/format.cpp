#include "format.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rookdom::cli {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

std::string render_text(const IntPolynomial& poly) { return to_string(poly) + "\n"; }

std::string render_json(const IntPolynomial& poly, BoardDims dims, Method method) {
  nlohmann::ordered_json doc;
  doc["n"] = dims.rows;
  doc["m"] = dims.cols;
  doc["method"] = std::string(method_name(method));
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : poly.padded(dims.cells() + 1)) coeffs.push_back(c.get_str());
  doc["coeffs"] = std::move(coeffs);
  return doc.dump() + "\n";
}

std::string render_csv(const IntPolynomial& poly, BoardDims dims) {
  std::ostringstream os;
  os << "k,count\n";
  const auto coeffs = poly.padded(dims.cells() + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) os << k << ',' << coeffs[k].get_str() << '\n';
  return os.str();
}

std::string render(Format format, const IntPolynomial& poly, BoardDims dims, Method method) {
  switch (format) {
    case Format::text: return render_text(poly);
    case Format::json: return render_json(poly, dims, method);
    case Format::csv: return render_csv(poly, dims);
  }
  return {};
}

std::optional<BigInt> parse_exact_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return std::nullopt;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') return std::nullopt;
  }
  return BigInt(std::string(text), 10);
}

std::vector<BigInt> parse_json_coeffs(std::string_view json) {
  const auto doc = nlohmann::json::parse(json, nullptr, false);
  if (doc.is_discarded() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw std::invalid_argument("expected a JSON object with a \"coeffs\" array");
  }
  std::vector<BigInt> out;
  for (const auto& c : doc["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    auto v = parse_exact_integer(c.get<std::string>());
    if (!v) throw std::invalid_argument("malformed coefficient: " + c.get<std::string>());
    out.push_back(*v);
  }
  return out;
}

std::vector<BigInt> parse_csv_coeffs(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "k,count") throw std::invalid_argument("missing \"k,count\" header");
  std::vector<BigInt> out;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("malformed CSV row: " + line);
    auto k = parse_exact_integer(std::string_view(line).substr(0, comma));
    auto v = parse_exact_integer(std::string_view(line).substr(comma + 1));
    if (!k || !v || *k != static_cast<unsigned long>(out.size())) {
      throw std::invalid_argument("malformed CSV row: " + line);
    }
    out.push_back(*v);
  }
  return out;
}

std::string result_hash(const IntPolynomial& poly) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& c : poly.coeffs()) {
    for (char ch : c.get_str() + ",") {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rookdom::cli
