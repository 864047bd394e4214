#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rookdom {

using BigInt = mpz_class;

/// Dense univariate polynomial with exact integer coefficients.
///
/// coeffs()[i] is the coefficient of x^i. Trailing zeros are stripped on
/// construction, so the zero polynomial has an empty coefficient list and
/// degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  /// (1 + x)^e, built from a binomial row.
  static IntPolynomial one_plus_x_pow(std::uint64_t e);

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k; zero past the degree.
  BigInt coeff(std::size_t k) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// Coefficients zero-extended (never truncated) to `length` entries.
  std::vector<BigInt> padded(std::size_t length) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_square(const IntPolynomial& a);
/// a^e by binary exponentiation; a^0 = 1 for every a, including a = 0.
IntPolynomial poly_pow(const IntPolynomial& a, std::uint64_t e);
BigInt poly_eval_int(const IntPolynomial& a, const BigInt& x0);

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) { return poly_add(a, b); }
inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return poly_sub(a, b); }
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return poly_mul(a, b); }

/// acc[i] += scale * p[i]; acc must have at least deg(p) + 1 entries.
void add_scaled(std::vector<BigInt>& acc, const IntPolynomial& p, const BigInt& scale);

/// Exact C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::uint64_t n, std::int64_t k);
/// C(n, 0), ..., C(n, n).
std::vector<BigInt> binomial_row(std::uint64_t n);

/// Human-readable form in ascending powers: "6*x^2 + 4*x^3 + x^4".
std::string to_string(const IntPolynomial& p);

}  // namespace rookdom
