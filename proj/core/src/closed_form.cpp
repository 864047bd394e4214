#include "rookdom/closed_form.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace rookdom {
namespace {

// (-1)^e as a BigInt scale factor.
BigInt sign_of(std::uint64_t e) { return (e & 1) ? BigInt(-1) : BigInt(1); }

// In-place multiply of a coefficient vector by (1 + x).
void times_one_plus_x(std::vector<BigInt>& v) {
  v.emplace_back(0);
  for (std::size_t i = v.size() - 1; i > 0; --i) v[i] += v[i - 1];
}

// (1+x)^k - 1 from (1+x)^k.
IntPolynomial minus_one(std::vector<BigInt> one_plus_x_pow) {
  one_plus_x_pow[0] -= 1;
  return IntPolynomial(std::move(one_plus_x_pow));
}

// acc[i] += w * C(p, i) for i = 0..p.
void add_binomial_row(std::vector<BigInt>& acc, std::uint64_t p, const BigInt& w) {
  BigInt c = 1;
  acc[0] += w;
  for (std::uint64_t i = 0; i < p; ++i) {
    c *= static_cast<unsigned long>(p - i);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
    mpz_addmul(acc[i + 1].get_mpz_t(), w.get_mpz_t(), c.get_mpz_t());
  }
}

}  // namespace

IntPolynomial edge_cover_poly(BoardDims dims) {
  const std::uint32_t n = dims.rows;
  const std::uint32_t m = dims.cols;
  std::vector<BigInt> acc(dims.cells() + 1);
  std::vector<BigInt> power{BigInt(1)};  // (1+x)^k
  for (std::uint32_t k = 0; k <= m; ++k) {
    if (k > 0) times_one_plus_x(power);
    const BigInt scale = sign_of(m - k) * binomial(m, k);
    add_scaled(acc, poly_pow(minus_one(power), n), scale);
  }
  return IntPolynomial(std::move(acc));
}

IntPolynomial domination_poly_closed(BoardDims dims) {
  const std::uint32_t n = dims.rows;
  const std::uint32_t m = dims.cols;
  std::vector<BigInt> acc(dims.cells() + 1);
  add_scaled(acc, poly_pow(minus_one(binomial_row(n)), m), BigInt(1));

  std::vector<BigInt> power{BigInt(1)};
  for (std::uint32_t k = 0; k < m; ++k) {
    if (k > 0) times_one_plus_x(power);
    // -(-1)^m (-1)^k = (-1)^(m+k+1)
    const BigInt scale = sign_of(std::uint64_t{m} + k + 1) * binomial(m, k);
    add_scaled(acc, poly_pow(minus_one(power), n), scale);
  }
  return IntPolynomial(std::move(acc));
}

IntPolynomial domination_poly_symmetric(BoardDims dims) {
  const std::uint32_t n = dims.rows;
  const std::uint32_t m = dims.cols;
  const std::uint64_t cells = dims.cells();
  // weight[p] is the coefficient of (1+x)^p in the whole expression.
  std::vector<BigInt> weight(cells + 1);

  // ((1+x)^n - 1)^m = sum_j C(m,j) (-1)^(m-j) (1+x)^(nj), and the same with n, m swapped.
  const std::vector<BigInt> row_n = binomial_row(n);
  const std::vector<BigInt> row_m = binomial_row(m);
  for (std::uint32_t j = 0; j <= m; ++j) {
    const std::uint64_t p = std::uint64_t{n} * j;
    if ((m - j) & 1) weight[p] -= row_m[j]; else weight[p] += row_m[j];
  }
  for (std::uint32_t j = 0; j <= n; ++j) {
    const std::uint64_t p = std::uint64_t{m} * j;
    if ((n - j) & 1) weight[p] -= row_n[j]; else weight[p] += row_n[j];
  }

  for (std::uint32_t l = 0; l <= n; ++l) {
    for (std::uint32_t k = 0; k <= m; ++k) {
      // -(-1)^(n+m) (-1)^(k+l)
      const bool negative = ((std::uint64_t{n} + m + k + l) & 1) == 0;
      BigInt t = row_n[l] * row_m[k];
      const std::uint64_t p = std::uint64_t{k} * l;
      if (negative) weight[p] -= t; else weight[p] += t;
    }
  }

  std::vector<BigInt> acc(cells + 1);
  for (std::uint64_t p = 0; p <= cells; ++p) {
    if (weight[p] != 0) add_binomial_row(acc, p, weight[p]);
  }
  return IntPolynomial(std::move(acc));
}

BigInt total_dominating_sets(BoardDims dims) {
  const std::uint32_t n = dims.rows;
  const std::uint32_t m = dims.cols;
  auto pow2 = [](std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
  };
  auto pow_big = [](const BigInt& b, std::uint64_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
  };

  BigInt total = pow_big(pow2(n) - 1, m) + pow_big(pow2(m) - 1, n);
  BigInt sum = 0;
  for (std::uint32_t l = 0; l <= n; ++l) {
    for (std::uint32_t k = 0; k <= m; ++k) {
      BigInt t = binomial(n, l) * binomial(m, k) * pow2(std::uint64_t{k} * l);
      if ((k + l) & 1) sum -= t; else sum += t;
    }
  }
  if ((std::uint64_t{n} + m) & 1) total += sum; else total -= sum;
  return total;
}

std::uint32_t domination_number(BoardDims dims) {
  if (dims.empty()) throw DomainError("domination number is undefined for the empty board " + to_string(dims));
  return std::min(dims.rows, dims.cols);
}

BigInt lowest_coefficient(BoardDims dims) {
  if (dims.empty()) throw DomainError("lowest coefficient is undefined for the empty board " + to_string(dims));
  const std::uint32_t lo = std::min(dims.rows, dims.cols);
  const std::uint32_t hi = std::max(dims.rows, dims.cols);
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), hi, lo);
  if (lo != hi) return r;
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), lo);
  return 2 * r - fact;
}

}  // namespace rookdom
