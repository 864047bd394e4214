#include "rookdom/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rookdom {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_plus_x_pow(std::uint64_t e) { return IntPolynomial(binomial_row(e)); }

BigInt IntPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

std::vector<BigInt> IntPolynomial::padded(std::size_t length) const {
  std::vector<BigInt> out(coeffs_.begin(), coeffs_.end());
  if (out.size() < length) out.resize(length);
  return out;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out = a.padded(b.coeffs().size());
  auto bc = b.coeffs();
  for (std::size_t i = 0; i < bc.size(); ++i) out[i] += bc[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out = a.padded(b.coeffs().size());
  auto bc = b.coeffs();
  for (std::size_t i = 0; i < bc.size(); ++i) out[i] -= bc[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    const mpz_srcptr ai = ac[i].get_mpz_t();
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, bc[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_square(const IntPolynomial& a) {
  if (a.is_zero()) return {};
  auto ac = a.coeffs();
  const std::size_t len = ac.size();
  std::vector<BigInt> out(2 * len - 1);
  // Off-diagonal products once, doubled afterwards.
  for (std::size_t i = 0; i < len; ++i) {
    if (ac[i] == 0) continue;
    const mpz_srcptr ai = ac[i].get_mpz_t();
    for (std::size_t j = i + 1; j < len; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, ac[j].get_mpz_t());
    }
  }
  for (auto& c : out) mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), 1);
  for (std::size_t i = 0; i < len; ++i) {
    mpz_addmul(out[2 * i].get_mpz_t(), ac[i].get_mpz_t(), ac[i].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_pow(const IntPolynomial& a, std::uint64_t e) {
  IntPolynomial result = IntPolynomial::constant(1);
  if (e == 0) return result;
  IntPolynomial base = a;
  bool first = true;
  while (true) {
    if (e & 1) {
      result = first ? base : poly_mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e == 0) break;
    base = poly_square(base);
  }
  return result;
}

BigInt poly_eval_int(const IntPolynomial& a, const BigInt& x0) {
  BigInt acc = 0;
  auto c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

void add_scaled(std::vector<BigInt>& acc, const IntPolynomial& p, const BigInt& scale) {
  auto pc = p.coeffs();
  if (pc.size() > acc.size()) throw std::out_of_range("add_scaled: accumulator shorter than polynomial");
  const mpz_srcptr s = scale.get_mpz_t();
  for (std::size_t i = 0; i < pc.size(); ++i) mpz_addmul(acc[i].get_mpz_t(), s, pc[i].get_mpz_t());
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  kk = std::min(kk, n - kk);
  BigInt r = 1;
  // r = C(n, i + 1) after step i; each division is exact.
  for (std::uint64_t i = 0; i < kk; ++i) {
    r *= static_cast<unsigned long>(n - i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return r;
}

std::vector<BigInt> binomial_row(std::uint64_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    row[i + 1] = row[i] * static_cast<unsigned long>(n - i);
    mpz_divexact_ui(row[i + 1].get_mpz_t(), row[i + 1].get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return row;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    BigInt mag = abs(c[k]);
    if (first) {
      if (c[k] < 0) os << '-';
    } else {
      os << (c[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace rookdom
