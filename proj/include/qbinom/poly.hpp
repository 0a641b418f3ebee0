#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbinom/checked.hpp"

namespace qbinom {

// Dense univariate polynomial with exact 64-bit integer coefficients.
// coeffs()[i] is the coefficient of degree i; trailing zeros are trimmed,
// so the zero polynomial is the empty sequence and equality is plain
// sequence equality. Every operation reports overflow instead of wrapping.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(std::int64_t c) {
    return c == 0 ? Polynomial{} : Polynomial{{c}};
  }

  // c * x^degree
  static Polynomial monomial(std::int64_t c, int degree);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::int64_t coeff(int deg) const {
    return (deg >= 0 && deg < static_cast<int>(coeffs_.size())) ? coeffs_[deg] : 0;
  }

  bool operator==(const Polynomial&) const = default;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<std::int64_t> coeffs_;
};

// base^exponent with pow(p, 0) == 1, including for the zero polynomial.
Polynomial pow(const Polynomial& base, int exponent);

// p * x^degree.
Polynomial shifted(const Polynomial& p, int degree);

// Coefficient sequence equal to its own reversal; the zero polynomial
// counts as palindromic.
bool is_palindromic(const Polynomial& p);

// Exact Horner evaluation.
std::int64_t eval_at(const Polynomial& p, std::int64_t x0);

// The Gaussian coefficient [n choose k]_q, computed by the q-Pascal
// recursion [n,k] = [n-1,k-1] + q^k [n-1,k]. Zero polynomial when k < 0
// or k > n; the constant 1 when k == 0 or k == n.
Polynomial gaussian(int n, int k);

// Ascending-degree text form, e.g. "1 + q + 2*q^2". Zero terms omitted,
// zero polynomial rendered as "0".
std::string to_string(const Polynomial& p, std::string_view variable = "q");

}  // namespace qbinom
