#include "qbinom/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbinom {

Polynomial Polynomial::monomial(std::int64_t c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (c == 0) return {};
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Polynomial{std::move(v)};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
  }
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  std::vector<std::int64_t> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = checked_neg(coeffs_[i]);
  return Polynomial{std::move(v)};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = checked_add(v[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial{std::move(v)};
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial result = Polynomial::constant(1);
  Polynomial sq = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * sq;
    if (e > 1) sq = sq * sq;
  }
  return result;
}

Polynomial shifted(const Polynomial& p, int degree) {
  if (degree < 0) throw std::invalid_argument("shifted: negative degree");
  if (p.is_zero() || degree == 0) return p;
  std::vector<std::int64_t> v(p.coeffs().size() + static_cast<std::size_t>(degree), 0);
  std::copy(p.coeffs().begin(), p.coeffs().end(), v.begin() + degree);
  return Polynomial{std::move(v)};
}

bool is_palindromic(const Polynomial& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

std::int64_t eval_at(const Polynomial& p, std::int64_t x0) {
  std::int64_t acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = checked_add(checked_mul(acc, x0), *it);
  }
  return acc;
}

Polynomial gaussian(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  // Row r holds [r choose j]_q for j = 0..min(r, k).
  std::vector<Polynomial> row{Polynomial::constant(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<Polynomial> next(static_cast<std::size_t>(std::min(r, k)) + 1);
    next[0] = Polynomial::constant(1);
    for (int j = 1; j < static_cast<int>(next.size()); ++j) {
      Polynomial carry = j < static_cast<int>(row.size()) ? shifted(row[j], j) : Polynomial{};
      next[j] = row[j - 1] + carry;
    }
    row = std::move(next);
  }
  return row[k];
}

std::string to_string(const Polynomial& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    std::int64_t c = p.coeff(d);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mag = std::to_string(c);
    if (c < 0) mag.erase(0, 1);
    if (d == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") {
      out += mag;
      out += "*";
    }
    out += variable;
    if (d > 1) {
      out += "^";
      out += std::to_string(d);
    }
  }
  return out;
}

}  // namespace qbinom
