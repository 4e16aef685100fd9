#include "sympair/poly.hpp"

#include <algorithm>

#include "sympair/errors.hpp"

namespace sympair {

RPoly::RPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

void RPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RPoly RPoly::constant(const Rational& c) { return RPoly({c}); }

RPoly RPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RPoly(std::move(v));
}

RPoly RPoly::from_roots(std::span<const Rational> roots) {
  RPoly p = constant(1);
  for (const auto& r : roots) p = p * RPoly({-r, Rational(1)});
  return p;
}

Rational RPoly::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational RPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RMatrix RPoly::evaluate(const RMatrix& a) const {
  if (!a.is_square()) throw DimensionError("polynomial evaluated at non-square matrix");
  const std::size_t n = a.rows();
  RMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

RPoly operator+(const RPoly& a, const RPoly& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return RPoly(std::move(c));
}

RPoly operator-(const RPoly& a, const RPoly& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return RPoly(std::move(c));
}

RPoly operator*(const RPoly& a, const RPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  return RPoly(std::move(c));
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

}  // namespace

std::optional<RPoly> exact_sqrt(const RPoly& p) {
  if (p.is_zero()) return RPoly{};
  if (p.degree() % 2 != 0) return std::nullopt;
  const auto lead = rational_sqrt(p.leading());
  if (!lead) return std::nullopt;

  // Fix the top half of the coefficients of q from the top half of p,
  // then confirm by squaring.
  const unsigned k = static_cast<unsigned>(p.degree() / 2);
  std::vector<Rational> q(k + 1);
  q[k] = *lead;
  for (unsigned step = 1; step <= k; ++step) {
    const unsigned i = k - step;
    Rational rest = 0;
    for (unsigned a = i + 1; a < k; ++a) {
      const unsigned b = k + i - a;
      if (b > i && b < k) rest += q[a] * q[b];
    }
    q[i] = (p.coefficient(k + i) - rest) / (2 * q[k]);
  }
  RPoly root(std::move(q));
  if (root * root != p) return std::nullopt;
  return root;
}

std::vector<std::string> to_strings(const RPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

std::string to_string(const RPoly& p) {
  std::string s = "[";
  const auto parts = to_strings(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + "]";
}

}  // namespace sympair
