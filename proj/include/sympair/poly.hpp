#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympair/matrix.hpp"
#include "sympair/rational.hpp"

namespace sympair {

/// Univariate polynomial over Q in t; coefficient i multiplies t^i.
/// Trailing zero coefficients are always stripped, so the zero
/// polynomial has no coefficients and degree -1.
class RPoly {
 public:
  RPoly() = default;
  explicit RPoly(std::vector<Rational> coefficients);

  static RPoly constant(const Rational& c);
  static RPoly monomial(const Rational& c, unsigned degree);
  /// prod_r (t - r)
  static RPoly from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(unsigned i) const;
  Rational leading() const;

  Rational evaluate(const Rational& t) const;
  /// Horner evaluation with t replaced by a square matrix.
  RMatrix evaluate(const RMatrix& a) const;

  friend bool operator==(const RPoly&, const RPoly&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

RPoly operator+(const RPoly& a, const RPoly& b);
RPoly operator-(const RPoly& a, const RPoly& b);
RPoly operator*(const RPoly& a, const RPoly& b);

/// The q with q*q == p and positive leading coefficient, if one exists over Q.
std::optional<RPoly> exact_sqrt(const RPoly& p);

/// Coefficients as "num/den" strings, lowest degree first.
std::vector<std::string> to_strings(const RPoly& p);
std::string to_string(const RPoly& p);

}  // namespace sympair
