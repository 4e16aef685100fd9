#include "sympair/linalg.hpp"

#include <utility>
#include <vector>

#include "sympair/errors.hpp"

namespace sympair {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

Integer lcm_of_denominators(std::span<const Rational> xs) {
  Integer l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

// Scales each row by the lcm of its denominators. The product of the
// scale factors is returned through `scale`.
IntRows integer_rows(const RMatrix& a, Integer& scale) {
  IntRows m(a.rows(), std::vector<Integer>(a.cols()));
  scale = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Integer l = lcm_of_denominators(a.entries().subspan(r * a.cols(), a.cols()));
    scale *= l;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rational& x = a(r, c);
      m[r][c] = x.get_num() * (l / x.get_den());
    }
  }
  return m;
}

void divide_exact(Integer& x, const Integer& d) {
  if (d == 1) return;
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
    throw InvariantViolation("fraction-free elimination produced an inexact division");
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

}  // namespace

Rational det(const RMatrix& a) {
  if (!a.is_square()) throw DimensionError("det of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer scale;
  IntRows m = integer_rows(a, scale);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        divide_exact(m[i][j], prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational result(m[n - 1][n - 1] * sign, scale);
  result.canonicalize();
  return result;
}

std::size_t rank(const RMatrix& a) {
  Integer scale;
  IntRows m = integer_rows(a, scale);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        divide_exact(m[i][j], prev);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

RPoly charpoly(const RMatrix& a) {
  if (!a.is_square()) throw DimensionError("charpoly of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RMatrix m = RMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RMatrix am = a * m;
    c[n - k] = -am.trace() / Rational(static_cast<long>(k));
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
      m = std::move(am);
    }
  }
  return RPoly(std::move(c));
}

Rational pfaffian(const RMatrix& a) {
  if (!a.is_square()) throw DimensionError("pfaffian of non-square matrix");
  if (a.rows() % 2 != 0) throw DomainError("pfaffian of odd-size matrix");
  if (!a.is_skew_symmetric()) throw DomainError("pfaffian of non-skew-symmetric matrix");
  const std::size_t half = a.rows() / 2;
  if (half == 0) return 1;

  // Pf(L a) = L^half Pf(a) for the common denominator L.
  const Integer l = lcm_of_denominators(a.entries());
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());

  int sign = 1;
  Integer prev = 1;
  Integer pf;
  while (true) {
    const std::size_t size = m.size();
    std::size_t k = 1;
    while (k < size && m[0][k] == 0) ++k;
    if (k == size) return 0;
    if (k != 1) {
      // Simultaneous row/column swap 1 <-> k negates the Pfaffian.
      std::swap(m[1], m[k]);
      for (auto& row : m) std::swap(row[1], row[k]);
      sign = -sign;
    }
    const Integer pivot = m[0][1];
    if (size == 2) {
      pf = pivot;
      break;
    }
    std::vector<std::vector<Integer>> next(size - 2, std::vector<Integer>(size - 2));
    for (std::size_t i = 2; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        Integer v = pivot * m[i][j] + m[1][i] * m[0][j] - m[0][i] * m[1][j];
        divide_exact(v, prev);
        next[i - 2][j - 2] = v;
        next[j - 2][i - 2] = -v;
      }
    }
    prev = pivot;
    m = std::move(next);
  }

  Integer denom;
  mpz_pow_ui(denom.get_mpz_t(), l.get_mpz_t(), half);
  // Standard Pf of [[0,I],[-I,0]] is (-1)^{half(half-1)/2}; flip to make it +1.
  if ((half * (half - 1) / 2) % 2 == 1) sign = -sign;
  Rational result(pf * sign, denom);
  result.canonicalize();
  return result;
}

RMatrix inverse(const RMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RMatrix m = a;
  RMatrix inv = RMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError("inverse of singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RMatrix standard_symplectic(std::size_t n) {
  RMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

}  // namespace sympair
