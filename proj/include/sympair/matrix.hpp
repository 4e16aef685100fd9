#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sympair/rational.hpp"

namespace sympair {

/// Dense row-major matrix over Q.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> entries() const { return data_; }

  RMatrix transpose() const;
  RMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RMatrix& b);

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  Rational trace() const;

  RMatrix& operator+=(const RMatrix& o);
  RMatrix& operator-=(const RMatrix& o);
  RMatrix& operator*=(const Rational& s);

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RMatrix operator+(RMatrix a, const RMatrix& b);
RMatrix operator-(RMatrix a, const RMatrix& b);
RMatrix operator-(RMatrix a);
RMatrix operator*(const Rational& s, RMatrix a);

/// Exact product. Throws DimensionError unless a.cols() == b.rows().
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);
inline RMatrix operator*(const RMatrix& a, const RMatrix& b) { return mat_mul(a, b); }

/// ab - ba for square matrices of equal size.
RMatrix commutator(const RMatrix& a, const RMatrix& b);

RMatrix mat_pow(const RMatrix& a, unsigned exponent);
RMatrix kronecker(const RMatrix& a, const RMatrix& b);
RMatrix block_diag(const RMatrix& a, const RMatrix& b);

std::string to_string(const RMatrix& a);

}  // namespace sympair
