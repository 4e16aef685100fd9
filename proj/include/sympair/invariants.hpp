#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sympair/matrix.hpp"
#include "sympair/pairs.hpp"
#include "sympair/poly.hpp"
#include "sympair/rational.hpp"
#include "sympair/tuples.hpp"

namespace sympair {

/// Tr(x_1^{a_1} ... x_d^{a_d}) for AI and AII.
struct PowerWord {
  std::vector<unsigned> exponents;
  friend bool operator==(const PowerWord&, const PowerWord&) = default;
};

/// Tr(M_1 ... M_l) for the block kinds. Factor (a, b) is Q_a R_b for AIII
/// and CI and Q_a Q_b^t for BDI. Indices are 0-based.
struct BlockWord {
  std::vector<std::pair<std::size_t, std::size_t>> factors;
  friend bool operator==(const BlockWord&, const BlockWord&) = default;
};

class TraceWord {
 public:
  /// Throws DomainError unless kind is AI or AII.
  static TraceWord power(PairKind kind, std::vector<unsigned> exponents);
  /// Throws DomainError unless kind is AIII, BDI or CI.
  static TraceWord product(PairKind kind, std::vector<std::pair<std::size_t, std::size_t>> factors);
  /// BDI shorthand: Tr(Q_{n_1} Q_{n_1}^t ... Q_{n_l} Q_{n_l}^t).
  static TraceWord squares(std::vector<std::size_t> indices);

  PairKind kind() const { return kind_; }
  bool is_power() const { return std::holds_alternative<PowerWord>(body_); }
  const PowerWord& power_word() const { return std::get<PowerWord>(body_); }
  const BlockWord& block_word() const { return std::get<BlockWord>(body_); }

  /// The word for the constant function 1 (all exponents zero, or no factors).
  bool is_constant() const;
  /// Total degree in the Cartan coordinates: sum of exponents, or twice
  /// the number of factors.
  unsigned degree() const;
  /// Smallest tuple length the word can be evaluated on.
  std::size_t min_tuple_length() const;

  friend bool operator==(const TraceWord&, const TraceWord&) = default;

 private:
  TraceWord(PairKind kind, std::variant<PowerWord, BlockWord> body)
      : kind_(kind), body_(std::move(body)) {}
  PairKind kind_;
  std::variant<PowerWord, BlockWord> body_;
};

/// det(T_1 (x) A_1 + ... + T_d (x) A_d) with A_i the n x n block of the
/// i-th BDI matrix (n = m).
struct KroneckerDetInvariant {
  std::size_t r = 0;
  std::vector<RMatrix> t;
  /// Throws DomainError unless every T_i is r x r with r >= 1.
  static KroneckerDetInvariant make(std::size_t r, std::vector<RMatrix> t);
};

/// Evaluates many words on one tuple, reusing matrix powers and block
/// products between words.
class WordEvaluator {
 public:
  explicit WordEvaluator(const CommutingTuple& t);

  /// The matrix whose trace the word takes. AI/AII: ambient size; block
  /// kinds: n x n.
  RMatrix word_matrix(const TraceWord& w);
  Rational trace(const TraceWord& w) { return word_matrix(w).trace(); }

 private:
  const RMatrix& power(std::size_t i, unsigned e);
  const RMatrix& factor(std::size_t a, std::size_t b);
  void check(const TraceWord& w) const;

  const CommutingTuple& tuple_;
  std::vector<BlockParts> blocks_;
  std::map<std::pair<std::size_t, unsigned>, RMatrix> powers_;
  std::map<std::pair<std::size_t, std::size_t>, RMatrix> factors_;
};

Rational eval_trace_word(const TraceWord& w, const CommutingTuple& t);

/// The word's restriction to the Cartan subspace evaluated at pt:
/// AI sum_j prod_i b_j(y_i)^{a_i}; AII twice that; block kinds
/// sum_j prod_(a,b) b_j(y_a) b_j(y_b).
Rational restrict_trace_word(const TraceWord& w, const CartanPoint& pt);

/// N+(x) = Pf(W x) for x in g1 of AII; N+(x)^2 = det(x).
Rational pfaffian_norm(const RMatrix& x, const PairDescriptor& p);

Rational eval_kron_det(const KroneckerDetInvariant& inv, const CommutingTuple& t);
/// prod_j det(sum_i b_j(y_i) T_i), the restriction of the Kronecker invariant.
Rational restrict_kron_det(const KroneckerDetInvariant& inv, const CartanPoint& pt);

/// Characteristic polynomial of x_1^{a_1} ... x_d^{a_d} (AI/AII).
RPoly charpoly_word(const TraceWord& w, const CommutingTuple& t);

/// Every non-constant word for (kind, d) with degree <= max_degree and,
/// for block words, at most max_length factors. Block words that are
/// cyclic rotations of one another define the same function, so only the
/// lexicographically least rotation is kept. Order is deterministic.
std::vector<TraceWord> enumerate_trace_words(PairKind kind, std::size_t d, unsigned max_degree,
                                             unsigned max_length);

/// Canonical text forms (indices 1-based):
///   AI:tr[a1,...,ad]   AIII:tr[(n1,m1),...]   BDI:tr[(n1,m1),...]
///   BDI:tr[n1,n2,...]  (shorthand for (n1,n1),(n2,n2),...)
///   BDI:kron[r;T1;...;Td]  with each Ti given row-major as r*r rationals
std::string to_text(const TraceWord& w);
std::string to_text(const KroneckerDetInvariant& inv);
std::variant<TraceWord, KroneckerDetInvariant> parse_invariant(std::string_view text);
TraceWord parse_trace_word(std::string_view text);

}  // namespace sympair
