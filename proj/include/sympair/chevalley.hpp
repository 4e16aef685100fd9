#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sympair/invariants.hpp"
#include "sympair/pairs.hpp"
#include "sympair/poly.hpp"
#include "sympair/tuples.hpp"

namespace sympair {

/// The inputs one seeded trial draws: a Cartan point, a group element and
/// the commuting tuple Ad(g) . cartan_embed(point).
struct Trial {
  CartanPoint point;
  RMatrix g;
  CommutingTuple tuple;
};

Trial sample_trial(const PairDescriptor& p, std::size_t d, std::uint64_t seed,
                   unsigned bound = kDefaultBound);

struct IdentityCheck {
  PairDescriptor pair;
  std::size_t d;
  TraceWord word;
  std::uint64_t seed;
  bool passed;
  Rational lhs;  // eval_trace_word on the tuple
  Rational rhs;  // restrict_trace_word on the Cartan point
};

/// eval_trace_word(w, Ad(g) c(pt)) == restrict_trace_word(w, pt) for the
/// (pt, g) drawn from seed. Constant words are rejected with DomainError.
IdentityCheck check_restriction_identity(const PairDescriptor& p, std::size_t d,
                                         const TraceWord& w, std::uint64_t seed,
                                         unsigned bound = kDefaultBound);
/// One word against an existing trial, sharing an evaluator across words.
IdentityCheck check_restriction_identity(const Trial& trial, WordEvaluator& eval,
                                         const TraceWord& w, std::uint64_t seed);
/// Same for many words on one trial.
std::vector<IdentityCheck> check_restriction_identities(const Trial& trial,
                                                        std::span<const TraceWord> words,
                                                        std::uint64_t seed);

struct PolyCheck {
  bool passed;
  RPoly lhs;  // computed from the tuple
  RPoly rhs;  // predicted from the Cartan point
  /// AII: exact square root of lhs, if one exists.
  std::optional<RPoly> root;
};

/// AI: charpoly(x^a) == prod_j (t - prod_i b_j(y_i)^{a_i}).
/// AII: it equals the square of that product, and lhs is checked to be a
/// perfect square whose root is that product.
PolyCheck check_charpoly_factorization(const PairDescriptor& p, std::size_t d,
                                       const std::vector<unsigned>& a, std::uint64_t seed,
                                       unsigned bound = kDefaultBound);
PolyCheck check_charpoly_factorization(const Trial& trial, const TraceWord& w);

/// charpoly(prod Q_{n_i} R_{m_i}) == prod_j (t - prod b_j(y_{n_i}) b_j(y_{m_i}))
/// for AIII, CI and BDI (R replaced by Q^t for BDI).
PolyCheck check_block_charpoly(const PairDescriptor& p, std::size_t d, const TraceWord& w,
                               std::uint64_t seed, unsigned bound = kDefaultBound);
PolyCheck check_block_charpoly(const Trial& trial, const TraceWord& w);

/// Dimension of the degree-delta part of k[c^d]^W: the number of W-orbits
/// of monomials in the n*d coordinates with a non-vanishing orbit sum.
/// Equal to the number of multisets of n exponent columns in N^d of total
/// degree delta, each column of even degree in the hyperoctahedral case.
std::size_t invariant_dim(const PairDescriptor& p, std::size_t d, unsigned delta);

enum class GenerationStatus { Equal, Deficient, Exceeds, Inconclusive };
std::string_view to_string(GenerationStatus s);

/// Extra evaluation points required beyond dim_invariants before a rank
/// shortfall is reported as a failure rather than inconclusive.
inline constexpr std::size_t kRankMargin = 2;
inline constexpr unsigned kGenerationBound = 50;

struct GradedDimReport {
  unsigned degree;
  std::size_t dim_invariants;
  std::size_t dim_spanned;
  std::size_t products;  // number of degree-delta generator products evaluated
  std::size_t samples;
  GenerationStatus status;
  bool equal() const { return status == GenerationStatus::Equal; }
};

/// Evaluates every degree-delta product of restricted generators at
/// `samples` random Cartan points and compares the exact rank of the
/// evaluation matrix with invariant_dim, for delta = 1..max_degree.
std::vector<GradedDimReport> generation_check(const PairDescriptor& p, std::size_t d,
                                              unsigned max_degree, std::size_t samples,
                                              std::uint64_t seed,
                                              unsigned bound = kGenerationBound);

/// Enough samples for every degree up to max_degree to be conclusive.
std::size_t recommended_samples(const PairDescriptor& p, std::size_t d, unsigned max_degree);

struct ValueCheck {
  bool passed;
  Rational lhs;
  Rational rhs;
};

/// restrict(w, weyl . pt) == restrict(w, pt).
ValueCheck check_weyl_invariance(const PairDescriptor& p, std::size_t d, const TraceWord& w,
                                 const WeylElement& weyl, const CartanPoint& pt);

/// det(x) == N+(x)^2 for one AII element.
ValueCheck check_pfaffian_square(const PairDescriptor& p, const RMatrix& x);

struct MultiplicativityCheck {
  bool det_identity;  // det(xy) == det(x) det(y)
  Rational norm_xy;
  Rational norm_x;
  Rational norm_y;
  /// norm_xy / (norm_x norm_y) when that is +-1; 0 when degenerate or
  /// when the ratio is not a sign.
  int sign;
};

/// x, y commuting members of an AII tuple.
MultiplicativityCheck check_norm_multiplicativity(const PairDescriptor& p, const RMatrix& x,
                                                  const RMatrix& y);

struct KronCheck {
  bool passed;
  Rational original;    // on Ad(g) c(pt)
  Rational conjugated;  // after a further fresh G0 element
  Rational restricted;  // restrict_kron_det(pt)
};

/// BDI with n = m: the Kronecker determinant is unchanged by a fresh
/// SO_n x SO_n conjugation and agrees with its restriction to c^d.
KronCheck check_kron_det(const Trial& trial, const KroneckerDetInvariant& inv,
                         const RMatrix& fresh_g);

}  // namespace sympair
