#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sympair/matrix.hpp"
#include "sympair/random.hpp"
#include "sympair/rational.hpp"

namespace sympair {

enum class PairKind { AI, AII, AIII, BDI, CI };

std::string_view to_string(PairKind kind);
/// Throws DomainError on an unknown name.
PairKind parse_pair_kind(std::string_view name);

/// One classical symmetric pair (g, g0) in a fixed matrix model.
///
///   AI   gl_n,        theta(x) = -x^t,            G0 = SO_n
///   AII  gl_2n,       theta(x) = -W^{-1} x^t W,   G0 = Sp(W)
///   AIII gl_{n+m},    theta(x) = T x T,           G0 = GL_n x GL_m
///   BDI  so_{n+m},    theta(x) = T x T,           G0 = SO_n x SO_m
///   CI   sp(J)_2n,    theta(x) = T x T,           G0 = {diag(A, A^{-t})}
///
/// with T = diag(I, -I), J = [[0, I], [-I, 0]] and W = [[0, K], [-K, 0]]
/// the skew form of the Witt basis (w_{-n}, ..., w_{-1}, w_1, ..., w_n),
/// K the n x n reversal matrix.
class PairDescriptor {
 public:
  /// m is required (m >= n) for AIII and BDI and must be 0 otherwise.
  static PairDescriptor make(PairKind kind, std::size_t n, std::size_t m = 0);

  PairKind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  /// Second size parameter; equals n for CI and 0 for AI/AII.
  std::size_t m() const { return m_; }
  std::size_t rank() const { return n_; }
  std::size_t ambient_dim() const;

  /// AIII, BDI and CI: g1 is off-diagonal in an (n, m) block split.
  bool is_block_kind() const;
  /// Little Weyl group is (Z/2)^n x| S_n rather than S_n.
  bool hyperoctahedral_weyl() const { return is_block_kind(); }

  /// Gram matrix of the invariant bilinear form: I (AI, BDI), W (AII),
  /// J (CI). Empty for AIII.
  const RMatrix& form() const { return form_; }
  /// diag(I_n, -I_m) for block kinds; empty otherwise.
  const RMatrix& grading() const { return grading_; }

  std::string label() const;

  friend bool operator==(const PairDescriptor& a, const PairDescriptor& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  PairDescriptor(PairKind kind, std::size_t n, std::size_t m);

  PairKind kind_;
  std::size_t n_;
  std::size_t m_;
  RMatrix form_;
  RMatrix grading_;
};

/// d x n array of Cartan coordinates; entry (i, j) is b_j(y_i).
class CartanPoint {
 public:
  CartanPoint(std::size_t d, std::size_t n) : d_(d), n_(n), coords_(d * n) {}
  CartanPoint(std::size_t d, std::size_t n, std::vector<Rational> coords);
  CartanPoint(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return coords_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return coords_[i * n_ + j]; }
  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(coords_).subspan(i * n_, n_);
  }

  friend bool operator==(const CartanPoint&, const CartanPoint&) = default;

 private:
  std::size_t d_;
  std::size_t n_;
  std::vector<Rational> coords_;
};

std::string to_string(const CartanPoint& pt);

/// Signed permutation of the n Cartan coordinates: coordinate j is sent
/// to permutation[j] and multiplied by signs[j]. Indices are 0-based.
struct WeylElement {
  std::vector<std::size_t> permutation;
  std::vector<int> signs;

  static WeylElement identity(std::size_t n);
  std::size_t size() const { return permutation.size(); }
  bool has_sign_flips() const;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// Acting by `inner` then by `outer` equals acting by compose(outer, inner).
WeylElement compose(const WeylElement& outer, const WeylElement& inner);

RMatrix theta(const PairDescriptor& p, const RMatrix& x);
/// x lies in g (always true for the gl-based kinds).
bool is_in_g(const PairDescriptor& p, const RMatrix& x);
bool is_in_g0(const PairDescriptor& p, const RMatrix& x);
/// x in g and theta(x) = -x. The explicit block/symmetry shape of g1 is
/// tested as well and must agree; disagreement throws InvariantViolation.
bool is_in_g1(const PairDescriptor& p, const RMatrix& x);

/// The d commuting g1 matrices realizing the Cartan point.
std::vector<RMatrix> cartan_embed(const PairDescriptor& p, const CartanPoint& pt);

/// Diagonal action on c^d. Throws DomainError for sign flips on AI/AII.
CartanPoint weyl_act(const PairDescriptor& p, const WeylElement& w, const CartanPoint& pt);

/// (I - s)(I + s)^{-1}. Throws SingularMatrixError at a pole.
RMatrix cayley_transform(const RMatrix& s);

/// Exact element of the identity component G0, in the ambient embedding.
RMatrix sample_g0(const PairDescriptor& p, std::uint64_t seed, unsigned bound = kDefaultBound);
RMatrix sample_g0(const PairDescriptor& p, Rng& rng, unsigned bound = kDefaultBound);

/// Checks the defining identities of G0 exactly (orthogonality and
/// det = 1, symplecticity, block shape, invertibility).
bool is_in_G0(const PairDescriptor& p, const RMatrix& g);

/// g x g^{-1}. If x is in g1 the result is checked to be in g1 as well.
RMatrix adjoint(const PairDescriptor& p, const RMatrix& g, const RMatrix& x);
std::vector<RMatrix> adjoint_all(const PairDescriptor& p, const RMatrix& g,
                                 std::span<const RMatrix> xs);

CartanPoint sample_cartan_point(const PairDescriptor& p, std::size_t d, Rng& rng,
                                unsigned bound = kDefaultBound);
/// Uniform element of the little Weyl group.
WeylElement sample_weyl(const PairDescriptor& p, Rng& rng);
/// A generic (not necessarily semisimple) element of g1.
RMatrix sample_g1(const PairDescriptor& p, Rng& rng, unsigned bound = kDefaultBound);

}  // namespace sympair
