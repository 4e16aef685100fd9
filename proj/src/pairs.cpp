#include "sympair/pairs.hpp"

#include <sstream>
#include <utility>

#include "sympair/errors.hpp"
#include "sympair/linalg.hpp"

namespace sympair {

std::string_view to_string(PairKind kind) {
  switch (kind) {
    case PairKind::AI: return "AI";
    case PairKind::AII: return "AII";
    case PairKind::AIII: return "AIII";
    case PairKind::BDI: return "BDI";
    case PairKind::CI: return "CI";
  }
  return "?";
}

PairKind parse_pair_kind(std::string_view name) {
  for (PairKind k : {PairKind::AI, PairKind::AII, PairKind::AIII, PairKind::BDI, PairKind::CI})
    if (to_string(k) == name) return k;
  throw DomainError("unknown symmetric pair '" + std::string(name) + "'");
}

namespace {

RMatrix witt_form(std::size_t n) {
  RMatrix w(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    w(k, 2 * n - 1 - k) = 1;
    w(2 * n - 1 - k, k) = -1;
  }
  return w;
}

RMatrix grading_matrix(std::size_t n, std::size_t m) {
  RMatrix t(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) t(i, i) = 1;
  for (std::size_t i = n; i < n + m; ++i) t(i, i) = -1;
  return t;
}

}  // namespace

PairDescriptor::PairDescriptor(PairKind kind, std::size_t n, std::size_t m)
    : kind_(kind), n_(n), m_(m) {
  switch (kind) {
    case PairKind::AI: form_ = RMatrix::identity(n); break;
    case PairKind::AII: form_ = witt_form(n); break;
    case PairKind::AIII: grading_ = grading_matrix(n, m); break;
    case PairKind::BDI:
      form_ = RMatrix::identity(n + m);
      grading_ = grading_matrix(n, m);
      break;
    case PairKind::CI:
      form_ = standard_symplectic(n);
      grading_ = grading_matrix(n, n);
      break;
  }
}

PairDescriptor PairDescriptor::make(PairKind kind, std::size_t n, std::size_t m) {
  if (n < 1) throw DomainError("rank parameter n must be at least 1");
  if (kind == PairKind::AIII || kind == PairKind::BDI) {
    if (m < n) throw DomainError(std::string(to_string(kind)) + " requires m >= n");
    return PairDescriptor(kind, n, m);
  }
  if (m != 0 && !(kind == PairKind::CI && m == n))
    throw DomainError(std::string(to_string(kind)) + " takes no second size parameter");
  return PairDescriptor(kind, n, kind == PairKind::CI ? n : 0);
}

std::size_t PairDescriptor::ambient_dim() const {
  switch (kind_) {
    case PairKind::AI: return n_;
    case PairKind::AII: return 2 * n_;
    case PairKind::AIII:
    case PairKind::BDI: return n_ + m_;
    case PairKind::CI: return 2 * n_;
  }
  return 0;
}

bool PairDescriptor::is_block_kind() const {
  return kind_ == PairKind::AIII || kind_ == PairKind::BDI || kind_ == PairKind::CI;
}

std::string PairDescriptor::label() const {
  std::string s = std::string(to_string(kind_)) + "(n=" + std::to_string(n_);
  if (kind_ == PairKind::AIII || kind_ == PairKind::BDI) s += ",m=" + std::to_string(m_);
  return s + ")";
}

CartanPoint::CartanPoint(std::size_t d, std::size_t n, std::vector<Rational> coords)
    : d_(d), n_(n), coords_(std::move(coords)) {
  if (coords_.size() != d * n) throw DimensionError("CartanPoint coordinate count mismatch");
}

CartanPoint::CartanPoint(std::initializer_list<std::initializer_list<Rational>> rows)
    : d_(rows.size()), n_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionError("ragged CartanPoint literal");
    coords_.insert(coords_.end(), r.begin(), r.end());
  }
}

std::string to_string(const CartanPoint& pt) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < pt.d(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < pt.n(); ++j) {
      if (j) out << ',';
      out << pt(i, j).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

WeylElement WeylElement::identity(std::size_t n) {
  WeylElement w;
  w.permutation.resize(n);
  for (std::size_t j = 0; j < n; ++j) w.permutation[j] = j;
  w.signs.assign(n, 1);
  return w;
}

bool WeylElement::has_sign_flips() const {
  for (int s : signs)
    if (s != 1) return true;
  return false;
}

WeylElement compose(const WeylElement& outer, const WeylElement& inner) {
  if (outer.size() != inner.size()) throw DimensionError("Weyl elements of different rank");
  WeylElement w;
  w.permutation.resize(inner.size());
  w.signs.resize(inner.size());
  for (std::size_t j = 0; j < inner.size(); ++j) {
    w.permutation[j] = outer.permutation[inner.permutation[j]];
    w.signs[j] = inner.signs[j] * outer.signs[inner.permutation[j]];
  }
  return w;
}

namespace {

void require_ambient(const PairDescriptor& p, const RMatrix& x) {
  if (x.rows() != p.ambient_dim() || x.cols() != p.ambient_dim())
    throw DimensionError(p.label() + " expects " + std::to_string(p.ambient_dim()) +
                         "x" + std::to_string(p.ambient_dim()) + " matrices");
}

bool g1_shape(const PairDescriptor& p, const RMatrix& x) {
  const std::size_t n = p.n();
  switch (p.kind()) {
    case PairKind::AI: return x.is_symmetric();
    case PairKind::AII: return (p.form() * x).is_skew_symmetric();
    case PairKind::AIII:
    case PairKind::BDI:
    case PairKind::CI: {
      const std::size_t m = p.m();
      if (!x.block(0, 0, n, n).is_zero() || !x.block(n, n, m, m).is_zero()) return false;
      const RMatrix upper = x.block(0, n, n, m);
      const RMatrix lower = x.block(n, 0, m, n);
      if (p.kind() == PairKind::BDI) return lower == -upper.transpose();
      if (p.kind() == PairKind::CI) return upper.is_symmetric() && lower.is_symmetric();
      return true;
    }
  }
  return false;
}

}  // namespace

RMatrix theta(const PairDescriptor& p, const RMatrix& x) {
  require_ambient(p, x);
  switch (p.kind()) {
    case PairKind::AI: return -x.transpose();
    // W^{-1} = -W, so -W^{-1} x^t W = W x^t W.
    case PairKind::AII: return p.form() * x.transpose() * p.form();
    default: return p.grading() * x * p.grading();
  }
}

bool is_in_g(const PairDescriptor& p, const RMatrix& x) {
  require_ambient(p, x);
  switch (p.kind()) {
    case PairKind::BDI: return x.is_skew_symmetric();
    case PairKind::CI: {
      const RMatrix& j = p.form();
      return (x.transpose() * j + j * x).is_zero();
    }
    default: return true;
  }
}

bool is_in_g0(const PairDescriptor& p, const RMatrix& x) {
  return is_in_g(p, x) && theta(p, x) == x;
}

bool is_in_g1(const PairDescriptor& p, const RMatrix& x) {
  const bool algebraic = is_in_g(p, x) && theta(p, x) == -x;
  const bool shape = g1_shape(p, x);
  if (algebraic != shape)
    throw InvariantViolation(p.label() + ": g1 membership tests disagree on " + to_string(x));
  return algebraic;
}

std::vector<RMatrix> cartan_embed(const PairDescriptor& p, const CartanPoint& pt) {
  if (pt.n() != p.n())
    throw DimensionError(p.label() + " has rank " + std::to_string(p.n()) +
                         ", Cartan point has " + std::to_string(pt.n()) + " coordinates");
  const std::size_t n = p.n();
  const std::size_t dim = p.ambient_dim();
  std::vector<RMatrix> out;
  out.reserve(pt.d());
  for (std::size_t i = 0; i < pt.d(); ++i) {
    RMatrix x(dim, dim);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& b = pt(i, j);
      switch (p.kind()) {
        case PairKind::AI: x(j, j) = b; break;
        case PairKind::AII:
          // diag(b_n, ..., b_1, b_1, ..., b_n)
          x(n - 1 - j, n - 1 - j) = b;
          x(n + j, n + j) = b;
          break;
        case PairKind::AIII:
          x(j, n + j) = b;
          x(n + j, j) = b;
          break;
        case PairKind::BDI:
          x(j, n + j) = b;
          x(n + j, j) = -b;
          break;
        case PairKind::CI:
          x(j, n + j) = b;
          x(n + j, j) = b;
          break;
      }
    }
    if (!is_in_g1(p, x)) throw InvariantViolation(p.label() + ": Cartan element outside g1");
    out.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = i + 1; k < out.size(); ++k)
      if (!commutator(out[i], out[k]).is_zero())
        throw InvariantViolation(p.label() + ": Cartan elements do not commute");
  return out;
}

CartanPoint weyl_act(const PairDescriptor& p, const WeylElement& w, const CartanPoint& pt) {
  if (w.size() != p.n() || w.signs.size() != p.n() || pt.n() != p.n())
    throw DimensionError("Weyl element / Cartan point rank mismatch for " + p.label());
  if (!p.hyperoctahedral_weyl() && w.has_sign_flips())
    throw DomainError(p.label() + ": little Weyl group is S_n, sign flips not allowed");
  CartanPoint out(pt.d(), pt.n());
  for (std::size_t i = 0; i < pt.d(); ++i)
    for (std::size_t j = 0; j < pt.n(); ++j)
      out(i, w.permutation[j]) = w.signs[j] == 1 ? pt(i, j) : Rational(-pt(i, j));
  return out;
}

RMatrix cayley_transform(const RMatrix& s) {
  const RMatrix id = RMatrix::identity(s.rows());
  return (id - s) * inverse(id + s);
}

namespace {

RMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng, unsigned bound) {
  RMatrix x(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) x(i, j) = rng.rational(bound);
  return x;
}

RMatrix random_skew(std::size_t n, Rng& rng, unsigned bound) {
  RMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = rng.rational(bound);
      s(j, i) = -s(i, j);
    }
  return s;
}

RMatrix random_symmetric(std::size_t n, Rng& rng, unsigned bound) {
  RMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      s(i, j) = rng.rational(bound);
      s(j, i) = s(i, j);
    }
  return s;
}

RMatrix random_invertible(std::size_t n, Rng& rng, unsigned bound) {
  while (true) {
    RMatrix a = random_matrix(n, n, rng, bound);
    if (det(a) != 0) return a;
  }
}

// Redraws until the Cayley transform has no pole; continuing the same
// stream is the seed perturbation.
template <typename Draw>
RMatrix cayley_sample(Draw draw) {
  while (true) {
    const RMatrix s = draw();
    if (det(RMatrix::identity(s.rows()) + s) != 0) return cayley_transform(s);
  }
}

bool is_special_orthogonal(const RMatrix& g) {
  return g.transpose() * g == RMatrix::identity(g.rows()) && det(g) == 1;
}

bool off_diagonal_blocks_zero(const RMatrix& g, std::size_t n, std::size_t m) {
  return g.block(0, n, n, m).is_zero() && g.block(n, 0, m, n).is_zero();
}

}  // namespace

RMatrix sample_g0(const PairDescriptor& p, Rng& rng, unsigned bound) {
  const std::size_t n = p.n();
  switch (p.kind()) {
    case PairKind::AI:
      return cayley_sample([&] { return random_skew(n, rng, bound); });
    case PairKind::AII:
      // W h symmetric <=> h Hamiltonian for W; h = W^{-1} s = -W s.
      return cayley_sample([&] { return -(p.form() * random_symmetric(2 * n, rng, bound)); });
    case PairKind::AIII:
      return block_diag(random_invertible(n, rng, bound), random_invertible(p.m(), rng, bound));
    case PairKind::BDI: {
      const RMatrix a = cayley_sample([&] { return random_skew(n, rng, bound); });
      const RMatrix b = cayley_sample([&] { return random_skew(p.m(), rng, bound); });
      return block_diag(a, b);
    }
    case PairKind::CI: {
      const RMatrix a = random_invertible(n, rng, bound);
      return block_diag(a, inverse(a).transpose());
    }
  }
  throw InvariantViolation("unreachable pair kind");
}

RMatrix sample_g0(const PairDescriptor& p, std::uint64_t seed, unsigned bound) {
  Rng rng(seed);
  return sample_g0(p, rng, bound);
}

bool is_in_G0(const PairDescriptor& p, const RMatrix& g) {
  if (g.rows() != p.ambient_dim() || g.cols() != p.ambient_dim()) return false;
  const std::size_t n = p.n();
  switch (p.kind()) {
    case PairKind::AI: return is_special_orthogonal(g);
    case PairKind::AII: return g.transpose() * p.form() * g == p.form();
    case PairKind::AIII: return off_diagonal_blocks_zero(g, n, p.m()) && det(g) != 0;
    case PairKind::BDI:
      return off_diagonal_blocks_zero(g, n, p.m()) && is_special_orthogonal(g.block(0, 0, n, n)) &&
             is_special_orthogonal(g.block(n, n, p.m(), p.m()));
    case PairKind::CI: {
      if (!off_diagonal_blocks_zero(g, n, n)) return false;
      const RMatrix a = g.block(0, 0, n, n);
      const RMatrix b = g.block(n, n, n, n);
      return a.transpose() * b == RMatrix::identity(n);
    }
  }
  return false;
}

std::vector<RMatrix> adjoint_all(const PairDescriptor& p, const RMatrix& g,
                                 std::span<const RMatrix> xs) {
  require_ambient(p, g);
  const RMatrix g_inv = inverse(g);
  std::vector<RMatrix> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    require_ambient(p, x);
    RMatrix y = g * x * g_inv;
    if (is_in_g1(p, x) && !is_in_g1(p, y))
      throw InvariantViolation(p.label() + ": adjoint action left g1");
    out.push_back(std::move(y));
  }
  return out;
}

RMatrix adjoint(const PairDescriptor& p, const RMatrix& g, const RMatrix& x) {
  return std::move(adjoint_all(p, g, std::span<const RMatrix>(&x, 1)).front());
}

CartanPoint sample_cartan_point(const PairDescriptor& p, std::size_t d, Rng& rng, unsigned bound) {
  CartanPoint pt(d, p.n());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < p.n(); ++j) pt(i, j) = rng.rational(bound);
  return pt;
}

WeylElement sample_weyl(const PairDescriptor& p, Rng& rng) {
  WeylElement w = WeylElement::identity(p.n());
  for (std::size_t j = p.n(); j > 1; --j) {
    const auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(j) - 1));
    std::swap(w.permutation[j - 1], w.permutation[k]);
  }
  if (p.hyperoctahedral_weyl())
    for (auto& s : w.signs) s = rng.uniform_int(0, 1) == 0 ? 1 : -1;
  return w;
}

RMatrix sample_g1(const PairDescriptor& p, Rng& rng, unsigned bound) {
  const std::size_t n = p.n();
  switch (p.kind()) {
    case PairKind::AI: return random_symmetric(n, rng, bound);
    case PairKind::AII: return -(p.form() * random_skew(2 * n, rng, bound));
    case PairKind::AIII:
    case PairKind::BDI:
    case PairKind::CI: {
      const std::size_t m = p.m();
      RMatrix x(n + m, n + m);
      if (p.kind() == PairKind::CI) {
        x.set_block(0, n, random_symmetric(n, rng, bound));
        x.set_block(n, 0, random_symmetric(n, rng, bound));
      } else {
        const RMatrix upper = random_matrix(n, m, rng, bound);
        x.set_block(0, n, upper);
        x.set_block(n, 0,
                    p.kind() == PairKind::BDI ? -upper.transpose() : random_matrix(m, n, rng, bound));
      }
      return x;
    }
  }
  throw InvariantViolation("unreachable pair kind");
}

}  // namespace sympair
