#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sympair/errors.hpp"
#include "sympair/linalg.hpp"
#include "sympair/pairs.hpp"

using namespace sympair;

namespace {

std::vector<PairDescriptor> all_pairs(std::size_t max_n) {
  std::vector<PairDescriptor> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.push_back(PairDescriptor::make(PairKind::AI, n));
    out.push_back(PairDescriptor::make(PairKind::AII, n));
    out.push_back(PairDescriptor::make(PairKind::AIII, n, n + 1));
    out.push_back(PairDescriptor::make(PairKind::BDI, n, n + 1));
    out.push_back(PairDescriptor::make(PairKind::BDI, n, n));
    out.push_back(PairDescriptor::make(PairKind::CI, n));
  }
  return out;
}

RMatrix anti_block(const RMatrix& x, const RMatrix& y) {
  RMatrix out(x.rows() + y.rows(), x.rows() + y.rows());
  out.set_block(0, x.rows(), x);
  out.set_block(x.rows(), 0, y);
  return out;
}

}  // namespace

TEST_CASE("descriptor construction") {
  CHECK(PairDescriptor::make(PairKind::AI, 3).ambient_dim() == 3);
  CHECK(PairDescriptor::make(PairKind::AII, 3).ambient_dim() == 6);
  CHECK(PairDescriptor::make(PairKind::AIII, 2, 3).ambient_dim() == 5);
  CHECK(PairDescriptor::make(PairKind::BDI, 2, 5).ambient_dim() == 7);
  CHECK(PairDescriptor::make(PairKind::CI, 2).ambient_dim() == 4);
  CHECK(PairDescriptor::make(PairKind::CI, 2).m() == 2);
  CHECK(PairDescriptor::make(PairKind::CI, 2, 2).m() == 2);
  CHECK(PairDescriptor::make(PairKind::AIII, 2, 3).label() == "AIII(n=2,m=3)");
  CHECK_THROWS_AS(PairDescriptor::make(PairKind::AIII, 3, 2), DomainError);
  CHECK_THROWS_AS(PairDescriptor::make(PairKind::BDI, 2), DomainError);
  CHECK_THROWS_AS(PairDescriptor::make(PairKind::AI, 0), DomainError);
  CHECK_THROWS_AS(PairDescriptor::make(PairKind::AI, 2, 3), DomainError);
  CHECK(parse_pair_kind("BDI") == PairKind::BDI);
  CHECK_THROWS_AS(parse_pair_kind("DIII"), DomainError);
  CHECK(pfaffian(PairDescriptor::make(PairKind::CI, 3).form()) == 1);
}

TEST_CASE("theta examples") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const RMatrix sym{{1, 2}, {2, 5}};
  CHECK(theta(ai, sym) == -sym);

  const auto aiii = PairDescriptor::make(PairKind::AIII, 1, 2);
  const RMatrix bd = block_diag(RMatrix{{3}}, RMatrix{{1, 2}, {3, 4}});
  CHECK(theta(aiii, bd) == bd);
  CHECK(is_in_g0(aiii, bd));

  const auto ci = PairDescriptor::make(PairKind::CI, 2);
  const RMatrix x = anti_block(RMatrix{{1, 2}, {2, 3}}, RMatrix{{4, 5}, {5, 6}});
  CHECK(theta(ci, x) == -x);
  CHECK_THROWS_AS(theta(ci, RMatrix::identity(3)), DimensionError);
}

TEST_CASE("theta is an involution in every case") {
  Rng rng(11);
  for (const auto& p : all_pairs(3)) {
    const RMatrix x = oracle::random_matrix(rng, p.ambient_dim(), p.ambient_dim());
    CHECK(theta(p, theta(p, x)) == x);
  }
}

TEST_CASE("g1 membership") {
  // theta(X) = -X^t is the convention, so the symmetric matrices are g1
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  CHECK(is_in_g1(ai, RMatrix{{1, 2}, {2, 5}}));
  CHECK_FALSE(is_in_g1(ai, RMatrix{{0, 1}, {-1, 0}}));

  const auto bdi = PairDescriptor::make(PairKind::BDI, 1, 2);
  const RMatrix xb{{1, 2}};
  CHECK(is_in_g1(bdi, anti_block(xb, -xb.transpose())));
  CHECK_FALSE(is_in_g1(bdi, anti_block(xb, xb.transpose())));

  const auto ci = PairDescriptor::make(PairKind::CI, 2);
  CHECK_FALSE(is_in_g1(ci, anti_block(RMatrix{{1, 2}, {0, 3}}, RMatrix{{1, 0}, {0, 1}})));
  CHECK(is_in_g1(ci, anti_block(RMatrix{{1, 2}, {2, 3}}, RMatrix{{1, 0}, {0, 1}})));

  const auto aii = PairDescriptor::make(PairKind::AII, 1);
  CHECK(is_in_g1(aii, RMatrix::identity(2)));
  CHECK_FALSE(is_in_g1(aii, RMatrix{{1, 0}, {0, 2}}));
}

TEST_CASE("sampled g1 elements are in g1") {
  Rng rng(12);
  for (const auto& p : all_pairs(3))
    for (int t = 0; t < 5; ++t) CHECK(is_in_g1(p, sample_g1(p, rng)));
}

TEST_CASE("cartan_embed examples") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  auto xs = cartan_embed(ai, CartanPoint{{1, 2}});
  REQUIRE(xs.size() == 1);
  CHECK(xs[0] == RMatrix{{1, 0}, {0, 2}});

  const auto ci = PairDescriptor::make(PairKind::CI, 1);
  CHECK(cartan_embed(ci, CartanPoint{{7}})[0] == RMatrix{{0, 7}, {7, 0}});

  const auto aii = PairDescriptor::make(PairKind::AII, 2);
  const RMatrix layout = cartan_embed(aii, CartanPoint{{1, 2}})[0];
  CHECK(layout == RMatrix::diagonal(std::vector<Rational>{2, 1, 1, 2}));

  const auto bdi = PairDescriptor::make(PairKind::BDI, 2, 3);
  const RMatrix b = cartan_embed(bdi, CartanPoint{{4, 5}})[0];
  CHECK(b(0, 2) == 4);
  CHECK(b(1, 3) == 5);
  CHECK(b(0, 4) == 0);
  CHECK(b(2, 0) == -4);

  for (const auto& p : all_pairs(3)) {
    for (const auto& x : cartan_embed(p, CartanPoint(3, p.n()))) CHECK(x.is_zero());
  }
  CHECK_THROWS_AS(cartan_embed(ai, CartanPoint{{1, 2, 3}}), DimensionError);
}

TEST_CASE("cartan_embed gives commuting g1 tuples") {
  Rng rng(13);
  for (const auto& p : all_pairs(4)) {
    const auto pt = sample_cartan_point(p, 3, rng);
    const auto xs = cartan_embed(p, pt);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(is_in_g1(p, xs[i]));
      for (std::size_t j = i + 1; j < xs.size(); ++j) CHECK(commutator(xs[i], xs[j]).is_zero());
    }
  }
}

TEST_CASE("weyl action") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const CartanPoint pt{{1, 2}};
  CHECK(weyl_act(ai, WeylElement::identity(2), pt) == pt);
  CHECK(weyl_act(ai, WeylElement{{1, 0}, {1, 1}}, pt) == CartanPoint{{2, 1}});
  CHECK_THROWS_AS(weyl_act(ai, WeylElement{{0, 1}, {-1, 1}}, pt), DomainError);

  const auto ci = PairDescriptor::make(PairKind::CI, 1);
  CHECK(weyl_act(ci, WeylElement{{0}, {-1}}, CartanPoint{{3}}) == CartanPoint{{-3}});

  // acting row by row with one element
  const auto aiii = PairDescriptor::make(PairKind::AIII, 3, 3);
  const CartanPoint q{{1, 2, 3}, {4, 5, 6}};
  const WeylElement w{{2, 0, 1}, {1, -1, 1}};
  // coordinate 0 -> 2, coordinate 1 -> 0 (negated), coordinate 2 -> 1
  CHECK(weyl_act(aiii, w, q) == CartanPoint{{-2, 3, 1}, {-5, 6, 4}});
}

TEST_CASE("weyl action is a group action") {
  Rng rng(14);
  for (const auto& p : all_pairs(4)) {
    const auto pt = sample_cartan_point(p, 2, rng);
    const auto w1 = sample_weyl(p, rng);
    const auto w2 = sample_weyl(p, rng);
    CHECK(weyl_act(p, w2, weyl_act(p, w1, pt)) == weyl_act(p, compose(w2, w1), pt));
    if (!p.hyperoctahedral_weyl()) CHECK_FALSE(w1.has_sign_flips());
  }
}

TEST_CASE("a 3-cycle has order 3") {
  const auto ai = PairDescriptor::make(PairKind::AI, 3);
  const WeylElement cyc{{1, 2, 0}, {1, 1, 1}};
  const CartanPoint pt{{1, 2, 3}};
  CHECK(weyl_act(ai, cyc, weyl_act(ai, cyc, weyl_act(ai, cyc, pt))) == pt);
}

TEST_CASE("cayley transform") {
  const RMatrix s{{0, 1}, {-1, 0}};
  const RMatrix g = cayley_transform(s);
  CHECK(g == RMatrix{{0, -1}, {1, 0}});
  CHECK(g.transpose() * g == RMatrix::identity(2));
  CHECK(cayley_transform(RMatrix(3, 3)) == RMatrix::identity(3));
  CHECK_THROWS_AS(cayley_transform(RMatrix{{-1}}), SingularMatrixError);
}

TEST_CASE("sample_g0 is deterministic and lands in G0") {
  for (const auto& p : all_pairs(4)) {
    CHECK(sample_g0(p, 99) == sample_g0(p, 99));
    Rng rng(15);
    for (int t = 0; t < 5; ++t) {
      const RMatrix g = sample_g0(p, rng);
      CHECK(is_in_G0(p, g));
    }
  }
  const auto so = PairDescriptor::make(PairKind::AI, 3);
  CHECK_FALSE(is_in_G0(so, RMatrix::diagonal(std::vector<Rational>{-1, 1, 1})));
  CHECK_FALSE(is_in_G0(so, RMatrix::diagonal(std::vector<Rational>{2, 1, Rational(1, 2)})));
}

TEST_CASE("adjoint") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const RMatrix x{{1, 0}, {0, 2}};
  CHECK(adjoint(ai, RMatrix::identity(2), x) == x);
  CHECK(adjoint(ai, RMatrix{{0, -1}, {1, 0}}, x) == RMatrix{{2, 0}, {0, 1}});
  CHECK_THROWS_AS(adjoint(ai, RMatrix{{1, 1}, {1, 1}}, x), SingularMatrixError);
}

TEST_CASE("adjoint preserves g1 and commutators") {
  Rng rng(16);
  for (const auto& p : all_pairs(3)) {
    const RMatrix g = sample_g0(p, rng);
    const RMatrix x = sample_g1(p, rng);
    const RMatrix y = sample_g1(p, rng);
    const RMatrix gx = adjoint(p, g, x);
    const RMatrix gy = adjoint(p, g, y);
    CHECK(is_in_g1(p, gx));
    CHECK(commutator(gx, gy) == g * commutator(x, y) * inverse(g));
  }
}
