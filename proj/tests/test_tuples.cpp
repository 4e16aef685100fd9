#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympair/errors.hpp"
#include "sympair/linalg.hpp"
#include "sympair/tuples.hpp"

using namespace sympair;

namespace {

RMatrix diag(std::initializer_list<Rational> d) {
  std::vector<Rational> v(d);
  return RMatrix::diagonal(v);
}

std::vector<PairDescriptor> cases(std::size_t n) {
  return {PairDescriptor::make(PairKind::AI, n),       PairDescriptor::make(PairKind::AII, n),
          PairDescriptor::make(PairKind::AIII, n, n + 1), PairDescriptor::make(PairKind::BDI, n, n + 1),
          PairDescriptor::make(PairKind::BDI, n, n),      PairDescriptor::make(PairKind::CI, n)};
}

}  // namespace

TEST_CASE("from_cartan worked example") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const CartanPoint pt{{1, 2}, {3, 4}};
  const auto t = from_cartan(ai, pt, RMatrix{{0, -1}, {1, 0}});
  REQUIRE(t.d() == 2);
  CHECK(t.mats[0] == diag({2, 1}));
  CHECK(t.mats[1] == diag({4, 3}));
  CHECK(validate(t).all_passed());
}

TEST_CASE("from_cartan with identity and zero point") {
  Rng rng(21);
  for (const auto& p : cases(3)) {
    const auto pt = sample_cartan_point(p, 2, rng);
    const auto t = from_cartan(p, pt, RMatrix::identity(p.ambient_dim()));
    CHECK(t.mats == cartan_embed(p, pt));
    const auto z = from_cartan(p, CartanPoint(2, p.n()), sample_g0(p, rng));
    for (const auto& x : z.mats) CHECK(x.is_zero());
  }
}

TEST_CASE("from_cartan rejects a group element outside G0") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  // conjugation by a non-orthogonal element leaves the symmetric matrices
  CHECK_THROWS_AS(from_cartan(ai, CartanPoint{{1, 2}}, RMatrix{{1, 1}, {0, 1}}),
                  InvariantViolation);
}

TEST_CASE("validate hand-built tuples") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  CommutingTuple bad{ai, {diag({1, 2}), RMatrix{{0, 1}, {1, 0}}}, std::nullopt};
  const auto rep = validate(bad);
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.failures() == std::vector<std::string>{"commute[0,1]"});

  CommutingTuple not_g1{ai, {RMatrix{{0, 1}, {-1, 0}}}, std::nullopt};
  CHECK(validate(not_g1).failures() == std::vector<std::string>{"g1[0]"});

  CommutingTuple empty{ai, {}, std::nullopt};
  CHECK(validate(empty).all_passed());

  auto t = from_cartan(ai, CartanPoint{{1, 2}}, RMatrix{{0, -1}, {1, 0}});
  t.mats[0] = diag({1, 2});
  CHECK(validate(t).failures() == std::vector<std::string>{"provenance[0]"});
}

TEST_CASE("from_cartan then validate across cases") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : cases(n))
      for (std::size_t d = 0; d <= 4; ++d) {
        Rng rng(derive_seed(100, p.label(), d));
        for (int trial = 0; trial < (n <= 3 ? 6 : 2); ++trial) {
          const auto pt = sample_cartan_point(p, d, rng);
          const RMatrix g = sample_g0(p, rng);
          const auto t = from_cartan(p, pt, g);
          CHECK(validate(t).all_passed());
          const RMatrix gi = inverse(g);
          const auto base = cartan_embed(p, pt);
          for (std::size_t i = 0; i < d; ++i) CHECK(gi * t.mats[i] * g == base[i]);
        }
      }
}

TEST_CASE("block parts") {
  const auto ci = PairDescriptor::make(PairKind::CI, 1);
  const auto t = from_cartan(ci, CartanPoint{{5}}, RMatrix::identity(2));
  const auto parts = block_parts(t);
  CHECK(parts[0].q == RMatrix{{5}});
  CHECK(parts[0].r == RMatrix{{5}});

  const auto bdi = PairDescriptor::make(PairKind::BDI, 2, 3);
  const auto tb = from_cartan(bdi, CartanPoint{{1, 2}}, RMatrix::identity(5));
  const auto pb = block_parts(tb);
  CHECK(pb[0].q == RMatrix{{1, 0, 0}, {0, 2, 0}});
  CHECK(pb[0].r == -pb[0].q.transpose());

  const auto aiii = PairDescriptor::make(PairKind::AIII, 2, 3);
  const auto tz = from_cartan(aiii, CartanPoint(1, 2), RMatrix::identity(5));
  CHECK(block_parts(tz)[0].q.is_zero());
  CHECK(block_parts(tz)[0].r.rows() == 3);

  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  CHECK_THROWS_AS(block_parts(from_cartan(ai, CartanPoint{{1, 2}}, RMatrix::identity(2))),
                  DomainError);
}

TEST_CASE("conjugate composes provenance") {
  Rng rng(22);
  for (const auto& p : cases(2)) {
    const auto pt = sample_cartan_point(p, 3, rng);
    const auto t = from_cartan(p, pt, sample_g0(p, rng));
    const auto u = conjugate(t, sample_g0(p, rng));
    CHECK(validate(u).all_passed());
  }
}
