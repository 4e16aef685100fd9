#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "sympair/chevalley.hpp"
#include "sympair/errors.hpp"

using namespace sympair;

namespace {

using Monomial = std::vector<unsigned>;  // d x n exponents, row-major

void all_monomials(std::size_t vars, unsigned degree, Monomial& cur, std::vector<Monomial>& out) {
  if (cur.size() + 1 == vars) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned k = 0; k <= degree; ++k) {
    cur.push_back(k);
    all_monomials(vars, degree - k, cur, out);
    cur.pop_back();
  }
}

// Brute force: build every orbit sum under the signed column permutations
// and count the distinct non-zero ones.
std::size_t orbit_dim(std::size_t n, std::size_t d, unsigned delta, bool signs) {
  std::vector<Monomial> monos;
  Monomial cur;
  all_monomials(n * d, delta, cur, monos);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  const unsigned masks = signs ? 1U << n : 1U;

  std::map<std::map<Monomial, int>, bool> sums;
  for (const auto& m : monos) {
    std::map<Monomial, int> sum;
    for (const auto& p : perms)
      for (unsigned mask = 0; mask < masks; ++mask) {
        Monomial img(n * d);
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < d; ++i) {
            const unsigned e = m[i * n + j];
            img[i * n + p[j]] = e;
            if ((mask >> j & 1U) && e % 2 == 1) sign = -sign;
          }
        sum[img] += sign;
      }
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    if (!sum.empty()) sums[sum] = true;
  }
  return sums.size();
}

}  // namespace

TEST_CASE("restriction identity examples") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const CartanPoint pt{{1, 2}, {3, 4}};
  const RMatrix g{{0, -1}, {1, 0}};
  const Trial trial{pt, g, from_cartan(ai, pt, g)};
  WordEvaluator eval(trial.tuple);
  const auto chk =
      check_restriction_identity(trial, eval, TraceWord::power(PairKind::AI, {1, 1}), 0);
  CHECK(chk.passed);
  CHECK(chk.lhs == 11);
  CHECK(chk.rhs == 11);

  const auto aii = PairDescriptor::make(PairKind::AII, 1);
  const auto c2 = check_restriction_identity(aii, 1, TraceWord::power(PairKind::AII, {1}), 5);
  CHECK(c2.passed);
  const Trial t2 = sample_trial(aii, 1, 5);
  CHECK(c2.lhs == 2 * t2.point(0, 0));

  CHECK_THROWS_AS(check_restriction_identity(ai, 2, TraceWord::power(PairKind::AI, {0, 0}), 1),
                  DomainError);
}

TEST_CASE("restriction identity over random trials") {
  const std::vector<PairDescriptor> ps{
      PairDescriptor::make(PairKind::AI, 3),      PairDescriptor::make(PairKind::AII, 2),
      PairDescriptor::make(PairKind::AIII, 2, 4), PairDescriptor::make(PairKind::BDI, 2, 3),
      PairDescriptor::make(PairKind::BDI, 3, 3),  PairDescriptor::make(PairKind::CI, 3)};
  for (const auto& p : ps) {
    const auto words = enumerate_trace_words(p.kind(), 2, 4, 2);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Trial trial = sample_trial(p, 2, seed);
      for (const auto& c : check_restriction_identities(trial, words, seed)) CHECK(c.passed);
    }
  }
}

TEST_CASE("charpoly factorization") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const CartanPoint pt{{1, 2}, {3, 4}};
  const RMatrix g{{0, -1}, {1, 0}};
  const Trial trial{pt, g, from_cartan(ai, pt, g)};
  const auto c = check_charpoly_factorization(trial, TraceWord::power(PairKind::AI, {1, 1}));
  CHECK(c.passed);
  CHECK(c.lhs == RPoly(std::vector<Rational>{24, -11, 1}));
  CHECK(c.rhs == c.lhs);

  const auto zero = check_charpoly_factorization(trial, TraceWord::power(PairKind::AI, {0, 0}));
  CHECK(zero.passed);
  CHECK(zero.lhs == RPoly(std::vector<Rational>{1, -2, 1}));

  const auto aii = PairDescriptor::make(PairKind::AII, 1);
  const auto a2 = check_charpoly_factorization(aii, 1, {1}, 3);
  CHECK(a2.passed);
  REQUIRE(a2.root.has_value());
  const Rational b = sample_trial(aii, 1, 3).point(0, 0);
  CHECK(*a2.root == RPoly(std::vector<Rational>{-b, 1}));

  const auto aii3 = PairDescriptor::make(PairKind::AII, 3);
  for (std::uint64_t s = 0; s < 5; ++s) CHECK(check_charpoly_factorization(aii3, 2, {2, 1}, s).passed);
  CHECK_THROWS_AS(check_charpoly_factorization(PairDescriptor::make(PairKind::CI, 1), 1, {1}, 0),
                  DomainError);
}

TEST_CASE("block charpoly") {
  const auto ci = PairDescriptor::make(PairKind::CI, 1);
  const CartanPoint pt{{Rational(3, 2)}};
  const Trial trial{pt, RMatrix::identity(2), from_cartan(ci, pt, RMatrix::identity(2))};
  const auto c = check_block_charpoly(trial, TraceWord::product(PairKind::CI, {{0, 0}}));
  CHECK(c.passed);
  CHECK(c.lhs == RPoly(std::vector<Rational>{Rational(-9, 4), 1}));

  const auto aiii = PairDescriptor::make(PairKind::AIII, 2, 3);
  const CartanPoint q{{1, 2}, {3, 5}};
  const Trial diagonal{q, RMatrix::identity(5), from_cartan(aiii, q, RMatrix::identity(5))};
  const auto w = TraceWord::product(PairKind::AIII, {{0, 1}, {1, 1}});
  const auto cd = check_block_charpoly(diagonal, w);
  CHECK(cd.passed);
  // roots b_j(y1) b_j(y2)^3: 27 and 250
  CHECK(cd.rhs == RPoly(std::vector<Rational>{6750, -277, 1}));
  for (std::uint64_t s = 0; s < 5; ++s) CHECK(check_block_charpoly(aiii, 2, w, s).passed);

  const auto bdi = PairDescriptor::make(PairKind::BDI, 3, 5);
  for (std::uint64_t s = 0; s < 5; ++s)
    CHECK(check_block_charpoly(bdi, 2, TraceWord::squares({0, 1}), s).passed);
  CHECK_THROWS_AS(check_block_charpoly(PairDescriptor::make(PairKind::AI, 2), 1,
                                       TraceWord::power(PairKind::AI, {1}), 0),
                  DomainError);
}

TEST_CASE("invariant_dim examples") {
  const auto ai1 = PairDescriptor::make(PairKind::AI, 1);
  for (std::size_t d = 1; d <= 4; ++d) CHECK(invariant_dim(ai1, d, 1) == d);
  CHECK(invariant_dim(PairDescriptor::make(PairKind::CI, 1), 1, 1) == 0);
  CHECK(invariant_dim(PairDescriptor::make(PairKind::AI, 2), 1, 2) == 2);
  CHECK(invariant_dim(PairDescriptor::make(PairKind::CI, 1), 2, 2) == 3);
  CHECK(invariant_dim(PairDescriptor::make(PairKind::AI, 2), 2, 0) == 1);
}

TEST_CASE("invariant_dim agrees with orbit enumeration") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= 3; ++d)
      for (unsigned delta = 0; delta <= (n * d <= 4 ? 5U : 4U); ++delta) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(delta);
        CHECK(invariant_dim(PairDescriptor::make(PairKind::AI, n), d, delta) ==
              orbit_dim(n, d, delta, false));
        CHECK(invariant_dim(PairDescriptor::make(PairKind::AII, n), d, delta) ==
              orbit_dim(n, d, delta, false));
        CHECK(invariant_dim(PairDescriptor::make(PairKind::CI, n), d, delta) ==
              orbit_dim(n, d, delta, true));
        CHECK(invariant_dim(PairDescriptor::make(PairKind::BDI, n, n + 2), d, delta) ==
              orbit_dim(n, d, delta, true));
      }
}

TEST_CASE("generation check") {
  const auto one = generation_check(PairDescriptor::make(PairKind::AI, 1), 1, 6, 12, 1);
  REQUIRE(one.size() == 6);
  for (const auto& r : one) {
    CHECK(r.equal());
    CHECK(r.dim_invariants == 1);
  }

  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const auto reps = generation_check(ai, 2, 4, recommended_samples(ai, 2, 4), 2);
  for (const auto& r : reps) {
    CHECK(r.equal());
    CHECK(r.dim_spanned == r.dim_invariants);
  }

  const auto ci = PairDescriptor::make(PairKind::CI, 1);
  const auto c = generation_check(ci, 2, 2, 10, 3);
  CHECK(c[0].dim_invariants == 0);
  CHECK(c[0].equal());
  CHECK(c[1].dim_invariants == 3);
  CHECK(c[1].dim_spanned == 3);

  const auto ai3 = PairDescriptor::make(PairKind::AI, 3);
  for (const auto& r : generation_check(ai3, 2, 4, recommended_samples(ai3, 2, 4), 4))
    CHECK(r.equal());
}

TEST_CASE("under-sampled generation is inconclusive") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const auto reps = generation_check(ai, 2, 4, 3, 5);
  // degree 4 needs 19 independent evaluations; 3 points cannot show them
  CHECK(reps[3].status == GenerationStatus::Inconclusive);
  CHECK(reps[3].dim_spanned <= 3);
  CHECK(reps[0].status == GenerationStatus::Equal);
}

TEST_CASE("power sums generate in one variable set") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  for (const auto& r : generation_check(ai, 1, 4, 20, 6)) CHECK(r.status == GenerationStatus::Equal);
}

TEST_CASE("weyl invariance") {
  const auto ai = PairDescriptor::make(PairKind::AI, 2);
  const CartanPoint pt{{1, 2}, {3, 4}};
  const auto w = TraceWord::power(PairKind::AI, {1, 1});
  const auto same = check_weyl_invariance(ai, 2, w, WeylElement::identity(2), pt);
  CHECK(same.passed);
  const auto swap = check_weyl_invariance(ai, 2, w, WeylElement{{1, 0}, {1, 1}}, pt);
  CHECK(swap.passed);
  CHECK(swap.lhs == 11);

  const auto ci = PairDescriptor::make(PairKind::CI, 1);
  const auto flip = check_weyl_invariance(ci, 1, TraceWord::product(PairKind::CI, {{0, 0}}),
                                          WeylElement{{0}, {-1}}, CartanPoint{{3}});
  CHECK(flip.passed);
  CHECK(flip.lhs == 9);
}

TEST_CASE("pfaffian checks") {
  const auto aii = PairDescriptor::make(PairKind::AII, 2);
  Rng rng(7);
  for (int i = 0; i < 10; ++i) CHECK(check_pfaffian_square(aii, sample_g1(aii, rng)).passed);
  // N+ on a product of commuting elements picks up N+(I)
  const Rational sign = pfaffian_norm(RMatrix::identity(4), aii);
  CHECK(sign == -1);
  CHECK(pfaffian_norm(RMatrix::identity(6), PairDescriptor::make(PairKind::AII, 3)) == -1);
  CHECK(pfaffian_norm(RMatrix::identity(8), PairDescriptor::make(PairKind::AII, 4)) == 1);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Trial t = sample_trial(aii, 2, s);
    const auto m = check_norm_multiplicativity(aii, t.tuple.mats[0], t.tuple.mats[1]);
    CHECK(m.det_identity);
    if (m.norm_x * m.norm_y != 0) CHECK(m.sign == -1);
  }
}

TEST_CASE("kron det invariance") {
  const auto bdi = PairDescriptor::make(PairKind::BDI, 2, 2);
  Rng rng(8);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Trial t = sample_trial(bdi, 2, s);
    const auto inv = KroneckerDetInvariant::make(
        2, {RMatrix{{1, 2}, {3, 4}}, RMatrix{{0, 1}, {Rational(-1, 2), 2}}});
    const auto k = check_kron_det(t, inv, sample_g0(bdi, rng));
    CHECK(k.passed);
    CHECK(k.original == k.conjugated);
    CHECK(k.original == k.restricted);
  }
}
