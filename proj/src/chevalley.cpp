#include "sympair/chevalley.hpp"

#include <algorithm>
#include <functional>

#include "sympair/errors.hpp"
#include "sympair/linalg.hpp"

namespace sympair {

Trial sample_trial(const PairDescriptor& p, std::size_t d, std::uint64_t seed, unsigned bound) {
  Rng rng(seed);
  CartanPoint pt = sample_cartan_point(p, d, rng, bound);
  RMatrix g = sample_g0(p, rng, bound);
  CommutingTuple t = from_cartan(p, pt, g);
  return Trial{std::move(pt), std::move(g), std::move(t)};
}

IdentityCheck check_restriction_identity(const Trial& trial, WordEvaluator& eval,
                                         const TraceWord& w, std::uint64_t seed) {
  if (w.is_constant())
    throw DomainError("restriction identity is not checked for the constant word " + to_text(w));
  Rational lhs = eval.trace(w);
  Rational rhs = restrict_trace_word(w, trial.point);
  const bool ok = lhs == rhs;
  return {trial.tuple.pair, trial.tuple.d(), w, seed, ok, std::move(lhs), std::move(rhs)};
}

std::vector<IdentityCheck> check_restriction_identities(const Trial& trial,
                                                        std::span<const TraceWord> words,
                                                        std::uint64_t seed) {
  WordEvaluator eval(trial.tuple);
  std::vector<IdentityCheck> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(check_restriction_identity(trial, eval, w, seed));
  return out;
}

IdentityCheck check_restriction_identity(const PairDescriptor& p, std::size_t d, const TraceWord& w,
                                         std::uint64_t seed, unsigned bound) {
  if (w.is_constant())
    throw DomainError("restriction identity is not checked for the constant word " + to_text(w));
  const Trial trial = sample_trial(p, d, seed, bound);
  return std::move(check_restriction_identities(trial, std::span<const TraceWord>(&w, 1), seed).front());
}

PolyCheck check_charpoly_factorization(const Trial& trial, const TraceWord& w) {
  const PairDescriptor& p = trial.tuple.pair;
  if (p.kind() != PairKind::AI && p.kind() != PairKind::AII)
    throw DomainError("charpoly factorization applies to AI/AII, not " + p.label());
  if (w.kind() != p.kind() || !w.is_power()) throw DomainError("word does not match " + p.label());
  const auto& a = w.power_word().exponents;
  if (a.size() != trial.point.d()) throw DimensionError("exponent vector length != d");

  std::vector<Rational> roots(p.n());
  for (std::size_t j = 0; j < p.n(); ++j) {
    roots[j] = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (unsigned e = 0; e < a[i]; ++e) roots[j] *= trial.point(i, j);
  }
  const RPoly base = RPoly::from_roots(roots);
  PolyCheck check{false, charpoly_word(w, trial.tuple), base, std::nullopt};
  if (p.kind() == PairKind::AI) {
    check.passed = check.lhs == check.rhs;
  } else {
    check.rhs = base * base;
    check.root = exact_sqrt(check.lhs);
    check.passed = check.lhs == check.rhs && check.root && *check.root == base;
  }
  return check;
}

PolyCheck check_charpoly_factorization(const PairDescriptor& p, std::size_t d,
                                       const std::vector<unsigned>& a, std::uint64_t seed,
                                       unsigned bound) {
  return check_charpoly_factorization(sample_trial(p, d, seed, bound), TraceWord::power(p.kind(), a));
}

PolyCheck check_block_charpoly(const Trial& trial, const TraceWord& w) {
  const PairDescriptor& p = trial.tuple.pair;
  if (!p.is_block_kind()) throw DomainError("block charpoly applies to AIII/BDI/CI, not " + p.label());
  if (w.kind() != p.kind() || w.is_power()) throw DomainError("word does not match " + p.label());
  if (w.min_tuple_length() > trial.point.d()) throw DimensionError("word indexes past d");

  std::vector<Rational> roots(p.n());
  for (std::size_t j = 0; j < p.n(); ++j) {
    roots[j] = 1;
    for (const auto& [a, b] : w.block_word().factors) roots[j] *= trial.point(a, j) * trial.point(b, j);
  }
  WordEvaluator eval(trial.tuple);
  PolyCheck check{false, charpoly(eval.word_matrix(w)), RPoly::from_roots(roots), std::nullopt};
  check.passed = check.lhs == check.rhs;
  return check;
}

PolyCheck check_block_charpoly(const PairDescriptor& p, std::size_t d, const TraceWord& w,
                               std::uint64_t seed, unsigned bound) {
  return check_block_charpoly(sample_trial(p, d, seed, bound), w);
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t invariant_dim(const PairDescriptor& p, std::size_t d, unsigned delta) {
  const std::size_t n = p.n();
  // dp[s][e]: multisets of s columns with total degree e, built item by item.
  std::vector<std::vector<std::uint64_t>> dp(n + 1, std::vector<std::uint64_t>(delta + 1, 0));
  dp[0][0] = 1;
  for (unsigned k = 0; k <= delta; ++k) {
    if (p.hyperoctahedral_weyl() && k % 2 == 1) continue;
    // Exponent columns in N^d of degree k.
    const std::uint64_t columns = d == 0 ? (k == 0 ? 1 : 0) : binomial(k + d - 1, d - 1);
    for (std::uint64_t c = 0; c < columns; ++c)
      for (std::size_t s = 0; s < n; ++s)
        for (unsigned e = 0; e + k <= delta; ++e) dp[s + 1][e + k] += dp[s][e];
  }
  return static_cast<std::size_t>(dp[n][delta]);
}

std::string_view to_string(GenerationStatus s) {
  switch (s) {
    case GenerationStatus::Equal: return "equal";
    case GenerationStatus::Deficient: return "deficient";
    case GenerationStatus::Exceeds: return "exceeds";
    case GenerationStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::size_t recommended_samples(const PairDescriptor& p, std::size_t d, unsigned max_degree) {
  std::size_t most = 0;
  for (unsigned delta = 1; delta <= max_degree; ++delta) most = std::max(most, invariant_dim(p, d, delta));
  return most + kRankMargin + 3;
}

std::vector<GradedDimReport> generation_check(const PairDescriptor& p, std::size_t d,
                                              unsigned max_degree, std::size_t samples,
                                              std::uint64_t seed, unsigned bound) {
  const std::vector<TraceWord> gens = enumerate_trace_words(p.kind(), d, max_degree, max_degree / 2);

  Rng rng(seed);
  // values[g][s]: generator g restricted and evaluated at sample point s.
  std::vector<std::vector<Rational>> values(gens.size(), std::vector<Rational>(samples));
  for (std::size_t s = 0; s < samples; ++s) {
    const CartanPoint pt = sample_cartan_point(p, d, rng, bound);
    for (std::size_t g = 0; g < gens.size(); ++g) values[g][s] = restrict_trace_word(gens[g], pt);
  }

  std::vector<GradedDimReport> reports;
  for (unsigned delta = 1; delta <= max_degree; ++delta) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> current(samples, Rational(1));
    // Multisets of generators (non-decreasing index) with degree sum delta.
    std::function<void(std::size_t, unsigned, const std::vector<Rational>&)> rec =
        [&](std::size_t start, unsigned left, const std::vector<Rational>& acc) {
          if (left == 0) {
            rows.push_back(acc);
            return;
          }
          for (std::size_t g = start; g < gens.size(); ++g) {
            const unsigned deg = gens[g].degree();
            if (deg > left) continue;
            std::vector<Rational> next(samples);
            for (std::size_t s = 0; s < samples; ++s) next[s] = acc[s] * values[g][s];
            rec(g, left - deg, next);
          }
        };
    rec(0, delta, current);

    RMatrix eval(rows.size(), samples);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t s = 0; s < samples; ++s) eval(r, s) = rows[r][s];

    GradedDimReport rep{delta, invariant_dim(p, d, delta), rank(eval), rows.size(), samples,
                        GenerationStatus::Equal};
    if (rep.dim_spanned > rep.dim_invariants) {
      rep.status = GenerationStatus::Exceeds;
    } else if (rep.dim_spanned < rep.dim_invariants) {
      rep.status = samples < rep.dim_invariants + kRankMargin ? GenerationStatus::Inconclusive
                                                              : GenerationStatus::Deficient;
    }
    reports.push_back(rep);
  }
  return reports;
}

ValueCheck check_weyl_invariance(const PairDescriptor& p, std::size_t d, const TraceWord& w,
                                 const WeylElement& weyl, const CartanPoint& pt) {
  if (pt.d() != d) throw DimensionError("Cartan point has d = " + std::to_string(pt.d()));
  if (w.kind() != p.kind()) throw DomainError("word does not match " + p.label());
  Rational moved = restrict_trace_word(w, weyl_act(p, weyl, pt));
  Rational original = restrict_trace_word(w, pt);
  const bool ok = moved == original;
  return {ok, std::move(moved), std::move(original)};
}

ValueCheck check_pfaffian_square(const PairDescriptor& p, const RMatrix& x) {
  const Rational norm = pfaffian_norm(x, p);
  Rational d = det(x);
  Rational sq = norm * norm;
  const bool ok = d == sq;
  return {ok, std::move(d), std::move(sq)};
}

MultiplicativityCheck check_norm_multiplicativity(const PairDescriptor& p, const RMatrix& x,
                                                  const RMatrix& y) {
  const RMatrix xy = x * y;
  MultiplicativityCheck c{det(xy) == det(x) * det(y), pfaffian_norm(xy, p), pfaffian_norm(x, p),
                          pfaffian_norm(y, p), 0};
  const Rational prod = c.norm_x * c.norm_y;
  if (prod != 0) {
    const Rational ratio = c.norm_xy / prod;
    if (ratio == 1) c.sign = 1;
    if (ratio == -1) c.sign = -1;
  }
  return c;
}

KronCheck check_kron_det(const Trial& trial, const KroneckerDetInvariant& inv,
                         const RMatrix& fresh_g) {
  const CommutingTuple moved = conjugate(trial.tuple, fresh_g);
  KronCheck c{false, eval_kron_det(inv, trial.tuple), eval_kron_det(inv, moved),
              restrict_kron_det(inv, trial.point)};
  c.passed = c.original == c.conjugated && c.original == c.restricted;
  return c;
}

}  // namespace sympair
