#include "sympair/tuples.hpp"

#include "sympair/errors.hpp"
#include "sympair/linalg.hpp"

namespace sympair {

CommutingTuple from_cartan(const PairDescriptor& p, const CartanPoint& pt, const RMatrix& g) {
  const std::vector<RMatrix> cartan = cartan_embed(p, pt);
  CommutingTuple t{p, adjoint_all(p, g, cartan), Provenance{pt, g}};
  const ValidationReport report = validate(t);
  if (!report.all_passed()) {
    std::string msg = p.label() + ": from_cartan produced an invalid tuple:";
    for (const auto& f : report.failures()) msg += " " + f;
    throw InvariantViolation(msg);
  }
  return t;
}

bool ValidationReport::all_passed() const {
  for (const auto& item : items)
    if (!item.passed) return false;
  return true;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& item : items)
    if (!item.passed) out.push_back(item.name);
  return out;
}

ValidationReport validate(const CommutingTuple& t) {
  ValidationReport report;
  const std::size_t dim = t.pair.ambient_dim();
  std::vector<bool> shaped(t.d());
  for (std::size_t i = 0; i < t.d(); ++i) {
    const RMatrix& x = t.mats[i];
    shaped[i] = x.rows() == dim && x.cols() == dim;
    report.items.push_back({"g1[" + std::to_string(i) + "]", shaped[i] && is_in_g1(t.pair, x)});
  }
  for (std::size_t i = 0; i < t.d(); ++i)
    for (std::size_t j = i + 1; j < t.d(); ++j) {
      const bool ok = shaped[i] && shaped[j] && commutator(t.mats[i], t.mats[j]).is_zero();
      report.items.push_back(
          {"commute[" + std::to_string(i) + "," + std::to_string(j) + "]", ok});
    }
  if (t.provenance) {
    const Provenance& prov = *t.provenance;
    if (prov.point.d() != t.d() || prov.point.n() != t.pair.n()) {
      report.items.push_back({"provenance.shape", false});
    } else {
      const std::vector<RMatrix> cartan = cartan_embed(t.pair, prov.point);
      const RMatrix g_inv = inverse(prov.g);
      // g^{-1} x_i g must reproduce the embedded Cartan element.
      for (std::size_t i = 0; i < t.d(); ++i) {
        const bool ok = shaped[i] && g_inv * t.mats[i] * prov.g == cartan[i];
        report.items.push_back({"provenance[" + std::to_string(i) + "]", ok});
      }
    }
  }
  return report;
}

std::vector<BlockParts> block_parts(const CommutingTuple& t) {
  const PairDescriptor& p = t.pair;
  if (!p.is_block_kind())
    throw DomainError("block_parts needs AIII, BDI or CI, got " + p.label());
  const std::size_t n = p.n();
  const std::size_t m = p.m();
  std::vector<BlockParts> out;
  out.reserve(t.d());
  for (const auto& x : t.mats) {
    if (x.rows() != n + m || x.cols() != n + m) throw DimensionError("tuple matrix has wrong size");
    out.push_back({x.block(0, n, n, m), x.block(n, 0, m, n)});
  }
  return out;
}

}  // namespace sympair

namespace sympair {

CommutingTuple conjugate(const CommutingTuple& t, const RMatrix& g) {
  CommutingTuple out{t.pair, adjoint_all(t.pair, g, t.mats), std::nullopt};
  if (t.provenance) out.provenance = Provenance{t.provenance->point, g * t.provenance->g};
  return out;
}

}  // namespace sympair
