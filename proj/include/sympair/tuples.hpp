#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympair/matrix.hpp"
#include "sympair/pairs.hpp"

namespace sympair {

/// The Cartan point and group element a tuple was conjugated from.
struct Provenance {
  CartanPoint point;
  RMatrix g;
};

/// A d-tuple of g1 matrices, meant to commute pairwise. Tuples built by
/// from_cartan are checked at construction; hand-built ones are only
/// checked by validate().
struct CommutingTuple {
  PairDescriptor pair;
  std::vector<RMatrix> mats;
  std::optional<Provenance> provenance;

  std::size_t d() const { return mats.size(); }
};

/// Ad(g) applied to cartan_embed(pt). Throws InvariantViolation if the
/// result fails validation.
CommutingTuple from_cartan(const PairDescriptor& p, const CartanPoint& pt, const RMatrix& g);

struct ValidationItem {
  std::string name;  // e.g. "g1[0]", "commute[0,2]", "provenance[1]"
  bool passed;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool all_passed() const;
  std::vector<std::string> failures() const;
};

ValidationReport validate(const CommutingTuple& t);

/// Off-diagonal blocks x_i = [[0, Q_i], [R_i, 0]]; Q_i is n x m.
struct BlockParts {
  RMatrix q;
  RMatrix r;
};

/// AIII, BDI and CI only; DomainError otherwise.
std::vector<BlockParts> block_parts(const CommutingTuple& t);

}  // namespace sympair

namespace sympair {

/// Ad(g) applied to every member; provenance (if any) becomes (pt, g * g_old).
CommutingTuple conjugate(const CommutingTuple& t, const RMatrix& g);

}  // namespace sympair
