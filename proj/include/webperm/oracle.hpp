#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "webperm/common.hpp"
#include "webperm/matching.hpp"

namespace webperm {

/// Delta_M = sum over noncrossing M' of c_{MM'} Delta_{M'}; only nonzero coefficients stored.
using CoefficientVector = std::map<Matching, BigInt>;

/// Which crossing pair {a,c},{b,d} (a<b<c<d) the rewriting resolves next.
enum class SyzygyPolicy {
  FirstCrossing,  ///< smallest (a, b) lexicographically
  LastCrossing,   ///< largest (a, b) lexicographically
};

/// Repeatedly rewrites Delta_{ac} Delta_{bd} = Delta_{ab} Delta_{cd} + Delta_{ad} Delta_{bc}
/// on formal multisets of matchings until every term is noncrossing.
CoefficientVector syzygy_expand(const Matching& m, SyzygyPolicy policy = SyzygyPolicy::FirstCrossing);

/// A 2 x 2n integer specialization of the generic matrix z.
struct IntegerMatrixSample {
  std::array<std::vector<std::int64_t>, 2> rows;

  int columns() const { return static_cast<int>(rows[0].size()); }
};

inline constexpr std::int64_t kDefaultSampleMagnitude = 1000;

/// Entries uniform in [-magnitude, magnitude].
IntegerMatrixSample sample_matrix(int columns, std::mt19937_64& rng,
                                  std::int64_t magnitude = kDefaultSampleMagnitude);

/// Delta_{ij} = z_{1,i} z_{2,j} - z_{1,j} z_{2,i}; throws std::out_of_range unless 1 <= i < j <= 2n.
BigInt minor(const IntegerMatrixSample& z, int i, int j);

/// Product of Delta_{ij} over the arcs of m.
BigInt delta_product(const IntegerMatrixSample& z, const Matching& m);

struct ExpansionVerdict {
  bool holds = true;
  std::uint64_t seed = 0;
  int trials = 0;
  std::optional<IntegerMatrixSample> counterexample;

  explicit operator bool() const { return holds; }
};

/// Evaluates both sides of Delta_M = sum c_{MM'} Delta_{M'} exactly on `trials` seeded
/// samples; the first disagreeing sample is kept as the counterexample.
ExpansionVerdict verify_expansion(const Matching& m, const CoefficientVector& coeffs, int trials,
                                  std::uint64_t seed);

}  // namespace webperm
