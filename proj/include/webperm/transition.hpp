#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "webperm/common.hpp"
#include "webperm/dyck.hpp"
#include "webperm/grid.hpp"
#include "webperm/matching.hpp"
#include "webperm/permutation.hpp"

namespace webperm {

/// One row of the web permutation table: sigma, D(sigma) and M(sigma).
struct WebRecord {
  Permutation sigma;
  DyckPath dyck;
  Matching matching;
};

enum class WebSource { Resolve, Characterize };

/// Web_n with both Dyck paths attached, sorted by D(sigma) from the minimum path upward
/// (reverse table order) and then by sigma.
std::vector<WebRecord> web_table(int n, WebSource source);

enum class EntryMethod {
  Characterization,  ///< count web permutations with D(sigma) <= D(M) and M(sigma) = M'
  Resolution,        ///< resolve G(id, E(M)) and count terminals tracing to M'
};

/// a_{MM'} for nonnesting M and noncrossing M' of the same size.
BigInt transition_entry(const Matching& m, const Matching& m_prime,
                        EntryMethod method = EntryMethod::Characterization);

/// A = (a_{MM'}) with rows indexed by NN_2n and columns by NC_2n, both in table order.
/// Only the shape is enforced on construction; support_check audits the rest.
class TransitionMatrix {
 public:
  TransitionMatrix(int n, std::vector<Matching> rows, std::vector<Matching> cols,
                   std::vector<BigInt> entries);

  int n() const { return n_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Matching>& row_labels() const { return rows_; }
  const std::vector<Matching>& col_labels() const { return cols_; }

  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_.size() + c]; }

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  int n_;
  std::vector<Matching> rows_;
  std::vector<Matching> cols_;
  std::vector<BigInt> entries_;
};

inline constexpr int kDefaultMatrixCap = 8;

/// Throws ResourceLimitError when n exceeds cap.
TransitionMatrix transition_matrix(int n, EntryMethod method = EntryMethod::Characterization,
                                   int cap = kDefaultMatrixCap);

struct SupportViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  BigInt value;
  std::string reason;
};

struct SupportReport {
  std::vector<SupportViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks a_{MM'} > 0 exactly when D(M') <= D(M), ones on the diagonal and zeros
/// strictly below it.
SupportReport support_check(const TransitionMatrix& a);

std::string to_csv(const TransitionMatrix& a);

/// bmatrix with the strictly lower triangle left blank.
std::string to_latex(const TransitionMatrix& a);

}  // namespace webperm
