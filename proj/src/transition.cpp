#include "webperm/transition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "webperm/andre.hpp"

namespace webperm {

std::vector<WebRecord> web_table(int n, WebSource source) {
  const auto perms =
      source == WebSource::Resolve ? web_permutations(n) : web_permutations_by_cycles(n);
  std::vector<WebRecord> table;
  table.reserve(perms.size());
  for (const Permutation& sigma : perms)
    table.push_back({sigma, dyck_of_permutation(sigma), web_matching(sigma)});
  std::stable_sort(table.begin(), table.end(), [](const WebRecord& a, const WebRecord& b) {
    const auto ka = table_order_key(a.dyck);
    const auto kb = table_order_key(b.dyck);
    if (ka != kb) return ka > kb;
    return a.sigma < b.sigma;
  });
  return table;
}

namespace {

void require_pair(const Matching& m, const Matching& m_prime) {
  require(!m.has_nesting(), "row label " + m.str() + " is not nonnesting");
  require(!m_prime.has_crossing(), "column label " + m_prime.str() + " is not noncrossing");
  require(m.n() == m_prime.n(), "row and column labels have different sizes");
}

std::vector<Matching> labels(int n, MatchingClass cls) {
  std::vector<Matching> out;
  for (const DyckPath& p : enumerate_dyck(n)) out.push_back(matching_from_dyck(p, cls));
  return out;
}

}  // namespace

BigInt transition_entry(const Matching& m, const Matching& m_prime, EntryMethod method) {
  require_pair(m, m_prime);
  BigInt count = 0;
  if (method == EntryMethod::Characterization) {
    const DyckPath bound = dyck_of_matching(m);
    for (const Permutation& sigma : web_permutations_by_cycles(m.n()))
      if (dyck_leq(dyck_of_permutation(sigma), bound) && web_matching(sigma) == m_prime) ++count;
  } else {
    for (const Permutation& sigma : web_permutations_for(m))
      if (web_matching(sigma) == m_prime) ++count;
  }
  return count;
}

TransitionMatrix::TransitionMatrix(int n, std::vector<Matching> rows, std::vector<Matching> cols,
                                   std::vector<BigInt> entries)
    : n_(n), rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
  require(rows_.size() == cols_.size(), "transition matrix must be square");
  require(entries_.size() == rows_.size() * cols_.size(), "entry count does not match labels");
}

TransitionMatrix transition_matrix(int n, EntryMethod method, int cap) {
  require(n >= 1, "transition matrix needs n >= 1");
  if (n > cap)
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the matrix cap " +
                             std::to_string(cap));
  auto rows = labels(n, MatchingClass::Nonnesting);
  auto cols = labels(n, MatchingClass::Noncrossing);
  std::map<Matching, std::size_t> column_of;
  for (std::size_t c = 0; c < cols.size(); ++c) column_of.emplace(cols[c], c);

  std::vector<BigInt> entries(rows.size() * cols.size(), 0);
  if (method == EntryMethod::Characterization) {
    const auto table = web_table(n, WebSource::Characterize);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const DyckPath bound = dyck_of_matching(rows[r]);
      for (const WebRecord& rec : table)
        if (dyck_leq(rec.dyck, bound)) ++entries[r * cols.size() + column_of.at(rec.matching)];
    }
  } else {
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const Permutation& sigma : web_permutations_for(rows[r]))
        ++entries[r * cols.size() + column_of.at(web_matching(sigma))];
  }
  return TransitionMatrix(n, std::move(rows), std::move(cols), std::move(entries));
}

SupportReport support_check(const TransitionMatrix& a) {
  SupportReport report;
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    const DyckPath row_path = dyck_of_matching(a.row_labels()[r]);
    for (std::size_t c = 0; c < a.dimension(); ++c) {
      const DyckPath col_path = dyck_of_matching(a.col_labels()[c]);
      const BigInt& v = a(r, c);
      auto flag = [&](std::string reason) { report.violations.push_back({r, c, v, std::move(reason)}); };
      const bool positive = v > 0;
      if (positive != dyck_leq(col_path, row_path))
        flag(positive ? "positive entry with D(M') not contained in D(M)"
                      : "zero entry with D(M') contained in D(M)");
      if (row_path == col_path && v != 1) flag("diagonal entry is not 1");
      if (c < r && v != 0) flag("nonzero entry below the diagonal");
    }
  }
  return report;
}

std::string to_csv(const TransitionMatrix& a) {
  std::ostringstream out;
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    for (std::size_t c = 0; c < a.dimension(); ++c) out << (c ? "," : "") << a(r, c);
    out << '\n';
  }
  return out.str();
}

std::string to_latex(const TransitionMatrix& a) {
  std::ostringstream out;
  out << "\\begin{bmatrix}\n";
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    out << "  ";
    for (std::size_t c = 0; c < a.dimension(); ++c) {
      if (c) out << " & ";
      if (c < r && a(r, c) == 0)
        out << ' ';
      else
        out << a(r, c);
    }
    out << (r + 1 < a.dimension() ? " \\\\\n" : "\n");
  }
  out << "\\end{bmatrix}\n";
  return out.str();
}

}  // namespace webperm
