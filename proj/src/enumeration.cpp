#include "webperm/enumeration.hpp"

#include "webperm/andre.hpp"
#include "webperm/grid.hpp"
#include "webperm/matching.hpp"

namespace webperm {

SeidelTriangle::SeidelTriangle(int rows) {
  require(rows >= 1, "the Seidel triangle needs at least one row");
  rows_.push_back({1});
  for (int i = 2; i <= rows; ++i) {
    const int width = (i + 1) / 2;
    std::vector<BigInt> row(static_cast<std::size_t>(width), 0);
    if (i % 2 == 1) {
      for (int j = 1; j <= width; ++j) row[static_cast<std::size_t>(j - 1)] = (j > 1 ? row[static_cast<std::size_t>(j - 2)] : BigInt(0)) + at(i - 1, j);
    } else {
      for (int j = width; j >= 1; --j) row[static_cast<std::size_t>(j - 1)] = (j < width ? row[static_cast<std::size_t>(j)] : BigInt(0)) + at(i - 1, j);
    }
    rows_.push_back(std::move(row));
  }
}

BigInt SeidelTriangle::at(int i, int j) const {
  if (i < 1 || i > rows() || j < 1) return 0;
  const auto& r = rows_[static_cast<std::size_t>(i - 1)];
  return j <= static_cast<int>(r.size()) ? r[static_cast<std::size_t>(j - 1)] : BigInt(0);
}

std::vector<BigInt> genocchi(int upto) {
  require(upto >= 1, "genocchi needs upto >= 1");
  const SeidelTriangle s(upto);
  std::vector<BigInt> g;
  for (int m = 1; m <= upto; ++m) g.push_back(m % 2 == 1 ? s.at(m, (m + 1) / 2) : s.at(m, 1));
  return g;
}

std::vector<BigInt> euler_numbers(int upto) {
  require(upto >= 0, "euler_numbers needs upto >= 0");
  std::vector<BigInt> euler{1};
  std::vector<BigInt> previous{1};
  for (int m = 1; m <= upto; ++m) {
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, 0);
    if (m % 2 == 1) {
      for (int k = 1; k <= m; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] + previous[static_cast<std::size_t>(k - 1)];
      euler.push_back(row.back());
    } else {
      for (int k = m - 1; k >= 0; --k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k + 1)] + previous[static_cast<std::size_t>(k)];
      euler.push_back(row.front());
    }
    previous = std::move(row);
  }
  return euler;
}

std::vector<BigInt> entringer_row(int n) {
  require(n >= 0, "Entringer row index must be nonnegative");
  std::vector<BigInt> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 1; k <= m; ++k)
      next[static_cast<std::size_t>(k)] = next[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(m - k)];
    row = std::move(next);
  }
  return row;
}

BigInt entringer(int n, int k) {
  require(k >= 0 && k <= n, "Entringer index out of range");
  return entringer_row(n)[static_cast<std::size_t>(k)];
}

GenocchiCounts genocchi_counts(int n) {
  require(n >= 1, "f(n) needs n >= 1");
  GenocchiCounts counts;
  counts.n = n;
  counts.by_first_letter.assign(static_cast<std::size_t>(n) + 1, 0);
  const Matching base = Matching::base(n);
  for (const Permutation& sigma : web_permutations_by_cycles(n)) {
    if (web_matching(sigma) != base) continue;
    ++counts.by_first_letter[static_cast<std::size_t>(sigma(1))];
    ++counts.total;
    counts.witnesses.push_back(sigma);
  }
  return counts;
}

BigInt f_count(int n) { return genocchi_counts(n).total; }

BigInt f_count(int n, int k) {
  require(k >= 1 && k <= n, "f(n,k) needs 1 <= k <= n");
  return genocchi_counts(n).by_first_letter[static_cast<std::size_t>(k)];
}

StatTable stat_table(int max_n) {
  require(max_n >= 1, "stat_table needs max_n >= 1");
  StatTable table;
  table.g = genocchi(max_n);
  for (int n = 0; n <= max_n; ++n) table.entringer_rows.push_back(entringer_row(n));
  for (int n = 1; n <= max_n; ++n) {
    const auto counts = genocchi_counts(n);
    for (int k = 1; k <= n; ++k)
      table.f_values[{n, k}] = counts.by_first_letter[static_cast<std::size_t>(k)];
  }
  return table;
}

std::vector<ClaimReport> verify_conjecture(int max_n) {
  require(max_n >= 1, "verify_conjecture needs max_n >= 1");
  const SeidelTriangle s(std::max(1, max_n - 1));
  std::vector<ClaimReport> reports;
  for (int size = 1; size <= max_n; ++size) {
    const auto counts = genocchi_counts(size);
    const int half = (size + 1) / 2;
    for (int k = 1; k <= half; ++k) {
      const int letter = 2 * k - 1;
      // Odd sizes read row size-1 left to right, even sizes right to left.
      const int row = size - 1;
      const int col = size % 2 == 1 ? k : half - k + 1;
      const BigInt rhs = row == 0 ? BigInt(1) : s.at(row, col);
      ClaimReport r;
      r.claim = "f(" + std::to_string(size) + "," + std::to_string(letter) + ") = s(" +
                std::to_string(row) + "," + std::to_string(col) + ")";
      r.n = size;
      r.k = letter;
      r.lhs = counts.by_first_letter[static_cast<std::size_t>(letter)];
      r.rhs = rhs;
      r.pass = r.lhs == r.rhs;
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

std::map<int, BigInt> cc_distribution(int n) {
  require(n >= 0, "cc_distribution needs n >= 0");
  std::map<int, BigInt> dist;
  if (n == 0) {
    dist[0] = 1;
    return dist;
  }
  for (const Permutation& sigma : web_permutations_by_cycles(n))
    ++dist[static_cast<int>(cycles_of(sigma).size())];
  return dist;
}

}  // namespace webperm
