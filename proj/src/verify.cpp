#include "webperm/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "webperm/andre.hpp"
#include "webperm/dyck.hpp"
#include "webperm/grid.hpp"
#include "webperm/matching.hpp"
#include "webperm/oracle.hpp"
#include "webperm/transition.hpp"

namespace webperm {

namespace {

ClaimReport claim(std::string text, int n, std::optional<int> k, BigInt lhs, BigInt rhs) {
  ClaimReport r;
  r.claim = std::move(text);
  r.n = n;
  r.k = k;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.pass = r.lhs == r.rhs;
  return r;
}

void append(std::vector<ClaimReport>& into, std::vector<ClaimReport> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "euler") return Suite::Euler;
  if (name == "entringer") return Suite::Entringer;
  if (name == "genocchi") return Suite::Genocchi;
  if (name == "conjecture") return Suite::Conjecture;
  if (name == "oracle") return Suite::Oracle;
  if (name == "bijections") return Suite::Bijections;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Euler: return "euler";
    case Suite::Entringer: return "entringer";
    case Suite::Genocchi: return "genocchi";
    case Suite::Conjecture: return "conjecture";
    case Suite::Oracle: return "oracle";
    case Suite::Bijections: return "bijections";
  }
  return "?";
}

int default_cap(Suite suite) {
  switch (suite) {
    case Suite::Euler:
    case Suite::Entringer:
    case Suite::Genocchi:
    case Suite::Conjecture:
      return 8;
    case Suite::All:
    case Suite::Oracle:
    case Suite::Bijections:
      return 6;
  }
  return 6;
}

std::vector<ClaimReport> euler_suite(int max_n) {
  std::vector<ClaimReport> out;
  const auto euler = euler_numbers(max_n + 1);
  for (int n = 1; n <= max_n; ++n) {
    const auto web = web_permutations_by_cycles(n);
    out.push_back(claim("|Web_n| = E_{n+1}", n, std::nullopt, web.size(),
                        euler[static_cast<std::size_t>(n + 1)]));
  }
  return out;
}

std::vector<ClaimReport> entringer_suite(int max_n) {
  std::vector<ClaimReport> out;
  const auto euler = euler_numbers(max_n + 1);
  for (int n = 1; n <= max_n; ++n) {
    const auto row = entringer_row(n);
    std::vector<BigInt> by_first(static_cast<std::size_t>(n) + 1, 0);
    for (const Permutation& sigma : web_permutations_by_cycles(n)) ++by_first[static_cast<std::size_t>(sigma(1))];
    BigInt row_sum = 0;
    for (int k = 1; k <= n; ++k) {
      row_sum += row[static_cast<std::size_t>(k)];
      out.push_back(claim("#{sigma in Web_n : sigma_1 = n+1-k} = E(n,k)", n, k,
                          by_first[static_cast<std::size_t>(n + 1 - k)], row[static_cast<std::size_t>(k)]));
    }
    out.push_back(claim("sum_k E(n,k) = E_{n+1}", n, std::nullopt, row_sum,
                        euler[static_cast<std::size_t>(n + 1)]));
  }
  return out;
}

std::vector<ClaimReport> genocchi_suite(int max_n) {
  std::vector<ClaimReport> out;
  const auto g = genocchi(max_n);
  for (int n = 1; n <= max_n; ++n) {
    const auto counts = genocchi_counts(n);
    out.push_back(claim("f(n) = g_n", n, std::nullopt, counts.total, g[static_cast<std::size_t>(n - 1)]));
    for (int k = 2; k <= n; k += 2)
      out.push_back(claim("f(n,2k) = 0", n, k, counts.by_first_letter[static_cast<std::size_t>(k)], 0));
    if (n > 1)
      out.push_back(claim("f(n,n) = 0", n, n, counts.by_first_letter[static_cast<std::size_t>(n)], 0));
  }
  return out;
}

std::vector<ClaimReport> matrix_checks(const TransitionMatrix& a, std::uint64_t seed, int trials) {
  std::vector<ClaimReport> out;
  const int n = a.n();
  const TransitionMatrix by_resolution = transition_matrix(n, EntryMethod::Resolution, n);
  std::size_t agreeing = 0;
  for (std::size_t r = 0; r < a.dimension(); ++r)
    for (std::size_t c = 0; c < a.dimension(); ++c) agreeing += a(r, c) == by_resolution(r, c);
  out.push_back(claim("characterization entries = resolution entries", n, std::nullopt, agreeing,
                      a.dimension() * a.dimension()));

  out.push_back(claim("support pattern violations", n, std::nullopt, support_check(a).violations.size(), 0));

  std::size_t rows_matching = 0;
  std::size_t rows_verified = 0;
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    const Matching& m = a.row_labels()[r];
    const CoefficientVector expansion = syzygy_expand(m);
    CoefficientVector row;
    for (std::size_t c = 0; c < a.dimension(); ++c)
      if (a(r, c) != 0) row[a.col_labels()[c]] = a(r, c);
    rows_matching += expansion == row;
    rows_verified += verify_expansion(m, expansion, trials, seed + r).holds;
  }
  out.push_back(claim("syzygy expansion = transition matrix row", n, std::nullopt, rows_matching, a.dimension()));
  out.push_back(claim("exact evaluation of Delta_M = sum c Delta_M' (" + std::to_string(trials) +
                          " samples per row)",
                      n, std::nullopt, rows_verified, a.dimension()));
  return out;
}

std::vector<ClaimReport> oracle_suite(int max_n, std::uint64_t seed, int trials) {
  std::vector<ClaimReport> out;
  for (int n = 1; n <= max_n; ++n)
    append(out, matrix_checks(transition_matrix(n, EntryMethod::Characterization, n), seed, trials));
  return out;
}

std::vector<ClaimReport> bijection_suite(int max_n) {
  std::vector<ClaimReport> out;
  for (int n = 1; n <= max_n; ++n) {
    std::size_t round_trips = 0;
    std::size_t cc_equals_rlmin = 0;
    std::size_t avoiders = 0;
    std::size_t avoiders_web = 0;
    std::set<std::string> avoider_paths;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const auto word = foata(sigma);
      round_trips += foata_inverse(word) == sigma;
      cc_equals_rlmin += cycles_of(sigma).size() == static_cast<std::size_t>(right_to_left_minima(word));
      if (is_312_avoiding(sigma)) {
        ++avoiders;
        avoiders_web += is_web(sigma);
        avoider_paths.insert(dyck_of_permutation(sigma).str());
      }
    });
    const BigInt total = factorial(n);
    out.push_back(claim("foata_inverse(foata(sigma)) = sigma on S_n", n, std::nullopt, round_trips, total));
    out.push_back(claim("cc(sigma) = rlmin(foata(sigma)) on S_n", n, std::nullopt, cc_equals_rlmin, total));
    out.push_back(claim("312-avoiders are web permutations", n, std::nullopt, avoiders_web, avoiders));
    out.push_back(claim("#312-avoiders = Catalan(n)", n, std::nullopt, avoiders, catalan(n)));
    out.push_back(claim("D is injective on 312-avoiders onto Dyck_2n", n, std::nullopt,
                        avoider_paths.size(), enumerate_dyck(n).size()));

    const auto web = web_permutations_by_cycles(n);
    std::set<Cycle> images;
    for (const Permutation& sigma : web) images.insert(phi(sigma));
    const auto ac = andre_cycles(n + 2);
    const std::set<Cycle> ac_set(ac.begin(), ac.end());
    out.push_back(claim("phi(Web_n) = AC_{n+2} (common elements)", n, std::nullopt,
                        images == ac_set ? images.size() : 0, ac_set.size()));

    const auto resolved = web_permutations(n);
    out.push_back(claim("resolution Web_n = Andre-cycle Web_n (common elements)", n, std::nullopt,
                        resolved == web ? resolved.size() : 0, web.size()));

    std::size_t dyck_round_trips = 0;
    const auto paths = enumerate_dyck(n);
    for (const DyckPath& p : paths)
      for (auto cls : {MatchingClass::Noncrossing, MatchingClass::Nonnesting}) {
        const Matching m = matching_from_dyck(p, cls);
        const bool in_class = cls == MatchingClass::Noncrossing ? !m.has_crossing() : !m.has_nesting();
        dyck_round_trips += in_class && dyck_of_matching(m) == p;
      }
    out.push_back(claim("D o matching_from_dyck = id on Dyck_2n (NC and NN)", n, std::nullopt,
                        dyck_round_trips, 2 * paths.size()));
  }
  return out;
}

std::vector<ClaimReport> run_suite(Suite suite, const SuiteOptions& options) {
  require(options.max_n >= 1, "--max-n must be at least 1");
  switch (suite) {
    case Suite::Euler: return euler_suite(options.max_n);
    case Suite::Entringer: return entringer_suite(options.max_n);
    case Suite::Genocchi: return genocchi_suite(options.max_n);
    case Suite::Conjecture: return verify_conjecture(options.max_n);
    case Suite::Oracle: return oracle_suite(options.max_n, options.seed, options.trials);
    case Suite::Bijections: return bijection_suite(options.max_n);
    case Suite::All: {
      std::vector<ClaimReport> out;
      for (Suite s : {Suite::Euler, Suite::Entringer, Suite::Genocchi, Suite::Conjecture, Suite::Oracle,
                      Suite::Bijections})
        append(out, run_suite(s, options));
      return out;
    }
  }
  return {};
}

}  // namespace webperm
