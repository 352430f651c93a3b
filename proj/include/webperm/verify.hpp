#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "webperm/enumeration.hpp"
#include "webperm/transition.hpp"

namespace webperm {

/// Named invariant suites. Each returns one ClaimReport per compared identity.
enum class Suite { All, Euler, Entringer, Genocchi, Conjecture, Oracle, Bijections };

Suite parse_suite(const std::string& name);
const char* to_string(Suite suite);

/// Largest n a suite runs without an explicit override.
int default_cap(Suite suite);

struct SuiteOptions {
  int max_n = 6;
  std::uint64_t seed = 0;
  int trials = 20;
};

std::vector<ClaimReport> run_suite(Suite suite, const SuiteOptions& options);

/// |Web_n| = E_{n+1}, with E from the boustrophedon.
std::vector<ClaimReport> euler_suite(int max_n);
/// First-letter refinement against Entringer numbers, and the row sums.
std::vector<ClaimReport> entringer_suite(int max_n);
/// f(n) = g_n, f(n, 2k) = 0 and f(n, n) = 0.
std::vector<ClaimReport> genocchi_suite(int max_n);
/// Syzygy expansion against matrix rows, exact numeric evaluation, resolution agreement
/// and the support pattern.
std::vector<ClaimReport> oracle_suite(int max_n, std::uint64_t seed, int trials);
/// The same four checks for a single matrix. Row r is sampled with seed + r.
std::vector<ClaimReport> matrix_checks(const TransitionMatrix& a, std::uint64_t seed, int trials);
/// Foata round trip, phi(Web_n) = AC_{n+2}, 312-avoiders onto Dyck paths, matching/Dyck
/// bijections, and resolution vs cycle characterization of Web_n.
std::vector<ClaimReport> bijection_suite(int max_n);

}  // namespace webperm
