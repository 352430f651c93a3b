#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "webperm/andre.hpp"
#include "webperm/enumeration.hpp"
#include "webperm/serialize.hpp"
#include "webperm/transition.hpp"
#include "webperm/verify.hpp"

namespace webperm::cli {

using nlohmann::json;

namespace {

// Throws with a message naming the override flag.
void check_cap(const char* what, int n, int cap, bool unsafe) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1, got " + std::to_string(n));
  if (n > cap && !unsafe)
    throw ResourceLimitError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the default cap of " +
                             std::to_string(cap) + "; pass --unsafe-cap to run anyway");
}

json run_report(const std::string& command, json parameters, std::uint64_t seed,
                const std::vector<ClaimReport>& checks, const std::optional<std::string>& payload_path,
                std::optional<double> wall_time_s) {
  std::size_t passed = 0;
  json list = json::array();
  json failures = json::array();
  for (const ClaimReport& c : checks) {
    passed += c.pass;
    list.push_back(to_json(c));
    if (!c.pass) failures.push_back(to_json(c));
  }
  json report = {{"command", command},
                 {"parameters", std::move(parameters)},
                 {"seed", seed},
                 {"summary",
                  {{"total", checks.size()},
                   {"passed", passed},
                   {"failed", checks.size() - passed},
                   {"pass", passed == checks.size()}}},
                 {"checks", std::move(list)},
                 {"failures", std::move(failures)},
                 {"payload_path", payload_path ? json(*payload_path) : json(nullptr)}};
  if (wall_time_s) report["wall_time_s"] = *wall_time_s;
  return report;
}

DyckPath shown_dyck(const WebRecord& r, const std::string& dyck_of) {
  return dyck_of == "sigma" ? r.dyck : dyck_of_permutation(r.sigma.inverse());
}

std::string row_text(const WebRecord& r, const std::string& dyck_of) {
  return r.sigma.str() + " = " + cycle_notation(r.sigma) + "  " + shown_dyck(r, dyck_of).str() + "  " +
         dyck_of_matching(r.matching).str();
}

bool same_rows(const std::vector<WebRecord>& a, const std::vector<WebRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k].sigma == b[k].sigma && a[k].dyck == b[k].dyck && a[k].matching == b[k].matching)) return false;
  return true;
}

template <typename F>
int guarded(Streams io, F&& body) {
  try {
    return body();
  } catch (const ResourceLimitError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("WEBPERM_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::size_t used = 0;
  const std::string text(env);
  const auto value = std::stoull(text, &used);
  if (used != text.size()) throw std::invalid_argument("WEBPERM_SEED is not an unsigned integer: " + text);
  return value;
}

int cmd_web(const WebArgs& args, Streams io) {
  return guarded(io, [&] {
    require(args.format == "text" || args.format == "json", "unknown format '" + args.format + "'");
    require(args.source == "resolve" || args.source == "characterize" || args.source == "both",
            "unknown source '" + args.source + "'");
    require(args.dyck_of == "inverse" || args.dyck_of == "sigma", "unknown --dyck-of '" + args.dyck_of + "'");
    const bool resolves = args.source != "characterize";
    check_cap("web", args.n, resolves ? kResolveCap : kFilterCap, args.unsafe_cap);

    const auto table = web_table(args.n, resolves ? WebSource::Resolve : WebSource::Characterize);
    std::optional<bool> agreement;
    if (args.source == "both") {
      agreement = same_rows(table, web_table(args.n, WebSource::Characterize));
      if (*agreement)
        io.err << "agreement OK: resolution and cycle characterization give the same " << table.size()
               << " rows\n";
      else
        io.err << "agreement FAILED: resolution and cycle characterization differ at n = " << args.n << '\n';
    }

    if (args.format == "text") {
      for (const WebRecord& r : table) io.out << row_text(r, args.dyck_of) << '\n';
    } else {
      json rows = json::array();
      for (const WebRecord& r : table)
        rows.push_back({{"sigma", r.sigma.str()},
                        {"cycles", cycle_notation(r.sigma)},
                        {"dyck", to_json(r.dyck)},
                        {"dyck_inverse", to_json(dyck_of_permutation(r.sigma.inverse()))},
                        {"matching", to_json(r.matching)},
                        {"matching_dyck", dyck_of_matching(r.matching).str()}});
      json doc = {{"n", args.n}, {"source", args.source}, {"count", table.size()}, {"rows", std::move(rows)}};
      if (agreement) doc["agreement"] = *agreement;
      io.out << doc.dump(2) << '\n';
    }
    return agreement.value_or(true) ? kExitOk : kExitCheckFailed;
  });
}

int cmd_matrix(const MatrixArgs& args, Streams io) {
  return guarded(io, [&] {
    require(args.format == "csv" || args.format == "json" || args.format == "latex",
            "unknown format '" + args.format + "'");
    check_cap("matrix", args.n, args.verify ? kResolveCap : kFilterCap, args.unsafe_cap);

    const TransitionMatrix a = transition_matrix(args.n, EntryMethod::Characterization, args.n);
    if (args.format == "csv")
      io.out << to_csv(a);
    else if (args.format == "latex")
      io.out << to_latex(a);
    else
      io.out << to_json(a).dump(2) << '\n';

    if (!args.verify) return kExitOk;
    const auto checks = matrix_checks(a, args.seed, args.trials);
    const json report = run_report("matrix", {{"n", args.n}, {"trials", args.trials}}, args.seed, checks,
                                   std::nullopt, std::nullopt);
    io.err << report.dump(2) << '\n';
    return report["summary"]["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
  });
}

int cmd_verify(const VerifyArgs& args, Streams io) {
  return guarded(io, [&] {
    const Suite suite = parse_suite(args.suite);
    const int max_n = args.max_n.value_or(default_cap(suite));
    check_cap("verify", max_n, default_cap(suite), args.unsafe_cap);
    require(args.trials >= 1, "--trials must be at least 1");

    const auto start = std::chrono::steady_clock::now();
    const auto checks = run_suite(suite, SuiteOptions{max_n, args.seed, args.trials});
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    const json report = run_report(
        "verify", {{"suite", to_string(suite)}, {"max_n", max_n}, {"trials", args.trials}}, args.seed, checks,
        args.out_path, args.timing ? std::optional<double>(elapsed.count()) : std::nullopt);
    const bool pass = report["summary"]["pass"].get<bool>();

    if (args.out_path) {
      std::ofstream file(*args.out_path);
      if (!file) throw std::invalid_argument("cannot write " + *args.out_path);
      file << report.dump(2) << '\n';
      io.out << (pass ? "PASS" : "FAIL") << ' ' << report["summary"]["passed"] << '/'
             << report["summary"]["total"] << " checks, report written to " << *args.out_path << '\n';
    } else {
      io.out << report.dump(2) << '\n';
    }
    return pass ? kExitOk : kExitCheckFailed;
  });
}

int cmd_seidel(const SeidelArgs& args, Streams io) {
  return guarded(io, [&] {
    require(args.rows >= 0, "--rows must be nonnegative");
    const SeidelTriangle s(args.rows);
    for (int i = 1; i <= args.rows; ++i) {
      const int flagged = i % 2 ? (i + 1) / 2 : 1;
      const auto& row = s.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) io.out << ' ';
        io.out << row[j];
        if (!args.plain && static_cast<int>(j) + 1 == flagged) io.out << '*';
      }
      io.out << '\n';
    }
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Web permutations and the Specht-to-web transition matrix"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;

  WebArgs web;
  auto* web_cmd = app.add_subcommand("web", "List Web_n with its column path and matching path");
  web_cmd->add_option("n", web.n, "Permutation size")->required();
  web_cmd->add_option("--format", web.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  web_cmd->add_option("--source", web.source)
      ->check(CLI::IsMember({"resolve", "characterize", "both"}))
      ->capture_default_str();
  web_cmd->add_option("--dyck-of", web.dyck_of, "Path in the second column: D(sigma^-1) or D(sigma)")
      ->check(CLI::IsMember({"inverse", "sigma"}))
      ->capture_default_str();
  web_cmd->add_flag("--unsafe-cap", web.unsafe_cap, "Allow n above the default cap");

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Print the transition matrix A for size n");
  matrix_cmd->add_option("n", matrix.n)->required();
  matrix_cmd->add_option("--format", matrix.format)
      ->check(CLI::IsMember({"csv", "json", "latex"}))
      ->capture_default_str();
  matrix_cmd->add_flag("--verify", matrix.verify,
                       "Check against resolution, the syzygy oracle and the support pattern; report on stderr");
  matrix_cmd->add_option("--seed", seed_flag, "Sampling seed (default: WEBPERM_SEED or 0)");
  matrix_cmd->add_option("--trials", matrix.trials)->check(CLI::PositiveNumber)->capture_default_str();
  matrix_cmd->add_flag("--unsafe-cap", matrix.unsafe_cap);

  VerifyArgs verify;
  std::string out_path;
  std::optional<int> max_n;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites and print a JSON report");
  verify_cmd->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"all", "euler", "entringer", "genocchi", "conjecture", "oracle", "bijections"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-n", max_n, "Largest n (default: the suite's cap)");
  verify_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  verify_cmd->add_option("--seed", seed_flag, "Sampling seed (default: WEBPERM_SEED or 0)");
  verify_cmd->add_option("--trials", verify.trials)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_flag("--timing", verify.timing, "Include wall_time_s in the report");
  verify_cmd->add_flag("--unsafe-cap", verify.unsafe_cap);

  SeidelArgs seidel;
  auto* seidel_cmd = app.add_subcommand("seidel", "Print the Seidel triangle; '*' marks Genocchi numbers");
  seidel_cmd->add_option("--rows", seidel.rows)->capture_default_str();
  seidel_cmd->add_flag("--plain", seidel.plain, "Omit the '*' markers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::uint64_t seed = 0;
  try {
    seed = seed_flag ? *seed_flag : default_seed();
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*web_cmd) return cmd_web(web, io);
  if (*matrix_cmd) {
    matrix.seed = seed;
    return cmd_matrix(matrix, io);
  }
  if (*verify_cmd) {
    verify.seed = seed;
    verify.max_n = max_n;
    if (!out_path.empty()) verify.out_path = out_path;
    return cmd_verify(verify, io);
  }
  return cmd_seidel(seidel, io);
}

}  // namespace webperm::cli
