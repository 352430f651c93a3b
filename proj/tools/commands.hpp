#pragma once

// Subcommands of the webperm tool. Each writes to the given streams and returns the
// process exit code, so tests can drive them without spawning a process.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace webperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kResolveCap = 6;
inline constexpr int kFilterCap = 8;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct WebArgs {
  int n = 0;
  std::string format = "text";         // text | json
  std::string source = "characterize";  // resolve | characterize | both
  std::string dyck_of = "inverse";      // inverse: D(sigma^-1) | sigma: D(sigma)
  bool unsafe_cap = false;
};

struct MatrixArgs {
  int n = 0;
  std::string format = "csv";  // csv | json | latex
  bool verify = false;
  bool unsafe_cap = false;
  std::uint64_t seed = 0;
  int trials = 20;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> max_n;
  std::optional<std::string> out_path;
  std::uint64_t seed = 0;
  int trials = 20;
  bool timing = false;
  bool unsafe_cap = false;
};

struct SeidelArgs {
  int rows = 9;
  bool plain = false;
};

int cmd_web(const WebArgs& args, Streams io);
int cmd_matrix(const MatrixArgs& args, Streams io);
int cmd_verify(const VerifyArgs& args, Streams io);
int cmd_seidel(const SeidelArgs& args, Streams io);

/// Seed used when --seed is absent: WEBPERM_SEED if set, else 0.
std::uint64_t default_seed();

/// Parses argv and dispatches.
int run(int argc, const char* const* argv, Streams io);

}  // namespace webperm::cli
