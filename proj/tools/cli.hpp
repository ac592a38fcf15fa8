#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace twq::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kUserError = 1;      // parse, domain or usage error
inline constexpr int kInternalError = 2;  // invariant breach or mismatch
inline constexpr int kDecideNo = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string corpus;
  std::string problem = "mean";
  std::vector<std::string> algos;
  int reps = 3;
  bool json = false;
};
int bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  std::size_t cases = 40;
  std::uint64_t seed = 1;
};
int selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace twq::cli
