#pragma once

// Command-line front end. Exit status: 0 success, 1 parse or validation
// error, 2 a requested verification failed.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rspath {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

struct RunConfig {
  std::string subcommand;
  bool json = false;
  std::uint64_t seed = 20240601;
  double tolerance = 1e-9;

  // rsk, transform
  std::string word;
  int k = 0;
  std::string mode = "column";
  std::string emit;

  // shape-dist
  std::string p;
  int n = 0;
  bool exact = false;
  bool check = false;

  // tandem
  std::string mu;
  double t = 0;
  std::size_t runs = 100000;
  std::string departures;
  int queue = -1;

  // continuous
  std::string input;
  std::string op = "gamma";
  bool rescale = false;

  // verify
  std::string suite;
  int max_n = -1;
  std::size_t samples = 200;
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rspath
