#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "CLI11.hpp"

namespace cdlat::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

// Flags shared by every subcommand, and the code the chosen command returns.
struct Context {
  std::optional<std::size_t> cap;
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  double eps = 1e-9;
  std::string output;
  bool json = false;
  int exit_code = kOk;
};

void add_lattice_commands(CLI::App& app, Context& ctx);
void add_circle_commands(CLI::App& app, Context& ctx);
void add_island_commands(CLI::App& app, Context& ctx);
void add_gen_commands(CLI::App& app, Context& ctx);

}  // namespace cdlat::cli
