#pragma once

#include "csurg/io.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace csurg::cli {

enum class CommandKind { Expand, Invariants, Classify, Bennequin, Selftest };
enum class Format { Text, Json };

struct Options {
  std::optional<std::string> dual;
  bool chain = false;
  std::optional<std::int64_t> n, p, q;
  std::optional<std::int64_t> tb, rot;
  std::int64_t chi = 1;
  std::vector<std::string> assume_plus_one_tight;
  std::string zigzag_policy = "all-negative";
  bool both_orientations = true;
};

struct Command {
  CommandKind kind = CommandKind::Selftest;
  /// A diagram file, or a directory processed file by file (batch mode).
  std::filesystem::path input;
  Options options;
  Format format = Format::Text;
};

struct Report {
  Json command;
  Json results;
  std::vector<std::string> citations;

  Json to_json() const;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUndefined = 3;

/// Builds the report for one command. Throws csurg::Error.
Report execute(const Command& command);

/// Writes the report to `out` (diagnostics to `err`) and returns the exit code.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Deterministic indented text rendering of a report.
std::string render_text(const Report& report);

}  // namespace csurg::cli
