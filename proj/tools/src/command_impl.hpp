#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uiseq/simulate.hpp"
#include "uiseq_cli/commands.hpp"
#include "uiseq_cli/manifest.hpp"

namespace uiseq::cli::detail {

struct Document {
  std::string extension;  ///< file suffix used with --output, e.g. "json"
  std::string content;
};

struct CommandResult {
  RunManifest manifest;
  std::vector<Document> documents;
  std::size_t primary = 0;  ///< the document printed when no --output is given
  int exit_code = exit_ok;
};

using Action = std::function<CommandResult()>;

void add_generate(CLI::App& app, Action& action);
void add_analyze(CLI::App& app, Action& action);
void add_verify(CLI::App& app, Action& action);
void add_bounds(CLI::App& app, Action& action);
void add_simulate(CLI::App& app, Action& action);
void add_table(CLI::App& app, Action& action);

nlohmann::json to_json(const DelayStats& stats);

inline std::string one_decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

inline std::string shortest(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace uiseq::cli::detail
