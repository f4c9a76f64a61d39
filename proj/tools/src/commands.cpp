#include "uiseq_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "command_impl.hpp"
#include "uiseq_cli/sequence_io.hpp"

namespace uiseq::cli {

namespace {

using detail::Action;
using detail::CommandResult;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

void emit(CommandResult& result, const std::string& base, const std::string& manifest_path,
          const std::vector<std::string>& args, std::ostream& out) {
  result.manifest.command_line = args;
  std::string manifest_file = manifest_path;
  if (!base.empty()) {
    for (const auto& doc : result.documents) {
      const std::string path = base + "." + doc.extension;
      write_file(path, doc.content);
      result.manifest.outputs.push_back({path, sha256_hex(doc.content)});
    }
    if (manifest_file.empty()) manifest_file = base + ".manifest.json";
  } else {
    const auto& doc = result.documents.at(result.primary);
    out << doc.content;
    out.flush();
    result.manifest.stdout_sha256 = sha256_hex(doc.content);
  }
  if (!manifest_file.empty()) write_file(manifest_file, to_json(result.manifest).dump(2) + "\n");
}

struct ReplayOptions {
  std::string manifest;
};

/// Reruns the recorded command line and compares digests.
int replay(const ReplayOptions& opts, std::ostream& out, std::ostream& err) {
  const auto manifest = manifest_from_json(nlohmann::json::parse(read_file(opts.manifest)));
  if (manifest.command_line.empty() || manifest.command_line.front() == "replay") {
    throw std::invalid_argument("manifest has no replayable command line");
  }
  std::ostringstream captured;
  const int code = run(manifest.command_line, captured, err);
  nlohmann::json report = {{"command_line", manifest.command_line}, {"exit_code", code}};
  auto mismatches = nlohmann::json::array();
  if (manifest.stdout_sha256 && sha256_hex(captured.str()) != *manifest.stdout_sha256) {
    mismatches.push_back("<stdout>");
  }
  for (const auto& f : manifest.outputs) {
    std::string digest;
    try {
      digest = sha256_file(f.path);
    } catch (const std::exception&) {
    }
    if (digest != f.sha256) mismatches.push_back(f.path);
  }
  report["mismatches"] = mismatches;
  report["reproduced"] = mismatches.empty();
  out << report.dump(2) << "\n";
  return mismatches.empty() ? exit_ok : exit_not_ui;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Protocol sequences for the collision channel: construction, analysis, verification, "
               "bounds and delay simulation",
               "uiseq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(artifact_version()));

  Action action;
  detail::add_generate(app, action);
  detail::add_analyze(app, action);
  detail::add_verify(app, action);
  detail::add_bounds(app, action);
  detail::add_simulate(app, action);
  detail::add_table(app, action);

  ReplayOptions replay_opts;
  bool replay_requested = false;
  auto* replay_cmd = app.add_subcommand("replay", "Rerun the command recorded in a manifest and compare digests");
  replay_cmd->add_option("manifest", replay_opts.manifest, "Manifest JSON")->required()->check(CLI::ExistingFile);
  replay_cmd->callback([&] { replay_requested = true; });

  std::string output_base;
  std::string manifest_path;
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    if (sub == replay_cmd) continue;
    sub->add_option("--output,-o", output_base,
                    "Write BASE.<ext> files plus BASE.manifest.json instead of printing");
    sub->add_option("--manifest", manifest_path, "Write the run manifest to this path");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (replay_requested) return replay(replay_opts, out, err);
    if (!action) return exit_usage;
    auto result = action();
    emit(result, output_base, manifest_path, args, out);
    return result.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace uiseq::cli
