#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace uiseq::cli {

std::string_view artifact_version() noexcept;

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

struct FileDigest {
  std::string path;
  std::string sha256;
};

/// Everything needed to rerun a command and check its output. No timestamps
/// or host details, so identical runs give identical manifests.
struct RunManifest {
  std::vector<std::string> command_line;
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::optional<std::string> rng;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  /// Digest of the document written to standard output, when there was one.
  std::optional<std::string> stdout_sha256;
};

nlohmann::json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& doc);

}  // namespace uiseq::cli
