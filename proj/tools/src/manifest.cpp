#include "uiseq_cli/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <stdexcept>

#include "uiseq_cli/sequence_io.hpp"

namespace uiseq::cli {

std::string_view artifact_version() noexcept { return UISEQ_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_file(path)); }

namespace {

nlohmann::json digests_to_json(const std::vector<FileDigest>& files) {
  auto out = nlohmann::json::array();
  for (const auto& f : files) out.push_back({{"path", f.path}, {"sha256", f.sha256}});
  return out;
}

std::vector<FileDigest> digests_from_json(const nlohmann::json& doc) {
  std::vector<FileDigest> out;
  for (const auto& f : doc) out.push_back({f.at("path").get<std::string>(), f.at("sha256").get<std::string>()});
  return out;
}

}  // namespace

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json doc = {
      {"tool", "uiseq"},
      {"version", artifact_version()},
      {"command", m.command},
      {"command_line", m.command_line},
      {"config", m.config},
      {"seed", m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr)},
      {"inputs", digests_to_json(m.inputs)},
      {"outputs", digests_to_json(m.outputs)},
  };
  if (m.rng) doc["rng"] = *m.rng;
  if (m.stdout_sha256) doc["stdout_sha256"] = *m.stdout_sha256;
  return doc;
}

RunManifest manifest_from_json(const nlohmann::json& doc) {
  RunManifest m;
  m.command = doc.at("command").get<std::string>();
  m.command_line = doc.at("command_line").get<std::vector<std::string>>();
  m.config = doc.value("config", nlohmann::json::object());
  if (doc.contains("seed") && !doc.at("seed").is_null()) m.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("rng")) m.rng = doc.at("rng").get<std::string>();
  if (doc.contains("inputs")) m.inputs = digests_from_json(doc.at("inputs"));
  if (doc.contains("outputs")) m.outputs = digests_from_json(doc.at("outputs"));
  if (doc.contains("stdout_sha256")) m.stdout_sha256 = doc.at("stdout_sha256").get<std::string>();
  return m;
}

}  // namespace uiseq::cli
