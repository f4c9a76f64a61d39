#include "uiseq_cli/sequence_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uiseq::cli {

namespace {

std::string where(std::size_t index) { return " (entry " + std::to_string(index + 1) + ")"; }

CharacteristicSet from_json_entry(const nlohmann::json& entry, std::size_t index) {
  try {
    if (entry.is_string()) return parse_characteristic_set(entry.get<std::string>());
    if (entry.is_object() && entry.contains("period") && entry.contains("elements")) {
      return CharacteristicSet(entry.at("period").get<std::int64_t>(),
                               entry.at("elements").get<std::vector<std::int64_t>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed sequence") + where(index) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(e.what() + where(index));
  }
  throw std::invalid_argument("expected \"L:{...}\" or {\"period\", \"elements\"}" + where(index));
}

SequenceSet parse_json(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("sequences")) throw std::invalid_argument("JSON input has no \"sequences\" array");
    list = &doc.at("sequences");
  }
  if (!list->is_array() || list->empty()) throw std::invalid_argument("JSON input: empty or non-array sequence list");
  std::vector<CharacteristicSet> members;
  for (std::size_t i = 0; i < list->size(); ++i) members.push_back(from_json_entry((*list)[i], i));
  return SequenceSet(std::move(members));
}

SequenceSet parse_text(std::string_view document) {
  std::vector<CharacteristicSet> members;
  std::size_t line_no = 0;
  while (!document.empty()) {
    ++line_no;
    const auto eol = document.find('\n');
    std::string_view line = document.substr(0, eol);
    document = eol == std::string_view::npos ? std::string_view{} : document.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      members.push_back(parse_characteristic_set(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (members.empty()) throw std::invalid_argument("no sequences in input");
  return SequenceSet(std::move(members));
}

}  // namespace

SequenceSet parse_sequence_set(std::string_view document) {
  const auto first = document.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (document[first] == '{' || document[first] == '[')) {
    return parse_json(document);
  }
  return parse_text(document);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SequenceSet load_sequence_set(const std::filesystem::path& path) { return parse_sequence_set(read_file(path)); }

nlohmann::json to_json(const CharacteristicSet& set) {
  return {{"period", set.period()},
          {"elements", std::vector<std::int64_t>(set.elements().begin(), set.elements().end())}};
}

std::string to_text(const SequenceSet& set) {
  std::string out;
  for (const auto& member : set.members()) {
    out += uiseq::to_text(member);
    out += '\n';
  }
  return out;
}

}  // namespace uiseq::cli
