#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "uiseq/construct.hpp"
#include "uiseq/sequence.hpp"

namespace uiseq::cli {

/// Reads a sequence set from either
///   - text: one canonical `L:{e1,...}` per line, blank lines and `#` comments ignored;
///   - JSON: an array, or an object with a "sequences" array, whose entries are
///     canonical strings or {"period": L, "elements": [...]}.
/// Throws std::invalid_argument with a line or entry number on bad input.
SequenceSet parse_sequence_set(std::string_view document);
SequenceSet load_sequence_set(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

nlohmann::json to_json(const CharacteristicSet& set);

/// One canonical line per member.
std::string to_text(const SequenceSet& set);

}  // namespace uiseq::cli
