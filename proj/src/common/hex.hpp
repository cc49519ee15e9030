#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rejscore {

std::string to_hex(std::span<const std::uint8_t> bytes);

// Lower- or upper-case hex, even length, no prefix. Returns nullopt on any
// malformed character.
std::optional<std::vector<std::uint8_t>> from_hex(std::string_view text);

}  // namespace rejscore
