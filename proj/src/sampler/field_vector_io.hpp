#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rejscore {

// Eight bytes per 64-bit word; byte 0 lands in the most significant byte of
// word 0. A trailing partial word is zero padded. Applied identically to the
// keystream region, the result region and the binary output artifact.
std::vector<std::uint64_t> pack_words(std::span<const std::uint8_t> bytes);

// Inverse of pack_words for the first n_bytes bytes.
std::vector<std::uint8_t> unpack_words(std::span<const std::uint64_t> words, std::size_t n_bytes);

// Binary artifact: the packed words written most significant byte first, so
// the file begins with element 0 and is zero padded to a multiple of 8.
std::vector<std::uint8_t> to_packed_binary(std::span<const std::uint8_t> elems);

// "index,value" header followed by one decimal row per element.
std::string to_csv(std::span<const std::uint8_t> elems);

}  // namespace rejscore
