#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aesprg/keystream.hpp"
#include "params/params.hpp"

namespace rejscore::kat {

// Known-answer file, one case per line:
//
//   key=<32 hex> iv=<4 hex> n=<dec> out=<2n hex>        keystream bytes
//   key=<32 hex> iv=<4 hex> level=<1|3|5> vec=<2n' hex>  sampled vector
//
// Blank lines and lines starting with '#' are ignored.

struct KatCase {
  aes::AesKey128 key;
  std::uint16_t iv = 0;
  SecLevel level = SecLevel::SL1;
};

std::string keystream_line(const aes::AesKey128& key, std::uint16_t iv, std::size_t n);
std::string vector_line(const aes::AesKey128& key, std::uint16_t iv, SecLevel level);

// For every case: a keystream line of tau bytes and a vector line.
std::string generate(const std::vector<KatCase>& cases);

struct VerifyResult {
  bool ok = true;
  std::size_t line = 0;    // 1-based, 0 when ok
  std::size_t column = 0;  // 1-based for parse errors, 0 for mismatches
  std::size_t cases = 0;   // lines checked before stopping
  std::string message;
};

// Recomputes every line and stops at the first parse error or mismatch.
VerifyResult verify(std::string_view text);

}  // namespace rejscore::kat
