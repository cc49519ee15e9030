#pragma once

#include <array>
#include <cstdint>

namespace rejscore::aes {

using Block = std::array<std::uint8_t, 16>;

// 128-bit seed, used directly as the AES key.
struct AesKey128 {
  std::array<std::uint8_t, 16> bytes{};

  friend bool operator==(const AesKey128&, const AesKey128&) = default;
};

inline constexpr int kRounds = 10;

using RoundKeys = std::array<Block, kRounds + 1>;

// Round transformations on a state stored column-major (byte r + 4c is row r
// of column c), the same order as the 16 input bytes. The timed wrapper model
// steps through these one pipeline stage at a time.
std::uint8_t sub_byte(std::uint8_t x);
void sub_bytes(Block& state);
void shift_rows(Block& state);
void mix_columns(Block& state);
void add_round_key(Block& state, const Block& round_key);

RoundKeys expand_key(const AesKey128& key);

Block encrypt_block(const AesKey128& key, const Block& plaintext);
Block encrypt_block(const RoundKeys& keys, const Block& plaintext);

}  // namespace rejscore::aes
