#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "params/params.hpp"

namespace rejscore::hwsim {

// 26-bit instruction word, fields packed from the LSB upwards:
//
//   bits  1:0   SecLevel  (0 = SL1, 1 = SL3, 2 = SL5, 3 = reserved)
//   bits 11:2   raddr
//   bits 21:12  waddr
//   bit  22     wen
//   bits 25:23  op
enum class Opcode : std::uint8_t {
  NOP = 0,
  LOAD_SEED = 1,    // wen-gated write of the two seed words at waddr, waddr+1
  RUN_PRG = 2,      // AES-CTR wrapper only; seed read from raddr, raddr+1
  RUN_REJSAMP = 3,  // RejSamp unit only, on the keystream already in memory
  RUN_FULL = 4,     // wrapper then RejSamp unit; seed read from raddr, raddr+1
  READ_RESULT = 5,  // drain the result words starting at raddr
};

inline constexpr unsigned kInstructionBits = 26;
inline constexpr std::uint32_t kInstructionMask = (1u << kInstructionBits) - 1;
inline constexpr std::uint32_t kAddrMask = 0x3FF;

struct Instruction {
  std::uint8_t sec_level = 0;  // raw 2-bit field
  std::uint16_t raddr = 0;
  std::uint16_t waddr = 0;
  bool wen = false;
  Opcode op = Opcode::NOP;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

std::string_view to_string(Opcode op);

// Throws Error(invalid_instruction) for words wider than 26 bits or opcode
// values outside the enumeration.
Instruction decode(std::uint32_t word);

// Throws Error(invalid_instruction) if a field exceeds its width.
std::uint32_t encode(const Instruction& ins);

// Maps the 2-bit SecLevel field; 3 has no parameter set.
std::optional<SecLevel> level_from_field(std::uint8_t field);
std::uint8_t level_field(SecLevel level);

// Program text: one 7-hex-digit word per line. '#' starts a comment that runs
// to the end of the line; blank lines are ignored. Throws Error(parse) with the 1-based line number.
std::vector<std::uint32_t> parse_program(std::string_view text);
std::string format_program(const std::vector<std::uint32_t>& words);

}  // namespace rejscore::hwsim
