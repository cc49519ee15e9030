#include "hwsim/isa.hpp"

#include <cstdio>

#include "common/error.hpp"

namespace rejscore::hwsim {

std::string_view to_string(Opcode op) {
  switch (op) {
    case Opcode::NOP: return "NOP";
    case Opcode::LOAD_SEED: return "LOAD_SEED";
    case Opcode::RUN_PRG: return "RUN_PRG";
    case Opcode::RUN_REJSAMP: return "RUN_REJSAMP";
    case Opcode::RUN_FULL: return "RUN_FULL";
    case Opcode::READ_RESULT: return "READ_RESULT";
  }
  return "?";
}

Instruction decode(std::uint32_t word) {
  if (word & ~kInstructionMask)
    raise(Errc::invalid_instruction, "instruction word wider than 26 bits");
  Instruction ins;
  ins.sec_level = static_cast<std::uint8_t>(word & 0x3);
  ins.raddr = static_cast<std::uint16_t>((word >> 2) & kAddrMask);
  ins.waddr = static_cast<std::uint16_t>((word >> 12) & kAddrMask);
  ins.wen = ((word >> 22) & 0x1) != 0;
  const auto op = (word >> 23) & 0x7;
  if (op > static_cast<std::uint32_t>(Opcode::READ_RESULT))
    raise(Errc::invalid_instruction, "unknown opcode " + std::to_string(op));
  ins.op = static_cast<Opcode>(op);
  return ins;
}

std::uint32_t encode(const Instruction& ins) {
  if (ins.sec_level > 0x3 || ins.raddr > kAddrMask || ins.waddr > kAddrMask ||
      static_cast<std::uint32_t>(ins.op) > static_cast<std::uint32_t>(Opcode::READ_RESULT))
    raise(Errc::invalid_instruction, "instruction field out of range");
  return std::uint32_t{ins.sec_level} | (std::uint32_t{ins.raddr} << 2) |
         (std::uint32_t{ins.waddr} << 12) | (std::uint32_t{ins.wen} << 22) |
         (static_cast<std::uint32_t>(ins.op) << 23);
}

std::optional<SecLevel> level_from_field(std::uint8_t field) {
  switch (field) {
    case 0: return SecLevel::SL1;
    case 1: return SecLevel::SL3;
    case 2: return SecLevel::SL5;
    default: return std::nullopt;
  }
}

std::uint8_t level_field(SecLevel level) {
  switch (level) {
    case SecLevel::SL1: return 0;
    case SecLevel::SL3: return 1;
    case SecLevel::SL5: return 2;
  }
  return 3;
}

std::vector<std::uint32_t> parse_program(std::string_view text) {
  std::vector<std::uint32_t> words;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    std::size_t indent = 0;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
      ++indent;
    }
    if (line.empty()) continue;
    if (line.size() != 7)
      raise(Errc::parse, "line " + std::to_string(line_no) + ": expected 7 hex digits");
    std::uint32_t word = 0;
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char c = line[col];
      int nib = -1;
      if (c >= '0' && c <= '9') nib = c - '0';
      else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
      if (nib < 0)
        raise(Errc::parse, "line " + std::to_string(line_no) + ", column " +
                               std::to_string(indent + col + 1) + ": not a hex digit");
      word = (word << 4) | static_cast<std::uint32_t>(nib);
    }
    if (word & ~kInstructionMask)
      raise(Errc::parse, "line " + std::to_string(line_no) + ": word wider than 26 bits");
    words.push_back(word);
  }
  return words;
}

std::string format_program(const std::vector<std::uint32_t>& words) {
  std::string out;
  char buf[16];
  for (auto w : words) {
    std::snprintf(buf, sizeof buf, "%07x\n", w);
    out += buf;
  }
  return out;
}

}  // namespace rejscore::hwsim
