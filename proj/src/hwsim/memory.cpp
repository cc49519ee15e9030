#include "hwsim/memory.hpp"

#include <string>

#include "common/error.hpp"

namespace rejscore::hwsim {

MemoryModel::MemoryModel(std::uint32_t depth) : words_(depth, 0), written_(depth, false) {
  if (depth == 0) raise(Errc::invalid_argument, "memory depth must be positive");
}

void MemoryModel::check_addr(std::uint32_t addr) const {
  if (addr >= words_.size())
    raise(Errc::out_of_range, "address " + std::to_string(addr) + " outside memory of depth " +
                                  std::to_string(words_.size()));
}

void MemoryModel::advance_to(std::uint64_t cycle) {
  if (cycle < now_)
    raise(Errc::simulation_fault, "memory access at cycle " + std::to_string(cycle) +
                                      " after cycle " + std::to_string(now_));
  if (cycle == now_) return;
  if (write_used_) {
    words_[pending_addr_] = pending_word_;
    written_[pending_addr_] = true;
  }
  write_used_ = false;
  read_used_ = false;
  now_ = cycle;
}

void MemoryModel::write(std::uint32_t addr, std::uint64_t word, std::uint64_t cycle, Unit unit) {
  check_addr(addr);
  advance_to(cycle);
  if (write_used_) {
    if (pending_addr_ == addr)
      raise(Errc::simulation_fault,
            "write-write conflict on address " + std::to_string(addr) + " at cycle " +
                std::to_string(cycle));
    raise(Errc::simulation_fault, "write port used twice at cycle " + std::to_string(cycle));
  }
  write_used_ = true;
  pending_addr_ = addr;
  pending_word_ = word;
  log_.push_back({cycle, Port::write, unit, addr, word});
  if (trace_) trace_->record(cycle, unit, "mem_write", addr, word);
}

std::uint64_t MemoryModel::read(std::uint32_t addr, std::uint64_t cycle, Unit unit) {
  check_addr(addr);
  advance_to(cycle);
  if (read_used_)
    raise(Errc::simulation_fault, "read port used twice at cycle " + std::to_string(cycle));
  read_used_ = true;
  const auto word = words_[addr];
  log_.push_back({cycle, Port::read, unit, addr, word});
  if (trace_) trace_->record(cycle, unit, "mem_read", addr, word);
  return word;
}

std::uint64_t MemoryModel::peek(std::uint32_t addr) const {
  check_addr(addr);
  if (write_used_ && pending_addr_ == addr) return pending_word_;
  return words_[addr];
}

bool MemoryModel::written(std::uint32_t addr) const {
  check_addr(addr);
  return written_[addr] || (write_used_ && pending_addr_ == addr);
}

std::vector<std::uint64_t> MemoryModel::dump(std::uint32_t base, std::uint32_t count) const {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(peek(base + i));
  return out;
}

}  // namespace rejscore::hwsim
