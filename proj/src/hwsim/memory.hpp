#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hwsim/trace.hpp"

namespace rejscore::hwsim {

inline constexpr std::uint32_t kDefaultMemoryDepth = 1024;

enum class Port : std::uint8_t { write, read };

struct MemoryAccess {
  std::uint64_t cycle = 0;
  Port port = Port::write;
  Unit unit = Unit::host;
  std::uint32_t addr = 0;
  std::uint64_t data = 0;
};

// Dual-port RAM of 64-bit words: one write port and one read port, each used
// at most once per cycle. A write at cycle t is visible to reads from cycle
// t+1; a same-cycle read of the address returns the old word. Accesses must
// arrive in non-decreasing cycle order.
class MemoryModel {
 public:
  explicit MemoryModel(std::uint32_t depth = kDefaultMemoryDepth);

  std::uint32_t depth() const { return static_cast<std::uint32_t>(words_.size()); }

  // Throws Error(out_of_range) for addr >= depth, Error(simulation_fault) on a
  // second write in one cycle (same address or not) or a cycle that goes
  // backwards.
  void write(std::uint32_t addr, std::uint64_t word, std::uint64_t cycle, Unit unit = Unit::host);
  std::uint64_t read(std::uint32_t addr, std::uint64_t cycle, Unit unit = Unit::host);

  // Committed contents plus any write pending in the current cycle; no port
  // is used and nothing is logged.
  std::uint64_t peek(std::uint32_t addr) const;
  bool written(std::uint32_t addr) const;
  std::vector<std::uint64_t> dump(std::uint32_t base, std::uint32_t count) const;

  const std::vector<MemoryAccess>& log() const { return log_; }

  void attach_trace(Trace* trace) { trace_ = trace; }

 private:
  void advance_to(std::uint64_t cycle);
  void check_addr(std::uint32_t addr) const;

  std::vector<std::uint64_t> words_;
  std::vector<bool> written_;
  std::uint64_t now_ = 0;
  bool write_used_ = false;
  bool read_used_ = false;
  std::uint32_t pending_addr_ = 0;
  std::uint64_t pending_word_ = 0;
  std::vector<MemoryAccess> log_;
  Trace* trace_ = nullptr;
};

}  // namespace rejscore::hwsim
