#pragma once

#include <array>
#include <cstdint>
#include <deque>

#include "hwsim/memory.hpp"
#include "hwsim/timing.hpp"
#include "hwsim/trace.hpp"
#include "params/params.hpp"

namespace rejscore::hwsim {

enum class RejSampFsm : std::uint8_t {
  Idle, Load, Mask, Validate, Collect, WriteOut, ZeroFill, Done
};

struct RejSampUnitState {
  std::array<std::uint8_t, 16> shift_reg{};
  std::uint16_t valid_flags = 0;  // bit i: shift_reg[i] < q
  std::uint64_t b2_out = 0;
  std::uint8_t valid_count = 0;
  std::uint64_t k_ptr = 0;  // stream position of the next tail candidate
  RejSampFsm fsm = RejSampFsm::Idle;
};

struct RejSampRun {
  std::uint64_t start_cycle = 0;
  std::uint64_t cycles = 0;
  std::uint64_t windows = 0;
  std::uint64_t main_reads = 0;
  std::uint64_t tail_reads = 0;
  std::uint64_t words_written = 0;
  std::uint64_t replaced = 0;
  std::uint64_t zero_filled = 0;
  std::uint64_t stalls = 0;
};

// Streaming RejSamp unit. Positions 0..n'-1 are walked in 16-byte windows:
// two Load cycles fill the shift register, Mask and Validate take one cycle
// each, then one Collect cycle per position. A rejected position takes the
// next valid tail byte (positions n'..tau-1, in order) or 0 once the tail is
// exhausted. Tail words are prefetched into a two-word buffer on cycles the
// read port is otherwise idle; a Collect that finds the buffer empty while
// tail words remain stalls for one cycle. Every 8 collected bytes are written
// out in a WriteOut cycle.
class RejSampUnit {
 public:
  RejSampUnit(const ParameterSet& p, const TimingConfig& cfg, std::uint32_t keystream_base,
              std::uint32_t result_base);

  // Throws Error(precondition) if any keystream word was never written and
  // Error(capacity)/Error(out_of_range) if a region does not fit.
  RejSampRun run(MemoryModel& mem, std::uint64_t start_cycle, Trace* trace = nullptr);

  const RejSampUnitState& state() const { return state_; }

 private:
  struct TailWord {
    std::array<std::uint8_t, 8> bytes{};
    std::uint8_t begin = 0;  // next unconsumed byte
    std::uint8_t end = 0;
    std::uint64_t first_position = 0;
  };

  void drop_exhausted_tail();

  ParameterSet params_;
  TimingConfig cfg_;
  std::uint32_t keystream_base_;
  std::uint32_t result_base_;
  RejSampUnitState state_;
  std::deque<TailWord> tail_;
};

}  // namespace rejscore::hwsim
