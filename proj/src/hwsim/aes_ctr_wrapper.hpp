#pragma once

#include <cstdint>
#include <deque>
#include <optional>

#include "aesprg/keystream.hpp"
#include "hwsim/memory.hpp"
#include "hwsim/timing.hpp"
#include "hwsim/trace.hpp"
#include "params/params.hpp"

namespace rejscore::hwsim {

// Fixed-latency AES core. The 21 round micro-steps (initial AddRoundKey, then
// SubBytes+ShiftRows / MixColumns+AddRoundKey per round) are spread evenly
// over `latency` cycles, so a block issued at cycle t leaves the pipeline at
// the end of cycle t + latency - 1.
class AesPipeline {
 public:
  static constexpr unsigned kMicroSteps = 2 * aes::kRounds + 1;

  struct Output {
    std::uint64_t block_index = 0;
    aes::Block data{};
  };

  explicit AesPipeline(std::uint32_t latency);

  void load_keys(const aes::RoundKeys& keys) { keys_ = keys; }
  void issue(const aes::Block& input, std::uint64_t block_index);

  // Advances every in-flight block by one cycle; returns the block that
  // completes in this cycle, if any.
  std::optional<Output> step();

  std::size_t in_flight() const { return slots_.size(); }
  std::uint32_t latency() const { return latency_; }

 private:
  struct Slot {
    std::uint64_t block_index;
    aes::Block state;
    std::uint32_t age;
  };

  void micro_step(aes::Block& state, unsigned step) const;

  std::uint32_t latency_;
  aes::RoundKeys keys_{};
  std::deque<Slot> slots_;
};

enum class WrapperFsm : std::uint8_t { Idle, Fill, Encrypt, WriteHi, WriteLo, Done };

struct WrapperState {
  aes::Block b1{};  // seed
  aes::Block b2{};  // last cipher output
  std::uint64_t block_index = 0;
  WrapperFsm fsm = WrapperFsm::Idle;
};

struct WrapperRun {
  std::uint64_t start_cycle = 0;
  std::uint64_t cycles = 0;
  std::uint64_t blocks = 0;
  std::uint64_t words_written = 0;
  std::uint64_t first_issue_cycle = 0;
};

// AES-CTR wrapper: fetches the seed into B1, then for each counter block
// issues it to the core, waits for B2 and drains B2 to memory as two words.
// Keystream byte i lands in word keystream_base + i/8 (byte 0 = MSB).
class AesCtrWrapper {
 public:
  AesCtrWrapper(const ParameterSet& p, const TimingConfig& cfg, const aes::CtrConfig& ctr,
                std::uint16_t iv, std::uint32_t seed_addr, std::uint32_t keystream_base = 0);

  // Runs to completion starting at start_cycle. Throws Error(capacity) if the
  // keystream region does not fit and Error(precondition) if the seed words
  // were never written.
  WrapperRun run(MemoryModel& mem, std::uint64_t start_cycle, Trace* trace = nullptr);

  const WrapperState& state() const { return state_; }

 private:
  ParameterSet params_;
  TimingConfig cfg_;
  aes::CtrConfig ctr_;
  std::uint16_t iv_;
  std::uint32_t seed_addr_;
  std::uint32_t keystream_base_;
  WrapperState state_;
};

}  // namespace rejscore::hwsim
