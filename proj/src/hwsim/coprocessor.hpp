#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aesprg/keystream.hpp"
#include "hwsim/aes_ctr_wrapper.hpp"
#include "hwsim/isa.hpp"
#include "hwsim/memory.hpp"
#include "hwsim/rejsamp_unit.hpp"
#include "hwsim/timing.hpp"
#include "hwsim/trace.hpp"
#include "params/params.hpp"
#include "sampler/sampler.hpp"

namespace rejscore::hwsim {

struct SimConfig {
  TimingConfig timing;
  std::uint32_t mem_depth = kDefaultMemoryDepth;
  double freq_hz = 222e6;
  aes::CtrConfig ctr;
  bool trace = false;
};

// Cycles spent by the two compute units. Seed loading and result readout are
// host transfers and are not counted.
struct CycleReport {
  std::uint64_t total_cycles = 0;
  std::uint64_t wrapper_cycles = 0;
  std::uint64_t rejsamp_cycles = 0;
  double freq_hz = 0.0;

  double latency_seconds() const { return static_cast<double>(total_cycles) / freq_hz; }
};

// {"total_cycles", "wrapper_cycles", "rejsamp_cycles", "freq_hz", "latency_us"}, with
// latency_us rounded to 3 significant figures
std::string to_json(const CycleReport& report);

// Where a program keeps the seed, keystream and result for one level.
struct MemoryLayout {
  std::uint32_t keystream_base = 0;
  std::uint32_t result_base = 0;
  std::uint32_t seed_addr = 0;
};

// The seed sits in the top two addressable words. The result follows the
// keystream when both fit in the 10-bit address space of the memory;
// otherwise it overwrites the keystream in place from address 0. With a depth
// above 1024 (SL5) the seed words fall inside the keystream region; they are
// read during wrapper setup, long before that region is written. Throws
// Error(capacity) if the keystream alone does not fit.
MemoryLayout default_layout(const ParameterSet& p, std::uint32_t mem_depth);

// LOAD_SEED, RUN_FULL, READ_RESULT for the given level and layout.
std::vector<std::uint32_t> default_program(SecLevel level, const MemoryLayout& layout);

struct ProgramResult {
  CycleReport report;
  sampler::FieldVector output;  // empty unless the program ends in READ_RESULT
};

// Central controller: decodes instructions and sequences the host transfers,
// the AES-CTR wrapper and the RejSamp unit on one global clock. The two units
// run strictly one after the other.
class Coprocessor {
 public:
  explicit Coprocessor(SimConfig cfg = {});

  // Rules checked before anything executes:
  //   - every non-NOP instruction names a supported level, all the same one
  //     (Error(unsupported_level) / Error(program_error));
  //   - RUN_PRG and RUN_FULL come after a LOAD_SEED with wen set;
  //   - RUN_REJSAMP comes after RUN_PRG or RUN_FULL;
  //   - READ_RESULT comes after the RejSamp unit has run, at most once, and
  //     only NOPs may follow it.
  // Memory and trace are reset at the start of each call.
  ProgramResult run_program(std::span<const std::uint32_t> program, const aes::AesKey128& seed,
                            std::uint16_t iv);

  const MemoryModel& memory() const { return mem_; }
  const Trace& trace() const { return trace_; }
  const SimConfig& config() const { return cfg_; }

 private:
  SimConfig cfg_;
  MemoryModel mem_;
  Trace trace_;
};

// Single-unit entry points used by tests and the C API. run_wrapper loads the
// seed at layout.seed_addr through the write port (two host cycles starting at
// start_cycle) and then runs the wrapper.
WrapperRun run_wrapper(const aes::AesKey128& seed, std::uint16_t iv, const ParameterSet& p,
                       const SimConfig& cfg, MemoryModel& mem, const MemoryLayout& layout,
                       std::uint64_t start_cycle = 0, Trace* trace = nullptr);

RejSampRun run_rejsamp_unit(const ParameterSet& p, const SimConfig& cfg, MemoryModel& mem,
                            const MemoryLayout& layout, std::uint64_t start_cycle,
                            Trace* trace = nullptr);

}  // namespace rejscore::hwsim
