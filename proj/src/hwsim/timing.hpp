#pragma once

#include <cstdint>

#include "params/params.hpp"

namespace rejscore::hwsim {

// Cycle budget of the two units. The published totals fix only the sums, not
// the per-state costs, so the setup terms are calibration constants solved
// from the SL-I figures (wrapper 4632, RejSamp 3893); see calibrate().
//
// Wrapper:  setup + blocks * (aes_latency + writeback + per_block_overhead)
//           blocks = ceil(tau / 16)
// RejSamp:  setup + main_words + 2 * windows + n' + out_words (+ stalls)
//           windows = ceil(n' / 16), main_words = out_words = ceil(n' / 8)
struct TimingConfig {
  std::uint32_t aes_latency = 21;
  std::uint32_t writeback_cycles = 2;
  std::uint32_t per_block_overhead = 2;
  std::uint32_t wrapper_setup_cycles = 57;
  std::uint32_t rejsamp_setup_cycles = 31;

  friend bool operator==(const TimingConfig&, const TimingConfig&) = default;
};

// aes_latency >= 1, writeback_cycles >= 2 (two 64-bit halves), and
// wrapper_setup_cycles >= 2 (the seed is fetched over two reads).
// Throws Error(validation).
void validate(const TimingConfig& cfg);

std::uint64_t wrapper_cycle_formula(const ParameterSet& p, const TimingConfig& cfg);

// Stall-free RejSamp cycle count. The simulator adds one cycle per stall,
// which only happens when the tail prefetch runs dry.
std::uint64_t rejsamp_cycle_formula(const ParameterSet& p, const TimingConfig& cfg);

// Returns cfg with both setup terms solved so that p reproduces the target
// unit totals. Throws Error(validation) if a target is below the structural
// (setup-free) cost.
TimingConfig calibrate(const ParameterSet& p, TimingConfig cfg, std::uint64_t wrapper_target,
                       std::uint64_t rejsamp_target);

}  // namespace rejscore::hwsim
