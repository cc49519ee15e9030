#include "hwsim/timing.hpp"

#include <string>

#include "common/error.hpp"

namespace rejscore::hwsim {

void validate(const TimingConfig& cfg) {
  if (cfg.aes_latency < 1) raise(Errc::validation, "aes_latency must be at least 1");
  if (cfg.writeback_cycles < 2) raise(Errc::validation, "writeback_cycles must be at least 2");
  if (cfg.wrapper_setup_cycles < 2)
    raise(Errc::validation, "wrapper_setup_cycles must be at least 2");
}

std::uint64_t wrapper_cycle_formula(const ParameterSet& p, const TimingConfig& cfg) {
  const std::uint64_t blocks = (std::uint64_t{p.tau} + 15) / 16;
  return cfg.wrapper_setup_cycles +
         blocks * (std::uint64_t{cfg.aes_latency} + cfg.writeback_cycles + cfg.per_block_overhead);
}

std::uint64_t rejsamp_cycle_formula(const ParameterSet& p, const TimingConfig& cfg) {
  const std::uint64_t n = p.n_prime;
  const std::uint64_t windows = (n + 15) / 16;
  const std::uint64_t words = (n + 7) / 8;
  return cfg.rejsamp_setup_cycles + words + 2 * windows + n + words;
}

TimingConfig calibrate(const ParameterSet& p, TimingConfig cfg, std::uint64_t wrapper_target,
                       std::uint64_t rejsamp_target) {
  cfg.wrapper_setup_cycles = 0;
  cfg.rejsamp_setup_cycles = 0;
  const auto wrapper_base = wrapper_cycle_formula(p, cfg);
  const auto rejsamp_base = rejsamp_cycle_formula(p, cfg);
  if (wrapper_target < wrapper_base + 2)
    raise(Errc::validation, "wrapper target " + std::to_string(wrapper_target) +
                                " below structural cost " + std::to_string(wrapper_base + 2));
  if (rejsamp_target < rejsamp_base)
    raise(Errc::validation, "RejSamp target " + std::to_string(rejsamp_target) +
                                " below structural cost " + std::to_string(rejsamp_base));
  cfg.wrapper_setup_cycles = static_cast<std::uint32_t>(wrapper_target - wrapper_base);
  cfg.rejsamp_setup_cycles = static_cast<std::uint32_t>(rejsamp_target - rejsamp_base);
  return cfg;
}

}  // namespace rejscore::hwsim
