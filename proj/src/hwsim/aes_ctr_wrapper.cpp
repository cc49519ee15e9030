#include "hwsim/aes_ctr_wrapper.hpp"

#include <string>

#include "common/error.hpp"
#include "sampler/field_vector_io.hpp"

namespace rejscore::hwsim {

AesPipeline::AesPipeline(std::uint32_t latency) : latency_(latency) {
  if (latency == 0) raise(Errc::validation, "AES latency must be at least 1");
}

void AesPipeline::issue(const aes::Block& input, std::uint64_t block_index) {
  if (slots_.size() >= latency_) raise(Errc::simulation_fault, "AES pipeline overflow");
  slots_.push_back({block_index, input, 0});
}

void AesPipeline::micro_step(aes::Block& state, unsigned step) const {
  if (step == 0) {
    aes::add_round_key(state, keys_[0]);
    return;
  }
  const unsigned round = (step + 1) / 2;
  if (step % 2 == 1) {
    aes::sub_bytes(state);
    aes::shift_rows(state);
  } else {
    if (round < aes::kRounds) aes::mix_columns(state);
    aes::add_round_key(state, keys_[round]);
  }
}

std::optional<AesPipeline::Output> AesPipeline::step() {
  std::optional<Output> done;
  for (auto& slot : slots_) {
    const unsigned from = slot.age * kMicroSteps / latency_;
    const unsigned to = (slot.age + 1) * kMicroSteps / latency_;
    for (unsigned s = from; s < to; ++s) micro_step(slot.state, s);
    ++slot.age;
  }
  if (!slots_.empty() && slots_.front().age == latency_) {
    done = Output{slots_.front().block_index, slots_.front().state};
    slots_.pop_front();
  }
  return done;
}

AesCtrWrapper::AesCtrWrapper(const ParameterSet& p, const TimingConfig& cfg,
                             const aes::CtrConfig& ctr, std::uint16_t iv, std::uint32_t seed_addr,
                             std::uint32_t keystream_base)
    : params_(p), cfg_(cfg), ctr_(ctr), iv_(iv), seed_addr_(seed_addr),
      keystream_base_(keystream_base) {
  validate(cfg_);
}

WrapperRun AesCtrWrapper::run(MemoryModel& mem, std::uint64_t start_cycle, Trace* trace) {
  const auto counts = address_counts(params_);
  if (std::uint64_t{keystream_base_} + counts.tau_addrs > mem.depth())
    raise(Errc::capacity, "keystream needs " + std::to_string(counts.tau_addrs) +
                              " words from address " + std::to_string(keystream_base_) +
                              " but memory depth is " + std::to_string(mem.depth()) +
                              "; required depth " + std::to_string(required_memory_depth(params_)));
  if (std::uint64_t{seed_addr_} + 1 >= mem.depth())
    raise(Errc::out_of_range, "seed address " + std::to_string(seed_addr_) + " outside memory");
  if (!mem.written(seed_addr_) || !mem.written(seed_addr_ + 1))
    raise(Errc::precondition, "seed words at address " + std::to_string(seed_addr_) +
                                  " were never loaded");

  const std::uint64_t blocks = aes::blocks_for(params_.tau);
  AesPipeline pipeline(cfg_.aes_latency);
  WrapperRun run;
  run.start_cycle = start_cycle;
  run.blocks = blocks;

  auto record = [&](std::uint64_t cycle, const char* event, std::optional<std::uint32_t> addr = {},
                    std::optional<std::uint64_t> data = {}) {
    if (trace) trace->record(cycle, Unit::wrapper, event, addr, data);
  };

  // Keystream half-word of block `block`, bytes past tau zeroed.
  auto half_word = [&](std::uint64_t block, int half) {
    aes::Block masked = state_.b2;
    for (int i = 0; i < 16; ++i)
      if (block * 16 + static_cast<std::uint64_t>(i) >= params_.tau) masked[i] = 0;
    return pack_words(masked)[half];
  };

  auto write_half = [&](std::uint64_t cycle, int half) {
    const std::uint64_t word = 2 * state_.block_index + static_cast<std::uint64_t>(half);
    if (word >= counts.tau_addrs) return;
    mem.write(keystream_base_ + static_cast<std::uint32_t>(word), half_word(state_.block_index, half),
              cycle, Unit::wrapper);
    ++run.words_written;
  };

  std::uint64_t cycle = start_cycle;
  std::uint32_t remaining = cfg_.wrapper_setup_cycles;
  bool in_setup = true;
  state_ = WrapperState{};
  state_.fsm = WrapperFsm::Fill;
  record(cycle, "start");

  auto after_block = [&] {
    if (state_.block_index < blocks) {
      state_.fsm = WrapperFsm::Encrypt;
      remaining = cfg_.aes_latency;
    } else {
      state_.fsm = WrapperFsm::Done;
    }
  };

  while (state_.fsm != WrapperFsm::Done) {
    switch (state_.fsm) {
      case WrapperFsm::Fill: {
        if (in_setup) {
          const auto offset = cfg_.wrapper_setup_cycles - remaining;
          if (offset < 2) {
            const auto word = mem.read(seed_addr_ + offset, cycle, Unit::wrapper);
            for (int i = 0; i < 8; ++i)
              state_.b1[8 * offset + static_cast<unsigned>(i)] =
                  static_cast<std::uint8_t>(word >> (8 * (7 - i)));
          }
        }
        if (--remaining == 0) {
          if (in_setup) {
            aes::AesKey128 key;
            key.bytes = state_.b1;
            pipeline.load_keys(aes::expand_key(key));
            in_setup = false;
          }
          after_block();
        }
        break;
      }
      case WrapperFsm::Encrypt: {
        if (remaining == cfg_.aes_latency) {
          if (state_.block_index == 0) run.first_issue_cycle = cycle;
          pipeline.issue(aes::make_ctr_block(ctr_, iv_, state_.block_index), state_.block_index);
          record(cycle, "issue", std::nullopt, state_.block_index);
        }
        if (auto out = pipeline.step()) {
          state_.b2 = out->data;
          record(cycle, "b2_ready", std::nullopt, out->block_index);
        }
        if (--remaining == 0) state_.fsm = WrapperFsm::WriteHi;
        break;
      }
      case WrapperFsm::WriteHi:
        write_half(cycle, 0);
        state_.fsm = WrapperFsm::WriteLo;
        remaining = cfg_.writeback_cycles - 1;
        break;
      case WrapperFsm::WriteLo:
        if (remaining == cfg_.writeback_cycles - 1) write_half(cycle, 1);
        if (--remaining == 0) {
          ++state_.block_index;
          if (cfg_.per_block_overhead > 0) {
            state_.fsm = WrapperFsm::Fill;
            remaining = cfg_.per_block_overhead;
          } else {
            after_block();
          }
        }
        break;
      case WrapperFsm::Idle:
      case WrapperFsm::Done:
        raise(Errc::simulation_fault, "wrapper stepped in a terminal state");
    }
    ++cycle;
  }
  record(cycle, "done");
  run.cycles = cycle - start_cycle;
  return run;
}

}  // namespace rejscore::hwsim
