#include "hwsim/rejsamp_unit.hpp"

#include <algorithm>
#include <string>

#include "common/error.hpp"

namespace rejscore::hwsim {

namespace {

constexpr std::size_t kTailSlots = 2;

}  // namespace

RejSampUnit::RejSampUnit(const ParameterSet& p, const TimingConfig& cfg,
                         std::uint32_t keystream_base, std::uint32_t result_base)
    : params_(p), cfg_(cfg), keystream_base_(keystream_base), result_base_(result_base) {
  validate(params_);
  validate(cfg_);
}

void RejSampUnit::drop_exhausted_tail() {
  const auto q = static_cast<std::uint8_t>(params_.q);
  while (!tail_.empty()) {
    auto& front = tail_.front();
    while (front.begin < front.end && front.bytes[front.begin] == q) {
      ++front.begin;
      state_.k_ptr = front.first_position + front.begin;
    }
    if (front.begin < front.end) return;
    tail_.pop_front();
  }
}

RejSampRun RejSampUnit::run(MemoryModel& mem, std::uint64_t start_cycle, Trace* trace) {
  const auto counts = address_counts(params_);
  const std::uint32_t tau = params_.tau;
  const std::uint32_t n = params_.n_prime;
  const auto q = static_cast<std::uint8_t>(params_.q);

  if (std::uint64_t{keystream_base_} + counts.tau_addrs > mem.depth())
    raise(Errc::capacity, "keystream region needs depth " +
                              std::to_string(keystream_base_ + counts.tau_addrs));
  if (std::uint64_t{result_base_} + counts.out_addrs > mem.depth())
    raise(Errc::capacity, "result region needs depth " +
                              std::to_string(result_base_ + counts.out_addrs));
  for (std::uint32_t w = 0; w < counts.tau_addrs; ++w)
    if (!mem.written(keystream_base_ + w))
      raise(Errc::precondition,
            "keystream word " + std::to_string(keystream_base_ + w) + " was never written");

  auto record = [&](std::uint64_t cycle, const char* event, std::optional<std::uint32_t> addr = {},
                    std::optional<std::uint64_t> data = {}) {
    if (trace) trace->record(cycle, Unit::rejsamp, event, addr, data);
  };

  RejSampRun run;
  run.start_cycle = start_cycle;
  state_ = RejSampUnitState{};
  state_.k_ptr = n;
  tail_.clear();

  std::uint64_t next_tail_word = n / 8;
  const std::uint64_t tail_end_word = counts.tau_addrs;
  bool fetching = false;  // a tail word is on the read port this cycle
  auto tail_exhausted = [&] {
    return tail_.empty() && !fetching && next_tail_word >= tail_end_word;
  };

  std::uint64_t cycle = start_cycle;
  record(cycle, "start");

  // One clock edge. `port_busy` marks cycles whose read port is taken by a
  // main-stream Load; otherwise an empty tail slot is refilled. The refill is
  // decided on the slot state at the start of the cycle and lands at its end.
  auto tick = [&](bool port_busy) {
    const bool prefetch = !port_busy && tail_.size() < kTailSlots && next_tail_word < tail_end_word;
    std::uint64_t word = 0;
    const auto word_index = next_tail_word;
    fetching = prefetch;
    if (prefetch) {
      word = mem.read(keystream_base_ + static_cast<std::uint32_t>(word_index), cycle, Unit::rejsamp);
      ++next_tail_word;
      ++run.tail_reads;
    }
    return [this, &fetching, prefetch, word, word_index, n, tau, q]() {
      fetching = false;
      if (!prefetch) return;
      TailWord tw;
      for (int i = 0; i < 8; ++i) tw.bytes[i] = static_cast<std::uint8_t>(word >> (8 * (7 - i))) & q;
      const std::uint64_t lo = std::max<std::uint64_t>(word_index * 8, n);
      const std::uint64_t hi = std::min<std::uint64_t>(word_index * 8 + 8, tau);
      tw.first_position = word_index * 8;
      tw.begin = static_cast<std::uint8_t>(lo - word_index * 8);
      tw.end = static_cast<std::uint8_t>(hi - word_index * 8);
      tail_.push_back(tw);
      drop_exhausted_tail();
    };
  };

  auto write_out = [&](std::uint64_t out_word) {
    state_.fsm = RejSampFsm::WriteOut;
    auto land = tick(false);
    mem.write(result_base_ + static_cast<std::uint32_t>(out_word), state_.b2_out, cycle,
              Unit::rejsamp);
    ++run.words_written;
    state_.b2_out = 0;
    state_.valid_count = 0;
    land();
    ++cycle;
  };

  for (std::uint32_t s = 0; s < cfg_.rejsamp_setup_cycles; ++s) {
    state_.fsm = RejSampFsm::Idle;
    auto land = tick(false);
    land();
    ++cycle;
  }

  std::uint64_t out_word = 0;
  const std::uint64_t windows = (std::uint64_t{n} + 15) / 16;
  run.windows = windows;

  for (std::uint64_t w = 0; w < windows; ++w) {
    const std::uint64_t lo = 16 * w;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + 16, n);
    const std::uint64_t first_word = lo / 8;
    const std::uint64_t last_word = (hi - 1) / 8;

    state_.fsm = RejSampFsm::Load;
    state_.shift_reg.fill(0);
    for (std::uint64_t word = first_word; word <= last_word; ++word) {
      auto land = tick(true);
      const auto data = mem.read(keystream_base_ + static_cast<std::uint32_t>(word), cycle,
                                 Unit::rejsamp);
      ++run.main_reads;
      for (int i = 0; i < 8; ++i)
        state_.shift_reg[8 * (word - first_word) + static_cast<std::uint64_t>(i)] =
            static_cast<std::uint8_t>(data >> (8 * (7 - i)));
      land();
      ++cycle;
    }

    state_.fsm = RejSampFsm::Mask;
    {
      auto land = tick(false);
      for (auto& b : state_.shift_reg) b &= q;
      land();
      ++cycle;
    }

    state_.fsm = RejSampFsm::Validate;
    {
      auto land = tick(false);
      state_.valid_flags = 0;
      for (int i = 0; i < 16; ++i)
        if (state_.shift_reg[i] < q) state_.valid_flags |= static_cast<std::uint16_t>(1u << i);
      land();
      ++cycle;
    }

    for (std::uint64_t pos = lo; pos < hi;) {
      const auto lane = static_cast<unsigned>(pos - lo);
      std::uint8_t value = 0;
      bool produced = true;
      auto land = tick(false);
      if (state_.valid_flags & (1u << lane)) {
        state_.fsm = RejSampFsm::Collect;
        value = state_.shift_reg[lane];
      } else if (!tail_.empty()) {
        state_.fsm = RejSampFsm::Collect;
        auto& front = tail_.front();
        value = front.bytes[front.begin];
        ++front.begin;
        state_.k_ptr = front.first_position + front.begin;
        drop_exhausted_tail();
        ++run.replaced;
      } else if (tail_exhausted()) {
        state_.fsm = RejSampFsm::ZeroFill;
        value = 0;
        state_.k_ptr = tau;
        ++run.zero_filled;
        record(cycle, "zero_fill", static_cast<std::uint32_t>(pos));
      } else {
        state_.fsm = RejSampFsm::Collect;
        produced = false;
        ++run.stalls;
        record(cycle, "stall", static_cast<std::uint32_t>(pos));
      }
      land();
      ++cycle;
      if (!produced) continue;

      state_.b2_out |= std::uint64_t{value} << (8 * (7 - state_.valid_count));
      ++state_.valid_count;
      ++pos;
      if (state_.valid_count == 8 || pos == n) write_out(out_word++);
    }
  }

  state_.fsm = RejSampFsm::Done;
  record(cycle, "done");
  run.cycles = cycle - start_cycle;
  return run;
}

}  // namespace rejscore::hwsim
