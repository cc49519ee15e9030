#include "hwsim/coprocessor.hpp"

#include <algorithm>

#include <json.hpp>

#include "common/error.hpp"
#include "fom/fom.hpp"
#include "sampler/field_vector_io.hpp"

namespace rejscore::hwsim {

std::string to_json(const CycleReport& report) {
  nlohmann::ordered_json j;
  j["total_cycles"] = report.total_cycles;
  j["wrapper_cycles"] = report.wrapper_cycles;
  j["rejsamp_cycles"] = report.rejsamp_cycles;
  j["freq_hz"] = report.freq_hz;
  j["latency_us"] = fom::round_sig(report.latency_seconds() * 1e6);
  return j.dump(2);
}

MemoryLayout default_layout(const ParameterSet& p, std::uint32_t mem_depth) {
  const auto counts = address_counts(p);
  if (mem_depth < counts.tau_addrs)
    raise(Errc::capacity, std::string(to_string(p.sec_level)) + " needs a memory depth of " +
                              std::to_string(required_memory_depth(p)) + " words, have " +
                              std::to_string(mem_depth));
  const std::uint32_t addressable = std::min<std::uint32_t>(mem_depth, kAddrMask + 1);
  MemoryLayout layout;
  layout.seed_addr = addressable - 2;
  layout.keystream_base = 0;
  const bool side_by_side = counts.tau_addrs + counts.out_addrs <= layout.seed_addr;
  layout.result_base = side_by_side ? counts.tau_addrs : 0;
  return layout;
}

std::vector<std::uint32_t> default_program(SecLevel level, const MemoryLayout& layout) {
  const auto sl = level_field(level);
  const auto seed = static_cast<std::uint16_t>(layout.seed_addr);
  const auto result = static_cast<std::uint16_t>(layout.result_base);
  return {
      encode({sl, 0, seed, true, Opcode::LOAD_SEED}),
      encode({sl, seed, result, false, Opcode::RUN_FULL}),
      encode({sl, result, 0, false, Opcode::READ_RESULT}),
  };
}

namespace {

void load_seed(MemoryModel& mem, const aes::AesKey128& seed, std::uint32_t addr,
               std::uint64_t cycle) {
  const auto words = pack_words(seed.bytes);
  mem.write(addr, words[0], cycle, Unit::host);
  mem.write(addr + 1, words[1], cycle + 1, Unit::host);
}

void check_result_region(const ParameterSet& p, std::uint32_t result_base, std::uint32_t depth) {
  const auto counts = address_counts(p);
  if (std::uint64_t{result_base} + counts.out_addrs > depth)
    raise(Errc::capacity, "result region at " + std::to_string(result_base) + " needs depth " +
                              std::to_string(result_base + counts.out_addrs));
  // In place (base 0) is safe: word i is rewritten only after it was read.
  if (result_base != 0 && result_base < counts.tau_addrs)
    raise(Errc::program_error, "result region at " + std::to_string(result_base) +
                                   " overlaps the keystream region");
}

}  // namespace

WrapperRun run_wrapper(const aes::AesKey128& seed, std::uint16_t iv, const ParameterSet& p,
                       const SimConfig& cfg, MemoryModel& mem, const MemoryLayout& layout,
                       std::uint64_t start_cycle, Trace* trace) {
  load_seed(mem, seed, layout.seed_addr, start_cycle);
  AesCtrWrapper wrapper(p, cfg.timing, cfg.ctr, iv, layout.seed_addr, layout.keystream_base);
  return wrapper.run(mem, start_cycle + 2, trace);
}

RejSampRun run_rejsamp_unit(const ParameterSet& p, const SimConfig& cfg, MemoryModel& mem,
                            const MemoryLayout& layout, std::uint64_t start_cycle, Trace* trace) {
  check_result_region(p, layout.result_base, mem.depth());
  RejSampUnit unit(p, cfg.timing, layout.keystream_base, layout.result_base);
  return unit.run(mem, start_cycle, trace);
}

Coprocessor::Coprocessor(SimConfig cfg) : cfg_(cfg), mem_(cfg.mem_depth) {
  validate(cfg_.timing);
  if (!(cfg_.freq_hz > 0)) raise(Errc::validation, "frequency must be positive");
  trace_.enable(cfg_.trace);
}

ProgramResult Coprocessor::run_program(std::span<const std::uint32_t> program,
                                       const aes::AesKey128& seed, std::uint16_t iv) {
  std::vector<Instruction> decoded;
  decoded.reserve(program.size());
  for (auto word : program) decoded.push_back(decode(word));

  std::optional<SecLevel> level;
  bool seed_loaded = false, keystream_ready = false, result_ready = false, drained = false;
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    const auto& ins = decoded[i];
    if (ins.op == Opcode::NOP) continue;
    const auto at = " (instruction " + std::to_string(i) + ")";
    const auto sl = level_from_field(ins.sec_level);
    if (!sl) raise(Errc::unsupported_level, "SecLevel field 3 has no parameter set" + at);
    if (level && *level != *sl) raise(Errc::program_error, "mixed security levels" + at);
    level = sl;
    if (drained) raise(Errc::program_error, "READ_RESULT must be the last instruction" + at);
    switch (ins.op) {
      case Opcode::LOAD_SEED: seed_loaded = seed_loaded || ins.wen; break;
      case Opcode::RUN_PRG:
      case Opcode::RUN_FULL:
        if (!seed_loaded) raise(Errc::program_error, "RUN before LOAD_SEED" + at);
        keystream_ready = true;
        result_ready = result_ready || ins.op == Opcode::RUN_FULL;
        break;
      case Opcode::RUN_REJSAMP:
        if (!keystream_ready) raise(Errc::program_error, "RUN_REJSAMP before RUN_PRG" + at);
        result_ready = true;
        break;
      case Opcode::READ_RESULT:
        if (!result_ready) raise(Errc::program_error, "READ_RESULT before the RejSamp unit ran" + at);
        drained = true;
        break;
      case Opcode::NOP: break;
    }
  }

  mem_ = MemoryModel(cfg_.mem_depth);
  trace_.clear();
  mem_.attach_trace(trace_.enabled() ? &trace_ : nullptr);
  Trace* trace = trace_.enabled() ? &trace_ : nullptr;

  ProgramResult result;
  result.report.freq_hz = cfg_.freq_hz;
  std::uint64_t cycle = 0;
  ParameterSet params;
  if (level) params = builtin_params(*level);

  for (std::size_t i = 0; i < decoded.size(); ++i) {
    const auto& ins = decoded[i];
    if (trace) trace->record(cycle, Unit::host, std::string("op_") + std::string(to_string(ins.op)));
    switch (ins.op) {
      case Opcode::NOP:
        ++cycle;
        break;
      case Opcode::LOAD_SEED:
        if (ins.wen) {
          if (std::uint32_t{ins.waddr} + 1 >= mem_.depth())
            raise(Errc::out_of_range, "seed address " + std::to_string(ins.waddr) +
                                          " outside memory");
          load_seed(mem_, seed, ins.waddr, cycle);
        }
        cycle += 2;
        break;
      case Opcode::RUN_PRG:
      case Opcode::RUN_FULL: {
        if (mem_.depth() < required_memory_depth(params))
          raise(Errc::capacity, std::string(to_string(params.sec_level)) +
                                    " needs a memory depth of " +
                                    std::to_string(required_memory_depth(params)) +
                                    " words, have " + std::to_string(mem_.depth()));
        if (ins.op == Opcode::RUN_FULL) check_result_region(params, ins.waddr, mem_.depth());
        AesCtrWrapper wrapper(params, cfg_.timing, cfg_.ctr, iv, ins.raddr, 0);
        const auto w = wrapper.run(mem_, cycle, trace);
        result.report.wrapper_cycles += w.cycles;
        cycle += w.cycles;
        if (ins.op == Opcode::RUN_FULL) {
          const auto r = run_rejsamp_unit(params, cfg_, mem_, {0, ins.waddr, ins.raddr}, cycle, trace);
          result.report.rejsamp_cycles += r.cycles;
          cycle += r.cycles;
        }
        break;
      }
      case Opcode::RUN_REJSAMP: {
        const auto r = run_rejsamp_unit(params, cfg_, mem_, {0, ins.waddr, 0}, cycle, trace);
        result.report.rejsamp_cycles += r.cycles;
        cycle += r.cycles;
        break;
      }
      case Opcode::READ_RESULT: {
        const auto out_addrs = address_counts(params).out_addrs;
        if (std::uint64_t{ins.raddr} + out_addrs > mem_.depth())
          raise(Errc::out_of_range, "result readout past end of memory");
        std::vector<std::uint64_t> words;
        words.reserve(out_addrs);
        for (std::uint32_t a = 0; a < out_addrs; ++a)
          words.push_back(mem_.read(ins.raddr + a, cycle++, Unit::host));
        result.output = sampler::FieldVector{unpack_words(words, params.n_prime), params.q};
        break;
      }
    }
  }
  result.report.total_cycles = result.report.wrapper_cycles + result.report.rejsamp_cycles;
  return result;
}

}  // namespace rejscore::hwsim
