#include "rejscore/rejscore.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "aesprg/aes128.hpp"
#include "aesprg/keystream.hpp"
#include "common/error.hpp"
#include "fom/fom.hpp"
#include "fom/fom_report.hpp"
#include "hwsim/coprocessor.hpp"
#include "hwsim/isa.hpp"
#include "kat/kat.hpp"
#include "params/params.hpp"
#include "sampler/field_vector_io.hpp"
#include "sampler/sampler.hpp"

using namespace rejscore;

struct rejscore_sim {
  hwsim::Coprocessor core;
  hwsim::ProgramResult last;
  bool has_result = false;
};

namespace {

thread_local std::string g_last_error;

rejscore_status fail(rejscore_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

rejscore_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return REJSCORE_E_INVALID_ARGUMENT;
    case Errc::unsupported_modulus: return REJSCORE_E_UNSUPPORTED_MODULUS;
    case Errc::insufficient_input: return REJSCORE_E_INSUFFICIENT_INPUT;
    case Errc::empty_request: return REJSCORE_E_EMPTY_REQUEST;
    case Errc::invalid_instruction: return REJSCORE_E_INVALID_INSTRUCTION;
    case Errc::program_error: return REJSCORE_E_PROGRAM;
    case Errc::unsupported_level: return REJSCORE_E_UNSUPPORTED_LEVEL;
    case Errc::capacity: return REJSCORE_E_CAPACITY;
    case Errc::out_of_range: return REJSCORE_E_OUT_OF_RANGE;
    case Errc::simulation_fault: return REJSCORE_E_SIMULATION_FAULT;
    case Errc::precondition: return REJSCORE_E_PRECONDITION;
    case Errc::validation: return REJSCORE_E_VALIDATION;
    case Errc::parse: return REJSCORE_E_PARSE;
  }
  return REJSCORE_E_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class F>
rejscore_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(REJSCORE_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(REJSCORE_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(REJSCORE_E_INTERNAL, e.what());
  }
}

#define REQUIRE_ARG(cond)                                                              \
  do {                                                                                 \
    if (!(cond)) return fail(REJSCORE_E_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

rejscore_status emit_text(const std::string& text, char* buf, std::size_t cap, std::size_t* len) {
  REQUIRE_ARG(len);
  *len = text.size();
  if (!buf || cap < text.size() + 1)
    return fail(REJSCORE_E_BUFFER_TOO_SMALL, "need " + std::to_string(text.size() + 1) + " bytes");
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  return REJSCORE_OK;
}

rejscore_status emit_bytes(const void* data, std::size_t n, std::uint8_t* buf, std::size_t cap,
                           std::size_t* len) {
  REQUIRE_ARG(len);
  *len = n;
  if (!buf || cap < n)
    return fail(REJSCORE_E_BUFFER_TOO_SMALL, "need " + std::to_string(n) + " bytes");
  if (n) std::memcpy(buf, data, n);
  return REJSCORE_OK;
}

aes::AesKey128 key_from(const std::uint8_t* key) {
  aes::AesKey128 k;
  std::memcpy(k.bytes.data(), key, 16);
  return k;
}

SecLevel level_or_throw(int level) {
  const auto l = level_from_number(level);
  if (!l) raise(Errc::unsupported_level, "level " + std::to_string(level) + " is not 1, 3 or 5");
  return *l;
}

ParameterSet from_c(const rejscore_params& p) {
  ParameterSet out;
  out.sec_level = level_or_throw(p.level);
  out.q = p.q;
  out.l = p.l;
  out.V = p.V;
  out.M = p.M;
  out.v = p.v;
  out.m = p.m;
  out.tau = p.tau;
  out.n_prime = p.n_prime;
  out.lambda = p.lambda;
  validate(out);
  return out;
}

rejscore_params to_c(const ParameterSet& p) {
  return {static_cast<int>(p.sec_level), p.q, p.l, p.V, p.M, p.v, p.m, p.tau, p.n_prime, p.lambda};
}

hwsim::SimConfig from_c(const rejscore_sim_config& c) {
  hwsim::SimConfig cfg;
  cfg.timing = {c.timing.aes_latency, c.timing.writeback_cycles, c.timing.per_block_overhead,
                c.timing.wrapper_setup_cycles, c.timing.rejsamp_setup_cycles};
  cfg.mem_depth = c.mem_depth;
  cfg.freq_hz = c.freq_hz;
  std::memcpy(cfg.ctr.nonce.data(), c.nonce, 8);
  cfg.trace = c.trace != 0;
  return cfg;
}

fom::PlatformMetrics from_c(const rejscore_platform_metrics& m) {
  fom::PlatformMetrics out;
  if (m.kind == REJSCORE_PLATFORM_ASIC) out.kind = fom::PlatformKind::ASIC;
  else if (m.kind == REJSCORE_PLATFORM_FPGA) out.kind = fom::PlatformKind::FPGA;
  else raise(Errc::validation, "unknown platform kind");
  if (!std::isnan(m.area_um2)) out.area_um2 = m.area_um2;
  if (!std::isnan(m.luts)) out.luts = m.luts;
  out.cpd_ns = m.cpd_ns;
  out.power_mw = m.power_mw;
  out.tech_nm = m.tech_nm;
  return out;
}

}  // namespace

extern "C" {

const char* rejscore_version(void) { return "1.0.0"; }

const char* rejscore_status_string(rejscore_status status) {
  switch (status) {
    case REJSCORE_OK: return "ok";
    case REJSCORE_E_INVALID_ARGUMENT: return "invalid argument";
    case REJSCORE_E_UNSUPPORTED_MODULUS: return "unsupported modulus";
    case REJSCORE_E_INSUFFICIENT_INPUT: return "insufficient input";
    case REJSCORE_E_EMPTY_REQUEST: return "empty request";
    case REJSCORE_E_INVALID_INSTRUCTION: return "invalid instruction";
    case REJSCORE_E_PROGRAM: return "program error";
    case REJSCORE_E_UNSUPPORTED_LEVEL: return "unsupported security level";
    case REJSCORE_E_CAPACITY: return "memory capacity exceeded";
    case REJSCORE_E_OUT_OF_RANGE: return "out of range";
    case REJSCORE_E_SIMULATION_FAULT: return "simulation fault";
    case REJSCORE_E_PRECONDITION: return "precondition violated";
    case REJSCORE_E_VALIDATION: return "validation error";
    case REJSCORE_E_PARSE: return "parse error";
    case REJSCORE_E_BUFFER_TOO_SMALL: return "buffer too small";
    case REJSCORE_E_MISMATCH: return "mismatch";
    case REJSCORE_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rejscore_last_error(void) { return g_last_error.c_str(); }

rejscore_status rejscore_builtin_params(int level, rejscore_params* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = to_c(builtin_params(level_or_throw(level)));
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_address_counts(const rejscore_params* params, uint32_t* tau_addrs,
                                        uint32_t* out_addrs) {
  REQUIRE_ARG(params && tau_addrs && out_addrs);
  return guarded([&] {
    const auto counts = address_counts(from_c(*params));
    *tau_addrs = counts.tau_addrs;
    *out_addrs = counts.out_addrs;
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_params_json(const rejscore_params* params, char* buf, size_t cap,
                                     size_t* len) {
  REQUIRE_ARG(params);
  return guarded([&] {
    const nlohmann::json j = from_c(*params);
    return emit_text(j.dump(2), buf, cap, len);
  });
}

rejscore_status rejscore_aes128_encrypt_block(const uint8_t key[16], const uint8_t in[16],
                                              uint8_t out[16]) {
  REQUIRE_ARG(key && in && out);
  return guarded([&] {
    aes::Block block;
    std::memcpy(block.data(), in, 16);
    const auto ct = aes::encrypt_block(key_from(key), block);
    std::memcpy(out, ct.data(), 16);
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_keystream(const uint8_t key[16], uint16_t iv, const uint8_t nonce[8],
                                   uint8_t* out, size_t n_bytes) {
  REQUIRE_ARG(key && (out || n_bytes == 0));
  return guarded([&] {
    aes::CtrConfig ctr;
    if (nonce) std::memcpy(ctr.nonce.data(), nonce, 8);
    const auto ks = aes::keystream({key_from(key), iv, n_bytes}, ctr);
    std::memcpy(out, ks.data(), ks.size());
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_mask_bytes(const uint8_t* raw, size_t n, uint32_t q, uint8_t* out) {
  REQUIRE_ARG((raw && out) || n == 0);
  return guarded([&] {
    const auto masked = sampler::mask_bytes({raw, n}, q);
    std::copy(masked.begin(), masked.end(), out);
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_rej_samp(const uint8_t* raw, uint32_t tau, uint32_t n_prime, uint32_t q,
                                  uint8_t* out) {
  REQUIRE_ARG((raw || tau == 0) && (out || n_prime == 0));
  return guarded([&] {
    const auto v = sampler::rej_samp({raw, tau}, tau, n_prime, q);
    std::copy(v.elems.begin(), v.elems.end(), out);
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_rej_samp_prg(const uint8_t key[16], uint16_t iv,
                                      const rejscore_params* params, uint8_t* out, size_t cap) {
  REQUIRE_ARG(key && params && out);
  return guarded([&] {
    const auto p = from_c(*params);
    if (cap < p.n_prime)
      return fail(REJSCORE_E_BUFFER_TOO_SMALL, "need " + std::to_string(p.n_prime) + " bytes");
    const auto v = sampler::rej_samp_prg(key_from(key), iv, p);
    std::copy(v.elems.begin(), v.elems.end(), out);
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_sample_stats_prg(const uint8_t key[16], uint16_t iv,
                                          const rejscore_params* params,
                                          rejscore_sample_stats* out) {
  REQUIRE_ARG(key && params && out);
  return guarded([&] {
    const auto p = from_c(*params);
    const auto raw = aes::keystream({key_from(key), iv, p.tau});
    const auto s = sampler::sample_stats(raw, p.n_prime, p.q);
    *out = {s.rejected_in_prefix, s.replaced, s.zero_filled, s.tail_consumed};
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_vector_export(const uint8_t* elems, size_t n, int format, uint8_t* buf,
                                       size_t cap, size_t* len) {
  REQUIRE_ARG(elems || n == 0);
  return guarded([&] {
    const std::span<const std::uint8_t> v{elems, n};
    if (format == REJSCORE_FORMAT_BIN) {
      const auto bin = to_packed_binary(v);
      return emit_bytes(bin.data(), bin.size(), buf, cap, len);
    }
    if (format == REJSCORE_FORMAT_CSV) {
      const auto csv = to_csv(v);
      return emit_bytes(csv.data(), csv.size(), buf, cap, len);
    }
    return fail(REJSCORE_E_INVALID_ARGUMENT, "vector export supports bin and csv");
  });
}

rejscore_status rejscore_encode_instruction(const rejscore_instruction* ins, uint32_t* word) {
  REQUIRE_ARG(ins && word);
  return guarded([&] {
    if (ins->op > REJSCORE_OP_READ_RESULT || ins->wen > 1)
      raise(Errc::invalid_instruction, "instruction field out of range");
    *word = hwsim::encode({ins->sec_level, ins->raddr, ins->waddr, ins->wen != 0,
                           static_cast<hwsim::Opcode>(ins->op)});
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_decode_instruction(uint32_t word, rejscore_instruction* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    const auto ins = hwsim::decode(word);
    *out = {ins.sec_level, ins.raddr, ins.waddr, static_cast<uint8_t>(ins.wen),
            static_cast<uint8_t>(ins.op)};
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_parse_program(const char* text, uint32_t* words, size_t cap,
                                       size_t* count) {
  REQUIRE_ARG(text && count);
  return guarded([&] {
    const auto program = hwsim::parse_program(text);
    *count = program.size();
    if (!words || cap < program.size())
      return fail(REJSCORE_E_BUFFER_TOO_SMALL, "need " + std::to_string(program.size()) + " words");
    std::copy(program.begin(), program.end(), words);
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_format_program(const uint32_t* words, size_t count, char* buf, size_t cap,
                                        size_t* len) {
  REQUIRE_ARG(words || count == 0);
  return guarded([&] {
    return emit_text(hwsim::format_program({words, words + count}), buf, cap, len);
  });
}

void rejscore_sim_config_default(rejscore_sim_config* cfg) {
  if (!cfg) return;
  const hwsim::SimConfig d;
  cfg->timing = {d.timing.aes_latency, d.timing.writeback_cycles, d.timing.per_block_overhead,
                 d.timing.wrapper_setup_cycles, d.timing.rejsamp_setup_cycles};
  cfg->mem_depth = d.mem_depth;
  cfg->freq_hz = d.freq_hz;
  std::memset(cfg->nonce, 0, sizeof cfg->nonce);
  cfg->trace = 0;
}

rejscore_status rejscore_required_depth(int level, uint32_t* depth) {
  REQUIRE_ARG(depth);
  return guarded([&] {
    *depth = required_memory_depth(builtin_params(level_or_throw(level)));
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_default_program(int level, uint32_t mem_depth, uint32_t* words,
                                         size_t cap, size_t* count) {
  REQUIRE_ARG(count);
  return guarded([&] {
    const auto l = level_or_throw(level);
    const auto program = hwsim::default_program(l, hwsim::default_layout(builtin_params(l), mem_depth));
    *count = program.size();
    if (!words || cap < program.size())
      return fail(REJSCORE_E_BUFFER_TOO_SMALL, "need " + std::to_string(program.size()) + " words");
    std::copy(program.begin(), program.end(), words);
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_sim_create(const rejscore_sim_config* cfg, rejscore_sim** out) {
  REQUIRE_ARG(cfg && out);
  *out = nullptr;
  return guarded([&] {
    *out = new rejscore_sim{hwsim::Coprocessor(from_c(*cfg)), {}, false};
    return REJSCORE_OK;
  });
}

void rejscore_sim_destroy(rejscore_sim* sim) { delete sim; }

rejscore_status rejscore_sim_run(rejscore_sim* sim, const uint32_t* program, size_t count,
                                 const uint8_t key[16], uint16_t iv,
                                 rejscore_cycle_report* report) {
  REQUIRE_ARG(sim && (program || count == 0) && key);
  return guarded([&] {
    sim->has_result = false;
    sim->last = sim->core.run_program({program, count}, key_from(key), iv);
    sim->has_result = true;
    if (report) {
      const auto& r = sim->last.report;
      *report = {r.total_cycles, r.wrapper_cycles, r.rejsamp_cycles, r.freq_hz, r.latency_seconds()};
    }
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_sim_result(const rejscore_sim* sim, uint8_t* out, size_t cap,
                                    size_t* len) {
  REQUIRE_ARG(sim);
  if (!sim->has_result) return fail(REJSCORE_E_PRECONDITION, "no completed run");
  const auto& e = sim->last.output.elems;
  return emit_bytes(e.data(), e.size(), out, cap, len);
}

rejscore_status rejscore_sim_report_json(const rejscore_sim* sim, char* buf, size_t cap,
                                         size_t* len) {
  REQUIRE_ARG(sim);
  if (!sim->has_result) return fail(REJSCORE_E_PRECONDITION, "no completed run");
  return guarded([&] { return emit_text(hwsim::to_json(sim->last.report), buf, cap, len); });
}

rejscore_status rejscore_sim_trace_csv(const rejscore_sim* sim, char* buf, size_t cap,
                                       size_t* len) {
  REQUIRE_ARG(sim);
  return guarded([&] { return emit_text(sim->core.trace().to_csv(), buf, cap, len); });
}

rejscore_status rejscore_fom_adp(const rejscore_platform_metrics* m, double* value, int* unit) {
  REQUIRE_ARG(m && value);
  return guarded([&] {
    const auto result = fom::adp(from_c(*m));
    if (const auto* s = std::get_if<fom::SiliconAdp>(&result)) {
      *value = s->value;
      if (unit) *unit = REJSCORE_UNIT_UM2_S;
    } else {
      *value = std::get<fom::LutAdp>(result).value;
      if (unit) *unit = REJSCORE_UNIT_LUT_S;
    }
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_fom_pdp(const rejscore_platform_metrics* m, double* value) {
  REQUIRE_ARG(m && value);
  return guarded([&] {
    *value = fom::pdp(from_c(*m)).value;
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_fom_scale_area(double area, double from_nm, double to_nm, double* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = fom::scale_area(fom::Area{area}, from_nm, to_nm).value;
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_fom_latency(uint64_t cycles, double freq_hz, double* seconds) {
  REQUIRE_ARG(seconds);
  return guarded([&] {
    *seconds = fom::latency(cycles, freq_hz);
    return REJSCORE_OK;
  });
}

rejscore_status rejscore_fom_report(const char* metrics_json, int format, char* buf, size_t cap,
                                    size_t* len, size_t* warnings) {
  REQUIRE_ARG(metrics_json);
  return guarded([&] {
    const auto report = fom::build_report(metrics_json);
    if (warnings) *warnings = report.warnings.size();
    if (format == REJSCORE_FORMAT_JSON) return emit_text(fom::to_json(report), buf, cap, len);
    if (format == REJSCORE_FORMAT_CSV) return emit_text(fom::to_csv(report), buf, cap, len);
    return fail(REJSCORE_E_INVALID_ARGUMENT, "report format must be json or csv");
  });
}

rejscore_status rejscore_fom_warnings(const char* metrics_json, char* buf, size_t cap,
                                      size_t* len) {
  REQUIRE_ARG(metrics_json);
  return guarded([&] {
    std::string text;
    for (const auto& w : fom::build_report(metrics_json).warnings) text += w + '\n';
    return emit_text(text, buf, cap, len);
  });
}

rejscore_status rejscore_kat_generate(const uint8_t key[16], uint16_t iv, int level, size_t count,
                                      char* buf, size_t cap, size_t* len) {
  REQUIRE_ARG(key);
  return guarded([&] {
    const auto l = level_or_throw(level);
    std::vector<kat::KatCase> cases;
    for (size_t i = 0; i < count; ++i)
      cases.push_back({key_from(key), static_cast<std::uint16_t>(iv + i), l});
    return emit_text(kat::generate(cases), buf, cap, len);
  });
}

rejscore_status rejscore_kat_verify(const char* text, size_t* line, size_t* column, size_t* cases) {
  REQUIRE_ARG(text);
  return guarded([&] {
    const auto r = kat::verify(text);
    if (line) *line = r.line;
    if (column) *column = r.column;
    if (cases) *cases = r.cases;
    if (r.ok) return REJSCORE_OK;
    return fail(r.column ? REJSCORE_E_PARSE : REJSCORE_E_MISMATCH, r.message);
  });
}

}  // extern "C"
