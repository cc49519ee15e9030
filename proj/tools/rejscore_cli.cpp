// rejscore command-line front end. Talks to the library only through the C API.

#include <rejscore/rejscore.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kUnsupported = 3,
  kCapacity = 4,
  kSelfCheck = 5,
};

struct Failure {
  int code;
  std::string message;
};

int exit_code(rejscore_status st) {
  switch (st) {
    case REJSCORE_OK: return kOk;
    case REJSCORE_E_INVALID_ARGUMENT:
    case REJSCORE_E_PARSE:
    case REJSCORE_E_VALIDATION:
    case REJSCORE_E_INVALID_INSTRUCTION:
    case REJSCORE_E_PROGRAM:
    case REJSCORE_E_UNSUPPORTED_MODULUS:
      return kUsage;
    case REJSCORE_E_UNSUPPORTED_LEVEL: return kUnsupported;
    case REJSCORE_E_CAPACITY: return kCapacity;
    default: return kFailure;
  }
}

void check(rejscore_status st) {
  if (st != REJSCORE_OK) throw Failure{exit_code(st), rejscore_last_error()};
}

// Two-call pattern for (buf, cap, len) text outputs.
template <class F>
std::string fetch_text(F&& call) {
  size_t len = 0;
  const auto st = call(nullptr, 0, &len);
  if (st != REJSCORE_E_BUFFER_TOO_SMALL) check(st);
  std::string s(len + 1, '\0');
  check(call(s.data(), s.size(), &len));
  s.resize(len);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const void* data, size_t n) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kFailure, "cannot write " + path};
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  if (!out) throw Failure{kFailure, "write failed: " + path};
}

void write_file(const std::string& path, const std::string& text) {
  write_file(path, text.data(), text.size());
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<uint8_t> parse_hex(const std::string& text, size_t bytes, const char* what) {
  if (text.size() != 2 * bytes)
    throw Failure{kUsage, std::string(what) + " must be " + std::to_string(2 * bytes) +
                              " hex digits, got " + std::to_string(text.size())};
  std::vector<uint8_t> out(bytes);
  for (size_t i = 0; i < bytes; ++i) {
    const int hi = hex_digit(text[2 * i]), lo = hex_digit(text[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Failure{kUsage, std::string(what) + " is not valid hex"};
    out[i] = static_cast<uint8_t>(hi << 4 | lo);
  }
  return out;
}

struct Common {
  int level = 1;
  std::string seed = "000102030405060708090a0b0c0d0e0f";
  std::string iv = "0000";
  std::string out;
  std::string format = "bin";
  std::string params_out;

  std::vector<uint8_t> key() const { return parse_hex(seed, 16, "--seed"); }
  uint16_t iv_value() const {
    const auto b = parse_hex(iv, 2, "--iv");
    return static_cast<uint16_t>(b[0] << 8 | b[1]);
  }
  int format_code() const {
    if (format == "bin") return REJSCORE_FORMAT_BIN;
    if (format == "csv") return REJSCORE_FORMAT_CSV;
    return REJSCORE_FORMAT_JSON;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--level", c.level, "security level: 1, 3 or 5")->capture_default_str();
  cmd->add_option("--seed", c.seed, "128-bit seed as 32 hex digits")->capture_default_str();
  cmd->add_option("--iv", c.iv, "16-bit IV as 4 hex digits")->capture_default_str();
  cmd->add_option("--out", c.out, "write the sampled vector here");
  cmd->add_option("--format", c.format, "vector format")
      ->check(CLI::IsMember({"bin", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--params-out", c.params_out, "write the parameter set as JSON");
}

rejscore_params load_params(int level) {
  rejscore_params p{};
  check(rejscore_builtin_params(level, &p));
  return p;
}

void emit_vector(const Common& c, const std::vector<uint8_t>& elems) {
  if (c.out.empty()) return;
  size_t len = 0;
  const int fmt = c.format_code();
  auto st = rejscore_vector_export(elems.data(), elems.size(), fmt, nullptr, 0, &len);
  if (st != REJSCORE_E_BUFFER_TOO_SMALL) check(st);
  std::vector<uint8_t> buf(len + 1);
  check(rejscore_vector_export(elems.data(), elems.size(), fmt, buf.data(), buf.size(), &len));
  write_file(c.out, buf.data(), len);
}

void emit_params(const Common& c, const rejscore_params& p) {
  if (c.params_out.empty()) return;
  write_file(c.params_out, fetch_text([&](char* b, size_t cap, size_t* len) {
               return rejscore_params_json(&p, b, cap, len);
             }) + "\n");
}

int cmd_params(int level) {
  const auto p = load_params(level);
  std::cout << fetch_text([&](char* b, size_t cap, size_t* len) {
    return rejscore_params_json(&p, b, cap, len);
  }) << "\n";
  return kOk;
}

int cmd_sample(const Common& c) {
  const auto key = c.key();
  const auto iv = c.iv_value();
  const auto p = load_params(c.level);
  std::vector<uint8_t> elems(p.n_prime);
  check(rejscore_rej_samp_prg(key.data(), iv, &p, elems.data(), elems.size()));
  rejscore_sample_stats st{};
  check(rejscore_sample_stats_prg(key.data(), iv, &p, &st));
  emit_vector(c, elems);
  emit_params(c, p);
  std::printf("elements %zu\nrejected %llu\nreplaced %llu\nzero_filled %llu\ntail_consumed %llu\n",
              elems.size(), static_cast<unsigned long long>(st.rejected_in_prefix),
              static_cast<unsigned long long>(st.replaced),
              static_cast<unsigned long long>(st.zero_filled),
              static_cast<unsigned long long>(st.tail_consumed));
  return kOk;
}

struct SimOptions {
  double freq = 222e6;
  uint32_t mem_depth = 1024;
  std::string trace;
  std::string program;
  std::string report;
  bool no_self_check = false;
  std::optional<uint32_t> aes_latency, writeback, overhead, wrapper_setup, rejsamp_setup;
};

int level_of_program(const std::vector<uint32_t>& words, int fallback) {
  for (auto w : words) {
    rejscore_instruction ins{};
    check(rejscore_decode_instruction(w, &ins));
    if (ins.op == REJSCORE_OP_NOP) continue;
    switch (ins.sec_level) {
      case 0: return 1;
      case 1: return 3;
      case 2: return 5;
      default: throw Failure{kUnsupported, "program uses an unsupported security level field"};
    }
  }
  return fallback;
}

int cmd_simulate(const Common& c, const SimOptions& o) {
  const auto key = c.key();
  const auto iv = c.iv_value();

  rejscore_sim_config cfg;
  rejscore_sim_config_default(&cfg);
  cfg.freq_hz = o.freq;
  cfg.mem_depth = o.mem_depth;
  cfg.trace = o.trace.empty() ? 0 : 1;
  if (o.aes_latency) cfg.timing.aes_latency = *o.aes_latency;
  if (o.writeback) cfg.timing.writeback_cycles = *o.writeback;
  if (o.overhead) cfg.timing.per_block_overhead = *o.overhead;
  if (o.wrapper_setup) cfg.timing.wrapper_setup_cycles = *o.wrapper_setup;
  if (o.rejsamp_setup) cfg.timing.rejsamp_setup_cycles = *o.rejsamp_setup;

  std::vector<uint32_t> program;
  int level = c.level;
  if (!o.program.empty()) {
    const auto text = read_file(o.program);
    size_t count = 0;
    auto st = rejscore_parse_program(text.c_str(), nullptr, 0, &count);
    if (st != REJSCORE_E_BUFFER_TOO_SMALL) check(st);
    program.resize(count);
    check(rejscore_parse_program(text.c_str(), program.data(), program.size(), &count));
    level = level_of_program(program, level);
  } else {
    load_params(level);
    size_t count = 0;
    program.resize(8);
    check(rejscore_default_program(level, cfg.mem_depth, program.data(), program.size(), &count));
    program.resize(count);
  }

  rejscore_sim* sim = nullptr;
  check(rejscore_sim_create(&cfg, &sim));
  std::unique_ptr<rejscore_sim, void (*)(rejscore_sim*)> guard(sim, rejscore_sim_destroy);

  check(rejscore_sim_run(sim, program.data(), program.size(), key.data(), iv, nullptr));
  const auto report = fetch_text([&](char* b, size_t cap, size_t* len) {
    return rejscore_sim_report_json(sim, b, cap, len);
  });
  std::cout << report << "\n";
  if (!o.report.empty()) write_file(o.report, report + "\n");
  if (!o.trace.empty())
    write_file(o.trace, fetch_text([&](char* b, size_t cap, size_t* len) {
                 return rejscore_sim_trace_csv(sim, b, cap, len);
               }));

  size_t n = 0;
  auto st = rejscore_sim_result(sim, nullptr, 0, &n);
  if (st != REJSCORE_E_BUFFER_TOO_SMALL && st != REJSCORE_OK) check(st);
  std::vector<uint8_t> result(n);
  if (n) check(rejscore_sim_result(sim, result.data(), result.size(), &n));

  const auto p = load_params(level);
  emit_params(c, p);
  if (n == 0) {
    std::cerr << "note: program has no READ_RESULT, nothing to compare or write\n";
    return kOk;
  }
  emit_vector(c, result);

  if (!o.no_self_check) {
    std::vector<uint8_t> golden(p.n_prime);
    check(rejscore_rej_samp_prg(key.data(), iv, &p, golden.data(), golden.size()));
    if (golden != result) {
      size_t i = 0;
      while (i < golden.size() && i < result.size() && golden[i] == result[i]) ++i;
      std::cerr << "self-check FAILED: simulator output differs from the reference sampler at element "
                << i << "\n";
      return kSelfCheck;
    }
    std::cerr << "self-check passed (" << result.size() << " elements)\n";
  }
  return kOk;
}

int cmd_kat_generate(const Common& c, size_t count) {
  const auto key = c.key();
  const auto text = fetch_text([&](char* b, size_t cap, size_t* len) {
    return rejscore_kat_generate(key.data(), c.iv_value(), c.level, count, b, cap, len);
  });
  if (c.out.empty()) std::cout << text;
  else write_file(c.out, text);
  return kOk;
}

int cmd_kat_verify(const std::string& path) {
  const auto text = read_file(path);
  size_t line = 0, column = 0, cases = 0;
  const auto st = rejscore_kat_verify(text.c_str(), &line, &column, &cases);
  if (st == REJSCORE_OK) {
    std::cout << path << ": " << cases << " lines OK\n";
    return kOk;
  }
  std::cerr << path << ":" << line;
  if (column) std::cerr << ":" << column;
  std::cerr << ": " << rejscore_last_error() << "\n";
  return st == REJSCORE_E_PARSE ? kUsage : kFailure;
}

int cmd_fom(const std::string& path, const std::string& format, const std::string& out) {
  const auto doc = read_file(path);
  const int fmt = format == "csv" ? REJSCORE_FORMAT_CSV : REJSCORE_FORMAT_JSON;
  size_t warnings = 0;
  const auto report = fetch_text([&](char* b, size_t cap, size_t* len) {
    return rejscore_fom_report(doc.c_str(), fmt, b, cap, len, &warnings);
  });
  if (out.empty()) std::cout << report << (report.ends_with('\n') ? "" : "\n");
  else write_file(out, report);
  if (warnings) {
    const auto text = fetch_text([&](char* b, size_t cap, size_t* len) {
      return rejscore_fom_warnings(doc.c_str(), b, cap, len);
    });
    std::istringstream lines(text);
    for (std::string l; std::getline(lines, l);) std::cerr << "warning: " << l << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rejection-sampling coprocessor model: sampling, cycle simulation, KATs, figures of merit"};
  app.footer(
      "Binary vectors (--format bin) hold one byte per element, eight per 64-bit word with\n"
      "element 0 in the most significant byte, zero padded to a multiple of 8 bytes.\n"
      "Exit codes: 0 ok, 1 failure (including a KAT mismatch), 2 usage/parse/validation,\n"
      "3 unsupported level, 4 memory capacity, 5 simulator self-check mismatch.");
  app.set_version_flag("--version", rejscore_version());
  app.require_subcommand(1);

  Common common;
  SimOptions sim;
  size_t kat_count = 1;
  std::string kat_path, fom_path, fom_format = "json", fom_out;
  int params_level = 1;

  auto* params = app.add_subcommand("params", "print a parameter set as JSON");
  params->add_option("--level", params_level, "security level: 1, 3 or 5")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "run the reference sampler");
  add_common(sample, common);

  auto* simulate = app.add_subcommand("simulate", "run the cycle-level coprocessor model");
  add_common(simulate, common);
  simulate->add_option("--freq", sim.freq, "clock frequency in Hz")->capture_default_str();
  simulate->add_option("--mem-depth", sim.mem_depth, "memory depth in 64-bit words")
      ->capture_default_str();
  simulate->add_option("--trace", sim.trace, "write a cycle trace CSV");
  simulate->add_option("--program", sim.program, "program file (7 hex digits per line)");
  simulate->add_option("--report", sim.report, "also write the cycle report JSON here");
  simulate->add_flag("--no-self-check", sim.no_self_check,
                     "skip the comparison with the reference sampler");
  simulate->add_option("--aes-latency", sim.aes_latency, "AES pipeline latency in cycles");
  simulate->add_option("--writeback-cycles", sim.writeback, "cycles to drain one block");
  simulate->add_option("--block-overhead", sim.overhead, "extra cycles per block");
  simulate->add_option("--wrapper-setup", sim.wrapper_setup, "wrapper setup cycles");
  simulate->add_option("--rejsamp-setup", sim.rejsamp_setup, "RejSamp setup cycles");

  auto* kat = app.add_subcommand("kat", "known-answer files");
  kat->require_subcommand(1);
  auto* kat_gen = kat->add_subcommand("generate", "write keystream and vector lines");
  add_common(kat_gen, common);
  kat_gen->add_option("--count", kat_count, "cases, with iv, iv+1, ...")->capture_default_str();
  auto* kat_ver = kat->add_subcommand("verify", "recompute every line of a KAT file");
  kat_ver->add_option("path", kat_path, "KAT file")->required();

  auto* fom = app.add_subcommand("fom", "ADP/PDP report from a platform metrics file");
  fom->add_option("path", fom_path, "metrics JSON")->required();
  fom->add_option("--format", fom_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  fom->add_option("--out", fom_out, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return cmd_params(params_level);
    if (*sample) return cmd_sample(common);
    if (*simulate) return cmd_simulate(common, sim);
    if (*kat_gen) return cmd_kat_generate(common, kat_count);
    if (*kat_ver) return cmd_kat_verify(kat_path);
    if (*fom) return cmd_fom(fom_path, fom_format, fom_out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kUsage;
}
