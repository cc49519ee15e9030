/*
 * rejscore: functional and cycle-level model of a rejection-sampling
 * coprocessor for QR-UOV (AES-128-CTR keystream + masked rejection sampling
 * over F_q), plus figure-of-merit arithmetic.
 *
 * Conventions
 *   - Every fallible call returns rejscore_status; REJSCORE_OK is 0.
 *   - On failure, rejscore_last_error() returns a message for the most recent
 *     failing call on the calling thread.
 *   - Calls that produce variable-size output take (buf, cap, len): *len is
 *     always set to the full size (excluding the terminating NUL for text).
 *     If buf is NULL or cap is too small, nothing is written and
 *     REJSCORE_E_BUFFER_TOO_SMALL is returned. Text output is NUL terminated,
 *     so cap must be at least *len + 1.
 *   - Packed words hold 8 bytes each, byte 0 in the most significant byte.
 */
#ifndef REJSCORE_REJSCORE_H
#define REJSCORE_REJSCORE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(REJSCORE_BUILDING_DLL)
#    define REJSCORE_API __declspec(dllexport)
#  else
#    define REJSCORE_API __declspec(dllimport)
#  endif
#else
#  define REJSCORE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rejscore_status {
  REJSCORE_OK = 0,
  REJSCORE_E_INVALID_ARGUMENT = 1,
  REJSCORE_E_UNSUPPORTED_MODULUS = 2,
  REJSCORE_E_INSUFFICIENT_INPUT = 3,
  REJSCORE_E_EMPTY_REQUEST = 4,
  REJSCORE_E_INVALID_INSTRUCTION = 5,
  REJSCORE_E_PROGRAM = 6,
  REJSCORE_E_UNSUPPORTED_LEVEL = 7,
  REJSCORE_E_CAPACITY = 8,
  REJSCORE_E_OUT_OF_RANGE = 9,
  REJSCORE_E_SIMULATION_FAULT = 10,
  REJSCORE_E_PRECONDITION = 11,
  REJSCORE_E_VALIDATION = 12,
  REJSCORE_E_PARSE = 13,
  REJSCORE_E_BUFFER_TOO_SMALL = 14,
  REJSCORE_E_MISMATCH = 15,
  REJSCORE_E_INTERNAL = 16
} rejscore_status;

REJSCORE_API const char* rejscore_version(void);
REJSCORE_API const char* rejscore_status_string(rejscore_status status);
REJSCORE_API const char* rejscore_last_error(void);

/* ---- parameter sets ---------------------------------------------------- */

/* level is 1, 3 or 5. */
typedef struct rejscore_params {
  int level;
  uint32_t q;
  uint32_t l;
  uint32_t V;
  uint32_t M;
  uint32_t v;        /* l * V */
  uint32_t m;        /* l * M */
  uint32_t tau;      /* keystream bytes */
  uint32_t n_prime;  /* l * V * M output elements */
  uint32_t lambda;
} rejscore_params;

REJSCORE_API rejscore_status rejscore_builtin_params(int level, rejscore_params* out);
REJSCORE_API rejscore_status rejscore_address_counts(const rejscore_params* params,
                                                     uint32_t* tau_addrs, uint32_t* out_addrs);
REJSCORE_API rejscore_status rejscore_params_json(const rejscore_params* params, char* buf,
                                                  size_t cap, size_t* len);

/* ---- AES-128 and CTR keystream ---------------------------------------- */

REJSCORE_API rejscore_status rejscore_aes128_encrypt_block(const uint8_t key[16],
                                                           const uint8_t in[16],
                                                           uint8_t out[16]);

/* Counter block: nonce(8) || iv(2, big-endian) || block index(6, big-endian).
 * nonce may be NULL for the all-zero default. */
REJSCORE_API rejscore_status rejscore_keystream(const uint8_t key[16], uint16_t iv,
                                                const uint8_t nonce[8], uint8_t* out,
                                                size_t n_bytes);

/* ---- sampling ---------------------------------------------------------- */

REJSCORE_API rejscore_status rejscore_mask_bytes(const uint8_t* raw, size_t n, uint32_t q,
                                                 uint8_t* out);

/* raw has tau bytes, out receives n_prime elements. */
REJSCORE_API rejscore_status rejscore_rej_samp(const uint8_t* raw, uint32_t tau,
                                               uint32_t n_prime, uint32_t q, uint8_t* out);

/* out receives params->n_prime elements; cap is the size of out. */
REJSCORE_API rejscore_status rejscore_rej_samp_prg(const uint8_t key[16], uint16_t iv,
                                                   const rejscore_params* params, uint8_t* out,
                                                   size_t cap);

typedef struct rejscore_sample_stats {
  uint64_t rejected_in_prefix;
  uint64_t replaced;
  uint64_t zero_filled;
  uint64_t tail_consumed;
} rejscore_sample_stats;

REJSCORE_API rejscore_status rejscore_sample_stats_prg(const uint8_t key[16], uint16_t iv,
                                                       const rejscore_params* params,
                                                       rejscore_sample_stats* out);

enum { REJSCORE_FORMAT_BIN = 0, REJSCORE_FORMAT_CSV = 1, REJSCORE_FORMAT_JSON = 2 };

/* Vector artifact: BIN is the packed words written MSB first (zero padded to a
 * multiple of 8 bytes); CSV is "index,value" rows. */
REJSCORE_API rejscore_status rejscore_vector_export(const uint8_t* elems, size_t n, int format,
                                                    uint8_t* buf, size_t cap, size_t* len);

/* ---- instruction set --------------------------------------------------- */

enum {
  REJSCORE_OP_NOP = 0,
  REJSCORE_OP_LOAD_SEED = 1,
  REJSCORE_OP_RUN_PRG = 2,
  REJSCORE_OP_RUN_REJSAMP = 3,
  REJSCORE_OP_RUN_FULL = 4,
  REJSCORE_OP_READ_RESULT = 5
};

typedef struct rejscore_instruction {
  uint8_t sec_level; /* 2-bit field: 0 SL1, 1 SL3, 2 SL5 */
  uint16_t raddr;    /* 10 bits */
  uint16_t waddr;    /* 10 bits */
  uint8_t wen;       /* 0 or 1 */
  uint8_t op;        /* REJSCORE_OP_* */
} rejscore_instruction;

REJSCORE_API rejscore_status rejscore_encode_instruction(const rejscore_instruction* ins,
                                                         uint32_t* word);
REJSCORE_API rejscore_status rejscore_decode_instruction(uint32_t word, rejscore_instruction* out);

/* Program text: one 7-hex-digit word per line, '#' comments. */
REJSCORE_API rejscore_status rejscore_parse_program(const char* text, uint32_t* words, size_t cap,
                                                    size_t* count);
REJSCORE_API rejscore_status rejscore_format_program(const uint32_t* words, size_t count, char* buf,
                                                     size_t cap, size_t* len);

/* ---- simulator --------------------------------------------------------- */

typedef struct rejscore_timing {
  uint32_t aes_latency;
  uint32_t writeback_cycles;
  uint32_t per_block_overhead;
  uint32_t wrapper_setup_cycles;
  uint32_t rejsamp_setup_cycles;
} rejscore_timing;

typedef struct rejscore_sim_config {
  rejscore_timing timing;
  uint32_t mem_depth;
  double freq_hz;
  uint8_t nonce[8];
  int trace; /* nonzero records a cycle trace */
} rejscore_sim_config;

typedef struct rejscore_cycle_report {
  uint64_t total_cycles;
  uint64_t wrapper_cycles;
  uint64_t rejsamp_cycles;
  double freq_hz;
  double latency_seconds;
} rejscore_cycle_report;

typedef struct rejscore_sim rejscore_sim;

/* Calibrated defaults: 1024-word memory, 222 MHz, zero nonce, no trace. */
REJSCORE_API void rejscore_sim_config_default(rejscore_sim_config* cfg);

/* Memory words a level needs (the keystream region). */
REJSCORE_API rejscore_status rejscore_required_depth(int level, uint32_t* depth);

/* LOAD_SEED / RUN_FULL / READ_RESULT with the default memory layout. */
REJSCORE_API rejscore_status rejscore_default_program(int level, uint32_t mem_depth,
                                                      uint32_t* words, size_t cap, size_t* count);

REJSCORE_API rejscore_status rejscore_sim_create(const rejscore_sim_config* cfg,
                                                 rejscore_sim** out);
REJSCORE_API void rejscore_sim_destroy(rejscore_sim* sim);

/* report may be NULL. Results of the last successful run stay available
 * until the next run. */
REJSCORE_API rejscore_status rejscore_sim_run(rejscore_sim* sim, const uint32_t* program,
                                              size_t count, const uint8_t key[16], uint16_t iv,
                                              rejscore_cycle_report* report);
REJSCORE_API rejscore_status rejscore_sim_result(const rejscore_sim* sim, uint8_t* out, size_t cap,
                                                 size_t* len);
REJSCORE_API rejscore_status rejscore_sim_report_json(const rejscore_sim* sim, char* buf,
                                                      size_t cap, size_t* len);
REJSCORE_API rejscore_status rejscore_sim_trace_csv(const rejscore_sim* sim, char* buf, size_t cap,
                                                    size_t* len);

/* ---- figures of merit -------------------------------------------------- */

enum { REJSCORE_PLATFORM_ASIC = 0, REJSCORE_PLATFORM_FPGA = 1 };
enum { REJSCORE_UNIT_UM2_S = 0, REJSCORE_UNIT_LUT_S = 1 };

/* Set exactly one of area_um2 (ASIC) / luts (FPGA); use NAN for absent. */
typedef struct rejscore_platform_metrics {
  int kind;
  double area_um2;
  double luts;
  double cpd_ns;
  double power_mw;
  double tech_nm;
} rejscore_platform_metrics;

REJSCORE_API rejscore_status rejscore_fom_adp(const rejscore_platform_metrics* m, double* value,
                                              int* unit);
REJSCORE_API rejscore_status rejscore_fom_pdp(const rejscore_platform_metrics* m, double* value);
REJSCORE_API rejscore_status rejscore_fom_scale_area(double area, double from_nm, double to_nm,
                                                     double* out);
REJSCORE_API rejscore_status rejscore_fom_latency(uint64_t cycles, double freq_hz,
                                                  double* seconds);

/* Metrics document in, JSON or CSV report out; *warnings receives the number
 * of unit or published-value discrepancies (may be NULL). */
REJSCORE_API rejscore_status rejscore_fom_report(const char* metrics_json, int format, char* buf,
                                                 size_t cap, size_t* len, size_t* warnings);
/* Newline-separated warning messages of the same report. */
REJSCORE_API rejscore_status rejscore_fom_warnings(const char* metrics_json, char* buf, size_t cap,
                                                   size_t* len);

/* ---- known-answer files ------------------------------------------------ */

/* count cases with key `key` and iv, iv+1, ...: a tau-byte keystream line and
 * a vector line each. */
REJSCORE_API rejscore_status rejscore_kat_generate(const uint8_t key[16], uint16_t iv, int level,
                                                   size_t count, char* buf, size_t cap,
                                                   size_t* len);

/* REJSCORE_OK if every line matches; REJSCORE_E_PARSE or REJSCORE_E_MISMATCH
 * otherwise, with the 1-based line (and column for parse errors, else 0). */
REJSCORE_API rejscore_status rejscore_kat_verify(const char* text, size_t* line, size_t* column,
                                                 size_t* cases);

#ifdef __cplusplus
}
#endif

#endif /* REJSCORE_REJSCORE_H */
