#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace rejscore {

enum class SecLevel : std::uint8_t { SL1 = 1, SL3 = 3, SL5 = 5 };

std::string_view to_string(SecLevel level);

// QR-UOV parameter set for one security level. Derived fields (v, m, n_prime)
// are stored rather than recomputed so a set read back from JSON can be
// checked against its own invariants.
struct ParameterSet {
  SecLevel sec_level = SecLevel::SL1;
  std::uint32_t q = 127;
  std::uint32_t l = 0;
  std::uint32_t V = 0;
  std::uint32_t M = 0;
  std::uint32_t v = 0;
  std::uint32_t m = 0;
  std::uint32_t tau = 0;
  std::uint32_t n_prime = 0;
  std::uint32_t lambda = 128;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

struct AddressCounts {
  std::uint32_t tau_addrs = 0;
  std::uint32_t out_addrs = 0;

  friend bool operator==(const AddressCounts&, const AddressCounts&) = default;
};

inline constexpr std::uint32_t kBytesPerWord = 8;

ParameterSet builtin_params(SecLevel level);

// Builds a parameter set from the structural symbols, filling in the derived
// sizes. Throws Error(validation) if the result violates an invariant.
ParameterSet make_params(SecLevel level, std::uint32_t q, std::uint32_t l, std::uint32_t V,
                         std::uint32_t M, std::uint32_t tau, std::uint32_t lambda);

// Throws Error(validation) naming the first violated invariant.
void validate(const ParameterSet& p);

AddressCounts address_counts(const ParameterSet& p);

// Memory words needed to hold the keystream region; the smallest depth the
// coprocessor can run this level with.
inline std::uint32_t required_memory_depth(const ParameterSet& p) {
  return address_counts(p).tau_addrs;
}

// q == 2^k - 1 and q prime.
bool is_mersenne_prime(std::uint32_t q);

// k such that q == 2^k - 1. Precondition: is_mersenne_prime(q).
unsigned mask_bits(std::uint32_t q);

std::optional<SecLevel> level_from_number(int n);

void to_json(nlohmann::json& j, const ParameterSet& p);
void from_json(const nlohmann::json& j, ParameterSet& p);

}  // namespace rejscore
