#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aesprg/keystream.hpp"
#include "params/params.hpp"

namespace rejscore::sampler {

// Sampled vector over F_q. Every element is < modulus.
struct FieldVector {
  std::vector<std::uint8_t> elems;
  std::uint32_t modulus = 127;

  friend bool operator==(const FieldVector&, const FieldVector&) = default;
};

// v_j = r_j AND q for every byte. Throws Error(unsupported_modulus) unless q
// is a Mersenne prime that fits in a byte.
std::vector<std::uint8_t> mask_bytes(std::span<const std::uint8_t> raw, std::uint32_t q);

// Rejection sampling with tail replacement over the first n_prime masked
// bytes. Throws Error(insufficient_input) if raw.size() != tau or
// tau < n_prime.
FieldVector rej_samp(std::span<const std::uint8_t> raw, std::uint32_t tau, std::uint32_t n_prime,
                     std::uint32_t q);

// keystream(seed, iv, tau) followed by rej_samp.
FieldVector rej_samp_prg(const aes::AesKey128& seed, std::uint16_t iv, const ParameterSet& p,
                         const aes::CtrConfig& ctr = {});

struct SampleStats {
  std::size_t rejected_in_prefix = 0;  // positions j < n' whose masked value was q
  std::size_t replaced = 0;            // of those, filled from the tail
  std::size_t zero_filled = 0;         // of those, filled with 0 after tail exhaustion
  std::size_t tail_consumed = 0;       // tail positions the pointer moved past
};

SampleStats sample_stats(std::span<const std::uint8_t> raw, std::uint32_t n_prime,
                         std::uint32_t q);

}  // namespace rejscore::sampler
