#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "aesprg/aes128.hpp"

namespace rejscore::aes {

using Nonce = std::array<std::uint8_t, 8>;

// Counter-mode input block: nonce (8 bytes) || iv (2 bytes, big-endian) ||
// block index (6 bytes, big-endian). The all-zero nonce is a convention,
// not something the scheme fixes; override it here if a reference
// implementation lays the block out differently.
struct CtrConfig {
  Nonce nonce{};
};

inline constexpr std::uint64_t kMaxBlockIndex = (std::uint64_t{1} << 48) - 1;

struct KeystreamRequest {
  AesKey128 key;
  std::uint16_t iv = 0;
  std::size_t n_bytes = 0;
};

Block make_ctr_block(const CtrConfig& cfg, std::uint16_t iv, std::uint64_t block_index);

inline std::size_t blocks_for(std::size_t n_bytes) { return (n_bytes + 15) / 16; }

// Exactly req.n_bytes bytes of AES-128-CTR output; the tail of the final
// block is discarded. Throws Error(empty_request) for n_bytes == 0.
std::vector<std::uint8_t> keystream(const KeystreamRequest& req, const CtrConfig& cfg = {});

}  // namespace rejscore::aes
