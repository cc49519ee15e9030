#include "aesprg/keystream.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace rejscore::aes {

Block make_ctr_block(const CtrConfig& cfg, std::uint16_t iv, std::uint64_t block_index) {
  if (block_index > kMaxBlockIndex) raise(Errc::out_of_range, "CTR block index exceeds 48 bits");
  Block block{};
  std::copy(cfg.nonce.begin(), cfg.nonce.end(), block.begin());
  block[8] = static_cast<std::uint8_t>(iv >> 8);
  block[9] = static_cast<std::uint8_t>(iv);
  for (int i = 0; i < 6; ++i) block[15 - i] = static_cast<std::uint8_t>(block_index >> (8 * i));
  return block;
}

std::vector<std::uint8_t> keystream(const KeystreamRequest& req, const CtrConfig& cfg) {
  if (req.n_bytes == 0) raise(Errc::empty_request, "keystream request for zero bytes");
  const auto keys = expand_key(req.key);
  std::vector<std::uint8_t> out;
  out.reserve(req.n_bytes);
  for (std::uint64_t index = 0; out.size() < req.n_bytes; ++index) {
    const Block ks = encrypt_block(keys, make_ctr_block(cfg, req.iv, index));
    const std::size_t take = std::min<std::size_t>(16, req.n_bytes - out.size());
    out.insert(out.end(), ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return out;
}

}  // namespace rejscore::aes
