#include <doctest.h>

#include <random>

#include "aesprg/keystream.hpp"
#include "common/error.hpp"
#include "oracle/openssl_ctr.hpp"

using namespace rejscore;

namespace {

aes::AesKey128 random_key(std::mt19937_64& rng) {
  aes::AesKey128 k;
  for (auto& b : k.bytes) b = static_cast<std::uint8_t>(rng());
  return k;
}

}  // namespace

TEST_CASE("counter block layout") {
  aes::CtrConfig cfg;
  cfg.nonce = {1, 2, 3, 4, 5, 6, 7, 8};
  const auto b = aes::make_ctr_block(cfg, 0xABCD, 0x010203040506);
  const aes::Block expect = {1, 2, 3, 4, 5, 6, 7, 8, 0xAB, 0xCD, 1, 2, 3, 4, 5, 6};
  CHECK(b == expect);
}

TEST_CASE("single block equals one encryption") {
  std::mt19937_64 rng(1);
  const auto key = random_key(rng);
  const auto ks = aes::keystream({key, 0x1234, 16});
  const auto ct = aes::encrypt_block(key, aes::make_ctr_block({}, 0x1234, 0));
  CHECK(std::equal(ks.begin(), ks.end(), ct.begin()));
}

TEST_CASE("SL1 length uses 183 blocks") {
  CHECK(aes::blocks_for(2916) == 183);
  std::mt19937_64 rng(2);
  const auto ks = aes::keystream({random_key(rng), 0, 2916});
  CHECK(ks.size() == 2916);
}

TEST_CASE("empty request") {
  try {
    aes::keystream({aes::AesKey128{}, 0, 0});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_request);
  }
}

TEST_CASE("matches OpenSSL AES-128-CTR") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto key = random_key(rng);
    const auto iv = static_cast<std::uint16_t>(rng());
    aes::CtrConfig cfg;
    if (i % 2)
      for (auto& b : cfg.nonce) b = static_cast<std::uint8_t>(rng());
    const std::size_t n = 1 + rng() % 3000;
    const auto ours = aes::keystream({key, iv, n}, cfg);
    const auto ref = oracle::openssl_ctr_keystream(key.bytes, cfg.nonce, iv, n);
    CHECK(ours == ref);
  }
}
