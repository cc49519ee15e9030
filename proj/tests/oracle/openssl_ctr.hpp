#pragma once

// Test-only oracle: AES-128-CTR from OpenSSL. Its 128-bit big-endian counter
// matches the nonce || iv || 48-bit index layout as long as the index does
// not wrap.

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

inline std::vector<std::uint8_t> openssl_ctr_keystream(const std::array<std::uint8_t, 16>& key,
                                                       const std::array<std::uint8_t, 8>& nonce,
                                                       std::uint16_t iv, std::size_t n) {
  std::array<std::uint8_t, 16> counter{};
  for (int i = 0; i < 8; ++i) counter[i] = nonce[i];
  counter[8] = static_cast<std::uint8_t>(iv >> 8);
  counter[9] = static_cast<std::uint8_t>(iv);
  std::vector<std::uint8_t> zeros(n, 0), out(n + 16, 0);
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  if (!ctx) throw std::runtime_error("EVP_CIPHER_CTX_new");
  int len = 0, total = 0;
  bool ok = EVP_EncryptInit_ex(ctx, EVP_aes_128_ctr(), nullptr, key.data(), counter.data()) == 1 &&
            EVP_EncryptUpdate(ctx, out.data(), &len, zeros.data(), static_cast<int>(n)) == 1;
  total = len;
  ok = ok && EVP_EncryptFinal_ex(ctx, out.data() + total, &len) == 1;
  EVP_CIPHER_CTX_free(ctx);
  if (!ok) throw std::runtime_error("OpenSSL AES-128-CTR failed");
  out.resize(n);
  return out;
}

}  // namespace oracle
