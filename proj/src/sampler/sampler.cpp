#include "sampler/sampler.hpp"

#include <string>

#include "common/error.hpp"

namespace rejscore::sampler {

namespace {

void require_supported_modulus(std::uint32_t q) {
  if (q > 255 || !is_mersenne_prime(q))
    raise(Errc::unsupported_modulus,
          "modulus " + std::to_string(q) + " is not a Mersenne prime below 256");
}

}  // namespace

std::vector<std::uint8_t> mask_bytes(std::span<const std::uint8_t> raw, std::uint32_t q) {
  require_supported_modulus(q);
  const auto mask = static_cast<std::uint8_t>(q);
  std::vector<std::uint8_t> out(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) out[j] = raw[j] & mask;
  return out;
}

FieldVector rej_samp(std::span<const std::uint8_t> raw, std::uint32_t tau, std::uint32_t n_prime,
                     std::uint32_t q) {
  if (raw.size() != tau)
    raise(Errc::insufficient_input, "byte string length " + std::to_string(raw.size()) +
                                        " does not match tau " + std::to_string(tau));
  if (tau < n_prime)
    raise(Errc::insufficient_input, "tau " + std::to_string(tau) + " is shorter than n' " +
                                        std::to_string(n_prime));

  std::vector<std::uint8_t> v = mask_bytes(raw, q);
  const auto rejected = static_cast<std::uint8_t>(q);

  // 0-based storage: index i holds the 1-based position i+1. The pointer k
  // starts at the first tail slot (1-based n'+1, 0-based n'); k == tau means
  // the tail is exhausted (1-based k == tau+1).
  std::size_t k = n_prime;
  auto skip_rejected = [&] {
    while (k < tau && v[k] == rejected) ++k;
  };
  skip_rejected();

  for (std::size_t j = 0; j < n_prime; ++j) {
    if (v[j] != rejected) continue;
    if (k < tau) {
      v[j] = v[k];
      ++k;
      skip_rejected();
    } else {
      v[j] = 0;
    }
  }

  v.resize(n_prime);
  return FieldVector{std::move(v), q};
}

FieldVector rej_samp_prg(const aes::AesKey128& seed, std::uint16_t iv, const ParameterSet& p,
                         const aes::CtrConfig& ctr) {
  const auto raw = aes::keystream({seed, iv, p.tau}, ctr);
  return rej_samp(raw, p.tau, p.n_prime, p.q);
}

SampleStats sample_stats(std::span<const std::uint8_t> raw, std::uint32_t n_prime,
                         std::uint32_t q) {
  require_supported_modulus(q);
  SampleStats stats;
  const auto mask = static_cast<std::uint8_t>(q);
  std::size_t k = n_prime;
  auto is_rejected = [&](std::size_t i) { return (raw[i] & mask) == mask; };
  auto skip = [&] {
    while (k < raw.size() && is_rejected(k)) ++k;
  };
  skip();
  for (std::size_t j = 0; j < n_prime && j < raw.size(); ++j) {
    if (!is_rejected(j)) continue;
    ++stats.rejected_in_prefix;
    if (k < raw.size()) {
      ++stats.replaced;
      ++k;
      skip();
    } else {
      ++stats.zero_filled;
    }
  }
  stats.tail_consumed = k - std::min<std::size_t>(n_prime, k);
  return stats;
}

}  // namespace rejscore::sampler
