#include "sampler/field_vector_io.hpp"

#include "common/error.hpp"

namespace rejscore {

std::vector<std::uint64_t> pack_words(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint64_t> words((bytes.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i)
    words[i / 8] |= std::uint64_t{bytes[i]} << (8 * (7 - i % 8));
  return words;
}

std::vector<std::uint8_t> unpack_words(std::span<const std::uint64_t> words, std::size_t n_bytes) {
  if (n_bytes > words.size() * 8) raise(Errc::out_of_range, "unpack past end of word buffer");
  std::vector<std::uint8_t> bytes(n_bytes);
  for (std::size_t i = 0; i < n_bytes; ++i)
    bytes[i] = static_cast<std::uint8_t>(words[i / 8] >> (8 * (7 - i % 8)));
  return bytes;
}

std::vector<std::uint8_t> to_packed_binary(std::span<const std::uint8_t> elems) {
  std::vector<std::uint8_t> out(elems.begin(), elems.end());
  out.resize((elems.size() + 7) / 8 * 8, 0);
  return out;
}

std::string to_csv(std::span<const std::uint8_t> elems) {
  std::string out = "index,value\n";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(elems[i]);
    out += '\n';
  }
  return out;
}

}  // namespace rejscore
