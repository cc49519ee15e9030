#include "kat/kat.hpp"

#include <charconv>
#include <map>
#include <optional>

#include "common/error.hpp"
#include "common/hex.hpp"
#include "sampler/sampler.hpp"

namespace rejscore::kat {

namespace {

std::string iv_hex(std::uint16_t iv) {
  const std::uint8_t b[2] = {static_cast<std::uint8_t>(iv >> 8), static_cast<std::uint8_t>(iv)};
  return to_hex(b);
}

std::string prefix(const aes::AesKey128& key, std::uint16_t iv) {
  return "key=" + to_hex(key.bytes) + " iv=" + iv_hex(iv);
}

struct Field {
  std::string_view value;
  std::size_t column;  // 1-based column of the value
};

struct ParseFailure {
  std::size_t column;
  std::string message;
};

}  // namespace

std::string keystream_line(const aes::AesKey128& key, std::uint16_t iv, std::size_t n) {
  const auto ks = aes::keystream({key, iv, n});
  return prefix(key, iv) + " n=" + std::to_string(n) + " out=" + to_hex(ks);
}

std::string vector_line(const aes::AesKey128& key, std::uint16_t iv, SecLevel level) {
  const auto v = sampler::rej_samp_prg(key, iv, builtin_params(level));
  return prefix(key, iv) + " level=" + std::to_string(static_cast<int>(level)) +
         " vec=" + to_hex(v.elems);
}

std::string generate(const std::vector<KatCase>& cases) {
  std::string out = "# AES-128-CTR keystream and rejection-sampled vectors\n";
  for (const auto& c : cases) {
    out += keystream_line(c.key, c.iv, builtin_params(c.level).tau) + '\n';
    out += vector_line(c.key, c.iv, c.level) + '\n';
  }
  return out;
}

VerifyResult verify(std::string_view text) {
  VerifyResult result;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto fail = [&](std::size_t column, std::string message) {
      result.ok = false;
      result.line = line_no;
      result.column = column;
      result.message = "line " + std::to_string(line_no) +
                       (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                       message;
      return result;
    };

    std::map<std::string, Field, std::less<>> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] == ' ') {
        ++pos;
        continue;
      }
      const auto end = std::min(line.find(' ', pos), line.size());
      const auto token = line.substr(pos, end - pos);
      const auto eq = token.find('=');
      if (eq == std::string_view::npos || eq == 0) return fail(pos + 1, "expected name=value");
      const std::string name(token.substr(0, eq));
      if (name != "key" && name != "iv" && name != "n" && name != "out" && name != "level" &&
          name != "vec")
        return fail(pos + 1, "unknown field '" + name + "'");
      if (fields.count(name)) return fail(pos + 1, "duplicate field '" + name + "'");
      fields[name] = Field{token.substr(eq + 1), pos + eq + 2};
      pos = end;
    }

    auto hex_field = [&](const char* name,
                         std::optional<std::size_t> length) -> std::optional<std::vector<std::uint8_t>> {
      const auto& f = fields.at(name);
      for (std::size_t i = 0; i < f.value.size(); ++i) {
        const char c = f.value[i];
        const bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
        if (!hex) {
          fail(f.column + i, std::string("non-hex digit in '") + name + "'");
          return std::nullopt;
        }
      }
      if (f.value.size() % 2 != 0 || (length && f.value.size() != 2 * *length)) {
        fail(f.column, std::string("wrong length for '") + name + "'");
        return std::nullopt;
      }
      return from_hex(f.value);
    };

    auto decimal_field = [&](const char* name) -> std::optional<std::size_t> {
      const auto& f = fields.at(name);
      std::size_t value = 0;
      const auto* first = f.value.data();
      const auto* last = first + f.value.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last || f.value.empty()) {
        fail(f.column + static_cast<std::size_t>(ptr - first), std::string("bad decimal in '") + name + "'");
        return std::nullopt;
      }
      return value;
    };

    if (!fields.count("key") || !fields.count("iv")) return fail(1, "missing key or iv");
    const auto key_bytes = hex_field("key", 16);
    if (!key_bytes) return result;
    const auto iv_bytes = hex_field("iv", 2);
    if (!iv_bytes) return result;
    aes::AesKey128 key;
    std::copy(key_bytes->begin(), key_bytes->end(), key.bytes.begin());
    const auto iv = static_cast<std::uint16_t>(((*iv_bytes)[0] << 8) | (*iv_bytes)[1]);

    const bool is_stream = fields.count("n") && fields.count("out");
    const bool is_vector = fields.count("level") && fields.count("vec");
    if (is_stream == is_vector || fields.size() != 4)
      return fail(1, "expected either n= and out= or level= and vec=");

    if (is_stream) {
      const auto n = decimal_field("n");
      if (!n) return result;
      if (*n == 0) return fail(fields.at("n").column, "n must be positive");
      const auto expected = hex_field("out", *n);
      if (!expected) return result;
      if (aes::keystream({key, iv, *n}) != *expected) return fail(0, "keystream mismatch");
    } else {
      const auto level_num = decimal_field("level");
      if (!level_num) return result;
      const auto level = level_from_number(static_cast<int>(*level_num));
      if (!level) return fail(fields.at("level").column, "level must be 1, 3 or 5");
      const auto p = builtin_params(*level);
      const auto expected = hex_field("vec", p.n_prime);
      if (!expected) return result;
      if (sampler::rej_samp_prg(key, iv, p).elems != *expected) return fail(0, "vector mismatch");
    }
    ++result.cases;
  }
  return result;
}

}  // namespace rejscore::kat
