#include "aesprg/aes128.hpp"

namespace rejscore::aes {

namespace {

constexpr std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1B : 0x00));
}

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return r;
}

// Multiplicative inverse in GF(2^8) as a^254; maps 0 to 0.
constexpr std::uint8_t gf_inv(std::uint8_t a) {
  std::uint8_t result = 1;
  std::uint8_t base = a;
  for (unsigned e = 254; e != 0; e >>= 1) {
    if (e & 1) result = gf_mul(result, base);
    base = gf_mul(base, base);
  }
  return a == 0 ? 0 : result;
}

constexpr std::uint8_t rotl8(std::uint8_t x, unsigned s) {
  return static_cast<std::uint8_t>((x << s) | (x >> (8 - s)));
}

constexpr std::uint8_t affine(std::uint8_t b) {
  return static_cast<std::uint8_t>(b ^ rotl8(b, 1) ^ rotl8(b, 2) ^ rotl8(b, 3) ^ rotl8(b, 4) ^
                                   0x63);
}

constexpr std::array<std::uint8_t, 256> make_sbox() {
  std::array<std::uint8_t, 256> box{};
  for (unsigned i = 0; i < 256; ++i) box[i] = affine(gf_inv(static_cast<std::uint8_t>(i)));
  return box;
}

// Derived at compile time from the field inverse and affine map.
constexpr auto kSbox = make_sbox();
static_assert(kSbox[0x00] == 0x63 && kSbox[0x53] == 0xED);

}  // namespace

std::uint8_t sub_byte(std::uint8_t x) { return kSbox[x]; }

void sub_bytes(Block& state) {
  for (auto& b : state) b = kSbox[b];
}

void shift_rows(Block& state) {
  Block out;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) out[r + 4 * c] = state[r + 4 * ((c + r) % 4)];
  state = out;
}

void mix_columns(Block& state) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &state[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = static_cast<std::uint8_t>(xtime(a0) ^ (xtime(a1) ^ a1) ^ a2 ^ a3);
    col[1] = static_cast<std::uint8_t>(a0 ^ xtime(a1) ^ (xtime(a2) ^ a2) ^ a3);
    col[2] = static_cast<std::uint8_t>(a0 ^ a1 ^ xtime(a2) ^ (xtime(a3) ^ a3));
    col[3] = static_cast<std::uint8_t>((xtime(a0) ^ a0) ^ a1 ^ a2 ^ xtime(a3));
  }
}

void add_round_key(Block& state, const Block& round_key) {
  for (std::size_t i = 0; i < state.size(); ++i) state[i] ^= round_key[i];
}

RoundKeys expand_key(const AesKey128& key) {
  RoundKeys keys{};
  keys[0] = key.bytes;
  std::uint8_t rcon = 0x01;
  for (int round = 1; round <= kRounds; ++round) {
    const Block& prev = keys[round - 1];
    Block& next = keys[round];
    // RotWord + SubWord + Rcon on the last word of the previous key.
    std::array<std::uint8_t, 4> t = {sub_byte(prev[13]), sub_byte(prev[14]), sub_byte(prev[15]),
                                     sub_byte(prev[12])};
    t[0] ^= rcon;
    rcon = xtime(rcon);
    for (int w = 0; w < 4; ++w) {
      for (int i = 0; i < 4; ++i) {
        const std::uint8_t feed = (w == 0) ? t[i] : next[4 * (w - 1) + i];
        next[4 * w + i] = static_cast<std::uint8_t>(prev[4 * w + i] ^ feed);
      }
    }
  }
  return keys;
}

Block encrypt_block(const RoundKeys& keys, const Block& plaintext) {
  Block state = plaintext;
  add_round_key(state, keys[0]);
  for (int round = 1; round < kRounds; ++round) {
    sub_bytes(state);
    shift_rows(state);
    mix_columns(state);
    add_round_key(state, keys[round]);
  }
  sub_bytes(state);
  shift_rows(state);
  add_round_key(state, keys[kRounds]);
  return state;
}

Block encrypt_block(const AesKey128& key, const Block& plaintext) {
  return encrypt_block(expand_key(key), plaintext);
}

}  // namespace rejscore::aes
