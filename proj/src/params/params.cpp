#include "params/params.hpp"

#include <bit>

#include "common/error.hpp"

namespace rejscore {

std::string_view to_string(SecLevel level) {
  switch (level) {
    case SecLevel::SL1: return "SL1";
    case SecLevel::SL3: return "SL3";
    case SecLevel::SL5: return "SL5";
  }
  return "?";
}

std::optional<SecLevel> level_from_number(int n) {
  switch (n) {
    case 1: return SecLevel::SL1;
    case 3: return SecLevel::SL3;
    case 5: return SecLevel::SL5;
    default: return std::nullopt;
  }
}

bool is_mersenne_prime(std::uint32_t q) {
  if (q < 3 || ((static_cast<std::uint64_t>(q) + 1) & q) != 0) return false;
  for (std::uint32_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

unsigned mask_bits(std::uint32_t q) { return static_cast<unsigned>(std::countr_one(q)); }

ParameterSet make_params(SecLevel level, std::uint32_t q, std::uint32_t l, std::uint32_t V,
                         std::uint32_t M, std::uint32_t tau, std::uint32_t lambda) {
  ParameterSet p;
  p.sec_level = level;
  p.q = q;
  p.l = l;
  p.V = V;
  p.M = M;
  p.v = l * V;
  p.m = l * M;
  p.tau = tau;
  p.n_prime = l * V * M;
  p.lambda = lambda;
  validate(p);
  return p;
}

ParameterSet builtin_params(SecLevel level) {
  // q = 127 at every level; only SL1 states it outright, see README.
  switch (level) {
    case SecLevel::SL1: return make_params(level, 127, 3, 52, 18, 2916, 128);
    case SecLevel::SL3: return make_params(level, 127, 3, 76, 26, 6123, 192);
    case SecLevel::SL5: return make_params(level, 127, 3, 102, 35, 11018, 256);
  }
  raise(Errc::invalid_argument, "unknown security level");
}

void validate(const ParameterSet& p) {
  if (p.l == 0 || p.V == 0 || p.M == 0) raise(Errc::validation, "l, V and M must be positive");
  if (p.v != p.l * p.V) raise(Errc::validation, "v must equal l*V");
  if (p.m != p.l * p.M) raise(Errc::validation, "m must equal l*M");
  if (p.n_prime != p.l * p.V * p.M) raise(Errc::validation, "n_prime must equal l*V*M");
  if (!is_mersenne_prime(p.q) || p.q > 255)
    raise(Errc::validation, "q must be a Mersenne prime below 256");
  if (p.tau < p.n_prime) raise(Errc::validation, "tau must be at least n_prime");
}

AddressCounts address_counts(const ParameterSet& p) {
  return {(p.tau + kBytesPerWord - 1) / kBytesPerWord,
          (p.n_prime + kBytesPerWord - 1) / kBytesPerWord};
}

void to_json(nlohmann::json& j, const ParameterSet& p) {
  j = nlohmann::json{{"sec_level", std::string(to_string(p.sec_level))},
                     {"q", p.q},
                     {"l", p.l},
                     {"V", p.V},
                     {"M", p.M},
                     {"v", p.v},
                     {"m", p.m},
                     {"tau", p.tau},
                     {"n_prime", p.n_prime},
                     {"lambda", p.lambda}};
}

void from_json(const nlohmann::json& j, ParameterSet& p) {
  auto level = j.at("sec_level").get<std::string>();
  if (level == "SL1") p.sec_level = SecLevel::SL1;
  else if (level == "SL3") p.sec_level = SecLevel::SL3;
  else if (level == "SL5") p.sec_level = SecLevel::SL5;
  else raise(Errc::parse, "unknown sec_level '" + level + "'");
  j.at("q").get_to(p.q);
  j.at("l").get_to(p.l);
  j.at("V").get_to(p.V);
  j.at("M").get_to(p.M);
  j.at("v").get_to(p.v);
  j.at("m").get_to(p.m);
  j.at("tau").get_to(p.tau);
  j.at("n_prime").get_to(p.n_prime);
  j.at("lambda").get_to(p.lambda);
  validate(p);
}

}  // namespace rejscore
