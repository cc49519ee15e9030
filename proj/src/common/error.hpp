#pragma once

#include <stdexcept>
#include <string>

namespace rejscore {

// Error categories surfaced through the C API as status codes. Values are
// part of the stable ABI: append only.
enum class Errc : int {
  invalid_argument = 1,
  unsupported_modulus = 2,
  insufficient_input = 3,
  empty_request = 4,
  invalid_instruction = 5,
  program_error = 6,
  unsupported_level = 7,
  capacity = 8,
  out_of_range = 9,
  simulation_fault = 10,
  precondition = 11,
  validation = 12,
  parse = 13,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace rejscore
