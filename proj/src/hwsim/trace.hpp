#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rejscore::hwsim {

enum class Unit : std::uint8_t { host, wrapper, rejsamp };

const char* to_string(Unit unit);

struct TraceEvent {
  std::uint64_t cycle = 0;
  Unit unit = Unit::host;
  std::string event;
  std::optional<std::uint32_t> addr;
  std::optional<std::uint64_t> data;
};

// Collects events only while enabled, so untraced runs pay nothing.
class Trace {
 public:
  void enable(bool on) { enabled_ = on; }
  bool enabled() const { return enabled_; }

  void record(std::uint64_t cycle, Unit unit, std::string event,
              std::optional<std::uint32_t> addr = std::nullopt,
              std::optional<std::uint64_t> data = std::nullopt) {
    if (enabled_) events_.push_back({cycle, unit, std::move(event), addr, data});
  }

  const std::vector<TraceEvent>& events() const { return events_; }
  void clear() { events_.clear(); }

  // cycle,unit,event,addr,data (data as 16 hex digits; empty when absent)
  std::string to_csv() const;

 private:
  bool enabled_ = false;
  std::vector<TraceEvent> events_;
};

}  // namespace rejscore::hwsim
