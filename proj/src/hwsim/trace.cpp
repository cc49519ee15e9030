#include "hwsim/trace.hpp"

#include <cinttypes>
#include <cstdio>

namespace rejscore::hwsim {

const char* to_string(Unit unit) {
  switch (unit) {
    case Unit::host: return "host";
    case Unit::wrapper: return "wrapper";
    case Unit::rejsamp: return "rejsamp";
  }
  return "?";
}

std::string Trace::to_csv() const {
  std::string out = "cycle,unit,event,addr,data\n";
  char buf[32];
  for (const auto& e : events_) {
    out += std::to_string(e.cycle);
    out += ',';
    out += to_string(e.unit);
    out += ',';
    out += e.event;
    out += ',';
    if (e.addr) out += std::to_string(*e.addr);
    out += ',';
    if (e.data) {
      std::snprintf(buf, sizeof buf, "%016" PRIx64, *e.data);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace rejscore::hwsim
