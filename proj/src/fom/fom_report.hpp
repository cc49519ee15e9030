#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fom/fom.hpp"

namespace rejscore::fom {

struct FomRow {
  std::string platform;
  PlatformKind kind = PlatformKind::ASIC;
  double cpd_ns = 0.0;
  double adp = 0.0;
  std::string adp_unit;
  double pdp_mw_s = 0.0;
};

struct FomReport {
  std::vector<FomRow> rows;
  std::vector<std::string> warnings;
};

// Input document:
//
//   {"platforms": [{
//      "name": "...", "kind": "ASIC" | "FPGA",
//      "area_um2": <ASIC> | "luts": <FPGA>,
//      "cpd_ns": ..., "tech_nm": ...,
//      power as one of "power_mw", "power_w", or
//        "static_power_mw" + "dynamic_power_mw",
//      optional "scale_to_nm" and "um2_per_lut" (FPGA, default 1.0),
//      optional "published": {"adp", "pdp_mw_s", "scaled_adp"}}]}
//
// Each platform gives one row, plus a "(Tech-scaled)" row when scale_to_nm is
// present. Published values that disagree at 3 significant figures produce a
// warning; a disagreement by a factor of 1000 is reported as a W/mW unit
// discrepancy. Throws Error(parse) or Error(validation) on schema violations.
FomReport build_report(std::string_view json_text);

std::string to_json(const FomReport& report);
std::string to_csv(const FomReport& report);

}  // namespace rejscore::fom
