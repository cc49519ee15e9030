#include "fom/fom.hpp"

#include <cmath>
#include <cstdio>

#include "common/error.hpp"

namespace rejscore::fom {

void validate(const PlatformMetrics& m) {
  if (m.kind == PlatformKind::ASIC && (!m.area_um2 || m.luts))
    raise(Errc::validation, "ASIC metrics need area_um2 and no luts");
  if (m.kind == PlatformKind::FPGA && (!m.luts || m.area_um2))
    raise(Errc::validation, "FPGA metrics need luts and no area_um2");
  if (!(m.cpd_ns > 0)) raise(Errc::validation, "cpd_ns must be positive");
  if (!(m.power_mw >= 0)) raise(Errc::validation, "power_mw must be non-negative");
  if (m.area_um2 && !(*m.area_um2 >= 0)) raise(Errc::validation, "area_um2 must be non-negative");
  if (m.luts && !(*m.luts >= 0)) raise(Errc::validation, "luts must be non-negative");
}

Adp adp(const PlatformMetrics& m) {
  validate(m);
  const double cpd_s = m.cpd_ns * 1e-9;
  if (m.kind == PlatformKind::ASIC) return SiliconAdp{*m.area_um2 * cpd_s};
  return LutAdp{*m.luts * cpd_s};
}

Pdp pdp(const PlatformMetrics& m) {
  validate(m);
  return Pdp{m.power_mw * m.cpd_ns * 1e-9};
}

Area scale_area(Area area, double from_nm, double to_nm) {
  if (!(from_nm > 0) || !(to_nm > 0)) raise(Errc::validation, "process nodes must be positive");
  const double ratio = to_nm / from_nm;
  return area * (ratio * ratio);
}

SiliconAdp lut_adp_to_silicon(LutAdp adp, double um2_per_lut, double from_nm, double to_nm) {
  if (!(um2_per_lut > 0)) raise(Errc::validation, "um2_per_lut must be positive");
  // LUT*s -> um^2*s at from_nm, then the same quadratic node scaling as area.
  const Area per_lut = scale_area(Area{um2_per_lut}, from_nm, to_nm);
  return SiliconAdp{adp.value * per_lut.value};
}

double latency(std::uint64_t cycles, double freq_hz) {
  if (!(freq_hz > 0)) raise(Errc::validation, "frequency must be positive");
  return static_cast<double>(cycles) / freq_hz;
}

double round_sig(double x, int digits) {
  if (x == 0 || !std::isfinite(x)) return x;
  const double exponent = std::floor(std::log10(std::fabs(x)));
  const double scale = std::pow(10.0, digits - 1 - exponent);
  return std::round(x * scale) / scale;
}

std::string format_sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return buf;
}

}  // namespace rejscore::fom
