#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace rejscore::fom {

// Quantities carry their unit in the type; there is no implicit conversion
// between LUT-based and silicon-area-based products.
template <class Unit>
struct Quantity {
  using unit_type = Unit;
  double value = 0.0;

  friend Quantity operator*(Quantity q, double k) { return {q.value * k}; }
  friend auto operator<=>(const Quantity&, const Quantity&) = default;
};

struct Um2Seconds { static constexpr const char* symbol = "um^2*s"; };
struct LutSeconds { static constexpr const char* symbol = "LUT*s"; };
struct MilliwattSeconds { static constexpr const char* symbol = "mW*s"; };
struct SquareMicrometres { static constexpr const char* symbol = "um^2"; };
struct Luts { static constexpr const char* symbol = "LUT"; };

using SiliconAdp = Quantity<Um2Seconds>;
using LutAdp = Quantity<LutSeconds>;
using Pdp = Quantity<MilliwattSeconds>;
using Area = Quantity<SquareMicrometres>;
using Adp = std::variant<SiliconAdp, LutAdp>;

enum class PlatformKind : std::uint8_t { ASIC, FPGA };

struct PlatformMetrics {
  PlatformKind kind = PlatformKind::ASIC;
  std::optional<double> area_um2;  // ASIC only
  std::optional<double> luts;      // FPGA only
  double cpd_ns = 0.0;
  double power_mw = 0.0;
  double tech_nm = 0.0;
};

// Exactly one of area_um2/luts present and matching kind, cpd_ns > 0,
// power_mw >= 0. Throws Error(validation).
void validate(const PlatformMetrics& m);

// ASIC: area x CPD; FPGA: LUTs x CPD (CPD in seconds).
Adp adp(const PlatformMetrics& m);
Pdp pdp(const PlatformMetrics& m);

// area x (to_nm / from_nm)^2. Throws Error(validation) for a non-positive node.
Area scale_area(Area area, double from_nm, double to_nm);

// LUT-based ADP expressed as silicon ADP at another node: each LUT counts as
// um2_per_lut of silicon at from_nm, then the area is scaled to to_nm.
SiliconAdp lut_adp_to_silicon(LutAdp adp, double um2_per_lut, double from_nm, double to_nm);

// cycles / freq_hz in seconds. Throws Error(validation) for freq_hz <= 0.
double latency(std::uint64_t cycles, double freq_hz);

// Rounds to `digits` significant figures.
double round_sig(double x, int digits = 3);

// Scientific notation with `digits` significant figures, e.g. "8.23e-04".
std::string format_sig(double x, int digits = 3);

}  // namespace rejscore::fom
