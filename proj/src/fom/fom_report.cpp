#include "fom/fom_report.hpp"

#include <cmath>

#include <json.hpp>

#include "common/error.hpp"

namespace rejscore::fom {

namespace {

using nlohmann::json;

double number(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    raise(Errc::parse, where + ": '" + key + "' must be a number");
  return it->get<double>();
}

std::optional<double> optional_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return std::nullopt;
  return number(obj, key, where);
}

bool same_at_3sf(double a, double b) { return round_sig(a, 3) == round_sig(b, 3); }

bool off_by_thousand(double computed, double published) {
  if (published == 0 || computed == 0) return false;
  const double ratio = computed / published;
  return same_at_3sf(ratio, 1e3) || same_at_3sf(ratio, 1e-3);
}

void compare(FomReport& report, const std::string& name, const char* what, double computed,
             std::optional<double> published, std::optional<double> power_w) {
  if (!published || same_at_3sf(computed, *published)) return;
  std::string msg = name + ": computed " + what + " " + format_sig(computed) +
                    " differs from published " + format_sig(*published);
  if (off_by_thousand(computed, *published)) {
    msg += " by a factor of 1000 (W/mW unit discrepancy)";
    if (power_w)
      msg += "; the published value matches power " + format_sig(*power_w) +
             " read as mW, the report uses " + format_sig(*power_w * 1e3) + " mW";
  }
  report.warnings.push_back(std::move(msg));
}

}  // namespace

FomReport build_report(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    raise(Errc::parse, std::string("metrics file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("platforms") || !doc["platforms"].is_array())
    raise(Errc::parse, "metrics file must be an object with a 'platforms' array");

  FomReport report;
  std::size_t index = 0;
  for (const auto& entry : doc["platforms"]) {
    const std::string where = "platforms[" + std::to_string(index++) + "]";
    if (!entry.is_object()) raise(Errc::parse, where + " must be an object");
    const std::string name =
        entry.contains("name") && entry["name"].is_string() ? entry["name"].get<std::string>() : where;
    const auto kind_it = entry.find("kind");
    if (kind_it == entry.end() || !kind_it->is_string())
      raise(Errc::parse, where + ": 'kind' must be \"ASIC\" or \"FPGA\"");

    PlatformMetrics m;
    const auto kind = kind_it->get<std::string>();
    if (kind == "ASIC") m.kind = PlatformKind::ASIC;
    else if (kind == "FPGA") m.kind = PlatformKind::FPGA;
    else raise(Errc::parse, where + ": 'kind' must be \"ASIC\" or \"FPGA\"");

    m.area_um2 = optional_number(entry, "area_um2", where);
    m.luts = optional_number(entry, "luts", where);
    m.cpd_ns = number(entry, "cpd_ns", where);
    m.tech_nm = number(entry, "tech_nm", where);

    const auto power_mw = optional_number(entry, "power_mw", where);
    const auto power_w = optional_number(entry, "power_w", where);
    const auto static_mw = optional_number(entry, "static_power_mw", where);
    const auto dynamic_mw = optional_number(entry, "dynamic_power_mw", where);
    const int forms = (power_mw ? 1 : 0) + (power_w ? 1 : 0) + ((static_mw || dynamic_mw) ? 1 : 0);
    if (forms != 1)
      raise(Errc::parse, where + ": give exactly one of power_mw, power_w, or "
                                 "static_power_mw + dynamic_power_mw");
    if (power_mw) m.power_mw = *power_mw;
    else if (power_w) m.power_mw = *power_w * 1e3;
    else {
      if (!static_mw || !dynamic_mw)
        raise(Errc::parse, where + ": static_power_mw and dynamic_power_mw go together");
      m.power_mw = *static_mw + *dynamic_mw;
    }
    try {
      validate(m);
    } catch (const Error& e) {
      raise(Errc::validation, where + ": " + e.what());
    }

    std::optional<double> pub_adp, pub_pdp, pub_scaled;
    if (entry.contains("published")) {
      const auto& pub = entry["published"];
      if (!pub.is_object()) raise(Errc::parse, where + ": 'published' must be an object");
      pub_adp = optional_number(pub, "adp", where + ".published");
      pub_pdp = optional_number(pub, "pdp_mw_s", where + ".published");
      pub_scaled = optional_number(pub, "scaled_adp", where + ".published");
    }

    const Pdp p = pdp(m);
    FomRow row{name, m.kind, m.cpd_ns, 0.0, "", p.value};
    std::visit(
        [&](auto q) {
          row.adp = q.value;
          using U = typename decltype(q)::unit_type;
          row.adp_unit = U::symbol;
        },
        adp(m));
    report.rows.push_back(row);
    compare(report, name, "ADP", row.adp, pub_adp, std::nullopt);
    compare(report, name, "PDP", row.pdp_mw_s, pub_pdp, power_w);

    if (const auto to_nm = optional_number(entry, "scale_to_nm", where)) {
      FomRow scaled = row;
      scaled.platform = name + " (Tech-scaled)";
      scaled.adp_unit = Um2Seconds::symbol;
      if (m.kind == PlatformKind::FPGA) {
        const double um2_per_lut = optional_number(entry, "um2_per_lut", where).value_or(1.0);
        scaled.adp =
            lut_adp_to_silicon(std::get<LutAdp>(adp(m)), um2_per_lut, m.tech_nm, *to_nm).value;
      } else {
        const Area area = scale_area(Area{*m.area_um2}, m.tech_nm, *to_nm);
        scaled.adp = area.value * m.cpd_ns * 1e-9;
      }
      report.rows.push_back(scaled);
      compare(report, scaled.platform, "ADP", scaled.adp, pub_scaled, std::nullopt);
    }
  }
  return report;
}

std::string to_json(const FomReport& report) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["platform"] = r.platform;
    row["kind"] = r.kind == PlatformKind::ASIC ? "ASIC" : "FPGA";
    row["cpd_ns"] = round_sig(r.cpd_ns);
    row["adp"] = round_sig(r.adp);
    row["adp_unit"] = r.adp_unit;
    row["pdp_mw_s"] = round_sig(r.pdp_mw_s);
    j["rows"].push_back(row);
  }
  j["warnings"] = report.warnings;
  return j.dump(2);
}

std::string to_csv(const FomReport& report) {
  std::string out = "platform,cpd_ns,adp,adp_unit,pdp_mw_s\n";
  for (const auto& r : report.rows) {
    out += '"' + r.platform + "\"," + format_sig(r.cpd_ns) + ',' + format_sig(r.adp) + ',' +
           r.adp_unit + ',' + format_sig(r.pdp_mw_s) + '\n';
  }
  return out;
}

}  // namespace rejscore::fom
