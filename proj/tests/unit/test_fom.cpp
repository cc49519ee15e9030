#include <doctest.h>

#include <cmath>
#include <type_traits>

#include "common/error.hpp"
#include "fom/fom.hpp"
#include "fom/fom_report.hpp"

using namespace rejscore;
using namespace rejscore::fom;

namespace {

PlatformMetrics asic() {
  PlatformMetrics m;
  m.kind = PlatformKind::ASIC;
  m.area_um2 = 464866;
  m.cpd_ns = 1.77;
  m.power_mw = 0.005 + 0.124;
  m.tech_nm = 65;
  return m;
}

PlatformMetrics fpga(double power_mw) {
  PlatformMetrics m;
  m.kind = PlatformKind::FPGA;
  m.luts = 5108;
  m.cpd_ns = 4.50;
  m.power_mw = power_mw;
  m.tech_nm = 28;
  return m;
}

}  // namespace

static_assert(!std::is_convertible_v<LutAdp, SiliconAdp>);
static_assert(!std::is_convertible_v<SiliconAdp, LutAdp>);
static_assert(!std::is_convertible_v<Area, SiliconAdp>);

TEST_CASE("ADP") {
  const auto a = std::get<SiliconAdp>(adp(asic()));
  CHECK(format_sig(a.value) == "8.23e-04");
  const auto f = std::get<LutAdp>(adp(fpga(1.2)));
  CHECK(format_sig(f.value) == "2.30e-05");

  auto m = asic();
  m.cpd_ns *= 3;
  CHECK(std::get<SiliconAdp>(adp(m)).value == doctest::Approx(3 * a.value));
}

TEST_CASE("PDP") {
  CHECK(format_sig(pdp(asic()).value) == "2.28e-10");
  CHECK(format_sig(pdp(fpga(1.2)).value) == "5.40e-09");
  CHECK(format_sig(pdp(fpga(1200)).value) == "5.40e-06");
  auto m = asic();
  m.power_mw = 0;
  CHECK(pdp(m).value == 0.0);
}

TEST_CASE("technology scaling") {
  CHECK(scale_area(Area{1.0}, 28, 65).value == doctest::Approx(5.389).epsilon(1e-3));
  CHECK(scale_area(Area{42.0}, 65, 65).value == 42.0);
  CHECK(scale_area(Area{1.0}, 10, 30).value == doctest::Approx(9.0));
  const auto scaled = lut_adp_to_silicon(std::get<LutAdp>(adp(fpga(1.2))), 1.0, 28, 65);
  CHECK(format_sig(scaled.value) == "1.24e-04");
  CHECK_THROWS_AS(scale_area(Area{1.0}, 0, 65), Error);
}

TEST_CASE("latency") {
  CHECK(latency(8525, 222e6) * 1e6 == doctest::Approx(38.4).epsilon(1e-3));
  CHECK(round_sig(latency(8525, 222e6) * 1e6) == doctest::Approx(38.4));
  CHECK(latency(8525, 565e6) * 1e6 == doctest::Approx(15.088).epsilon(1e-4));
  CHECK(latency(3893, 565e6) * 1e6 == doctest::Approx(6.890).epsilon(1e-3));
  CHECK(latency(4632, 565e6) * 1e6 == doctest::Approx(8.198).epsilon(1e-3));
  try {
    latency(1, 0);
    FAIL("expected validation error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation);
  }
}

TEST_CASE("metric validation") {
  auto m = asic();
  m.luts = 3;
  CHECK_THROWS_AS(validate(m), Error);
  m = asic();
  m.area_um2.reset();
  CHECK_THROWS_AS(validate(m), Error);
  m = fpga(1);
  m.cpd_ns = 0;
  CHECK_THROWS_AS(validate(m), Error);
  m = asic();
  m.kind = PlatformKind::FPGA;
  CHECK_THROWS_AS(adp(m), Error);
}

TEST_CASE("rounding helpers") {
  CHECK(round_sig(0.000823456) == doctest::Approx(0.000823));
  CHECK(round_sig(0) == 0);
  CHECK(format_sig(2.2797e-10) == "2.28e-10");
}

TEST_CASE("report") {
  const char* doc = R"({"platforms":[
    {"name":"ASIC","kind":"ASIC","area_um2":464866,"cpd_ns":1.77,"tech_nm":65,
     "static_power_mw":0.005,"dynamic_power_mw":0.124,
     "published":{"adp":8.23e-4,"pdp_mw_s":2.28e-10}},
    {"name":"FPGA","kind":"FPGA","luts":5108,"cpd_ns":4.5,"tech_nm":28,"power_w":1.2,
     "scale_to_nm":65,"published":{"adp":2.30e-5,"pdp_mw_s":5.40e-9,"scaled_adp":1.24e-4}}]})";
  const auto r = build_report(doc);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].adp_unit == "um^2*s");
  CHECK(r.rows[1].adp_unit == "LUT*s");
  CHECK(r.rows[2].platform == "FPGA (Tech-scaled)");
  CHECK(format_sig(r.rows[2].adp) == "1.24e-04");
  CHECK(format_sig(r.rows[1].pdp_mw_s) == "5.40e-06");
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("W/mW") != std::string::npos);

  const auto js = to_json(r);
  CHECK(js.find("\"warnings\"") != std::string::npos);
  const auto csv = to_csv(r);
  CHECK(csv.rfind("platform,cpd_ns,adp,adp_unit,pdp_mw_s\n", 0) == 0);
  CHECK(csv.find("8.23e-04") != std::string::npos);
}

TEST_CASE("report with power taken as mW has no warnings") {
  const auto r = build_report(R"({"platforms":[{"kind":"FPGA","luts":5108,"cpd_ns":4.5,
    "tech_nm":28,"power_mw":1.2,"published":{"adp":2.30e-5,"pdp_mw_s":5.40e-9}}]})");
  CHECK(r.warnings.empty());
  CHECK(format_sig(r.rows[0].pdp_mw_s) == "5.40e-09");
}

TEST_CASE("report edge cases") {
  CHECK(build_report(R"({"platforms":[]})").rows.empty());
  auto code = [](const char* doc) {
    try {
      build_report(doc);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc{};
  };
  CHECK(code("not json") == Errc::parse);
  CHECK(code(R"({"rows":[]})") == Errc::parse);
  CHECK(code(R"({"platforms":[{"kind":"GPU","cpd_ns":1,"tech_nm":1,"power_mw":1}]})") ==
        Errc::parse);
  CHECK(code(R"({"platforms":[{"kind":"ASIC","area_um2":1,"cpd_ns":1,"tech_nm":1}]})") ==
        Errc::parse);
  CHECK(code(R"({"platforms":[{"kind":"ASIC","area_um2":1,"cpd_ns":1,"tech_nm":1,
    "power_mw":1,"power_w":1}]})") == Errc::parse);
  CHECK(code(R"({"platforms":[{"kind":"ASIC","luts":1,"cpd_ns":1,"tech_nm":1,"power_mw":1}]})") ==
        Errc::validation);
}
