#include <cmath>
#include <random>
#include <vector>

#include "decarb/error.hpp"
#include "decarb/intensity.hpp"
#include "doctest.h"

using namespace decarb;

namespace {

ScenarioRecord make_record(std::vector<int> years, std::vector<double> emissions,
                           std::vector<double> energy) {
  ScenarioRecord rec;
  rec.key = {"GCAM4", Ssp::ssp1, Rcp::rcp19, "SSP1-19"};
  rec.emissions_ffi = {years, std::move(emissions), "Mt CO2/yr"};
  rec.primary_energy = {std::move(years), std::move(energy), "EJ/yr"};
  return rec;
}

}  // namespace

TEST_SUITE("intensity") {

TEST_CASE("unit arithmetic") {
  // 31000 Mt over 520 EJ: 3.1e13 kg / (520 * 2.77778e11 kWh)
  CHECK(carbon_intensity_value(31000.0, 520.0) ==
        doctest::Approx(0.2146153846153846).epsilon(1e-12));
  CHECK(carbon_intensity_value(0.0, 500.0) == 0.0);
  // pins the 0.0036 factor
  CHECK(std::abs(carbon_intensity_value(2.77778e2, 1.0) - 1.0) <= 1e-6);
}

TEST_CASE("carbon_intensity over a record") {
  const auto rec = make_record({2010, 2020, 2030}, {31000, 15500, 0}, {520, 520, 520});
  const auto path = carbon_intensity(rec);
  CHECK(path.t0 == 2010);
  CHECK(path.sigma[0] == doctest::Approx(0.2146153846).epsilon(1e-9));
  CHECK(path.sigma[1] == doctest::Approx(0.1073076923).epsilon(1e-9));
  CHECK(path.sigma[2] == 0.0);
}

TEST_CASE("non-positive initial intensity is a hard error") {
  const auto rec = make_record({2010, 2020}, {0, 100}, {500, 500});
  CHECK_THROWS_AS((void)carbon_intensity(rec), Error);
  try {
    (void)carbon_intensity(rec);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_positive_initial_intensity);
  }
}

TEST_CASE("decarb_rate rejects a non-positive initial intensity") {
  IntensityPath path;
  path.key = {"GCAM4", Ssp::ssp1, Rcp::rcp19, "SSP1-19"};
  path.years = {2010, 2020};
  path.sigma = {0.0, 0.1};
  path.t0 = 2010;
  CHECK_THROWS_AS((void)decarb_rate(path), Error);
}

TEST_CASE("decarbonization rate") {
  SUBCASE("constant intensity gives u = 0") {
    const auto rec = make_record({2010, 2020, 2030}, {100, 100, 100}, {500, 500, 500});
    const auto rate = decarb_rate(carbon_intensity(rec));
    for (double u : rate.u) CHECK(u == 0.0);
  }
  SUBCASE("zero intensity gives u = 1, negative intensity exceeds 1") {
    const auto rec = make_record({2010, 2020, 2030}, {100, 0, -50}, {500, 500, 500});
    const auto rate = decarb_rate(carbon_intensity(rec));
    CHECK(rate.u[0] == 0.0);
    CHECK(rate.u[1] == 1.0);
    CHECK(rate.u[2] == doctest::Approx(1.5).epsilon(1e-12));
  }
}

TEST_CASE("u at t0 is exactly zero") {
  const auto rec = make_record({2010, 2020}, {31007.123, 1234.5}, {517.77, 600.1});
  const auto rate = decarb_rate(carbon_intensity(rec));
  CHECK(rate.u[0] == 0.0);
}

TEST_CASE("scale invariance of u") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> emis(1000.0, 40000.0);
  std::uniform_real_distribution<double> ener(100.0, 1000.0);
  std::vector<int> years = {2010, 2020, 2030, 2040, 2050};
  std::vector<double> e, pe;
  for (std::size_t i = 0; i < years.size(); ++i) {
    e.push_back(emis(gen));
    pe.push_back(ener(gen));
  }
  const auto base = decarb_rate(carbon_intensity(make_record(years, e, pe)));
  for (double c : {1e-3, 3.7, 1e4}) {
    std::vector<double> e2 = e, pe2 = pe;
    for (auto& v : e2) v *= c;
    for (auto& v : pe2) v *= c;
    const auto scaled = decarb_rate(carbon_intensity(make_record(years, e2, pe2)));
    for (std::size_t i = 0; i < base.u.size(); ++i) {
      if (base.u[i] == 0.0) CHECK(std::abs(scaled.u[i]) <= 1e-12);
      else CHECK(std::abs(scaled.u[i] / base.u[i] - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("u rises exactly where sigma falls") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> emis(-5000.0, 40000.0);
  std::vector<int> years;
  std::vector<double> e, pe;
  for (int y = 2010; y <= 2100; y += 10) {
    years.push_back(y);
    e.push_back(y == 2010 ? 30000.0 : emis(gen));
    pe.push_back(500.0);
  }
  const auto path = carbon_intensity(make_record(years, e, pe));
  const auto rate = decarb_rate(path);
  for (std::size_t i = 1; i < path.sigma.size(); ++i) {
    const bool sigma_down = path.sigma[i] < path.sigma[i - 1];
    const bool u_up = rate.u[i] > rate.u[i - 1];
    CHECK(sigma_down == u_up);
  }
}

TEST_CASE("global u_max") {
  const auto monotone = decarb_rate(
      carbon_intensity(make_record({2010, 2020, 2030}, {100, 50, 0}, {500, 500, 500})));
  SUBCASE("single monotone decline to zero reaches exactly 1") {
    CHECK(global_u_max({monotone}).value == 1.0);
  }
  SUBCASE("maximum across paths, with attaining scenario and year") {
    auto a = decarb_rate(
        carbon_intensity(make_record({2010, 2020, 2030}, {100, 40, 30}, {500, 500, 500})));
    auto b = decarb_rate(
        carbon_intensity(make_record({2010, 2020, 2030}, {100, -30, 20}, {500, 500, 500})));
    b.key.raw_name = "SSP4-26";
    const auto result = global_u_max({a, b});
    CHECK(result.value == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(result.key.raw_name == "SSP4-26");
    CHECK(result.year == 2020);
  }
  SUBCASE("monotone under ensemble growth") {
    auto a = decarb_rate(
        carbon_intensity(make_record({2010, 2020, 2030}, {100, 40, 30}, {500, 500, 500})));
    CHECK(global_u_max({a, monotone}).value >= global_u_max({a}).value);
    CHECK(global_u_max({a, monotone}).value >= global_u_max({monotone}).value);
  }
  SUBCASE("empty ensemble") {
    CHECK_THROWS_AS((void)global_u_max({}), Error);
  }
}

}  // TEST_SUITE
