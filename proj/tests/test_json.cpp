/**
 * @file test_json.cpp
 * @brief JSON round trips for Grassmann elements and field checks for the
 *        volume / verification-report encodings.
 */
#include <doctest.h>

#include <complex>
#include <string>

#include "supervol/json_io.hpp"

using supervol::Complex;
using supervol::GrassmannElement;

TEST_CASE("Grassmann JSON round trip is exact") {
  using GE = GrassmannElement<Complex>;
  const GE t0 = GE::generator(3, 0), t1 = GE::generator(3, 1),
           t2 = GE::generator(3, 2);
  const GE a = GE::constant(3, Complex{0.25, -3.5}) + 2.0 * t0 +
               Complex{0.0, 1.0} * (t1 * t2) + 0.125 * (t0 * t1 * t2);
  const auto j = supervol::grassmann_to_json(a);
  const GE back = supervol::grassmann_from_json(j);
  CHECK((a - back).is_zero());
  CHECK(j.at("N").get<int>() == 3);
  // Round trip through the serialized string too.
  const auto reparsed = nlohmann::json::parse(j.dump());
  CHECK((supervol::grassmann_from_json(reparsed) - a).is_zero());
}

TEST_CASE("volume JSON carries the value and metadata") {
  const auto v = supervol::sphere_volume(2, 0, 1.0);
  const auto j = supervol::volume_to_json(v);
  CHECK(j.at("family").get<std::string>() == "sphere");
  CHECK(j.at("n").get<int>() == 2);
  CHECK(j.at("m").get<int>() == 0);
  CHECK(j.at("R").get<double>() == 1.0);
  CHECK(j.at("value_re").get<double>() ==
        doctest::Approx(4.0 * supervol::kPi).epsilon(1e-14));
  CHECK(j.at("value_im").get<double>() == 0.0);
  CHECK_FALSE(j.at("exact_zero").get<bool>());
  CHECK(j.at("index").get<int>() == 2);
  CHECK_FALSE(j.at("conjectural").get<bool>());

  const auto z = supervol::stiefel_volume(2, 2, 1, 1, 1.0);
  const auto jz = supervol::volume_to_json(z);
  CHECK(jz.at("exact_zero").get<bool>());
  CHECK(jz.at("value_re").get<double>() == 0.0);
  CHECK(jz.at("r").get<int>() == 1);
  CHECK(jz.at("s").get<int>() == 1);

  const auto g = supervol::grassmannian_volume(2, 1, 1, 0, 1.0);
  CHECK(supervol::volume_to_json(g).at("conjectural").get<bool>());
}

TEST_CASE("verification report JSON") {
  supervol::VerificationReport r;
  r.case_name = "demo";
  r.closed_form = Complex{1.5, -0.5};
  r.oracle = Complex{1.5, -0.5000001};
  r.abs_err = 1e-7;
  r.rel_err = 5e-8;
  r.nodes = 32;
  r.elapsed_ms = 12.5;
  r.pass = true;
  const auto j = supervol::report_to_json(r);
  CHECK(j.at("case").get<std::string>() == "demo");
  CHECK(j.at("closed_form").at("re").get<double>() == 1.5);
  CHECK(j.at("closed_form").at("im").get<double>() == -0.5);
  CHECK(j.at("oracle").at("im").get<double>() == -0.5000001);
  CHECK(j.at("abs_err").get<double>() == 1e-7);
  CHECK(j.at("rel_err").get<double>() == 5e-8);
  CHECK(j.at("nodes").get<int>() == 32);
  CHECK(j.at("pass").get<bool>());
  CHECK_NOTHROW((void)j.dump());
}
