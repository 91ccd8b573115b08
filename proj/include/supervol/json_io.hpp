#pragma once
/**
 * @file json_io.hpp
 * @brief JSON encodings for Grassmann elements, volume results, and
 *        verification reports (see README for the schemas).
 */

#include <json.hpp>

#include "supervol/grassmann.hpp"
#include "supervol/oracles.hpp"
#include "supervol/superdim.hpp"
#include "supervol/volumes.hpp"

namespace supervol {

/// {"N": generators, "terms": [{"mask": m, "re": x, "im": y}, …]}
/// Terms appear in ascending mask order; zero coefficients are omitted.
inline nlohmann::json grassmann_to_json(const GrassmannElement<Complex>& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mask, c] : a.terms())
    terms.push_back({{"mask", mask}, {"re", c.real()}, {"im", c.imag()}});
  return {{"N", a.generators()}, {"terms", std::move(terms)}};
}

inline GrassmannElement<Complex> grassmann_from_json(const nlohmann::json& j) {
  const int n = j.at("N").get<int>();
  std::vector<std::pair<std::uint32_t, Complex>> terms;
  for (const auto& t : j.at("terms"))
    terms.emplace_back(
        t.at("mask").get<std::uint32_t>(),
        Complex{t.at("re").get<double>(), t.at("im").get<double>()});
  return GrassmannElement<Complex>::from_terms(n, terms);
}

/// {"family", "n", "m", "r", "s", "R", "value_re", "value_im",
///  "exact_zero", "index", "gaussian_factor", "conjectural"}
inline nlohmann::json volume_to_json(const VolumeValue& v) {
  return {{"family", family_name(v.spec.family)},
          {"n", v.spec.n},
          {"m", v.spec.m},
          {"r", v.spec.r},
          {"s", v.spec.s},
          {"R", v.spec.radius},
          {"value_re", v.value.value.real()},
          {"value_im", v.value.value.imag()},
          {"exact_zero", v.value.is_exact_zero},
          {"index", v.index},
          {"gaussian_factor", v.gaussian_factor},
          {"conjectural", v.conjectural}};
}

/// {"case", "closed_form": {"re","im"}, "oracle": {"re","im"},
///  "abs_err", "rel_err", "nodes", "elapsed_ms", "pass"}
inline nlohmann::json report_to_json(const VerificationReport& r) {
  return {{"case", r.case_name},
          {"closed_form",
           {{"re", r.closed_form.real()}, {"im", r.closed_form.imag()}}},
          {"oracle", {{"re", r.oracle.real()}, {"im", r.oracle.imag()}}},
          {"abs_err", r.abs_err},
          {"rel_err", r.rel_err},
          {"nodes", r.nodes},
          {"elapsed_ms", r.elapsed_ms},
          {"pass", r.pass}};
}

}  // namespace supervol
