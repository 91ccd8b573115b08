/**
 * @file supervol_cli.cpp
 * @brief Command-line front end: volume / normalized / verify / table.
 *
 * Exit codes: 0 success (all verifications passed), 1 computation or
 * verification failure, 2 usage error (bad flags, invalid parameters,
 * empty or oversized table ranges).
 */
#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "supervol/json_io.hpp"
#include "supervol/oracles.hpp"
#include "supervol/superdim.hpp"
#include "supervol/volumes.hpp"

namespace {

using supervol::Complex;

//=============================================================================
// Formatting and parsing helpers
//=============================================================================

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

/// "re+imi" with 15 significant digits; pure reals print without the i-part.
std::string format_complex(const Complex& z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = format_double(z.real());
  s += (z.imag() < 0.0) ? "-" : "+";
  s += format_double(std::abs(z.imag()));
  s += "i";
  return s;
}

/// Parses "a", "a+bi", "a-bi", "bi", "i", "-i" (decimal or scientific parts).
Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) return Complex{std::stod(s), 0.0};
  s.pop_back();
  // Split at the last '+'/'-' that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto stod_signed = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return std::stod(t);
  };
  if (split == std::string::npos) return Complex{0.0, stod_signed(s)};
  const double re = std::stod(s.substr(0, split));
  const double im = stod_signed(s.substr(split));
  return Complex{re, im};
}

struct IntRange {
  int lo = 0;
  int hi = 0;
  int count() const { return hi - lo + 1; }
};

/// "k" or "a..b" (inclusive).  An empty range (a > b) is a usage error.
IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  if (r.lo > r.hi)
    throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

supervol::Family parse_family(const std::string& name) {
  return supervol::family_from_name(name);
}

//=============================================================================
// Subcommand runners
//=============================================================================

struct CommonOpts {
  std::string format = "text";
  int nodes = 32;
  double tol = 1e-10;
};

supervol::QuadratureSpec quad_from(const CommonOpts& c) {
  supervol::QuadratureSpec q;
  q.nodes_per_axis = c.nodes;
  q.abs_tol = c.tol;
  q.rel_tol = c.tol;
  return q;
}

int run_volume(const supervol::ManifoldSpec& spec, const CommonOpts& opts) {
  const supervol::VolumeValue v = supervol::volume_of(spec);
  if (opts.format == "json") {
    std::cout << supervol::volume_to_json(v).dump(2) << "\n";
    return 0;
  }
  std::cout << "family          " << supervol::family_name(spec.family) << "\n"
            << "dimension       (" << v.dimension.even << "|" << v.dimension.odd
            << ")\n"
            << "index           " << v.index << "\n"
            << "gaussian factor " << format_double(v.gaussian_factor) << "\n"
            << "volume          " << format_complex(v.value.value)
            << (v.value.is_exact_zero ? "  (exact zero)" : "") << "\n";
  if (v.conjectural)
    std::cout << "note            conjectural closed form\n";
  return 0;
}

int run_normalized(const std::string& family, const Complex& z,
                   const std::optional<Complex>& w, double radius,
                   const CommonOpts& opts) {
  supervol::NormalizedFamily fam;
  if (family == "sphere")
    fam = supervol::NormalizedFamily::sphere;
  else if (family == "cp")
    fam = supervol::NormalizedFamily::cp;
  else if (family == "stiefel")
    fam = supervol::NormalizedFamily::stiefel;
  else if (family == "grassmannian")
    fam = supervol::NormalizedFamily::grassmannian;
  else
    throw std::invalid_argument("normalized: unknown family '" + family + "'");
  const Complex value = supervol::normalized_volume(fam, z, w, radius);
  if (opts.format == "json") {
    nlohmann::json j{{"family", family},
                     {"z", {{"re", z.real()}, {"im", z.imag()}}},
                     {"radius", radius},
                     {"value_re", value.real()},
                     {"value_im", value.imag()}};
    j["w"] = w ? nlohmann::json{{"re", w->real()}, {"im", w->imag()}}
               : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_complex(value) << "\n";
  }
  return 0;
}

int run_verify(const std::string& case_name, const CommonOpts& opts) {
  const auto reports =
      supervol::run_verification_suite(case_name, quad_from(opts));
  bool all_pass = true;
  if (opts.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
      arr.push_back(supervol::report_to_json(r));
      all_pass = all_pass && r.pass;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass;
      std::printf("[%s] %-34s closed=%-22s oracle=%-22s rel=%.3e (%.0f ms)\n",
                  r.pass ? "PASS" : "FAIL", r.case_name.c_str(),
                  format_complex(r.closed_form).c_str(),
                  format_complex(r.oracle).c_str(), r.rel_err, r.elapsed_ms);
    }
    std::printf("%s: %zu checks\n", all_pass ? "ALL PASS" : "FAILURES",
                reports.size());
  }
  return all_pass ? 0 : 1;
}

int run_table(supervol::ManifoldSpec base, const IntRange& nr,
              const IntRange& mr, const CommonOpts& opts) {
  const long long cells =
      static_cast<long long>(nr.count()) * static_cast<long long>(mr.count());
  if (cells > 10000)
    throw std::invalid_argument("table: more than 10000 cells requested");
  if (opts.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (int n = nr.lo; n <= nr.hi; ++n)
      for (int m = mr.lo; m <= mr.hi; ++m) {
        supervol::ManifoldSpec spec = base;
        spec.n = n;
        spec.m = m;
        arr.push_back(supervol::volume_to_json(supervol::volume_of(spec)));
      }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  // Text: one row per n, one column per m; structural zeros marked "0*".
  std::printf("%-6s", "n\\m");
  for (int m = mr.lo; m <= mr.hi; ++m) std::printf(" %-22d", m);
  std::printf("\n");
  for (int n = nr.lo; n <= nr.hi; ++n) {
    std::printf("%-6d", n);
    for (int m = mr.lo; m <= mr.hi; ++m) {
      supervol::ManifoldSpec spec = base;
      spec.n = n;
      spec.m = m;
      const supervol::VolumeValue v = supervol::volume_of(spec);
      const std::string cell = v.value.is_exact_zero
                                   ? "0*"
                                   : format_complex(v.value.value);
      std::printf(" %-22s", cell.c_str());
    }
    std::printf("\n");
  }
  std::printf("(0* marks an exact structural zero of the volume formula)\n");
  return 0;
}

}  // namespace

//=============================================================================
// main
//=============================================================================

int main(int argc, char** argv) {
  CLI::App app{
      "supervol: volumes of classical supermanifolds "
      "(spheres, projective superspaces, Stiefel/Grassmannian, U(n|m))"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string family = "sphere";
  int n = 0, m = 0, r = 0, s = 0;
  double radius = 1.0;
  std::string z_text = "1", w_text, case_name = "all";
  std::string n_range = "0", m_range = "0";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--nodes", common.nodes,
                    "Gauss-Legendre nodes per axis/panel");
    cmd->add_option("--tol", common.tol, "Adaptive quadrature tolerance");
  };

  CLI::App* vol = app.add_subcommand("volume", "Closed-form volume");
  vol->add_option("--family", family,
                  "sphere | cp | stiefel | grassmannian | unitary");
  vol->add_option("--n", n, "Family parameter n");
  vol->add_option("--m", m, "Family parameter m");
  vol->add_option("--r", r, "Stiefel/Grassmannian parameter r");
  vol->add_option("--s", s, "Stiefel/Grassmannian parameter s");
  vol->add_option("--radius", radius, "Radius R > 0");
  add_common(vol);

  CLI::App* norm = app.add_subcommand(
      "normalized", "Normalized volume function of complex arguments");
  norm->add_option("--family", family, "sphere | cp | stiefel | grassmannian");
  norm->add_option("--z", z_text, "Complex z, e.g. '1.5+0.5i'");
  norm->add_option("--w", w_text, "Complex w (Stiefel/Grassmannian families)");
  norm->add_option("--radius", radius, "Radius R > 0");
  add_common(norm);

  CLI::App* verify = app.add_subcommand("verify", "Closed form vs oracles");
  verify->add_option(
      "--case", case_name,
      "sphere | cp | u11 | hopf | gaussian | cavalieri | all");
  add_common(verify);

  CLI::App* table = app.add_subcommand("table", "Volume table over n and m");
  table->add_option("--family", family,
                    "sphere | cp | stiefel | grassmannian | unitary");
  table->add_option("--n", n_range, "n range 'a..b' (or single value)");
  table->add_option("--m", m_range, "m range 'a..b' (or single value)");
  table->add_option("--r", r, "Stiefel/Grassmannian parameter r");
  table->add_option("--s", s, "Stiefel/Grassmannian parameter s");
  table->add_option("--radius", radius, "Radius R > 0");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (vol->parsed()) {
      supervol::ManifoldSpec spec{parse_family(family), n, m, r, s, radius};
      spec.validate();
      return run_volume(spec, common);
    }
    if (norm->parsed()) {
      const Complex z = parse_complex(z_text);
      std::optional<Complex> w;
      if (!w_text.empty()) w = parse_complex(w_text);
      return run_normalized(family, z, w, radius, common);
    }
    if (verify->parsed()) return run_verify(case_name, common);
    if (table->parsed()) {
      supervol::ManifoldSpec base{parse_family(family), 0, 0, r, s, radius};
      return run_table(base, parse_range(n_range), parse_range(m_range),
                       common);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
