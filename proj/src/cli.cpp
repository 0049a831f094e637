#include "divvol/cli.hpp"

#include "divvol/asymptotics.hpp"
#include "divvol/check_suite.hpp"
#include "divvol/cones.hpp"
#include "divvol/io.hpp"
#include "divvol/volume.hpp"
#include "divvol/zariski.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>
#include <string>

namespace divvol {

namespace {

using nlohmann::json;

// Thrown from command bodies; carries the exit code.
struct CommandFailure {
  int code;
  std::string message;
};

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

SurfaceLattice load_valid_variety(const std::string& path, std::ostream& out) {
  SurfaceLattice lattice = load_variety(path);
  const auto report = validate(lattice);
  if (!report.ok()) {
    for (const auto& c : report.checks) {
      if (!c.passed) out << "FAIL " << c.name << ": " << c.detail << "\n";
    }
    throw CommandFailure{kExitInvalid, "variety '" + lattice.name() + "' failed validation"};
  }
  return lattice;
}

DivisorClass class_arg(const std::string& text, const SurfaceLattice& lattice, const char* what) {
  DivisorClass a;
  try {
    a = parse_class(text);
  } catch (const std::invalid_argument& e) {
    throw CommandFailure{kExitInvalid, std::string("malformed ") + what + ": " + e.what()};
  }
  if (a.size() != lattice.rank()) {
    throw CommandFailure{kExitInvalid, std::string(what) + " has " + std::to_string(a.size()) +
                                           " entries, rank is " + std::to_string(lattice.rank())};
  }
  return a;
}

std::string support_text(const SurfaceLattice& lattice, const std::vector<std::size_t>& support) {
  std::string out = "{";
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k) out += ", ";
    out += lattice.curve(support[k]).name;
  }
  return out + "}";
}

std::string negative_text(const SurfaceLattice& lattice, const ZariskiDecomposition& z) {
  if (z.support.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < z.support.size(); ++k) {
    if (k) out += " + ";
    out += to_string(z.nu[k]) + "*" + lattice.curve(z.support[k]).name;
  }
  return out;
}

json class_json(const DivisorClass& a) {
  json out = json::array();
  for (const auto& c : a.coords) out.push_back(to_string(c));
  return out;
}

json poly_json(const VolumePolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return {{"text", to_string(p)}, {"coefficients", std::move(coeffs)}};
}

int cmd_validate(const std::string& path, bool as_json, std::ostream& out) {
  const SurfaceLattice lattice = load_variety(path);
  const auto report = validate(lattice);
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out << json{{"variety", lattice.name()}, {"passed", report.ok()}, {"checks", checks}}.dump(2)
        << "\n";
  } else {
    out << "variety " << lattice.name() << " (rank " << lattice.rank() << ", "
        << lattice.curves().size() << " curves)\n";
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitInvalid;
}

int cmd_decompose(const std::string& path, const std::string& cls, bool as_json,
                  std::ostream& out) {
  const SurfaceLattice lattice = load_valid_variety(path, out);
  const DivisorClass a = class_arg(cls, lattice, "--class");
  const auto result = decompose(lattice, a);
  if (const auto* np = std::get_if<NotPseudoeffective>(&result)) {
    if (as_json) {
      out << json{{"class", class_json(a)},
                  {"pseudoeffective", false},
                  {"certificate", np->certificate},
                  {"detail", np->detail}}
                 .dump(2)
          << "\n";
    } else {
      out << "class " << to_string(a) << "\n";
      out << "NotPseudoeffective: " << np->certificate << " (" << np->detail << ")\n";
    }
    return kExitNotPseff;
  }
  const auto& z = std::get<ZariskiDecomposition>(result);
  const Rational vol = square(lattice, z.positive);
  const int nd = vol > 0 ? 2 : (z.positive.is_zero() ? 0 : 1);
  if (as_json) {
    json nu = json::array();
    for (std::size_t k = 0; k < z.support.size(); ++k) {
      nu.push_back({{"curve", lattice.curve(z.support[k]).name}, {"nu", to_string(z.nu[k])}});
    }
    out << json{{"class", class_json(a)},
                {"pseudoeffective", true},
                {"positive", class_json(z.positive)},
                {"negative", std::move(nu)},
                {"volume", to_string(vol)},
                {"big", vol > 0},
                {"nd", nd}}
               .dump(2)
        << "\n";
  } else {
    out << "class " << to_string(a) << "\n";
    out << "P = " << to_string(z.positive) << "\n";
    out << "N = " << negative_text(lattice, z) << "\n";
    out << "support = " << support_text(lattice, z.support) << "\n";
    out << "vol = " << to_string(vol) << "\n";
    out << "nd = " << nd << "\n";
    out << "big = " << (vol > 0 ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_curve(const std::string& path, const std::string& cls, const std::string& dir,
              const std::string& tmax_text, int levels, bool as_float, std::ostream& out) {
  const SurfaceLattice lattice = load_valid_variety(path, out);
  const DivisorClass a = class_arg(cls, lattice, "--class");
  const DivisorClass b = class_arg(dir, lattice, "--direction");
  Rational tmax;
  try {
    tmax = parse_rational(tmax_text);
  } catch (const std::invalid_argument& e) {
    throw CommandFailure{kExitInvalid, std::string("malformed --tmax: ") + e.what()};
  }
  if (tmax <= 0) throw CommandFailure{kExitInvalid, "--tmax must be positive"};
  if (levels < 0) throw CommandFailure{kExitInvalid, "--levels must be nonnegative"};

  const auto curve = sample_curve(lattice, a, b, dyadic_grid(tmax, 0, levels - 1));
  out << "t,volume\n";
  for (const auto& p : curve.points) {
    if (as_float) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", to_double(p.t), to_double(p.v));
      out << buf << "\n";
    } else {
      out << to_decimal_or_fraction(p.t) << "," << to_decimal_or_fraction(p.v) << "\n";
    }
  }
  return kExitOk;
}

int cmd_asymptote(const std::string& path, const std::string& cls, const std::string& dir,
                  bool as_json, std::ostream& out) {
  const SurfaceLattice lattice = load_valid_variety(path, out);
  const DivisorClass a = class_arg(cls, lattice, "--class");
  const DivisorClass w = dir.empty() ? lattice.ample() : class_arg(dir, lattice, "--direction");

  const auto base = decompose(lattice, a);
  if (const auto* np = std::get_if<NotPseudoeffective>(&base)) {
    throw CommandFailure{kExitNotPseff, "class is not pseudoeffective (" + np->certificate + ")"};
  }
  const auto& z = std::get<ZariskiDecomposition>(base);
  if (square(lattice, z.positive) > 0) {
    throw CommandFailure{kExitInvalid, "class is big (vol = " +
                                           to_string(square(lattice, z.positive)) +
                                           "); use 'decompose' for big classes"};
  }
  ExpansionResult ex;
  try {
    ex = stable_expansion(lattice, a, w);
  } catch (const std::invalid_argument& e) {
    throw CommandFailure{kExitInvalid, e.what()};
  } catch (const ExpansionError& e) {
    throw CommandFailure{kExitInvalid, e.what()};
  }
  const auto fit = estimate_exponent(sample_curve(lattice, a, w, dyadic_grid(1, 10, 20)));
  const int nd = z.positive.is_zero() ? 0 : 1;
  if (as_json) {
    json support = json::array();
    for (auto i : ex.stable_support) support.push_back(lattice.curve(i).name);
    out << json{{"class", class_json(a)},
                {"direction", class_json(w)},
                {"positive", class_json(z.positive)},
                {"expansion", poly_json(ex.poly)},
                {"threshold", to_string(ex.threshold)},
                {"stable_support", std::move(support)},
                {"exponent", fit.exponent},
                {"leading_coefficient", fit.leading_coefficient},
                {"residual", fit.residual},
                {"nd", nd},
                {"nd_vol", 2.0 - fit.exponent}}
               .dump(2)
        << "\n";
  } else {
    out << "class " << to_string(a) << ", direction " << to_string(w) << "\n";
    out << "P = " << to_string(z.positive) << "\n";
    out << "stable support = " << support_text(lattice, ex.stable_support) << "\n";
    out << "vol(a + t w) = " << to_string(ex.poly) << " for 0 < t <= " << to_string(ex.threshold)
        << "\n";
    out << "exponent = " << fixed(fit.exponent) << " (leading coefficient "
        << fixed(fit.leading_coefficient) << ", residual " << fixed(fit.residual) << ")\n";
    out << "nd = " << nd << "\n";
    out << "nd_vol = " << fixed(2.0 - fit.exponent) << "\n";
  }
  return kExitOk;
}

int cmd_check(const std::string& path, const CheckSuiteOptions& options, bool as_json,
              std::ostream& out) {
  const SurfaceLattice lattice = load_variety(path);
  const auto report = run_check_suite(lattice, options);
  if (as_json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.passed() ? kExitOk : kExitInvalid;
}

int cmd_nef_expand(const std::string& path, bool as_json, std::ostream& out) {
  const auto table = load_table(path);
  const auto poly = nef_polynomial(table);
  const int nd = nd_nef(table);
  if (as_json) {
    out << json{{"n", table.dimension()}, {"polynomial", poly_json(poly)}, {"nd", nd}}.dump(2)
        << "\n";
  } else {
    out << "vol(a + t w) = " << to_string(poly) << "\n";
    out << "nd = " << nd << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zariski decompositions and volume asymptotics on surface lattices"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string variety, cls, dir, tmax = "1", table;
  int levels = 20;
  bool as_float = false;
  CheckSuiteOptions check_options;

  auto* validate_cmd = app.add_subcommand("validate", "Check the lattice invariants of a variety file");
  validate_cmd->add_option("variety,--variety", variety, "Variety JSON file")->required();
  validate_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* decompose_cmd = app.add_subcommand("decompose", "Zariski decomposition of a class");
  decompose_cmd->add_option("variety,--variety", variety, "Variety JSON file")->required();
  decompose_cmd->add_option("--class", cls, "Comma-separated rationals")->required();
  decompose_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* curve_cmd = app.add_subcommand("curve", "CSV of vol(a + t b) for t = tmax * 2^-j");
  curve_cmd->add_option("variety,--variety", variety, "Variety JSON file")->required();
  curve_cmd->add_option("--class", cls, "Base class a")->required();
  curve_cmd->add_option("--direction", dir, "Direction b")->required();
  curve_cmd->add_option("--tmax", tmax, "Largest t (rational)")->capture_default_str();
  curve_cmd->add_option("--levels", levels, "Number of grid points")->capture_default_str();
  curve_cmd->add_flag("--float", as_float, "Render as doubles (lossy)");

  auto* asymptote_cmd = app.add_subcommand("asymptote", "Small-t expansion of vol(a + t w) for a boundary class");
  asymptote_cmd->add_option("variety,--variety", variety, "Variety JSON file")->required();
  asymptote_cmd->add_option("--class", cls, "Pseudoeffective non-big class")->required();
  asymptote_cmd->add_option("--direction", dir, "Direction w (defaults to the ample class)");
  asymptote_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* check_cmd = app.add_subcommand("check", "Run the seeded property and bound suite");
  check_cmd->add_option("variety,--variety", variety, "Variety JSON file")->required();
  check_cmd->add_option("--seed", check_options.seed, "PRNG seed")->capture_default_str();
  check_cmd->add_option("--trials", check_options.trials, "Random classes")->capture_default_str();
  check_cmd->add_option("--bound", check_options.bound, "Coordinate bound for random classes")
      ->capture_default_str();
  check_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* nef_cmd = app.add_subcommand("nef-expand", "Volume polynomial of a nef intersection table");
  nef_cmd->add_option("table,--table", table, "Table JSON file")->required();
  nef_cmd->add_flag("--json", as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*validate_cmd) return cmd_validate(variety, as_json, out);
    if (*decompose_cmd) return cmd_decompose(variety, cls, as_json, out);
    if (*curve_cmd) return cmd_curve(variety, cls, dir, tmax, levels, as_float, out);
    if (*asymptote_cmd) return cmd_asymptote(variety, cls, dir, as_json, out);
    if (*check_cmd) return cmd_check(variety, check_options, as_json, out);
    if (*nef_cmd) return cmd_nef_expand(table, as_json, out);
  } catch (const CommandFailure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace divvol
