#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "amdkit/bounds.hpp"
#include "amdkit/derive.hpp"
#include "amdkit/report.hpp"
#include "amdkit/spectrum.hpp"

namespace amdkit::cli {

namespace {

struct CommandSpec {
  std::string family;
  std::uint64_t q = 0;
  std::uint32_t r = 1;
  std::uint32_t t = 1;
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  std::string split = "weak";
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t max_cells = kDefaultMaxCells;
  std::string in_path;
  std::string out_path = "-";
  std::string format;  // resolved per subcommand when unset
  bool restricted = false;
  std::string subcommand;
};

std::string six_decimals(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Func build_family(const CommandSpec& c) {
  Split split = c.split == "strong" ? Split::Strong : Split::Weak;
  if (c.family == "mm") {
    require(c.q >= 2, Errc::DegenerateParameters, "mm needs --q");
    return mm_func(c.q, c.r, split, c.max_cells);
  }
  if (c.family == "dillon") {
    require(c.q >= 2, Errc::DegenerateParameters, "dillon needs --q");
    return dillon_func(c.q, c.r, std::nullopt, split, c.max_cells);
  }
  if (c.family == "dillon-dual") {
    // strong split by construction; --split is ignored for this family
    require(c.q >= 2, Errc::DegenerateParameters, "dillon-dual needs --q");
    return dillon_dual_func(c.q, c.r, std::nullopt, c.max_cells);
  }
  if (c.family == "trace-mult") {
    require(c.q >= 2, Errc::DegenerateParameters, "trace-mult needs --q");
    std::uint64_t qr = 1;
    for (std::uint32_t i = 0; i < c.r; ++i) qr *= c.q;
    std::uint64_t m1 = c.m1 == 0 ? qr - 1 : c.m1;
    std::uint64_t m2 = c.m2 == 0 ? (qr - 1) / m1 : c.m2;
    return trace_mult_func(c.q, c.r, std::nullopt, m1, m2, c.max_cells);
  }
  if (c.family == "cdfpw") {
    require(c.q >= 2, Errc::DegenerateParameters, "cdfpw needs --q");
    return cdfpw_func(c.q, c.t, c.max_cells);
  }
  if (c.family == "table") {
    require(!c.in_path.empty(), Errc::DegenerateParameters, "family table needs --in");
    std::ifstream in(c.in_path);
    require(in.good(), Errc::ParseError, "cannot open " + c.in_path);
    return read_table(in, c.max_cells);
  }
  fail(Errc::DegenerateParameters, "unknown family " + c.family);
}

void emit(const CommandSpec& c, const std::string& artifact, std::ostream& out) {
  if (c.out_path == "-" || c.out_path.empty()) {
    out << artifact;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  require(file.good(), Errc::ParseError, "cannot open " + c.out_path + " for writing");
  file << artifact;
}

// Exact claims carried by each family; a violation is a failed mathematical
// assertion, not a validation error.
struct ClaimResult {
  bool checked = false;
  bool ok = true;
  std::vector<std::string> failures;
};

ClaimResult check_family_claims(const CommandSpec& c, const AmdCode& code,
                                const SuccessProfile& profile, const BoundReport& bounds) {
  ClaimResult res;
  auto fails = [&](const std::string& what) {
    res.ok = false;
    res.failures.push_back(what);
  };
  Rational inv_q(1, c.q == 0 ? 1 : c.q);
  if (c.family == "mm" || c.family == "dillon") {
    res.checked = true;
    if (c.split == "weak") {
      if (profile.weak_rho != inv_q) fails("weak rho != 1/q");
      if (!bounds.r_optimal) fails("code is not R-optimal");
    } else {
      if (profile.strong_rho != inv_q) fails("strong rho != 1/q");
      if (c.r == 1 && !bounds.g_optimal) fails("code is not G-optimal");
    }
  } else if (c.family == "dillon-dual") {
    res.checked = true;
    if (profile.strong_rho != inv_q) fails("strong rho != 1/q");
    if (c.r == 1 && !bounds.g_optimal) fails("code is not G-optimal");
  } else if (c.family == "cdfpw") {
    res.checked = true;
    Rational cap(c.t + 1, c.q);
    if (!(profile.strong_rho <= cap)) fails("strong rho exceeds (t+1)/q");
    if (!(nonlinearity_of(code.f, c.workers) <= cap)) fails("nonlinearity exceeds (t+1)/q");
  } else if (c.family == "trace-mult") {
    res.checked = true;
    std::uint64_t qr = 1;
    for (std::uint32_t i = 0; i < c.r; ++i) qr *= c.q;
    Rational expected = Rational(1, c.q) + Rational(1, c.q * (qr - 1));
    if (nonlinearity_of(code.f, c.workers) != expected)
      fails("nonlinearity != 1/q + 1/(q(q^r-1))");
  }
  return res;
}

Json build_json(const CommandSpec& c, const AmdCode& code) {
  TagSize ts = tag_size(code);
  Json j;
  j["family"] = c.family.empty() ? "table" : c.family;
  j["m"] = code.m;
  j["n"] = code.n;
  j["t"] = code.t;
  j["tagRatio"] = rational_json(ts.ratio);
  j["tagBits"] = six_decimals(ts.bits);
  if (c.family == "dillon" || c.family == "dillon-dual")
    j["coordinatePacking"] = "polynomial-basis";
  return j;
}

int cmd_build(const CommandSpec& c, std::ostream& out) {
  AmdCode code = build_code(build_family(c));
  if (c.format != "json") {  // text is the default for build
    TagSize ts = tag_size(code);
    std::ostringstream os;
    os << "m=" << code.m << "\nn=" << code.n << "\nt=" << code.t
       << "\ntagRatio=" << ts.ratio.str() << "\ntagBits=" << six_decimals(ts.bits) << "\n";
    emit(c, os.str(), out);
  } else {
    emit(c, dump_json(build_json(c, code)), out);
  }
  return kOk;
}

int cmd_spectrum(const CommandSpec& c, std::ostream& out) {
  Func f = build_family(c);
  DifferentialSpectrum spec = differential_spectrum(f, c.restricted, c.workers, c.max_cells);
  std::ostringstream os;
  spec.write_csv(os);
  emit(c, os.str(), out);
  return kOk;
}

int cmd_eval(const CommandSpec& c, std::ostream& out) {
  AmdCode code = build_code(build_family(c));
  SuccessProfile profile = evaluate(code, ModelSet{}, c.workers, c.max_cells);
  emit(c, dump_json(profile_json(code, profile)), out);
  return kOk;
}

int cmd_bounds(const CommandSpec& c, std::ostream& out) {
  AmdCode code = build_code(build_family(c));
  SuccessProfile profile = evaluate(code, ModelSet{}, c.workers, c.max_cells);
  BoundReport bounds = optimality_verdict(code, profile);
  Json j = profile_json(code, profile);
  j["bounds"] = bounds_json(bounds);
  ClaimResult claims = check_family_claims(c, code, profile, bounds);
  if (claims.checked) {
    j["claims"] = Json::object();
    j["claims"]["ok"] = claims.ok;
    j["claims"]["failures"] = claims.failures;
  }
  emit(c, dump_json(j), out);
  return claims.ok ? kOk : kAssertionFailed;
}

int cmd_derive(const CommandSpec& c, std::ostream& out) {
  AmdCode code = [&] {
    if (c.family == "table" || c.family.empty()) {
      require(!c.in_path.empty(), Errc::DegenerateParameters, "derive from a table needs --in");
      std::ifstream in(c.in_path);
      require(in.good(), Errc::ParseError, "cannot open " + c.in_path);
      return build_code(import_code_table(in, c.max_cells));
    }
    return build_code(build_family(c));
  }();
  DerivedBoundCheck weak = derived_nonlinearity_bound(code, c.workers, c.max_cells);
  StrongerBoundCheck stronger = stronger_rho_bound(code, c.workers, c.max_cells);
  emit(c, dump_json(derived_bound_json(weak, stronger)), out);
  return weak.holds && stronger.holds ? kOk : kAssertionFailed;
}

int cmd_export_table(const CommandSpec& c, std::ostream& out) {
  Func f = build_family(c);
  std::ostringstream os;
  write_table(f, os);
  emit(c, os.str(), out);
  return kOk;
}

int cmd_import_table(const CommandSpec& c, std::ostream& out) {
  require(!c.in_path.empty(), Errc::DegenerateParameters, "import-table needs --in");
  std::ifstream in(c.in_path);
  require(in.good(), Errc::ParseError, "cannot open " + c.in_path);
  Func f = read_table(in, c.max_cells);
  // re-emission is bit-exact, so import -> export round-trips byte-identically
  std::ostringstream os;
  write_table(f, os);
  emit(c, os.str(), out);
  return kOk;
}

int cmd_report(const CommandSpec& c, std::ostream& out) {
  AmdCode code = build_code(build_family(c));
  SuccessProfile profile = evaluate(code, ModelSet{}, c.workers, c.max_cells);
  BoundReport bounds = optimality_verdict(code, profile);
  DerivedBoundCheck weak_bound = derived_nonlinearity_bound(code, c.workers, c.max_cells);
  StrongerBoundCheck stronger_bound = stronger_rho_bound(code, c.workers, c.max_cells);

  Json j;
  j["code"] = build_json(c, code);
  // every probability below assumes these; other source priors are out of scope
  j["assumptions"] = Json::object();
  j["assumptions"]["equiprobableSources"] = true;
  j["assumptions"]["equiprobableEncoding"] = true;
  j["profile"] = profile_json(code, profile);
  j["bounds"] = bounds_json(bounds);
  j["derive"] = derived_bound_json(weak_bound, stronger_bound);

  // seeded encode/decode round trip: dec(E(s)) = s on every draw
  SeededSampler sampler(c.seed);
  Sampler draw = [&](Idx bound) { return sampler(bound); };
  bool encode_ok = true;
  std::uint64_t trials = 4 * code.m;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Idx s = Idx(i % code.m);
    Codeword w = encode(code, s, draw);
    encode_ok = encode_ok && decode(code, w) == std::optional<Idx>(s);
  }
  j["encodeCheck"] = Json::object();
  j["encodeCheck"]["seed"] = c.seed;
  j["encodeCheck"]["trials"] = trials;
  j["encodeCheck"]["ok"] = encode_ok;

  // cross-module identities that must hold for every code
  bool identity_ok = profile.weak_rho == partial_nonlinearity_of(code.f, c.workers);
  bool ordering_ok = profile.weak_rho <= profile.strong_rho;
  bool floor_ok = profile.strong_rho >= Rational(1, code.nb);
  ClaimResult claims = check_family_claims(c, code, profile, bounds);
  Json checks;
  checks["weakRhoMatchesPartialNonlinearity"] = identity_ok;
  checks["weakRhoWithinStrongRho"] = ordering_ok;
  checks["strongRhoAboveFloor"] = floor_ok;
  checks["derivedBoundsHold"] = weak_bound.holds && stronger_bound.holds;
  checks["familyClaimsHold"] = claims.ok;
  j["checks"] = std::move(checks);

  emit(c, dump_json(j), out);
  bool all_ok = encode_ok && identity_ok && ordering_ok && floor_ok && claims.ok &&
                weak_bound.holds && stronger_bound.holds;
  return all_ok ? kOk : kAssertionFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"systematic AMD code toolkit"};
  app.require_subcommand(1);

  CommandSpec spec;
  if (const char* env = std::getenv("AMDKIT_MAX_CELLS")) {
    try {
      spec.max_cells = std::stoull(env);
    } catch (...) {
      err << "invalid AMDKIT_MAX_CELLS value\n";
      return kValidationError;
    }
  }

  auto add_common = [&](CLI::App* sub, bool family_required) {
    auto* fam = sub->add_option("--family", spec.family,
                                "mm | dillon | dillon-dual | trace-mult | cdfpw | table");
    if (family_required) fam->required();
    sub->add_option("--q", spec.q, "field size (prime power)");
    sub->add_option("--r", spec.r, "extension degree");
    sub->add_option("--t", spec.t, "polynomial family parameter");
    sub->add_option("--m1", spec.m1, "first cyclic factor");
    sub->add_option("--m2", spec.m2, "second cyclic factor");
    sub->add_option("--split", spec.split, "weak | strong")
        ->check(CLI::IsMember({"weak", "strong"}));
    sub->add_option("--seed", spec.seed, "sampler seed");
    sub->add_option("--workers", spec.workers, "parallel workers");
    sub->add_option("--max-cells", spec.max_cells, "size cap for exhaustive structures");
    sub->add_option("--in", spec.in_path, "input table path");
    sub->add_option("--out", spec.out_path, "output path, - for stdout");
    sub->add_option("--format", spec.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* build = app.add_subcommand("build", "construct a code and print (m, n, t, tag size)");
  add_common(build, true);
  build->parse_complete_callback([&] { spec.subcommand = "build"; });

  CLI::App* spectrum = app.add_subcommand("spectrum", "write the derivative-count CSV");
  add_common(spectrum, true);
  spectrum->add_flag("--restricted", spec.restricted, "offsets with nonzero source part only");
  spectrum->parse_complete_callback([&] { spec.subcommand = "spectrum"; });

  CLI::App* eval = app.add_subcommand("eval", "exhaustive success-probability profile");
  add_common(eval, true);
  eval->parse_complete_callback([&] { spec.subcommand = "eval"; });

  CLI::App* bounds = app.add_subcommand("bounds", "profile plus lower bounds and verdicts");
  add_common(bounds, true);
  bounds->parse_complete_callback([&] { spec.subcommand = "bounds"; });

  CLI::App* derive = app.add_subcommand("derive", "extract the code's function and check bounds");
  add_common(derive, false);
  derive->parse_complete_callback([&] { spec.subcommand = "derive"; });

  CLI::App* exp = app.add_subcommand("export-table", "write the function-table file");
  add_common(exp, true);
  exp->parse_complete_callback([&] { spec.subcommand = "export-table"; });

  CLI::App* imp = app.add_subcommand("import-table", "read and re-emit a function-table file");
  add_common(imp, false);
  imp->parse_complete_callback([&] { spec.subcommand = "import-table"; });

  CLI::App* report = app.add_subcommand("report", "bundle build, eval, bounds and derive");
  add_common(report, true);
  report->parse_complete_callback([&] { spec.subcommand = "report"; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kValidationError;
  }

  try {
    if (spec.subcommand == "build") return cmd_build(spec, out);
    if (spec.subcommand == "spectrum") return cmd_spectrum(spec, out);
    if (spec.subcommand == "eval") return cmd_eval(spec, out);
    if (spec.subcommand == "bounds") return cmd_bounds(spec, out);
    if (spec.subcommand == "derive") return cmd_derive(spec, out);
    if (spec.subcommand == "export-table") return cmd_export_table(spec, out);
    if (spec.subcommand == "import-table") return cmd_import_table(spec, out);
    if (spec.subcommand == "report") return cmd_report(spec, out);
    err << "no subcommand selected\n";
    return kValidationError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::SizeCapExceeded ? kSizeCap : kValidationError;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kValidationError;
  }
}

}  // namespace amdkit::cli
