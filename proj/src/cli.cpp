#include "beztate/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "beztate/json_io.hpp"
#include "beztate/selftest.hpp"

namespace beztate::cli {

namespace {

struct HelpRequested {
  std::string text;
};

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return kPass;
    case Status::fail: return kCheckFailed;
    case Status::inconclusive: return kInconclusive;
  }
  return kCheckFailed;
}

void summarize(const Command& c, const Report& r, std::ostream& err) {
  if (c.quiet) return;
  std::size_t passed = 0;
  for (const auto& check : r.checks()) passed += check.status == Status::pass;
  err << r.title() << ": " << to_string(r.status()) << " (" << passed << "/" << r.checks().size() << " checks passed)\n";
  for (const auto& check : r.checks()) {
    if (check.status == Status::pass) continue;
    err << "  " << to_string(check.status) << ": " << check.name;
    if (!check.location.empty()) {
      err << " at (";
      for (std::size_t i = 0; i < check.location.size(); ++i) err << (i ? ", " : "") << check.location[i];
      err << ")";
    }
    if (!check.detail.empty()) err << ": " << check.detail;
    err << "\n";
    break;
  }
}

void emit(const Command& c, const Json& j, std::ostream& out) {
  const std::string text = dump(j);
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file || !(file << text)) throw std::runtime_error("cannot write " + c.output);
}

std::vector<Polynomial> load_forms(const std::string& path, const Field& field) {
  return forms_from_json(read_json_file(path), field);
}

int run_bezoutian(const Command& c, std::ostream& out, std::ostream& err) {
  const Field field = Field::parse(c.field);
  const auto forms = load_forms(c.forms_path, field);
  if (forms.empty()) throw InvalidInput("no forms given");
  if (c.n && forms.front().n() != *c.n)
    throw InvalidInput("--n " + std::to_string(*c.n) + " but the forms live in " + std::to_string(forms.front().n() + 1) +
                       " variables");
  const BezoutData b = bezoutian(forms, c.d);
  if (c.d && b.d != *c.d) throw InvalidInput("--d " + std::to_string(*c.d) + " but the forms have degree " + std::to_string(b.d));
  Json j = bezout_data_to_json(b);
  if (c.slice) j["slice"] = {{"a", *c.slice}, {"matrix", matrix_to_json(bezout_slice(b, *c.slice))}};
  emit(c, j, out);
  if (!c.quiet) err << "bezoutian: n=" << b.n << " d=" << b.d << " rho=" << b.rho << ", " << b.delta.as_polynomial().size() << " terms\n";
  return kPass;
}

int run_tate(const Command& c, std::ostream& out, std::ostream& err) {
  TateConfig cfg;
  cfg.field = Field::parse(c.field);
  if (!c.n || !c.d) throw UsageError("tate needs --n and --d");
  cfg.n = *c.n;
  cfg.d = *c.d;
  cfg.ell = c.ell;
  cfg.p_min = c.p_min;
  cfg.p_max = c.p_max;
  if (!c.subspace_path.empty()) cfg.subspace = load_forms(c.subspace_path, cfg.field);
  const TateWindow w = build_window(cfg, c.t_min, c.t_max);
  emit(c, window_to_json(w), out);
  if (!c.quiet)
    err << "tate: N=" << w.config.ambient_dim() << ", " << w.slices.size() << " slices for p in [" << cfg.p_min << ", "
        << cfg.p_max << "], t in [" << c.t_min << ", " << c.t_max << "]\n";
  return kPass;
}

int run_verify(const Command& c, std::ostream& out, std::ostream& err) {
  const Report report = verify_window(window_from_json(read_json_file(c.window_path)), c.check);
  emit(c, report_to_json(report, c.timing), out);
  summarize(c, report, err);
  return exit_code(report.status());
}

int run_syzygies(const Command& c, std::ostream& out, std::ostream& err) {
  const Field field = Field::parse(c.field);
  const KoszulSetup s = make_koszul_setup(load_forms(c.forms_path, field));
  Json j = {{"syzygies", syzygy_space_to_json(syzygy_space(s, c.degree))}};
  if (c.bezout) {
    if (s.m != s.n + 1) throw InvalidInput("--bezout needs exactly n+2 forms");
    Json tuples = Json::array();
    for (const auto& t : bezout_syzygies(s, c.degree)) tuples.push_back(forms_to_json(t));
    j["bezout"] = tuples;
  }
  if (!c.quiet) {
    const Json& space = j["syzygies"];
    err << "syzygies: degree " << c.degree << ", dim Syz = " << space["dim"] << ", dim Kosz = " << space["koszul_dim"] << "\n";
  }
  if (c.check.empty()) {
    emit(c, j, out);
    return kPass;
  }
  Report report;
  if (c.check == "duality") {
    report = syzygy_duality_check(s, c.degree);
  } else if (c.check == "generation") {
    report = generation_check(s, c.b_max.value_or(c.degree));
  } else {
    report = Report("koszul duality");
    const int i_lo = c.i.value_or(0);
    const int i_hi = c.i.value_or(s.m - s.n);
    const int a_lo = c.a.value_or(-1);
    const int a_hi = c.a.value_or(s.sigma + 1);
    for (int i = i_lo; i <= i_hi; ++i)
      for (int a = a_lo; a <= a_hi; ++a) report.merge(koszul_duality_check(s, i, a));
  }
  j["report"] = report_to_json(report, c.timing);
  emit(c, j, out);
  summarize(c, report, err);
  return exit_code(report.status());
}

int run_duality(const Command& c, std::ostream& out, std::ostream& err) {
  const Field field = Field::parse(c.field);
  const KoszulSetup s = make_koszul_setup(load_forms(c.forms_path, field));
  if (s.m != s.n) throw InvalidInput("apolarity needs exactly n+1 forms");
  const Report report = c.a ? apolarity_check(s, *c.a) : apolarity_check(s);
  Json matrices = Json::array();
  if (s.certificate.certified) {
    const int lo = c.a.value_or(0);
    const int hi = c.a.value_or(s.rho);
    for (int a = lo; a <= hi; ++a) matrices.push_back({{"a", a}, {"matrix", matrix_to_json(apolarity_matrix(s, a))}});
  }
  emit(c, {{"rho", s.rho}, {"matrices", matrices}, {"report", report_to_json(report, c.timing)}}, out);
  summarize(c, report, err);
  return exit_code(report.status());
}

int run_selftest_verb(const Command& c, std::ostream& out, std::ostream& err) {
  const Report report = run_selftest();
  emit(c, report_to_json(report, c.timing), out);
  summarize(c, report, err);
  return exit_code(report.status());
}

void add_shared(CLI::App* sub, Command& c) {
  sub->add_option("--field", c.field, "q for the rationals or p:MODULUS (default p:32003)");
  sub->add_flag("--quiet", c.quiet, "suppress the human-readable summary");
  sub->add_flag("--timing", c.timing, "include per-check durations in reports");
  sub->add_option("-o,--output", c.output, "write JSON here instead of standard output");
}

}  // namespace

Report verify_window(const TateWindow& w, const std::string& check) {
  const TateConfig& cfg = w.config;
  if (check == "complex") return verify_complex(w);
  if (check == "exactness") return verify_exactness(w);
  if (check == "cone") {
    Report report("mapping cone");
    for (int p = cfg.p_min; p < cfg.p_max; ++p)
      for (int t = w.t_min; t <= w.t_max; ++t) report.merge(mapping_cone_check(w, p, t));
    return report;
  }
  if (check != "generators") throw InvalidInput("unknown check \"" + check + "\"");
  Report report("generators");
  const int N = cfg.ambient_dim();
  for (int p = cfg.p_min; p <= cfg.p_max; ++p) {
    const int t = N - cfg.n + p;
    if (t < w.t_min || t > w.t_max) {
      report.note("p = " + std::to_string(p) + ": generator degree " + std::to_string(t) + " outside the window");
      continue;
    }
    report.merge(generator_degree_checks(w, p));
  }
  return report;
}

Command parse(const std::vector<std::string>& args) {
  Command c;
  CLI::App app{"Bezoutians, Tate resolutions of Veronese push-forwards, and Koszul dualities", "beztate"};
  app.require_subcommand(1);

  auto* bez = app.add_subcommand("bezoutian", "Bezoutian of n+1 forms");
  bez->add_option("--forms", c.forms_path, "JSON array of polynomials")->required();
  bez->add_option("--n", c.n, "expected number of variables minus one");
  bez->add_option("--d", c.d, "expected degree of the forms");
  bez->add_option("--slice", c.slice, "also emit the bidegree (rho-a, a) slice for this a");
  add_shared(bez, c);

  auto* tate = app.add_subcommand("tate", "window of the Tate resolution");
  tate->add_option("--n", c.n, "projective dimension")->required();
  tate->add_option("--d", c.d, "Veronese degree")->required();
  tate->add_option("--ell", c.ell, "twist")->required();
  tate->add_option("--p-min", c.p_min, "first cohomological index")->required();
  tate->add_option("--p-max", c.p_max, "last differential index")->required();
  tate->add_option("--t-min", c.t_min, "first internal degree")->required();
  tate->add_option("--t-max", c.t_max, "last internal degree")->required();
  tate->add_option("--subspace", c.subspace_path, "ordered basepoint-free forms spanning U");
  add_shared(tate, c);

  auto* verify = app.add_subcommand("verify", "check a window file");
  verify->add_option("--check", c.check, "complex, exactness, generators or cone")
      ->required()
      ->check(CLI::IsMember({"complex", "exactness", "generators", "cone"}));
  verify->add_option("window", c.window_path, "window JSON written by tate")->required();
  add_shared(verify, c);

  auto* syz = app.add_subcommand("syzygies", "syzygies of m+1 forms in one degree");
  syz->add_option("--forms", c.forms_path, "JSON array of polynomials")->required();
  syz->add_option("--degree", c.degree, "internal degree b")->required();
  syz->add_flag("--bezout", c.bezout, "also list the Bezout syzygies of degree b");
  syz->add_option("--check", c.check, "duality, generation or koszul-duality")
      ->check(CLI::IsMember({"duality", "generation", "koszul-duality"}));
  syz->add_option("--b-max", c.b_max, "top degree for the generation check (default: --degree)");
  syz->add_option("--i", c.i, "restrict koszul-duality to this homological degree");
  syz->add_option("--a", c.a, "restrict koszul-duality to this degree");
  add_shared(syz, c);

  auto* dual = app.add_subcommand("duality", "apolarity of a complete intersection");
  dual->add_option("--forms", c.forms_path, "JSON array of n+1 polynomials")->required();
  dual->add_option("--check", c.check, "apolarity")->required()->check(CLI::IsMember({"apolarity"}));
  dual->add_option("--a", c.a, "single degree (default: all of [0, rho])");
  add_shared(dual, c);

  auto* self = app.add_subcommand("selftest", "run the built-in golden fixtures");
  add_shared(self, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    throw HelpRequested{target->help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  c.verb = app.get_subcommands().front()->get_name();
  if (c.verb == "tate" && c.t_min > c.t_max) throw UsageError("--t-min exceeds --t-max");
  if (c.verb == "tate" && c.p_min > c.p_max) throw UsageError("--p-min exceeds --p-max");
  if (c.verb != "syzygies" || c.check != "generation") {
    if (c.b_max) throw UsageError("--b-max only applies to --check generation");
  }
  if (c.verb == "syzygies" && c.check != "koszul-duality" && (c.i || c.a))
    throw UsageError("--i and --a only apply to --check koszul-duality");
  return c;
}

int execute(const Command& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.verb == "bezoutian") return run_bezoutian(c, out, err);
    if (c.verb == "tate") return run_tate(c, out, err);
    if (c.verb == "verify") return run_verify(c, out, err);
    if (c.verb == "syzygies") return run_syzygies(c, out, err);
    if (c.verb == "duality") return run_duality(c, out, err);
    if (c.verb == "selftest") return run_selftest_verb(c, out, err);
    err << "error: unknown verb \"" << c.verb << "\"\n";
    return kUsageError;
  } catch (const UncertifiedInput& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command c;
  try {
    c = parse(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return execute(c, out, err);
}

}  // namespace beztate::cli
