#include "tatekit/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tatekit/corpus.hpp"
#include "tatekit/errors.hpp"
#include "tatekit/io.hpp"
#include "tatekit/linkage.hpp"

namespace tatekit {

namespace {

struct Window {
  int lo = -8, hi = 8;
};

Window parse_window(const std::string& s) {
  size_t c = s.find(':');
  if (c == std::string::npos || c == 0 || c + 1 == s.size())
    fail(errc::bad_input, "window must be lo:hi, got \"" + s + "\"");
  Window w;
  try {
    size_t used = 0;
    w.lo = std::stoi(s.substr(0, c), &used);
    if (used != c) throw std::invalid_argument("");
    std::string rest = s.substr(c + 1);
    w.hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    fail(errc::bad_input, "window must be lo:hi, got \"" + s + "\"");
  }
  if (w.lo > w.hi) fail(errc::bad_input, "window lower bound exceeds upper bound");
  return w;
}

u64 parse_seed(const std::string& s) {
  try {
    size_t used = 0;
    u64 v = std::stoull(s, &used, 16);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail(errc::bad_input, "seed must be hexadecimal, got \"" + s + "\"");
  }
}

Ideal ideal_by_labels(AlgebraPtr a, const std::string& csv) {
  std::vector<Vec> gens;
  std::istringstream ss(csv);
  std::string label;
  while (std::getline(ss, label, ','))
    if (!label.empty()) gens.push_back(label_vec(*a, label));
  return ideal_from_generators(a, gens);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text << "\n";
  else
    write_text_file(path, text + "\n");
}

struct CommonArgs {
  std::string algebra, mfile, nfile, window = "-8:8", seed, output;
  bool json = false;
};

AlgebraPtr load_algebra(const CommonArgs& c) {
  if (c.algebra.empty()) fail(errc::bad_input, "--algebra is required here");
  return read_algebra_file(c.algebra);
}

Module load_module(const std::string& path, AlgebraPtr fallback) {
  if (path.empty()) fail(errc::bad_input, "a module file is required here");
  return read_module_file(path, fallback);
}

void cmd_info(const CommonArgs& c, std::ostream& out) {
  AlgebraPtr a = load_algebra(c);
  out << a->name << ": characteristic " << a->fld.p() << ", dimension " << a->dim
      << "\n";
  out << "labels:";
  for (const auto& l : a->labels) out << " " << l;
  out << "\n";
  out << "gorenstein: " << (a->gorenstein ? "yes" : "no") << " (socle dimension "
      << a->socle_dim() << ")\n";
  if (!c.mfile.empty()) {
    Module m = load_module(c.mfile, a);
    StripResult s = strip_free(m);
    out << "module " << m.name << ": kdim " << m.kdim << ", minimal generators "
        << minimal_generators(m).cols << ", free rank " << s.stripped_rank
        << ", stable part " << s.stable.kdim << "\n";
  }
}

void cmd_gen(const CommonArgs& c, const std::string& family, int chr,
             const std::vector<int>& powers, const std::vector<std::string>& vars,
             const std::string& module_kind, const std::string& gens,
             std::ostream& out) {
  if (!module_kind.empty()) {
    AlgebraPtr a = load_algebra(c);
    std::vector<Vec> ideal_gens;
    if (module_kind == "residue") {
      ideal_gens = a->mgens;
    } else if (module_kind == "cyclic") {
      if (gens.empty()) fail(errc::bad_input, "--gens is required for a cyclic module");
      ideal_gens = ideal_by_labels(a, gens).gens;
    } else {
      fail(errc::bad_input, "unknown module kind \"" + module_kind + "\"");
    }
    // cyclic shorthand; the algebra is supplied at use time via --algebra
    std::string text = "{\"kind\":\"cyclic\",\"ideal\":[";
    for (size_t i = 0; i < ideal_gens.size(); ++i) {
      if (i) text += ",";
      text += "[";
      for (size_t j = 0; j < ideal_gens[i].size(); ++j) {
        if (j) text += ",";
        text += std::to_string(ideal_gens[i][j]);
      }
      text += "]";
    }
    text += "]}";
    emit(text, c.output, out);
    return;
  }
  if (family != "ci")
    fail(errc::bad_input, "unknown family \"" + family + "\" (supported: ci)");
  if (chr < 2) fail(errc::bad_input, "--char is required and must be a prime");
  if (powers.empty()) fail(errc::bad_input, "--powers is required for family ci");
  AlgebraPtr a = monomial_complete_intersection(PrimeField((u32)chr), powers, vars);
  // emit the shorthand: it re-parses to the same algebra and keeps its name
  std::string text = "{\"field\":{\"char\":" + std::to_string(chr) +
                     "},\"kind\":\"monomial_ci\",\"vars\":[";
  std::vector<std::string> used = vars.empty() ? default_variable_names(powers.size()) : vars;
  for (size_t i = 0; i < used.size(); ++i)
    text += std::string(i ? "," : "") + "\"" + used[i] + "\"";
  text += "],\"powers\":[";
  for (size_t i = 0; i < powers.size(); ++i)
    text += std::string(i ? "," : "") + std::to_string(powers[i]);
  text += "]}";
  emit(text, c.output, out);
}

void cmd_resolve(const CommonArgs& c, std::ostream& out) {
  Window w = parse_window(c.window);
  AlgebraPtr a = load_algebra(c);
  Module m = load_module(c.mfile, a);
  CompleteResolutionWindow r = complete_resolution(m, w.lo, w.hi);
  validate_complete_resolution(r);
  out << "complete resolution of " << m.name << " over " << a->name << "\n";
  for (int i = w.hi; i >= w.lo; --i) out << i << ": rank " << r.rank_at(i) << "\n";
}

void cmd_tate(const CommonArgs& c, const std::string& kind, std::ostream& out) {
  Window w = parse_window(c.window);
  AlgebraPtr a = load_algebra(c);
  Module m = load_module(c.mfile, a);
  Module n = load_module(c.nfile, a);
  TateTable t = kind == "ext" ? tate_ext(m, n, w.lo, w.hi) : tate_tor(m, n, w.lo, w.hi);
  if (c.json) {
    PeriodicityOptions po;
    if (!c.seed.empty()) po.iso.seed = parse_seed(c.seed);
    t.period = detect_periodicity(m, po);
    out << write_tate_table_json(t) << "\n";
    return;
  }
  for (int i = w.lo; i <= w.hi; ++i) out << (i > w.lo ? " " : "") << t.at(i);
  out << "\n";
}

void cmd_profile(const CommonArgs& c, std::ostream& out) {
  Window w = parse_window(c.window);
  AlgebraPtr a = load_algebra(c);
  Module m = load_module(c.mfile, a);
  BettiBassProfile p = profile(m, w.lo, w.hi);
  if (c.json) {
    out << write_profile_json(p) << "\n";
    return;
  }
  out << "betti:";
  for (int i = w.lo; i <= w.hi; ++i) out << " " << p.betti_at(i);
  out << "\nbass:";
  for (int i = w.lo; i <= w.hi; ++i) out << " " << p.bass_at(i);
  out << "\n";
}

void cmd_link(const CommonArgs& c, const std::string& ideal_csv, std::ostream& out) {
  AlgebraPtr a = load_algebra(c);
  Module m = load_module(c.mfile, a);
  LinkageDatum d = make_linkage_datum(
      a, ideal_csv.empty() ? zero_ideal(a) : ideal_by_labels(a, ideal_csv));
  Module r = restrict_module(m, d);
  Module l = link_operator(r);
  out << l.name << ": kdim " << l.kdim << " over " << l.alg->name << "\n";
  if (!c.output.empty()) write_text_file(c.output, write_module_json(l) + "\n");
}

int cmd_verify(const CommonArgs& c, int horizon, int threshold, std::ostream& out) {
  Window w = parse_window(c.window);
  Corpus corpus = builtin_corpus();
  if (!c.algebra.empty()) {
    AlgebraPtr a = read_algebra_file(c.algebra);
    bool present = false;
    for (const auto& ca : corpus.algebras)
      if (same_algebra(*ca.alg, *a)) present = true;
    if (!present)
      corpus.algebras.push_back(CorpusAlgebra{a, standard_modules(a),
                                              standard_gorenstein_ideals(a)});
  }
  BatteryOptions opt;
  opt.lo = w.lo;
  opt.hi = w.hi;
  opt.horizon = horizon;
  opt.threshold = threshold;
  if (!c.seed.empty()) opt.iso.seed = parse_seed(c.seed);
  std::vector<CheckReport> reports = run_battery(corpus, opt);
  if (c.json) {
    out << write_reports_json(reports) << "\n";
  } else {
    for (const auto& r : reports) out << render_report(r) << "\n";
    BatterySummary s = summarize(reports);
    out << reports.size() << " checks: " << s.verified << " verified, " << s.certified
        << " certified, " << s.consistent << " consistent, " << s.refuted
        << " refuted, " << s.rejected << " rejected (non-Gorenstein)\n";
  }
  return any_refuted(reports) ? 1 : 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Tate homological algebra over finite local Gorenstein algebras"};
  app.require_subcommand(1);

  CommonArgs c;
  std::string family = "ci", module_kind, gens, tate_kind, verify_scope, ideal_csv;
  int chr = 0, horizon = 12, threshold = 1;
  std::vector<int> powers;
  std::vector<std::string> vars;
  int exit_code = 0;

  auto add_common = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--algebra", c.algebra, "algebra file");
    sub->add_option("--M", c.mfile, "module file");
    if (with_n) sub->add_option("--N", c.nfile, "second module file");
    sub->add_option("--window", c.window, "degree window lo:hi, both inclusive");
    sub->add_option("--seed", c.seed, "hex seed for randomized isomorphism search");
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_option("-o,--output", c.output, "write output to this file");
  };

  CLI::App* info = app.add_subcommand("info", "describe an algebra or module");
  add_common(info, false);
  info->callback([&] { cmd_info(c, out); });

  CLI::App* gen = app.add_subcommand("gen", "generate algebra and module files");
  add_common(gen, false);
  gen->add_option("--family", family, "algebra family (ci)");
  gen->add_option("--char", chr, "field characteristic");
  gen->add_option("--powers", powers, "powers of the variables")->delimiter(',');
  gen->add_option("--vars", vars, "variable names")->delimiter(',');
  gen->add_option("--module", module_kind, "module kind (residue, cyclic)");
  gen->add_option("--gens", gens, "comma-separated generator labels");
  gen->callback([&] { cmd_gen(c, family, chr, powers, vars, module_kind, gens, out); });

  CLI::App* resolve = app.add_subcommand("resolve", "print complete resolution ranks");
  add_common(resolve, false);
  resolve->callback([&] { cmd_resolve(c, out); });

  CLI::App* tate = app.add_subcommand("tate", "stable ext or tor dimensions");
  tate->add_option("kind", tate_kind, "ext or tor")
      ->required()
      ->check(CLI::IsMember({"ext", "tor"}));
  add_common(tate, true);
  tate->callback([&] { cmd_tate(c, tate_kind, out); });

  CLI::App* prof = app.add_subcommand("profile", "stable betti and bass numbers");
  add_common(prof, false);
  prof->callback([&] { cmd_profile(c, out); });

  CLI::App* link = app.add_subcommand("link", "apply the linkage operator");
  add_common(link, false);
  link->add_option("--ideal", ideal_csv, "labels generating the linking ideal");
  link->callback([&] { cmd_link(c, ideal_csv, out); });

  CLI::App* verify = app.add_subcommand("verify", "run the consequence checks");
  verify->add_option("scope", verify_scope, "what to verify (all)")
      ->required()
      ->check(CLI::IsMember({"all"}));
  add_common(verify, false);
  std::string corpus_name = "builtin";
  verify->add_option("--corpus", corpus_name, "corpus name (builtin)")
      ->check(CLI::IsMember({"builtin"}));
  verify->add_option("--horizon", horizon, "ordinary-resolution horizon");
  verify->add_option("--threshold", threshold, "vanishing threshold degree");
  verify->callback([&] { exit_code = cmd_verify(c, horizon, threshold, out); });

  std::vector<const char*> argv;
  argv.push_back("tatekit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    if (e.get_exit_code() == 0) {
      int rc = app.exit(e, out, err);
      return rc == 0 ? 0 : 2;
    }
    app.exit(e, os, err);
    return 2;
  } catch (const tk_error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::budget_exhausted ? 3 : 2;
  }
  return exit_code;
}

}  // namespace tatekit
