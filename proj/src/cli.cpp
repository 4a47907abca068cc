#include "vitali/cli.hpp"

#include "vitali/constants.hpp"
#include "vitali/generators.hpp"
#include "vitali/instance_io.hpp"
#include "vitali/oracle.hpp"
#include "vitali/selection.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace vitali::cli {

using nlohmann::json;

namespace {

struct GenArgs {
  std::string kind = "cell";
  std::size_t d = 2;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t levels = 1;
  std::size_t n = 10;
  std::string law = "uniform";
  std::string a = "1/2", b = "1";
  std::string lambda = "4", mu = "2", r0 = "1";
  std::size_t windows = 2;
  std::size_t per_window = 4;
};

struct SelectArgs {
  std::string algo = "greedy";
  std::string in, out;
  std::optional<long> J;
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  std::optional<std::string> lo, hi;
  std::vector<std::string> windows;
  std::string unit = "sweep";
  std::size_t cap = kOracleCap;
};

struct TableArgs {
  int dmax = 20;
  std::string format = "tsv";
  bool compare = false;
  int digits = 3;
};

UnitSelector parse_unit(const std::string& s) {
  if (s == "sweep") return UnitSelector::sweep;
  if (s == "exact") return UnitSelector::exact;
  throw std::invalid_argument("unknown unit selector '" + s + "'");
}

const char* unit_name(UnitSelector u) { return u == UnitSelector::exact ? "exact" : "sweep"; }

Collection load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

int cmd_gen(const GenArgs& g, std::ostream& out) {
  GenSpec spec;
  spec.kind = parse_gen_kind(g.kind);
  spec.dim = g.d;
  spec.seed = g.seed;
  spec.levels = g.levels;
  spec.count = g.n;
  if (g.law == "uniform") spec.law.kind = RadiusLaw::Kind::uniform;
  else if (g.law == "loguniform") spec.law.kind = RadiusLaw::Kind::loguniform;
  else throw std::invalid_argument("unknown radius law '" + g.law + "'");
  spec.law.a = parse_scalar(g.a);
  spec.law.b = parse_scalar(g.b);
  if (spec.kind == GenSpec::Kind::lacunary) {
    spec.lacunary = LacunaryStructure::geometric(parse_scalar(g.r0), parse_scalar(g.lambda),
                                                 parse_scalar(g.mu), g.windows);
    spec.per_window = g.per_window;
  }
  Collection c = generate(spec);
  json j = instance_to_json(c, gen_spec_to_json(spec));
  if (g.out.empty()) out << j.dump(2) << '\n';
  else write_json_file(g.out, j);
  return kOk;
}

int cmd_volume(const std::string& in, const std::string& method, std::ostream& out) {
  Collection c = load_instance(in);
  VolumeMethod m;
  if (method == "compression") m = VolumeMethod::compression;
  else if (method == "ie" || method == "inclusion_exclusion") m = VolumeMethod::inclusion_exclusion;
  else throw std::invalid_argument("unknown volume method '" + method + "'");
  Scalar v = union_volume(c, m);
  out << "volume " << to_string(v) << '\n' << "decimal " << to_decimal(v, 12) << '\n';
  return kOk;
}

std::optional<LacunaryStructure> structure_from_meta(const Collection&, const json& meta) {
  if (!meta.is_object() || !meta.contains("windows") || !meta.contains("lambda") || !meta.contains("mu"))
    return std::nullopt;
  std::vector<Window> windows;
  for (const auto& w : meta["windows"])
    windows.emplace_back(parse_scalar(w.at(0).get<std::string>()), parse_scalar(w.at(1).get<std::string>()));
  return LacunaryStructure(std::move(windows), parse_scalar(meta["lambda"].get<std::string>()),
                           parse_scalar(meta["mu"].get<std::string>()));
}

Window parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("window must be LO:HI, got '" + text + "'");
  return Window(parse_scalar(text.substr(0, colon)), parse_scalar(text.substr(colon + 1)));
}

int cmd_select(const SelectArgs& a, std::ostream& out) {
  json doc = read_json_file(a.in);
  Collection c = instance_from_json(doc);
  SelectorOptions opts{parse_unit(a.unit), a.cap};
  SelectionRecord rec;
  rec.algo = a.algo;
  rec.params["unit_selector"] = unit_name(opts.unit);

  if (a.algo == "greedy") {
    rec.params = json::object();
    rec.selection = greedy_vitali(c);
  } else if (a.algo == "congruent") {
    rec.selection = congruent_select(c, opts);
  } else if (a.algo == "window") {
    Scalar lo = c[0].radius(), hi = c[0].radius();
    for (const auto& cube : c) {
      lo = std::min(lo, cube.radius());
      hi = std::max(hi, cube.radius());
    }
    if (a.lo) lo = parse_scalar(*a.lo);
    if (a.hi) hi = parse_scalar(*a.hi);
    Window w(lo, hi);
    rec.params["window"] = {to_string(w.lo), to_string(w.hi)};
    rec.selection = window_select(c, w, opts);
  } else if (a.algo == "lacunary") {
    std::optional<LacunaryStructure> ls;
    if (!a.windows.empty()) {
      if (!a.lambda || !a.mu) throw std::invalid_argument("--window needs --lambda and --mu");
      std::vector<Window> ws;
      for (const auto& w : a.windows) ws.push_back(parse_window(w));
      ls.emplace(std::move(ws), parse_scalar(*a.lambda), parse_scalar(*a.mu));
    } else {
      ls = structure_from_meta(c, doc.value("meta", json()));
    }
    if (!ls) throw std::invalid_argument("lacunary selection needs --window/--lambda/--mu or generator meta");
    json windows = json::array();
    for (const auto& w : ls->windows) windows.push_back({to_string(w.lo), to_string(w.hi)});
    rec.params["windows"] = windows;
    rec.params["lambda"] = to_string(ls->lambda);
    rec.params["mu"] = to_string(ls->mu);
    rec.selection = lacunary_select(c, *ls, opts);
  } else if (a.algo == "pipeline") {
    std::optional<PipelineParams> p;
    if (a.J || a.lambda) {
      if (!a.J || !a.lambda) throw std::invalid_argument("pipeline needs both --J and --lambda (or neither)");
      p.emplace(*a.J, parse_scalar(*a.lambda), opts.unit);
    } else {
      p = auto_params(c.dim(), opts.unit);
    }
    rec.params["J"] = p->J;
    rec.params["lambda"] = to_string(p->lambda);
    rec.selection = pipeline_select(c, *p, a.cap);
  } else {
    throw std::invalid_argument("unknown algorithm '" + a.algo + "'");
  }

  json j = selection_to_json(rec);
  if (!a.out.empty()) write_json_file(a.out, j);
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_oracle(const std::string& in, std::size_t cap, std::ostream& out) {
  Collection c = load_instance(in);
  auto result = phi_exact(c, cap);
  out << "phi " << to_string(result.phi) << '\n' << "decimal " << to_decimal(result.phi, 12) << '\n';
  out << "witness";
  for (auto i : result.witness.indices) out << ' ' << i;
  out << '\n';
  return kOk;
}

std::string scientific(const Real& x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(6) << x;
  return s.str();
}

int cmd_table(const TableArgs& t, std::ostream& out) {
  if (t.format != "tsv" && t.format != "md") throw std::invalid_argument("format must be tsv or md");
  auto rows = bounds_table(t.dmax);
  std::vector<std::string> header = {"d", "L_d", "m_d", "m_d/3^d"};
  if (t.compare) header.insert(header.end(), {"vitali", "rado", "bdj", "ours"});

  auto emit = [&](const std::vector<std::string>& cells) {
    if (t.format == "tsv") {
      for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "\t" : "") << cells[k];
      out << '\n';
    } else {
      out << '|';
      for (const auto& cell : cells) out << ' ' << cell << " |";
      out << '\n';
    }
  };
  emit(header);
  if (t.format == "md") emit(std::vector<std::string>(header.size(), "---:"));
  for (const auto& r : rows) {
    std::vector<std::string> cells = {std::to_string(r.d), std::to_string(r.L),
                                      format_real(r.m, t.digits), format_real(r.m_over_3d, t.digits)};
    if (t.compare) {
      for (const Real* x : {&r.vitali, &r.rado, &r.bdj, &r.ours}) cells.push_back(scientific(*x));
    }
    emit(cells);
  }
  return kOk;
}

int cmd_verify(const std::string& in, const std::string& sel, std::size_t cap, std::ostream& out) {
  Collection c = load_instance(in);
  SelectionRecord rec = selection_from_json(read_json_file(sel));
  auto report = verify_guarantee(c, rec.selection, cap);
  auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
  out << "disjoint " << flag(report.disjoint) << '\n';
  if (report.disjoint && report.in_range) {
    out << "achieved_ratio " << to_string(report.achieved) << " (" << flag(report.ratio_matches) << ")\n";
    out << "certified_bound " << to_string(rec.selection.certified_bound) << " <= achieved "
        << flag(report.certificate_holds) << '\n';
    if (report.phi)
      out << "phi " << to_string(*report.phi) << " >= achieved " << flag(*report.below_optimum) << '\n';
    else
      out << "phi skipped (" << c.size() << " cubes > cap " << cap << ")\n";
  }
  for (const auto& f : report.failures) out << "violation: " << f << '\n';
  return report.ok() ? kOk : kContractViolation;
}

int cmd_frontier(std::ostream& out) {
  auto cert = improvement_frontier();
  out << "frontier " << cert.dimension << '\n';
  for (std::size_t k = 0; k < cert.below.size(); ++k)
    out << "m_" << k + 1 << "/3^" << k + 1 << " = " << format_real(cert.below[k], 3) << " >= 1\n";
  out << "m_14/3^14 = " << format_real(cert.m_over_3d, 6) << " < 1\n";
  out << "L_14 = " << cert.L << " >= 9\n";
  out << "g(8) = " << format_real(cert.g8, 6) << " > 3/2 > g(9) = " << format_real(cert.g9, 6) << '\n';
  out << "g(L_14) = " << format_real(cert.g_at_L, 6) << " <= 3/2\n";
  out << "(2/3) g(L_14) = " << format_real(cert.induction_factor, 6) << " < 1\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjoint sub-collections of axis-parallel cubes"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate an instance file");
  g->add_option("--kind", gen.kind, "cell | dyadic | random | lacunary")->required();
  g->add_option("--d", gen.d, "dimension")->required();
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--out", gen.out, "output file (stdout when omitted)");
  g->add_option("--levels", gen.levels, "dyadic levels");
  g->add_option("--n", gen.n, "random: number of cubes");
  g->add_option("--law", gen.law, "random: uniform | loguniform");
  g->add_option("--a", gen.a, "random: smallest radius");
  g->add_option("--b", gen.b, "random: largest radius");
  g->add_option("--lambda", gen.lambda, "lacunary: gap factor");
  g->add_option("--mu", gen.mu, "lacunary: window ratio");
  g->add_option("--r0", gen.r0, "lacunary: bottom of the first window");
  g->add_option("--windows", gen.windows, "lacunary: number of windows");
  g->add_option("--per-window", gen.per_window, "lacunary: cubes per window");

  std::string volume_in, volume_method = "compression";
  auto* v = app.add_subcommand("volume", "exact union volume");
  v->add_option("--in", volume_in)->required();
  v->add_option("--method", volume_method, "compression | ie");

  SelectArgs sel;
  auto* s = app.add_subcommand("select", "run a selector");
  s->add_option("--algo", sel.algo, "greedy | congruent | window | lacunary | pipeline")->required();
  s->add_option("--in", sel.in)->required();
  s->add_option("--out", sel.out);
  s->add_option("--J", sel.J, "pipeline: number of residue classes");
  s->add_option("--lambda", sel.lambda, "pipeline/lacunary: lambda as P/Q");
  s->add_option("--mu", sel.mu, "lacunary: window ratio");
  s->add_option("--window", sel.windows, "lacunary: LO:HI, repeatable");
  s->add_option("--lo", sel.lo, "window: lower radius");
  s->add_option("--hi", sel.hi, "window: upper radius");
  s->add_option("--unit-selector", sel.unit, "sweep | exact");
  s->add_option("--cap", sel.cap, "oracle cap for the exact unit selector");

  std::string oracle_in;
  std::size_t oracle_cap = kOracleCap;
  auto* o = app.add_subcommand("oracle", "exact optimum by branch and bound");
  o->add_option("--in", oracle_in)->required();
  o->add_option("--cap", oracle_cap);

  TableArgs table;
  auto* t = app.add_subcommand("table", "constants table");
  t->add_option("--dmax", table.dmax)->required()->check(CLI::PositiveNumber);
  t->add_option("--format", table.format, "tsv | md");
  t->add_flag("--compare", table.compare, "add vitali/rado/bdj/ours columns");
  t->add_option("--digits", table.digits, "decimals for m_d columns")->check(CLI::Range(0, 45));

  std::string verify_in, verify_sel;
  std::size_t verify_cap = kOracleCap;
  auto* ver = app.add_subcommand("verify", "check a selection file against an instance");
  ver->add_option("--in", verify_in)->required();
  ver->add_option("--sel", verify_sel)->required();
  ver->add_option("--cap", verify_cap);

  auto* fr = app.add_subcommand("frontier", "verify the d >= 14 improvement argument");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (v->parsed()) return cmd_volume(volume_in, volume_method, out);
    if (s->parsed()) return cmd_select(sel, out);
    if (o->parsed()) return cmd_oracle(oracle_in, oracle_cap, out);
    if (t->parsed()) return cmd_table(table, out);
    if (ver->parsed()) return cmd_verify(verify_in, verify_sel, verify_cap, out);
    if (fr->parsed()) return cmd_frontier(out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::logic_error& e) {
    err << "contract violation: " << e.what() << '\n';
    return kContractViolation;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace vitali::cli
