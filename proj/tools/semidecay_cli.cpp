// semidecay: decay exponents, Harish-Chandra estimates, Kazhdan constants and orbit packing.
//
// Exit codes: 0 success, 1 invariant failure, 2 usage or unsupported input.

#include "semidecay/catalog_io.hpp"
#include "semidecay/error.hpp"
#include "semidecay/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace semidecay;

namespace {

struct Options {
  std::string group = "sl3";
  int n = 0;
  std::optional<int> m;
  std::string field = "R";
  std::string rep = "standard";
  std::string t = "1";
  long samples = 100000;
  std::uint64_t seed = 7;
  double epsilon = 0.1;
  bool bound_check = false;
  std::string n_range = "2:8";
  std::string m_range = "2:8";
  std::string example = "sl3-standard";
  std::string c0_grid = "2^-4:2^-9";
  long resolution = 1000;
  std::vector<std::string> only;
  std::string catalog;
  std::string format = "text";
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupSpec resolve_group(const Options& o) {
  const Family f = parse_family(o.group);
  int n = o.n;
  if (o.group == "sl2" || o.group == "sl3") {
    const int fixed = o.group == "sl2" ? 2 : 3;
    if (n != 0 && n != fixed) throw UsageError("--group " + o.group + " fixes n = " + std::to_string(fixed));
    n = fixed;
  }
  if (n == 0) n = f == Family::SL ? 3 : 2;
  return make_group(f, n, o.m, parse_field(o.field));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "' (expected lo:hi)");
  }
}

// "2^-4:2^-9" (every power in between) or a comma list of decimals.
std::vector<double> parse_c0_grid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return parse_list(text);
  auto power = [&](const std::string& s) {
    if (s.rfind("2^", 0) != 0) throw UsageError("c0 grid bounds must look like 2^-k");
    try {
      return std::stoi(s.substr(2));
    } catch (const std::exception&) {
      throw UsageError("bad exponent in '" + s + "'");
    }
  };
  const int a = power(text.substr(0, colon)), b = power(text.substr(colon + 1));
  std::vector<double> out;
  for (int k = a; a >= b ? k >= b : k <= b; k += a >= b ? -1 : 1) out.push_back(std::ldexp(1.0, k));
  return out;
}

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  fs::path path(o.out);
  if (path.is_relative())
    if (const char* dir = std::getenv("SEMIDECAY_OUT_DIR"); dir && *dir) path = fs::path(dir) / path;
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- exponents ---------------------------------------------------------------

int cmd_exponents(const Options& o) {
  const GroupSpec g = resolve_group(o);
  const RepKind rep = parse_rep(o.rep);
  struct Row {
    std::string mechanism;
    std::optional<ExponentReport> report;
    std::string note;
  };
  std::vector<Row> rows;
  rows.push_back({"baseline", baseline_exponent(g, rep), ""});  // errors here are fatal
  auto attempt = [&](const std::string& name, auto&& fn) {
    try {
      rows.push_back({name, fn(), ""});
    } catch (const Error& e) {
      rows.push_back({name, std::nullopt, std::string(errc_name(e.code()))});
    }
  };
  attempt("shell_improvement", [&] { return improved_exponent(g, rep); });
  attempt("howe_product", [&] { return howe_product_exponent(g, rep); });
  attempt("rank1_beta", [&] { return rank1_prime_exponent(g, rep); });
  const BestExponent best = best_exponent(g, rep);

  if (o.format == "json") {
    json j = {{"group", group_name(g)}, {"group_spec", group_to_json(g)}, {"rep", rep_id(rep)}};
    json mech = json::object();
    for (const auto& r : rows)
      mech[r.mechanism] = r.report ? to_json(*r.report) : json{{"unavailable", r.note}};
    j["mechanisms"] = mech;
    j["best"] = {{"mechanism", best.mechanism}, {"p", to_json(best.report.p)}, {"m", best.report.m.str()}};
    emit(o, dump(j));
  } else if (o.format == "csv") {
    std::string s = csv_line({"group", "rep", "mechanism", "p", "p_decimal", "m", "q", "gamma", "note"});
    for (const auto& r : rows)
      s += r.report ? csv_line({group_name(g), std::string(rep_id(rep)), r.mechanism, to_string(r.report->p),
                                to_decimal(r.report->p), r.report->m.str(), to_string(r.report->q),
                                r.report->gamma ? to_string(*r.report->gamma) : "", r.report->log_correction ? "log-correction" : ""})
                    : csv_line({group_name(g), std::string(rep_id(rep)), r.mechanism, "", "", "", "", "", r.note});
    emit(o, s);
  } else {
    std::vector<std::vector<std::string>> cells{{"mechanism", "p", "decimal", "m", "q", "gamma"}};
    for (const auto& r : rows) {
      if (r.report)
        cells.push_back({r.mechanism, to_string(r.report->p) + (r.report->log_correction ? " (+eps)" : ""),
                         to_decimal(r.report->p, 6), r.report->m.str(), to_string(r.report->q),
                         r.report->gamma ? to_string(*r.report->gamma) : "-"});
      else
        cells.push_back({r.mechanism, "-", "-", "-", "-", r.note});
    }
    emit(o, group_name(g) + " " + std::string(rep_id(rep)) + "\n" + aligned(cells) + "best: " + best.mechanism +
                " p = " + to_string(best.report.p) + ", m = " + best.report.m.str() + "\n");
  }
  return 0;
}

// --- table -------------------------------------------------------------------

int cmd_table(const Options& o) {
  const auto rows = remark_table(parse_range(o.n_range), parse_range(o.m_range));
  if (o.format == "json")
    emit(o, dump(table_json(rows)));
  else if (o.format == "csv")
    emit(o, table_csv(rows));
  else
    emit(o, table_text(rows));
  return 0;
}

// --- hc ----------------------------------------------------------------------

int cmd_hc(const Options& o) {
  const GroupSpec g = resolve_group(o);
  const std::vector<double> ts = parse_list(o.t);
  if (o.bound_check) {
    const HCBoundReport r = hc_bound_check(g, ts, o.epsilon, o.samples, o.seed);
    if (o.format == "json") {
      json j = to_json(r);
      j["group"] = group_name(g);
      j["seed"] = o.seed;
      emit(o, dump(j));
    } else {
      std::vector<std::vector<std::string>> cells{{"t", "xi", "std_error", "r", "damped"}};
      for (const auto& row : r.rows)
        cells.push_back({std::to_string(row.t), std::to_string(row.xi.value), std::to_string(row.xi.std_error),
                         std::to_string(row.r), std::to_string(row.damped)});
      emit(o, o.format == "csv" ? [&] {
        std::string s;
        for (const auto& c : cells) s += csv_line(c);
        return s;
      }()
                                : aligned(cells) + (r.passed ? "bound check: pass\n" : "bound check: FAIL\n"));
    }
    return r.passed ? 0 : 1;
  }
  json points = json::array();
  std::vector<std::vector<std::string>> cells{{"t", "value", "std_error", "n_samples", "seed"}};
  for (double t : ts) {
    const HCEstimate e = hc_estimate(ray_point(g, t), o.samples, o.seed);
    json p = to_json(e);
    p["t"] = t;
    points.push_back(p);
    cells.push_back({std::to_string(t), std::to_string(e.value), std::to_string(e.std_error),
                     std::to_string(e.n_samples), std::to_string(e.seed)});
  }
  if (o.format == "json") {
    emit(o, dump({{"group", group_name(g)}, {"points", points}}));
  } else if (o.format == "csv") {
    std::string s;
    for (const auto& c : cells) s += csv_line(c);
    emit(o, s);
  } else {
    emit(o, group_name(g) + "\n" + aligned(cells));
  }
  return 0;
}

// --- kazhdan -----------------------------------------------------------------

int cmd_kazhdan(const Options& o) {
  const GroupSpec g = resolve_group(o);
  const std::vector<double> ts = parse_list(o.t);
  if (ts.size() != 1) throw UsageError("kazhdan takes a single --t");
  const KazhdanReport r = kazhdan_for_set(g, parse_rep(o.rep), ray_point(g, ts[0]), o.samples, o.seed);
  if (o.format == "json") {
    json j = to_json(r);
    j["group"] = group_name(g);
    j["rep"] = o.rep;
    j["t"] = ts[0];
    emit(o, dump(j));
  } else {
    std::vector<std::vector<std::string>> cells{{"p", "m", "xi", "std_error", "kappa", "seed"},
                                                {to_string(r.p), r.m.str(), std::to_string(r.xi.value),
                                                 std::to_string(r.xi.std_error), std::to_string(r.kappa),
                                                 std::to_string(r.xi.seed)}};
    if (o.format == "csv") {
      emit(o, csv_line(cells[0]) + csv_line(cells[1]));
    } else {
      emit(o, group_name(g) + " " + o.rep + ", t = " + std::to_string(ts[0]) + "\n" + aligned(cells));
    }
  }
  return 0;
}

// --- orbit-pack --------------------------------------------------------------

int cmd_orbit_pack(const Options& o) {
  const ShellExample ex = parse_example(o.example);
  const std::vector<double> grid = parse_c0_grid(o.c0_grid);
  std::vector<PackingResult> results;
  std::vector<std::pair<double, long>> counts;
  long violations = 0;
  for (double c0 : grid) {
    results.push_back(greedy_pack(ex, c0, o.resolution, o.samples, o.seed));
    counts.emplace_back(c0, results.back().count);
    violations += results.back().violations;
  }
  std::optional<FitResult> fit;
  std::string fit_note;
  try {
    fit = fit_gamma(counts);
  } catch (const Error& e) {
    fit_note = e.what();
  }
  if (o.format == "json") {
    json pts = json::array();
    for (const auto& r : results) pts.push_back({{"c0", r.c0}, {"count", r.count}, {"violations", r.violations}});
    json j = {{"example", example_id(ex)}, {"points", pts}, {"samples", o.samples}, {"resolution", o.resolution},
              {"seed", o.seed}};
    j["gamma_fit"] = fit ? json(fit->slope) : json(nullptr);
    j["r2"] = fit ? json(fit->r_squared) : json(nullptr);
    if (!fit) j["fit_error"] = fit_note;
    emit(o, dump(j));
  } else {
    std::vector<std::vector<std::string>> cells{{"c0", "count", "violations"}};
    for (const auto& r : results)
      cells.push_back({std::to_string(r.c0), std::to_string(r.count), std::to_string(r.violations)});
    if (o.format == "csv") {
      std::string s;
      for (const auto& c : cells) s += csv_line(c);
      emit(o, s);
    } else {
      std::string tail = fit ? "gamma fit " + std::to_string(fit->slope) + ", r2 " + std::to_string(fit->r_squared) + "\n"
                             : "gamma fit unavailable: " + fit_note + "\n";
      emit(o, std::string(example_id(ex)) + ", seed " + std::to_string(o.seed) + "\n" + aligned(cells) + tail);
    }
  }
  return violations == 0 ? 0 : 1;
}

// --- verify / catalog ----------------------------------------------------------

Catalog chosen_catalog(const Options& o) { return o.catalog.empty() ? builtin_catalog() : load_catalog(o.catalog); }

int cmd_verify(const Options& o) {
  const VerifyReport r = run_verify(chosen_catalog(o), split_names(o.only));
  if (o.format == "json") {
    emit(o, dump(to_json(r)));
  } else if (o.format == "csv") {
    std::string s = csv_line({"suite", "name", "subject", "passed", "detail"});
    for (const auto& x : r.results) s += csv_line({x.suite, x.name, x.subject, x.passed ? "true" : "false", x.detail});
    emit(o, s);
  } else {
    std::map<std::string, std::pair<int, int>> tally;  // name -> (passed, total)
    std::vector<std::string> order;
    for (const auto& x : r.results) {
      if (!tally.count(x.name)) order.push_back(x.name);
      auto& t = tally[x.name];
      t.first += x.passed;
      ++t.second;
    }
    std::vector<std::vector<std::string>> cells{{"invariant", "passed", "checked"}};
    for (const auto& n : order)
      cells.push_back({n, std::to_string(tally[n].first), std::to_string(tally[n].second)});
    std::string tail = "all invariants hold\n";
    if (const auto* f = r.first_failure())
      tail = "FAILED: " + f->name + " on " + f->subject + ": " + f->detail + "\n";
    emit(o, aligned(cells) + tail);
  }
  if (const auto* f = r.first_failure()) {
    std::cerr << "invariant failed: " << f->name << " (" << f->subject << ")\n";
    return 1;
  }
  return 0;
}

int cmd_catalog(const Options& o) {
  emit(o, dump(catalog_to_json(chosen_catalog(o))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decay exponents for semidirect products G x| V, Harish-Chandra estimates, Kazhdan constants"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file overriding defaults");
  Options o;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--out", o.out, "output file (relative paths go under $SEMIDECAY_OUT_DIR)");
  };
  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "sl2, sl3, sl, sp2n, so1n, su1n, sp1n, sunm, spnm");
    c->add_option("--n", o.n, "family parameter n");
    c->add_option("--m", o.m, "second parameter m (SU(n,m), Sp(n,m))");
    c->add_option("--field", o.field, "R, C, H or p")->check(CLI::IsMember({"R", "C", "H", "p"}));
  };
  auto add_sampling = [&](CLI::App* c) {
    c->add_option("--samples", o.samples, "Monte Carlo sample count");
    c->add_option("--seed", o.seed, "random seed");
  };

  auto* exps = app.add_subcommand("exponents", "baseline, improved, Howe-product and rank-one exponents");
  add_group(exps);
  exps->add_option("--rep", o.rep, "standard or adjoint");
  add_format(exps);

  auto* table = app.add_subcommand("table", "best exponents for the standard families");
  table->add_option("--n-range", o.n_range, "lo:hi");
  table->add_option("--m-range", o.m_range, "lo:hi (only m >= n is used)");
  add_format(table);

  auto* hc = app.add_subcommand("hc", "Monte Carlo Harish-Chandra function along the ray a_t");
  add_group(hc);
  hc->add_option("--t", o.t, "comma-separated t values");
  add_sampling(hc);
  hc->add_flag("--bound-check", o.bound_check, "run the delta_B bound shape check over the t values");
  hc->add_option("--epsilon", o.epsilon, "epsilon of the bound check");
  add_format(hc);

  auto* kaz = app.add_subcommand("kazhdan", "Kazhdan constant for (G x| V, V) with Q = {K, a_t}");
  add_group(kaz);
  kaz->add_option("--rep", o.rep, "standard or adjoint");
  kaz->add_option("--t", o.t, "ray parameter of h");
  add_sampling(kaz);
  add_format(kaz);

  auto* pack = app.add_subcommand("orbit-pack", "greedy packing of disjoint K-translates of the shell");
  pack->add_option("--example", o.example, "sl3-standard, sl2-adjoint or so12-standard");
  pack->add_option("--c0-grid", o.c0_grid, "2^-a:2^-b or a comma list");
  pack->add_option("--samples", o.samples, "shell samples per cell");
  pack->add_option("--seed", o.seed, "random seed");
  pack->add_option("--resolution", o.resolution, "grid points over the parameter domain");
  add_format(pack);

  auto* ver = app.add_subcommand("verify", "run the structural invariant suites");
  ver->add_option("--only", o.only, "suites: catalog, lattice, exponents, kazhdan");
  ver->add_option("--catalog", o.catalog, "catalog data file instead of the built-in one");
  add_format(ver);

  auto* cat = app.add_subcommand("catalog", "write the catalog data file");
  cat->add_option("--catalog", o.catalog, "catalog data file to re-emit");
  add_format(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // Sampling defaults differ per command unless given explicitly.
  if (pack->parsed() && pack->count("--samples") == 0) o.samples = 20000;
  if (pack->parsed() && pack->count("--seed") == 0) o.seed = 11;

  try {
    if (exps->parsed()) return cmd_exponents(o);
    if (table->parsed()) return cmd_table(o);
    if (hc->parsed()) return cmd_hc(o);
    if (kaz->parsed()) return cmd_kazhdan(o);
    if (pack->parsed()) return cmd_orbit_pack(o);
    if (ver->parsed()) return cmd_verify(o);
    if (cat->parsed()) return cmd_catalog(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
