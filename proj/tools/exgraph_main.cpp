// Command-line front door: generators, certificate-producing graph
// operations, parameter presets, experiment sweeps, JSON/CSV reporting.

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "exgraph/cycles.hpp"
#include "exgraph/expander.hpp"
#include "exgraph/gadgets.hpp"
#include "exgraph/generate.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/json_io.hpp"
#include "exgraph/kst.hpp"
#include "exgraph/oracle.hpp"
#include "exgraph/presets.hpp"
#include "exgraph/subdivision.hpp"

#ifndef EXGRAPH_VERSION
#define EXGRAPH_VERSION "0.0.0"
#endif

namespace {

using exg::Json;
using Clock = std::chrono::steady_clock;

constexpr const char* kSchema = "exgraph/1";

struct CommonOpts {
  std::string input_file;
  std::string generator;
  std::uint64_t seed = 0;
  std::string json_out;
  std::string csv_out;
  double budget_seconds = 0; // 0: unlimited
  bool timings = false;
};

struct SoftBudget {
  Clock::time_point start = Clock::now();
  double limit_seconds = 0;

  bool expired() const {
    if (limit_seconds <= 0) return false;
    return std::chrono::duration<double>(Clock::now() - start).count() > limit_seconds;
  }
};

void add_common(CLI::App* cmd, CommonOpts& c, bool needs_graph = true) {
  if (needs_graph) {
    auto* in = cmd->add_option("--input", c.input_file, "edge-list file ('n m' header)");
    auto* gen = cmd->add_option("--gen", c.generator,
                                "generator descriptor, e.g. pg-incidence:2 or random-gnp:12:0.3");
    in->excludes(gen);
  }
  cmd->add_option("--seed", c.seed, "seed for randomized pieces");
  cmd->add_option("--json", c.json_out, "JSON output path ('-' for stdout)");
  cmd->add_option("--csv", c.csv_out, "CSV projection output path");
  cmd->add_option("--budget", c.budget_seconds, "soft wall-clock budget in seconds");
  cmd->add_flag("--timings", c.timings, "include wall times in the report");
}

exg::Graph load_input(const CommonOpts& c) {
  if (!c.input_file.empty()) {
    std::ifstream in(c.input_file);
    if (!in) throw std::runtime_error("cannot open input file '" + c.input_file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return exg::Graph::parse(ss.str());
  }
  if (!c.generator.empty()) return exg::from_descriptor(c.generator, c.seed);
  throw std::runtime_error("one of --input or --gen is required");
}

exg::VertexSet parse_avoid(const std::string& csv) {
  std::vector<int> ids;
  std::stringstream ss(csv);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (!piece.empty()) ids.push_back(std::stoi(piece));
  }
  return exg::VertexSet(ids);
}

Json input_descriptor(const CommonOpts& c) {
  Json j;
  if (!c.input_file.empty()) {
    j["file"] = c.input_file;
  } else {
    j["generator"] = c.generator;
  }
  j["seed"] = c.seed;
  return j;
}

// CSV projection: one "key,value" row per scalar leaf of the report.
void flatten_csv(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items())
      flatten_csv(val, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    bool scalar = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalar = false;
    if (scalar) {
      std::string joined;
      for (const auto& v : j) {
        if (!joined.empty()) joined += ';';
        joined += v.dump();
      }
      out << prefix << ",\"" << joined << "\"\n";
    } else {
      int idx = 0;
      for (const auto& v : j) flatten_csv(v, prefix + "." + std::to_string(idx++), out);
    }
  } else {
    out << prefix << "," << j.dump() << "\n";
  }
}

int emit(const Json& report, const CommonOpts& c) {
  std::string text = report.dump(2) + "\n";
  if (c.json_out.empty() || c.json_out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(c.json_out);
    out << text;
  }
  if (!c.csv_out.empty()) {
    std::ofstream out(c.csv_out);
    out << "key,value\n";
    flatten_csv(report, "", out);
  }
  return 0;
}

Json envelope(const CommonOpts& c, const std::string& op) {
  Json j;
  j["schema"] = kSchema;
  j["tool_version"] = EXGRAPH_VERSION;
  j["op"] = op;
  j["input"] = input_descriptor(c);
  return j;
}

void attach_timing(Json& report, const CommonOpts& c, const SoftBudget& budget) {
  if (c.timings) {
    Json t;
    t["wall_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - budget.start).count();
    report["timings"] = std::move(t);
  }
}

// ---- one runner per subcommand ----

Json run_certify(const CommonOpts& c, double eps1, double k, const std::string& mode,
                 int trials) {
  exg::Graph g = load_input(c);
  exg::ExpanderParams p{eps1, k};
  exg::ExpansionCertificate cert;
  if (mode == "exact") {
    cert = exg::certify_expander(g, p);
  } else {
    cert = exg::certify_expander_sampled(g, p, {c.seed, trials});
  }
  Json r = envelope(c, "certify-expander");
  r["result"] = exg::expansion_certificate_to_json(cert);
  return r;
}

Json run_extract(const CommonOpts& c, double eps1, double k) {
  exg::Graph g = load_input(c);
  auto res = exg::extract_expander(g, k, eps1);
  Json r = envelope(c, "extract-expander");
  Json body;
  body["vertices"] = Json(res.vertices.ids());
  auto stats = exg::degree_stats(res.subgraph);
  body["order"] = res.subgraph.order();
  body["edges"] = res.subgraph.size();
  body["average_degree"] = boost::rational_cast<double>(stats.average);
  body["min_degree"] = stats.minimum;
  body["certificate"] = exg::expansion_certificate_to_json(res.certificate);
  // advisory deletion budget from the short-path lemma, reference only
  double x = res.subgraph.order() / 2.0;
  body["connect_deletion_budget"] = x * exg::epsilon(x, {eps1, k}) / 4.0;
  r["result"] = std::move(body);
  return r;
}

Json run_kst(const CommonOpts& c, int s, int t, const std::string& mode, int trials) {
  exg::Graph g = load_input(c);
  exg::KstResult res;
  if (mode == "exact") {
    res = exg::kst_free(g, s, t);
  } else {
    res = exg::kst_free_sampled(g, s, t, c.seed, trials);
  }
  Json r = envelope(c, "kst-check");
  r["params"] = Json{{"s", s}, {"t", t}, {"mode", mode}};
  r["result"] = exg::kst_result_to_json(res);
  r["result"]["extremal_bound"] = exg::kst_extremal_bound(g.order(), s, t);
  r["result"]["edges"] = g.size();
  return r;
}

Json run_build_hub(const CommonOpts& c, const std::string& avoid, int h1, int h2) {
  exg::Graph g = load_input(c);
  auto hub = exg::build_hub(g, parse_avoid(avoid), h1, h2);
  Json r = envelope(c, "build-hub");
  if (hub) {
    r["result"] = exg::hub_to_json(*hub);
    r["result"]["valid"] = exg::validate_hub(g, *hub, h1, h2).ok;
  } else {
    r["result"] = nullptr;
  }
  return r;
}

Json run_build_unit(const CommonOpts& c, const std::string& avoid, int h0, int h1, int h2,
                    int h3) {
  exg::Graph g = load_input(c);
  auto unit = exg::build_unit(g, parse_avoid(avoid), h0, h1, h2, h3);
  Json r = envelope(c, "build-unit");
  if (unit) {
    r["result"] = exg::unit_to_json(*unit);
    r["result"]["valid"] = exg::validate_unit(g, *unit, h0, h1, h2, h3).ok;
  } else {
    r["result"] = nullptr;
  }
  return r;
}

Json run_build_adjuster(const CommonOpts& c, const std::string& avoid, int d, int m,
                        int rr) {
  exg::Graph g = load_input(c);
  auto adj = exg::build_adjuster(g, parse_avoid(avoid), d, m, rr);
  Json r = envelope(c, "build-adjuster");
  r["params"] = Json{{"D", d}, {"m", m}, {"r", rr}};
  if (adj) {
    r["result"] = exg::adjuster_to_json(*adj);
    auto rep = exg::validate_adjuster(g, *adj, d, m, adj->slack);
    r["result"]["a4"] = rep.a4 == exg::A4Status::verified
                            ? "verified"
                            : (rep.a4 == exg::A4Status::failed ? "failed" : "unverified");
  } else {
    r["result"] = nullptr;
  }
  return r;
}

Json run_find_subdivision(const CommonOpts& c, int k, int ell, const std::string& strategy) {
  exg::Graph g = load_input(c);
  exg::SubdivisionOptions opts;
  if (strategy == "highdeg-cores") opts.strategy = exg::SubdivisionStrategy::highdeg_cores;
  if (strategy == "unit-cores") opts.strategy = exg::SubdivisionStrategy::unit_cores;
  auto cert = exg::find_balanced_subdivision(g, k, ell, opts);
  Json r = envelope(c, "find-subdivision");
  r["params"] = Json{{"k", k}, {"ell", ell}, {"strategy", strategy}};
  if (cert) {
    r["result"] = exg::subdivision_to_json(*cert);
    r["result"]["valid"] = exg::validate_subdivision(g, *cert).ok;
  } else {
    r["result"] = nullptr;
  }
  return r;
}

Json spectrum_body(const exg::Graph& g, int lo, int hi, std::uint64_t seed,
                   SoftBudget& budget, bool* exhausted) {
  if (g.order() <= 16) {
    return exg::spectrum_to_json(exg::cycle_spectrum_exact(g));
  }
  // search mode, budget-checked between targets
  exg::CycleSpectrum merged;
  merged.exact = false;
  for (int target = std::max(3, lo); target <= hi; ++target) {
    if (budget.expired()) {
      *exhausted = true;
      break;
    }
    auto one = exg::cycle_spectrum_search(g, target, target, seed);
    for (int len : one.lengths) {
      merged.lengths.push_back(len);
      merged.witnesses[len] = one.witnesses[len];
    }
  }
  return exg::spectrum_to_json(merged);
}

Json run_spectrum(const CommonOpts& c, int lo, int hi) {
  exg::Graph g = load_input(c);
  SoftBudget budget{Clock::now(), c.budget_seconds};
  bool exhausted = false;
  if (hi == 0) hi = g.order();
  Json r = envelope(c, "spectrum");
  r["result"] = spectrum_body(g, lo, hi, c.seed, budget, &exhausted);
  if (exhausted) r["result"]["budget_exhausted"] = true;
  attach_timing(r, c, budget);
  return r;
}

Json run_even_interval(const CommonOpts& c) {
  exg::Graph g = load_input(c);
  SoftBudget budget{Clock::now(), c.budget_seconds};
  bool exhausted = false;
  Json spec = spectrum_body(g, 3, g.order(), c.seed, budget, &exhausted);
  exg::CycleSpectrum s = exg::spectrum_from_json(spec);
  auto interval = exg::consecutive_even_interval(s);
  Json r = envelope(c, "even-interval");
  Json body;
  body["spectrum"] = std::move(spec);
  body["interval"] = interval ? Json(Json::array({interval->first, interval->second}))
                              : Json(nullptr);
  body["reciprocal_sum"] = boost::rational_cast<double>(exg::reciprocal_cycle_sum(s));
  if (exhausted) body["budget_exhausted"] = true;
  r["result"] = std::move(body);
  attach_timing(r, c, budget);
  return r;
}

Json run_regime_report(const CommonOpts& c, int s, int t, double eps1, double eps2,
                       double coef) {
  exg::Graph g = load_input(c);
  auto rep = exg::even_cycle_regime_report(g, s, t, eps1, eps2, coef, c.seed);
  Json r = envelope(c, "regime-report");
  r["params"] = Json{{"s", s}, {"t", t}, {"eps1", eps1}, {"eps2", eps2},
                     {"epsilon_coef", coef}};
  r["result"] = exg::regime_report_to_json(rep);
  return r;
}

Json run_preset_eval(double n, double d, int s, int t, double eps1, double eps2) {
  Json r;
  r["schema"] = kSchema;
  r["tool_version"] = EXGRAPH_VERSION;
  r["op"] = "preset-eval";
  r["params"] = Json{{"n", n}, {"d", d}, {"s", s}, {"t", t}, {"eps1", eps1}, {"eps2", eps2}};
  r["result"] = exg::preset_rows_to_json(exg::preset_eval(n, d, s, t, eps1, eps2));
  return r;
}

Json run_generate(const CommonOpts& c) {
  exg::Graph g = load_input(c);
  Json r = envelope(c, "generate");
  r["result"] = exg::graph_to_json(g);
  return r;
}

Json run_oracle(const CommonOpts& c, const std::string& which, int s, int t, int k, int ell,
                double eps1, double kk) {
  exg::Graph g = load_input(c);
  Json r = envelope(c, "oracle-" + which);
  if (which == "spectrum") {
    r["result"] = exg::spectrum_to_json(exg::oracle::brute_spectrum(g));
  } else if (which == "expansion") {
    r["result"] =
        exg::expansion_certificate_to_json(exg::oracle::brute_expansion(g, {eps1, kk}));
  } else if (which == "kst") {
    r["result"] = exg::kst_result_to_json(exg::oracle::brute_kst(g, s, t));
  } else if (which == "subdivision") {
    auto cert = exg::oracle::brute_subdivision(g, k, ell);
    r["result"] = cert ? exg::subdivision_to_json(*cert) : Json(nullptr);
  }
  return r;
}

// Fixed deterministic battery over generators; cells run in a small work
// pool and are assembled in descriptor order.
Json run_sweep(const CommonOpts& c) {
  const std::vector<std::string> descriptors = {
      "complete:6",
      "cycle:12",
      "hypercube:3",
      "kst-free-deletion:12:0.35:2:2",
      "path:10",
      "pg-incidence:2",
      "pg-incidence:3",
      "random-bipartite:7:7:0.4",
      "random-gnp:12:0.3",
  };
  SoftBudget budget{Clock::now(), c.budget_seconds};

  auto run_cell = [&](const std::string& desc) {
    Json cell;
    cell["descriptor"] = desc;
    exg::Graph g = exg::from_descriptor(desc, c.seed);
    cell["order"] = g.order();
    cell["edges"] = g.size();
    auto stats = exg::degree_stats(g);
    cell["average_degree"] = boost::rational_cast<double>(stats.average);

    bool exhausted = false;
    SoftBudget cell_budget{budget.start, c.budget_seconds};
    cell["spectrum"] = spectrum_body(g, 3, std::min(g.order(), 16), c.seed, cell_budget,
                                     &exhausted);
    auto spec = exg::spectrum_from_json(cell["spectrum"]);
    auto interval = exg::consecutive_even_interval(spec);
    cell["even_interval"] = interval
                                ? Json(Json::array({interval->first, interval->second}))
                                : Json(nullptr);

    exg::ExpanderParams p{0.4, 2.0};
    exg::ExpansionCertificate cert =
        g.order() <= 24 ? exg::certify_expander(g, p)
                        : exg::certify_expander_sampled(g, p, {c.seed, 32});
    cell["expansion"] = exg::expansion_certificate_to_json(cert);

    if (g.order() <= 20) {
      cell["kst22"] = exg::kst_result_to_json(exg::kst_free(g, 2, 2));
    } else {
      cell["kst22"] = exg::kst_result_to_json(exg::kst_free_sampled(g, 2, 2, c.seed, 64));
    }
    if (exhausted) cell["budget_exhausted"] = true;
    return cell;
  };

  std::vector<std::future<Json>> futures;
  futures.reserve(descriptors.size());
  for (const auto& desc : descriptors)
    futures.push_back(std::async(std::launch::async, run_cell, desc));

  Json r;
  r["schema"] = kSchema;
  r["tool_version"] = EXGRAPH_VERSION;
  r["op"] = "sweep";
  r["seed"] = c.seed;
  Json cells = Json::array();
  for (auto& f : futures) cells.push_back(f.get());
  r["cells"] = std::move(cells);
  attach_timing(r, c, budget);
  return r;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificate-producing graph algorithms: sublinear expanders, "
               "hubs/units/adjusters, balanced clique subdivisions, cycle spectra"};
  app.require_subcommand(1);

  CommonOpts certify_opts;
  double eps1 = 0.5, kk = 2.0, eps2 = 0.1, coef = 1.0;
  std::string mode = "exact";
  int trials = 64;
  auto* certify = app.add_subcommand("certify-expander", "expansion certificate for a graph");
  add_common(certify, certify_opts);
  certify->add_option("--eps1", eps1);
  certify->add_option("--k", kk);
  certify->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled"}));
  certify->add_option("--trials", trials);

  CommonOpts extract_opts;
  auto* extract = app.add_subcommand("extract-expander", "expander-subgraph extraction");
  add_common(extract, extract_opts);
  extract->add_option("--eps1", eps1);
  extract->add_option("--k", kk);

  CommonOpts kst_opts;
  int s = 2, t = 2;
  auto* kst = app.add_subcommand("kst-check", "K_{s,t}-freeness test");
  add_common(kst, kst_opts);
  kst->add_option("--s", s);
  kst->add_option("--t", t);
  kst->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled"}));
  kst->add_option("--trials", trials);

  CommonOpts hub_opts;
  int h0 = 2, h1 = 2, h2 = 1, h3 = 2;
  std::string avoid_csv;
  auto* hub = app.add_subcommand("build-hub", "greedy hub construction");
  add_common(hub, hub_opts);
  hub->add_option("--h1", h1);
  hub->add_option("--h2", h2);
  hub->add_option("--avoid", avoid_csv, "comma-separated vertex ids to keep clear of");

  CommonOpts unit_opts;
  auto* unit = app.add_subcommand("build-unit", "greedy unit construction");
  add_common(unit, unit_opts);
  unit->add_option("--avoid", avoid_csv, "comma-separated vertex ids to keep clear of");
  unit->add_option("--h0", h0);
  unit->add_option("--h1", h1);
  unit->add_option("--h2", h2);
  unit->add_option("--h3", h3);

  CommonOpts adj_opts;
  int dd = 2, mm = 4, rr = 1;
  auto* adj = app.add_subcommand("build-adjuster", "inductive adjuster construction");
  add_common(adj, adj_opts);
  adj->add_option("--avoid", avoid_csv, "comma-separated vertex ids to keep clear of");
  adj->add_option("--D", dd);
  adj->add_option("--m", mm);
  adj->add_option("--r", rr);

  CommonOpts sub_opts;
  int k = 3, ell = 2;
  std::string strategy = "auto";
  auto* sub = app.add_subcommand("find-subdivision", "balanced clique subdivision search");
  add_common(sub, sub_opts);
  sub->add_option("--k", k);
  sub->add_option("--ell", ell);
  sub->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "highdeg-cores", "unit-cores"}));

  CommonOpts spec_opts;
  int lo = 3, hi = 0;
  auto* spec = app.add_subcommand("spectrum", "cycle length spectrum");
  add_common(spec, spec_opts);
  spec->add_option("--lo", lo);
  spec->add_option("--hi", hi);

  CommonOpts interval_opts;
  auto* interval = app.add_subcommand("even-interval", "longest consecutive even cycle run");
  add_common(interval, interval_opts);

  CommonOpts regime_opts;
  auto* regime = app.add_subcommand("regime-report", "density regime classification");
  add_common(regime, regime_opts);
  regime->add_option("--s", s);
  regime->add_option("--t", t);
  regime->add_option("--eps1", eps1);
  regime->add_option("--eps2", eps2);
  regime->add_option("--epsilon-coef", coef);

  CommonOpts preset_opts;
  double pn = 100, pd = 4;
  auto* preset = app.add_subcommand("preset-eval", "derived parameter table");
  add_common(preset, preset_opts, /*needs_graph=*/false);
  preset->add_option("--n", pn)->required();
  preset->add_option("--d", pd)->required();
  preset->add_option("--s", s);
  preset->add_option("--t", t);
  preset->add_option("--eps1", eps1);
  preset->add_option("--eps2", eps2);

  CommonOpts gen_opts;
  auto* gen = app.add_subcommand("generate", "emit a generated graph as JSON");
  add_common(gen, gen_opts);

  CommonOpts sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "fixed deterministic battery over generators");
  add_common(sweep, sweep_opts, /*needs_graph=*/false);

  // hidden debugging subcommands backed by the brute-force oracles
  std::vector<CommonOpts> oracle_opts(4);
  std::vector<std::string> oracle_names = {"spectrum", "expansion", "kst", "subdivision"};
  std::vector<CLI::App*> oracle_cmds;
  for (size_t i = 0; i < oracle_names.size(); ++i) {
    auto* cmd = app.add_subcommand("oracle-" + oracle_names[i]);
    cmd->group(""); // hidden
    add_common(cmd, oracle_opts[i]);
    if (oracle_names[i] == "kst") {
      cmd->add_option("--s", s);
      cmd->add_option("--t", t);
    }
    if (oracle_names[i] == "subdivision") {
      cmd->add_option("--k", k);
      cmd->add_option("--ell", ell);
    }
    if (oracle_names[i] == "expansion") {
      cmd->add_option("--eps1", eps1);
      cmd->add_option("--k", kk);
    }
    oracle_cmds.push_back(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CommonOpts* active = nullptr;
  try {
    Json report;
    if (certify->parsed()) {
      active = &certify_opts;
      report = run_certify(certify_opts, eps1, kk, mode, trials);
    } else if (extract->parsed()) {
      active = &extract_opts;
      report = run_extract(extract_opts, eps1, kk);
    } else if (kst->parsed()) {
      active = &kst_opts;
      report = run_kst(kst_opts, s, t, mode, trials);
    } else if (hub->parsed()) {
      active = &hub_opts;
      report = run_build_hub(hub_opts, avoid_csv, h1, h2);
    } else if (unit->parsed()) {
      active = &unit_opts;
      report = run_build_unit(unit_opts, avoid_csv, h0, h1, h2, h3);
    } else if (adj->parsed()) {
      active = &adj_opts;
      report = run_build_adjuster(adj_opts, avoid_csv, dd, mm, rr);
    } else if (sub->parsed()) {
      active = &sub_opts;
      report = run_find_subdivision(sub_opts, k, ell, strategy);
    } else if (spec->parsed()) {
      active = &spec_opts;
      report = run_spectrum(spec_opts, lo, hi);
    } else if (interval->parsed()) {
      active = &interval_opts;
      report = run_even_interval(interval_opts);
    } else if (regime->parsed()) {
      active = &regime_opts;
      report = run_regime_report(regime_opts, s, t, eps1, eps2, coef);
    } else if (preset->parsed()) {
      active = &preset_opts;
      report = run_preset_eval(pn, pd, s, t, eps1, eps2);
    } else if (gen->parsed()) {
      active = &gen_opts;
      report = run_generate(gen_opts);
    } else if (sweep->parsed()) {
      active = &sweep_opts;
      report = run_sweep(sweep_opts);
    } else {
      for (size_t i = 0; i < oracle_cmds.size(); ++i) {
        if (oracle_cmds[i]->parsed()) {
          active = &oracle_opts[i];
          report = run_oracle(oracle_opts[i], oracle_names[i], s, t, k, ell, eps1, kk);
        }
      }
    }
    return emit(report, *active);
  } catch (const std::exception& e) {
    Json err;
    err["schema"] = kSchema;
    std::string type = "runtime";
    if (dynamic_cast<const exg::parse_error*>(&e)) type = "parse";
    else if (dynamic_cast<const exg::too_large_error*>(&e)) type = "too-large";
    else if (dynamic_cast<const exg::parity_error*>(&e)) type = "parity";
    else if (dynamic_cast<const std::domain_error*>(&e)) type = "domain";
    else if (dynamic_cast<const std::invalid_argument*>(&e)) type = "invalid-argument";
    err["error"] = Json{{"type", type}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
