#include "lpo/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpo/cyclotomic.hpp"
#include "lpo/io.hpp"
#include "lpo/numtheory.hpp"
#include "lpo/orbitope.hpp"
#include "lpo/search.hpp"
#include "lpo/verify.hpp"

namespace lpo {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

json envelope(const std::string& command, long long ell, const std::string& status,
              json records) {
  return {{"command", command},
          {"version", kToolVersion},
          {"ell", ell},
          {"status", status},
          {"records", std::move(records)}};
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "lpo";
  for (const auto& a : args) {
    s += ' ';
    s += a;
  }
  return s;
}

struct CommonOpts {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_format_flag(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

std::vector<LegendrePairRecord> pairs_from_file(const std::string& path) {
  std::vector<LegendrePairRecord> pairs;
  for (const auto& line : load_sequences(path)) {
    if (!line.v) throw std::runtime_error(path + ": expected pair lines (u v)");
    auto val = validate_lp(line.u, *line.v);
    if (!val.ok())
      throw std::runtime_error(path + ":" + std::to_string(line.line_number) +
                               ": pair rejected (" + val.reason + ")");
    pairs.push_back(std::move(*val.record));
  }
  return pairs;
}

void print_dim_text(std::ostream& out, const DimReport& r) {
  out << "ell " << r.ell << "  group "
      << (r.group == GroupKind::cyclic ? "cyclic" : "affine") << "  dim " << r.dim_formula
      << "  rank-check " << r.dim_rank << (r.agrees ? "" : "  (MISMATCH)") << "  T {";
  for (size_t i = 0; i < r.T.size(); ++i) out << (i ? "," : "") << r.T[i];
  out << "}  psd-bound " << r.bounds.psd_lower;
  if (r.bounds.ingleton_base) {
    out << "  circulant-bound " << *r.bounds.ingleton_base;
    if (r.bounds.ingleton_improved) out << " improved " << *r.bounds.ingleton_improved;
  }
  out << "\n";
}

int cmd_construct(long long p, const CommonOpts& opts,
                  const std::vector<std::string>& args, std::ostream& out) {
  auto val = legendre_construct(p);
  if (!val.ok()) {
    if (opts.json())
      out << envelope(join_args(args), p, "error", json::array({val.reason})).dump(2)
          << "\n";
    else
      out << "rejected: " << val.reason << "\n";
    return kExitFail;
  }
  const auto& rec = *val.record;
  if (opts.json()) {
    out << envelope(join_args(args), p, "ok", json::array({record_json(rec)})).dump(2)
        << "\n";
  } else {
    out << "u = " << rec.u.str() << "\nv = " << rec.v.str() << "\n";
  }
  return kExitOk;
}

int cmd_search(const SearchConfig& cfg, const CommonOpts& opts,
               const std::vector<std::string>& args, std::ostream& out) {
  const auto res = search_lps(cfg);
  if (opts.json()) {
    // JSON-lines stream, one record per line
    for (const auto& rec : res.pairs) out << record_json(rec).dump() << "\n";
  } else {
    for (const auto& rec : res.pairs)
      out << rec.u.str() << " " << rec.v.str() << (rec.canonical ? "  *" : "") << "\n";
    out << "# pairs " << res.pairs.size() << "  candidates " << res.candidates
        << "  partitions " << res.partitions_done << "/" << res.partitions_total
        << (res.status == SearchStatus::budget_exhausted ? "  BUDGET EXHAUSTED" : "")
        << "\n";
  }
  (void)args;
  return res.status == SearchStatus::budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_dim(const std::vector<SignSeq>& seqs, GroupKind group, const CommonOpts& opts,
            const std::vector<std::string>& args, std::ostream& out) {
  json records = json::array();
  for (const auto& s : seqs) {
    const auto rep = dim_orbitope(s, group);
    if (opts.json())
      records.push_back(dim_report_json(rep));
    else
      print_dim_text(out, rep);
  }
  if (opts.json())
    out << envelope(join_args(args), seqs.empty() ? 0 : seqs.front().ell(), "ok",
                    std::move(records))
               .dump(2)
        << "\n";
  return kExitOk;
}

int cmd_feasible(long long ell, int jobs, const CommonOpts& opts,
                 const std::vector<std::string>& args, std::ostream& out) {
  SearchConfig cfg;
  cfg.ell = ell;
  cfg.mode = SearchMode::bucketed;
  cfg.jobs = jobs;
  const auto res = search_lps(cfg);
  const auto rep = feasible_set_dim(ell, res.pairs);
  const std::string status = rep.dim ? "ok" : "infeasible";
  if (opts.json()) {
    out << envelope(join_args(args), ell, status, json::array({feasible_json(rep)})).dump(2)
        << "\n";
  } else {
    out << "ell " << ell << "  ordered pairs " << rep.pair_count;
    if (rep.dim)
      out << "  dim " << *rep.dim << "\n";
    else
      out << "  infeasible (no pairs)\n";
  }
  return rep.dim ? kExitOk : kExitFail;
}

int cmd_projectors(long long ell, long long d, const CommonOpts& opts,
                   const std::vector<std::string>& args, std::ostream& out) {
  std::vector<long long> ds;
  if (d > 0)
    ds.push_back(d);
  else
    ds = divisors(ell);
  json records = json::array();
  for (long long dv : ds) {
    const auto p = projector(ell, dv);
    if (opts.json()) {
      records.push_back({{"d", dv}, {"den", p.den}, {"symbol", p.symbol}});
    } else {
      out << "P_" << dv << " = (1/" << p.den << ") circulant(";
      for (size_t i = 0; i < p.symbol.size(); ++i) out << (i ? "," : "") << p.symbol[i];
      out << ")  trace " << euler_phi(ell / dv) << "\n";
    }
  }
  if (opts.json())
    out << envelope(join_args(args), ell, "ok", std::move(records)).dump(2) << "\n";
  return kExitOk;
}

int cmd_vanish(long long ell, bool witness, int jobs, double budget,
               const CommonOpts& opts, const std::vector<std::string>& args,
               std::ostream& out) {
  if (witness) {
    const auto w = find_vanishing_witness(ell);
    const bool gate = w.status == WitnessStatus::absent_certain &&
                      !lam_leung_feasible((ell + 1) / 2, ell).has_value();
    const std::string status = gate ? "infeasible" : "ok";
    json rec{{"status", w.status == WitnessStatus::found          ? "found"
                        : w.status == WitnessStatus::absent_certain ? "absent-certain"
                                                                    : "absent-restricted"},
             {"note", w.note}};
    if (w.witness) {
      rec["witness"] = w.witness->str();
      json profile = json::array();
      for (const auto& o : vanishing_orbit_profile(w.witness->values()))
        profile.push_back({{"d", o.d}, {"vanishes", o.vanishes}});
      rec["orbit_profile"] = profile;
    }
    if (opts.json()) {
      out << envelope(join_args(args), ell, status, json::array({rec})).dump(2) << "\n";
    } else {
      out << "witness: " << (w.witness ? w.witness->str() : "(none)") << "  [" << w.note
          << "]\n";
    }
    return gate ? kExitFail : kExitOk;
  }
  const auto scan = scan_for_vanishing(ell, jobs, budget);
  json rec{{"candidates", scan.candidates},
           {"counterexample", scan.counterexample ? json(scan.counterexample->str())
                                                  : json(nullptr)}};
  if (opts.json()) {
    const std::string status =
        scan.status == SearchStatus::budget_exhausted ? "budget-exhausted" : "ok";
    out << envelope(join_args(args), ell, status, json::array({rec})).dump(2) << "\n";
  } else {
    out << "scanned " << scan.candidates << " candidates: "
        << (scan.counterexample ? "vanishing sequence " + scan.counterexample->str()
                                : "no vanishing DFT coefficient")
        << (scan.status == SearchStatus::budget_exhausted ? "  BUDGET EXHAUSTED" : "")
        << "\n";
  }
  return scan.status == SearchStatus::budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_bounds(long long ell, const CommonOpts& opts,
               const std::vector<std::string>& args, std::ostream& out) {
  json rec{{"ell", ell}, {"psd_lower", psd_rank_lower_bound(ell)}};
  std::ostringstream text;
  text << "ell " << ell << "\n";
  text << "totient-sum dim bound  " << psd_rank_lower_bound(ell) << "\n";
  for (const auto& [p, n] : factorize(ell)) {
    rec["tau"][std::to_string(p)] = tau(ell, p);
    text << "tau(" << ell << "," << p << ")  " << tau(ell, p) << "\n";
  }
  const auto f = factorize(ell);
  if (f.size() == 2 && (f[0].n == 1 || f[1].n == 1)) {
    const auto ib = ingleton_bound(ell);
    rec["circulant_rank_bound"] = ib.base;
    text << "circulant rank bound   " << ib.base << "\n";
    if (ib.improved) {
      rec["circulant_rank_bound_improved"] = *ib.improved;
      text << "improved rank bound    " << *ib.improved << "\n";
    }
  }
  if (opts.json())
    out << envelope(join_args(args), ell, "ok", json::array({rec})).dump(2) << "\n";
  else
    out << text.str();
  return kExitOk;
}

int cmd_hadamard(const std::string& path, const CommonOpts& opts,
                 const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  std::vector<LegendrePairRecord> pairs;
  try {
    pairs = pairs_from_file(path);
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kExitFail;
  }
  json records = json::array();
  for (const auto& rec : pairs) {
    const IntMatrix h = build_hadamard(rec);
    const size_t n = h.rows();
    IntMatrix gram = h * h.transposed();
    IntMatrix want(n, n);
    for (size_t i = 0; i < n; ++i) want.at(i, i) = static_cast<long>(n);
    if (!(gram == want)) {
      err << "hadamard: H H' != (2 ell + 2) I\n";
      return kExitFail;
    }
    if (opts.json()) {
      json rows = json::array();
      for (size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (size_t j = 0; j < n; ++j) row.push_back(h.at(i, j).get_si());
        rows.push_back(std::move(row));
      }
      records.push_back({{"ell", rec.ell}, {"order", n}, {"check", "ok"}, {"rows", rows}});
    } else {
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) out << (h.at(i, j) > 0 ? '+' : '-');
        out << "\n";
      }
      out << "# order " << n << "  H H' = " << n << " I verified\n";
    }
  }
  if (opts.json())
    out << envelope(join_args(args), pairs.empty() ? 0 : pairs.front().ell, "ok",
                    std::move(records))
               .dump(2)
        << "\n";
  return kExitOk;
}

int cmd_verify(long long ell, const std::string& suite, const std::string& in_file,
               int jobs, const CommonOpts& opts, const std::vector<std::string>& args,
               std::ostream& out, std::ostream& err) {
  std::vector<LegendrePairRecord> pairs;
  std::vector<SuiteCheck> rejected;
  if (!in_file.empty()) {
    for (const auto& line : load_sequences(in_file)) {
      if (!line.v) throw CLI::ValidationError("verify", "--in expects pair lines");
      auto val = validate_lp(line.u, *line.v);
      if (val.ok())
        pairs.push_back(std::move(*val.record));
      else
        rejected.push_back({"pair at line " + std::to_string(line.line_number), false,
                            "rejected (" + val.reason + ")"});
    }
  } else {
    SearchConfig cfg;
    cfg.ell = ell;
    cfg.mode = SearchMode::bucketed;
    cfg.jobs = jobs;
    try {
      pairs = search_lps(cfg).pairs;
    } catch (const std::invalid_argument&) {
      // length too large for the exhaustive pair search; pair suites will
      // report that nothing was checked
      out << "# pair search infeasible at ell " << ell << "; supply --in fixtures\n";
    }
  }

  std::vector<std::string> suites;
  if (suite == "all")
    suites = verify_suite_names();
  else
    suites.push_back(suite);

  bool all_pass = rejected.empty();
  json records = json::array();
  for (const auto& s : suites) {
    auto rep = run_verify_suite(s, ell, pairs, jobs);
    if (s == suites.front())
      for (const auto& r : rejected) rep.checks.insert(rep.checks.begin(), r),
          rep.pass = false;
    all_pass = all_pass && rep.pass;
    if (opts.json()) {
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      records.push_back({{"suite", rep.suite}, {"pass", rep.pass}, {"checks", checks}});
    } else {
      for (const auto& c : rep.checks)
        out << (c.pass ? "   ok " : " FAIL ") << rep.suite << ": " << c.name
            << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }
  }
  if (opts.json()) {
    out << envelope(join_args(args), ell, all_pass ? "ok" : "error", std::move(records))
               .dump(2)
        << "\n";
  } else {
    out << "# pairs checked " << pairs.size() << "; verdict "
        << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  if (!all_pass) err << "verify: at least one check failed\n";
  return all_pass ? kExitOk : kExitFail;
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for Legendre pairs and their orbitope dimensions"};
  app.require_subcommand(1);

  CommonOpts opts;

  // construct
  long long construct_ell = 0;
  auto* c_construct = app.add_subcommand("construct", "quadratic-residue pair at a prime");
  c_construct->add_option("--ell", construct_ell, "odd prime, 3 mod 4")->required();
  add_format_flag(c_construct, opts);

  // search
  SearchConfig scfg;
  std::string mode = "bucketed", dedup = "none";
  auto* c_search = app.add_subcommand("search", "find Legendre pairs");
  c_search->add_option("--ell", scfg.ell, "odd length")->required();
  c_search->add_option("--mode", mode, "search mode")
      ->check(CLI::IsMember({"bucketed", "exhaustive", "construct"}));
  c_search->add_option("--dedup", dedup, "dedup mode")
      ->check(CLI::IsMember({"none", "cyclic", "affine", "pair"}));
  c_search->add_option("--jobs", scfg.jobs, "worker threads");
  c_search->add_option("--max", scfg.max_results, "result cap");
  c_search->add_option("--budget", scfg.budget_seconds, "time budget in seconds");
  c_search->add_option("--cursor", scfg.cursor_file, "partition cursor file for resume");
  add_format_flag(c_search, opts);

  // dim
  std::string dim_file, dim_seq, dim_group = "cyclic";
  auto* c_dim = app.add_subcommand("dim", "orbitope dimension reports");
  c_dim->add_option("--in", dim_file, "sequence file");
  c_dim->add_option("--seq", dim_seq, "sign string");
  c_dim->add_option("--group", dim_group, "acting group")
      ->check(CLI::IsMember({"cyclic", "affine"}));
  add_format_flag(c_dim, opts);

  // feasible-dim
  long long feas_ell = 0;
  int feas_jobs = 1;
  auto* c_feas = app.add_subcommand("feasible-dim", "dimension of the feasible set");
  c_feas->add_option("--ell", feas_ell, "odd length")->required();
  c_feas->add_option("--jobs", feas_jobs, "worker threads");
  add_format_flag(c_feas, opts);

  // projectors
  long long proj_ell = 0, proj_d = 0;
  auto* c_proj = app.add_subcommand("projectors", "isotypic projector dumps");
  c_proj->add_option("--ell", proj_ell, "odd length")->required();
  c_proj->add_option("--d", proj_d, "single divisor");
  add_format_flag(c_proj, opts);

  // vanish
  long long van_ell = 0;
  bool van_witness = false;
  int van_jobs = 1;
  double van_budget = 0;
  auto* c_van = app.add_subcommand("vanish", "vanishing DFT coefficient tests");
  c_van->add_option("--ell", van_ell, "odd length")->required();
  c_van->add_flag("--witness", van_witness, "search for a vanishing witness");
  c_van->add_option("--jobs", van_jobs, "worker threads");
  c_van->add_option("--budget", van_budget, "time budget in seconds");
  add_format_flag(c_van, opts);

  // bounds
  long long bounds_ell = 0;
  auto* c_bounds = app.add_subcommand("bounds", "rank and dimension bounds");
  c_bounds->add_option("--ell", bounds_ell, "odd length")->required();
  add_format_flag(c_bounds, opts);

  // hadamard
  std::string had_file;
  auto* c_had = app.add_subcommand("hadamard", "assemble and check the bordered matrix");
  c_had->add_option("--in", had_file, "pair file")->required();
  add_format_flag(c_had, opts);

  // verify
  long long ver_ell = 0;
  std::string ver_suite = "all", ver_file;
  int ver_jobs = 1;
  auto* c_ver = app.add_subcommand("verify", "run theorem verification suites");
  c_ver->add_option("--ell", ver_ell, "odd length")->required();
  c_ver->add_option("--suite", ver_suite, "suite name")
      ->check(CLI::IsMember(
          {"psd", "dragomir", "main0", "main1", "projector", "vanishing", "bounds", "all"}));
  c_ver->add_option("--in", ver_file, "pair fixture file (default: search)");
  c_ver->add_option("--jobs", ver_jobs, "worker threads");
  add_format_flag(c_ver, opts);

  const std::vector<std::string> echo = args;
  try {
    std::reverse(args.begin(), args.end());  // CLI11 vector parse order
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*c_construct) return cmd_construct(construct_ell, opts, echo, out);
    if (*c_search) {
      scfg.mode = mode == "bucketed"    ? SearchMode::bucketed
                  : mode == "exhaustive" ? SearchMode::exhaustive
                                         : SearchMode::construct;
      scfg.dedup = dedup == "none"     ? DedupMode::none
                   : dedup == "cyclic" ? DedupMode::cyclic
                   : dedup == "affine" ? DedupMode::affine
                                       : DedupMode::pair;
      return cmd_search(scfg, opts, echo, out);
    }
    if (*c_dim) {
      std::vector<SignSeq> seqs;
      if (!dim_seq.empty()) seqs.push_back(SignSeq::parse(dim_seq));
      if (!dim_file.empty())
        for (const auto& line : load_sequences(dim_file)) {
          seqs.push_back(line.u);
          if (line.v) seqs.push_back(*line.v);
        }
      if (seqs.empty()) {
        err << "dim: provide --seq or --in\n";
        return kExitUsage;
      }
      return cmd_dim(seqs, dim_group == "cyclic" ? GroupKind::cyclic : GroupKind::affine,
                     opts, echo, out);
    }
    if (*c_feas) return cmd_feasible(feas_ell, feas_jobs, opts, echo, out);
    if (*c_proj) return cmd_projectors(proj_ell, proj_d, opts, echo, out);
    if (*c_van)
      return cmd_vanish(van_ell, van_witness, van_jobs, van_budget, opts, echo, out);
    if (*c_bounds) return cmd_bounds(bounds_ell, opts, echo, out);
    if (*c_had) return cmd_hadamard(had_file, opts, echo, out, err);
    if (*c_ver) return cmd_verify(ver_ell, ver_suite, ver_file, ver_jobs, opts, echo, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace lpo
