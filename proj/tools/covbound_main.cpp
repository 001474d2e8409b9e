#include <omp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covbound/bounds.hpp"
#include "covbound/claims.hpp"
#include "covbound/config.hpp"
#include "covbound/covering.hpp"
#include "covbound/errors.hpp"
#include "covbound/families.hpp"
#include "covbound/insdel.hpp"
#include "covbound/listdecode.hpp"
#include "covbound/lrc.hpp"
#include "covbound/oracle.hpp"
#include "covbound/tables.hpp"

using nlohmann::json;
using namespace covbound;

namespace {

std::string word_str(const Word& w) {
  std::string s;
  for (Fel d : w) s += d < 10 ? char('0' + d) : char('a' + d - 10);
  return s;
}

std::string real_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void print_budget_line() {
  std::fprintf(stderr, "budget: %llu elementary operations\n",
               static_cast<unsigned long long>(work_budget()));
}

json bound_row_json(const BoundResult& r) {
  json j;
  j["name"] = r.name;
  j["citation"] = r.citation;
  j["applicable"] = r.applicable;
  if (!r.applicable) j["reason"] = r.reason;
  if (r.value) j["value"] = r.value->get_str();
  if (r.value_real) j["value_real"] = real_str(*r.value_real);
  if (!r.closed_form.empty()) j["closed_form"] = r.closed_form;
  if (!r.assumptions.empty()) j["assumptions"] = r.assumptions;
  j["counts_for_tightest"] = r.counts_for_tightest;
  return j;
}

std::string bound_value_str(const BoundResult& r) {
  if (!r.applicable) return "-";
  if (r.value) return r.value->get_str();
  if (r.value_real) return real_str(*r.value_real);
  return "-";
}

void print_bound_table(const std::vector<BoundResult>& rows, int tightest) {
  std::printf("%-34s %-18s %-10s %s\n", "bound", "value", "citation", "notes");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BoundResult& r = rows[i];
    std::string notes;
    if (!r.applicable)
      notes = "inapplicable: " + r.reason;
    else if (static_cast<int>(i) == tightest)
      notes = "<- tightest";
    else if (!r.counts_for_tightest)
      notes = "reference only";
    std::printf("%-34s %-18s %-10s %s\n", r.name.c_str(),
                bound_value_str(r).c_str(), r.citation.c_str(), notes.c_str());
    for (const std::string& a : r.assumptions)
      std::printf("%-34s   note: %s\n", "", a.c_str());
  }
}

LoadedCode load(const std::string& path) { return read_code_file(path); }

LinearCode require_linear(const LoadedCode& lc, const char* who) {
  if (!lc.is_linear())
    fail(Errc::bad_params, std::string(who) + " needs a linear code file");
  return *lc.linear;
}

// ---- subcommand runners ----

int run_bound_eval(int q, int n, std::optional<int> d, std::optional<int> dlist,
                   long L, std::optional<int> k, bool linear,
                   std::optional<double> c, const std::string& format) {
  CodeParams p;
  p.q = q;
  p.n = n;
  p.d = d;
  p.d_list = dlist;
  p.L = L;
  p.k = k;
  p.linear = linear;
  LadderResult ladder = bound_ladder(p, {}, {}, c);
  if (format == "json") {
    json j;
    j["q"] = q;
    j["n"] = n;
    if (d) j["d"] = *d;
    if (dlist) j["d_list"] = *dlist;
    j["L"] = L;
    json rows = json::array();
    for (const BoundResult& r : ladder.rows) rows.push_back(bound_row_json(r));
    j["rows"] = rows;
    j["tightest"] = ladder.tightest;
    std::printf("%s\n", j.dump(2).c_str());
  } else if (format == "csv") {
    std::printf("name,citation,applicable,value,reason\n");
    for (const BoundResult& r : ladder.rows)
      std::printf("%s,%s,%d,%s,%s\n", r.name.c_str(), r.citation.c_str(),
                  r.applicable ? 1 : 0, bound_value_str(r).c_str(),
                  r.reason.c_str());
  } else {
    print_bound_table(ladder.rows, ladder.tightest);
    if (ladder.tightest >= 0)
      std::printf("tightest: %s = %s\n",
                  ladder.rows[ladder.tightest].name.c_str(),
                  bound_value_str(ladder.rows[ladder.tightest]).c_str());
  }
  print_budget_line();
  return 0;
}

int run_radius(const std::string& path, const std::string& method) {
  LoadedCode lc = load(path);
  RadiusMethod m = RadiusMethod::auto_pick;
  if (method == "exhaustive") m = RadiusMethod::exhaustive;
  if (method == "coset") m = RadiusMethod::coset_leader;
  RadiusResult rr = lc.is_linear() ? covering_radius(*lc.linear, m)
                                   : covering_radius(*lc.words, m);
  std::printf("radius: %d\n", rr.radius);
  std::printf("method: %s\n", rr.method.c_str());
  std::printf("exact: %s\n", rr.exact ? "true" : "false");
  std::printf("witness: %s\n", word_str(rr.witness).c_str());
  print_budget_line();
  return 0;
}

int run_weights(const std::string& path) {
  LoadedCode lc = load(path);
  std::vector<std::uint64_t> hist = lc.is_linear()
                                        ? weight_distribution(*lc.linear)
                                        : weight_distribution(*lc.words);
  for (std::size_t w = 0; w < hist.size(); ++w)
    if (hist[w] > 0)
      std::printf("A_%zu = %llu\n", w,
                  static_cast<unsigned long long>(hist[w]));
  print_budget_line();
  return 0;
}

int run_family(const std::string& name,
               const std::vector<std::string>& params,
               const std::string& points, const std::string& out) {
  FamilySpec spec;
  spec.name = name;
  for (const std::string& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(Errc::bad_params, "--param expects key=value, got: " + kv);
    try {
      spec.params[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
    } catch (const std::exception&) {
      fail(Errc::bad_params, "--param value not an integer: " + kv);
    }
  }
  if (!points.empty()) {
    std::vector<int> pts;
    std::stringstream ss(points);
    std::string tok;
    while (std::getline(ss, tok, ','))
      try {
        pts.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(Errc::bad_params, "--points entry not an integer: " + tok);
      }
    spec.rs_points = pts;
  }
  FamilyCode fc = construct(spec);
  write_code_file(out, format_code(fc.code));
  std::printf("family: %s\n", fc.name.c_str());
  std::printf("parameters: [%d,%d]_%d\n", fc.code.n(), fc.code.k(),
              fc.code.q());
  std::printf("advertised distance: %d\n", fc.advertised_d);
  if (fc.advertised_radius)
    std::printf("advertised radius: %d (%s)\n", *fc.advertised_radius,
                fc.radius_exact ? "exact" : "upper bound");
  std::printf("description: %s\n", fc.description.c_str());
  std::printf("wrote: %s\n", out.c_str());
  print_budget_line();
  return 0;
}

int run_search(int q, int n, int radius, std::uint64_t seed, int restarts,
               const std::string& out) {
  CoverSearchResult res = greedy_covering_search(q, n, radius, seed, restarts);
  std::printf("size: %llu\n",
              static_cast<unsigned long long>(res.code.size()));
  std::printf("radius: %d (verified)\n", res.radius);
  std::printf("best_restart: %d\n", res.best_restart);
  if (!out.empty()) {
    write_code_file(out, format_code(res.code));
    std::printf("wrote: %s\n", out.c_str());
  }
  print_budget_line();
  return 0;
}

int run_listdecode(const std::string& path, int radius) {
  LoadedCode lc = load(path);
  ListProfile prof = max_list_size(lc.materialized(), radius);
  std::printf("radius: %d\n", prof.radius);
  std::printf("max_list_size: %llu\n",
              static_cast<unsigned long long>(prof.max_count));
  std::printf("witness_center: %s\n", word_str(prof.witness_center).c_str());
  print_budget_line();
  return 0;
}

int run_insdel(const std::string& path) {
  LoadedCode lc = load(path);
  InsdelReport rep = insdel_report(lc.materialized());
  std::printf("n: %d\n", rep.n);
  std::printf("size: %llu\n", static_cast<unsigned long long>(rep.size));
  std::printf("dimension: %d%s\n", rep.k_eff,
              rep.k_exact ? "" : " (floor of log_q size)");
  std::printf("insdel_distance: %d\n", rep.insdel_dist);
  std::printf("hamming_distance: %d\n", rep.hamming_dist);
  std::printf("all_ones_word: %s\n", rep.has_all_ones ? "present" : "absent");
  for (const InsdelCheck& chk : rep.checks) {
    if (!chk.applicable)
      std::printf("check %-28s skipped: %s\n", chk.name.c_str(),
                  chk.reason.c_str());
    else
      std::printf("check %-28s d_insdel %d <= %d  %s  [%s]\n",
                  chk.name.c_str(), rep.insdel_dist, chk.limit,
                  chk.holds ? "holds" : "VIOLATED", chk.citation.c_str());
  }
  if (!rep.size_bounds.empty()) {
    std::printf("size bounds at inferred Hamming distance:\n");
    print_bound_table(rep.size_bounds, -1);
  }
  print_budget_line();
  for (const InsdelCheck& chk : rep.checks)
    if (chk.applicable && !chk.holds) return 1;
  return 0;
}

std::vector<RecoveryCertificate> read_certs(const std::string& path,
                                            int delta) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open certificate file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("certificate file: ") + e.what());
  }
  if (!j.is_array())
    fail(Errc::parse_error, "certificate file must be a JSON list of index sets");
  std::vector<RecoveryCertificate> certs;
  int coord = 0;
  for (const json& set : j) {
    if (!set.is_array())
      fail(Errc::parse_error, "certificate entries must be index lists");
    RecoveryCertificate cert;
    cert.coordinate = coord++;
    cert.delta = delta;
    for (const json& v : set) cert.support.push_back(v.get<int>());
    certs.push_back(std::move(cert));
  }
  return certs;
}

int run_lrc(const std::string& path, int delta, const std::string& certs_path) {
  LinearCode c = require_linear(load(path), "lrc");
  if (!certs_path.empty()) {
    std::vector<RecoveryCertificate> certs = read_certs(certs_path, delta);
    int r = 1;
    for (const RecoveryCertificate& cert : certs)
      r = std::max(r, static_cast<int>(cert.support.size()) - (delta - 1));
    RDeltaVerdict v = verify_r_delta(c, r, delta, certs);
    std::printf("r: %d (from certificate cardinalities)\n", r);
    std::printf("delta: %d\n", delta);
    std::printf("verdict: %s\n", v.ok ? "valid" : "INVALID");
    if (!v.ok) {
      std::printf("failing_coordinate: %d\n",
                  v.failing_coordinate.value_or(-1));
      std::printf("reason: %s\n", v.reason.c_str());
    }
    print_budget_line();
    return v.ok ? 0 : 1;
  }

  OptimalityReport rep = classify_optimal(c, delta);
  std::printf("locality r: %d\n", rep.r);
  std::printf("delta: %d\n", rep.delta);
  std::printf("distance: %d\n", rep.d);
  std::printf("ceiling: %d  [%s]\n", rep.ceiling, rep.bound_name.c_str());
  if (rep.optimal)
    std::printf("classification: Singleton-optimal\n");
  else
    std::printf("classification: defect %d\n", rep.defect);
  for (const RecoveryCertificate& cert : rep.profile.per_coordinate) {
    if (cert.degenerate) {
      std::printf("coordinate %d: identically zero (locality undefined)\n",
                  cert.coordinate);
      continue;
    }
    if (!cert.covered) {
      std::printf("coordinate %d: in no parity check\n", cert.coordinate);
      continue;
    }
    std::string sup;
    for (int pos : cert.support) sup += std::to_string(pos) + " ";
    std::printf("coordinate %d: recovery set { %s}\n", cert.coordinate,
                sup.c_str());
  }

  LrcQuery qy;
  qy.n = c.n();
  qy.k = c.k();
  qy.r = rep.r;
  qy.delta = delta;
  qy.q = c.q();
  qy.R = (rep.d - 1) / 2 >= 1 ? std::optional<int>((rep.d - 1) / 2)
                              : std::nullopt;
  print_bound_table(lrc_bounds(qy), -1);
  print_budget_line();
  return 0;
}

int run_oracle(const std::string& kind, int q, int n, std::optional<int> d,
               std::optional<int> R, std::optional<std::uint64_t> cap) {
  if (cap) set_oracle_cap(*cap);
  OracleResult res;
  if (kind == "A") {
    if (!d) fail(Errc::missing_param, "oracle A needs --d");
    res = exact_A(q, n, *d);
    std::printf("A_%d(%d,%d) = %llu\n", q, n, *d,
                static_cast<unsigned long long>(res.value));
  } else {
    if (!R) fail(Errc::missing_param, "oracle K needs --R");
    res = exact_K(q, n, *R);
    std::printf("K_%d(%d,%d) = %llu\n", q, n, *R,
                static_cast<unsigned long long>(res.value));
  }
  std::printf("nodes: %llu\n", static_cast<unsigned long long>(res.nodes));
  std::printf("witness:\n");
  for (const Word& w : res.witness.words)
    std::printf("  %s\n", word_str(w).c_str());
  print_budget_line();
  return 0;
}

int run_verify(const std::string& only, const std::string& format) {
  print_budget_line();
  std::vector<ClaimResult> results = run_claims(only);
  int failed = 0;
  for (const ClaimResult& r : results)
    if (!r.pass) ++failed;

  if (format == "json") {
    // Deterministic across runs and worker counts: no timing fields.
    json j;
    json rows = json::array();
    for (const ClaimResult& r : results) {
      json row;
      row["id"] = r.id;
      row["citation"] = r.citation;
      row["expected"] = r.expected;
      row["computed"] = r.computed;
      row["verdict"] = r.pass ? "pass" : "fail";
      rows.push_back(row);
    }
    j["claims"] = rows;
    j["passed"] = static_cast<int>(results.size()) - failed;
    j["failed"] = failed;
    std::printf("%s\n", j.dump(2).c_str());
  } else if (format == "csv") {
    std::printf("claim_id,citation,expected,computed,verdict,ms\n");
    for (const ClaimResult& r : results)
      std::printf("%s,%s,\"%s\",\"%s\",%s,%.2f\n", r.id.c_str(),
                  r.citation.c_str(), r.expected.c_str(), r.computed.c_str(),
                  r.pass ? "pass" : "fail", r.ms);
  } else {
    std::printf("%-28s %-10s %-34s %-34s %s\n", "claim", "citation",
                "expected", "computed", "verdict");
    for (const ClaimResult& r : results)
      std::printf("%-28s %-10s %-34s %-34s %s\n", r.id.c_str(),
                  r.citation.c_str(), r.expected.c_str(), r.computed.c_str(),
                  r.pass ? "pass" : "FAIL");
    std::printf("%d/%zu claims pass\n",
                static_cast<int>(results.size()) - failed, results.size());
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering-code bound toolkit"};
  app.require_subcommand(1);

  std::uint64_t budget = 0;
  int threads = 0;
  app.add_option("--budget", budget,
                 "elementary-operation budget for scans")
      ->envname("COVBOUND_BUDGET");
  app.add_option("--threads", threads, "OpenMP worker count");

  // bound eval
  auto* bound = app.add_subcommand("bound", "parameter-space bounds");
  auto* eval = bound->add_subcommand("eval", "evaluate the bound ladder");
  int eq = 0, en = 0;
  std::optional<int> ed, edlist, ek;
  long eL = 1;
  bool elinear = false;
  std::optional<double> ec;
  std::string eformat = "table";
  eval->add_option("--q", eq, "field size")->required();
  eval->add_option("--n", en, "length")->required();
  eval->add_option("--d", ed, "minimum distance");
  eval->add_option("--dlist", edlist, "list-decoding radius");
  eval->add_option("--list", eL, "list size L");
  eval->add_option("--k", ek, "dimension");
  eval->add_flag("--linear", elinear, "linear code");
  eval->add_option("--c", ec, "constant for asymptotic bounds");
  eval->add_option("--format", eformat, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  // radius
  auto* radius = app.add_subcommand("radius", "covering radius of a code");
  std::string rpath, rmethod = "auto";
  radius->add_option("--code", rpath, "code file")->required();
  radius->add_option("--method", rmethod, "auto|exhaustive|coset")
      ->check(CLI::IsMember({"auto", "exhaustive", "coset"}));

  // weights
  auto* weights = app.add_subcommand("weights", "weight distribution");
  std::string wpath;
  weights->add_option("--code", wpath, "code file")->required();

  // family
  auto* family = app.add_subcommand("family", "construct a named code");
  std::string fname, fpoints, fout;
  std::vector<std::string> fparams;
  family->add_option("--name", fname, "family name")->required();
  family->add_option("--param", fparams, "key=value parameter (repeatable)");
  family->add_option("--points", fpoints, "evaluation points, comma-separated");
  family->add_option("--out", fout, "output code file")->required();

  // search cover
  auto* search = app.add_subcommand("search", "randomized searches");
  auto* cover = search->add_subcommand("cover", "greedy covering-code search");
  int sq = 0, sn = 0, sR = 0, srestarts = 0;
  std::uint64_t sseed = 1;
  std::string sout;
  cover->add_option("--q", sq, "field size")->required();
  cover->add_option("--n", sn, "length")->required();
  cover->add_option("--R", sR, "target covering radius")->required();
  cover->add_option("--seed", sseed, "random seed");
  cover->add_option("--restarts", srestarts, "randomized restarts");
  cover->add_option("--out", sout, "output code file");

  // listdecode
  auto* listdec = app.add_subcommand("listdecode", "maximum list size");
  std::string lpath;
  int lradius = 0;
  listdec->add_option("--code", lpath, "code file")->required();
  listdec->add_option("--radius", lradius, "list-decoding radius")->required();

  // insdel
  auto* insdel = app.add_subcommand("insdel", "insertion-deletion report");
  std::string ipath;
  insdel->add_option("--code", ipath, "code file")->required();

  // lrc
  auto* lrc = app.add_subcommand("lrc", "locality analysis");
  std::string lrcpath, lrccerts;
  int lrcdelta = 2;
  lrc->add_option("--code", lrcpath, "code file")->required();
  lrc->add_option("--delta", lrcdelta, "delta parameter (>= 2)");
  lrc->add_option("--certs", lrccerts, "JSON list of recovery index sets");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact brute-force values");
  auto* oa = oracle->add_subcommand("A", "maximum code size A_q(n,d)");
  auto* ok = oracle->add_subcommand("K", "minimum covering size K_q(n,R)");
  int oaq = 0, oan = 0, okq = 0, okn = 0;
  std::optional<int> oad, okR;
  std::optional<std::uint64_t> oacap, okcap;
  oa->add_option("--q", oaq, "field size")->required();
  oa->add_option("--n", oan, "length")->required();
  oa->add_option("--d", oad, "minimum distance");
  oa->add_option("--cap", oacap, "search-space cap (q^n must fit)");
  ok->add_option("--q", okq, "field size")->required();
  ok->add_option("--n", okn, "length")->required();
  ok->add_option("--R", okR, "covering radius");
  ok->add_option("--cap", okcap, "search-space cap (q^n must fit)");

  // verify
  auto* verify = app.add_subcommand("verify", "validation suites");
  auto* paper = verify->add_subcommand("paper", "run the claim registry");
  std::string vonly, vformat = "table";
  paper->add_option("--only", vonly, "run a single claim id");
  paper->add_option("--format", vformat, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (budget > 0) set_work_budget(budget);
    if (threads > 0) omp_set_num_threads(threads);

    if (eval->parsed()) {
      std::optional<double> c = ec;
      return run_bound_eval(eq, en, ed, edlist, eL, ek, elinear, c, eformat);
    }
    if (radius->parsed()) return run_radius(rpath, rmethod);
    if (weights->parsed()) return run_weights(wpath);
    if (family->parsed()) return run_family(fname, fparams, fpoints, fout);
    if (cover->parsed()) return run_search(sq, sn, sR, sseed, srestarts, sout);
    if (listdec->parsed()) return run_listdecode(lpath, lradius);
    if (insdel->parsed()) return run_insdel(ipath);
    if (lrc->parsed()) return run_lrc(lrcpath, lrcdelta, lrccerts);
    if (oa->parsed()) return run_oracle("A", oaq, oan, oad, {}, oacap);
    if (ok->parsed()) return run_oracle("K", okq, okn, {}, okR, okcap);
    if (paper->parsed()) return run_verify(vonly, vformat);
    std::fprintf(stderr, "error: no runnable subcommand\n");
    return 2;
  } catch (const ToolError& e) {
    std::fprintf(stderr, "error: %s: %s\n", errc_name(e.code()), e.what());
    switch (e.code()) {
      case Errc::budget_exceeded:
        return 3;
      case Errc::bad_params:
      case Errc::missing_param:
      case Errc::missing_aux:
      case Errc::not_prime_power:
      case Errc::out_of_range:
      case Errc::q_even:
      case Errc::parse_error:
      case Errc::io_error:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
