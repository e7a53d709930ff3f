// relcop: exact node/cop-win reliability toolkit.
//
// Subcommands: poly, copwin, family, classify, enumerate, compare, umr,
// conjecture-h, roots, verify-paper. Exit codes: 0 success, 1 a verified
// property failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "relcop/copwin.hpp"
#include "relcop/enumerate.hpp"
#include "relcop/families.hpp"
#include "relcop/graph.hpp"
#include "relcop/relpoly.hpp"
#include "relcop/roots.hpp"
#include "relcop/umr.hpp"
#include "relcop/verify.hpp"

using json = nlohmann::ordered_json;
using namespace relcop;

namespace {

// graph6 alphabet starts at '?' (63); family specs always contain ':'
Graph graph_from_text(const std::string& text) {
  if (text.find(':') != std::string::npos) return build(FamilySpec::parse(text));
  return parse_graph6(text);
}

std::vector<std::pair<std::string, Graph>> gather_inputs(const std::string& literal, const std::string& file,
                                                         const std::string& family) {
  std::vector<std::pair<std::string, Graph>> out;
  if (!literal.empty()) out.emplace_back(literal, parse_graph6(literal));
  if (!family.empty()) {
    const Graph g = build(FamilySpec::parse(family));
    out.emplace_back(emit_graph6(g), g);
  }
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open graph6 file '" + file + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      out.emplace_back(line, parse_graph6(line));
    }
  }
  if (out.empty()) throw std::invalid_argument("no input graph (use --graph6, --graph6-file or --family)");
  return out;
}

std::optional<std::string> family_tag_of(const Graph& g) {
  const int n = g.n, m = g.edge_count();
  const CanonicalKey key = canonical_key(g);
  std::vector<FamilySpec> candidates;
  auto add = [&](FamilySpec::Tag tag, int p1, int p2 = 0, int p3 = 0) {
    FamilySpec s{};
    s.tag = tag;
    s.p1 = p1;
    s.p2 = p2;
    s.p3 = p3;
    candidates.push_back(s);
  };
  if (n >= 3 && m == n) add(FamilySpec::Tag::Cycle, n);
  if (n >= 2 && m == n - 1) add(FamilySpec::Tag::Star, n);
  if (n >= 5 && m == n) {
    add(FamilySpec::Tag::U, n);
    add(FamilySpec::Tag::A, n);
  }
  if (n >= 5 && m == n + 1) add(FamilySpec::Tag::B, n);
  if (n >= 2 && m >= n - 1 && m - (n - 1) <= n - 2) add(FamilySpec::Tag::H, n, m - (n - 1));
  if (m == n + 1 && n >= 5)
    for (int n2 = 0; 2 * n2 <= n - 5; ++n2) add(FamilySpec::Tag::F, n - 5 - 2 * n2, n2);
  for (const auto& spec : candidates) {
    try {
      if (canonical_key(build(spec)) == key) return spec.to_string();
    } catch (const std::exception&) {
      // candidate out of its parameter range; skip
    }
  }
  if (m == n + 1 && is_connected(g)) {
    try {
      const BicyclicType t = classify_bicyclic(g);
      FamilySpec base{};
      base.tag = t.kind == 1 ? FamilySpec::Tag::G1 : (t.kind == 2 ? FamilySpec::Tag::G2 : FamilySpec::Tag::G3);
      base.p1 = t.params[0];
      base.p2 = t.params[1];
      base.p3 = t.params[2];
      if (canonical_key(build(base)) == key) return base.to_string();
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

json poly_record(const std::string& g6, const Graph& g, const std::string& kind) {
  CoeffPoly p;
  std::string var = "x";
  if (kind == "cs") {
    p = cs_poly(g);
  } else if (kind == "cw") {
    p = cw_poly(g);
  } else if (kind == "nrel") {
    p = reliability_poly(g, ReliabilityMeasure::NodeConnected);
    var = "p";
  } else if (kind == "ncrel") {
    p = reliability_poly(g, ReliabilityMeasure::NodeCopwin);
    var = "p";
  } else if (kind == "ecrel") {
    p = reliability_poly(g, ReliabilityMeasure::EdgeCopwin);
    var = "q";
  } else {
    throw std::invalid_argument("--kind must be cs | cw | nrel | ncrel | ecrel");
  }
  json rec;
  rec["schema"] = "relcop.poly/1";
  rec["graph6"] = g6;
  rec["n"] = g.n;
  rec["m"] = g.edge_count();
  rec["kind"] = kind;
  rec["var"] = var;
  rec["coeffs"] = coeff_strings(p);
  rec["pretty"] = pretty(p, var);
  return rec;
}

json dominance_record(const DominanceReport& rep, ReliabilityMeasure measure, const std::string& g6,
                      const std::string& h6) {
  json rec;
  rec["schema"] = "relcop.dominance/1";
  rec["measure"] = measure_name(measure);
  rec["g"] = g6;
  rec["h"] = h6;
  rec["verdict"] = verdict_name(rep.verdict);
  rec["difference_coeffs"] = coeff_strings(rep.difference);
  rec["root_count_in_01"] = rep.root_count_in_01;
  rec["fastpath"] = rep.via_coeff_fastpath;
  json ws = json::array();
  for (const auto& [x, s] : rep.witnesses) ws.push_back(json{{"p", rat_to_string(x)}, {"sign", s}});
  rec["witnesses"] = ws;
  return rec;
}

int cmd_verify(const VerifyOptions& opts) {
  const auto results = run_paper_checks(opts);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.criterion << " (" << r.name
              << "): " << r.detail << "\n";
  }
  std::cout << (all_pass ? "verify-paper: all checks passed" : "verify-paper: FAILURES above") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact node reliability / node cop-win reliability toolkit"};
  app.require_subcommand(1);

  // ---- poly ----
  std::string poly_g6, poly_file, poly_family, poly_kind = "cs";
  auto* poly_cmd = app.add_subcommand("poly", "connected-set / cop-win / reliability polynomial of a graph");
  poly_cmd->add_option("--graph6", poly_g6, "graph6 literal");
  poly_cmd->add_option("--graph6-file", poly_file, "file with one graph6 per line");
  poly_cmd->add_option("--family", poly_family, "family spec, e.g. U:8 or G3:1,1,4");
  poly_cmd->add_option("--kind", poly_kind, "cs | cw | nrel | ncrel | ecrel")->capture_default_str();

  // ---- copwin ----
  std::string cw_g6, cw_file, cw_family;
  auto* copwin_cmd = app.add_subcommand("copwin", "cop-win and chordality status");
  copwin_cmd->add_option("--graph6", cw_g6, "graph6 literal");
  copwin_cmd->add_option("--graph6-file", cw_file, "file with one graph6 per line");
  copwin_cmd->add_option("--family", cw_family, "family spec");

  // ---- family ----
  std::string family_spec;
  auto* family_cmd = app.add_subcommand("family", "build a named family graph");
  family_cmd->add_option("--spec", family_spec, "family spec, e.g. B:9, H:9,3")->required();

  // ---- classify ----
  std::string cls_g6, cls_file, cls_family;
  auto* classify_cmd = app.add_subcommand("classify", "bicyclic type classification");
  classify_cmd->add_option("--graph6", cls_g6, "graph6 literal");
  classify_cmd->add_option("--graph6-file", cls_file, "file with one graph6 per line");
  classify_cmd->add_option("--family", cls_family, "family spec");

  // ---- enumerate ----
  int en_n = 0, en_m = 0;
  bool en_count = false;
  std::string en_out;
  auto* enum_cmd = app.add_subcommand("enumerate", "isomorph-free connected graphs with fixed cyclomatic number");
  enum_cmd->add_option("--n", en_n, "order")->required();
  enum_cmd->add_option("--cyclomatic", en_m, "cyclomatic number m (edges = n-1+m)")->required();
  enum_cmd->add_flag("--count", en_count, "print the count only");
  enum_cmd->add_option("--out", en_out, "spool graph6 lines to a file");

  // ---- compare ----
  std::string cmp_g, cmp_h, cmp_measure = "ncrel";
  auto* compare_cmd = app.add_subcommand("compare", "exact reliability dominance of two graphs on [0,1]");
  compare_cmd->set_help_flag("--help", "print help");  // frees -h/--h for the second graph
  compare_cmd->add_option("--g", cmp_g, "graph6 literal or family spec")->required();
  compare_cmd->add_option("--h", cmp_h, "graph6 literal or family spec")->required();
  compare_cmd->add_option("--measure", cmp_measure, "nrel | ncrel | ecrel")->capture_default_str();

  // ---- umr ----
  int umr_n = 0, umr_m = 0, umr_jobs = 1;
  std::string umr_measure = "ncrel";
  auto* umr_cmd = app.add_subcommand("umr", "search a class for uniformly most reliable graphs");
  umr_cmd->add_option("--n", umr_n, "order")->required();
  umr_cmd->add_option("--cyclomatic", umr_m, "cyclomatic number")->required();
  umr_cmd->add_option("--measure", umr_measure, "nrel | ncrel | ecrel")->capture_default_str();
  umr_cmd->add_option("--jobs", umr_jobs, "worker threads")->capture_default_str();

  // ---- conjecture-h ----
  int ch_n = 0, ch_m = 3, ch_jobs = 1;
  auto* ch_cmd = app.add_subcommand("conjecture-h", "check H_{n,m} against its m-cyclic class (m >= 3)");
  ch_cmd->add_option("--n", ch_n, "order")->required();
  ch_cmd->add_option("--m", ch_m, "cyclomatic number (m >= 3)")->capture_default_str();
  ch_cmd->add_option("--jobs", ch_jobs, "worker threads")->capture_default_str();

  // ---- roots ----
  std::string rt_g6, rt_file, rt_family, rt_measure = "ecrel";
  int rt_scan_n = 0, rt_scan_m = -1, rt_jobs = 1;
  double rt_tol = kRootTolDefault;
  auto* roots_cmd = app.add_subcommand("roots", "complex roots of reliability polynomials (JSONL records)");
  roots_cmd->add_option("--graph6", rt_g6, "graph6 literal");
  roots_cmd->add_option("--graph6-file", rt_file, "file with one graph6 per line");
  roots_cmd->add_option("--family", rt_family, "family spec");
  roots_cmd->add_option("--measure", rt_measure, "nrel | ncrel | ecrel")->capture_default_str();
  roots_cmd->add_option("--scan-n", rt_scan_n, "scan a whole enumerated class: order");
  roots_cmd->add_option("--scan-cyclomatic", rt_scan_m, "scan a whole enumerated class: cyclomatic number");
  roots_cmd->add_option("--tol", rt_tol, "residual tolerance")->capture_default_str();
  roots_cmd->add_option("--jobs", rt_jobs, "worker threads")->capture_default_str();

  // ---- verify-paper ----
  VerifyOptions vopts;
  vopts.jobs = 2;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the full reproduction suite");
  verify_cmd->add_option("--scope", vopts.scope, "all or a single check name")->capture_default_str();
  verify_cmd->add_option("--jobs", vopts.jobs, "worker threads")->capture_default_str();
  verify_cmd->add_option("--appendix-out", vopts.appendix_path, "path for the regenerated order-7 table")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (poly_cmd->parsed()) {
      for (const auto& [g6, g] : gather_inputs(poly_g6, poly_file, poly_family))
        std::cout << poly_record(g6, g, poly_kind).dump() << "\n";
      return 0;
    }
    if (copwin_cmd->parsed()) {
      for (const auto& [g6, g] : gather_inputs(cw_g6, cw_file, cw_family)) {
        const DismantleTrace trace = dismantle(g);
        json rec;
        rec["schema"] = "relcop.copwin/1";
        rec["graph6"] = g6;
        rec["copwin"] = trace.success;
        rec["dismantle_order"] = trace.order;
        rec["chordal"] = is_chordal(g);
        std::cout << rec.dump() << "\n";
      }
      return 0;
    }
    if (family_cmd->parsed()) {
      const FamilySpec spec = FamilySpec::parse(family_spec);
      const Graph g = build(spec);
      json rec;
      rec["schema"] = "relcop.family/1";
      rec["spec"] = spec.to_string();
      rec["graph6"] = emit_graph6(g);
      rec["n"] = g.n;
      rec["m"] = g.edge_count();
      std::cout << rec.dump() << "\n";
      return 0;
    }
    if (classify_cmd->parsed()) {
      for (const auto& [g6, g] : gather_inputs(cls_g6, cls_file, cls_family)) {
        const BicyclicType t = classify_bicyclic(g);
        json rec;
        rec["schema"] = "relcop.bicyclic/1";
        rec["graph6"] = g6;
        rec["type"] = t.kind;
        rec["params"] = t.kind == 1 ? std::vector<int>{t.params[0], t.params[1]}
                                    : std::vector<int>{t.params[0], t.params[1], t.params[2]};
        std::cout << rec.dump() << "\n";
      }
      return 0;
    }
    if (enum_cmd->parsed()) {
      const GenSpec spec{en_n, en_m};
      if (en_count) {
        std::cout << enumerate_count(spec) << "\n";
        return 0;
      }
      if (!en_out.empty()) {
        std::ofstream out(en_out);
        if (!out) throw std::invalid_argument("cannot write '" + en_out + "'");
        enumerate_to_stream(spec, out);
      } else {
        enumerate_to_stream(spec, std::cout);
      }
      return 0;
    }
    if (compare_cmd->parsed()) {
      const Graph g = graph_from_text(cmp_g);
      const Graph h = graph_from_text(cmp_h);
      const ReliabilityMeasure measure = measure_from_name(cmp_measure);
      const DominanceReport rep = dominance(g, h, measure);
      std::cout << dominance_record(rep, measure, emit_graph6(g), emit_graph6(h)).dump() << "\n";
      return 0;
    }
    if (umr_cmd->parsed()) {
      const ReliabilityMeasure measure = measure_from_name(umr_measure);
      const UmrResult res = find_umr(umr_n, umr_m, measure, umr_jobs);
      json rec;
      rec["schema"] = "relcop.umr/1";
      rec["n"] = umr_n;
      rec["cyclomatic"] = umr_m;
      rec["measure"] = umr_measure;
      rec["class_size"] = res.class_size;
      json winners = json::array();
      for (const Graph& w : res.winners) {
        json entry;
        entry["graph6"] = emit_graph6(w);
        const auto tag = family_tag_of(w);
        entry["family"] = tag ? json(*tag) : json(nullptr);
        winners.push_back(entry);
      }
      rec["winners"] = winners;
      if (res.crossing_pair) {
        rec["crossing_pair"] = {emit_graph6(res.crossing_pair->first), emit_graph6(res.crossing_pair->second)};
        rec["crossing_report"] =
            dominance_record(*res.crossing_report, measure, emit_graph6(res.crossing_pair->first),
                             emit_graph6(res.crossing_pair->second));
      }
      std::cout << rec.dump() << "\n";
      return 0;
    }
    if (ch_cmd->parsed()) {
      const ConjectureReport rep = verify_conjecture_H(ch_n, ch_m, ch_jobs);
      json rec;
      rec["schema"] = "relcop.conjecture/1";
      rec["n"] = rep.n;
      rec["m"] = rep.m;
      rec["class_size"] = rep.class_size;
      rec["holds"] = rep.holds;
      if (rep.counterexample) {
        rec["counterexample"] = emit_graph6(*rep.counterexample);
        rec["counterexample_report"] = dominance_record(*rep.counterexample_report, ReliabilityMeasure::NodeCopwin,
                                                        "H", emit_graph6(*rep.counterexample));
      }
      std::cout << rec.dump() << "\n";
      return 0;
    }
    if (roots_cmd->parsed()) {
      const ReliabilityMeasure measure = measure_from_name(rt_measure);
      auto emit_record = [&](const std::string& g6, const CoeffPoly& p, const RootReport& rep) {
        json rec;
        rec["schema"] = "relcop.roots/1";
        rec["graph6"] = g6;
        rec["measure"] = rt_measure;
        rec["coeffs"] = coeff_strings(p);
        json rs = json::array();
        for (const auto& z : rep.roots) rs.push_back(json::array({z.real(), z.imag()}));
        rec["roots"] = rs;
        rec["max_dist_from_one"] = rep.max_dist_from_one;
        rec["inside_disk"] = rep.inside_disk;
        rec["converged"] = rep.converged;
        std::cout << rec.dump() << "\n";
      };
      if (rt_scan_n > 0) {
        if (rt_scan_m < 0) throw std::invalid_argument("--scan-cyclomatic required with --scan-n");
        const DiskScanSummary s =
            disk_scan(GenSpec{rt_scan_n, rt_scan_m}, measure, rt_tol, kDiskTolDefault, rt_jobs);
        for (const auto& e : s.entries) emit_record(e.graph6, e.poly, e.report);
      } else {
        for (const auto& [g6, g] : gather_inputs(rt_g6, rt_file, rt_family)) {
          const CoeffPoly p = reliability_poly(g, measure);
          if (p.is_zero()) {
            emit_record(g6, p, RootReport{});
            continue;
          }
          emit_record(g6, p, complex_roots(p, rt_tol));
        }
      }
      return 0;
    }
    if (verify_cmd->parsed()) return cmd_verify(vopts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
