#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// in-process with captured streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xfam/xfam.hpp"

namespace xfam::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2 };

using json = nlohmann::ordered_json;

namespace detail {

inline json family_json(const UniformFamily& f) {
  json out = json::array();
  for (Mask m : f) out.push_back(format_set(m));
  return out;
}

inline json pair_json(const ClosedPair& p) { return json::array({family_json(p.a), family_json(p.b)}); }

inline UniformFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open family file '" + path + "'");
  try {
    return parse_family(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line, std::string(e.what()).substr(std::string(e.what()).find(": ") + 2) + " in " + path);
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

/// CSV to --out when given (summary to `out`), otherwise CSV to `out` and the summary to `err`.
inline int emit_sweep(const SweepReport& rep, const std::string& path, std::ostream& out, std::ostream& err) {
  if (!path.empty()) {
    std::ostringstream csv;
    write_csv(csv, rep);
    write_text(path, csv.str());
    write_summary(out, rep);
  } else {
    write_csv(out, rep);
    write_summary(err, rep);
  }
  if (!rep.ok()) {
    // Counterexamples in machine-readable form, alongside the full CSV.
    SweepReport bad;
    bad.name = rep.name;
    for (auto& r : rep.failures()) bad.rows.push_back(r);
    err << "counterexamples:\n";
    write_csv(err, bad);
  }
  return rep.ok() ? kOk : kFail;
}

inline json verdict_json(const Verdict& v) {
  json j;
  j["theorem"] = v.theorem;
  j["pass"] = v.pass;
  j["expected"] = v.expected.str();
  j["max_product"] = v.result.max_product.str();
  j["witness_count"] = v.result.witnesses.size();
  j["lines"] = v.lines;
  j["counterexamples"] = v.counterexamples;
  return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-2-intersecting family toolkit: exact search, constructions, compression, generating sets "
               "and inequality sweeps."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "xfam 1.0.0");

  // search
  int n = 0, k = 0, l = 0, t = 2, jobs = 1;
  std::size_t level_limit = kDefaultLevelLimit;
  bool nontrivial = false, compress_reduce = false, no_prune = false, force = false;
  std::string out_path;
  auto* search = app.add_subcommand("search", "Maximum |A||B| over cross-t-intersecting pairs (JSON result)");
  search->add_option("--n", n, "ground set size")->required();
  search->add_option("--k", k, "uniformity of A")->required();
  search->add_option("--l", l, "uniformity of B")->required();
  search->add_option("--t", t, "intersection threshold")->capture_default_str();
  search->add_flag("--nontrivial", nontrivial, "only pairs without a common 2-set");
  search->add_flag("--compress-reduce", compress_reduce, "restrict to left-compressed A-sides");
  search->add_flag("--no-prune", no_prune, "disable branch-and-bound");
  search->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  search->add_option("--level-limit", level_limit, "largest level set to enumerate")->capture_default_str();
  search->add_option("--out", out_path, "JSON output file (stdout when omitted)");

  // verify
  std::string theorem;
  auto* verify = app.add_subcommand("verify", "Check a product bound and its extremal shapes by exhaustive search");
  verify->add_option("--theorem", theorem, "1.4 (star bound) or 5.1 (nontrivial bound)")
      ->required()
      ->check(CLI::IsMember({"1.4", "5.1"}));
  verify->add_option("--n", n)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--l", l)->required();
  verify->add_flag("--force", force, "run below the n >= 3.38 max(k,l) threshold");
  verify->add_flag("--compress-reduce", compress_reduce, "restrict to left-compressed A-sides (1.4 only)");
  verify->add_option("--jobs", jobs)->check(CLI::Range(1, 256))->capture_default_str();
  verify->add_option("--level-limit", level_limit)->capture_default_str();
  verify->add_option("--out", out_path, "JSON verdict file");

  // compress
  std::string in_a, in_b, out_a, out_b;
  auto* compress = app.add_subcommand("compress", "Left-compress a pair of families with common shifts");
  compress->add_option("--a", in_a, "family file A")->required();
  compress->add_option("--b", in_b, "family file B")->required();
  compress->add_option("--out-a", out_a, "compressed A")->required();
  compress->add_option("--out-b", out_b, "compressed B")->required();
  compress->add_option("--t", t, "report cross-t-intersection before and after")->capture_default_str();

  // genset
  std::string in_path;
  auto* genset = app.add_subcommand("genset", "Generator antichain, s+ and slice table of a family");
  genset->add_option("--in", in_path, "family file")->required();

  // construct
  std::string kind_name, core_text = "1,2";
  int s = 3, r = 1;
  auto* construct = app.add_subcommand("construct", "Build a named family and compare its size with the formula");
  construct->add_option("--kind", kind_name, "star | frankl | A | B | H | I")->required();
  construct->add_option("--n", n)->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--s", s, "prefix length for A, B, H, I")->capture_default_str();
  construct->add_option("--r", r, "Frankl r")->capture_default_str();
  construct->add_option("--t", t, "Frankl t")->capture_default_str();
  construct->add_option("--core", core_text, "star core, e.g. 1,2")->capture_default_str();
  construct->add_option("--out", out_path, "family file to write");

  // sweeps
  Grid grid_f, grid_t, grid_p;
  grid_f.kmax = 12;
  long long ratio_kmax = 60;
  std::optional<long long> ratio_lmax;
  auto add_grid = [&](CLI::App* c, Grid& g, bool with_l) {
    c->add_option("--kmin", g.kmin)->capture_default_str();
    c->add_option("--kmax", g.kmax)->capture_default_str();
    if (with_l) {
      c->add_option("--lmin", g.lmin)->capture_default_str();
      c->add_option("--lmax", g.lmax)->capture_default_str();
    }
    c->add_option("--nwindow", g.nwindow)->capture_default_str();
    c->add_option("--out", out_path, "CSV output file (stdout when omitted)");
  };
  auto* sweep_f = app.add_subcommand("sweep-f", "Single-factor inequality over s >= k+1 with tail certificates");
  add_grid(sweep_f, grid_f, false);
  auto* sweep_t = app.add_subcommand("sweep-T", "Product inequality over admissible (s,i) with tail certificates");
  add_grid(sweep_t, grid_t, true);
  auto* sweep_r = app.add_subcommand("sweep-ratios", "Four binomial ratio constants at the threshold n");
  sweep_r->add_option("--kmax", ratio_kmax)->capture_default_str();
  sweep_r->add_option("--lmax", ratio_lmax, "defaults to --kmax");
  sweep_r->add_option("--out", out_path, "CSV output file (stdout when omitted)");
  auto* sweep_p = app.add_subcommand("sweep-polys", "Auxiliary sign claims on the integer grid");
  add_grid(sweep_p, grid_p, true);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  }

  try {
    if (*search) {
      SearchConfig cfg(CrossParams(GroundSize(n), k, l, t));
      cfg.nontrivial_only = nontrivial;
      cfg.use_compression_reduction = compress_reduce;
      cfg.prune = !no_prune;
      cfg.jobs = jobs;
      cfg.level_limit = level_limit;
      const SearchResult res = max_product(cfg);
      json j;
      j["max_product"] = res.max_product.str();
      json w = json::array();
      for (const auto& p : res.witnesses) w.push_back(detail::pair_json(p));
      j["witnesses"] = std::move(w);
      j["explored"] = res.explored;
      j["pruned"] = res.pruned;
      j["wall_time_ms"] = static_cast<long long>(res.wall_time_ms);
      if (out_path.empty()) out << j.dump(2) << '\n';
      else {
        detail::write_text(out_path, j.dump(2) + "\n");
        out << "max_product=" << res.max_product.str() << " witnesses=" << res.witnesses.size() << '\n';
      }
      return kOk;
    }
    if (*verify) {
      VerifyOptions opt;
      opt.force = force;
      opt.use_compression_reduction = compress_reduce;
      opt.jobs = jobs;
      opt.level_limit = level_limit;
      const Verdict v = theorem == "1.4" ? verify_theorem14(n, k, l, opt) : verify_theorem51(n, k, l, opt);
      for (const auto& line : v.lines) out << line << '\n';
      out << (v.pass ? "PASS" : "FAIL") << " theorem " << v.theorem << " n=" << n << " k=" << k << " l=" << l
          << " max=" << v.result.max_product.str() << " witnesses=" << v.result.witnesses.size() << '\n';
      const json j = detail::verdict_json(v);
      if (!out_path.empty()) detail::write_text(out_path, j.dump(2) + "\n");
      if (!v.pass) err << j.dump(2) << '\n';
      return v.pass ? kOk : kFail;
    }
    if (*compress) {
      const UniformFamily a = detail::read_family_file(in_a);
      const UniformFamily b = detail::read_family_file(in_b);
      const bool before = is_cross_t(a, b, t);
      auto [ca, cb] = compress_pair(a, b);
      const bool after = is_cross_t(ca, cb, t);
      detail::write_text(out_a, to_text(ca));
      detail::write_text(out_b, to_text(cb));
      out << "|A|=" << ca.size() << " |B|=" << cb.size() << " cross-" << t << "-intersecting before=" << before
          << " after=" << after << " compressed=" << (is_left_compressed(ca) && is_left_compressed(cb)) << '\n';
      return kOk;
    }
    if (*genset) {
      const UniformFamily a = detail::read_family_file(in_path);
      const GeneratorAntichain g = canonical_generators(a);
      out << "# generators (" << g.gens.size() << ")\n";
      for (Mask e : g.gens) out << format_set(e) << '\n';
      const SliceView v = slice(g);
      out << "s+=" << v.s_plus << '\n';
      out << "# slice table: size i -> generators of size i containing s+\n";
      for (const auto& [size, gens] : v.slices) {
        out << "i=" << size << " count=" << gens.size() << ':';
        for (Mask e : gens) out << ' ' << format_set(e);
        out << '\n';
      }
      out << "left-compressed=" << is_left_compressed(a) << " decomposition="
          << (is_left_compressed(a) ? (verify_decomposition(a, g) ? "ok" : "FAILED") : "n/a") << '\n';
      return kOk;
    }
    if (*construct) {
      const auto kind = parse_kind(kind_name);
      if (!kind) throw DomainError("unknown family kind '" + kind_name + "'");
      FamilySpec spec{*kind, n, k, 0, t, r, s};
      if (*kind == FamilyKind::Star) {
        const UniformFamily c = parse_family("n=" + std::to_string(n) + " k=2\n" + core_text + "\n");
        spec.core = c.sets()[0];
      }
      const UniformFamily f = build(spec);
      const Int formula = size_formula(spec);
      const bool agree = formula == Int(f.size());
      if (!out_path.empty()) detail::write_text(out_path, to_text(f));
      out << "size=" << f.size() << " formula=" << formula.str() << ' ' << (agree ? "agree" : "DISAGREE") << '\n';
      return agree ? kOk : kFail;
    }
    if (*sweep_f) return detail::emit_sweep(lemma31_sweep(grid_f), out_path, out, err);
    if (*sweep_t) return detail::emit_sweep(lemma32_sweep(grid_t), out_path, out, err);
    if (*sweep_p) return detail::emit_sweep(proof_polynomial_signs(grid_p), out_path, out, err);
    if (*sweep_r)
      return detail::emit_sweep(ratio_constants_check(ratio_kmax, ratio_lmax.value_or(ratio_kmax)), out_path, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ScaleGuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace xfam::cli
