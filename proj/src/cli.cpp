#include "lieplan/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lieplan/errors.hpp"
#include "lieplan/serialize.hpp"

namespace lieplan {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("bad index: " + item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad index: " + item);
    }
  }
  return out;
}

std::string describe_form(const RealForm& f) {
  std::ostringstream out;
  out << "(s=" << f.s << ",t=" << f.t << ",u=" << f.u << ")";
  return out.str();
}

std::string describe_region(const Region& region) {
  std::ostringstream out;
  if (const auto* r = std::get_if<SpCartanRange>(&region)) {
    out << "s1 in {";
    for (std::size_t i = 0; i < r->s1_values.size(); ++i) out << (i ? "," : "") << r->s1_values[i];
    out << "}";
  } else if (const auto* b = std::get_if<SpBalanced>(&region)) {
    out << "balanced s1 = s2 = " << b->half;
  } else if (std::holds_alternative<EmptyRegion>(region)) {
    out << "empty";
  } else if (std::holds_alternative<GLFull>(region)) {
    out << "all regular parameters";
  } else {
    out << "regular parameters with tail scalar zero";
  }
  return out.str();
}

std::string describe_vector(const Vector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << to_string(v[i]);
  out << ')';
  return out.str();
}

void print_report(const SupportReport& r, std::ostream& out) {
  out << "space      " << family_name(r.space.family) << " n=" << r.space.n << " m=" << r.space.m << " k=" << r.space.k << "\n";
  out << "levi       " << to_json(r.levi)["shape"].get<std::string>() << (r.levi.tail_size() == 0 ? " (Cartan)" : "") << "\n";
  out << "strata     " << r.strata.size() << " real forms\n";
  for (const auto& s : r.strata) out << "  " << describe_form(s.form) << "  " << describe_region(s.region) << "\n";
  out << "discrete   " << to_string(r.ds.kind) << " (" << r.ds.reason << ")\n";
  if (r.hc_params) out << "hc params  " << r.hc_params->size() << "\n";
  if (r.parabolics) out << "parabolics " << r.parabolics->size() << "\n";
}

struct Options {
  std::string family = "sp";
  int n = 1, m = 0, k = 0, s = 0, t = 0, u = 0;
  int bound = -1;
  std::string json_path, matrix_path, blocks_path, index_set, suite = "all";
  std::uint64_t seed = 1;
  std::size_t trials = 8;
};

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  const SpaceSpec space{parse_family(o.family), o.n, o.m, o.k};
  space.validate();
  const SupportReport report = build_report(space, o.bound < 0 ? o.n + 1 : o.bound);
  print_report(report, out);
  if (!o.json_path.empty()) write_file(o.json_path, canonical_dump(to_json(report)));
  if (report.ds.kind == DsKind::Degenerate) {
    err << "degenerate space: h = g\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

int cmd_membership(const Options& o, std::ostream& out) {
  const Matrix a = matrix_from_json(parse_json(read_file(o.matrix_path)));
  const auto n = static_cast<std::size_t>(o.n), m = static_cast<std::size_t>(o.m);
  if (parse_family(o.family) == GroupFamily::GL) {
    if (a.rows() != n) throw DimensionError("gl membership needs an n x n matrix");
    const bool ok = gl_rank_bound(a, n, m);
    out << "rank       " << rank(a) << "\n";
    out << "bound      " << 2 * (n - std::min(n, m)) << "\n";
    out << "rank bound " << (ok ? "satisfied" : "violated") << "\n";
    return kExitOk;
  }
  const SymplecticSpace v(n);
  if (a.rows() != v.dim()) throw DimensionError("sp membership needs a 2n x 2n matrix");
  const bool real = sp_membership(a, v, m);
  const SignaturePair sig = signature(gram_of(a, v));
  out << "signature  (" << sig.p << "," << sig.q << ")\n";
  out << "real       " << (real ? "member" : "not a member") << "\n";
  out << "complex    " << (sp_complex_membership(a, n, m) ? "member" : "not a member") << "\n";
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const BlockSpec spec = block_spec_from_json(parse_json(read_file(o.blocks_path)));
  const auto m = static_cast<std::size_t>(o.m);
  const Realization r = realize(spec);
  const auto w = sp_witness(spec, m);
  if (!w) {
    out << "none (max{p,q} exceeds 2n-2m)\n";
    return kExitOk;
  }
  for (const auto& v : w->basis) out << describe_vector(v) << "\n";
  out << "verified   " << (verify_witness(r.a, r.space, *w, m) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_hcparams(const Options& o, std::ostream& out) {
  const SpaceSpec space{GroupFamily::Sp, o.n, o.m, o.k};
  for (const auto& p : enumerate_hc_params(space, o.bound < 0 ? o.n + 1 : o.bound)) {
    for (std::size_t i = 0; i < p.a.size(); ++i) out << (i ? " " : "") << p.a[i];
    out << "\n";
  }
  return kExitOk;
}

int cmd_strata(const Options& o, std::ostream& out) {
  const SpaceSpec space{parse_family(o.family), o.n, o.m, o.k};
  const RealForm form{o.s, o.t, o.u};
  const SupportStratum st = support_strata(space, form);
  out << describe_form(form) << "  " << describe_region(st.region) << "\n";
  for (int s1 : admitted_s1(st)) {
    const SignaturePair sig = stratum_signature(form, s1);
    out << "  s1=" << s1 << " signature (" << sig.p << "," << sig.q << ")\n";
  }
  return kExitOk;
}

int cmd_parabolic(const Options& o, std::ostream& out) {
  const SpaceSpec space{GroupFamily::Sp, o.n, o.m, o.k};
  std::vector<std::vector<int>> sets;
  if (o.index_set.empty()) sets = theta_parabolic_index_sets(space);
  else sets.push_back(parse_index_list(o.index_set));
  for (const auto& S : sets) {
    const auto roots_S = theta_parabolic_roots(space, S);
    out << "S = {";
    for (std::size_t i = 0; i < S.size(); ++i) out << (i ? "," : "") << S[i];
    out << "}  " << roots_S.size() << " roots\n";
    for (const auto& r : roots_S) out << "  " << to_string(r) << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  OracleConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  const OracleReport report = run_oracle_suite(o.suite, cfg);
  const std::string text = canonical_dump(to_json(report));
  out << text;
  if (!o.json_path.empty()) write_file(o.json_path, text);
  return report.agree ? kExitOk : kExitOracleDisagree;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moment-map images, Plancherel support strata and discrete series for GL and Sp homogeneous spaces"};
  app.require_subcommand(1, 1);
  Options o;
  const auto nonneg = CLI::NonNegativeNumber;

  auto add_space = [&](CLI::App* sub, bool with_family) {
    if (with_family) sub->add_option("--family", o.family, "sp or gl")->check(CLI::IsMember({"sp", "gl"}));
    sub->add_option("--n", o.n, "n")->required()->check(nonneg);
    sub->add_option("--m", o.m, "m")->required()->check(nonneg);
    sub->add_option("--k", o.k, "k (discrete factor)")->check(nonneg);
  };

  auto* report = app.add_subcommand("report", "full support report for a space");
  add_space(report, true);
  report->get_option("--family")->required();
  report->add_option("--bound", o.bound, "bound on |a_1| for HC parameters (default n+1)")->check(nonneg);
  report->add_option("--json", o.json_path, "write the JSON report here");

  auto* membership = app.add_subcommand("membership", "moment-map membership of a semisimple matrix");
  add_space(membership, true);
  membership->add_option("--matrix", o.matrix_path, "matrix JSON file")->required();

  auto* witness = app.add_subcommand("witness", "constructive witness subspace for a block spec");
  witness->add_option("--blocks", o.blocks_path, "block spec JSON file")->required();
  witness->add_option("--m", o.m, "m")->required()->check(nonneg);

  auto* hc = app.add_subcommand("hcparams", "admissible Harish-Chandra parameters (Sp, 2m <= n)");
  add_space(hc, false);
  hc->add_option("--bound", o.bound, "bound on |a_1|")->required()->check(nonneg);

  auto* strata = app.add_subcommand("strata", "admitted stratum of one real form");
  add_space(strata, true);
  strata->get_option("--family")->required();
  strata->add_option("--s", o.s, "s")->required()->check(nonneg);
  strata->add_option("--t", o.t, "t")->check(nonneg);
  strata->add_option("--u", o.u, "u")->check(nonneg);

  auto* parabolic = app.add_subcommand("parabolic", "theta-stable parabolic root sets (Sp, n < 2m)");
  add_space(parabolic, false);
  parabolic->add_option("--S", o.index_set, "comma-separated subset of {1..2n-2m}; all subsets if omitted");

  auto* oracle = app.add_subcommand("oracle", "cross-check symbolic answers against brute force");
  oracle->add_option("--suite", o.suite, "strata, weyl, signature, witness or all")
      ->check(CLI::IsMember({"strata", "weyl", "signature", "witness", "all"}));
  oracle->add_option("--seed", o.seed, "seed")->check(nonneg);
  oracle->add_option("--trials", o.trials, "trials per case")->check(CLI::PositiveNumber);
  oracle->add_option("--json", o.json_path, "also write the JSON result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    if (report->parsed()) return cmd_report(o, out, err);
    if (membership->parsed()) return cmd_membership(o, out);
    if (witness->parsed()) return cmd_witness(o, out);
    if (hc->parsed()) return cmd_hcparams(o, out);
    if (strata->parsed()) return cmd_strata(o, out);
    if (parabolic->parsed()) return cmd_parabolic(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const PreconditionViolation& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitMalformed;
}

}  // namespace lieplan
