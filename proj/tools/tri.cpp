// tri: command-line front end for the triangle-label calculus.
//
//   tri verify eq8 --n N --k K --l L --t T [--mode n2|n20] [--sense arith|geom]
//   tri verify identity --family eq3|eq26|...|eq32 --params ... [--mode] [--sense]
//   tri dissect (SCRIPT | --builtin a|b) [--svg PATH] [--json]
//   tri classify --n N --k K --l L --t T
//   tri solve --base i,j,t --target i,j,s
//   tri render eq8|witness|dissection ... [--out PATH]
//   tri sweep [--mode n2|n20] [--range R] [--trange T]
//
// Exit status: 0 true/pass, 1 false/fail, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "tri/chain.hpp"
#include "tri/dissection.hpp"
#include "tri/identity.hpp"
#include "tri/lattice.hpp"
#include "tri/render.hpp"
#include "tri/sweep.hpp"

namespace {

using namespace tri;
using Json = nlohmann::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const TriVec3& v) { return Json::array({v.a, v.b, v.c}); }
Json to_json(const LatticeCoord& c) { return Json::array({c.i, c.j}); }
Json to_json(const PlacedTriangle& p) { return Json{{"anchor", to_json(p.anchor)}, {"size", p.size}}; }

std::string vec_string(const TriVec3& v, Mode mode) {
  std::ostringstream os;
  if (mode == Mode::N2) {
    os << "(" << v.a << "," << v.b << ")";
  } else {
    os << v;
  }
  return os.str();
}

Mode mode_from(const std::string& s) {
  const auto m = parse_mode(s);
  if (!m) throw UsageError("unknown mode '" + s + "' (expected n2 or n20)");
  return *m;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    const Int num = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
    Int den = 1;
    if (slash != std::string::npos) {
      den = std::stoll(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1 || den == 0) throw std::invalid_argument(s);
    }
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw UsageError("invalid number '" + s + "'");
  }
}

RationalTriangle parse_triple(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("expected i,j,size but got '" + s + "'");
  return {{parse_rational(parts[0]), parse_rational(parts[1])}, parse_rational(parts[2])};
}

std::string rational_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int emit(const cli::Report& report, bool json) {
  report.print(std::cout, json);
  return report.verdict() ? kExitTrue : kExitFalse;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

// ---- verify ---------------------------------------------------------------

struct Eq8Args {
  Int n = 0, k = 0, l = 0, t = 0;
  std::string mode = "n2";
  std::string sense = "arith";
  bool json = false;
};

void add_eq8_flags(CLI::App* cmd, Eq8Args& a) {
  cmd->add_option("--n", a.n, "first increment")->required();
  cmd->add_option("--k", a.k, "second increment")->required();
  cmd->add_option("--l", a.l, "third increment")->required();
  cmd->add_option("--t", a.t, "base size")->required();
}

int run_verify_eq8(const Eq8Args& a) {
  const Mode mode = mode_from(a.mode);
  cli::Report report("verify eq8");
  const IdentityInstance inst = make_eq8(a.n, a.k, a.l, a.t);
  report.data()["params"] = Json::array({a.n, a.k, a.l, a.t});
  report.data()["mode"] = std::string(to_string(mode));
  report.data()["sense"] = a.sense;
  report.data()["identity"] = to_string(inst);
  report.line(to_string(inst));
  if (a.sense == "arith") {
    const ArithVerdict v = arith_check(inst, mode);
    report.data()["residual"] = to_json(v.residual);
    report.line("residual " + vec_string(v.residual, mode));
    report.set_verdict(v.holds);
  } else if (a.sense == "geom") {
    const Eq8Layout layout = eq8_layout(placed(0, 0, a.t), a.n, a.k, a.l);
    const auto terms = eq8_terms(layout);
    const Chain residual = geom_check(terms, {1, layout.big}, mode);
    Json placements = Json::array();
    for (const auto& term : terms) placements.push_back({{"sign", term.sign}, {"triangle", to_json(term.tri)}});
    report.data()["big"] = to_json(layout.big);
    report.data()["terms"] = placements;
    report.data()["residual_simplices"] = residual.size();
    report.data()["residual_projection"] = to_json(project(residual));
    report.line("big triangle " + to_string(layout.big));
    report.line("residual simplices " + std::to_string(residual.size()));
    report.set_verdict(residual.empty());
  } else {
    throw UsageError("unknown sense '" + a.sense + "' (expected arith or geom)");
  }
  return emit(report, a.json);
}

struct IdentityArgs {
  std::string family;
  std::vector<Int> params;
  std::string mode = "n20";
  std::string sense = "arith";
  bool json = false;
};

IdentityInstance build_identity(const std::string& family, const std::vector<Int>& p) {
  auto need = [&](std::size_t count, const char* names) {
    if (p.size() != count) {
      throw UsageError(family + " takes " + std::to_string(count) + " parameter(s): " + names);
    }
  };
  if (family == "eq3") { need(3, "n,k,l"); return make_eq3(p[0], p[1], p[2]); }
  if (family == "eq8") { need(4, "n,k,l,t"); return make_eq8(p[0], p[1], p[2], p[3]); }
  if (family == "eq26") { need(1, "n"); return make_eq26(p[0]); }
  if (family == "eq27") { need(4, "a,k,n,t"); return make_eq27(p[0], p[1], p[2], p[3]); }
  if (family == "eq28") { need(3, "a,n,t"); return make_eq28(p[0], p[1], p[2]); }
  if (family == "eq29") { need(3, "a,n,t"); return make_eq29(p[0], p[1], p[2]); }
  if (family == "eq30") { need(1, "n"); return make_eq30(p[0]); }
  if (family == "eq31") { need(1, "n"); return make_eq31(p[0]); }
  if (family == "eq32") { need(1, "n"); return make_eq32(p[0]); }
  throw UsageError("unknown family '" + family + "'");
}

/// Placed witness for the families that have one, with the target triangle.
std::pair<PlacedTriangle, std::vector<SignedPlacement>> identity_witness(const std::string& family,
                                                                         const std::vector<Int>& p) {
  if (family == "eq3" || family == "eq8") {
    const Int t = family == "eq3" ? 0 : p[3];
    const Eq8Layout layout = eq8_layout(placed(0, 0, t), p[0], p[1], p[2]);
    return {layout.big, eq8_terms(layout)};
  }
  if (family == "eq26" || family == "eq30") {
    if (p[0] < 1) throw UsageError(family + " geometric witness needs n >= 1");
    const auto terms = family == "eq26" ? eq26_witness({0, 0}, p[0]) : eq30_witness({0, 0}, p[0]);
    return {placed(0, 0, p[0]), terms};
  }
  throw UsageError("no geometric witness is available for " + family);
}

int run_verify_identity(const IdentityArgs& a) {
  const Mode mode = mode_from(a.mode);
  cli::Report report("verify identity " + a.family);
  const IdentityInstance inst = build_identity(a.family, a.params);
  report.data()["family"] = a.family;
  report.data()["params"] = a.params;
  report.data()["mode"] = std::string(to_string(mode));
  report.data()["sense"] = a.sense;
  report.data()["identity"] = to_string(inst);
  report.line(to_string(inst));
  if (a.sense == "arith") {
    const ArithVerdict v = arith_check(inst, mode);
    TriVec3 sum;
    for (const Term& t : inst.terms) sum = sum + t.coeff * term_embedding(t.value);
    report.data()["lhs_embedding"] = to_json(embed3(inst.lhs));
    report.data()["terms_embedding"] = to_json(sum);
    report.data()["residual"] = to_json(v.residual);
    report.line("terms sum to " + vec_string(sum, mode) + ", residual " + vec_string(v.residual, mode));
    report.set_verdict(v.holds);
  } else if (a.sense == "geom") {
    const auto [target, terms] = identity_witness(a.family, a.params);
    const Chain residual = geom_check(terms, {1, target}, mode);
    report.data()["placements"] = terms.size();
    report.data()["residual_simplices"] = residual.size();
    report.line(std::to_string(terms.size()) + " placed terms, residual simplices " +
                std::to_string(residual.size()));
    report.set_verdict(residual.empty());
  } else {
    throw UsageError("unknown sense '" + a.sense + "' (expected arith or geom)");
  }
  return emit(report, a.json);
}

// ---- dissect --------------------------------------------------------------

struct DissectArgs {
  std::string script_path;
  std::string builtin;
  std::string svg;
  bool json = false;
  bool show_cancelled = false;
};

DissectionScript load_script(const std::string& path, const std::string& builtin) {
  if (!builtin.empty()) {
    if (!path.empty()) throw UsageError("give either a script file or --builtin, not both");
    const auto which = parse_builtin(builtin);
    if (!which) throw UsageError("unknown builtin '" + builtin + "' (expected a or b)");
    return builtin_script(*which);
  }
  if (path.empty()) throw UsageError("a script file or --builtin is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  ParseResult parsed = parse_script(buf.str());
  if (!parsed.ok()) {
    std::string msg;
    for (const auto& d : parsed.diagnostics) {
      msg += path + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message + "\n";
    }
    msg.pop_back();
    throw UsageError(msg);
  }
  return std::move(*parsed.script);
}

int run_dissect(const DissectArgs& a) {
  const DissectionScript script = load_script(a.script_path, a.builtin);
  cli::Report report("dissect " + (a.builtin.empty() ? a.script_path : "--builtin " + a.builtin));
  DissectionResult result;
  try {
    result = interpret(script);
  } catch (const InterpretError& e) {
    report.data()["error"] = e.what();
    report.line(std::string("interpretation failed: ") + e.what() +
                (e.line() > 0 ? " (line " + std::to_string(e.line()) + ")" : ""));
    report.set_verdict(false);
    return emit(report, a.json);
  }
  const PerfectReport perfect = verify_perfect(result, result.root);

  Json pieces = Json::array();
  for (const auto& p : result.pieces) {
    pieces.push_back({{"ref", p.ref.str()}, {"sign", p.sign}, {"anchor", to_json(p.tri.anchor)}, {"size", p.tri.size}});
  }
  Json cancellations = Json::array();
  for (const auto& c : result.cancellations) {
    cancellations.push_back({{"tag", c.tag},
                             {"positive", c.positive.ref.str()},
                             {"negative", c.negative.ref.str()},
                             {"triangle", to_json(c.positive.tri)}});
  }
  report.data()["root"] = to_json(result.root);
  report.data()["steps"] = script.steps.size();
  report.data()["piece_count"] = result.stats.piece_count;
  report.data()["signed_sizes"] = result.stats.signed_sizes;
  report.data()["sum_of_squares"] = result.stats.sum_of_squares;
  report.data()["pieces"] = pieces;
  report.data()["cancellations"] = cancellations;
  report.data()["checks"] = {{"exact_tiling", perfect.exact_tiling},
                             {"distinct_sizes", perfect.distinct_sizes},
                             {"squares_match", perfect.squares_match}};
  report.data()["failures"] = perfect.failures;

  std::string sizes;
  for (Int s : result.stats.signed_sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
  report.line(std::to_string(script.steps.size()) + " expansions, " + std::to_string(result.cancellations.size()) +
              " cancelled pairs");
  report.line(std::to_string(result.stats.piece_count) + " pieces: " + sizes);
  report.line("sum of squares " + std::to_string(result.stats.sum_of_squares) + " (target " +
              std::to_string(perfect.target_square) + ")");
  for (const auto& p : result.pieces) report.line("  " + p.ref.str() + " " + to_string(p.tri));
  for (const auto& f : perfect.failures) report.line("FAIL: " + f);

  if (!a.svg.empty()) {
    write_file(a.svg, to_svg(dissection_scene(result, a.show_cancelled)));
    report.data()["svg"] = a.svg;
  }
  report.set_verdict(perfect.pass());
  return emit(report, a.json);
}

// ---- classify / solve -----------------------------------------------------

int run_classify(const Eq8Args& a) {
  cli::Report report("classify");
  SlotMask negative = 0;
  if (a.n < 0) negative |= kSlotN;
  if (a.k < 0) negative |= kSlotK;
  if (a.l < 0) negative |= kSlotL;
  const SumLabel p = negate_slots({a.n, a.k, a.l, a.t}, negative);
  const CaseId id = case_classify(p.n, p.k, p.l, p.t);
  report.data()["params"] = Json::array({a.n, a.k, a.l, a.t});
  report.data()["normalized"] = Json::array({p.n, p.k, p.l, p.t});
  report.data()["case"] = id.case_number;
  report.data()["canonical_case"] = id.canonical_case;
  if (negative != 0) report.line("normalized to (" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                                 std::to_string(p.l) + "," + std::to_string(p.t) + ")");
  report.line("case " + std::to_string(id.case_number) + ", canonical " + std::to_string(id.canonical_case));
  report.set_verdict(true);
  if (a.json) return emit(report, true);
  std::cout << "case " << id.case_number << " canonical " << id.canonical_case << '\n';
  return kExitTrue;
}

int run_solve(const std::string& base_s, const std::string& target_s, bool json) {
  const RationalTriangle base = parse_triple(base_s);
  const RationalTriangle target = parse_triple(target_s);
  const auto inc = solve_params(base, target);
  cli::Report report("solve");
  report.data()["n"] = rational_string(inc.n);
  report.data()["k"] = rational_string(inc.k);
  report.data()["l"] = rational_string(inc.l);
  report.data()["t"] = rational_string(base.size);
  report.set_verdict(true);
  if (json) return emit(report, true);
  std::cout << rational_string(inc.n) << ' ' << rational_string(inc.k) << ' ' << rational_string(inc.l) << '\n';
  return kExitTrue;
}

// ---- sweep ----------------------------------------------------------------

int run_sweep(const std::string& mode_s, Int range, Int trange, bool json) {
  const Mode mode = mode_from(mode_s);
  if (range < 0 || trange < 0) throw UsageError("ranges must be non-negative");
  cli::Report report("sweep " + std::string(to_string(mode)));
  const SweepResult r = sweep_eq8(mode, {range, trange});
  report.data()["configurations"] = r.configurations;
  report.data()["nonzero_residuals"] = r.nonzero_residuals;
  report.data()["case_counts"] = std::vector<std::size_t>(r.case_counts.begin() + 1, r.case_counts.end());
  report.line(std::to_string(r.configurations) + " configurations, " + std::to_string(r.nonzero_residuals) +
              " nonzero residuals");
  std::string cases;
  for (int c = 1; c <= 10; ++c) cases += " " + std::to_string(c) + ":" + std::to_string(r.case_counts[c]);
  report.line("cases" + cases);
  if (r.first_failure) report.line("first failure " + to_string(*r.first_failure));
  // Small boxes cannot reach every case; only residuals decide the verdict here.
  report.set_verdict(r.nonzero_residuals == 0);
  return emit(report, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triangle-label arithmetic, lattice witnesses and perfect dissections", "tri"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "check an identity in the arithmetic or geometric sense");
  verify->require_subcommand(1);
  Eq8Args eq8;
  auto* verify_eq8 = verify->add_subcommand("eq8", "the seven-term construction for n, k, l, t");
  add_eq8_flags(verify_eq8, eq8);
  verify_eq8->add_option("--mode", eq8.mode, "n2 or n20")->capture_default_str();
  verify_eq8->add_option("--sense", eq8.sense, "arith or geom")->capture_default_str();
  verify_eq8->add_flag("--json", eq8.json, "JSON report");

  IdentityArgs ident;
  auto* verify_id = verify->add_subcommand("identity", "generated identity families");
  verify_id->add_option("--family", ident.family, "eq3 eq8 eq26 eq27 eq28 eq29 eq30 eq31 eq32")->required();
  verify_id->add_option("--params", ident.params, "family parameters")->delimiter(',')->required();
  verify_id->add_option("--mode", ident.mode, "n2 or n20")->capture_default_str();
  verify_id->add_option("--sense", ident.sense, "arith or geom")->capture_default_str();
  verify_id->add_flag("--json", ident.json, "JSON report");

  // dissect
  DissectArgs dis;
  auto* dissect = app.add_subcommand("dissect", "replay and verify a dissection script");
  dissect->add_option("script", dis.script_path, "script file");
  dissect->add_option("--builtin", dis.builtin, "a or b");
  dissect->add_option("--svg", dis.svg, "write the dissection as SVG");
  dissect->add_flag("--show-cancelled", dis.show_cancelled, "draw cancelled pairs in the SVG");
  dissect->add_flag("--json", dis.json, "JSON report");

  // classify
  Eq8Args cls;
  auto* classify = app.add_subcommand("classify", "configuration case of n, k, l, t");
  add_eq8_flags(classify, cls);
  classify->add_flag("--json", cls.json, "JSON report");

  // solve
  std::string base_s, target_s;
  bool solve_json = false;
  auto* solve = app.add_subcommand("solve", "increments carrying one triangle onto another");
  solve->add_option("--base", base_s, "i,j,t (rationals allowed, e.g. 1/2)")->required();
  solve->add_option("--target", target_s, "i,j,size")->required();
  solve->add_flag("--json", solve_json, "JSON report");

  // render
  auto* render = app.add_subcommand("render", "write SVG scenes");
  render->require_subcommand(1);
  std::string out_path;
  Eq8Args r_eq8;
  auto* render_eq8 = render->add_subcommand("eq8", "layout of the construction");
  add_eq8_flags(render_eq8, r_eq8);
  render_eq8->add_option("--out", out_path, "output file (default stdout)");
  std::string w_family = "eq26";
  Int w_n = 3;
  std::string w_mode = "n20";
  auto* render_w = render->add_subcommand("witness", "canonical witness of eq26 or eq30");
  render_w->add_option("--family", w_family, "eq26 or eq30")->capture_default_str();
  render_w->add_option("--n", w_n, "side length")->capture_default_str();
  render_w->add_option("--mode", w_mode, "n2 or n20")->capture_default_str();
  render_w->add_option("--out", out_path, "output file (default stdout)");
  DissectArgs r_dis;
  auto* render_dis = render->add_subcommand("dissection", "pieces of a dissection");
  render_dis->add_option("script", r_dis.script_path, "script file");
  render_dis->add_option("--builtin", r_dis.builtin, "a or b");
  render_dis->add_flag("--show-cancelled", r_dis.show_cancelled, "draw cancelled pairs");
  render_dis->add_option("--out", out_path, "output file (default stdout)");

  // sweep
  std::string sweep_mode = "n2";
  Int sweep_range = 6, sweep_trange = 12;
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep", "exhaustive geometric check of the construction");
  sweep->add_option("--mode", sweep_mode, "n2 or n20")->capture_default_str();
  sweep->add_option("--range", sweep_range, "n, k, l in [-R, R]")->capture_default_str();
  sweep->add_option("--trange", sweep_trange, "t in [-T, T]")->capture_default_str();
  sweep->add_flag("--json", sweep_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto output = [&](const std::string& svg) {
    if (out_path.empty()) {
      std::cout << svg;
    } else {
      write_file(out_path, svg);
    }
    return kExitTrue;
  };

  try {
    if (*verify_eq8) return run_verify_eq8(eq8);
    if (*verify_id) return run_verify_identity(ident);
    if (*dissect) return run_dissect(dis);
    if (*classify) return run_classify(cls);
    if (*solve) return run_solve(base_s, target_s, solve_json);
    if (*sweep) return run_sweep(sweep_mode, sweep_range, sweep_trange, sweep_json);
    if (*render_eq8) return output(to_svg(eq8_scene(eq8_layout(placed(0, 0, r_eq8.t), r_eq8.n, r_eq8.k, r_eq8.l))));
    if (*render_w) {
      if (w_family != "eq26" && w_family != "eq30") throw UsageError("witness family must be eq26 or eq30");
      const auto [target, terms] = identity_witness(w_family, {w_n});
      return output(to_svg(witness_scene(target, terms, mode_from(w_mode))));
    }
    if (*render_dis) {
      const DissectionResult r = interpret(load_script(r_dis.script_path, r_dis.builtin));
      return output(to_svg(dissection_scene(r, r_dis.show_cancelled)));
    }
  } catch (const UsageError& e) {
    std::cerr << "tri: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tri: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InterpretError& e) {
    std::cerr << "tri: " << e.what() << '\n';
    return kExitFalse;
  } catch (const OverflowError& e) {
    std::cerr << "tri: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
