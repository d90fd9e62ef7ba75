#include "augtwist/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "augtwist/configspace.hpp"
#include "augtwist/degree5.hpp"
#include "augtwist/embedding.hpp"
#include "augtwist/loopsolver.hpp"
#include "augtwist/trace_io.hpp"
#include "augtwist/verify.hpp"

namespace augtwist {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool degrees = false;
  std::string case_name = "1";
  std::optional<double> u1;
  std::string mode = "A";
  int variant = 0;
  int direction = 1;
  double step = 0.02;
  std::vector<double> range;
  std::string format = "csv";
  std::string output;
  int samples = 1024;
  bool open_flat = false;
  std::uint64_t seed = VerifyOptions{}.seed;
};

double to_radians(const Options& o, double x) { return o.degrees ? deg(x) : x; }

CaseSpec case_of(const Options& o) {
  try {
    return CaseSpec::parse(o.case_name);
  } catch (const std::invalid_argument&) {
    throw UsageError("--case must be one of 1, 2, 3a, 3b");
  }
}

// u1 in radians, required, inside (−π, π) and not 0.
double generic_u1(const Options& o) {
  if (!o.u1) throw UsageError("--u1 is required");
  const double u = to_radians(o, *o.u1);
  if (u == 0.0) throw UsageError("--u1 = 0 is the unfolded state, where every root is degenerate");
  if (!(std::abs(u) < kPi)) throw UsageError("--u1 must lie in (-pi, pi)");
  return u;
}

Track track_of(const std::string& s) {
  if (s == "A") return Track::A;
  if (s == "B") return Track::B;
  if (s == "C") return Track::C;
  throw UsageError("--mode must be A, B, C or hybrid");
}

FoldingMode mode_of(const Options& o) {
  FoldingMode m;
  m.case_spec = case_of(o);
  m.track = track_of(o.mode);
  m.variant = o.variant;
  m.direction = o.direction;
  if (m.track == Track::C) {
    if (o.variant < 0 || o.variant >= expected_c_count(m.case_spec))
      throw UsageError("--variant out of range for case " + m.case_spec.name());
  } else if (o.variant != 0) {
    throw UsageError("--variant applies to C modes only");
  }
  m.classification = m.track == Track::A   ? Classification::NonDegenerate
                     : m.track == Track::B ? Classification::DisconnectedFromOrigin
                                           : Classification::DegenerateZetaZero;
  return m;
}

// Writes to --output when given, else to out.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + o.output + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + o.output);
}

std::string num(double x) { return format_number(x); }

char branch_char(Branch b) { return b == Branch::Plus ? '+' : '-'; }

int cmd_intersections(const Options& o, std::ostream& out, std::ostream& err) {
  const CaseSpec cs = case_of(o);
  const double u1 = generic_u1(o);
  const IntersectionReport rep = find_intersections(u1, cs);
  std::ostringstream s;
  s << "label,u1,zeta,residual,branch_v3,branch_v4,phi1,phi2,branch_degenerate\n";
  auto row = [&](std::string_view label, const LoopRoot& r) {
    s << label << ',' << num(r.u1) << ',' << num(r.zeta) << ',' << num(r.residual) << ','
      << branch_char(r.branches.v3) << ',' << branch_char(r.branches.v4) << ',' << num(r.phi1) << ','
      << num(r.phi2) << ',' << (r.branch_degenerate ? 1 : 0) << '\n';
  };
  for (const auto& p : rep.points) row(label_name(p.label), p.root);
  for (const auto& r : rep.anomalies) row("?", r);
  emit(o, s.str(), out);
  if (!rep.anomalies.empty()) {
    err << rep.anomalies.size() << " root(s) match no curve law\n";
    return kExitFailure;
  }
  if (!is_complete(rep, cs)) {
    err << "expected one A, one B and " << expected_c_count(cs) << " C point(s); found " << rep.count(PointLabel::A)
        << ", " << rep.count(PointLabel::B) << ", " << rep.count(PointLabel::C) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_curves(const Options& o, std::ostream& out, std::ostream&) {
  const CaseSpec cs = case_of(o);
  const double u1 = generic_u1(o);
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  const double u2 = u2_from_u1(u1, cs.v1);
  auto cell = [](std::optional<double> x) { return x ? num(*x) : std::string(); };
  std::ostringstream s;
  s << "zeta,phi1_plus,phi1_minus,phi2_plus_mapped,phi2_minus_mapped\n";
  for (int k = 0; k < o.samples; ++k) {
    const double z = -kPi + 2.0 * kPi * k / (o.samples - 1);
    s << num(z);
    for (Branch b : {Branch::Plus, Branch::Minus}) s << ',' << cell(phi_from(u1, z, b));
    // φ2 from v4 driven by u2, carried to the φ1 axis by v2's mode.
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      auto st = solve_reverse(u2, z, b);
      s << ',' << cell(st ? std::optional<double>(phi1_demanded(st->cw_side, cs.v2)) : std::nullopt);
    }
    s << '\n';
  }
  emit(o, s.str(), out);
  return kExitOk;
}

int cmd_trace(const Options& o, std::ostream& out, std::ostream& err) {
  const TraceFormat format = [&] {
    try {
      return parse_trace_format(o.format);
    } catch (const std::invalid_argument&) {
      throw UsageError("--format must be csv or json");
    }
  }();
  if (!(o.step > 0.0 && o.step <= 0.5)) throw UsageError("--step must lie in (0, 0.5]");

  TraceCurve t;
  if (o.mode == "hybrid") {
    if (case_of(o) != CaseSpec::parse("2")) throw UsageError("the hybrid trace exists for case 2 only");
    if (!o.range.empty()) throw UsageError("--range does not apply to the hybrid trace");
    t = hybrid_iso_area_trace(o.step).curve;
  } else {
    const FoldingMode m = mode_of(o);
    if (o.range.empty()) {
      t = full_trace(m, o.step);
    } else {
      TraceOptions opts;
      opts.u1_from = to_radians(o, o.range[0]);
      opts.u1_to = to_radians(o, o.range[1]);
      opts.step = o.step;
      try {
        t = trace_mode(m, opts);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (o.open_flat) append_flat_opening(t, o.step);
  }
  emit(o, format == TraceFormat::Csv ? trace_csv(t) : trace_json(t), out);
  if (!t.stop_reason.empty()) {
    err << "trace stopped: " << t.stop_reason << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_modes(const Options& o, std::ostream& out, std::ostream& err) {
  const auto modes = enumerate_origin_modes();
  std::ostringstream s;
  s << "mode,case,track,variant,classification,extrapolated_origin_norm\n";
  int nondegenerate = 0;
  for (const auto& m : modes) {
    const bool fold_line = m.track == Track::FoldLine;
    s << m.name() << ',' << (fold_line ? "-" : m.case_spec.name()) << ',' << track_name(m.track) << ','
      << m.variant << ',' << classification_name(m.classification) << ','
      << (fold_line ? "0" : num(origin_connectivity(m).extrapolated)) << '\n';
    if (m.classification == Classification::NonDegenerate) ++nondegenerate;
  }
  emit(o, s.str(), out);
  if (nondegenerate != 4) {
    err << nondegenerate << " non-degenerate modes found, expected 4\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_embed(const Options& o, std::ostream& out, std::ostream& err) {
  const FoldingMode m = mode_of(o);
  const double u1 = generic_u1(o);
  auto root = seed_root(m, u1);
  if (!root) {
    err << "no " << track_name(m.track) << " point of case " << m.case_spec.name() << " at u1 = " << num(u1) << '\n';
    return kExitFailure;
  }
  const Configuration c = assemble(u1, root->zeta, m.case_spec, root->branches);
  const CreasePattern pat = build_pattern();
  const FoldedState st = embed(pat, c);
  emit(o, obj_text(st), out);
  if (st.mismatch >= 1e-8 * pat.diameter) {
    err << "embedding does not close: mismatch " << num(st.mismatch) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

// Runs a few commands twice and compares their output byte for byte.
CheckResult cli_determinism() {
  const std::vector<std::vector<std::string>> cmds = {
      {"intersections", "--case", "1", "--u1", "1.6"},
      {"curves", "--case", "3a", "--u1", "0.7", "--samples", "64"},
      {"trace", "--case", "2", "--mode", "A", "--range", "0.2", "0.6", "--format", "json"},
      {"embed", "--case", "1", "--mode", "A", "--u1", "1.6"},
  };
  bool same = true;
  for (const auto& c : cmds) {
    std::ostringstream a, b, e;
    run_cli(c, a, e);
    run_cli(c, b, e);
    same &= a.str() == b.str() && !a.str().empty();
  }
  return CheckResult{"cli.deterministic_output", same, same ? 0.0 : 1.0, 0.0, {}};
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  VerifyOptions vo;
  vo.seed = o.seed;
  auto results = run_invariant_suite(vo);
  results.push_back(cli_determinism());
  std::ostringstream s;
  for (const auto& r : results) {
    s << (r.passed ? "PASS " : "FAIL ") << r.name << " worst=" << num(r.worst) << " tol=" << num(r.tolerance);
    if (!r.detail.empty()) s << " (" << r.detail << ')';
    s << '\n';
  }
  const bool ok = all_passed(results);
  s << (ok ? "all checks passed\n" : "some checks failed\n");
  emit(o, s.str(), out);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kinematics of the augmented square twist", "augtwist"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--degrees", o.degrees, "Read input angles in degrees (output stays in radians)");

  auto add_case = [&](CLI::App* sub) { sub->add_option("--case", o.case_name, "1, 2, 3a or 3b")->capture_default_str(); };
  auto add_u1 = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--u1", o.u1, "Driving angle u1");
    if (required) opt->required();
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Write to this file instead of stdout"); };
  auto add_mode = [&](CLI::App* sub, std::string help) {
    sub->add_option("--mode", o.mode, std::move(help))->capture_default_str();
    sub->add_option("--variant", o.variant, "Which C point in cases 3a/3b (0 or 1)")->capture_default_str();
  };

  auto* inter = app.add_subcommand("intersections", "Labelled loop roots at one u1");
  add_case(inter);
  add_u1(inter, true);
  add_output(inter);

  auto* curves = app.add_subcommand("curves", "phi1 curves and mapped phi2 curves over zeta");
  add_case(curves);
  add_u1(curves, true);
  curves->add_option("--samples", o.samples, "Number of zeta samples")->capture_default_str();
  add_output(curves);

  auto* trace = app.add_subcommand("trace", "Trace a folding mode");
  add_case(trace);
  add_mode(trace, "A, B, C or hybrid");
  trace->add_option("--direction", o.direction, "Sign of u1 along the trace")->check(CLI::IsMember({-1, 1}));
  trace->add_option("--step", o.step, "Largest angle change between samples")->capture_default_str();
  trace->add_option("--range", o.range, "u1 interval (same sign, may end at 0 or pi)")->expected(2);
  trace->add_option("--format", o.format, "csv or json")->capture_default_str();
  trace->add_flag("--open-flat", o.open_flat, "At u1 = pi, continue along the flat family to zeta = 0");
  add_output(trace);

  auto* modes = app.add_subcommand("modes", "Classify the folding modes through the unfolded state");
  add_output(modes);

  auto* emb = app.add_subcommand("embed", "OBJ mesh of the folded pattern");
  add_case(emb);
  add_mode(emb, "A, B or C");
  add_u1(emb, true);
  emb->add_option("--direction", o.direction, "Sign of u1 on the traced branch")->check(CLI::IsMember({-1, 1}));
  add_output(emb);

  auto* ver = app.add_subcommand("verify", "Run every invariant check");
  ver->add_option("--seed", o.seed, "Seed for random samples")->capture_default_str();
  add_output(ver);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inter) return cmd_intersections(o, out, err);
    if (*curves) return cmd_curves(o, out, err);
    if (*trace) return cmd_trace(o, out, err);
    if (*modes) return cmd_modes(o, out, err);
    if (*emb) return cmd_embed(o, out, err);
    if (*ver) return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace augtwist
