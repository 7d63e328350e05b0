#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "fgv/errors.hpp"
#include "report.hpp"

namespace fgv::cli {
namespace {

using nlohmann::json;

json problem_json(const ProblemSpec& spec) {
  return {{"name", spec.name}, {"F", spec.F_text}, {"omega", {{"dx", spec.dx_text}, {"dy", spec.dy_text}}}};
}

json melnikov_json(const MelnikovResult& mel) {
  auto out = json::array();
  for (const auto& m : mel.melnikov) out.push_back(m.to_string());
  return out;
}

json optional_json(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

/// Symbolic M_i(t) against the oracle's jet, where both exist.
json cross_check(const ProblemSpec& spec, const std::vector<json>& estimates, unsigned orders, bool& agree) {
  agree = true;
  if (!spec.poly_omega) return {{"available", false}};
  const MelnikovResult mel = melnikov_sequence(spec.family, *spec.poly_omega, orders);
  double worst = 0;
  for (const auto& est : estimates) {
    const double t = est["t"].get<double>();
    const auto& coeffs = est["coefficients"];
    for (std::size_t i = 0; i < mel.melnikov.size() && i < coeffs.size(); ++i) {
      const double sym = mel.melnikov[i].evaluate(t);
      const double err = std::fabs(coeffs[i].get<double>() - sym);
      worst = std::max(worst, err);
      if (err > 1e-4 * std::fabs(sym) + 1e-6) agree = false;
    }
  }
  return {{"available", true}, {"agree", agree}, {"max_abs_error", worst}};
}

}  // namespace

CommandResult guarded(const std::function<CommandResult()>& fn) {
  auto fail = [](int code, const std::string& kind, const std::string& msg) {
    CommandResult r;
    r.exit_code = code;
    r.report = {{"error", {{"kind", kind}, {"message", msg}}}};
    return r;
  };
  try {
    return fn();
  } catch (const InvalidInput& e) {
    return fail(kInvalidInput, "InvalidInput", e.what());
  } catch (const ParseError& e) {
    return fail(kInvalidInput, "ParseError", e.what());
  } catch (const UnsupportedOvalFamily& e) {
    return fail(kInvalidInput, "UnsupportedOvalFamily", e.what());
  } catch (const LeafEscapedAnnulus& e) {
    return fail(kInvalidInput, "LeafEscapedAnnulus", e.what());
  } catch (const DenominatorVanished& e) {
    return fail(kInvalidInput, "DenominatorVanished", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kInvalidInput, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return fail(kInternalError, "InternalConsistencyError", e.what());
  }
}

CommandResult cmd_melnikov(const ProblemSpec& spec, std::optional<unsigned> max_order) {
  const unsigned order = max_order.value_or(spec.max_order);
  if (order < 1) throw InvalidInput("max_order must be positive");
  const PolyForm1& w = spec.polynomial_omega();
  const MelnikovResult mel = melnikov_sequence(spec.family, w, order);
  if (!gelfand_leray_holds(mel.sequence, w, spec.family)) {
    throw InternalConsistencyError("a Francoise pair violates d(g_{i-1} w) = dg_i ^ dF");
  }
  const FirstIntegral fint = first_integral(spec.family, mel.sequence, static_cast<unsigned>(mel.sequence.size()));

  CommandResult out;
  out.report = {
      {"command", "melnikov"},
      {"problem", problem_json(spec)},
      {"max_order", order},
      {"melnikov", melnikov_json(mel)},
      {"first_nonzero", optional_json(mel.first_nonzero)},
      {"pairs", pairs_json(mel.sequence)},
      {"gv_pairs", gv_pairs_json(gv_pairs_from_francoise(mel.sequence))},
      {"length", length_json(sequence_length(mel.sequence, order))},
      {"first_integral", series_text(fint.series)},
  };
  return out;
}

CommandResult cmd_gv(const ProblemSpec& spec, unsigned k) {
  const PolyForm1& w = spec.polynomial_omega();
  const MelnikovResult mel = melnikov_sequence(spec.family, w, k + 1);
  const GVSolveResult direct = solve_gv_weightwise(spec.family, w, k);

  CommandResult out;
  out.report = {{"command", "gv"}, {"problem", problem_json(spec)}, {"k", k}, {"melnikov", melnikov_json(mel)}};

  if (mel.first_nonzero) {
    const unsigned mu = *mel.first_nonzero;
    const PeriodPoly& m_mu = mel.melnikov[mu - 1];
    if (!direct.obstruction || direct.obstruction->order != mu || !(direct.obstruction->melnikov == m_mu)) {
      throw InternalConsistencyError("weight-by-weight solver disagrees with the Melnikov obstruction at order " +
                                     std::to_string(mu));
    }
    out.report["obstruction"] = {
        {"kind", "ObstructionAtOrder"},
        {"order", mu},
        {"witness", m_mu.to_string()},
        {"defect_period", direct.obstruction->defect_period.to_string()},
    };
    out.exit_code = kObstruction;
    return out;
  }
  if (direct.obstruction) {
    throw InternalConsistencyError("weight-by-weight solver is obstructed while every M_i vanishes");
  }

  const std::vector<GVPair> pairs = gv_pairs_from_francoise(mel.sequence);
  json defects = json::array();
  bool all_zero = true;
  for (unsigned j = 0; j <= k; ++j) {
    const bool zero = integrability_defect(assemble_omega(spec.family, w, pairs, j), j).is_zero();
    all_zero = all_zero && zero;
    defects.push_back(zero);
  }

  const FirstIntegral fint = first_integral(spec.family, mel.sequence, k);
  const EpsSeries<BivarPoly> N = integrating_factor(assemble_omega(spec.family, w, pairs, k), fint, k);
  const FrancoiseSequence back = francoise_from_first_integral(spec.family, w, fint, k);
  const bool readback = std::equal(back.pairs().begin(), back.pairs().end(), mel.sequence.pairs().begin());
  const LengthTwoWitness wit = length_two_witness(spec.family, w, mel.sequence, k);
  const bool witness_ok =
      wit.theta_closed && wit.log_derivative_relation && wit.closed_product && wit.integrates_to_first_integral;

  out.report["gv_pairs"] = gv_pairs_json(std::vector<GVPair>(pairs.begin(), pairs.begin() + k + 1));
  out.report["defect_zero"] = defects;
  out.report["first_integral"] = series_text(fint.series);
  out.report["integrating_factor"] = series_text(N);
  out.report["readback_matches"] = readback;
  out.report["witness"] = {
      {"theta_closed", wit.theta_closed},
      {"log_derivative_relation", wit.log_derivative_relation},
      {"closed_product", wit.closed_product},
      {"integrates_to_first_integral", wit.integrates_to_first_integral},
  };
  bool relations_ok = true;
  const BivarPoly& r1 = fint.series.order() >= 1 ? fint.series[1] : BivarPoly();
  if (k >= 1 && !r1.is_zero()) {
    // Rational-function arithmetic grows quickly; three forms cover the
    // first two relations.
    const unsigned m = std::min(k - 1, 2u);
    const GVClassicalSequence gv = classical_gv_forms(fint, m);
    json eta = json::array(), coeffs = json::array(), eta_dF = json::array(), rel = json::array();
    Rational fact(1);
    for (unsigned i = 0; i <= m; ++i) {
      if (i > 0) fact *= i;
      eta.push_back(to_string(gv.eta[i]));
      const RationalFunction inv_fact{Rational(1) / fact};
      coeffs.push_back(to_string(inv_fact * gv.eta[i]));
      eta_dF.push_back(to_string(gv.eta_of_dF[i]));
    }
    for (unsigned n = 0; n + 1 <= m; ++n) {
      const bool zero = gv_relation_residual(gv.eta, n).is_zero();
      relations_ok = relations_ok && zero;
      rel.push_back(zero);
    }
    out.report["classical_gv"] = {
        {"eta", eta}, {"eps_coefficients", coeffs}, {"eta_of_dF", eta_dF}, {"relations_hold", rel}};
  }
  if (!all_zero || !readback || !witness_ok || !relations_ok) out.exit_code = kInternalError;
  return out;
}

CommandResult cmd_oracle(const ProblemSpec& spec, const OracleOptions& opts) {
  const std::vector<double> ts = opts.t.value_or(spec.t_samples);
  const std::vector<double> eps = opts.eps.value_or(spec.eps_samples);
  if (ts.empty()) throw InvalidInput("oracle needs at least one t sample");
  if (eps.empty()) throw InvalidInput("oracle needs at least one eps sample");
  for (double t : ts) {
    if (!(t > 0)) throw InvalidInput("t samples must be positive");
  }

  const NumericForm w(spec.omega);
  CommandResult out;
  out.samples = displacement_sweep(spec.family, w, ts, eps, opts.config);

  double max_abs = 0;
  for (const auto& s : out.samples) max_abs = std::max(max_abs, std::fabs(s.delta));

  std::vector<json> estimates;
  for (double t : ts) {
    const MelnikovEstimate est = melnikov_estimate(spec.family, w, t, spec.oracle_orders, opts.config);
    estimates.push_back({
        {"t", t},
        {"coefficients", est.coefficients},
        {"condition_number", est.condition_number},
        {"ill_conditioned", est.ill_conditioned},
        {"residual_norm", est.residual_norm},
    });
  }
  bool agree = true;
  const json check = cross_check(spec, estimates, spec.oracle_orders, agree);

  out.report = {
      {"command", "oracle"},
      {"problem", problem_json(spec)},
      {"step_count", opts.config.step_count},
      {"samples", samples_json(out.samples)},
      {"max_abs_delta", max_abs},
      {"melnikov_estimates", estimates},
      {"cross_check", check},
  };
  if (!agree) out.exit_code = kInternalError;
  return out;
}

namespace {

struct FixtureChecks {
  json checks = json::array();
  bool ok = true;
  void add(const std::string& name, bool pass, const std::string& detail = {}) {
    ok = ok && pass;
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  }
};

void verify_fixture(const ProblemSpec& spec, FixtureChecks& fc) {
  const json ex = spec.expect.is_object() ? spec.expect : json::object();

  if (spec.poly_omega) {
    const CommandResult mel = guarded([&] { return cmd_melnikov(spec); });
    fc.add("melnikov runs", mel.exit_code == kSuccess, mel.report.value("error", json()).dump());
    if (mel.exit_code != kSuccess) return;
    const json& r = mel.report;
    if (ex.contains("first_nonzero")) {
      fc.add("first_nonzero", r["first_nonzero"] == ex["first_nonzero"], r["first_nonzero"].dump());
    }
    if (ex.contains("melnikov")) {
      bool match = ex["melnikov"].size() <= r["melnikov"].size();
      for (std::size_t i = 0; match && i < ex["melnikov"].size(); ++i) match = r["melnikov"][i] == ex["melnikov"][i];
      fc.add("melnikov values", match, r["melnikov"].dump());
    }
    if (ex.contains("g")) {
      bool match = ex["g"].size() <= r["pairs"].size();
      for (std::size_t i = 0; match && i < ex["g"].size(); ++i) match = r["pairs"][i]["g"] == ex["g"][i];
      fc.add("g sequence", match);
    }
    if (ex.contains("length")) fc.add("length", r["length"] == ex["length"], r["length"].dump());

    const unsigned k = ex.value("gv_k", std::min(spec.max_order - 1, 4u));
    const CommandResult gv = guarded([&] { return cmd_gv(spec, k); });
    fc.add("gv k=" + std::to_string(k) + " consistent", gv.exit_code != kInternalError && gv.exit_code != kInvalidInput,
           gv.report.value("error", json()).dump());
    if (ex.contains("gv_obstruction_order")) {
      const json got = gv.report.contains("obstruction") ? gv.report["obstruction"]["order"] : json(nullptr);
      fc.add("gv obstruction order", got == ex["gv_obstruction_order"], got.dump());
    }
  }

  if (!spec.t_samples.empty() || !spec.eps_samples.empty()) {
    const CommandResult orc = guarded([&] { return cmd_oracle(spec); });
    fc.add("oracle runs", orc.exit_code == kSuccess, orc.report.value("error", json()).dump());
    if (orc.exit_code != kSuccess) return;
    if (ex.contains("max_abs_delta")) {
      const double got = orc.report["max_abs_delta"].get<double>();
      fc.add("max |delta|", got < ex["max_abs_delta"].get<double>(), std::to_string(got));
    }
    if (ex.contains("melnikov_estimate")) {
      const auto& want = ex["melnikov_estimate"];
      const double tol = want.value("rel_tol", 1e-6);
      bool match = true;
      std::string detail;
      const auto& got = orc.report["melnikov_estimates"][0]["coefficients"];
      for (std::size_t i = 0; i < want["values"].size(); ++i) {
        const double v = want["values"][i].get<double>();
        const double g = got.at(i).get<double>();
        match = match && std::fabs(g - v) <= tol * std::fabs(v);
        detail += (detail.empty() ? "" : ",") + std::to_string(g);
      }
      fc.add("melnikov estimate", match, detail);
    }
  }
}

}  // namespace

CommandResult cmd_verify_all(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InvalidInput("fixture directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidInput("no fixtures in " + dir);

  CommandResult out;
  json fixtures = json::array();
  std::ostringstream summary;
  bool all_ok = true;
  for (const auto& f : files) {
    FixtureChecks fc;
    try {
      verify_fixture(load_spec(f.string()), fc);
    } catch (const std::exception& e) {
      fc.add("load", false, e.what());
    }
    all_ok = all_ok && fc.ok;
    summary << (fc.ok ? "PASS " : "FAIL ") << f.filename().string() << '\n';
    for (const auto& c : fc.checks) {
      if (!c["pass"].get<bool>()) summary << "  failed: " << c["name"].get<std::string>() << ' ' << c["detail"].get<std::string>() << '\n';
    }
    fixtures.push_back({{"fixture", f.filename().string()}, {"pass", fc.ok}, {"checks", fc.checks}});
  }
  out.report = {{"command", "verify-all"}, {"fixtures", fixtures}, {"pass", all_ok}};
  out.summary = summary.str();
  out.exit_code = all_ok ? kSuccess : kInternalError;
  return out;
}

}  // namespace fgv::cli
