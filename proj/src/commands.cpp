#include "wcomp/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "wcomp/dynamics.hpp"
#include "wcomp/verification.hpp"

namespace wcomp {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit(const json& report, const std::optional<std::string>& path, std::ostream& out, std::ostream& log) {
  if (path) {
    std::ofstream file(*path);
    if (!file) {
      throw SpecError("--out", "cannot write " + *path);
    }
    file << report.dump(2) << '\n';
    log << "report written to " << *path << '\n';
  } else {
    out << report.dump(2) << '\n';
  }
}

std::string describe(const BoundaryClassification& b) {
  return std::string(to_string(b.kind)) + " (" + std::string(to_string(b.consistency)) + "): " + b.explanation;
}

json coeffs_json(const TaylorPoly& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(to_json(c));
  return arr;
}

void write_margin_dump(const OperatorSymbols& sym, const DiskGrid& grid, const std::string& path) {
  std::ofstream file(path);
  if (!file) {
    throw SpecError("--dump-margins", "cannot write " + path);
  }
  file << "r,theta,margin\n" << std::setprecision(17);
  for (double r : grid.all_radii()) {
    for (double t : grid.angles) {
      file << r << ',' << t << ',' << criterion_margin(sym, std::polar(r, t)) << '\n';
    }
  }
}

// Shared front half of the commands that read a symbol file.
struct Loaded {
  SymbolSpec spec;
  OperatorSymbols sym;
};

Loaded load(const std::string& path, std::optional<double> tol, const std::optional<GridSpec>& grid) {
  auto spec = load_symbol_spec(path);
  if (tol) spec.tol = *tol;
  if (grid) spec.grid = *grid;
  auto sym = spec.to_symbols();
  return {std::move(spec), std::move(sym)};
}

}  // namespace

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return kExitPass;
    case Verdict::kFail:
      return kExitFail;
    case Verdict::kInconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

TaylorPoly start_function(const AlphaParam& alpha, const std::string& choice, int deg) {
  if (choice == "h_alpha") return extreme_point(alpha, 1.0, deg);
  if (choice == "one") return TaylorPoly::constant(1.0, deg);
  const std::string prefix = "extreme:";
  if (choice.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const auto text = choice.substr(prefix.size());
      const double theta = std::stod(text, &used);
      if (used == text.size()) return extreme_point(alpha, std::polar(1.0, theta), deg);
    } catch (const std::logic_error&) {
    }
  }
  throw SpecError("--start", "expected h_alpha, one, or extreme:<theta>, got \"" + choice + "\"");
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& log) {
  try {
    const auto [spec, sym] = load(opts.spec_path, opts.tol, opts.grid);
    const auto grid = spec.grid.to_grid();
    const auto start = Clock::now();
    const auto report = check_preservation(sym, grid, spec.tol);
    const double check_ms = ms_since(start);

    json timings = {{"check_ms", check_ms}};
    if (opts.dump_margins_path) {
      const auto dump_start = Clock::now();
      write_margin_dump(sym, grid, *opts.dump_margins_path);
      timings["dump_ms"] = ms_since(dump_start);
    }
    json j = {{"command", "check"},
              {"verdict", to_string(report.verdict)},
              {"min_margin", report.min_margin},
              {"witness", to_json(report.witness)},
              {"samples_checked", report.samples_checked},
              {"tol", spec.tol},
              {"classification", report.boundary_verdict ? describe(*report.boundary_verdict) : "not probed"},
              {"timings", timings}};
    emit(j, opts.out_path, out, log);
    log << to_string(report.verdict) << ": min margin " << report.min_margin << " at z = " << report.witness
        << " over " << report.samples_checked << " samples\n";
    return exit_code_for(report.verdict);
  } catch (const SpecError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int cmd_verify_examples(const VerifyOptions& opts, std::ostream& out, std::ostream& log) {
  std::vector<ClaimResult> results;
  try {
    results = run_verification(opts.seed, opts.only);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  bool all = true;
  json j = {{"command", "verify-examples"}, {"seed", opts.seed}, {"claims", json::array()}};
  out << std::left << std::setw(22) << "claim" << std::setw(8) << "status" << std::setw(10) << "time"
      << "detail\n";
  for (const auto& r : results) {
    all = all && r.passed;
    out << std::left << std::setw(22) << r.id << std::setw(8) << (r.passed ? "PASS" : "FAIL") << std::setw(10)
        << (std::to_string(static_cast<int>(r.seconds * 1000.0)) + "ms") << r.detail << '\n';
    j["claims"].push_back(
        {{"id", r.id}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  j["all_passed"] = all;
  if (opts.out_path) {
    try {
      emit(j, opts.out_path, out, log);
    } catch (const SpecError& e) {
      log << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return all ? kExitPass : kExitFail;
}

int cmd_iterate(const IterateOptions& opts, std::ostream& out, std::ostream& log) {
  try {
    const auto [spec, sym] = load(opts.spec_path, std::nullopt, std::nullopt);
    const auto f0 = start_function(sym.alpha(), opts.start, opts.deg);

    const auto rc = classify_rotation(sym.phi());
    if (rc.kind != RotationKind::kNotRotation) {
      try {
        require_unweighted_rotation(sym, rc);
      } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return kExitInput;
      }
      json j = {{"command", "iterate"},
                {"rotation", to_string(rc.kind)},
                {"lambda", to_json(*rc.lambda)},
                {"order", rc.order},
                {"fixed_set", describe_fixed_set(rc)},
                {"start", opts.start},
                {"start_in_fixed_set", in_rotation_fixed_set(rc, f0, opts.tol)}};
      emit(j, opts.out_path, out, log);
      log << to_string(rc.kind) << ": " << describe_fixed_set(rc) << '\n';
      return kExitPass;
    }

    const auto check = check_preservation(sym, spec.grid.to_grid(), spec.tol);
    if (check.verdict != Verdict::kPass) {
      log << "preservation check " << to_string(check.verdict) << " (min margin " << check.min_margin
          << "); iteration needs an operator that maps P_alpha into itself\n";
      return exit_code_for(check.verdict);
    }

    const auto start = Clock::now();
    const auto trace = iterate_to_fixed_point(sym, f0, opts.deg, opts.tol, opts.max_iter);
    json j = {{"command", "iterate"},
              {"rotation", to_string(rc.kind)},
              {"start", opts.start},
              {"converged", trace.converged},
              {"steps", trace.steps},
              {"residuals", trace.residuals},
              {"final_coeffs", coeffs_json(trace.limit())}};
    int code = trace.converged ? kExitPass : kExitNoConvergence;
    if (opts.second_start) {
      const auto g0 = start_function(sym.alpha(), *opts.second_start, opts.deg);
      const auto second = iterate_to_fixed_point(sym, g0, opts.deg, opts.tol, opts.max_iter);
      const double gap = coeff_distance(trace.limit(), second.limit());
      const bool agrees = second.converged && gap < 10.0 * opts.tol;
      j["second_start"] = {{"start", *opts.second_start},
                           {"converged", second.converged},
                           {"steps", second.steps},
                           {"max_coeff_discrepancy", gap},
                           {"agrees", agrees}};
      if (!second.converged) {
        code = kExitNoConvergence;
      } else if (!agrees && code == kExitPass) {
        code = kExitFail;
      }
      log << "second start " << *opts.second_start << ": max coefficient discrepancy " << gap << '\n';
    }
    j["timings"] = {{"iterate_ms", ms_since(start)}};
    emit(j, opts.out_path, out, log);
    log << (trace.converged ? "converged" : "NO_CONVERGENCE") << " after " << trace.steps << " steps, last residual "
        << (trace.residuals.empty() ? 0.0 : trace.residuals.back()) << '\n';
    return code;
  } catch (const SpecError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int cmd_classify(const ClassifyOptions& opts, std::ostream& out, std::ostream& log) {
  try {
    const auto [spec, sym] = load(opts.spec_path, std::nullopt, opts.grid);
    const auto grid = spec.grid.to_grid();
    const auto b = boundary_classify(sym, grid.angles, grid.boundary_radii, opts.fraction_tol);
    const auto rc = classify_rotation(sym.phi());
    json j = {{"command", "classify"},
              {"kind", to_string(b.kind)},
              {"consistency", to_string(b.consistency)},
              {"phi_unimodular_fraction", b.phi_unimodular_fraction},
              {"omega_unimodular_fraction", b.omega_unimodular_fraction},
              {"phi_norm", b.phi_norm},
              {"omega_norm", b.omega_norm},
              {"explanation", b.explanation},
              {"rotation", to_string(rc.kind)},
              {"fixed_set", describe_fixed_set(rc)}};
    emit(j, opts.out_path, out, log);
    log << describe(b) << '\n';
    switch (b.consistency) {
      case Consistency::kConsistent:
        return kExitPass;
      case Consistency::kInconsistent:
        return kExitFail;
      case Consistency::kUndetermined:
        return kExitInconclusive;
    }
    return kExitInconclusive;
  } catch (const SpecError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace wcomp
