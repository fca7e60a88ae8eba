#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "kitaev/analysis.hpp"
#include "kitaev/errors.hpp"
#include "kitaev/hamiltonian.hpp"
#include "kitaev/model.hpp"
#include "kitaev/spectrum.hpp"
#include "kitaev/sweep.hpp"

namespace kitaev::cli {

namespace {

namespace fs = std::filesystem;

// Raised while assembling inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChainFlags {
  std::string spec_path;
  int n = 12;
  double t = 1.0;
  double delta = 1.0;
  double mu = 0.0;
  std::string profile = "zero";
  double g0 = 0.0;
  double max_g = 0.0;
  std::uint64_t seed = 0;
  int gain_site = 2;
  int loss_site = 0;

  std::vector<CLI::Option*> inline_options;
  CLI::Option* spec_option = nullptr;
};

void add_chain_flags(CLI::App* cmd, ChainFlags& f, bool allow_spec) {
  auto& opts = f.inline_options;
  opts.push_back(cmd->add_option("--n", f.n, "Number of sites")->capture_default_str());
  opts.push_back(cmd->add_option("--t", f.t, "Hopping amplitude T")->capture_default_str());
  opts.push_back(cmd->add_option("--delta", f.delta, "Pairing amplitude")->capture_default_str());
  opts.push_back(cmd->add_option("--mu", f.mu, "Chemical potential")->capture_default_str());
  opts.push_back(cmd->add_option("--profile", f.profile,
                                 "Gain/loss profile: zero, alternating, two-impurity, random")
                     ->capture_default_str());
  opts.push_back(cmd->add_option("--g0", f.g0, "Profile strength")->capture_default_str());
  opts.push_back(cmd->add_option("--max-g", f.max_g, "Random profile bound")->capture_default_str());
  opts.push_back(cmd->add_option("--gain-site", f.gain_site, "Two-impurity gain site (1-based)")
                     ->capture_default_str());
  opts.push_back(cmd->add_option("--loss-site", f.loss_site,
                                 "Two-impurity loss site (1-based, 0 = N-1)")
                     ->capture_default_str());
  opts.push_back(cmd->add_option("--seed", f.seed, "Random profile seed")->capture_default_str());
  if (allow_spec) {
    f.spec_option = cmd->add_option("--spec", f.spec_path, "Chain spec JSON file");
    for (CLI::Option* o : opts) f.spec_option->excludes(o);
  }
}

ChainSpec assemble_chain(const ChainFlags& f) {
  try {
    if (!f.spec_path.empty()) return load_chain_spec(f.spec_path);
    ProfileRecipe recipe;
    recipe.kind = parse_profile_kind(f.profile);
    if (recipe.kind == ProfileKind::Custom) {
      throw UsageError("custom profiles are read from --spec files");
    }
    recipe.g0 = f.g0;
    recipe.max_strength = f.max_g;
    recipe.seed = f.seed;
    recipe.gain_site = f.gain_site;
    recipe.loss_site = f.loss_site;
    const double strength = recipe.kind == ProfileKind::Random ? f.max_g : f.g0;
    return ChainSpec(f.n, f.t, f.delta, f.mu, recipe.make(f.n, strength));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
      return fs::path(dir) / p;
    }
  }
  return p;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex z, int precision = 10) {
  std::ostringstream s;
  s << std::showpos << std::fixed << std::setprecision(precision) << (z.real() == 0.0 ? 0.0 : z.real())
    << ' ' << (z.imag() == 0.0 ? 0.0 : z.imag()) << 'i';
  return s.str();
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PersistenceError("cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw PersistenceError("write failed for " + path.string());
}

void describe_chain(std::ostream& out, const ChainSpec& spec) {
  out << "chain: N=" << spec.n_sites() << " T=" << spec.hopping() << " Delta=" << spec.pairing()
      << " mu=" << spec.chemical_potential() << " sum(g)=" << spec.profile().sum() << '\n';
}

void warn_balance(std::ostream& err, const ChainSpec& spec) {
  if (!spec.profile().is_balanced()) {
    err << "warning: gain and loss are not balanced (sum g = " << spec.profile().sum()
        << "); the many-body spectrum is shifted by " << format_complex(scalar_offset_energy(spec.profile()))
        << '\n';
  }
  if (!spec.profile().has_free_edges()) {
    err << "warning: gain/loss present on an edge site (g_1 or g_N nonzero)\n";
  }
}

void print_zero_modes(std::ostream& out, const ZeroModeReport& report) {
  out << "zero modes: " << report.zero_count << '\n';
  for (int m = 0; m < report.zero_count; ++m) {
    const auto i = static_cast<std::size_t>(m);
    out << "  E = " << format_complex(report.zero_eigenvalues[i], 14);
    if (i < report.edge_weights.size()) {
      out << "  edge weight (left, right) = (" << std::setprecision(12) << report.edge_weights[i].left
          << ", " << report.edge_weights[i].right << ")";
      const auto& xi = report.localization_lengths[i];
      out << "  localization length = " << (xi ? std::to_string(*xi) : std::string("n/a"));
    }
    out << '\n';
  }
}

struct Tolerances {
  double zero = kDefaultZeroTolerance;
  double real = kDefaultRealityTolerance;
};

void add_tolerances(CLI::App* cmd, Tolerances& tol) {
  cmd->add_option("--tol-zero", tol.zero, "Relative zero-eigenvalue tolerance")->capture_default_str();
  cmd->add_option("--tol-real", tol.real, "Relative reality tolerance")->capture_default_str();
}

int cmd_spectrum(const ChainFlags& flags, const Tolerances& tol, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  const ChainSpec spec = assemble_chain(flags);
  const BdgMatrix m = build_bdg(spec);
  const SpectrumResult s = eig(m.entries(), false);
  const RealityClass reality = classify_reality(s, tol.real);
  const ZeroModeReport zeros = detect_zero_modes(spec, tol.zero);

  describe_chain(out, spec);
  warn_balance(err, spec);
  out << "eigenvalues (" << s.eigenvalues.size() << "):\n";
  for (const Complex& l : s.eigenvalues) out << "  " << format_complex(l) << '\n';
  out << "reality: " << to_string(reality.label) << " (max |Im| = " << std::setprecision(6)
      << reality.max_imag << ")\n";
  print_zero_modes(out, zeros);
  out << "scalar offset: " << format_complex(scalar_offset_energy(spec.profile())) << '\n';
  if (spec.hopping() != 0.0) {
    out << "phase: " << to_string(classify_phase(spec.hopping(), spec.chemical_potential())) << '\n';
  }

  if (!out_path.empty()) {
    const fs::path path = resolve_output(out_path);
    write_file(path, [&](std::ostream& f) {
      f << std::setprecision(17) << "eig_index,re,im\n";
      for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        f << i << ',' << (s.eigenvalues[i].real() == 0.0 ? 0.0 : s.eigenvalues[i].real()) << ','
          << (s.eigenvalues[i].imag() == 0.0 ? 0.0 : s.eigenvalues[i].imag()) << '\n';
      }
    });
    out << "wrote " << path.string() << '\n';
  }
  return kOk;
}

int cmd_zero_modes(const ChainFlags& flags, const Tolerances& tol, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  const ChainSpec spec = assemble_chain(flags);
  const ZeroModeReport report = detect_zero_modes(spec, tol.zero);
  describe_chain(out, spec);
  warn_balance(err, spec);
  print_zero_modes(out, report);
  if (!out_path.empty()) {
    const fs::path path = resolve_output(out_path);
    write_file(path, [&](std::ostream& f) { f << nlohmann::json(report).dump(2) << '\n'; });
    out << "wrote " << path.string() << '\n';
  }
  return kOk;
}

void summarize_sweep(std::ostream& out, const SweepConfig& config, const SweepOutput& result) {
  int real = 0, complex = 0, failed = 0;
  for (const SweepRecord& r : result.records) {
    if (r.failed) {
      ++failed;
    } else if (r.reality == Reality::Real) {
      ++real;
    } else {
      ++complex;
    }
  }
  out << "sweep " << to_string(config.axis) << " in [" << config.min << ", " << config.max << "], "
      << config.steps << " points: " << real << " real, " << complex << " complex, " << failed
      << " failed\n";

  // Longest run of real points reaching the upper end of the axis.
  int first_real_tail = static_cast<int>(result.records.size());
  while (first_real_tail > 0) {
    const SweepRecord& r = result.records[static_cast<std::size_t>(first_real_tail - 1)];
    if (r.failed || r.reality != Reality::Real) break;
    --first_real_tail;
  }
  if (first_real_tail == 0) {
    out << "spectrum real across the whole range\n";
  } else if (first_real_tail == static_cast<int>(result.records.size())) {
    out << "spectrum complex at the upper end of the range\n";
  } else {
    out << "spectrum real for " << to_string(config.axis)
        << " >= " << config.grid_value(first_real_tail) << " (grid)\n";
  }
  for (std::size_t i = 0; i + 1 < result.records.size(); ++i) {
    const SweepRecord& a = result.records[i];
    const SweepRecord& b = result.records[i + 1];
    if (a.failed || b.failed) continue;
    const bool ca = a.reality != Reality::Real;
    const bool cb = b.reality != Reality::Real;
    if (ca != cb) {
      out << "  " << (ca ? "complex -> real" : "real -> complex") << " between "
          << config.grid_value(static_cast<int>(i)) << " and "
          << config.grid_value(static_cast<int>(i + 1)) << '\n';
    }
  }
}

int finish_sweep(const SweepConfig& config, const SweepOutput& result, std::ostream& out,
                 std::ostream& err) {
  summarize_sweep(out, config, result);
  if (result.persistence_error) {
    err << "error: " << *result.persistence_error << '\n';
    return kIoError;
  }
  if (!config.output.empty()) {
    out << "wrote " << config.output.string() << '\n';
    if (config.store_spectra) out << "wrote " << sidecar_path(config.output, "spectra").string() << '\n';
    if (config.store_eigenvectors) out << "wrote " << sidecar_path(config.output, "vectors").string() << '\n';
  }
  return kOk;
}

// Flags given on the command line as a JSON object with the config-file keys.
nlohmann::json given_flags(const CLI::App* cmd) {
  nlohmann::json j = nlohmann::json::object();
  for (const CLI::Option* o : cmd->get_options()) {
    if (o->count() == 0) continue;
    const std::string name = o->get_single_name();
    if (name == "config" || name == "help") continue;
    const std::string value = o->as<std::string>();
    if (name == "profile" || name == "axis" || name == "out") {
      j[name] = value;
    } else if (name == "store-spectra" || name == "store-vectors") {
      j[name] = true;
    } else if (name == "n" || name == "steps" || name == "gain-site" || name == "loss-site" ||
               name == "workers") {
      j[name] = o->as<int>();
    } else if (name == "seed") {
      j[name] = o->as<std::uint64_t>();
    } else {
      j[name] = o->as<double>();
    }
  }
  return j;
}

void add_sweep_flags(CLI::App* cmd) {
  cmd->add_option("--n", "Number of sites (12)");
  cmd->add_option("--t", "Hopping amplitude (1)");
  cmd->add_option("--delta", "Pairing amplitude (1)");
  cmd->add_option("--mu", "Chemical potential (0)");
  cmd->add_option("--profile", "zero, alternating, two-impurity or random (alternating)");
  cmd->add_option("--g0", "Profile strength (0)");
  cmd->add_option("--max-g", "Random profile bound (0)");
  cmd->add_option("--seed", "Random profile seed (0)");
  cmd->add_option("--gain-site", "Two-impurity gain site (2)");
  cmd->add_option("--loss-site", "Two-impurity loss site (N-1)");
  cmd->add_option("--axis", "Swept parameter: mu, delta or g0 (mu)");
  cmd->add_option("--min", "Axis start (-3)");
  cmd->add_option("--max", "Axis end (3)");
  cmd->add_option("--steps", "Grid points (121)");
  cmd->add_option("--out", "Output CSV");
  cmd->add_flag("--store-spectra", "Write <name>.spectra.csv");
  cmd->add_flag("--store-vectors", "Write <name>.vectors.csv");
  cmd->add_option("--tol-zero", "Relative zero tolerance (1e-10)");
  cmd->add_option("--tol-real", "Relative reality tolerance (1e-9)");
  cmd->add_option("--workers", "Worker threads (0 = all cores)");
}

int cmd_sweep(const CLI::App* cmd, const std::string& config_path, std::ostream& out,
              std::ostream& err) {
  SweepConfig config;
  try {
    if (!config_path.empty()) config = load_sweep_config(config_path);
    config = sweep_config_from_json(given_flags(cmd), config);
    if (!config.output.empty()) config.output = resolve_output(config.output.string());
    config.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return finish_sweep(config, run_sweep(config), out, err);
}

int cmd_random_ensemble(EnsembleConfig config, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
  if (!out_path.empty()) config.output = resolve_output(out_path);
  if (config.n_trials < 1 || config.n_sites < 4 || !(config.max_strength >= 0.0)) {
    throw UsageError("random-ensemble needs --trials >= 1, --n >= 4 and --max-g >= 0");
  }
  const EnsembleSummary summary = run_random_ensemble(config);
  out << summary.trials_with_two_zero_modes << "/" << config.n_trials
      << " trials: 2 exact zero modes\n";
  out << "max edge-weight deviation: " << std::setprecision(3) << summary.max_edge_deviation << '\n';
  double worst_zero = 0.0;
  double worst_pair = 0.0;
  int failed = 0;
  for (const EnsembleTrial& t : summary.trials) {
    worst_zero = std::max(worst_zero, t.max_zero_abs);
    if (!t.failed) worst_pair = std::max(worst_pair, t.near_zero_abs);
    failed += t.failed ? 1 : 0;
  }
  out << "largest |E| among zero modes: " << worst_zero << '\n';
  out << "largest near-zero pair |E|: " << worst_pair << '\n';
  if (failed > 0) out << failed << " trials failed\n";
  if (summary.persistence_error) {
    err << "error: " << *summary.persistence_error << '\n';
    return kIoError;
  }
  if (!config.output.empty()) out << "wrote " << config.output.string() << '\n';
  return kOk;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range must look like lo:hi");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--range must look like lo:hi, got '" + text + "'");
  }
}

int cmd_critical(const ChainFlags& flags, const std::string& axis_name, const std::string& range_text,
                 const Tolerances& tol, unsigned workers, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = parse_range(range_text);
  SweepAxis axis;
  ChainSpec base = assemble_chain(flags);
  ProfileRecipe recipe;
  try {
    axis = parse_axis(axis_name);
    recipe.kind = parse_profile_kind(flags.profile);
    recipe.g0 = flags.g0;
    recipe.max_strength = flags.max_g;
    recipe.seed = flags.seed;
    recipe.gain_site = flags.gain_site;
    recipe.loss_site = flags.loss_site;
    if (!(lo < hi)) throw InvalidParameter("--range needs lo < hi");
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  SpecFamily family;
  switch (axis) {
    case SweepAxis::Mu:
      family = [base](double theta) { return base.with_chemical_potential(theta); };
      break;
    case SweepAxis::Delta:
      family = [base](double theta) { return base.with_pairing(theta); };
      break;
    case SweepAxis::G0:
      family = [base, recipe](double theta) {
        return base.with_profile(recipe.make(base.n_sites(), theta));
      };
      break;
  }

  try {
    const std::optional<double> critical = find_critical(family, {lo, hi}, tol.real, workers);
    if (critical) {
      out << "critical " << axis_name << " = " << std::fixed << std::setprecision(6) << *critical
          << '\n';
    } else {
      out << "no crossing\n";
    }
  } catch (const AmbiguousCrossing& e) {
    err << "error: ambiguous crossing; brackets:";
    for (const Bracket& b : e.brackets()) err << " [" << b.lo << ", " << b.hi << "]";
    err << '\n';
    return kDomainError;
  }
  return kOk;
}

int cmd_reproduce(const std::string& figure, double g0, const std::string& out_dir_flag, int steps,
                  unsigned workers, std::ostream& out, std::ostream& err) {
  if (!(g0 >= 0.0)) throw UsageError("--g0 must be >= 0");
  SweepConfig config;
  config.n_sites = 12;
  config.hopping = 1.0;
  config.pairing = 1.0;
  config.profile.kind = ProfileKind::Alternating;
  config.profile.g0 = g0;
  config.steps = steps;
  config.store_spectra = true;
  config.workers = workers;
  if (figure == "fig2") {
    config.axis = SweepAxis::Mu;
    config.chemical_potential = 0.0;
    config.min = -3.0;
    config.max = 3.0;
  } else if (figure == "fig3") {
    config.axis = SweepAxis::Delta;
    config.chemical_potential = 1.0;
    config.min = 0.0;
    config.max = 3.0;
  } else {
    throw UsageError("figure must be fig2 or fig3");
  }
  const fs::path dir = resolve_output(out_dir_flag.empty() ? std::string(".") : out_dir_flag);
  config.output = dir / (figure + "_g" + shortest(g0) + ".csv");
  try {
    config.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return finish_sweep(config, run_sweep(config), out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-Hermitian Kitaev chain: spectra, Majorana zero modes and parameter sweeps",
               "kitaev"};
  app.require_subcommand(1);

  ChainFlags spectrum_flags;
  Tolerances spectrum_tol;
  std::string spectrum_out;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Diagonalize one chain and summarize it");
  add_chain_flags(spectrum, spectrum_flags, true);
  add_tolerances(spectrum, spectrum_tol);
  spectrum->add_option("--out", spectrum_out, "CSV of sorted eigenvalues");

  ChainFlags zero_flags;
  Tolerances zero_tol;
  std::string zero_out;
  CLI::App* zero_modes = app.add_subcommand("zero-modes", "Zero modes, edge weights, localization");
  add_chain_flags(zero_modes, zero_flags, true);
  add_tolerances(zero_modes, zero_tol);
  zero_modes->add_option("--out", zero_out, "JSON report");

  std::string sweep_config;
  CLI::App* sweep = app.add_subcommand("sweep", "One-axis parameter sweep to CSV");
  sweep->add_option("--config", sweep_config, "Sweep config JSON (flags override it)");
  add_sweep_flags(sweep);

  EnsembleConfig ensemble;
  std::string ensemble_out;
  CLI::App* random_ensemble =
      app.add_subcommand("random-ensemble", "Zero modes over random balanced profiles");
  random_ensemble->add_option("--n", ensemble.n_sites, "Number of sites")->capture_default_str();
  random_ensemble->add_option("--mu", ensemble.chemical_potential, "Chemical potential")->capture_default_str();
  random_ensemble->add_option("--t", ensemble.hopping, "Hopping amplitude")->capture_default_str();
  random_ensemble->add_option("--delta", ensemble.pairing, "Pairing amplitude")->capture_default_str();
  random_ensemble->add_option("--max-g", ensemble.max_strength, "Interior |g| bound")->capture_default_str();
  random_ensemble->add_option("--trials", ensemble.n_trials, "Number of profiles")->capture_default_str();
  random_ensemble->add_option("--seed", ensemble.seed, "Seed of trial 0")->capture_default_str();
  random_ensemble->add_option("--tol-zero", ensemble.zero_tolerance, "Relative zero tolerance")
      ->capture_default_str();
  random_ensemble->add_option("--tol-real", "Accepted for symmetry with other commands");
  random_ensemble->add_option("--workers", ensemble.workers, "Worker threads (0 = all cores)");
  random_ensemble->add_option("--out", ensemble_out, "Per-trial CSV");

  ChainFlags critical_flags;
  critical_flags.profile = "alternating";
  Tolerances critical_tol;
  std::string critical_axis = "mu";
  std::string critical_range;
  unsigned critical_workers = 0;
  CLI::App* critical = app.add_subcommand("critical", "Bisect the onset of a real spectrum");
  add_chain_flags(critical, critical_flags, false);
  add_tolerances(critical, critical_tol);
  critical->add_option("--axis", critical_axis, "mu, delta or g0")->capture_default_str();
  critical->add_option("--range", critical_range, "lo:hi")->required();
  critical->add_option("--workers", critical_workers, "Pre-scan threads (0 = all cores)");
  critical->add_option("--out", "Accepted for symmetry with other commands");

  std::string figure;
  double reproduce_g0 = 0.0;
  std::string reproduce_dir;
  int reproduce_steps = 121;
  unsigned reproduce_workers = 0;
  CLI::App* reproduce = app.add_subcommand("reproduce", "Regenerate the fig2 / fig3 sweeps");
  reproduce->add_option("figure", figure, "fig2 (mu axis) or fig3 (Delta axis)")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3"}));
  reproduce->add_option("--g0", reproduce_g0, "Alternating profile strength")->required();
  reproduce->add_option("--out-dir", reproduce_dir, "Output directory");
  reproduce->add_option("--steps", reproduce_steps, "Grid points")->capture_default_str();
  reproduce->add_option("--workers", reproduce_workers, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*spectrum) return cmd_spectrum(spectrum_flags, spectrum_tol, spectrum_out, out, err);
    if (*zero_modes) return cmd_zero_modes(zero_flags, zero_tol, zero_out, out, err);
    if (*sweep) return cmd_sweep(sweep, sweep_config, out, err);
    if (*random_ensemble) return cmd_random_ensemble(ensemble, ensemble_out, out, err);
    if (*critical) {
      return cmd_critical(critical_flags, critical_axis, critical_range, critical_tol,
                          critical_workers, out, err);
    }
    if (*reproduce) {
      return cmd_reproduce(figure, reproduce_g0, reproduce_dir, reproduce_steps, reproduce_workers,
                           out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PersistenceError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << " (dimension " << e.dimension()
        << ", iteration limit " << e.max_iterations() << ")\n";
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace kitaev::cli
