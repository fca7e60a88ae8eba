#include "kitaev/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "kitaev/errors.hpp"
#include "kitaev/parallel.hpp"

namespace kitaev {

namespace {

class Fmt17 {
 public:
  explicit Fmt17(std::ostream& out) : out_(out), flags_(out.flags()), precision_(out.precision(17)) {
    out_.unsetf(std::ios::floatfield);
  }
  ~Fmt17() {
    out_.flags(flags_);
    out_.precision(precision_);
  }
  Fmt17(const Fmt17&) = delete;
  Fmt17& operator=(const Fmt17&) = delete;

 private:
  std::ostream& out_;
  std::ios::fmtflags flags_;
  std::streamsize precision_;
};

double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

template <class T>
void read_key(const nlohmann::json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

void open_and_write(const std::filesystem::path& path,
                    const std::function<void(std::ostream&)>& writer) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PersistenceError("cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw PersistenceError("write failed for " + path.string());
}

}  // namespace

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Mu:
      return "mu";
    case SweepAxis::Delta:
      return "delta";
    case SweepAxis::G0:
      return "g0";
  }
  return "?";
}

SweepAxis parse_axis(const std::string& name) {
  if (name == "mu") return SweepAxis::Mu;
  if (name == "delta") return SweepAxis::Delta;
  if (name == "g0") return SweepAxis::G0;
  throw InvalidParameter("unknown sweep axis '" + name + "' (expected mu, delta or g0)");
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Zero:
      return "zero";
    case ProfileKind::Alternating:
      return "alternating";
    case ProfileKind::TwoImpurity:
      return "two-impurity";
    case ProfileKind::Random:
      return "random";
    case ProfileKind::Custom:
      return "custom";
  }
  return "?";
}

ProfileKind parse_profile_kind(const std::string& name) {
  if (name == "zero") return ProfileKind::Zero;
  if (name == "alternating") return ProfileKind::Alternating;
  if (name == "two-impurity") return ProfileKind::TwoImpurity;
  if (name == "random") return ProfileKind::Random;
  if (name == "custom") return ProfileKind::Custom;
  throw InvalidParameter("unknown profile '" + name +
                         "' (expected zero, alternating, two-impurity, random or custom)");
}

GainProfile ProfileRecipe::make(int n_sites, double strength) const {
  switch (kind) {
    case ProfileKind::Zero:
      return zero_profile(n_sites);
    case ProfileKind::Alternating:
      return alternating_profile(n_sites, strength);
    case ProfileKind::TwoImpurity:
      return two_impurity_profile(n_sites, strength, gain_site,
                                  loss_site == 0 ? n_sites - 1 : loss_site);
    case ProfileKind::Random:
      return random_balanced_profile(n_sites, strength, seed);
    case ProfileKind::Custom:
      return GainProfile(custom);
  }
  throw InvalidParameter("unknown profile kind");
}

double ProfileRecipe::strength() const {
  switch (kind) {
    case ProfileKind::Zero:
    case ProfileKind::Custom:
      return 0.0;
    case ProfileKind::Random:
      return max_strength;
    default:
      return g0;
  }
}

void SweepConfig::validate() const {
  if (steps < 2) throw InvalidParameter("sweep needs steps >= 2");
  if (!(min < max)) throw InvalidParameter("sweep needs min < max");
  if (!std::isfinite(min) || !std::isfinite(max)) throw InvalidParameter("sweep range must be finite");
  if (!(zero_tolerance > 0.0) || !(reality_tolerance > 0.0)) {
    throw InvalidParameter("tolerances must be positive");
  }
  if (axis == SweepAxis::G0 &&
      (profile.kind == ProfileKind::Zero || profile.kind == ProfileKind::Custom)) {
    throw InvalidParameter("a g0 sweep needs a parametrized profile, not '" +
                           to_string(profile.kind) + "'");
  }
  // Builds the end points once so bad sizes or sites fail before any work.
  (void)spec_at(0);
  (void)spec_at(steps - 1);
}

double SweepConfig::grid_value(int index) const {
  return min + (max - min) * static_cast<double>(index) / static_cast<double>(steps - 1);
}

ChainSpec SweepConfig::spec_at(int index) const {
  const double theta = grid_value(index);
  double mu = chemical_potential;
  double delta = pairing;
  double strength = profile.kind == ProfileKind::Random ? profile.max_strength : profile.g0;
  switch (axis) {
    case SweepAxis::Mu:
      mu = theta;
      break;
    case SweepAxis::Delta:
      delta = theta;
      break;
    case SweepAxis::G0:
      strength = theta;
      break;
  }
  return ChainSpec(n_sites, hopping, delta, mu, profile.make(n_sites, strength));
}

SweepConfig sweep_config_from_json(const nlohmann::json& j, SweepConfig c) {
  try {
    read_key(j, "n", c.n_sites);
    read_key(j, "t", c.hopping);
    read_key(j, "delta", c.pairing);
    read_key(j, "mu", c.chemical_potential);
    if (j.contains("profile")) c.profile.kind = parse_profile_kind(j.at("profile").get<std::string>());
    read_key(j, "g0", c.profile.g0);
    read_key(j, "max-g", c.profile.max_strength);
    read_key(j, "seed", c.profile.seed);
    read_key(j, "gain-site", c.profile.gain_site);
    read_key(j, "loss-site", c.profile.loss_site);
    read_key(j, "custom", c.profile.custom);
    if (j.contains("axis")) c.axis = parse_axis(j.at("axis").get<std::string>());
    read_key(j, "min", c.min);
    read_key(j, "max", c.max);
    read_key(j, "steps", c.steps);
    if (j.contains("out")) c.output = j.at("out").get<std::string>();
    read_key(j, "store-spectra", c.store_spectra);
    read_key(j, "store-vectors", c.store_eigenvectors);
    read_key(j, "tol-zero", c.zero_tolerance);
    read_key(j, "tol-real", c.reality_tolerance);
    read_key(j, "workers", c.workers);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed sweep config: ") + e.what());
  }
  return c;
}

SweepConfig load_sweep_config(const std::filesystem::path& path, SweepConfig defaults) {
  std::ifstream in(path);
  if (!in) throw PersistenceError("cannot open sweep config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParameter("sweep config " + path.string() + " is not valid JSON: " + e.what());
  }
  return sweep_config_from_json(j, std::move(defaults));
}

SweepRecord evaluate_point(const ChainSpec& spec, const SweepConfig& config) {
  SweepRecord r;
  r.mu = spec.chemical_potential();
  r.delta = spec.pairing();
  r.g0 = config.profile.strength();
  if (config.profile.kind == ProfileKind::Random) r.seed = config.profile.seed;

  try {
    const SpectrumResult s = eig(build_bdg(spec).entries(), config.store_eigenvectors);
    const RealityClass reality = classify_reality(s, config.reality_tolerance);
    r.max_imag = reality.max_imag;
    r.reality = reality.label;
    r.zero_count = count_zero_eigenvalues(s, config.zero_tolerance);
    double smallest = std::numeric_limits<double>::infinity();
    for (const Complex& l : s.eigenvalues) smallest = std::min(smallest, std::abs(l));
    r.min_abs_eigenvalue = smallest;
    if (config.store_spectra || config.store_eigenvectors) r.eigenvalues = s.eigenvalues;
    if (config.store_eigenvectors) r.eigenvectors = *s.eigenvectors;
  } catch (const DomainError& e) {
    r.failed = true;
    r.failure = e.what();
  }
  return r;
}

SweepOutput run_sweep(const SweepConfig& config) {
  config.validate();
  SweepOutput output;
  output.records.resize(static_cast<std::size_t>(config.steps));
  parallel_for(output.records.size(), config.workers, [&](std::size_t i) {
    const int index = static_cast<int>(i);
    SweepRecord r;
    try {
      r = evaluate_point(config.spec_at(index), config);
    } catch (const DomainError& e) {
      r.failed = true;
      r.failure = e.what();
    }
    if (config.axis == SweepAxis::G0) r.g0 = config.grid_value(index);
    output.records[i] = std::move(r);
  });

  if (config.output.empty()) return output;
  try {
    open_and_write(config.output, [&](std::ostream& out) { write_sweep_csv(out, output.records); });
    if (config.store_spectra) {
      open_and_write(sidecar_path(config.output, "spectra"),
                     [&](std::ostream& out) { write_spectra_csv(out, output.records); });
    }
    if (config.store_eigenvectors) {
      open_and_write(sidecar_path(config.output, "vectors"),
                     [&](std::ostream& out) { write_vectors_csv(out, output.records); });
    }
  } catch (const PersistenceError& e) {
    output.persistence_error = e.what();
  }
  return output;
}

std::filesystem::path sidecar_path(const std::filesystem::path& output, const std::string& kind) {
  std::filesystem::path p = output;
  p.replace_filename(output.stem().string() + "." + kind + ".csv");
  return p;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  Fmt17 fmt(out);
  out << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << clean_zero(r.mu) << ',' << clean_zero(r.delta) << ',' << clean_zero(r.g0) << ',';
    if (r.seed) out << *r.seed;
    out << ',';
    if (r.failed) {
      out << "nan,Failed,-1,nan\n";
      continue;
    }
    out << r.max_imag << ',' << to_string(r.reality) << ',' << r.zero_count << ','
        << r.min_abs_eigenvalue << '\n';
  }
}

void write_spectra_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  Fmt17 fmt(out);
  out << "point_index,eig_index,re,im\n";
  for (std::size_t p = 0; p < records.size(); ++p) {
    const auto& values = records[p].eigenvalues;
    for (std::size_t e = 0; e < values.size(); ++e) {
      out << p << ',' << e << ',' << clean_zero(values[e].real()) << ','
          << clean_zero(values[e].imag()) << '\n';
    }
  }
}

void write_vectors_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  Fmt17 fmt(out);
  out << "point_index,eig_index,component,re,im\n";
  for (std::size_t p = 0; p < records.size(); ++p) {
    const ComplexMatrix& v = records[p].eigenvectors;
    for (Eigen::Index e = 0; e < v.cols(); ++e) {
      for (Eigen::Index c = 0; c < v.rows(); ++c) {
        out << p << ',' << e << ',' << c << ',' << clean_zero(v(c, e).real()) << ','
            << clean_zero(v(c, e).imag()) << '\n';
      }
    }
  }
}

EnsembleSummary run_random_ensemble(const EnsembleConfig& config) {
  if (config.n_trials < 1) throw InvalidParameter("ensemble needs n_trials >= 1");
  if (config.n_sites < 4) throw InvalidSize("random profiles need n_sites >= 4");
  if (!(config.max_strength >= 0.0)) throw InvalidParameter("max strength must be >= 0");

  EnsembleSummary summary;
  summary.trials.resize(static_cast<std::size_t>(config.n_trials));
  parallel_for(summary.trials.size(), config.workers, [&](std::size_t t) {
    EnsembleTrial trial;
    trial.seed = config.seed + t;
    try {
      const ChainSpec spec(config.n_sites, config.hopping, config.pairing,
                           config.chemical_potential,
                           random_balanced_profile(config.n_sites, config.max_strength, trial.seed));
      const ZeroModeReport report = detect_zero_modes(spec, config.zero_tolerance);
      trial.zero_count = report.zero_count;
      trial.min_edge_weight = 0.0;
      if (!report.edge_weights.empty()) {
        trial.min_edge_weight = report.edge_weights.front().total();
        for (const EdgeWeights& w : report.edge_weights) {
          trial.min_edge_weight = std::min(trial.min_edge_weight, w.total());
        }
      }
      for (const Complex& z : report.zero_eigenvalues) {
        trial.max_zero_abs = std::max(trial.max_zero_abs, std::abs(z));
      }
      const SpectrumResult spectrum = eig(build_bdg(spec).entries(), false);
      trial.max_imag = max_imag(spectrum);
      std::vector<double> magnitudes;
      for (const Complex& l : spectrum.eigenvalues) magnitudes.push_back(std::abs(l));
      std::nth_element(magnitudes.begin(), magnitudes.begin() + 1, magnitudes.end());
      trial.near_zero_abs = magnitudes[1];
    } catch (const DomainError&) {
      trial.failed = true;
    }
    summary.trials[t] = trial;
  });

  for (const EnsembleTrial& t : summary.trials) {
    if (!t.failed && t.zero_count == 2) ++summary.trials_with_two_zero_modes;
    summary.max_edge_deviation = std::max(summary.max_edge_deviation, 1.0 - t.min_edge_weight);
  }
  summary.fraction_two_zero_modes =
      static_cast<double>(summary.trials_with_two_zero_modes) / config.n_trials;

  if (!config.output.empty()) {
    try {
      open_and_write(config.output, [&](std::ostream& out) { write_ensemble_csv(out, summary); });
    } catch (const PersistenceError& e) {
      summary.persistence_error = e.what();
    }
  }
  return summary;
}

void write_ensemble_csv(std::ostream& out, const EnsembleSummary& summary) {
  Fmt17 fmt(out);
  out << "trial,seed,zero_count,min_edge_weight,max_zero_abs,near_zero_abs,max_imag\n";
  for (std::size_t t = 0; t < summary.trials.size(); ++t) {
    const EnsembleTrial& r = summary.trials[t];
    out << t << ',' << r.seed << ',';
    if (r.failed) {
      out << "-1,nan,nan,nan,nan\n";
      continue;
    }
    out << r.zero_count << ',' << r.min_edge_weight << ',' << r.max_zero_abs << ',' << r.near_zero_abs
        << ',' << r.max_imag
        << '\n';
  }
}

}  // namespace kitaev
