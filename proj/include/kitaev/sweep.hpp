#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kitaev/analysis.hpp"
#include "kitaev/model.hpp"

namespace kitaev {

enum class SweepAxis { Mu, Delta, G0 };
enum class ProfileKind { Zero, Alternating, TwoImpurity, Random, Custom };

std::string to_string(SweepAxis axis);
SweepAxis parse_axis(const std::string& name);
std::string to_string(ProfileKind kind);
ProfileKind parse_profile_kind(const std::string& name);

/// How each grid point's gain/loss profile is built.
struct ProfileRecipe {
  ProfileKind kind = ProfileKind::Alternating;
  double g0 = 0.0;
  double max_strength = 0.0;
  std::uint64_t seed = 0;
  int gain_site = 2;
  int loss_site = 0;  // 0 means n_sites - 1
  std::vector<double> custom;

  // `g0` overrides the recipe strength (used when sweeping g0).
  GainProfile make(int n_sites, double g0) const;
  GainProfile make(int n_sites) const { return make(n_sites, g0); }
  // Strength reported in the g0 column: g0, or max_strength for random profiles.
  double strength() const;
};

struct SweepConfig {
  int n_sites = 12;
  double hopping = 1.0;
  double pairing = 1.0;
  double chemical_potential = 0.0;
  ProfileRecipe profile;

  SweepAxis axis = SweepAxis::Mu;
  double min = -3.0;
  double max = 3.0;
  int steps = 121;

  std::filesystem::path output;  // empty: do not persist
  bool store_spectra = false;
  bool store_eigenvectors = false;
  double zero_tolerance = kDefaultZeroTolerance;
  double reality_tolerance = kDefaultRealityTolerance;
  unsigned workers = 0;  // 0: hardware concurrency

  // Throws InvalidParameter.
  void validate() const;
  double grid_value(int index) const;
  ChainSpec spec_at(int index) const;
};

/// Keys match the CLI flag names: n, t, delta, mu, profile, g0, max-g, seed,
/// gain-site, loss-site, custom, axis, min, max, steps, out, store-spectra,
/// store-vectors, tol-zero, tol-real, workers. Missing keys keep `defaults`.
SweepConfig sweep_config_from_json(const nlohmann::json& j, SweepConfig defaults = {});
SweepConfig load_sweep_config(const std::filesystem::path& path, SweepConfig defaults = {});

struct SweepRecord {
  double mu = 0.0;
  double delta = 0.0;
  double g0 = 0.0;
  std::optional<std::uint64_t> seed;
  bool failed = false;
  std::string failure;
  double max_imag = 0.0;
  Reality reality = Reality::Real;
  int zero_count = 0;
  double min_abs_eigenvalue = 0.0;
  std::vector<Complex> eigenvalues;  // filled when spectra are stored
  ComplexMatrix eigenvectors;        // filled when eigenvectors are stored
};

struct SweepOutput {
  std::vector<SweepRecord> records;  // grid order
  // Set when persisting failed; records are still complete.
  std::optional<std::string> persistence_error;
};

SweepRecord evaluate_point(const ChainSpec& spec, const SweepConfig& config);

/// Evaluates every grid point on a bounded worker pool, then writes the CSV
/// (and sidecars) in grid order. Output bytes do not depend on `workers`.
SweepOutput run_sweep(const SweepConfig& config);

inline constexpr const char* kSweepCsvHeader = "mu,delta,g0,seed,max_imag,reality,zero_count,min_abs_eig";

// `<stem>.spectra.csv` / `<stem>.vectors.csv` next to `output`.
std::filesystem::path sidecar_path(const std::filesystem::path& output, const std::string& kind);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_spectra_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_vectors_csv(std::ostream& out, const std::vector<SweepRecord>& records);

struct EnsembleTrial {
  std::uint64_t seed = 0;
  bool failed = false;
  int zero_count = 0;
  double min_edge_weight = 0.0;  // smallest w_left + w_right over the zero modes
  double max_zero_abs = 0.0;     // largest |l| among the zero modes
  double near_zero_abs = 0.0;    // second-smallest |l| of the full spectrum
  double max_imag = 0.0;
};

struct EnsembleSummary {
  std::vector<EnsembleTrial> trials;
  int trials_with_two_zero_modes = 0;
  double fraction_two_zero_modes = 0.0;
  double max_edge_deviation = 0.0;  // max over trials of 1 - min_edge_weight
  std::optional<std::string> persistence_error;
};

struct EnsembleConfig {
  int n_sites = 12;
  double chemical_potential = 0.0;
  double hopping = 1.0;
  double pairing = 1.0;
  double max_strength = 0.5;
  int n_trials = 100;
  std::uint64_t seed = 1;  // trial t uses seed + t
  double zero_tolerance = kDefaultZeroTolerance;
  std::filesystem::path output;
  unsigned workers = 0;
};

EnsembleSummary run_random_ensemble(const EnsembleConfig& config);

void write_ensemble_csv(std::ostream& out, const EnsembleSummary& summary);

}  // namespace kitaev
