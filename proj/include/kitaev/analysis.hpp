#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kitaev/hamiltonian.hpp"
#include "kitaev/spectrum.hpp"

namespace kitaev {

// Both tolerances are relative: they are scaled by max(1, ||M||_F).
inline constexpr double kDefaultZeroTolerance = 1e-10;
inline constexpr double kDefaultRealityTolerance = 1e-9;

enum class PhaseLabel { TopologicalNontrivial, Trivial, GapClosing };
enum class Reality { Real, PartiallyComplex, FullyComplex };

std::string to_string(PhaseLabel label);
std::string to_string(Reality reality);

struct RealityClass {
  Reality label;
  double max_imag;
};

struct EdgeWeights {
  double left;   // |psi|^2 on g_1A and g_1B
  double right;  // |psi|^2 on g_NA and g_NB
  double total() const { return left + right; }
};

/// Zero modes of a chain.
///
/// `zero_eigenvalues` are the selected eigenvalues in spectrum order. The
/// per-mode `edge_weights` and `localization_lengths` describe the localized
/// basis of the zero-mode subspace (mode 0 is the left-most), which for a
/// hybridized +-eps pair is the pair of spatially separated Majoranas rather
/// than their bonding/antibonding eigenvectors.
struct ZeroModeReport {
  int zero_count = 0;
  std::vector<Complex> zero_eigenvalues;
  std::vector<EdgeWeights> edge_weights;
  std::vector<std::optional<double>> localization_lengths;
};

void to_json(nlohmann::json& j, const ZeroModeReport& report);

/// Number of eigenvalues with |l| <= zero_tolerance * max(1, ||M||_F).
int count_zero_eigenvalues(const SpectrumResult& spectrum, double zero_tolerance);

/// Diagonalizes the Majorana-basis matrix and reports the modes with
/// |l| <= zero_tolerance * max(1, ||M||_F).
ZeroModeReport detect_zero_modes(const ChainSpec& spec,
                                 double zero_tolerance = kDefaultZeroTolerance);

/// Site-resolved Majorana weights (|psi_jA|^2 + |psi_jB|^2) of a vector in the
/// Majorana basis.
std::vector<double> site_weights(const Eigen::VectorXcd& majorana_vector);

/// Amplitude decay length, in sites, from a least-squares fit of
/// log(weight) against distance from the heavier edge over the half chain on
/// that side. Sites below 1e-14 are skipped; nullopt when fewer than three
/// sites remain, the weight does not decay, or R^2 < 0.9.
std::optional<double> fit_localization_length(const std::vector<double>& weights);

/// |mu| < 2|T| is topological, |mu| > 2|T| trivial, equality within 1e-12
/// closes the gap. Throws InvalidParameter for T == 0.
PhaseLabel classify_phase(double hopping, double mu);

RealityClass classify_reality(const SpectrumResult& spectrum,
                              double reality_tolerance = kDefaultRealityTolerance);

/// (i/2) sum_j g_j: the shift carried by the many-body spectrum.
Complex scalar_offset_energy(const GainProfile& profile);

using SpecFamily = std::function<ChainSpec(double)>;

struct Interval {
  double lo;
  double hi;
};

inline constexpr int kCriticalPrescanPoints = 64;
inline constexpr double kCriticalResolution = 1e-6;

/// Locates where max_imag crosses reality_tolerance * max(1, ||M||_F) along
/// a one-parameter family.
///
/// A 64-point pre-scan over `range` (evaluated on `workers` threads, 0 = all
/// cores) brackets the crossing; bisection narrows it to 1e-6. Returns
/// nullopt when the pre-scan shows no sign change and throws
/// AmbiguousCrossing when it shows more than one.
std::optional<double> find_critical(const SpecFamily& family, Interval range,
                                    double reality_tolerance = kDefaultRealityTolerance,
                                    unsigned workers = 0);

}  // namespace kitaev
