#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace kitaev {

// |sum g| <= kBalanceTolerance * max(1, sum |g|) counts as balanced.
inline constexpr double kBalanceTolerance = 1e-12;

/// Site-resolved gain (g > 0) and loss (g < 0) strengths g_1..g_N.
///
/// Stored 0-based; site j of the chain is index j - 1. Immutable once built.
class GainProfile {
 public:
  GainProfile() = default;
  explicit GainProfile(std::vector<double> strengths);

  std::span<const double> strengths() const { return strengths_; }
  std::size_t size() const { return strengths_.size(); }
  double operator[](std::size_t index) const { return strengths_[index]; }

  double sum() const;
  double abs_sum() const;

  bool is_balanced() const;
  // g_1 == g_N == 0 exactly.
  bool has_free_edges() const;

  friend bool operator==(const GainProfile&, const GainProfile&) = default;

 private:
  std::vector<double> strengths_;
};

GainProfile zero_profile(int n_sites);

/// g_1 = g_N = 0 and g_j = (-1)^j g0 on the interior. Requires n_sites >= 4.
GainProfile alternating_profile(int n_sites, double g0);

/// +g0 at gain_site, -g0 at loss_site (1-based, interior sites only).
GainProfile two_impurity_profile(int n_sites, double g0, int gain_site, int loss_site);

/// Interior strengths drawn uniformly from [-max_strength, max_strength] and
/// shifted by their mean so the total vanishes; edges stay exactly zero.
///
/// The stream is std::mt19937_64 seeded with `seed`, one 64-bit draw per
/// interior site (site 2 first), mapped to [0, 1) by its top 53 bits. Both
/// the engine and the mapping are fixed by the C++ standard, so the output is
/// identical on every conforming platform.
GainProfile random_balanced_profile(int n_sites, double max_strength, std::uint64_t seed);

/// True iff g_{N+1-j} = -g_j for all j within `tolerance`: the gain/loss term
/// is odd under reflection, which makes i*sum g_j n_j invariant under PT.
bool is_pt_symmetric_nonhermitian_part(const GainProfile& profile, double tolerance);

/// Parameters of an open Kitaev chain with on-site gain and loss.
class ChainSpec {
 public:
  ChainSpec(int n_sites, double hopping, double pairing, double chemical_potential,
            GainProfile profile);

  int n_sites() const { return n_sites_; }
  double hopping() const { return hopping_; }
  double pairing() const { return pairing_; }
  double chemical_potential() const { return chemical_potential_; }
  const GainProfile& profile() const { return profile_; }

  ChainSpec with_chemical_potential(double mu) const;
  ChainSpec with_pairing(double delta) const;
  ChainSpec with_profile(GainProfile profile) const;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

 private:
  int n_sites_;
  double hopping_;
  double pairing_;
  double chemical_potential_;
  GainProfile profile_;
};

void to_json(nlohmann::json& j, const ChainSpec& spec);
ChainSpec chain_spec_from_json(const nlohmann::json& j);

ChainSpec load_chain_spec(const std::string& path);
void save_chain_spec(const std::string& path, const ChainSpec& spec);

}  // namespace kitaev
