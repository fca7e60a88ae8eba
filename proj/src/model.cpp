#include "kitaev/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "kitaev/errors.hpp"

namespace kitaev {

namespace {

bool all_finite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

double unit_interval(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

GainProfile::GainProfile(std::vector<double> strengths) : strengths_(std::move(strengths)) {
  if (!all_finite(strengths_)) throw InvalidParameter("gain profile contains a non-finite strength");
}

double GainProfile::sum() const {
  double total = 0.0;
  for (double g : strengths_) total += g;
  return total;
}

double GainProfile::abs_sum() const {
  double total = 0.0;
  for (double g : strengths_) total += std::abs(g);
  return total;
}

bool GainProfile::is_balanced() const {
  return std::abs(sum()) <= kBalanceTolerance * std::max(1.0, abs_sum());
}

bool GainProfile::has_free_edges() const {
  return !strengths_.empty() && strengths_.front() == 0.0 && strengths_.back() == 0.0;
}

GainProfile zero_profile(int n_sites) {
  if (n_sites < 1) throw InvalidSize("profile needs at least one site");
  return GainProfile(std::vector<double>(static_cast<std::size_t>(n_sites), 0.0));
}

GainProfile alternating_profile(int n_sites, double g0) {
  if (n_sites < 4) {
    throw InvalidSize("alternating profile needs n_sites >= 4, got " + std::to_string(n_sites));
  }
  std::vector<double> g(static_cast<std::size_t>(n_sites), 0.0);
  for (int site = 2; site <= n_sites - 1; ++site) {
    g[static_cast<std::size_t>(site - 1)] = (site % 2 == 0) ? g0 : -g0;
  }
  return GainProfile(std::move(g));
}

GainProfile two_impurity_profile(int n_sites, double g0, int gain_site, int loss_site) {
  auto interior = [n_sites](int site) { return site > 1 && site < n_sites; };
  if (!interior(gain_site) || !interior(loss_site)) {
    throw InvalidSite("impurity sites must lie strictly inside 1.." + std::to_string(n_sites) +
                      ", got gain=" + std::to_string(gain_site) +
                      " loss=" + std::to_string(loss_site));
  }
  if (gain_site == loss_site) throw InvalidSite("gain and loss sites coincide");
  std::vector<double> g(static_cast<std::size_t>(n_sites), 0.0);
  g[static_cast<std::size_t>(gain_site - 1)] = g0;
  g[static_cast<std::size_t>(loss_site - 1)] = -g0;
  return GainProfile(std::move(g));
}

GainProfile random_balanced_profile(int n_sites, double max_strength, std::uint64_t seed) {
  if (n_sites < 4) throw InvalidSize("random profile needs n_sites >= 4");
  if (!(max_strength >= 0.0) || !std::isfinite(max_strength)) {
    throw InvalidParameter("max_strength must be finite and >= 0");
  }
  std::vector<double> g(static_cast<std::size_t>(n_sites), 0.0);
  if (max_strength == 0.0) return GainProfile(std::move(g));

  std::mt19937_64 engine(seed);
  const std::size_t first = 1;
  const std::size_t last = g.size() - 2;
  double mean = 0.0;
  for (std::size_t i = first; i <= last; ++i) {
    g[i] = max_strength * (2.0 * unit_interval(engine) - 1.0);
    mean += g[i];
  }
  mean /= static_cast<double>(last - first + 1);
  for (std::size_t i = first; i <= last; ++i) g[i] -= mean;

  // Rounding left over from the mean subtraction goes onto the last interior site.
  double residual = 0.0;
  for (double v : g) residual += v;
  g[last] -= residual;
  return GainProfile(std::move(g));
}

bool is_pt_symmetric_nonhermitian_part(const GainProfile& profile, double tolerance) {
  const std::size_t n = profile.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(profile[n - 1 - i] + profile[i]) > tolerance) return false;
  }
  return true;
}

ChainSpec::ChainSpec(int n_sites, double hopping, double pairing, double chemical_potential,
                     GainProfile profile)
    : n_sites_(n_sites),
      hopping_(hopping),
      pairing_(pairing),
      chemical_potential_(chemical_potential),
      profile_(std::move(profile)) {
  if (n_sites_ < 2) throw InvalidSize("chain needs n_sites >= 2, got " + std::to_string(n_sites_));
  if (profile_.size() != static_cast<std::size_t>(n_sites_)) {
    throw InvalidSize("profile has " + std::to_string(profile_.size()) + " entries for " +
                      std::to_string(n_sites_) + " sites");
  }
  if (!std::isfinite(hopping_) || !std::isfinite(pairing_) || !std::isfinite(chemical_potential_)) {
    throw InvalidParameter("hopping, pairing and chemical potential must be finite");
  }
  if (pairing_ < 0.0) throw InvalidParameter("pairing must be >= 0");
}

ChainSpec ChainSpec::with_chemical_potential(double mu) const {
  return ChainSpec(n_sites_, hopping_, pairing_, mu, profile_);
}

ChainSpec ChainSpec::with_pairing(double delta) const {
  return ChainSpec(n_sites_, hopping_, delta, chemical_potential_, profile_);
}

ChainSpec ChainSpec::with_profile(GainProfile profile) const {
  return ChainSpec(n_sites_, hopping_, pairing_, chemical_potential_, std::move(profile));
}

void to_json(nlohmann::json& j, const ChainSpec& spec) {
  const auto g = spec.profile().strengths();
  j = nlohmann::json{{"n_sites", spec.n_sites()},
                     {"hopping", spec.hopping()},
                     {"pairing", spec.pairing()},
                     {"chemical_potential", spec.chemical_potential()},
                     {"profile", std::vector<double>(g.begin(), g.end())}};
}

ChainSpec chain_spec_from_json(const nlohmann::json& j) {
  try {
    return ChainSpec(j.at("n_sites").get<int>(), j.at("hopping").get<double>(),
                     j.at("pairing").get<double>(), j.at("chemical_potential").get<double>(),
                     GainProfile(j.at("profile").get<std::vector<double>>()));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed chain spec: ") + e.what());
  }
}

ChainSpec load_chain_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PersistenceError("cannot open chain spec " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParameter("chain spec " + path + " is not valid JSON: " + e.what());
  }
  return chain_spec_from_json(j);
}

void save_chain_spec(const std::string& path, const ChainSpec& spec) {
  std::ofstream out(path);
  if (!out) throw PersistenceError("cannot write chain spec " + path);
  out << nlohmann::json(spec).dump(2) << '\n';
  if (!out) throw PersistenceError("write failed for " + path);
}

}  // namespace kitaev
