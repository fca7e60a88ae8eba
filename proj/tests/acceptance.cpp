// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kitaev/analysis.hpp"
#include "kitaev/errors.hpp"
#include "kitaev/sweep.hpp"
#include "oracles.hpp"

using namespace kitaev;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

ChainSpec alternating_chain(double mu, double delta, double g0) {
  return ChainSpec(12, 1.0, delta, mu, alternating_profile(12, g0));
}

int absolute_zero_count(const ChainSpec& spec) {
  return oracle::count_below(eig(build_bdg(spec).entries(), false).eigenvalues, 1e-10);
}

double min_edge_total(const ZeroModeReport& r) {
  double w = 1.0;
  for (const EdgeWeights& e : r.edge_weights) w = std::min(w, e.total());
  return r.edge_weights.empty() ? 0.0 : w;
}

Outcome disorder_sweet_spot() {
  const auto start = std::chrono::steady_clock::now();
  int good = 0;
  double worst_edge = 1.0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const ChainSpec spec(12, 1.0, 1.0, 0.0, random_balanced_profile(12, 0.5, seed));
    const ZeroModeReport r = detect_zero_modes(spec);
    const double edge = min_edge_total(r);
    worst_edge = std::min(worst_edge, edge);
    if (absolute_zero_count(spec) == 2 && r.zero_count == 2 && edge >= 1.0 - 1e-10) ++good;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {good == 100 && seconds < 5.0,
          fmt("%d/100 trials with 2 zero modes, min edge weight 1-%.1e, %.2f s", good,
              1.0 - worst_edge, seconds)};
}

Outcome unbalanced_free_edges() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-0.2, 0.5);
  int good = 0;
  double worst_offset = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> g(12, 0.0);
    double sum = 0.0;
    for (std::size_t j = 1; j + 1 < g.size(); ++j) sum += (g[j] = u(rng));
    if (std::abs(sum) < 1e-3) g[5] += 0.1, sum += 0.1;
    const GainProfile profile(g);
    const ChainSpec spec(12, 1.0, 1.0, 0.0, profile);
    const Complex expected(0.0, 0.5 * sum);
    const double offset_error = std::max(std::abs(scalar_offset_energy(profile) - expected),
                                         std::abs(build_bdg(spec).scalar_offset() - expected));
    worst_offset = std::max(worst_offset, offset_error);
    if (!profile.is_balanced() && absolute_zero_count(spec) == 2 && offset_error <= 1e-14) ++good;
  }
  return {good == 50,
          fmt("%d/50 unbalanced profiles with 2 zero eigenvalues, offset error %.1e", good,
              worst_offset)};
}

Outcome gap_closing() {
  double worst_closed = 0.0;
  for (double delta : {0.5, 1.0, 2.0}) {
    for (double mu : {2.0, -2.0}) worst_closed = std::max(worst_closed, bulk_gap(1.0, mu, delta));
  }
  double smallest_open = INFINITY;
  for (double mu : {0.0, 1.0, 1.9, 2.1, 3.0}) {
    for (double delta : {0.5, 1.0, 2.0}) smallest_open = std::min(smallest_open, bulk_gap(1.0, mu, delta));
  }
  return {worst_closed <= 1e-12 && smallest_open > 0.0,
          fmt("gap at |mu|=2: %.1e, smallest open gap %.3g", worst_closed, smallest_open)};
}

Outcome pairing_and_trace() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> sites(2, 32);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst_pair = 0.0, worst_trace = 0.0;
  int good = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = sites(rng);
    std::vector<double> g(static_cast<std::size_t>(n));
    for (double& x : g) x = u(rng);
    const ChainSpec spec(n, u(rng), std::abs(u(rng)), u(rng), GainProfile(g));
    const SpectrumResult s = eig(build_bdg(spec).entries(), false);
    std::vector<Complex> negated;
    Complex total = 0.0;
    for (const Complex& l : s.eigenvalues) negated.push_back(-l), total += l;
    const double pair = oracle::multiset_distance(s.eigenvalues, negated) / s.matrix_norm;
    worst_pair = std::max(worst_pair, pair);
    worst_trace = std::max(worst_trace, std::abs(total));
    if (pair <= 1e-10 && std::abs(total) <= 1e-10) ++good;
  }
  return {good == 200, fmt("%d/200 specs, max pairing defect %.1e*||M||, max |trace| %.1e", good,
                           worst_pair, worst_trace)};
}

Outcome ring_cross_check() {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const double t = u(rng), mu = u(rng), delta = std::abs(u(rng));
    const std::vector<Complex> ev =
        eig(build_bdg(ChainSpec(16, t, delta, mu, zero_profile(16)), Boundary::Periodic).entries(), false)
            .eigenvalues;
    std::vector<double> levels = oracle::ring_levels(16, t, mu, delta);
    std::sort(levels.begin(), levels.end());
    for (std::size_t i = 0; i < ev.size(); ++i) {
      worst = std::max(worst, std::abs(ev[i] - Complex(levels[i], 0.0)));
    }
  }
  return {worst <= 1e-10, fmt("max deviation from dispersion %.1e", worst)};
}

Outcome mu_sweep_criticality() {
  std::ifstream in(std::string(KITAEV_GOLDEN_DIR) + "/critical_mu.json");
  const nlohmann::json golden = nlohmann::json::parse(in);
  const double tolerance = golden.at("tolerance");

  auto family = [](double g0) { return SpecFamily([g0](double mu) { return alternating_chain(mu, 1.0, g0); }); };
  const std::optional<double> weak = find_critical(family(0.1), {0.0, 3.0});
  const std::optional<double> medium = find_critical(family(0.15), {0.0, 3.0});
  const std::optional<double> strong = find_critical(family(0.5), {0.0, 3.0});

  double strong_min_imag = INFINITY;
  for (int i = 0; i <= 120; ++i) {
    const double mu = 3.0 * i / 120;
    strong_min_imag = std::min(strong_min_imag, max_imag(eig(build_bdg(alternating_chain(mu, 1.0, 0.5)).entries(), false)));
  }

  bool pass = weak && medium && !strong && strong_min_imag > 1e-9;
  if (weak && medium) {
    pass = pass && *weak > 0.0 && *weak < 2.0 && *medium > 0.0 && *medium < 2.0 && *medium > *weak;
    pass = pass && std::abs(*weak - golden.at("critical_mu").at("0.1").get<double>()) <= tolerance &&
           std::abs(*medium - golden.at("critical_mu").at("0.15").get<double>()) <= tolerance;
  }
  return {pass, fmt("mu_c(0.1) = %.6f, mu_c(0.15) = %.6f, g0=0.5: %s, min max_imag %.3g",
                    weak.value_or(NAN), medium.value_or(NAN), strong ? "crossing" : "no crossing",
                    strong_min_imag)};
}

// Complex grid runs of a 121-point Delta sweep at mu = T = 1.
std::string complex_runs(const std::vector<double>& imag, double step, int* runs) {
  std::ostringstream s;
  *runs = 0;
  for (std::size_t i = 0; i < imag.size();) {
    if (imag[i] <= 1e-9) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < imag.size() && imag[j + 1] > 1e-9) ++j;
    s << (*runs ? " " : "") << "[" << i * step << "," << j * step << "]";
    ++*runs;
    i = j + 1;
  }
  return s.str();
}

Outcome delta_sweep_threshold() {
  const int steps = 121;
  const double step = 3.0 / (steps - 1);
  auto sweep = [&](double g0) {
    std::vector<double> imag(steps);
    for (int i = 0; i < steps; ++i) {
      imag[static_cast<std::size_t>(i)] = max_imag(eig(build_bdg(alternating_chain(1.0, i * step, g0)).entries(), false));
    }
    return imag;
  };
  // A single threshold: real on [0, Delta_c), complex on [Delta_c, 3].
  auto single_threshold = [](const std::vector<double>& imag) {
    std::size_t first_complex = imag.size();
    for (std::size_t i = 0; i < imag.size(); ++i) {
      if (imag[i] > 1e-9) {
        first_complex = i;
        break;
      }
    }
    if (first_complex == 0 || first_complex == imag.size()) return false;
    return std::all_of(imag.begin() + static_cast<long>(first_complex), imag.end(),
                       [](double m) { return m > 1e-9; });
  };

  std::string detail;
  bool pass = true;
  for (double g0 : {0.1, 0.15}) {
    const std::vector<double> imag = sweep(g0);
    int runs = 0;
    const std::string where = complex_runs(imag, step, &runs);
    const bool ok = single_threshold(imag);
    pass = pass && ok;
    // onset of the final complex run and the largest |Im| before it
    std::size_t last_real = imag.size() - 1;
    while (last_real > 0 && imag[last_real] > 1e-9) --last_real;
    const double early_peak = *std::max_element(imag.begin(), imag.begin() + static_cast<long>(last_real) + 1);
    const std::optional<double> onset = find_critical(
        [g0](double delta) { return alternating_chain(1.0, delta, g0); },
        {last_real * step, (last_real + 1) * step});
    detail += fmt("g0=%g: %s (complex on %s, persistent from Delta = %.6f, peak |Im| below it %.3g); ",
                  g0, ok ? "single threshold" : "no single threshold", where.c_str(),
                  onset.value_or(NAN), early_peak);
  }
  const std::vector<double> strong = sweep(0.5);
  int low_complex = 0;
  for (int i = 1; i <= 10; ++i) low_complex += strong[static_cast<std::size_t>(i)] > 1e-9;
  pass = pass && low_complex == 10;
  detail += fmt("g0=0.5: %d/10 complex points on (0, 0.25]", low_complex);
  return {pass, detail};
}

Outcome pt_predicate() {
  int good = 0, total = 0;
  for (int n = 4; n <= 32; ++n) {
    for (double g0 : {0.05, 0.15, 0.5, 1.0}) {
      ++total;
      const GainProfile p = alternating_profile(n, g0);
      if (n % 2 == 0) {
        if (is_pt_symmetric_nonhermitian_part(p, 1e-14) && p.is_balanced()) ++good;
      } else if (!p.is_balanced()) {
        ++good;
      }
    }
  }
  return {good == total, fmt("%d/%d alternating profiles behave as expected", good, total)};
}

Outcome eigensolver_contract() {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<int> dims(2, 64);
  double worst = 0.0;
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ComplexMatrix m = oracle::random_complex_matrix(dims(rng), rng);
    try {
      const SpectrumResult r = eig(m, true);
      for (double residual : r.residuals) worst = std::max(worst, residual / std::max(1.0, r.matrix_norm));
    } catch (const SolverFailure&) {
      ++failures;
    }
  }
  double worst_similarity = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = dims(rng);
    const ComplexMatrix m = oracle::random_complex_matrix(n, rng);
    const ComplexMatrix q = oracle::random_unitary(n, rng);
    const SpectrumResult a = eig(m, false);
    const SpectrumResult b = eig(q.adjoint() * m * q, false);
    worst_similarity = std::max(worst_similarity,
                                oracle::multiset_distance(a.eigenvalues, b.eigenvalues) / a.matrix_norm);
  }
  return {failures == 0 && worst <= 1e-9 && worst_similarity <= 1e-9,
          fmt("%d solver failures, max residual %.1e*max(1,||M||), similarity defect %.1e*||M||",
              failures, worst, worst_similarity)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sweet-spot zero modes under random balanced gain/loss", disorder_sweet_spot},
      {"zero modes with unbalanced free-edge profiles", unbalanced_free_edges},
      {"bulk gap closes at mu = +-2T", gap_closing},
      {"spectral pairing and zero trace", pairing_and_trace},
      {"periodic chain matches the bulk dispersion", ring_cross_check},
      {"mu sweeps: critical mu ordering and strong-gain complexity", mu_sweep_criticality},
      {"Delta sweeps: single reality threshold for weak gain", delta_sweep_threshold},
      {"alternating profiles: reflection-odd for even N, unbalanced for odd N", pt_predicate},
      {"eigensolver residual and similarity contract", eigensolver_contract},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
