#include "kitaev/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "kitaev/errors.hpp"
#include "kitaev/parallel.hpp"

namespace kitaev {

namespace {

constexpr double kEdgeLocalized = 1.0 - 1e-10;
constexpr double kWeightFloor = 1e-14;
constexpr double kMinFitQuality = 0.9;

double scaled(double tolerance, double norm) { return tolerance * std::max(1.0, norm); }

// Orthonormal basis of span(vectors) rotated so that column 0 carries the most
// weight on the left half of the chain and the last column the least.
ComplexMatrix localize(const ComplexMatrix& vectors, int n_sites) {
  const Eigen::Index k = vectors.cols();
  if (k <= 1) return vectors;
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(vectors);
  if (qr.rank() < k) return vectors;
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(vectors.rows(), k);

  const Eigen::Index left_components = 2 * (n_sites / 2);
  ComplexMatrix left = q.topRows(left_components).adjoint() * q.topRows(left_components);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(left);
  ComplexMatrix rotated = q * solver.eigenvectors();
  return rotated.rowwise().reverse();
}

}  // namespace

std::string to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::TopologicalNontrivial:
      return "TopologicalNontrivial";
    case PhaseLabel::Trivial:
      return "Trivial";
    case PhaseLabel::GapClosing:
      return "GapClosing";
  }
  return "?";
}

std::string to_string(Reality reality) {
  switch (reality) {
    case Reality::Real:
      return "Real";
    case Reality::PartiallyComplex:
      return "PartiallyComplex";
    case Reality::FullyComplex:
      return "FullyComplex";
  }
  return "?";
}

void to_json(nlohmann::json& j, const ZeroModeReport& report) {
  nlohmann::json values = nlohmann::json::array();
  for (const Complex& z : report.zero_eigenvalues) values.push_back({z.real(), z.imag()});
  nlohmann::json weights = nlohmann::json::array();
  for (const EdgeWeights& w : report.edge_weights) weights.push_back({w.left, w.right});
  nlohmann::json lengths = nlohmann::json::array();
  for (const auto& l : report.localization_lengths) {
    lengths.push_back(l ? nlohmann::json(*l) : nlohmann::json(nullptr));
  }
  j = nlohmann::json{{"zero_count", report.zero_count},
                     {"zero_eigenvalues", values},
                     {"edge_weights", weights},
                     {"localization_lengths", lengths}};
}

int count_zero_eigenvalues(const SpectrumResult& spectrum, double zero_tolerance) {
  const double cut = scaled(zero_tolerance, spectrum.matrix_norm);
  return static_cast<int>(std::count_if(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                                        [cut](const Complex& l) { return std::abs(l) <= cut; }));
}

std::vector<double> site_weights(const Eigen::VectorXcd& majorana_vector) {
  std::vector<double> w(static_cast<std::size_t>(majorana_vector.size() / 2));
  for (std::size_t j = 0; j < w.size(); ++j) {
    const auto a = static_cast<Eigen::Index>(2 * j);
    w[j] = std::norm(majorana_vector(a)) + std::norm(majorana_vector(a + 1));
  }
  return w;
}

std::optional<double> fit_localization_length(const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  const std::size_t half = n / 2;
  if (half < 3) return std::nullopt;
  const double left = std::accumulate(weights.begin(), weights.begin() + static_cast<long>(half), 0.0);
  const double right = std::accumulate(weights.end() - static_cast<long>(half), weights.end(), 0.0);
  const bool from_left = left >= right;

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t d = 0; d < half; ++d) {
    const double w = from_left ? weights[d] : weights[n - 1 - d];
    if (w < kWeightFloor) continue;
    xs.push_back(static_cast<double>(d));
    ys.push_back(std::log(w));
  }
  if (xs.size() < 3) return std::nullopt;

  const double m = static_cast<double>(xs.size());
  const double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
  const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    syy += (ys[i] - y_mean) * (ys[i] - y_mean);
  }
  const double slope = sxy / sxx;
  if (!(slope < 0.0) || syy == 0.0) return std::nullopt;
  const double r_squared = (sxy * sxy) / (sxx * syy);
  if (r_squared < kMinFitQuality) return std::nullopt;
  // weight ~ exp(-2 d / xi) for an amplitude decaying as exp(-d / xi)
  return -2.0 / slope;
}

ZeroModeReport detect_zero_modes(const ChainSpec& spec, double zero_tolerance) {
  if (!(zero_tolerance > 0.0)) throw InvalidParameter("zero tolerance must be positive");
  const BdgMatrix majorana = to_majorana_basis(build_bdg(spec));
  const SpectrumResult spectrum = eig(majorana.entries(), true);
  const double cut = scaled(zero_tolerance, spectrum.matrix_norm);

  ZeroModeReport report;
  std::vector<Eigen::Index> picked;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    if (std::abs(spectrum.eigenvalues[i]) <= cut) {
      picked.push_back(static_cast<Eigen::Index>(i));
      report.zero_eigenvalues.push_back(spectrum.eigenvalues[i]);
    }
  }
  report.zero_count = static_cast<int>(picked.size());
  if (picked.empty()) return report;

  ComplexMatrix vectors(majorana.dimension(), static_cast<Eigen::Index>(picked.size()));
  for (std::size_t c = 0; c < picked.size(); ++c) {
    vectors.col(static_cast<Eigen::Index>(c)) = spectrum.eigenvectors->col(picked[c]);
  }
  const ComplexMatrix modes = localize(vectors, spec.n_sites());

  for (Eigen::Index c = 0; c < modes.cols(); ++c) {
    const std::vector<double> w = site_weights(modes.col(c));
    const EdgeWeights edge{std::min(1.0, w.front()), std::min(1.0, w.back())};
    report.edge_weights.push_back(edge);
    if (edge.total() >= kEdgeLocalized) {
      report.localization_lengths.push_back(std::nullopt);
    } else {
      report.localization_lengths.push_back(fit_localization_length(w));
    }
  }
  return report;
}

PhaseLabel classify_phase(double hopping, double mu) {
  if (hopping == 0.0 || !std::isfinite(hopping) || !std::isfinite(mu)) {
    throw InvalidParameter("phase classification needs finite, nonzero hopping");
  }
  const double edge = 2.0 * std::abs(hopping);
  const double distance = std::abs(mu) - edge;
  if (std::abs(distance) <= 1e-12 * edge) return PhaseLabel::GapClosing;
  return distance < 0.0 ? PhaseLabel::TopologicalNontrivial : PhaseLabel::Trivial;
}

RealityClass classify_reality(const SpectrumResult& spectrum, double reality_tolerance) {
  if (!(reality_tolerance > 0.0)) throw InvalidParameter("reality tolerance must be positive");
  const double cut = scaled(reality_tolerance, spectrum.matrix_norm);
  const double m = max_imag(spectrum);
  if (m <= cut) return {Reality::Real, m};
  const bool all_complex = std::all_of(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                                       [cut](const Complex& l) { return std::abs(l.imag()) > cut; });
  return {all_complex ? Reality::FullyComplex : Reality::PartiallyComplex, m};
}

Complex scalar_offset_energy(const GainProfile& profile) {
  return Complex(0.0, 0.5 * profile.sum());
}

std::optional<double> find_critical(const SpecFamily& family, Interval range,
                                    double reality_tolerance, unsigned workers) {
  if (!(range.lo < range.hi)) throw InvalidParameter("critical search needs lo < hi");
  if (!(reality_tolerance > 0.0)) throw InvalidParameter("reality tolerance must be positive");

  auto is_complex = [&](double theta) {
    const SpectrumResult s = eig(build_bdg(family(theta)).entries(), false);
    return max_imag(s) > scaled(reality_tolerance, s.matrix_norm);
  };

  constexpr int n = kCriticalPrescanPoints;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = range.lo + (range.hi - range.lo) * i / (n - 1);
  std::vector<char> complex_at(n);
  parallel_for(n, workers, [&](std::size_t i) { complex_at[i] = is_complex(grid[i]); });

  std::vector<Bracket> brackets;
  for (int i = 0; i + 1 < n; ++i) {
    if (complex_at[i] != complex_at[i + 1]) brackets.push_back({grid[i], grid[i + 1]});
  }
  if (brackets.empty()) return std::nullopt;
  if (brackets.size() > 1) {
    std::string what = "indicator changes sign " + std::to_string(brackets.size()) + " times:";
    for (const Bracket& b : brackets) {
      what += " [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]";
    }
    throw AmbiguousCrossing(what, std::move(brackets));
  }

  double lo = brackets.front().lo;
  double hi = brackets.front().hi;
  const bool lo_complex = is_complex(lo);
  while (hi - lo > kCriticalResolution) {
    const double mid = 0.5 * (lo + hi);
    if (is_complex(mid) == lo_complex) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace kitaev
