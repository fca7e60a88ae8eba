#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace kitaev::oracle {

std::vector<Complex> lapack_eigenvalues(const ComplexMatrix& m) {
  const lapack_int n = static_cast<lapack_int>(m.rows());
  ComplexMatrix a = m;  // column-major copy, overwritten by zgeev
  std::vector<lapack_complex_double> w(static_cast<std::size_t>(n));
  lapack_complex_double dummy[1];
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n,
                                        a.data(), n,
                                        w.data(), dummy, 1, dummy, 1);
  if (info != 0) throw std::runtime_error("zgeev failed");
  std::vector<Complex> out;
  out.reserve(w.size());
  for (const auto& z : w) out.push_back(z);
  return out;
}

double scanned_gap(double hopping, double mu, double delta, int points) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double k = -std::numbers::pi + 2.0 * std::numbers::pi * i / (points - 1);
    const double a = 2.0 * hopping * std::cos(k) + mu;
    const double b = 2.0 * delta * std::sin(k);
    best = std::min(best, std::sqrt(a * a + b * b));
  }
  return best;
}

std::vector<double> ring_levels(int n_sites, double hopping, double mu, double delta) {
  std::vector<double> levels;
  for (int m = 0; m < n_sites; ++m) {
    const double k = 2.0 * std::numbers::pi * m / n_sites;
    const double a = 2.0 * hopping * std::cos(k) + mu;
    const double b = 2.0 * delta * std::sin(k);
    const double e = std::sqrt(a * a + b * b);
    levels.push_back(-e);
    levels.push_back(e);
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = b.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

ComplexMatrix random_complex_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = Complex(normal(rng), normal(rng));
  }
  return m;
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex_matrix(n, rng));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

int count_below(const std::vector<Complex>& values, double cut) {
  return static_cast<int>(
      std::count_if(values.begin(), values.end(), [cut](const Complex& z) { return std::abs(z) <= cut; }));
}

}  // namespace kitaev::oracle
