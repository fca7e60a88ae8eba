#include "kitaev/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "kitaev/errors.hpp"

namespace kitaev {

SpectrumResult eig(const ComplexMatrix& matrix, bool want_vectors) {
  if (matrix.rows() != matrix.cols()) {
    throw InvalidMatrix("matrix is " + std::to_string(matrix.rows()) + "x" +
                        std::to_string(matrix.cols()) + ", expected square");
  }
  if (matrix.rows() == 0) throw InvalidMatrix("matrix is empty");
  if (!matrix.allFinite()) throw InvalidMatrix("matrix has non-finite entries");

  const Eigen::Index n = matrix.rows();
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  const long max_iterations = static_cast<long>(Eigen::ComplexSchur<ComplexMatrix>::m_maxIterationsPerRow) * n;
  solver.setMaxIterations(max_iterations);
  solver.compute(matrix, want_vectors);
  if (solver.info() != Eigen::Success) {
    throw SolverFailure("shifted QR did not converge within " + std::to_string(max_iterations) +
                            " iterations for a " + std::to_string(n) + "x" + std::to_string(n) +
                            " matrix",
                        n, max_iterations);
  }

  const Eigen::VectorXcd& values = solver.eigenvalues();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (values(a).real() != values(b).real()) return values(a).real() < values(b).real();
    return values(a).imag() < values(b).imag();
  });

  SpectrumResult result;
  result.matrix_norm = matrix.norm();
  result.eigenvalues.reserve(order.size());
  for (Eigen::Index i : order) result.eigenvalues.push_back(values(i));

  if (want_vectors) {
    const ComplexMatrix& raw = solver.eigenvectors();
    ComplexMatrix vectors(n, n);
    result.residuals.reserve(order.size());
    const double bound = kResidualBound * std::max(1.0, result.matrix_norm);
    for (Eigen::Index c = 0; c < n; ++c) {
      Eigen::VectorXcd v = raw.col(order[static_cast<std::size_t>(c)]);
      v.normalize();
      const double residual = (matrix * v - result.eigenvalues[static_cast<std::size_t>(c)] * v).norm();
      if (!(residual <= bound)) {
        throw SolverFailure("eigenpair " + std::to_string(c) + " has residual " +
                                std::to_string(residual) + " above bound " + std::to_string(bound),
                            n, max_iterations);
      }
      vectors.col(c) = v;
      result.residuals.push_back(residual);
    }
    result.eigenvectors = std::move(vectors);
  }
  return result;
}

double max_imag(const SpectrumResult& spectrum) {
  double m = 0.0;
  for (const Complex& l : spectrum.eigenvalues) m = std::max(m, std::abs(l.imag()));
  return m;
}

}  // namespace kitaev
