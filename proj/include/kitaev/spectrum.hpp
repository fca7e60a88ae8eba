#pragma once

#include <optional>
#include <vector>

#include "kitaev/hamiltonian.hpp"

namespace kitaev {

// Residual bound enforced on every eigenpair: ||Mv - lv|| <= this * max(1, ||M||_F).
inline constexpr double kResidualBound = 1e-9;

struct SpectrumResult {
  // Sorted by real part, then imaginary part.
  std::vector<Complex> eigenvalues;
  // Unit-norm columns aligned with `eigenvalues`, when requested.
  std::optional<ComplexMatrix> eigenvectors;
  // ||M v - l v||_2 per pair; empty when eigenvectors were not requested.
  std::vector<double> residuals;
  // Frobenius norm of the input.
  double matrix_norm = 0.0;
};

/// Dense eigendecomposition of a general complex matrix (Hessenberg reduction
/// followed by shifted QR).
///
/// Throws InvalidMatrix for non-square, empty or non-finite input and
/// SolverFailure when QR does not converge or a residual breaks the bound.
SpectrumResult eig(const ComplexMatrix& matrix, bool want_vectors);

double max_imag(const SpectrumResult& spectrum);

}  // namespace kitaev
