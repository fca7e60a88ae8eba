#pragma once

// Reference routines used only by tests. None of them goes through the
// library's eigensolver.

#include <cstdint>
#include <random>
#include <vector>

#include "kitaev/hamiltonian.hpp"

namespace kitaev::oracle {

// LAPACK zgeev eigenvalues, unsorted.
std::vector<Complex> lapack_eigenvalues(const ComplexMatrix& m);

// min over `points` evenly spaced k in [-pi, pi] of E_k, evaluated directly.
double scanned_gap(double hopping, double mu, double delta, int points);

// {-E_k, +E_k : k = 2 pi m / n}, m = 0..n-1.
std::vector<double> ring_levels(int n_sites, double hopping, double mu, double delta);

// Largest distance in a greedy nearest-neighbour matching of two multisets.
double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

ComplexMatrix random_complex_matrix(int n, std::mt19937_64& rng);
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);

// Dense brute-force count of |l| <= cut using zgeev.
int count_below(const std::vector<Complex>& values, double cut);

}  // namespace kitaev::oracle
