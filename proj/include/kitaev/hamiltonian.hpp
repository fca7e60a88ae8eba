#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "kitaev/model.hpp"

namespace kitaev {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// FermionNambu orders the basis as (a_1..a_N, a_1^+..a_N^+); Majorana as
// (g_1A, g_1B, g_2A, g_2B, ..., g_NB).
enum class Basis { FermionNambu, Majorana };

enum class Boundary { Open, Periodic };

std::string basis_tag(Basis basis);

/// Single-particle matrix M of H = 1/2 Psi^+ M Psi + E0.
///
/// Eigenvalues of M are the quasiparticle energies directly (the +-E_k of the
/// infinite Hermitian chain). E0 = (i/2) sum_j g_j is kept separately.
class BdgMatrix {
 public:
  BdgMatrix(ComplexMatrix entries, Basis basis, Complex scalar_offset, ChainSpec source_spec);

  const ComplexMatrix& entries() const { return entries_; }
  Eigen::Index dimension() const { return entries_.rows(); }
  Basis basis() const { return basis_; }
  Complex scalar_offset() const { return scalar_offset_; }
  const ChainSpec& source_spec() const { return source_spec_; }

 private:
  ComplexMatrix entries_;
  Basis basis_;
  Complex scalar_offset_;
  ChainSpec source_spec_;
};

/// Builds M in the FermionNambu basis.
///
/// Particle block h: h_jj = -mu + i g_j, h_{j,j+1} = h_{j+1,j} = -T.
/// Hole block: -h^T.
/// Pairing: the annihilation-pair block (rows a^+, columns a) carries
/// +Delta at (j, j+1) and -Delta at (j+1, j); the creation-pair block is its
/// negative. Periodic boundaries add the bond (N, 1) with the same signs.
BdgMatrix build_bdg(const ChainSpec& spec, Boundary boundary = Boundary::Open);

/// Unitary Omega with Gamma = Omega Psi, rows g_jA/sqrt2 = (a_j + a_j^+)/sqrt2
/// and g_jB/sqrt2 = i(a_j^+ - a_j)/sqrt2.
ComplexMatrix majorana_transform(int n_sites);

/// Omega M Omega^+. Throws InvalidBasis if `m` is already Majorana.
BdgMatrix to_majorana_basis(const BdgMatrix& m);

class MomentumPoint {
 public:
  explicit MomentumPoint(double k);
  double k() const { return k_; }

 private:
  double k_;
};

/// (-E_k, +E_k) of the infinite Hermitian chain,
/// E_k = sqrt((2T cos k + mu)^2 + 4 Delta^2 sin^2 k).
std::pair<Complex, Complex> dispersion(MomentumPoint k, double hopping, double mu, double delta);

/// min_k |E_k|, from the radicand's extrema in c = cos k on [-1, 1].
double bulk_gap(double hopping, double mu, double delta);

// Text dump: "# basis=<tag> n=<dim>" then one row per line of
// comma-separated "re+imj" entries, 17 significant digits.
void write_bdg_text(std::ostream& out, const BdgMatrix& m);

}  // namespace kitaev
