#include "kitaev/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "kitaev/errors.hpp"

namespace kitaev {

namespace {

constexpr Complex kI{0.0, 1.0};

double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

std::string basis_tag(Basis basis) {
  return basis == Basis::FermionNambu ? "fermion_nambu" : "majorana";
}

BdgMatrix::BdgMatrix(ComplexMatrix entries, Basis basis, Complex scalar_offset,
                     ChainSpec source_spec)
    : entries_(std::move(entries)),
      basis_(basis),
      scalar_offset_(scalar_offset),
      source_spec_(std::move(source_spec)) {}

BdgMatrix build_bdg(const ChainSpec& spec, Boundary boundary) {
  const int n = spec.n_sites();
  const double t = spec.hopping();
  const double delta = spec.pairing();
  const double mu = spec.chemical_potential();
  const auto& g = spec.profile();

  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  ComplexMatrix pair_annihilate = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) h(j, j) = Complex(-mu, g[static_cast<std::size_t>(j)]);

  auto add_bond = [&](int j, int k) {
    h(j, k) += -t;
    h(k, j) += -t;
    pair_annihilate(j, k) += delta;
    pair_annihilate(k, j) -= delta;
  };
  for (int j = 0; j + 1 < n; ++j) add_bond(j, j + 1);
  if (boundary == Boundary::Periodic && n > 2) add_bond(n - 1, 0);

  ComplexMatrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = h;
  m.topRightCorner(n, n) = -pair_annihilate;
  m.bottomLeftCorner(n, n) = pair_annihilate;
  m.bottomRightCorner(n, n) = -h.transpose();

  return BdgMatrix(std::move(m), Basis::FermionNambu, 0.5 * kI * g.sum(), spec);
}

ComplexMatrix majorana_transform(int n_sites) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix omega = ComplexMatrix::Zero(2 * n_sites, 2 * n_sites);
  for (int j = 0; j < n_sites; ++j) {
    omega(2 * j, j) = s;
    omega(2 * j, n_sites + j) = s;
    omega(2 * j + 1, j) = -kI * s;
    omega(2 * j + 1, n_sites + j) = kI * s;
  }
  return omega;
}

BdgMatrix to_majorana_basis(const BdgMatrix& m) {
  if (m.basis() != Basis::FermionNambu) {
    throw InvalidBasis("matrix is already in the Majorana basis");
  }
  // Omega = U / sqrt2 with U built from +-1, +-i, so Omega M Omega^+ is
  // evaluated blockwise as (U m U^+) / 2 to keep exact cancellations exact.
  const int n = static_cast<int>(m.dimension() / 2);
  const ComplexMatrix& f = m.entries();
  ComplexMatrix out(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Complex pp = f(j, k);
      const Complex ph = f(j, n + k);
      const Complex hp = f(n + j, k);
      const Complex hh = f(n + j, n + k);
      // U rows: A = (1, 1), B = (-i, i) acting on (a, a^+).
      out(2 * j, 2 * k) = 0.5 * (pp + ph + hp + hh);
      out(2 * j, 2 * k + 1) = 0.5 * kI * (pp - ph + hp - hh);
      out(2 * j + 1, 2 * k) = 0.5 * kI * (-pp - ph + hp + hh);
      out(2 * j + 1, 2 * k + 1) = 0.5 * (pp - ph - hp + hh);
    }
  }
  return BdgMatrix(std::move(out), Basis::Majorana, m.scalar_offset(), m.source_spec());
}

MomentumPoint::MomentumPoint(double k) : k_(k) {
  if (!std::isfinite(k)) throw InvalidParameter("wavenumber must be finite");
}

std::pair<Complex, Complex> dispersion(MomentumPoint k, double hopping, double mu, double delta) {
  const double band = 2.0 * hopping * std::cos(k.k()) + mu;
  const double gap = 2.0 * delta * std::sin(k.k());
  const double e = std::sqrt(band * band + gap * gap);
  return {Complex(-e, 0.0), Complex(e, 0.0)};
}

double bulk_gap(double hopping, double mu, double delta) {
  // Radicand as a quadratic in c = cos k:
  //   4 (T^2 - Delta^2) c^2 + 4 T mu c + mu^2 + 4 Delta^2.
  const double a = 4.0 * (hopping * hopping - delta * delta);
  const double b = 4.0 * hopping * mu;
  const double c0 = mu * mu + 4.0 * delta * delta;
  auto radicand = [&](double c) { return std::max(0.0, (a * c + b) * c + c0); };

  double best = std::min(radicand(-1.0), radicand(1.0));
  if (a > 0.0) {
    const double c_star = -b / (2.0 * a);
    if (c_star > -1.0 && c_star < 1.0) best = std::min(best, radicand(c_star));
  }
  return std::sqrt(best);
}

void write_bdg_text(std::ostream& out, const BdgMatrix& m) {
  const auto& e = m.entries();
  out << "# basis=" << basis_tag(m.basis()) << " n=" << e.rows() << '\n';
  const auto old_flags = out.flags();
  const auto old_precision = out.precision(17);
  out.unsetf(std::ios::floatfield);
  for (Eigen::Index r = 0; r < e.rows(); ++r) {
    for (Eigen::Index c = 0; c < e.cols(); ++c) {
      if (c > 0) out << ',';
      const double re = clean_zero(e(r, c).real());
      const double im = clean_zero(e(r, c).imag());
      out << re << (std::signbit(im) ? '-' : '+') << std::abs(im) << 'j';
    }
    out << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace kitaev
