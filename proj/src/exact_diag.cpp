#include "qap/exact_diag.hpp"

#include <bit>
#include <complex>

#include <Eigen/Dense>

#include "qap/errors.hpp"

namespace qap {

double exact_diag(const PauliSum& hamiltonian) {
  if (hamiltonian.n_qubits > 12)
    throw capability_error("exact_diag is capped at 12 qubits");
  const int n = hamiltonian.n_qubits;
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Zero(dim, dim);
  static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const PauliTerm& term : hamiltonian.terms) {
    std::size_t flip = 0, phase_mask = 0;
    int n_y = 0;
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << (n - 1 - q);
      switch (term.paulis[q]) {
        case 'X': flip |= bit; break;
        case 'Y': flip |= bit; phase_mask |= bit; ++n_y; break;
        case 'Z': phase_mask |= bit; break;
        default: break;
      }
    }
    // P|j> = phase(j)|j ^ flip>: each term fills one entry per column.
    for (std::size_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & phase_mask) & 1) ? -1.0 : 1.0;
      matrix(j ^ flip, j) += term.coeff * sign * i_pow[n_y & 3];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numeric_error("eigenvalue solve failed");
  return solver.eigenvalues().minCoeff();
}

}  // namespace qap
