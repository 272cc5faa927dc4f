#ifndef QNPULAB_STATEVECTOR_HPP
#define QNPULAB_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qnpulab {

using cxd = std::complex<double>;

/// Dense amplitude vector over n qubits.  Basis label q_1 ... q_n maps to
/// index k = sum_j q_j 2^(n-j): qubit 0 is the most significant bit.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n) : n_(n), amp_(std::size_t{1} << n, cxd{0.0, 0.0}) {}
  StateVector(int n, std::vector<cxd> amplitudes);

  /// Basis state |binary(k)>.  Throws for k out of range.
  static StateVector basis(int n, std::size_t k);

  int num_qubits() const { return n_; }
  std::size_t size() const { return amp_.size(); }

  cxd& operator[](std::size_t k) { return amp_[k]; }
  const cxd& operator[](std::size_t k) const { return amp_[k]; }
  std::vector<cxd>& amplitudes() { return amp_; }
  const std::vector<cxd>& amplitudes() const { return amp_; }

  double norm() const;
  void normalize();

  /// Bit of qubit j in basis index k (qubit 0 most significant).
  bool bit(std::size_t k, int j) const {
    return (k >> (n_ - 1 - j)) & std::size_t{1};
  }

 private:
  int n_ = 0;
  std::vector<cxd> amp_;
};

/// init_basis of the module contract.
inline StateVector init_basis(int n, std::size_t k) { return StateVector::basis(n, k); }

/// <u|v> = sum_k conj(u_k) v_k.  Throws on dimension mismatch.
cxd inner(const StateVector& u, const StateVector& v);

/// Expectation of sigma_z on one qubit: +1 weight for bit 0, -1 for bit 1.
double ancilla_sigma_z(const StateVector& state, int qubit);

/// Unitary Fourier transform phi_j = (1/sqrt N) sum_k exp(+2 pi i j k / N) psi_k.
/// With this sign the cyclic down-shift becomes diag(exp(-2 pi i k / N)) and
/// the finite-difference Laplacian diagonalizes with spectrum
/// laplacian_spectrum(N) on unit-length grids.
StateVector qft(const StateVector& state);
StateVector qft_inverse(const StateVector& state);

}  // namespace qnpulab

#endif
