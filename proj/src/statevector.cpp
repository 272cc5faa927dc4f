#include "qnpulab/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qnpulab {

StateVector::StateVector(int n, std::vector<cxd> amplitudes)
    : n_(n), amp_(std::move(amplitudes)) {
  if (amp_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("StateVector: amplitude length != 2^n");
}

StateVector StateVector::basis(int n, std::size_t k) {
  if (n < 1) throw std::invalid_argument("StateVector::basis: n must be >= 1");
  if (k >= (std::size_t{1} << n))
    throw std::invalid_argument("StateVector::basis: index out of range");
  StateVector s(n);
  s.amp_[k] = cxd{1.0, 0.0};
  return s;
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const auto& z : amp_) n2 += std::norm(z);
  return std::sqrt(n2);
}

void StateVector::normalize() {
  double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  double inv = 1.0 / n;
  for (auto& z : amp_) z *= inv;
}

cxd inner(const StateVector& u, const StateVector& v) {
  if (u.num_qubits() != v.num_qubits())
    throw std::invalid_argument("inner: dimension mismatch");
  cxd s{0.0, 0.0};
  for (std::size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

double ancilla_sigma_z(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits())
    throw std::invalid_argument("ancilla_sigma_z: qubit index out of range");
  std::size_t mask = std::size_t{1} << (state.num_qubits() - 1 - qubit);
  double s = 0.0;
  for (std::size_t k = 0; k < state.size(); ++k)
    s += ((k & mask) ? -1.0 : 1.0) * std::norm(state[k]);
  return s;
}

namespace {

// Radix-2 transform with the +i sign convention and 1/sqrt(N) scale.
void fourier(std::vector<cxd>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
    if (inverse) ang = -ang;
    cxd wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cxd w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        cxd u = a[i + j];
        cxd v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& z : a) z *= scale;
}

}  // namespace

StateVector qft(const StateVector& state) {
  std::vector<cxd> a = state.amplitudes();
  fourier(a, false);
  return StateVector(state.num_qubits(), std::move(a));
}

StateVector qft_inverse(const StateVector& state) {
  std::vector<cxd> a = state.amplitudes();
  fourier(a, true);
  return StateVector(state.num_qubits(), std::move(a));
}

}  // namespace qnpulab
