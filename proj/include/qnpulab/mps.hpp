#ifndef QNPULAB_MPS_HPP
#define QNPULAB_MPS_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "qnpulab/circuit.hpp"
#include "qnpulab/statevector.hpp"

namespace qnpulab {

/// Rank-3 site tensor stored as two (left x right) matrices, one per
/// physical value.
struct MpsTensor {
  std::array<Eigen::MatrixXcd, 2> m;

  Eigen::Index left() const { return m[0].rows(); }
  Eigen::Index right() const { return m[0].cols(); }
};

/// Chain of site tensors; boundary bonds have dimension 1.
struct Mps {
  std::vector<MpsTensor> tensors;

  int num_sites() const { return static_cast<int>(tensors.size()); }
  Eigen::Index max_bond() const;
  void check_consistent() const;  ///< throws on mismatched bonds
};

/// Contracts the chain; returns the normalized state and its norm.
/// Requires num_sites() <= 24.
std::pair<StateVector, double> mps_to_dense(const Mps& m);

/// Product state with amplitudes 2^{-n/2} exp(i kappa sum_j q_j 2^{-j}),
/// i.e. a plane wave exp(i kappa x) on the unit grid x_k = k / 2^n.
Mps mps_plane_wave(double kappa, int n);

/// Bond-2 chain for sin(kappa x); throws DegenerateFunctionError when the
/// sampled function vanishes identically.
Mps mps_sine(double kappa, int n);

/// Bond-4 chain for s1 sin(kappa1 x) + s2 sin(kappa2 x).
Mps mps_two_sines(double s1, double s2, double kappa1, double kappa2, int n);

/// Random chain with all internal bonds chi (complex Gaussian entries).
Mps random_mps(int n, Eigen::Index chi, std::uint64_t seed,
               bool real_entries = false);

/// Free parameters summed over sites:
/// dim(l) dim(r) 2 - dim(r)(dim(r)+1)/2 per tensor (isometry counting).
long mps_param_count(const Mps& m);

/// Staircase circuit preparing the chain: one (s+1)-qubit unitary per block,
/// s = ceil(log2 chi), produced by a left-to-right QR sweep with the
/// R-diagonal fixed non-negative.
struct CompiledMps {
  Circuit circuit;
  int block_qubits = 0;     ///< s + 1
  int depth_two_qubit = 0;  ///< accounted two-qubit gate count
  double norm_factor = 0.0;
};
CompiledMps mps_to_circuit(const Mps& m);

/// Truncated left-canonical chain of a dense state (SVD sweep keeping at
/// most chi_max singular values per cut).
Mps dense_to_mps(const StateVector& psi, Eigen::Index chi_max);

/// Ancilla-interference generator for trigonometric profiles: measuring the
/// ancilla leaves a state proportional to cos(kappa x) or sin(kappa x).
/// Both branches and their probabilities are reported; a zero-norm branch
/// has probability 0 and an empty state.
struct TrigBranch {
  StateVector state;
  double probability = 0.0;
};
struct TrigOutcome {
  TrigBranch cos_branch;
  TrigBranch sin_branch;
};
TrigOutcome generate_trig_state(double kappa, int n);

/// Inverse participation ratio (N sum |psi_k|^4)^{-1}.
double ipr(const StateVector& psi);

/// Maximum von Neumann entropy (natural log) over the n-1 contiguous cuts.
double s_max(const StateVector& psi);

}  // namespace qnpulab

#endif
