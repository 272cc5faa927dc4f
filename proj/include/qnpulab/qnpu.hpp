#ifndef QNPULAB_QNPU_HPP
#define QNPULAB_QNPU_HPP

#include <cstdint>
#include <vector>

#include "qnpulab/circuit.hpp"
#include "qnpulab/grid.hpp"
#include "qnpulab/statevector.hpp"

namespace qnpulab {

/// Ancilla expectation of one measurement circuit next to the direct sum it
/// should equal.  The two paths agree to 1e-9 whenever both are computed.
struct QnpuResult {
  double sigma_z = 0.0;    ///< circuit path
  double algebraic = 0.0;  ///< direct evaluation
};

/// Cyclic index-shift network: driving `control` high maps the register
/// coefficients psi_k -> psi_{k+1} (periodic).  Scratch ancillas return to
/// |0>.  Gate counts (by control arity) for n > 2 are n-2 CNOT and 2n-2
/// Toffoli on n-2 scratch wires; n = 2 needs one CNOT + one Toffoli and
/// n = 1 a single CNOT.
struct AdderCircuit {
  Circuit circuit;  ///< wires: [0..n) register, n control, then scratch
  int n = 0;
  int control = 0;
  int scratch_begin = 0;
  int scratch_count = 0;

  int count_with_controls(std::size_t k) const;
  int cnot_count() const { return count_with_controls(1); }
  int toffoli_count() const { return count_with_controls(2); }
};

AdderCircuit build_adder(int n);

/// Bare action of the shift on an n-qubit register state (control driven
/// high internally, ancillas stripped).
StateVector apply_adder(const AdderCircuit& adder, const StateVector& reg);

/// Appends src's gates into dst with qubit indices renumbered through
/// `qubit_map` (indexed by src wire) and `extra_controls` added to every
/// gate, which turns the whole block into a controlled block.
void append_mapped(Circuit& dst, const Circuit& src,
                   const std::vector<int>& qubit_map,
                   const std::vector<int>& extra_controls = {});

struct KineticQnpu {
  QnpuResult sigma;
  double K = 0.0;
};
/// Hadamard test around the controlled shift: sigma_z = Re<psi|A|psi>,
/// K = (1 - sigma_z)/h^2.
KineticQnpu kinetic_qnpu(const Circuit& prep, const GridSpec& grid);

struct PotentialQnpu {
  QnpuResult sigma;
  double P = 0.0;
};
/// Two-register pairing circuit: sigma_z = sum_k Vt_k |psi_k|^2, P = alpha
/// sigma_z.  pot_circuit must prepare the unit vector Vt on its register.
PotentialQnpu potential_qnpu(const Circuit& prep, const Circuit& pot_circuit,
                             double alpha);

/// Three-register pairing circuit: sigma_z = sum_k |psi_k|^4.  The second
/// copy is fed prep, the third its element-wise conjugate.
QnpuResult nonlinear_qnpu(const Circuit& prep);

enum class AmplitudePart { real, imaginary };
/// Interferometric amplitude readout: Re psi_k (or Im psi_k with the extra
/// ancilla phase shift) against the basis preparation Ry(pi binary(k)).
QnpuResult readout_amplitude(const Circuit& prep, std::size_t k, AmplitudePart part);

/// Readout with pi/2 rotations on the n - coarse_bits least significant
/// qubits: entry c is the 1/sqrt(2)-per-qubit weighted average of Re psi
/// over the block with leading bits binary(c).
std::vector<double> coarse_average_readout(const Circuit& prep, int coarse_bits);

/// Measures all qubits M times in the computational basis and averages the
/// diagonal observable: (1/M) sum_m o_{k^(m)}.  Deterministic per seed.
double diagonal_sampling(const StateVector& state, const std::vector<double>& diag,
                         long shots, std::uint64_t seed);

/// Fourier-basis sampling estimate of <psi|Laplacian|psi> on a unit-length
/// grid (eigenvalues from laplacian_spectrum).
double laplace_sampling(const StateVector& state, long shots, std::uint64_t seed);

/// Controlled-overlap networks for explicit time stepping: sigma_z equals
/// Re<0|Utilde^dag W U|0> with every block controlled by the ancilla.
enum class OverlapKind {
  plain,           ///< W = 1
  adder,           ///< W = A
  adder_dag,       ///< W = A^dag
  adder_diag,      ///< W = A D^dag   (D diagonal with the Utilde state)
  adder_dag_diag,  ///< W = A^dag D^dag
};
QnpuResult overlap_qnpu(const Circuit& prep_u, const Circuit& prep_utilde,
                        OverlapKind kind);

}  // namespace qnpulab

#endif
