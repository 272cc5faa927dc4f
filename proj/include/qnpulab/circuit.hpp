#ifndef QNPULAB_CIRCUIT_HPP
#define QNPULAB_CIRCUIT_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qnpulab/statevector.hpp"

namespace qnpulab {

/// One unitary block.  `matrix` has dimension 2^targets.size(); targets[0]
/// is the most significant bit of the local index.  Controls gate the block
/// on |1> of every listed qubit.
struct Gate {
  Eigen::MatrixXcd matrix;
  std::vector<int> targets;
  std::vector<int> controls;
  std::string label;
};

/// Checks unitarity (1e-10) and target/control disjointness.
Gate make_gate(Eigen::MatrixXcd matrix, std::vector<int> targets,
               std::vector<int> controls = {}, std::string label = {});

Gate gate_x(int q);
Gate gate_hadamard(int q);
Gate gate_ry(int q, double theta);            ///< exp(-i theta sigma_y / 2)
Gate gate_phase(int q, double phi);           ///< diag(1, e^{i phi})
Gate gate_cnot(int control, int target);
Gate gate_toffoli(int c1, int c2, int target);

/// Gate list over register + ancilla qubits; ancillas sit behind the
/// register (indices n_register .. n_register + n_ancilla - 1).
struct Circuit {
  int n_register = 0;
  int n_ancilla = 0;
  std::vector<Gate> gates;

  int total_qubits() const { return n_register + n_ancilla; }

  Circuit& add(Gate g);
  /// Same gates conjugated element-wise (implements U*).
  Circuit conjugated() const;
  /// Reversed gate order with every matrix dagger'd (implements U^dag).
  Circuit inverted() const;
};

/// Applies every gate in order; throws on qubit-count mismatch.
StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

/// In-place single-gate kernel used by apply_circuit.
void apply_gate(StateVector& state, const Gate& gate);

/// Runs the circuit on |0...0> over total_qubits().
StateVector run_on_zero(const Circuit& circuit);

/// n-qubit gate whose first column is the given unit vector; the remaining
/// columns are completed by modified Gram-Schmidt against the canonical
/// basis (deterministic).
Gate state_prep_gate(const std::vector<cxd>& column, std::vector<int> targets,
                     std::string label = "prep");

}  // namespace qnpulab

#endif
