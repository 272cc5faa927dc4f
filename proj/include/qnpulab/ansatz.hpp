#ifndef QNPULAB_ANSATZ_HPP
#define QNPULAB_ANSATZ_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

#include "qnpulab/circuit.hpp"

namespace qnpulab {

enum class AnsatzKind { brickwall, single_parameter };

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::brickwall;
  int n = 2;  ///< register qubits
  int d = 1;  ///< brick-wall columns
  bool real_valued = true;
};

using ParamVector = std::vector<double>;

/// Qubit pairs of one brick-wall column (1-based column index): odd columns
/// start at qubit 0, even at qubit 1.
std::vector<std::pair<int, int>> brickwall_pairs(int n, int column);

/// 3 angles per first-column gate, 6 per interior gate.
std::size_t param_count(const AnsatzSpec& spec);

/// Plane rotation chart for SO(4): product of the six Givens rotations in
/// canonical pair order; surjective, identity at zero angles.
Eigen::Matrix4d so4_from_angles(const double* angles6);

/// First-column gates only steer the image of |00>; three spherical angles
/// fix that column, identity at zero.
Eigen::Matrix4d first_column_gate(const double* angles3);

Circuit build_brickwall(const AnsatzSpec& spec, const ParamVector& params);

/// Two-qubit device ansatz with one Ry(lambda) parameter in front of a fixed
/// entangling rotation, calibrated so the lambda scan passes through the
/// harmonic-trap reference solutions at weak and strong nonlinearity.
Circuit build_single_param(double lambda);

Circuit build_ansatz(const AnsatzSpec& spec, const ParamVector& params);

StateVector prepare(const AnsatzSpec& spec, const ParamVector& params);

}  // namespace qnpulab

#endif
