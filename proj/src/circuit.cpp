#include "qnpulab/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qnpulab {

Gate make_gate(Eigen::MatrixXcd matrix, std::vector<int> targets,
               std::vector<int> controls, std::string label) {
  if (targets.empty()) throw std::invalid_argument("gate needs at least one target");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << targets.size());
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw std::invalid_argument("gate matrix dimension != 2^targets");
  std::set<int> seen(targets.begin(), targets.end());
  if (seen.size() != targets.size())
    throw std::invalid_argument("gate targets must be distinct");
  for (int c : controls)
    if (seen.count(c)) throw std::invalid_argument("gate controls overlap targets");
  Eigen::MatrixXcd residual =
      matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(dim, dim);
  if (residual.cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("gate matrix is not unitary within 1e-10");
  return Gate{std::move(matrix), std::move(targets), std::move(controls),
              std::move(label)};
}

namespace {
Eigen::MatrixXcd mat2(cxd a, cxd b, cxd c, cxd d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace

Gate gate_x(int q) { return make_gate(mat2(0, 1, 1, 0), {q}, {}, "X"); }

Gate gate_hadamard(int q) {
  double s = 1.0 / std::sqrt(2.0);
  return make_gate(mat2(s, s, s, -s), {q}, {}, "H");
}

Gate gate_ry(int q, double theta) {
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return make_gate(mat2(c, -s, s, c), {q}, {}, "Ry");
}

Gate gate_phase(int q, double phi) {
  return make_gate(mat2(1.0, 0.0, 0.0, cxd(std::cos(phi), std::sin(phi))), {q},
                   {}, "Phase");
}

Gate gate_cnot(int control, int target) {
  return make_gate(mat2(0, 1, 1, 0), {target}, {control}, "CNOT");
}

Gate gate_toffoli(int c1, int c2, int target) {
  return make_gate(mat2(0, 1, 1, 0), {target}, {c1, c2}, "Toffoli");
}

Circuit& Circuit::add(Gate g) {
  for (int q : g.targets)
    if (q < 0 || q >= total_qubits())
      throw std::invalid_argument("gate target outside circuit");
  for (int q : g.controls)
    if (q < 0 || q >= total_qubits())
      throw std::invalid_argument("gate control outside circuit");
  gates.push_back(std::move(g));
  return *this;
}

Circuit Circuit::conjugated() const {
  Circuit c = *this;
  for (auto& g : c.gates) g.matrix = g.matrix.conjugate();
  return c;
}

Circuit Circuit::inverted() const {
  Circuit c;
  c.n_register = n_register;
  c.n_ancilla = n_ancilla;
  c.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    g.matrix = it->matrix.adjoint();
    c.gates.push_back(std::move(g));
  }
  return c;
}

void apply_gate(StateVector& state, const Gate& gate) {
  const int n = state.num_qubits();
  const std::size_t m = gate.targets.size();
  const std::size_t dim = std::size_t{1} << m;

  std::size_t target_mask = 0, control_mask = 0;
  std::vector<std::size_t> spread(dim, 0);
  for (std::size_t i = 0; i < m; ++i) {
    int q = gate.targets[i];
    if (q < 0 || q >= n) throw std::invalid_argument("gate target out of range");
    target_mask |= std::size_t{1} << (n - 1 - q);
  }
  for (int q : gate.controls) {
    if (q < 0 || q >= n) throw std::invalid_argument("gate control out of range");
    control_mask |= std::size_t{1} << (n - 1 - q);
  }
  for (std::size_t l = 0; l < dim; ++l) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((l >> (m - 1 - i)) & 1) idx |= std::size_t{1} << (n - 1 - gate.targets[i]);
    spread[l] = idx;
  }

  auto& amp = state.amplitudes();
  std::vector<cxd> in(dim);
  for (std::size_t base = 0; base < amp.size(); ++base) {
    if (base & target_mask) continue;
    if ((base & control_mask) != control_mask) continue;
    for (std::size_t l = 0; l < dim; ++l) in[l] = amp[base | spread[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      cxd acc{0.0, 0.0};
      for (std::size_t cidx = 0; cidx < dim; ++cidx)
        acc += gate.matrix(static_cast<Eigen::Index>(r),
                           static_cast<Eigen::Index>(cidx)) *
               in[cidx];
      amp[base | spread[r]] = acc;
    }
  }
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
  if (state.num_qubits() != circuit.total_qubits())
    throw std::invalid_argument("apply_circuit: qubit count mismatch");
  StateVector out = state;
  for (const auto& g : circuit.gates) apply_gate(out, g);
  return out;
}

StateVector run_on_zero(const Circuit& circuit) {
  return apply_circuit(StateVector::basis(circuit.total_qubits(), 0), circuit);
}

Gate state_prep_gate(const std::vector<cxd>& column, std::vector<int> targets,
                     std::string label) {
  const auto dim = static_cast<Eigen::Index>(column.size());
  if (column.size() != (std::size_t{1} << targets.size()))
    throw std::invalid_argument("state_prep_gate: length != 2^targets");
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = column[static_cast<std::size_t>(i)];
  double nrm = v.norm();
  if (std::abs(nrm - 1.0) > 1e-10)
    throw std::invalid_argument("state_prep_gate: column must be normalized");

  Eigen::MatrixXcd u(dim, dim);
  u.col(0) = v;
  Eigen::Index filled = 1;
  for (double threshold : {0.5, 1e-8}) {
    for (Eigen::Index e = 0; e < dim && filled < dim; ++e) {
      Eigen::VectorXcd cand = Eigen::VectorXcd::Zero(dim);
      cand(e) = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index j = 0; j < filled; ++j)
          cand -= u.col(j).dot(cand) * u.col(j);
      double r = cand.norm();
      if (r > threshold) u.col(filled++) = cand / r;
    }
    if (filled == dim) break;
  }
  if (filled != dim)
    throw std::runtime_error("state_prep_gate: completion failed");
  return make_gate(std::move(u), std::move(targets), {}, std::move(label));
}

}  // namespace qnpulab
