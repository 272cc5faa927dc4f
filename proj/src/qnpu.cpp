#include "qnpulab/qnpu.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qnpulab/rng.hpp"

namespace qnpulab {

int AdderCircuit::count_with_controls(std::size_t k) const {
  int c = 0;
  for (const auto& g : circuit.gates)
    if (g.controls.size() == k) ++c;
  return c;
}

AdderCircuit build_adder(int n) {
  if (n < 1) throw std::invalid_argument("build_adder: n must be >= 1");
  AdderCircuit a;
  a.n = n;
  a.control = n;
  a.scratch_count = std::max(n - 2, 0);
  a.scratch_begin = n + 1;
  Circuit& c = a.circuit;
  c.n_register = n;
  c.n_ancilla = 1 + a.scratch_count;

  const int ctrl = a.control;
  // Register wire of the k-th least significant bit.
  auto bit = [n](int k) { return n - 1 - k; };

  if (n == 1) {
    c.add(gate_cnot(ctrl, bit(0)));
    return a;
  }
  if (n == 2) {
    c.add(gate_cnot(ctrl, bit(0)));
    c.add(gate_toffoli(ctrl, bit(0), bit(1)));
    return a;
  }

  // Decrement with the borrow condition rebuilt from post-flip bits: after
  // flipping the k low bits, the next borrow is the AND of the new values.
  // The AND chain lives on scratch wires and is uncomputed at the end.
  std::vector<Gate> chain;
  int anc = a.scratch_begin;
  c.add(gate_cnot(ctrl, bit(0)));
  c.add(gate_toffoli(ctrl, bit(0), bit(1)));
  chain.push_back(gate_toffoli(bit(0), bit(1), anc));
  c.add(chain.back());
  int pred = anc++;
  if (n == 3) {
    c.add(gate_toffoli(ctrl, pred, bit(2)));
  } else {
    chain.push_back(gate_toffoli(ctrl, pred, anc));
    c.add(chain.back());
    pred = anc++;
    for (int f = 2; f <= n - 2; ++f) {
      c.add(gate_cnot(pred, bit(f)));
      if (f < n - 2) {
        chain.push_back(gate_toffoli(pred, bit(f), anc));
        c.add(chain.back());
        pred = anc++;
      }
    }
    c.add(gate_toffoli(pred, bit(n - 2), bit(n - 1)));
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) c.add(*it);
  return a;
}

StateVector apply_adder(const AdderCircuit& adder, const StateVector& reg) {
  if (reg.num_qubits() != adder.n)
    throw std::invalid_argument("apply_adder: register size mismatch");
  const int total = adder.circuit.total_qubits();
  const int anc_bits = total - adder.n;
  StateVector full(total);
  // control high, scratch zero
  const std::size_t ctrl_pattern = std::size_t{1} << (anc_bits - 1);
  for (std::size_t k = 0; k < reg.size(); ++k)
    full[(k << anc_bits) | ctrl_pattern] = reg[k];
  StateVector out = apply_circuit(full, adder.circuit);
  StateVector res(adder.n);
  double leak = 0.0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::size_t low = k & ((std::size_t{1} << anc_bits) - 1);
    if (low == ctrl_pattern)
      res[k >> anc_bits] = out[k];
    else
      leak += std::norm(out[k]);
  }
  if (leak > 1e-18)
    throw std::runtime_error("apply_adder: ancillas not restored");
  return res;
}

void append_mapped(Circuit& dst, const Circuit& src,
                   const std::vector<int>& qubit_map,
                   const std::vector<int>& extra_controls) {
  for (const auto& g : src.gates) {
    Gate m = g;
    for (auto& t : m.targets) t = qubit_map.at(static_cast<std::size_t>(t));
    for (auto& cq : m.controls) cq = qubit_map.at(static_cast<std::size_t>(cq));
    m.controls.insert(m.controls.end(), extra_controls.begin(), extra_controls.end());
    dst.add(std::move(m));
  }
}

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

StateVector prep_register_state(const Circuit& prep) {
  if (prep.n_ancilla != 0)
    throw std::invalid_argument("preparation circuit must not use ancillas");
  return run_on_zero(prep);
}

}  // namespace

KineticQnpu kinetic_qnpu(const Circuit& prep, const GridSpec& grid) {
  const int n = prep.n_register;
  if (n != grid.n) throw std::invalid_argument("kinetic_qnpu: grid/prep mismatch");
  AdderCircuit adder = build_adder(n);

  // Wires: register, Hadamard ancilla (= shift control), scratch.
  Circuit c;
  c.n_register = n;
  c.n_ancilla = 1 + adder.scratch_count;
  const int anc = n;
  append_mapped(c, prep, identity_map(n));
  c.add(gate_hadamard(anc));
  for (const auto& g : adder.circuit.gates) c.add(g);  // layout matches
  c.add(gate_hadamard(anc));

  KineticQnpu out;
  out.sigma.sigma_z = ancilla_sigma_z(run_on_zero(c), anc);

  StateVector psi = prep_register_state(prep);
  double alg = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    std::size_t kp = (k + 1 == psi.size()) ? 0 : k + 1;
    alg += (std::conj(psi[k]) * psi[kp]).real();
  }
  out.sigma.algebraic = alg;
  out.K = (1.0 - out.sigma.sigma_z) / (grid.h * grid.h);
  return out;
}

PotentialQnpu potential_qnpu(const Circuit& prep, const Circuit& pot_circuit,
                             double alpha) {
  const int n = prep.n_register;
  if (pot_circuit.n_register != n)
    throw std::invalid_argument("potential_qnpu: register size mismatch");

  // Wires: register 1 (psi), register 2 (potential), ancilla.
  Circuit c;
  c.n_register = 2 * n;
  c.n_ancilla = 1;
  const int anc = 2 * n;
  std::vector<int> reg2(n);
  for (int i = 0; i < n; ++i) reg2[i] = n + i;

  append_mapped(c, prep, identity_map(n));
  c.add(gate_hadamard(anc));
  append_mapped(c, pot_circuit, reg2, {anc});
  for (int j = 0; j < n; ++j) c.add(gate_toffoli(anc, j, n + j));
  c.add(gate_hadamard(anc));

  PotentialQnpu out;
  out.sigma.sigma_z = ancilla_sigma_z(run_on_zero(c), anc);

  StateVector psi = prep_register_state(prep);
  StateVector vt = prep_register_state(pot_circuit);
  double alg = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k)
    alg += (std::conj(vt[k])).real() * std::norm(psi[k]);
  out.sigma.algebraic = alg;
  out.P = alpha * out.sigma.sigma_z;
  return out;
}

QnpuResult nonlinear_qnpu(const Circuit& prep) {
  const int n = prep.n_register;

  // Wires: register 1 (psi), registers 2 and 3 (paired copies), ancilla.
  Circuit c;
  c.n_register = 3 * n;
  c.n_ancilla = 1;
  const int anc = 3 * n;
  std::vector<int> reg2(n), reg3(n);
  for (int i = 0; i < n; ++i) {
    reg2[i] = n + i;
    reg3[i] = 2 * n + i;
  }

  append_mapped(c, prep, identity_map(n));
  c.add(gate_hadamard(anc));
  append_mapped(c, prep, reg2, {anc});
  append_mapped(c, prep.conjugated(), reg3, {anc});
  for (int j = 0; j < n; ++j) {
    c.add(gate_toffoli(anc, j, n + j));
    c.add(gate_toffoli(anc, j, 2 * n + j));
  }
  c.add(gate_hadamard(anc));

  QnpuResult out;
  out.sigma_z = ancilla_sigma_z(run_on_zero(c), anc);
  StateVector psi = prep_register_state(prep);
  double alg = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    double d2 = std::norm(psi[k]);
    alg += d2 * d2;
  }
  out.algebraic = alg;
  return out;
}

QnpuResult readout_amplitude(const Circuit& prep, std::size_t k, AmplitudePart part) {
  const int n = prep.n_register;
  if (k >= (std::size_t{1} << n))
    throw std::invalid_argument("readout_amplitude: grid index out of range");

  Circuit c;
  c.n_register = n;
  c.n_ancilla = 1;
  const int anc = n;
  c.add(gate_hadamard(anc));
  append_mapped(c, prep, identity_map(n), {anc});
  // Basis preparation on the ancilla-0 branch: Ry(pi binary(k)).
  c.add(gate_x(anc));
  for (int j = 0; j < n; ++j) {
    bool kj = (k >> (n - 1 - j)) & std::size_t{1};
    if (kj) {
      Gate g = gate_ry(j, std::numbers::pi);
      g.controls = {anc};
      c.add(std::move(g));
    }
  }
  c.add(gate_x(anc));
  if (part == AmplitudePart::imaginary)
    c.add(gate_phase(anc, -std::numbers::pi / 2.0));
  c.add(gate_hadamard(anc));

  QnpuResult out;
  out.sigma_z = ancilla_sigma_z(run_on_zero(c), anc);
  StateVector psi = prep_register_state(prep);
  out.algebraic = part == AmplitudePart::real ? psi[k].real() : psi[k].imag();
  return out;
}

std::vector<double> coarse_average_readout(const Circuit& prep, int coarse_bits) {
  const int n = prep.n_register;
  if (coarse_bits < 1 || coarse_bits > n)
    throw std::invalid_argument("coarse_average_readout: coarse_bits out of range");
  const int averaged = n - coarse_bits;
  const std::size_t blocks = std::size_t{1} << coarse_bits;
  std::vector<double> out(blocks, 0.0);
  for (std::size_t c = 0; c < blocks; ++c) {
    Circuit circ;
    circ.n_register = n;
    circ.n_ancilla = 1;
    const int anc = n;
    circ.add(gate_hadamard(anc));
    append_mapped(circ, prep, identity_map(n), {anc});
    circ.add(gate_x(anc));
    for (int j = 0; j < n; ++j) {
      double theta;
      if (j < coarse_bits)
        theta = ((c >> (coarse_bits - 1 - j)) & std::size_t{1}) ? std::numbers::pi : 0.0;
      else
        theta = std::numbers::pi / 2.0;
      if (theta != 0.0) {
        Gate g = gate_ry(j, theta);
        g.controls = {anc};
        circ.add(std::move(g));
      }
    }
    circ.add(gate_x(anc));
    circ.add(gate_hadamard(anc));
    out[c] = ancilla_sigma_z(run_on_zero(circ), anc);
  }
  (void)averaged;
  return out;
}

namespace {

std::size_t sample_index(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  std::size_t k = static_cast<std::size_t>(it - cdf.begin());
  return std::min(k, cdf.size() - 1);
}

std::vector<double> cumulative_probs(const StateVector& s) {
  std::vector<double> cdf(s.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    acc += std::norm(s[k]);
    cdf[k] = acc;
  }
  return cdf;
}

}  // namespace

double diagonal_sampling(const StateVector& state, const std::vector<double>& diag,
                         long shots, std::uint64_t seed) {
  if (diag.size() != state.size())
    throw std::invalid_argument("diagonal_sampling: diagonal length mismatch");
  if (shots < 1) throw std::invalid_argument("diagonal_sampling: shots must be >= 1");
  std::vector<double> cdf = cumulative_probs(state);
  CounterRng rng(seed);
  double acc = 0.0;
  for (long m = 0; m < shots; ++m)
    acc += diag[sample_index(cdf, rng.uniform() * cdf.back())];
  return acc / static_cast<double>(shots);
}

double laplace_sampling(const StateVector& state, long shots, std::uint64_t seed) {
  std::vector<double> spectrum = laplacian_spectrum(state.size());
  return diagonal_sampling(qft(state), spectrum, shots, seed);
}

QnpuResult overlap_qnpu(const Circuit& prep_u, const Circuit& prep_utilde,
                        OverlapKind kind) {
  const int n = prep_u.n_register;
  if (prep_utilde.n_register != n)
    throw std::invalid_argument("overlap_qnpu: register size mismatch");
  const bool with_diag =
      kind == OverlapKind::adder_diag || kind == OverlapKind::adder_dag_diag;
  const bool with_adder = kind != OverlapKind::plain;
  const bool adder_dagger =
      kind == OverlapKind::adder_dag || kind == OverlapKind::adder_dag_diag;

  AdderCircuit adder = build_adder(n);
  const int regs = with_diag ? 2 : 1;

  Circuit c;
  c.n_register = regs * n;
  c.n_ancilla = 1 + (with_adder ? adder.scratch_count : 0);
  const int anc = regs * n;
  std::vector<int> reg2(n);
  for (int i = 0; i < n; ++i) reg2[i] = n + i;
  std::vector<int> adder_map(static_cast<std::size_t>(adder.circuit.total_qubits()));
  for (int i = 0; i < n; ++i) adder_map[static_cast<std::size_t>(i)] = i;
  adder_map[static_cast<std::size_t>(adder.control)] = anc;
  for (int i = 0; i < adder.scratch_count; ++i)
    adder_map[static_cast<std::size_t>(adder.scratch_begin + i)] = anc + 1 + i;

  c.add(gate_hadamard(anc));
  append_mapped(c, prep_u, identity_map(n), {anc});
  if (with_diag) {
    // Pairing against a conjugated copy applies the diagonal adjoint.
    append_mapped(c, prep_utilde.conjugated(), reg2, {anc});
    for (int j = 0; j < n; ++j) c.add(gate_toffoli(anc, j, n + j));
  }
  if (with_adder) {
    const Circuit& ac = adder_dagger ? adder.circuit.inverted() : adder.circuit;
    append_mapped(c, ac, adder_map);  // gates already carry the control wire
  }
  append_mapped(c, prep_utilde.inverted(), identity_map(n), {anc});
  c.add(gate_hadamard(anc));

  QnpuResult out;
  out.sigma_z = ancilla_sigma_z(run_on_zero(c), anc);

  // Direct evaluation of Re<psi_tilde| W |psi>.
  StateVector psi = prep_register_state(prep_u);
  StateVector pst = prep_register_state(prep_utilde);
  const std::size_t N = psi.size();
  std::vector<cxd> w(psi.amplitudes());
  if (with_diag)
    for (std::size_t k = 0; k < N; ++k) w[k] *= std::conj(pst[k]);
  if (with_adder) {
    std::vector<cxd> shifted(N);
    for (std::size_t k = 0; k < N; ++k) {
      if (!adder_dagger)
        shifted[k] = w[(k + 1) % N];  // A: coefficient k+1 moves to slot k
      else
        shifted[k] = w[(k + N - 1) % N];
    }
    w = std::move(shifted);
  }
  cxd alg{0.0, 0.0};
  for (std::size_t k = 0; k < N; ++k) alg += std::conj(pst[k]) * w[k];
  out.algebraic = alg.real();
  return out;
}

}  // namespace qnpulab
