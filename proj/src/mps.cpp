#include "qnpulab/mps.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qnpulab/errors.hpp"
#include "qnpulab/rng.hpp"

namespace qnpulab {

Eigen::Index Mps::max_bond() const {
  Eigen::Index b = 1;
  for (const auto& t : tensors) b = std::max(b, t.right());
  return b;
}

void Mps::check_consistent() const {
  if (tensors.empty()) throw std::invalid_argument("empty MPS");
  if (tensors.front().left() != 1 || tensors.back().right() != 1)
    throw std::invalid_argument("MPS boundary bonds must have dimension 1");
  for (std::size_t j = 0; j + 1 < tensors.size(); ++j) {
    if (tensors[j].right() != tensors[j + 1].left())
      throw std::invalid_argument("MPS bond dimensions do not match");
    if (tensors[j].m[0].rows() != tensors[j].m[1].rows() ||
        tensors[j].m[0].cols() != tensors[j].m[1].cols())
      throw std::invalid_argument("MPS physical blocks differ in shape");
  }
}

std::pair<StateVector, double> mps_to_dense(const Mps& m) {
  m.check_consistent();
  const int n = m.num_sites();
  if (n > 24) throw std::invalid_argument("mps_to_dense: chain too long for dense form");
  // Row k of `acc` is the bond vector of the length-j prefix binary(k).
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
  for (int j = 0; j < n; ++j) {
    const auto& t = m.tensors[static_cast<std::size_t>(j)];
    Eigen::MatrixXcd next(acc.rows() * 2, t.right());
    for (Eigen::Index r = 0; r < acc.rows(); ++r) {
      next.row(2 * r) = acc.row(r) * t.m[0];
      next.row(2 * r + 1) = acc.row(r) * t.m[1];
    }
    acc = std::move(next);
  }
  std::vector<cxd> amp(static_cast<std::size_t>(acc.rows()));
  double norm2 = 0.0;
  for (Eigen::Index k = 0; k < acc.rows(); ++k) {
    amp[static_cast<std::size_t>(k)] = acc(k, 0);
    norm2 += std::norm(acc(k, 0));
  }
  double norm = std::sqrt(norm2);
  if (norm == 0.0) throw DegenerateFunctionError("mps_to_dense: zero-norm chain");
  for (auto& z : amp) z /= norm;
  return {StateVector(n, std::move(amp)), norm};
}

Mps mps_plane_wave(double kappa, int n) {
  if (n < 1) throw std::invalid_argument("mps_plane_wave: n must be >= 1");
  Mps m;
  m.tensors.resize(static_cast<std::size_t>(n));
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 1; j <= n; ++j) {
    auto& t = m.tensors[static_cast<std::size_t>(j - 1)];
    double phi = kappa * std::pow(2.0, -j);
    t.m[0] = Eigen::MatrixXcd::Constant(1, 1, s);
    t.m[1] = Eigen::MatrixXcd::Constant(1, 1, s * cxd(std::cos(phi), std::sin(phi)));
  }
  return m;
}

namespace {

/// Direct sum of plane-wave chains with per-wave weights folded into the
/// first site; normalized via the dense-free transfer contraction.
Mps superpose_plane_waves(const std::vector<cxd>& weights,
                          const std::vector<double>& kappas, int n,
                          const char* what) {
  const auto W = static_cast<Eigen::Index>(weights.size());
  std::vector<Mps> waves;
  for (double k : kappas) waves.push_back(mps_plane_wave(k, n));

  Mps m;
  m.tensors.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& t = m.tensors[static_cast<std::size_t>(j)];
    Eigen::Index rows = (j == 0) ? 1 : W;
    Eigen::Index cols = (j == n - 1) ? 1 : W;
    for (int q = 0; q < 2; ++q) {
      t.m[q] = Eigen::MatrixXcd::Zero(rows, cols);
      for (Eigen::Index w = 0; w < W; ++w) {
        cxd entry = waves[static_cast<std::size_t>(w)]
                        .tensors[static_cast<std::size_t>(j)]
                        .m[q](0, 0);
        if (j == 0) entry *= weights[static_cast<std::size_t>(w)];
        t.m[q](rows == 1 ? 0 : w, cols == 1 ? 0 : w) = entry;
      }
    }
  }
  if (n == 1) {
    // single site: sum the waves directly
    auto& t = m.tensors[0];
    for (int q = 0; q < 2; ++q) {
      cxd acc{0.0, 0.0};
      for (Eigen::Index w = 0; w < W; ++w)
        acc += weights[static_cast<std::size_t>(w)] *
               waves[static_cast<std::size_t>(w)].tensors[0].m[q](0, 0);
      t.m[q] = Eigen::MatrixXcd::Constant(1, 1, acc);
    }
  }

  // Norm via the transfer contraction; degenerate functions are rejected.
  Eigen::MatrixXcd env = Eigen::MatrixXcd::Ones(1, 1);
  for (const auto& t : m.tensors) {
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(t.right(), t.right());
    for (int q = 0; q < 2; ++q) next += t.m[q].adjoint() * env * t.m[q];
    env = std::move(next);
  }
  double norm = std::sqrt(std::abs(env(0, 0)));
  double scale = 0.0;
  for (const auto& w : weights) scale += std::abs(w);
  if (norm <= 1e-12 * std::max(1.0, scale))
    throw DegenerateFunctionError(std::string(what) + ": function vanishes on this grid");
  for (int q = 0; q < 2; ++q) m.tensors[0].m[q] /= norm;
  return m;
}

}  // namespace

Mps mps_sine(double kappa, int n) {
  const cxd half_over_i{0.0, -0.5};  // 1/(2i)
  return superpose_plane_waves({half_over_i, -half_over_i}, {kappa, -kappa}, n,
                               "mps_sine");
}

Mps mps_two_sines(double s1, double s2, double kappa1, double kappa2, int n) {
  const cxd half_over_i{0.0, -0.5};
  return superpose_plane_waves(
      {s1 * half_over_i, -s1 * half_over_i, s2 * half_over_i, -s2 * half_over_i},
      {kappa1, -kappa1, kappa2, -kappa2}, n, "mps_two_sines");
}

Mps random_mps(int n, Eigen::Index chi, std::uint64_t seed, bool real_entries) {
  if (n < 1 || chi < 1) throw std::invalid_argument("random_mps: bad shape");
  CounterRng rng(seed);
  auto gauss = [&rng]() {
    double u1 = rng.uniform(), u2 = rng.uniform();
    u1 = std::max(u1, 1e-300);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  Mps m;
  m.tensors.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Eigen::Index rows = (j == 0) ? 1 : chi;
    Eigen::Index cols = (j == n - 1) ? 1 : chi;
    auto& t = m.tensors[static_cast<std::size_t>(j)];
    for (int q = 0; q < 2; ++q) {
      t.m[q].resize(rows, cols);
      for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
          t.m[q](r, c) = real_entries ? cxd(gauss(), 0.0) : cxd(gauss(), gauss());
    }
  }
  return m;
}

long mps_param_count(const Mps& m) {
  long total = 0;
  for (const auto& t : m.tensors) {
    long l = t.left(), r = t.right();
    total += l * r * 2 - r * (r + 1) / 2;
  }
  return total;
}

namespace {

Eigen::MatrixXcd complete_isometry(const Eigen::MatrixXcd& iso) {
  const Eigen::Index dim = iso.rows();
  Eigen::MatrixXcd u(dim, dim);
  u.leftCols(iso.cols()) = iso;
  Eigen::Index filled = iso.cols();
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
  if (filled != dim) throw std::runtime_error("isometry completion failed");
  return u;
}

int accounted_two_qubit_gates(int n, int s) {
  if (s == 0) return 0;                    // single-qubit staircase
  if (s == 1) return n - 1;                // bond 2
  if (s == 2) return 5 * (n - 2) + 1;      // bond 4
  // generic block decomposition bound per (s+1)-qubit unitary
  double chi = std::pow(2.0, s);
  int per_block = static_cast<int>(std::ceil(23.0 / 48.0 * (2 * chi) * (2 * chi) + 4.0 / 3.0));
  return (n - s) * per_block;
}

}  // namespace

CompiledMps mps_to_circuit(const Mps& m) {
  m.check_consistent();
  const int n = m.num_sites();
  if (n < 2) throw std::invalid_argument("mps_to_circuit: need at least 2 sites");
  Eigen::Index chi = m.max_bond();
  int s = 0;
  while ((Eigen::Index{1} << s) < chi) ++s;
  const Eigen::Index chit = Eigen::Index{1} << s;
  if (n < s + 1) throw std::invalid_argument("mps_to_circuit: bond too large for chain length");

  // Embed with all internal bonds padded to 2^s.
  std::vector<MpsTensor> t(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto& src = m.tensors[static_cast<std::size_t>(j)];
    Eigen::Index rows = (j == 0) ? 1 : chit;
    Eigen::Index cols = (j == n - 1) ? 1 : chit;
    for (int q = 0; q < 2; ++q) {
      t[static_cast<std::size_t>(j)].m[q] = Eigen::MatrixXcd::Zero(rows, cols);
      t[static_cast<std::size_t>(j)].m[q].topLeftCorner(src.left(), src.right()) = src.m[q];
    }
  }

  // Left-to-right QR sweep.  Row index of the reshaped site matrix is
  // (left bond, physical), bond major; the R diagonal is made non-negative
  // so the sweep is deterministic.
  double norm_factor = 1.0;
  std::vector<Eigen::MatrixXcd> blocks;  // per-site isometries, rows (bond, q)
  for (int j = 0; j < n; ++j) {
    Eigen::Index l = t[static_cast<std::size_t>(j)].left();
    Eigen::Index r = t[static_cast<std::size_t>(j)].right();
    Eigen::MatrixXcd mat(l * 2, r);
    for (Eigen::Index a = 0; a < l; ++a)
      for (int q = 0; q < 2; ++q)
        mat.row(a * 2 + q) = t[static_cast<std::size_t>(j)].m[q].row(a);
    Eigen::Index rank = std::min(mat.rows(), mat.cols());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(mat);
    Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(mat.rows(), rank);
    Eigen::MatrixXcd R = Q.adjoint() * mat;
    for (Eigen::Index d = 0; d < rank; ++d) {
      cxd rd = R(d, d);
      if (std::abs(rd) > 0.0) {
        cxd ph = rd / std::abs(rd);
        Q.col(d) *= ph;
        R.row(d) *= std::conj(ph);
      }
    }
    // store isometry and push R into the next site
    blocks.push_back(Q);
    if (j + 1 < n) {
      for (int q = 0; q < 2; ++q)
        t[static_cast<std::size_t>(j + 1)].m[q] = R * t[static_cast<std::size_t>(j + 1)].m[q];
    } else {
      norm_factor = std::abs(R(0, 0));
    }
  }

  // Merge the first s+1 isometries into the top block with rows (q_1..q_{s+1}).
  Eigen::MatrixXcd top = blocks[0];  // rows (bond=1, q1) = q1
  for (int j = 1; j <= s; ++j) {
    const Eigen::MatrixXcd& b = blocks[static_cast<std::size_t>(j)];
    Eigen::Index bl = b.rows() / 2;
    Eigen::MatrixXcd merged(top.rows() * 2, b.cols());
    for (Eigen::Index pref = 0; pref < top.rows(); ++pref)
      for (int q = 0; q < 2; ++q)
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
          cxd acc{0.0, 0.0};
          for (Eigen::Index a = 0; a < std::min(top.cols(), bl); ++a)
            acc += top(pref, a) * b(a * 2 + q, c);
          merged(pref * 2 + q, c) = acc;
        }
    top = std::move(merged);
  }

  CompiledMps out;
  out.block_qubits = s + 1;
  out.norm_factor = norm_factor;
  out.depth_two_qubit = accounted_two_qubit_gates(n, s);
  Circuit& c = out.circuit;
  c.n_register = n;

  // Application order: bottom block (site n) first, top block last.  Block
  // for site j acts on wires (j-1-s .. j-1); used input columns carry the
  // bond on the lower s wires with the top wire at |0>.
  for (int j = n; j >= s + 2; --j) {
    const Eigen::MatrixXcd& iso = blocks[static_cast<std::size_t>(j - 1)];
    Eigen::MatrixXcd gate = complete_isometry(iso);
    std::vector<int> wires;
    for (int w = j - 1 - s; w <= j - 1; ++w) wires.push_back(w);
    c.add(make_gate(gate, wires, {}, "M"));
  }
  {
    Eigen::MatrixXcd gate = complete_isometry(top);
    std::vector<int> wires;
    for (int w = 0; w <= s; ++w) wires.push_back(w);
    c.add(make_gate(gate, wires, {}, "M"));
  }
  return out;
}

Mps dense_to_mps(const StateVector& psi, Eigen::Index chi_max) {
  const int n = psi.num_qubits();
  Mps m;
  m.tensors.resize(static_cast<std::size_t>(n));
  Eigen::Index left = 1;
  Eigen::MatrixXcd rest(1, static_cast<Eigen::Index>(psi.size()));
  for (std::size_t k = 0; k < psi.size(); ++k)
    rest(0, static_cast<Eigen::Index>(k)) = psi[k];
  for (int j = 0; j < n; ++j) {
    Eigen::Index cols = rest.cols() / 2;
    Eigen::MatrixXcd mat(left * 2, cols);
    for (Eigen::Index a = 0; a < left; ++a)
      for (int q = 0; q < 2; ++q)
        mat.row(a * 2 + q) = rest.block(a, static_cast<Eigen::Index>(q) * cols, 1, cols);
    if (j == n - 1) {
      auto& t = m.tensors[static_cast<std::size_t>(j)];
      for (int q = 0; q < 2; ++q) {
        t.m[q].resize(left, 1);
        for (Eigen::Index a = 0; a < left; ++a) t.m[q](a, 0) = mat(a * 2 + q, 0);
      }
      break;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::Index keep = std::min(chi_max, svd.nonzeroSingularValues());
    keep = std::max<Eigen::Index>(keep, 1);
    Eigen::MatrixXcd U = svd.matrixU().leftCols(keep);
    auto& t = m.tensors[static_cast<std::size_t>(j)];
    for (int q = 0; q < 2; ++q) {
      t.m[q].resize(left, keep);
      for (Eigen::Index a = 0; a < left; ++a) t.m[q].row(a) = U.row(a * 2 + q);
    }
    rest = svd.singularValues().head(keep).asDiagonal() *
           svd.matrixV().leftCols(keep).adjoint();
    left = keep;
  }
  return m;
}

TrigOutcome generate_trig_state(double kappa, int n) {
  auto [pw_plus, norm_p] = mps_to_dense(mps_plane_wave(kappa, n));
  auto [pw_minus, norm_m] = mps_to_dense(mps_plane_wave(-kappa, n));
  (void)norm_p;
  (void)norm_m;
  const std::size_t N = pw_plus.size();
  StateVector cosv(n), sinv(n);
  double pc = 0.0, ps = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    cosv[k] = 0.5 * (pw_plus[k] + pw_minus[k]);
    sinv[k] = 0.5 * (pw_plus[k] - pw_minus[k]);
    pc += std::norm(cosv[k]);
    ps += std::norm(sinv[k]);
  }
  TrigOutcome out;
  out.cos_branch.probability = pc;
  out.sin_branch.probability = ps;
  if (pc > 1e-24) {
    double inv = 1.0 / std::sqrt(pc);
    for (std::size_t k = 0; k < N; ++k) cosv[k] *= inv;
    out.cos_branch.state = std::move(cosv);
  }
  if (ps > 1e-24) {
    double inv = 1.0 / std::sqrt(ps);
    for (std::size_t k = 0; k < N; ++k) sinv[k] *= inv;
    out.sin_branch.state = std::move(sinv);
  }
  return out;
}

double ipr(const StateVector& psi) {
  double s4 = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    double d2 = std::norm(psi[k]);
    s4 += d2 * d2;
  }
  return 1.0 / (static_cast<double>(psi.size()) * s4);
}

double s_max(const StateVector& psi) {
  const int n = psi.num_qubits();
  double best = 0.0;
  for (int cut = 1; cut < n; ++cut) {
    Eigen::Index rows = Eigen::Index{1} << cut;
    Eigen::Index cols = Eigen::Index{1} << (n - cut);
    Eigen::MatrixXcd mat(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c)
        mat(r, c) = psi[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                        static_cast<std::size_t>(c)];
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat);
    double S = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      double p = svd.singularValues()(i);
      p *= p;
      if (p > 1e-16) S -= p * std::log(p);
    }
    best = std::max(best, S);
  }
  return best;
}

}  // namespace qnpulab
