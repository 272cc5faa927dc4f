#include "qnpulab/ansatz.hpp"

#include <cmath>
#include <stdexcept>

namespace qnpulab {

std::vector<std::pair<int, int>> brickwall_pairs(int n, int column) {
  std::vector<std::pair<int, int>> out;
  int start = (column % 2 == 1) ? 0 : 1;
  for (int q = start; q + 1 < n; q += 2) out.emplace_back(q, q + 1);
  return out;
}

std::size_t param_count(const AnsatzSpec& spec) {
  if (spec.kind == AnsatzKind::single_parameter) return 1;
  if (!spec.real_valued)
    throw std::invalid_argument("param_count: only real-valued gates are counted");
  if (spec.n < 2 || spec.d < 1)
    throw std::invalid_argument("param_count: brick-wall needs n >= 2, d >= 1");
  std::size_t count = 3 * brickwall_pairs(spec.n, 1).size();
  for (int c = 2; c <= spec.d; ++c)
    count += 6 * brickwall_pairs(spec.n, c).size();
  return count;
}

namespace {

Eigen::Matrix4d givens(int i, int j, double theta) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
  double c = std::cos(theta), s = std::sin(theta);
  g(i, i) = c;
  g(j, j) = c;
  g(i, j) = -s;
  g(j, i) = s;
  return g;
}

}  // namespace

Eigen::Matrix4d so4_from_angles(const double* a) {
  return givens(0, 1, a[0]) * givens(0, 2, a[1]) * givens(0, 3, a[2]) *
         givens(1, 2, a[3]) * givens(1, 3, a[4]) * givens(2, 3, a[5]);
}

Eigen::Matrix4d first_column_gate(const double* a) {
  return givens(2, 3, a[2]) * givens(1, 2, a[1]) * givens(0, 1, a[0]);
}

Circuit build_brickwall(const AnsatzSpec& spec, const ParamVector& params) {
  if (params.size() != param_count(spec))
    throw std::invalid_argument("build_brickwall: parameter count mismatch");
  Circuit c;
  c.n_register = spec.n;
  std::size_t off = 0;
  for (int col = 1; col <= spec.d; ++col) {
    for (auto [q, qq] : brickwall_pairs(spec.n, col)) {
      Eigen::Matrix4d m;
      if (col == 1) {
        m = first_column_gate(&params[off]);
        off += 3;
      } else {
        m = so4_from_angles(&params[off]);
        off += 6;
      }
      c.add(make_gate(m.cast<cxd>(), {q, qq}, {}, "G"));
    }
  }
  return c;
}

namespace {

// Endpoints of the scan family: the two columns of the entangler reached by
// Ry on the top qubit, chosen so the family interpolates between the sharp
// (weak-nonlinearity) and flat (strong-nonlinearity) harmonic-trap ground
// profiles with the strong-coupling optimum on the lambda = 2.0 scan point.
constexpr double kScanAnchor[4] = {-0.036019263427079187, 0.055054259457508734,
                                   0.99631353985246096, 0.055054259457508734};
constexpr double kScanSweep[4] = {0.60797643972323057, 0.56069855982719663,
                                  -0.039986232091562879, 0.56069855982719663};

}  // namespace

Circuit build_single_param(double lambda) {
  std::vector<cxd> u(4), v(4);
  for (int i = 0; i < 4; ++i) {
    u[static_cast<std::size_t>(i)] = kScanAnchor[i];
    v[static_cast<std::size_t>(i)] = kScanSweep[i];
  }
  // Entangler W with W e0 = u and W e2 = v; Ry(lambda) on the top qubit then
  // sweeps cos(l/2) u + sin(l/2) v.
  Eigen::Matrix4cd w;
  Eigen::Vector4cd cu, cv;
  for (int i = 0; i < 4; ++i) {
    cu(i) = u[static_cast<std::size_t>(i)];
    cv(i) = v[static_cast<std::size_t>(i)];
  }
  w.col(0) = cu;
  w.col(2) = cv;
  int filled = 0;
  for (int e = 0; e < 4 && filled < 2; ++e) {
    Eigen::Vector4cd cand = Eigen::Vector4cd::Zero();
    cand(e) = 1.0;
    cand -= cu.dot(cand) * cu;
    cand -= cv.dot(cand) * cv;
    for (int j = 1; j < filled * 2; j += 2) cand -= w.col(j).dot(cand) * w.col(j);
    double r = cand.norm();
    if (r > 0.5) {
      w.col(1 + 2 * filled) = cand / r;
      ++filled;
    }
  }
  if (filled != 2) throw std::runtime_error("single-param entangler completion failed");

  Circuit c;
  c.n_register = 2;
  c.add(gate_ry(0, lambda));
  c.add(make_gate(Eigen::MatrixXcd(w), {0, 1}, {}, "W"));
  return c;
}

Circuit build_ansatz(const AnsatzSpec& spec, const ParamVector& params) {
  if (spec.kind == AnsatzKind::single_parameter) {
    if (params.size() != 1)
      throw std::invalid_argument("single-parameter ansatz takes one parameter");
    return build_single_param(params[0]);
  }
  return build_brickwall(spec, params);
}

StateVector prepare(const AnsatzSpec& spec, const ParamVector& params) {
  return run_on_zero(build_ansatz(spec, params));
}

}  // namespace qnpulab
