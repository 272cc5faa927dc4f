#ifndef QNPULAB_GRID_HPP
#define QNPULAB_GRID_HPP

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace qnpulab {

/// Periodic discretization of [a, b) into N = 2^n equidistant points.
struct GridSpec {
  int n = 0;           ///< qubit count
  double a = 0.0;      ///< left endpoint
  double b = 1.0;      ///< right endpoint
  std::size_t N = 0;   ///< 2^n points
  double h = 0.0;      ///< spacing (b - a) / N

  double length() const { return b - a; }
  double x(std::size_t k) const { return a + h * static_cast<double>(k); }
};

/// Throws std::invalid_argument for n < 1 or b <= a.
GridSpec build_grid(int n, double a, double b);

struct HarmonicPotential {
  double center = 0.5;
  double strength = 0.0;
};

/// s1 sin(k1 x) + s2 sin(k2 x); incommensurate for the default
/// k2 = 2 k1 / (1 + sqrt(5)).
struct BichromaticPotential {
  double s1 = 0.0;
  double s2 = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;

  BichromaticPotential() = default;
  BichromaticPotential(double s1_, double s2_, double kappa1_);
  BichromaticPotential(double s1_, double s2_, double kappa1_, double kappa2_)
      : s1(s1_), s2(s2_), kappa1(kappa1_), kappa2(kappa2_) {}
};

struct TabulatedPotential {
  std::vector<double> values;
};

using PotentialSpec =
    std::variant<HarmonicPotential, BichromaticPotential, TabulatedPotential>;

/// Grid samples of a potential split into scale and unit direction:
/// values = alpha * tilde_values with sum |tilde_k|^2 = 1.  An identically
/// zero potential has alpha = 0 and tilde_values all zero.
struct PotentialValues {
  std::vector<double> values;
  double alpha = 0.0;
  std::vector<double> tilde_values;
};

PotentialValues eval_potential(const PotentialSpec& spec, const GridSpec& grid);

/// Kinetic / potential / interaction energies of an amplitude-encoded state
/// together with the ancilla expectation values they map onto:
///   K = (1 - sigma_K)/h^2,  P = alpha * sigma_P,  I = (g / 2h) * sigma_I.
struct EnergyBreakdown {
  double K = 0.0;
  double P = 0.0;
  double I = 0.0;
  double sigma_K = 0.0;
  double sigma_P = 0.0;
  double sigma_I = 0.0;
  double alpha = 0.0;

  double total() const { return K + P + I; }
};

/// Requires psi normalized to 1 within 1e-10 (throws std::invalid_argument).
EnergyBreakdown discrete_energies(const std::vector<std::complex<double>>& psi,
                                  const GridSpec& grid,
                                  const PotentialSpec& pot, double g);

/// Eigenvalues 2 N^2 (cos(2 pi k / N) - 1) of the finite-difference Laplacian
/// on a unit-length periodic grid, ordered by Fourier index k.
std::vector<double> laplacian_spectrum(std::size_t N);

struct GroundStateResult {
  std::vector<std::complex<double>> psi;
  double energy = 0.0;
  EnergyBreakdown energies;
  long iterations = 0;
};

struct ImaginaryTimeOptions {
  double dt = 0.0;        ///< <= 0 picks a stable default from grid/pot/g
  double tol = 1e-12;     ///< relative energy change per step
  long max_iters = 500000000;
  std::vector<std::complex<double>> initial;  ///< empty = uniform
};

/// Normalized explicit imaginary-time iteration
///   psi <- normalize(psi - dt * H[psi] psi),
/// H[psi] = -(1/2) FDM Laplacian + V + g |f|^2, stopped when the energy
/// change per step drops below tol (relative).  Throws ConvergenceError
/// with the last iterate if max_iters is exhausted.
GroundStateResult imaginary_time_ground_state(const GridSpec& grid,
                                              const PotentialSpec& pot,
                                              double g,
                                              const ImaginaryTimeOptions& opt = {});

/// Solves on a ladder of grids n0..grid.n, upsampling each solution as the
/// next initial guess.  Same fixed point as the direct iteration, but the
/// slow long-wavelength modes are settled on the cheap coarse levels.
GroundStateResult ground_state_on_ladder(const GridSpec& grid,
                                         const PotentialSpec& pot, double g,
                                         int n0 = 6,
                                         const ImaginaryTimeOptions& opt = {});

}  // namespace qnpulab

#endif
