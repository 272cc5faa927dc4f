#ifndef QNPULAB_ERRORS_HPP
#define QNPULAB_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnpulab {

/// Iterative solver ran out of iterations; carries the last iterate so
/// callers can inspect or resume.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string msg, std::vector<std::complex<double>> last,
                   double energy)
      : std::runtime_error(std::move(msg)),
        last_iterate(std::move(last)),
        last_energy(energy) {}

  std::vector<std::complex<double>> last_iterate;
  double last_energy;
};

/// Requested an MPS/state for a function that is identically zero.
class DegenerateFunctionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scaling-window detection found no qubit count with the expected slopes.
class DetectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qnpulab

#endif
