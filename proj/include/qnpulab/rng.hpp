#ifndef QNPULAB_RNG_HPP
#define QNPULAB_RNG_HPP

#include <cstdint>

namespace qnpulab {

/// Counter-based 64-bit generator (splitmix64).  Output m depends only on
/// (seed, m-th call), so streams are reproducible across platforms and can
/// be split by deriving child seeds.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : counter_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (counter_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Child seed for an independent stream (parallel repeats etc).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    CounterRng r(seed ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t counter_;
};

}  // namespace qnpulab

#endif
