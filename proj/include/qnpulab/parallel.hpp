#ifndef QNPULAB_PARALLEL_HPP
#define QNPULAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qnpulab {

/// Worker-thread cap: min(hardware, QNPU_LAB_THREADS if set).
int max_threads();

/// Runs fn(i) for i in [0, count), possibly on several threads.  The split
/// is by contiguous blocks; fn must be independent across i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qnpulab

#endif
