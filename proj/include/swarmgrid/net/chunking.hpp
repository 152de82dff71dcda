#ifndef SWARMGRID_NET_CHUNKING_HPP
#define SWARMGRID_NET_CHUNKING_HPP

#include <cstddef>
#include <vector>

#include "swarmgrid/errors.hpp"

namespace swarmgrid::net {

/// Near-equal split of n_tasks over n_workers: exactly min(n_tasks,
/// n_workers) nonzero chunks whose sizes sum to n_tasks and differ by at
/// most 1, larger chunks first.
inline std::vector<std::size_t> chunk_tasks(std::size_t n_tasks, std::size_t n_workers) {
    if (n_tasks == 0 || n_workers == 0)
        throw Error("chunk_tasks: tasks and workers must be positive");
    const std::size_t k = std::min(n_tasks, n_workers);
    const std::size_t base = n_tasks / k;
    const std::size_t extra = n_tasks % k;
    std::vector<std::size_t> sizes(k, base);
    for (std::size_t i = 0; i < extra; ++i) sizes[i] += 1;
    return sizes;
}

} // namespace swarmgrid::net

#endif
