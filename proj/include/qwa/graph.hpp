#pragma once

#include <cstddef>
#include <vector>

namespace qwa {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Tarjan's algorithm, iterative. Components come out in reverse
/// topological order (sinks first); nodes inside a component are sorted.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Adjacency& adj);

/// Marks every node reachable from `sources` (sources included).
std::vector<bool> reachable_from(const Adjacency& adj, const std::vector<std::size_t>& sources);

} // namespace qwa
