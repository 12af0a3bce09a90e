#pragma once

#include <set>
#include <utility>

#include "latcert/tree.hpp"

namespace latcert {

/// Vertex of DL(n_1,...,n_d): one tree vertex per coordinate, levels
/// summing to zero.
struct DLVertex {
    std::vector<TreeVertex> coords;

    bool operator==(const DLVertex& o) const { return coords == o.coords; }
    bool operator<(const DLVertex& o) const { return coords < o.coords; }

    /// "level:j=d.j=d|level:..." one block per coordinate.
    std::string key() const;
};

/// Base vertex: every coordinate at the root of its tree.
DLVertex dl_base(const std::vector<long>& branchings);

/// Validates the level-sum-zero invariant.
void dl_check(const DLVertex& v);

/// One coordinate moves to a child, a different one to its parent:
/// (d-1) * sum(n_i) neighbors.
std::vector<DLVertex> dl_neighbors(const DLVertex& v);

struct DLBall {
    std::set<DLVertex> vertices;
    std::vector<long> sphere_sizes; // index = radius
};

/// BFS ball; errors with MemoryBudgetExceeded past `cap` vertices.
DLBall dl_ball(const DLVertex& origin, long radius, size_t cap = 5000000);

/// Edges of the subgraph induced on `vertices`, each listed once with
/// key(src) < key(dst).
std::vector<std::pair<DLVertex, DLVertex>> dl_edges(const std::set<DLVertex>& vertices);

} // namespace latcert
