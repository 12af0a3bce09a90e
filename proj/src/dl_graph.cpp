#include "latcert/dl_graph.hpp"

#include <sstream>

namespace latcert {

std::string DLVertex::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << "|";
        os << coords[i].str();
    }
    return os.str();
}

DLVertex dl_base(const std::vector<long>& branchings) {
    if (branchings.size() < 2) fail(errc::invalid_argument, "need at least two coordinates");
    DLVertex v;
    for (long n : branchings) v.coords.push_back(tree_root(n));
    return v;
}

void dl_check(const DLVertex& v) {
    long sum = 0;
    for (const auto& c : v.coords) {
        sum += c.level;
        for (const auto& [pos, dig] : c.digits)
            if (pos >= c.level || dig <= 0 || dig >= c.branching)
                fail(errc::invalid_argument, "malformed tree vertex digits");
    }
    if (sum != 0) fail(errc::invalid_argument, "coordinate levels must sum to zero");
}

std::vector<DLVertex> dl_neighbors(const DLVertex& v) {
    dl_check(v);
    std::vector<DLVertex> out;
    size_t d = v.coords.size();
    for (size_t i = 0; i < d; ++i) {
        auto children = tree_children(v.coords[i]);
        for (size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            TreeVertex par = tree_parent(v.coords[j]);
            for (const auto& ch : children) {
                DLVertex w = v;
                w.coords[i] = ch;
                w.coords[j] = par;
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

DLBall dl_ball(const DLVertex& origin, long radius, size_t cap) {
    dl_check(origin);
    DLBall ball;
    ball.vertices.insert(origin);
    ball.sphere_sizes.push_back(1);
    std::vector<DLVertex> frontier{origin};
    for (long r = 1; r <= radius; ++r) {
        std::vector<DLVertex> next;
        for (const auto& v : frontier)
            for (auto& w : dl_neighbors(v)) {
                if (ball.vertices.count(w)) continue;
                if (ball.vertices.size() >= cap)
                    fail(errc::memory_budget_exceeded, "BFS ball exceeds the vertex budget");
                ball.vertices.insert(w);
                next.push_back(std::move(w));
            }
        ball.sphere_sizes.push_back(static_cast<long>(next.size()));
        frontier = std::move(next);
    }
    return ball;
}

std::vector<std::pair<DLVertex, DLVertex>> dl_edges(const std::set<DLVertex>& vertices) {
    std::vector<std::pair<DLVertex, DLVertex>> out;
    for (const auto& v : vertices)
        for (const auto& w : dl_neighbors(v)) {
            if (!vertices.count(w)) continue;
            if (v.key() < w.key()) out.emplace_back(v, w);
        }
    return out;
}

} // namespace latcert
