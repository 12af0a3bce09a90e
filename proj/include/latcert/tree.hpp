#pragma once

#include <map>
#include <string>
#include <vector>

#include "latcert/errors.hpp"

namespace latcert {

/// Vertex of the regular tree T_n with a distinguished end, in Busemann
/// coordinates: the level (increasing away from the end) plus finitely
/// many base-n digits at positions below the level. In the local-field
/// ball model a vertex is the ball (sum digits[j] pi^j) + pi^level R.
struct TreeVertex {
    long branching = 2;
    long level = 0;
    std::map<long, int> digits; // position -> 1..n-1, zeros omitted

    bool operator==(const TreeVertex& o) const {
        return branching == o.branching && level == o.level && digits == o.digits;
    }
    bool operator<(const TreeVertex& o) const {
        if (level != o.level) return level < o.level;
        return digits < o.digits;
    }

    std::string str() const;
};

TreeVertex tree_root(long branching);

/// Level decreases by one; the digit at position level-1 is forgotten.
TreeVertex tree_parent(const TreeVertex& v);

/// The n children append one digit at position `level`.
std::vector<TreeVertex> tree_children(const TreeVertex& v);

} // namespace latcert
