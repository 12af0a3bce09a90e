#include "latcert/tree.hpp"

#include <sstream>

namespace latcert {

std::string TreeVertex::str() const {
    std::ostringstream os;
    os << level << ":";
    bool first = true;
    for (const auto& [pos, dig] : digits) {
        if (!first) os << ".";
        first = false;
        os << pos << "=" << dig;
    }
    return os.str();
}

TreeVertex tree_root(long branching) {
    if (branching < 2) fail(errc::invalid_argument, "branching must be >= 2");
    TreeVertex v;
    v.branching = branching;
    return v;
}

TreeVertex tree_parent(const TreeVertex& v) {
    TreeVertex p = v;
    --p.level;
    p.digits.erase(p.level);
    return p;
}

std::vector<TreeVertex> tree_children(const TreeVertex& v) {
    std::vector<TreeVertex> out;
    out.reserve(static_cast<size_t>(v.branching));
    for (int d = 0; d < v.branching; ++d) {
        TreeVertex c = v;
        ++c.level;
        if (d != 0) c.digits[v.level] = d;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace latcert
