#pragma once

#include <vector>

#include "ostar/digraph.hpp"
#include "ostar/star_spec.hpp"

namespace ostar::test {

// Every S_{a,b} with a, b >= 1 and m_lo <= a + b <= m_hi, both orientations.
inline std::vector<StarSpec> specs_with_m(int m_lo, int m_hi) {
    std::vector<StarSpec> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int a = 1; a < m; ++a) out.emplace_back(a, m - a);
    }
    return out;
}

inline OrientedGraph star21() { return OrientedGraph::from_arcs(4, {{0, 1}, {0, 2}, {3, 0}}); }
inline OrientedGraph cycle4() { return OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline OrientedGraph triangle() { return OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace ostar::test
