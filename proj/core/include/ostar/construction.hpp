#pragma once

#include <cstddef>
#include <cstdint>

#include "ostar/digraph.hpp"
#include "ostar/star_spec.hpp"

namespace ostar {

enum class BuildMode { Random, Balanced };

// Bipartite construction with parts X and Y = Y1 u Y2. Every X-Y pair is an
// arc; X -> Y2 arcs all point into Y2, and X-Y1 arcs point into Y1 with
// probability l/(m-1). For k = l there is a single class Y and the
// direction is a fair coin. `d` is ignored when k = l.
struct ConstructionParams {
    StarSpec spec;
    std::size_t n = 0;
    double alpha = 0.0;
    double d = 0.0;
    BuildMode mode = BuildMode::Balanced;
    std::uint64_t seed = 0;
};

// Vertices are laid out as X = [0, x), Y1 = [x, x + y1), Y2 = the rest
// (in the normalized orientation; the graph is reversed afterwards when the
// requested star has more in-leaves than out-leaves).
struct ClassSizes {
    std::size_t x = 0;
    std::size_t y1 = 0;
    std::size_t y2 = 0;
};

// |X| = round(alpha n), |Y1| = round((m-1)/(k-1) (1-d)(1-alpha) n), ties
// rounded up, Y2 takes the remainder. For k = l, y1 = n - x and y2 = 0.
// InfeasibleSizes when (m-1)/(k-1) (1-d) > 1; DomainError when alpha or d
// lies outside [0,1].
ClassSizes class_sizes(const ConstructionParams& p);

// InfeasibleSizes as above; DomainError when n < m+1.
OrientedGraph build_construction(const ConstructionParams& p);

// Limit of s(G) for the construction, summed over the class of the center.
double predict_s(const ConstructionParams& p);

// Construction at the solver's maximizer.
OrientedGraph optimal_construction(const StarSpec& spec, std::size_t n, BuildMode mode, std::uint64_t seed = 0);

}  // namespace ostar
