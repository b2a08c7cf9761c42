#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ostar/digraph.hpp"
#include "ostar/rational.hpp"
#include "ostar/star_spec.hpp"

namespace ostar {

enum class SearchMethod { Exhaustive, Local };

enum class MoveKind { CloneReplace, PairReassign };

struct MoveRecord {
    MoveKind kind = MoveKind::PairReassign;
    Vertex u = 0;  // clone source, or the smaller end of the reassigned pair
    Vertex v = 0;  // replaced vertex, or the larger end of the pair
    Count count_before = 0;
    Count count_after = 0;
    OrientedGraph before;  // filled only when moves are recorded
};

struct RestartSummary {
    std::uint64_t seed = 0;
    Count count = 0;
    Rational i_density;
    std::size_t moves = 0;
    std::vector<MoveRecord> log;
};

struct SearchResult {
    Count best_count = 0;
    Rational best_i;
    OrientedGraph witness;
    std::uint64_t explored = 0;  // graphs for exhaustive, evaluated candidates for local
    SearchMethod method = SearchMethod::Exhaustive;
    std::vector<RestartSummary> restarts;
};

inline constexpr std::size_t kExhaustiveMaxOrder = 6;

// Maximum induced-copy count over all 3^C(n,2) labelled oriented graphs.
// Graph index: base-3 digits over pairs (i < j) in lexicographic order, the
// first pair most significant; digit 0 = no arc, 1 = i -> j, 2 = j -> i. The
// witness is the smallest index attaining the maximum. TooLarge for
// n > kExhaustiveMaxOrder.
SearchResult exhaustive_max(std::size_t n, const StarSpec& spec, unsigned workers = 1);

// Decodes a graph index as above.
OrientedGraph graph_from_index(std::size_t n, std::uint64_t index);

struct LocalSearchOptions {
    std::uint64_t seed = 0;
    std::size_t max_moves = 1000;
    std::size_t restarts = 1;
    unsigned workers = 1;
    bool record_moves = false;
};

// Hill climbing from seeded random graphs. Each step first tries
// clone_replace(u, v) with u maximizing and v minimizing s(.), then the
// best single-pair reassignment; a move is accepted only if it strictly
// improves (count, surrogate). The surrogate breaks the plateau at count 0
// on small instances: the sum over (m+1)-sets of the most pair constraints
// any role assignment satisfies. Restart r uses seed + r. DomainError when
// n < m+1.
SearchResult local_search(const StarSpec& spec, std::size_t n, const LocalSearchOptions& options = {});

// Random oriented graph: each pair is adjacent with probability
// `arc_probability`, in a uniformly random direction. The default makes
// absent, forward and backward equally likely.
OrientedGraph random_oriented_graph(std::size_t n, std::uint64_t seed, double arc_probability = 2.0 / 3.0);

}  // namespace ostar
