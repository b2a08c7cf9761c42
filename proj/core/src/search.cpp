#include "ostar/search.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "ostar/density.hpp"
#include "ostar/error.hpp"
#include "ostar/monte_carlo.hpp"
#include "ostar/parallel.hpp"

namespace ostar {

namespace {

constexpr std::size_t kShardDigits = 4;
constexpr Count kSurrogateSubsetCap = 20000;

std::uint64_t pow3(std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 3;
    return r;
}

struct PairIndex {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    explicit PairIndex(std::size_t n) {
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        }
    }
};

// Small graph as bitmasks, for the exhaustive scan.
struct MaskGraph {
    std::array<std::uint8_t, kExhaustiveMaxOrder> out{};
    std::array<std::uint8_t, kExhaustiveMaxOrder> in{};

    void set(unsigned i, unsigned j, int digit) {
        const auto bi = static_cast<std::uint8_t>(1u << i);
        const auto bj = static_cast<std::uint8_t>(1u << j);
        out[i] &= static_cast<std::uint8_t>(~bj);
        in[j] &= static_cast<std::uint8_t>(~bi);
        out[j] &= static_cast<std::uint8_t>(~bi);
        in[i] &= static_cast<std::uint8_t>(~bj);
        if (digit == 1) {
            out[i] |= bj;
            in[j] |= bi;
        } else if (digit == 2) {
            out[j] |= bi;
            in[i] |= bj;
        }
    }
};

Count count_masks(const MaskGraph& g, std::size_t n, int out_leaves, int in_leaves) {
    std::array<bool, 1u << kExhaustiveMaxOrder> indep{};
    indep[0] = true;
    const unsigned full = 1u << n;
    for (unsigned mask = 1; mask < full; ++mask) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
        const unsigned rest = mask & (mask - 1);
        indep[mask] = indep[rest] && ((g.out[low] | g.in[low]) & rest) == 0;
    }
    Count total = 0;
    for (unsigned v = 0; v < n; ++v) {
        const unsigned outs = g.out[v];
        const unsigned ins = g.in[v];
        if (std::popcount(outs) < out_leaves || std::popcount(ins) < in_leaves) continue;
        for (unsigned a = outs;; a = (a - 1) & outs) {
            if (std::popcount(a) == out_leaves && indep[a]) {
                for (unsigned b = ins;; b = (b - 1) & ins) {
                    if (std::popcount(b) == in_leaves && indep[a | b]) ++total;
                    if (b == 0) break;
                }
            }
            if (a == 0) break;
        }
    }
    return total;
}

struct Best {
    Count count = 0;
    std::uint64_t index = 0;
    bool set = false;
};

int digit_of(std::uint64_t index, std::size_t pair, std::size_t pairs) {
    const std::uint64_t place = pow3(pairs - 1 - pair);
    return static_cast<int>((index / place) % 3);
}

// Score used by local search, compared lexicographically.
struct Score {
    Count count = 0;
    Count surrogate = 0;
    friend auto operator<=>(const Score&, const Score&) = default;
};

// For each (m+1)-set, the most pair constraints of the star any role
// assignment satisfies, summed over the sets.
Count surrogate_score(const OrientedGraph& g, const StarSpec& spec) {
    const std::size_t n = g.order();
    const auto size = static_cast<std::size_t>(spec.order());
    const int out_leaves = spec.out_leaves();
    std::vector<Vertex> subset(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = static_cast<Vertex>(i);
    Count total = 0;
    std::vector<int> role(size);  // 0 center, 1 out-leaf, 2 in-leaf
    while (true) {
        Count best = 0;
        for (std::size_t c = 0; c < size; ++c) {
            // Leaves other than the center, choose which are out-leaves.
            std::vector<std::size_t> leaves;
            for (std::size_t i = 0; i < size; ++i) {
                if (i != c) leaves.push_back(i);
            }
            const std::size_t m = leaves.size();
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                if (std::popcount(mask) != out_leaves) continue;
                role[c] = 0;
                for (std::size_t t = 0; t < m; ++t) role[leaves[t]] = (mask >> t) & 1u ? 1 : 2;
                Count ok = 0;
                for (std::size_t a = 0; a < size; ++a) {
                    for (std::size_t b = a + 1; b < size; ++b) {
                        const Vertex x = subset[a];
                        const Vertex y = subset[b];
                        if (role[a] != 0 && role[b] != 0) {
                            ok += g.adjacent(x, y) ? 0 : 1;
                        } else {
                            const Vertex center = role[a] == 0 ? x : y;
                            const Vertex leaf = role[a] == 0 ? y : x;
                            const int leaf_role = role[a] == 0 ? role[b] : role[a];
                            ok += (leaf_role == 1 ? g.has_arc(center, leaf) : g.has_arc(leaf, center)) ? 1 : 0;
                        }
                    }
                }
                best = std::max(best, ok);
            }
        }
        total += best;
        std::size_t i = size;
        while (i > 0 && subset[i - 1] == n - size + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
    return total;
}

class Climber {
public:
    Climber(const StarSpec& spec, std::size_t n, const LocalSearchOptions& options)
        : spec_(spec), n_(n), options_(options),
          use_surrogate_(binomial_u64(n, static_cast<std::uint64_t>(spec.order())) <= kSurrogateSubsetCap) {}

    Score score(const OrientedGraph& g) {
        ++evaluated_;
        Score s{count_fast(g, spec_), 0};
        if (s.count == 0 && use_surrogate_) s.surrogate = surrogate_score(g, spec_);
        return s;
    }

    RestartSummary run(std::uint64_t seed, OrientedGraph& best_graph) {
        RestartSummary summary;
        summary.seed = seed;
        OrientedGraph g = random_oriented_graph(n_, seed);
        Score current = score(g);
        while (summary.moves < options_.max_moves) {
            if (!try_clone(g, current, summary) && !try_pair(g, current, summary)) break;
            ++summary.moves;
        }
        summary.count = current.count;
        summary.i_density = i_density_of(current.count, spec_, n_);
        best_graph = std::move(g);
        return summary;
    }

    std::uint64_t evaluated() const { return evaluated_; }

private:
    void record(RestartSummary& summary, MoveKind kind, Vertex u, Vertex v, Count before, Count after,
                const OrientedGraph& g) {
        if (!options_.record_moves) return;
        summary.log.push_back(MoveRecord{kind, u, v, before, after, g});
    }

    bool try_clone(OrientedGraph& g, Score& current, RestartSummary& summary) {
        Vertex hi = 0;
        Vertex lo = 0;
        Count hi_count = 0;
        Count lo_count = 0;
        for (Vertex v = 0; v < n_; ++v) {
            const Count c = role_counts(g, spec_, v).total();
            if (v == 0 || c > hi_count) {
                hi = v;
                hi_count = c;
            }
            if (v == 0 || c < lo_count) {
                lo = v;
                lo_count = c;
            }
        }
        if (hi == lo || hi_count == lo_count) return false;
        OrientedGraph next = clone_replace(g, hi, lo);
        const Score s = score(next);
        if (!(s > current)) return false;
        record(summary, MoveKind::CloneReplace, hi, lo, current.count, s.count, g);
        g = std::move(next);
        current = s;
        return true;
    }

    bool try_pair(OrientedGraph& g, Score& current, RestartSummary& summary) {
        const std::vector<Arc> arcs = g.arcs();
        Score best = current;
        OrientedGraph best_graph;
        Vertex best_i = 0;
        Vertex best_j = 0;
        for (Vertex i = 0; i < n_; ++i) {
            for (Vertex j = i + 1; j < n_; ++j) {
                const int state = g.has_arc(i, j) ? 1 : g.has_arc(j, i) ? 2 : 0;
                for (int alt = 0; alt < 3; ++alt) {
                    if (alt == state) continue;
                    std::vector<Arc> next_arcs;
                    next_arcs.reserve(arcs.size() + 1);
                    for (const Arc& a : arcs) {
                        if ((a.from == i && a.to == j) || (a.from == j && a.to == i)) continue;
                        next_arcs.push_back(a);
                    }
                    if (alt == 1) next_arcs.push_back({i, j});
                    if (alt == 2) next_arcs.push_back({j, i});
                    OrientedGraph next = OrientedGraph::from_arcs(n_, next_arcs);
                    const Score s = score(next);
                    if (s > best) {
                        best = s;
                        best_graph = std::move(next);
                        best_i = i;
                        best_j = j;
                    }
                }
            }
        }
        if (!(best > current)) return false;
        record(summary, MoveKind::PairReassign, best_i, best_j, current.count, best.count, g);
        g = std::move(best_graph);
        current = best;
        return true;
    }

    StarSpec spec_;
    std::size_t n_;
    LocalSearchOptions options_;
    bool use_surrogate_;
    std::uint64_t evaluated_ = 0;
};

}  // namespace

OrientedGraph graph_from_index(std::size_t n, std::uint64_t index) {
    if (n == 0 || n > kExhaustiveMaxOrder) {
        throw Error(ErrorKind::TooLarge, "graph indices are defined for 1 <= n <= " +
                                             std::to_string(kExhaustiveMaxOrder));
    }
    const PairIndex pi(n);
    if (index >= pow3(pi.pairs.size())) throw Error(ErrorKind::RangeError, "graph index out of range");
    std::vector<Arc> arcs;
    for (std::size_t p = 0; p < pi.pairs.size(); ++p) {
        const auto [i, j] = pi.pairs[p];
        const int digit = digit_of(index, p, pi.pairs.size());
        if (digit == 1) arcs.push_back({i, j});
        if (digit == 2) arcs.push_back({j, i});
    }
    return OrientedGraph::from_arcs(n, arcs);
}

SearchResult exhaustive_max(std::size_t n, const StarSpec& spec, unsigned workers) {
    if (n > kExhaustiveMaxOrder) {
        throw Error(ErrorKind::TooLarge, "exhaustive search is capped at n = " + std::to_string(kExhaustiveMaxOrder) +
                                             " (3^C(n,2) graphs)");
    }
    if (n == 0) throw Error(ErrorKind::DomainError, "graph order must be at least 1");
    const PairIndex pi(n);
    const std::size_t pairs = pi.pairs.size();
    const std::size_t shard_digits = std::min(pairs, kShardDigits);
    const std::uint64_t shards = pow3(shard_digits);
    const std::uint64_t per_shard = pow3(pairs - shard_digits);
    const int out_leaves = spec.out_leaves();
    const int in_leaves = spec.in_leaves();

    std::vector<Best> results(shards);
    parallel_for(shards, workers, [&](std::size_t shard) {
        const std::uint64_t begin = shard * per_shard;
        MaskGraph g;
        std::vector<int> digits(pairs);
        for (std::size_t p = 0; p < pairs; ++p) {
            digits[p] = digit_of(begin, p, pairs);
            g.set(pi.pairs[p].first, pi.pairs[p].second, digits[p]);
        }
        Best best;
        for (std::uint64_t offset = 0; offset < per_shard; ++offset) {
            const Count c = count_masks(g, n, out_leaves, in_leaves);
            if (!best.set || c > best.count) best = {c, begin + offset, true};
            // Odometer step on the low digits; the shard prefix never changes.
            for (std::size_t p = pairs; p-- > shard_digits;) {
                digits[p] = (digits[p] + 1) % 3;
                g.set(pi.pairs[p].first, pi.pairs[p].second, digits[p]);
                if (digits[p] != 0) break;
            }
        }
        results[shard] = best;
    });

    Best best;
    for (const Best& b : results) {
        if (!best.set || b.count > best.count) best = b;
    }
    SearchResult r;
    r.method = SearchMethod::Exhaustive;
    r.best_count = best.count;
    r.best_i = i_density_of(best.count, spec, n);
    r.witness = graph_from_index(n, best.index);
    r.explored = pow3(pairs);
    return r;
}

SearchResult local_search(const StarSpec& spec, std::size_t n, const LocalSearchOptions& options) {
    if (n < static_cast<std::size_t>(spec.order())) {
        throw Error(ErrorKind::DomainError, "local search needs n >= m+1 = " + std::to_string(spec.order()));
    }
    if (options.restarts == 0) throw Error(ErrorKind::DomainError, "at least one restart is required");
    std::vector<RestartSummary> summaries(options.restarts);
    std::vector<OrientedGraph> graphs(options.restarts);
    std::vector<std::uint64_t> evaluated(options.restarts, 0);
    parallel_for(options.restarts, options.workers, [&](std::size_t r) {
        Climber climber(spec, n, options);
        summaries[r] = climber.run(options.seed + r, graphs[r]);
        evaluated[r] = climber.evaluated();
    });

    SearchResult result;
    result.method = SearchMethod::Local;
    std::size_t best = 0;
    for (std::size_t r = 0; r < options.restarts; ++r) {
        if (summaries[r].count > summaries[best].count) best = r;
        result.explored += evaluated[r];
    }
    result.best_count = summaries[best].count;
    result.best_i = summaries[best].i_density;
    result.witness = graphs[best];
    result.restarts = std::move(summaries);
    return result;
}

OrientedGraph random_oriented_graph(std::size_t n, std::uint64_t seed, double arc_probability) {
    if (!(arc_probability >= 0.0 && arc_probability <= 1.0)) {
        throw Error(ErrorKind::DomainError, "arc probability outside [0,1]");
    }
    auto rng = stream_generator(seed, 0);
    GraphBuilder builder(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const double x = uniform_unit(rng);
            if (x < arc_probability / 2.0) {
                builder.add_arc(i, j);
            } else if (x < arc_probability) {
                builder.add_arc(j, i);
            }
        }
    }
    return builder.freeze();
}

}  // namespace ostar
