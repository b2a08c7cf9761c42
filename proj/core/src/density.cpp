#include "ostar/density.hpp"

#include <algorithm>

#include "ostar/error.hpp"
#include "ostar/parallel.hpp"

namespace ostar {

namespace {

void check_vertex(const OrientedGraph& g, Vertex v) {
    if (v >= g.order()) {
        throw Error(ErrorKind::IdOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0," + std::to_string(g.order()) + ")");
    }
}

// Does the (m+1)-subset induce S_{K,L}? Returns the center or -1. A subset
// with exactly m arcs and a vertex of out/in degree K/L inside it is the
// star: that vertex touches all m arcs, so every other vertex has degree 1.
long induced_center(const OrientedGraph& g, std::span<const Vertex> subset, int out_leaves, int in_leaves) {
    const std::size_t size = subset.size();
    std::size_t arcs = 0;
    long center = -1;
    for (std::size_t a = 0; a < size; ++a) {
        int out = 0;
        int in = 0;
        for (std::size_t b = 0; b < size; ++b) {
            if (g.has_arc(subset[a], subset[b])) ++out;
            if (g.has_arc(subset[b], subset[a])) ++in;
        }
        arcs += static_cast<std::size_t>(out);
        if (out == out_leaves && in == in_leaves) center = static_cast<long>(subset[a]);
    }
    if (arcs + 1 != size) return -1;
    return center;
}

// Enumerates (size)-subsets of [0, n) whose smallest element is `first`.
template <typename Visit>
void subsets_starting_at(std::size_t n, std::size_t size, Vertex first, Visit&& visit) {
    std::vector<Vertex> subset(size);
    subset[0] = first;
    if (size == 1) {
        visit(std::span<const Vertex>(subset));
        return;
    }
    if (first + size > n) return;
    for (std::size_t i = 1; i < size; ++i) subset[i] = static_cast<Vertex>(first + i);
    for (;;) {
        visit(std::span<const Vertex>(subset));
        std::size_t i = size - 1;
        while (i >= 1 && subset[i] == n - size + i) --i;
        if (i == 0) return;
        ++subset[i];
        for (std::size_t j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
}

Count count_leaf_choices_rec(const OrientedGraph& g, VertexSet& out_pool, VertexSet& in_pool, int want_out,
                             int want_in) {
    if (want_out == 0 && want_in == 0) return 1;
    const std::size_t out_size = out_pool.count();
    const std::size_t in_size = in_pool.count();
    if (out_size < static_cast<std::size_t>(want_out) || in_size < static_cast<std::size_t>(want_in)) return 0;

    // Pools that can no longer contribute are dropped so their vertices
    // neither branch nor block.
    VertexSet pool(g.order());
    if (want_out > 0) pool |= out_pool;
    if (want_in > 0) pool |= in_pool;

    Vertex pivot = 0;
    std::size_t best_degree = 0;
    pool.for_each([&](Vertex w) {
        const std::size_t d = g.neighbors(w).intersection_count(pool);
        if (d > best_degree) {
            best_degree = d;
            pivot = w;
        }
    });
    if (best_degree == 0) {
        const Count a = want_out > 0 ? binomial_u64(out_size, static_cast<std::uint64_t>(want_out)) : 1;
        const Count b = want_in > 0 ? binomial_u64(in_size, static_cast<std::uint64_t>(want_in)) : 1;
        return checked_mul(a, b);
    }

    const bool pivot_out = out_pool.contains(pivot);

    VertexSet out_excl = out_pool;
    VertexSet in_excl = in_pool;
    out_excl.erase(pivot);
    in_excl.erase(pivot);
    Count total = count_leaf_choices_rec(g, out_excl, in_excl, want_out, want_in);

    VertexSet out_incl = out_pool - g.neighbors(pivot);
    VertexSet in_incl = in_pool - g.neighbors(pivot);
    out_incl.erase(pivot);
    in_incl.erase(pivot);
    if (pivot_out) {
        total = checked_add(total, count_leaf_choices_rec(g, out_incl, in_incl, want_out - 1, want_in));
    } else {
        total = checked_add(total, count_leaf_choices_rec(g, out_incl, in_incl, want_out, want_in - 1));
    }
    return total;
}

}  // namespace

void for_each_induced_star_oracle(const OrientedGraph& g, const StarSpec& spec,
                                  const std::function<void(std::span<const Vertex>, Vertex)>& visit) {
    const std::size_t n = g.order();
    const auto size = static_cast<std::size_t>(spec.order());
    if (n < size) return;
    for (Vertex first = 0; first + size <= n; ++first) {
        subsets_starting_at(n, size, first, [&](std::span<const Vertex> subset) {
            const long c = induced_center(g, subset, spec.out_leaves(), spec.in_leaves());
            if (c >= 0) visit(subset, static_cast<Vertex>(c));
        });
    }
}

Count count_oracle(const OrientedGraph& g, const StarSpec& spec, unsigned workers) {
    const std::size_t n = g.order();
    const auto size = static_cast<std::size_t>(spec.order());
    if (n < size) return 0;
    const std::size_t blocks = n - size + 1;
    std::vector<Count> per_block(blocks, 0);
    parallel_for(blocks, workers, [&](std::size_t b) {
        Count local = 0;
        subsets_starting_at(n, size, static_cast<Vertex>(b), [&](std::span<const Vertex> subset) {
            if (induced_center(g, subset, spec.out_leaves(), spec.in_leaves()) >= 0) local = checked_add(local, 1);
        });
        per_block[b] = local;
    });
    Count total = 0;
    for (Count c : per_block) total = checked_add(total, c);
    return total;
}

Count count_leaf_choices(const OrientedGraph& g, VertexSet out_pool, VertexSet in_pool, int want_out,
                         int want_in) {
    if (out_pool.intersects(in_pool)) {
        throw Error(ErrorKind::DomainError, "out- and in-leaf pools must be disjoint");
    }
    if (want_out < 0 || want_in < 0) return 0;
    return count_leaf_choices_rec(g, out_pool, in_pool, want_out, want_in);
}

Count count_centered_at(const OrientedGraph& g, const StarSpec& spec, Vertex v) {
    check_vertex(g, v);
    return count_leaf_choices(g, g.out_neighbors(v), g.in_neighbors(v), spec.out_leaves(), spec.in_leaves());
}

Count count_fast(const OrientedGraph& g, const StarSpec& spec, unsigned workers) {
    const std::size_t n = g.order();
    if (n < static_cast<std::size_t>(spec.order())) return 0;
    if (n <= static_cast<std::size_t>(spec.m() + 3)) return count_oracle(g, spec, 1);
    std::vector<Count> per_center(n, 0);
    parallel_for(n, workers, [&](std::size_t v) {
        per_center[v] = count_centered_at(g, spec, static_cast<Vertex>(v));
    });
    Count total = 0;
    for (Count c : per_center) total = checked_add(total, c);
    return total;
}

RoleCounts role_counts(const OrientedGraph& g, const StarSpec& spec, Vertex v) {
    check_vertex(g, v);
    RoleCounts rc;
    rc.center = count_centered_at(g, spec, v);
    VertexSet closed = g.neighbors(v);
    closed.insert(v);
    // v as an out-leaf: the center is an in-neighbour of v.
    if (spec.out_leaves() >= 1) {
        g.in_neighbors(v).for_each([&](Vertex c) {
            rc.out_leaf = checked_add(
                rc.out_leaf, count_leaf_choices(g, g.out_neighbors(c) - closed, g.in_neighbors(c) - closed,
                                                spec.out_leaves() - 1, spec.in_leaves()));
        });
    }
    if (spec.in_leaves() >= 1) {
        g.out_neighbors(v).for_each([&](Vertex c) {
            rc.in_leaf = checked_add(
                rc.in_leaf, count_leaf_choices(g, g.out_neighbors(c) - closed, g.in_neighbors(c) - closed,
                                               spec.out_leaves(), spec.in_leaves() - 1));
        });
    }
    return rc;
}

Rational i_density_of(Count count, const StarSpec& spec, std::size_t n) {
    const BigInt total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(spec.order()));
    if (total == 0) return Rational(0);
    return make_rational(BigInt(count), total);
}

Rational s_density_of(Count count, const StarSpec& spec, std::size_t n) {
    return make_rational(BigInt(count) * spec.automorphisms(), ipow(BigInt(n), static_cast<unsigned>(spec.order())));
}

DensityReport density_report(const OrientedGraph& g, const StarSpec& spec, unsigned workers) {
    const Count count = count_fast(g, spec, workers);
    return DensityReport{count, i_density_of(count, spec, g.order()), s_density_of(count, spec, g.order()),
                         g.order(), spec};
}

VertexDensity vertex_density_from_counts(const RoleCounts& counts, const StarSpec& spec, std::size_t n) {
    const auto k = static_cast<unsigned>(spec.out_leaves());
    const auto l = static_cast<unsigned>(spec.in_leaves());
    const auto m = static_cast<unsigned>(spec.m());
    const BigInt denom = ipow(BigInt(n), m);
    VertexDensity d;
    d.s_center = make_rational(BigInt(counts.center) * factorial(k) * factorial(l), denom);
    d.s_outleaf = make_rational(BigInt(counts.out_leaf) * factorial(k - 1) * factorial(l), denom);
    d.s_inleaf = make_rational(BigInt(counts.in_leaf) * factorial(k) * factorial(l - 1), denom);
    d.s_v = (d.s_center + Rational(l) * d.s_inleaf + Rational(k) * d.s_outleaf) / Rational(m + 1);
    return d;
}

VertexDensity vertex_density(const OrientedGraph& g, Vertex v, const StarSpec& spec) {
    return vertex_density_from_counts(role_counts(g, spec, v), spec, g.order());
}

std::vector<VertexDensity> vertex_densities(const OrientedGraph& g, const StarSpec& spec, unsigned workers) {
    std::vector<RoleCounts> counts(g.order());
    parallel_for(g.order(), workers, [&](std::size_t v) { counts[v] = role_counts(g, spec, static_cast<Vertex>(v)); });
    std::vector<VertexDensity> out;
    out.reserve(g.order());
    for (const auto& c : counts) out.push_back(vertex_density_from_counts(c, spec, g.order()));
    return out;
}

std::vector<std::vector<Rational>> pair_densities_oracle(const OrientedGraph& g, const StarSpec& spec) {
    const std::size_t n = g.order();
    std::vector<std::vector<Count>> together(n, std::vector<Count>(n, 0));
    for_each_induced_star_oracle(g, spec, [&](std::span<const Vertex> subset, Vertex) {
        for (Vertex a : subset) {
            for (Vertex b : subset) {
                if (a != b) ++together[a][b];
            }
        }
    });
    // Pr[success and u, v both in the image] = together * k! l! / n^(m+1);
    // conditioning on a uniformly random ordered pair of distinct star
    // vertices landing on (u, v) multiplies by n^2 / (m (m+1)).
    const auto m = static_cast<unsigned>(spec.m());
    const BigInt denom = ipow(BigInt(n), m - 1) * m * (m + 1);
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            out[u][v] = make_rational(BigInt(together[u][v]) * spec.automorphisms(), denom);
        }
    }
    return out;
}

Rational pair_density_oracle(const OrientedGraph& g, const StarSpec& spec, Vertex u, Vertex v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) return Rational(0);
    Count together = 0;
    for_each_induced_star_oracle(g, spec, [&](std::span<const Vertex> subset, Vertex) {
        const bool has_u = std::find(subset.begin(), subset.end(), u) != subset.end();
        const bool has_v = std::find(subset.begin(), subset.end(), v) != subset.end();
        if (has_u && has_v) ++together;
    });
    const auto m = static_cast<unsigned>(spec.m());
    return make_rational(BigInt(together) * spec.automorphisms(),
                         ipow(BigInt(g.order()), m - 1) * m * (m + 1));
}

VertexSet high_degree_side(const OrientedGraph& g) {
    VertexSet x(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        // rho(v) >= 1/2  <=>  2 deg(v) >= n
        if (2 * g.degree(v) >= g.order()) x.insert(v);
    }
    return x;
}

TypedDensities typed_densities(const OrientedGraph& g, const StarSpec& spec, const VertexSet& x_side) {
    if (x_side.universe() != g.order()) {
        throw Error(ErrorKind::IdOutOfRange, "partition universe does not match the graph order");
    }
    const VertexSet y_side = x_side.complement();
    TypedDensities t;
    t.x_side = x_side;
    const int k = spec.out_leaves();
    const int l = spec.in_leaves();
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet& out = g.out_neighbors(v);
        const VertexSet& in = g.in_neighbors(v);
        const Count total = count_leaf_choices(g, out, in, k, l);
        if (total == 0) continue;
        const Count leaves_x = count_leaf_choices(g, out & x_side, in & x_side, k, l);
        const Count leaves_y = count_leaf_choices(g, out & y_side, in & y_side, k, l);
        const Count mixed = total - leaves_x - leaves_y;
        t.c0 = checked_add(t.c0, mixed);
        if (x_side.contains(v)) {
            t.cX = checked_add(t.cX, leaves_x);
            t.c1 = checked_add(t.c1, leaves_y);
        } else {
            t.c2 = checked_add(t.c2, leaves_x);
            t.cY = checked_add(t.cY, leaves_y);
        }
    }
    const std::size_t n = g.order();
    t.s1 = s_density_of(t.c1, spec, n);
    t.s2 = s_density_of(t.c2, spec, n);
    t.sX = s_density_of(t.cX, spec, n);
    t.sY = s_density_of(t.cY, spec, n);
    t.s0 = s_density_of(t.c0, spec, n);
    return t;
}

TypedDensities typed_densities(const OrientedGraph& g, const StarSpec& spec) {
    return typed_densities(g, spec, high_degree_side(g));
}

}  // namespace ostar
