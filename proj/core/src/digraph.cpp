#include "ostar/digraph.hpp"

#include <limits>
#include <string>

#include "ostar/error.hpp"

namespace ostar {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_id(const OrientedGraph& g, Vertex v) {
    if (v >= g.order()) {
        throw Error(ErrorKind::IdOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0," + std::to_string(g.order()) + ")");
    }
}

}  // namespace

OrientedGraph OrientedGraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
    if (n == 0) throw Error(ErrorKind::DomainError, "graph must have at least one vertex");
    OrientedGraph g;
    g.out_.assign(n, VertexSet(n));
    g.in_.assign(n, VertexSet(n));
    g.nbr_.assign(n, VertexSet(n));
    for (const Arc& a : arcs) {
        if (a.from >= n || a.to >= n) {
            throw Error(ErrorKind::IdOutOfRange,
                        "arc " + pair_text(a.from, a.to) + " has an id outside [0," + std::to_string(n) + ")");
        }
        if (a.from == a.to) throw Error(ErrorKind::LoopArc, "loop arc " + pair_text(a.from, a.to));
        if (g.out_[a.from].contains(a.to)) {
            throw Error(ErrorKind::DuplicateArc, "duplicate arc " + pair_text(a.from, a.to));
        }
        if (g.out_[a.to].contains(a.from)) {
            throw Error(ErrorKind::Digon, "arc " + pair_text(a.from, a.to) + " closes a digon");
        }
        g.out_[a.from].insert(a.to);
        g.in_[a.to].insert(a.from);
        g.nbr_[a.from].insert(a.to);
        g.nbr_[a.to].insert(a.from);
        ++g.arc_count_;
    }
    return g;
}

OrientedGraph OrientedGraph::empty(std::size_t n) { return from_arcs(n, std::span<const Arc>{}); }

std::vector<Arc> OrientedGraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < order(); ++u) {
        out_[u].for_each([&](Vertex v) { out.push_back({u, v}); });
    }
    return out;
}

OrientedGraph OrientedGraph::reversed() const {
    OrientedGraph g = *this;
    std::swap(g.out_, g.in_);
    return g;
}

VertexProfile profile(const OrientedGraph& g, Vertex v, const VertexSet& subset) {
    check_id(g, v);
    if (subset.universe() != g.order()) {
        throw Error(ErrorKind::IdOutOfRange, "subset universe does not match the graph order");
    }
    const auto n = static_cast<long>(g.order());
    const auto plus = static_cast<long>(g.out_neighbors(v).intersection_count(subset));
    const auto minus = static_cast<long>(g.in_neighbors(v).intersection_count(subset));
    const auto size = static_cast<long>(subset.count());
    VertexProfile p;
    p.rho_plus = Rational(plus, n);
    p.rho_minus = Rational(minus, n);
    p.rho = Rational(plus + minus, n);
    p.mu = Rational(size, n);
    p.rho_zero = Rational(size - plus - minus, n);
    return p;
}

VertexProfile profile(const OrientedGraph& g, Vertex v) {
    return profile(g, v, VertexSet::full(g.order()));
}

OrientedGraph blow_up(const OrientedGraph& g, std::size_t t) {
    if (t == 0) throw Error(ErrorKind::DomainError, "blow-up factor must be at least 1");
    const std::size_t n = g.order();
    if (n > std::numeric_limits<Vertex>::max() / t) {
        throw Error(ErrorKind::Overflow, "blow-up order exceeds the vertex id range");
    }
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count() * t * t);
    for (const Arc& a : g.arcs()) {
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = 0; j < t; ++j) {
                arcs.push_back({static_cast<Vertex>(a.from * t + i), static_cast<Vertex>(a.to * t + j)});
            }
        }
    }
    return OrientedGraph::from_arcs(n * t, arcs);
}

OrientedGraph clone_replace(const OrientedGraph& g, Vertex u, Vertex v) {
    check_id(g, u);
    check_id(g, v);
    if (u == v) throw Error(ErrorKind::SameVertex, "clone_replace needs distinct u and v");
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count() + g.degree(u));
    for (const Arc& a : g.arcs()) {
        if (a.from != v && a.to != v) arcs.push_back(a);
    }
    // The clone u' reuses index v.
    g.out_neighbors(u).for_each([&](Vertex w) {
        if (w != v) arcs.push_back({v, w});
    });
    g.in_neighbors(u).for_each([&](Vertex w) {
        if (w != v) arcs.push_back({w, v});
    });
    return OrientedGraph::from_arcs(g.order(), arcs);
}

bool induced_star_check(const OrientedGraph& g, const StarEmbedding& e, const StarSpec& spec) {
    if (e.out_leaves.size() != static_cast<std::size_t>(spec.out_leaves()) ||
        e.in_leaves.size() != static_cast<std::size_t>(spec.in_leaves())) {
        throw Error(ErrorKind::WrongCardinality,
                    "embedding has " + std::to_string(e.out_leaves.size()) + " out-leaves and " +
                        std::to_string(e.in_leaves.size()) + " in-leaves; " + spec.name() + " needs " +
                        std::to_string(spec.out_leaves()) + " and " + std::to_string(spec.in_leaves()));
    }
    std::vector<Vertex> leaves = e.out_leaves;
    leaves.insert(leaves.end(), e.in_leaves.begin(), e.in_leaves.end());
    check_id(g, e.center);
    VertexSet seen(g.order());
    seen.insert(e.center);
    for (Vertex x : leaves) {
        check_id(g, x);
        if (seen.contains(x)) throw Error(ErrorKind::SameVertex, "vertex " + std::to_string(x) + " used twice");
        seen.insert(x);
    }
    for (Vertex o : e.out_leaves) {
        if (!g.has_arc(e.center, o)) return false;
    }
    for (Vertex i : e.in_leaves) {
        if (!g.has_arc(i, e.center)) return false;
    }
    for (std::size_t a = 0; a < leaves.size(); ++a) {
        for (std::size_t b = a + 1; b < leaves.size(); ++b) {
            if (g.adjacent(leaves[a], leaves[b])) return false;
        }
    }
    return true;
}

}  // namespace ostar
