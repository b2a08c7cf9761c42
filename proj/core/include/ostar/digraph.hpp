#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ostar/rational.hpp"
#include "ostar/star_spec.hpp"
#include "ostar/vertex_set.hpp"

namespace ostar {

// Arc u -> v.
struct Arc {
    Vertex from;
    Vertex to;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Immutable oriented graph: no loops, no digons. Adjacency is kept as dense
// bitsets per vertex, which is what the counting engine intersects.
class OrientedGraph {
public:
    OrientedGraph() = default;

    // Validates every arc. Throws IdOutOfRange, LoopArc, Digon or
    // DuplicateArc naming the offending pair.
    static OrientedGraph from_arcs(std::size_t n, std::span<const Arc> arcs);
    static OrientedGraph from_arcs(std::size_t n, std::initializer_list<Arc> arcs) {
        return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }
    static OrientedGraph empty(std::size_t n);

    std::size_t order() const noexcept { return out_.size(); }
    std::size_t arc_count() const noexcept { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const noexcept { return out_[u].contains(v); }
    bool adjacent(Vertex u, Vertex v) const noexcept { return nbr_[u].contains(v); }

    const VertexSet& out_neighbors(Vertex v) const noexcept { return out_[v]; }
    const VertexSet& in_neighbors(Vertex v) const noexcept { return in_[v]; }
    const VertexSet& neighbors(Vertex v) const noexcept { return nbr_[v]; }

    std::size_t out_degree(Vertex v) const noexcept { return out_[v].count(); }
    std::size_t in_degree(Vertex v) const noexcept { return in_[v].count(); }
    std::size_t degree(Vertex v) const noexcept { return nbr_[v].count(); }

    // Arcs in lexicographic order.
    std::vector<Arc> arcs() const;

    OrientedGraph reversed() const;

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) noexcept {
        return a.out_ == b.out_;
    }

private:
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<VertexSet> nbr_;
    std::size_t arc_count_ = 0;
};

// Mutable arc store used by generators and the search module; freeze() runs
// the same validation as OrientedGraph::from_arcs.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : n_(n) {}
    void add_arc(Vertex u, Vertex v) { arcs_.push_back({u, v}); }
    std::size_t order() const noexcept { return n_; }
    OrientedGraph freeze() const { return OrientedGraph::from_arcs(n_, arcs_); }

private:
    std::size_t n_;
    std::vector<Arc> arcs_;
};

enum class StarRole { Center, InLeaf, OutLeaf };

// Proportions of v's out-, in-, all- and non-neighbours lying in A, relative
// to the whole vertex count n. mu = |A|/n. v itself counts as a
// non-neighbour when v is in A.
struct VertexProfile {
    Rational rho_plus;
    Rational rho_minus;
    Rational rho;
    Rational rho_zero;
    Rational mu;
};

VertexProfile profile(const OrientedGraph& g, Vertex v, const VertexSet& subset);
VertexProfile profile(const OrientedGraph& g, Vertex v);

// Replace each vertex by an independent set of size t; vertex v becomes
// v*t, ..., v*t + t - 1 and arcs are inherited class to class.
OrientedGraph blow_up(const OrientedGraph& g, std::size_t t);

// Delete v and add a twin u' of u inside G - v. u' takes v's index so the
// vertex count is unchanged; u' and u are non-adjacent.
OrientedGraph clone_replace(const OrientedGraph& g, Vertex u, Vertex v);

// Role assignment of an (m+1)-subset onto S_{k,l}.
struct StarEmbedding {
    Vertex center;
    std::vector<Vertex> out_leaves;
    std::vector<Vertex> in_leaves;
};

// True iff the subgraph induced on the embedding's vertices is exactly the
// star with these roles. Throws WrongCardinality if the leaf counts do not
// match spec, IdOutOfRange for bad ids, SameVertex for repeated vertices.
bool induced_star_check(const OrientedGraph& g, const StarEmbedding& embedding, const StarSpec& spec);

}  // namespace ostar
