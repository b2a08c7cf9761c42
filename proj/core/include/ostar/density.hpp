#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ostar/digraph.hpp"
#include "ostar/rational.hpp"
#include "ostar/star_spec.hpp"

namespace ostar {

// Exact count of induced copies plus the two normalizations:
//   i = count / C(n, m+1)
//   s = count * k! l! / n^(m+1)
// s is the probability that a uniformly random map V(S) -> V(G) (repetition
// allowed) is an isomorphism onto an induced copy.
struct DensityReport {
    Count count = 0;
    Rational i_density;
    Rational s_density;
    std::size_t n = 0;
    StarSpec spec;
};

// Conditional densities of a single vertex. s_center = s(c -> v),
// s_inleaf = s(i -> v), s_outleaf = s(o -> v) for a fixed in-leaf i and
// out-leaf o, and s_v = (s_center + l s_inleaf + k s_outleaf) / (m+1).
struct VertexDensity {
    Rational s_v;
    Rational s_center;
    Rational s_inleaf;
    Rational s_outleaf;
};

// Number of induced copies in which a vertex plays each role.
struct RoleCounts {
    Count center = 0;
    Count in_leaf = 0;
    Count out_leaf = 0;
    Count total() const { return checked_add(checked_add(center, in_leaf), out_leaf); }
};

// Densities split by where the center and leaves fall relative to X:
//   type 1: center in X, all leaves in Y     type 2: center in Y, leaves in X
//   type X: everything in X                  type Y: everything in Y
//   type 0: leaves on both sides
struct TypedDensities {
    Rational s1;
    Rational s2;
    Rational sX;
    Rational sY;
    Rational s0;
    Count c1 = 0;
    Count c2 = 0;
    Count cX = 0;
    Count cY = 0;
    Count c0 = 0;
    VertexSet x_side;
};

// Reference oracle: visits every (m+1)-subset and reports the ones that
// induce the star. The callback receives the subset (ascending) and the
// center. Used for count_oracle and the pair conditionals.
void for_each_induced_star_oracle(const OrientedGraph& g, const StarSpec& spec,
                                  const std::function<void(std::span<const Vertex>, Vertex)>& visit);

Count count_oracle(const OrientedGraph& g, const StarSpec& spec, unsigned workers = 1);

// Per-center count. Equals count_oracle; falls back to it when n <= m+3.
Count count_fast(const OrientedGraph& g, const StarSpec& spec, unsigned workers = 1);

// Number of pairs (A, B), A a `want_out`-subset of out_pool and B a
// `want_in`-subset of in_pool, with A u B independent in g. The pools must
// be disjoint.
Count count_leaf_choices(const OrientedGraph& g, VertexSet out_pool, VertexSet in_pool, int want_out,
                         int want_in);

Count count_centered_at(const OrientedGraph& g, const StarSpec& spec, Vertex v);
RoleCounts role_counts(const OrientedGraph& g, const StarSpec& spec, Vertex v);

Rational i_density_of(Count count, const StarSpec& spec, std::size_t n);
Rational s_density_of(Count count, const StarSpec& spec, std::size_t n);

DensityReport density_report(const OrientedGraph& g, const StarSpec& spec, unsigned workers = 1);

VertexDensity vertex_density(const OrientedGraph& g, Vertex v, const StarSpec& spec);
VertexDensity vertex_density_from_counts(const RoleCounts& counts, const StarSpec& spec, std::size_t n);
std::vector<VertexDensity> vertex_densities(const OrientedGraph& g, const StarSpec& spec, unsigned workers = 1);

// Oracle-only pair conditional s(u,v): probability of success given that
// a uniformly random ordered pair of distinct star vertices maps to (u,v).
// s(u,u) = 0, and the sum of s(u,v)/n^2 over all ordered pairs is s(G).
std::vector<std::vector<Rational>> pair_densities_oracle(const OrientedGraph& g, const StarSpec& spec);
Rational pair_density_oracle(const OrientedGraph& g, const StarSpec& spec, Vertex u, Vertex v);

// X = { v : rho(v) >= 1/2 }.
VertexSet high_degree_side(const OrientedGraph& g);

TypedDensities typed_densities(const OrientedGraph& g, const StarSpec& spec, const VertexSet& x_side);
TypedDensities typed_densities(const OrientedGraph& g, const StarSpec& spec);

}  // namespace ostar
