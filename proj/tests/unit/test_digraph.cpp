#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ostar/density.hpp"
#include "ostar/digraph.hpp"
#include "ostar/error.hpp"
#include "ostar/monte_carlo.hpp"
#include "ostar/search.hpp"

using namespace ostar;
using namespace ostar::test;

namespace {

ErrorKind build_error(std::size_t n, std::initializer_list<Arc> arcs) {
    try {
        OrientedGraph::from_arcs(n, arcs);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "graph accepted";
    return ErrorKind::DomainError;
}

}  // namespace

TEST(Digraph, BuildsAndValidates) {
    const auto g = OrientedGraph::from_arcs(2, {{0, 1}});
    EXPECT_EQ(g.order(), 2u);
    EXPECT_EQ(g.arc_count(), 1u);
    EXPECT_TRUE(g.has_arc(0, 1));
    EXPECT_FALSE(g.has_arc(1, 0));
    EXPECT_TRUE(g.adjacent(1, 0));

    EXPECT_EQ(build_error(3, {{0, 1}, {1, 0}}), ErrorKind::Digon);
    EXPECT_EQ(build_error(3, {{1, 1}}), ErrorKind::LoopArc);
    EXPECT_EQ(build_error(3, {{0, 3}}), ErrorKind::IdOutOfRange);
    EXPECT_EQ(build_error(3, {{0, 1}, {0, 1}}), ErrorKind::DuplicateArc);
    EXPECT_EQ(build_error(0, {}), ErrorKind::DomainError);
}

TEST(Digraph, ErrorMessageNamesThePair) {
    try {
        OrientedGraph::from_arcs(3, {{0, 2}, {2, 0}});
        FAIL();
    } catch (const Error& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find('0'), std::string::npos);
        EXPECT_NE(what.find('2'), std::string::npos);
    }
}

TEST(Digraph, StarProfile) {
    const auto g = star21();
    const VertexProfile p = profile(g, 0);
    EXPECT_EQ(p.rho_plus, Rational(2, 4));
    EXPECT_EQ(p.rho_minus, Rational(1, 4));
    EXPECT_EQ(p.rho_zero, Rational(1, 4));
    EXPECT_EQ(p.rho, Rational(3, 4));
    EXPECT_EQ(p.mu, Rational(1));

    const VertexProfile q = profile(OrientedGraph::from_arcs(2, {{0, 1}}), 0);
    EXPECT_EQ(q.rho_plus, Rational(1, 2));
    EXPECT_EQ(q.rho_minus, Rational(0));

    const VertexProfile e = profile(g, 0, VertexSet(4));
    EXPECT_EQ(e.rho_plus, 0);
    EXPECT_EQ(e.rho_minus, 0);
    EXPECT_EQ(e.rho_zero, 0);
    EXPECT_EQ(e.mu, 0);
}

TEST(Digraph, ProfileRejectsBadVertex) {
    EXPECT_THROW(profile(star21(), 4), Error);
}

TEST(DigraphProperty, ProfileSumsToSubsetMeasure) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const auto g = random_oriented_graph(n, seed);
        auto rng = stream_generator(seed, 7);
        VertexSet a(n);
        for (Vertex v = 0; v < n; ++v) {
            if (uniform_below(rng, 2) == 1) a.insert(v);
        }
        for (Vertex v = 0; v < n; ++v) {
            const VertexProfile p = profile(g, v, a);
            EXPECT_EQ(p.rho_plus + p.rho_minus + p.rho_zero, p.mu);
            EXPECT_EQ(p.rho, p.rho_plus + p.rho_minus);
            EXPECT_EQ(p.mu, Rational(static_cast<int>(a.count()), static_cast<int>(n)));
        }
    }
}

TEST(Digraph, BlowUpExamples) {
    const auto arc = OrientedGraph::from_arcs(2, {{0, 1}});
    const auto b = blow_up(arc, 2);
    EXPECT_EQ(b.order(), 4u);
    EXPECT_EQ(b.arc_count(), 4u);
    EXPECT_FALSE(b.adjacent(0, 1));
    EXPECT_FALSE(b.adjacent(2, 3));

    const auto s = blow_up(star21(), 3);
    EXPECT_EQ(s.order(), 12u);
    EXPECT_EQ(s.arc_count(), 27u);

    EXPECT_EQ(blow_up(star21(), 1), star21());
    EXPECT_THROW(blow_up(star21(), 0), Error);
}

TEST(DigraphProperty, BlowUpComposes) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::size_t n = 2 + seed % 3;
        const auto g = random_oriented_graph(n, seed);
        const auto twice = blow_up(blow_up(g, 2), 2);
        const auto once = blow_up(g, 4);
        EXPECT_EQ(twice.arc_count(), once.arc_count());
        for (const StarSpec& spec : specs_with_m(2, 4)) {
            if (static_cast<std::size_t>(spec.order()) > 4 * n) continue;
            EXPECT_EQ(count_fast(twice, spec), count_fast(once, spec)) << spec.name() << " seed " << seed;
        }
    }
}

TEST(Digraph, CloneReplaceExamples) {
    const auto arc = OrientedGraph::from_arcs(2, {{0, 1}});
    EXPECT_EQ(clone_replace(arc, 0, 1).arc_count(), 0u);

    const auto g = clone_replace(star21(), 1, 3);
    EXPECT_TRUE(g.has_arc(0, 1));
    EXPECT_TRUE(g.has_arc(0, 2));
    EXPECT_TRUE(g.has_arc(0, 3));
    EXPECT_FALSE(g.adjacent(1, 3));
    EXPECT_EQ(g.arc_count(), 3u);
    EXPECT_EQ(count_oracle(g, StarSpec(2, 1)), 0u);

    // 1 and 2 are twins in the star.
    EXPECT_EQ(clone_replace(star21(), 1, 2), star21());

    EXPECT_THROW(clone_replace(star21(), 1, 1), Error);
    EXPECT_THROW(clone_replace(star21(), 1, 9), Error);
}

TEST(Digraph, InducedStarCheck) {
    const StarSpec s21(2, 1);
    EXPECT_TRUE(induced_star_check(star21(), {0, {1, 2}, {3}}, s21));
    EXPECT_FALSE(induced_star_check(star21(), {0, {1, 3}, {2}}, s21));

    const StarSpec s11(1, 1);
    const auto t = triangle();
    for (Vertex c = 0; c < 3; ++c) {
        for (Vertex o = 0; o < 3; ++o) {
            const Vertex i = 3 - c - o;
            if (o == c || i == c || i == o) continue;
            EXPECT_FALSE(induced_star_check(t, {c, {o}, {i}}, s11));
        }
    }
    EXPECT_TRUE(induced_star_check(cycle4(), {1, {2}, {0}}, s11));
    try {
        induced_star_check(star21(), {0, {1}, {3}}, s21);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WrongCardinality);
    }
}

TEST(DigraphProperty, ReversalSymmetry) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 3 + seed % 8;
        const auto g = random_oriented_graph(n, seed);
        const auto r = g.reversed();
        EXPECT_EQ(r.reversed(), g);
        for (const StarSpec& spec : specs_with_m(2, 5)) {
            const StarSpec flipped(spec.in_leaves(), spec.out_leaves());
            const DensityReport a = density_report(g, spec);
            const DensityReport b = density_report(r, flipped);
            EXPECT_EQ(a.count, b.count);
            EXPECT_EQ(a.s_density, b.s_density);
            EXPECT_EQ(a.i_density, b.i_density);
            for (Vertex v = 0; v < n; ++v) {
                EXPECT_EQ(vertex_density(g, v, spec).s_v, vertex_density(r, v, flipped).s_v);
            }
        }
    }
}

TEST(StarSpec, NormalizesAndRejects) {
    const StarSpec s(1, 2);
    EXPECT_EQ(s.k(), 2);
    EXPECT_EQ(s.l(), 1);
    EXPECT_TRUE(s.reversed());
    EXPECT_EQ(s.out_leaves(), 1);
    EXPECT_EQ(s.in_leaves(), 2);
    EXPECT_EQ(s.name(), "S_{1,2}");
    try {
        StarSpec(3, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EllZero);
    }
    EXPECT_THROW(StarSpec(-1, 2), Error);
}

TEST(StarSpec, Constants) {
    const StarSpec s(2, 1);
    EXPECT_EQ(s.lambda0(), Rational(4, 27));
    EXPECT_EQ(s.lambda1(), Rational(4, 4));  // 2^2 * 1 * 0^0 / 2^2
    EXPECT_EQ(s.prefactor(), BigInt(12));
    EXPECT_EQ(s.leaf_coefficient(), Rational(1, 4));
    const StarSpec t(4, 2);
    EXPECT_EQ(t.lambda0(), Rational(256 * 4, 46656));
    EXPECT_EQ(t.lambda1(), Rational(256 * 2, 3125));
    EXPECT_EQ(t.prefactor(), BigInt(105));
    for (const StarSpec& spec : specs_with_m(2, 12)) {
        EXPECT_GT(spec.lambda0(), 0);
        EXPECT_LT(spec.lambda0(), 1);
        EXPECT_GT(spec.lambda1(), 0);
    }
}
