#pragma once

#include <cstdint>
#include <random>

#include "ostar/digraph.hpp"
#include "ostar/rational.hpp"
#include "ostar/star_spec.hpp"

namespace ostar {

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;  // binomial: sqrt(p (1 - p) / samples)
    Count hits = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Samples are split into fixed-size chunks, each with its own generator
// seeded from (seed, chunk index), so the result depends only on
// (graph, spec, samples, seed) and never on the worker count.
inline constexpr std::uint64_t kMcChunkSize = 1u << 16;

// Unbiased estimator of s(G): draw the m+1 images independently and
// uniformly (repetition allowed), apply the fixed role pattern and test for
// an induced copy.
McEstimate monte_carlo_s(const OrientedGraph& g, const StarSpec& spec, std::uint64_t samples, std::uint64_t seed,
                         unsigned workers = 1);

// Estimator of the vertex density s(v): a uniformly random star vertex is
// pinned to v, the rest are drawn uniformly.
McEstimate monte_carlo_vertex_s(const OrientedGraph& g, const StarSpec& spec, Vertex v, std::uint64_t samples,
                                std::uint64_t seed);

// Uniform integer in [0, bound) via Lemire's multiply-shift with rejection;
// platform independent, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64& rng);

std::mt19937_64 stream_generator(std::uint64_t seed, std::uint64_t stream);

}  // namespace ostar
