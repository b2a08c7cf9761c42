#include "ostar/monte_carlo.hpp"

#include <cmath>
#include <vector>

#include "ostar/error.hpp"
#include "ostar/parallel.hpp"

namespace ostar {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

namespace {

// images[0] is the center, then the out-leaves, then the in-leaves.
bool is_induced_star(const OrientedGraph& g, const std::vector<Vertex>& images, int out_leaves) {
    const Vertex c = images[0];
    const std::size_t size = images.size();
    for (std::size_t a = 1; a < size; ++a) {
        if (images[a] == c) return false;
        const bool ok = static_cast<int>(a) <= out_leaves ? g.has_arc(c, images[a]) : g.has_arc(images[a], c);
        if (!ok) return false;
    }
    for (std::size_t a = 1; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
            // Adjacent leaves fail the induced test; equal leaves are a
            // non-injective map.
            if (images[a] == images[b] || g.adjacent(images[a], images[b])) return false;
        }
    }
    return true;
}

McEstimate finish(Count hits, std::uint64_t samples, std::uint64_t seed) {
    McEstimate e;
    e.hits = hits;
    e.samples = samples;
    e.seed = seed;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    e.estimate = p;
    e.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return e;
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    u128 product = static_cast<u128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<u128>(rng()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::mt19937_64 stream_generator(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

McEstimate monte_carlo_s(const OrientedGraph& g, const StarSpec& spec, std::uint64_t samples, std::uint64_t seed,
                         unsigned workers) {
    if (samples == 0) throw Error(ErrorKind::DomainError, "Monte-Carlo needs at least one sample");
    const std::uint64_t chunks = (samples + kMcChunkSize - 1) / kMcChunkSize;
    std::vector<Count> hits(chunks, 0);
    const auto n = static_cast<std::uint64_t>(g.order());
    const auto size = static_cast<std::size_t>(spec.order());
    parallel_for(chunks, workers, [&](std::size_t chunk) {
        auto rng = stream_generator(seed, chunk);
        const std::uint64_t begin = chunk * kMcChunkSize;
        const std::uint64_t end = std::min(samples, begin + kMcChunkSize);
        std::vector<Vertex> images(size);
        Count local = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
            for (auto& x : images) x = static_cast<Vertex>(uniform_below(rng, n));
            if (is_induced_star(g, images, spec.out_leaves())) ++local;
        }
        hits[chunk] = local;
    });
    Count total = 0;
    for (Count h : hits) total = checked_add(total, h);
    return finish(total, samples, seed);
}

McEstimate monte_carlo_vertex_s(const OrientedGraph& g, const StarSpec& spec, Vertex v, std::uint64_t samples,
                                std::uint64_t seed) {
    if (samples == 0) throw Error(ErrorKind::DomainError, "Monte-Carlo needs at least one sample");
    if (v >= g.order()) throw Error(ErrorKind::IdOutOfRange, "vertex " + std::to_string(v) + " out of range");
    auto rng = stream_generator(seed, v);
    const auto n = static_cast<std::uint64_t>(g.order());
    const auto size = static_cast<std::size_t>(spec.order());
    std::vector<Vertex> images(size);
    Count hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (auto& x : images) x = static_cast<Vertex>(uniform_below(rng, n));
        images[uniform_below(rng, size)] = v;
        if (is_induced_star(g, images, spec.out_leaves())) ++hits;
    }
    return finish(hits, samples, seed);
}

}  // namespace ostar
