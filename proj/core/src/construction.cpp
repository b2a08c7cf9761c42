#include "ostar/construction.hpp"

#include <cmath>

#include "ostar/error.hpp"
#include "ostar/monte_carlo.hpp"
#include "ostar/opt.hpp"

namespace ostar {

namespace {

constexpr double kRoundSlack = 1e-9;

std::size_t round_half_up(double x) { return static_cast<std::size_t>(std::floor(x + 0.5 + kRoundSlack)); }

void require_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorKind::DomainError, std::string(what) + " = " + std::to_string(x) + " outside [0,1]");
    }
}

// Share of Y taken by Y1.
double y1_share(const StarSpec& spec, double d) {
    return static_cast<double>(spec.m() - 1) / (spec.k() - 1) * (1.0 - d);
}

// Arcs from X-vertex i to `count` consecutive (cyclically) members of a
// class of size `size` starting at offset i * count.
template <typename Emit>
void circulant(std::size_t i, std::size_t count, std::size_t size, Emit&& emit) {
    if (size == 0) return;
    const std::size_t start = (i * count) % size;
    for (std::size_t t = 0; t < size; ++t) {
        emit((start + t) % size, t < count);
    }
}

}  // namespace

ClassSizes class_sizes(const ConstructionParams& p) {
    require_unit(p.alpha, "alpha");
    const StarSpec& spec = p.spec;
    ClassSizes s;
    s.x = std::min(p.n, round_half_up(p.alpha * static_cast<double>(p.n)));
    if (spec.symmetric()) {
        s.y1 = p.n - s.x;
        return s;
    }
    require_unit(p.d, "d");
    const double share = y1_share(spec, p.d);
    if (share > 1.0 + kRoundSlack) {
        throw Error(ErrorKind::InfeasibleSizes, "(m-1)/(k-1) (1-d) = " + std::to_string(share) + " exceeds 1");
    }
    s.y1 = std::min(p.n - s.x, round_half_up(share * (1.0 - p.alpha) * static_cast<double>(p.n)));
    s.y2 = p.n - s.x - s.y1;
    return s;
}

OrientedGraph build_construction(const ConstructionParams& p) {
    const StarSpec& spec = p.spec;
    if (p.n < static_cast<std::size_t>(spec.order())) {
        throw Error(ErrorKind::DomainError, "construction needs n >= m+1 = " + std::to_string(spec.order()));
    }
    const ClassSizes s = class_sizes(p);
    const auto y1_begin = static_cast<Vertex>(s.x);
    const auto y2_begin = static_cast<Vertex>(s.x + s.y1);

    // Number of arcs each X-vertex sends into Y1 in balanced mode.
    const std::size_t toward_y1 =
        spec.symmetric() ? round_half_up(static_cast<double>(s.y1) / 2.0)
                         : round_half_up(static_cast<double>(spec.l()) * static_cast<double>(s.y1) / (spec.m() - 1));
    const double p_toward = spec.symmetric() ? 0.5 : static_cast<double>(spec.l()) / (spec.m() - 1);
    auto rng = stream_generator(p.seed, 0);

    GraphBuilder builder(p.n);
    for (std::size_t i = 0; i < s.x; ++i) {
        const auto x = static_cast<Vertex>(i);
        auto emit = [&](std::size_t j, bool forward) {
            const auto y = static_cast<Vertex>(y1_begin + j);
            if (forward) {
                builder.add_arc(x, y);
            } else {
                builder.add_arc(y, x);
            }
        };
        if (p.mode == BuildMode::Balanced) {
            circulant(i, toward_y1, s.y1, emit);
        } else {
            for (std::size_t j = 0; j < s.y1; ++j) emit(j, uniform_unit(rng) < p_toward);
        }
        for (std::size_t j = 0; j < s.y2; ++j) builder.add_arc(x, static_cast<Vertex>(y2_begin + j));
    }
    OrientedGraph g = builder.freeze();
    return spec.reversed() ? g.reversed() : g;
}

double predict_s(const ConstructionParams& p) {
    require_unit(p.alpha, "alpha");
    const StarSpec& spec = p.spec;
    const int k = spec.k();
    const int l = spec.l();
    const double a = p.alpha;
    if (spec.symmetric()) {
        // Centers in X see Y split evenly; centers in Y see X split evenly.
        const double half_y = (1.0 - a) / 2.0;
        const double half_x = a / 2.0;
        return a * std::pow(half_y, k) * std::pow(half_y, l) + (1.0 - a) * std::pow(half_x, k) * std::pow(half_x, l);
    }
    require_unit(p.d, "d");
    const double share = y1_share(spec, p.d);
    if (share > 1.0 + kRoundSlack) {
        throw Error(ErrorKind::InfeasibleSizes, "(m-1)/(k-1) (1-d) = " + std::to_string(share) + " exceeds 1");
    }
    const double mu_y1 = share * (1.0 - a);
    const double mu_y2 = (1.0 - a) - mu_y1;
    const double toward = static_cast<double>(l) / (spec.m() - 1);
    const double away = static_cast<double>(k - 1) / (spec.m() - 1);

    // Center in X: out-leaves in Y2 or the Y1 share pointed at, in-leaves in
    // the rest of Y1. Center in Y1: leaves in X. Centers in Y2 have no
    // out-neighbours.
    const double x_out = mu_y2 + toward * mu_y1;
    const double x_in = away * mu_y1;
    const double from_x = a * std::pow(x_out, k) * std::pow(x_in, l);
    const double from_y1 = mu_y1 * std::pow(away * a, k) * std::pow(toward * a, l);
    return from_x + from_y1;
}

OrientedGraph optimal_construction(const StarSpec& spec, std::size_t n, BuildMode mode, std::uint64_t seed) {
    const OptResult opt = solve_opt(spec);
    ConstructionParams p{spec, n, opt.alpha_star, opt.d_star.value_or(0.0), mode, seed};
    return build_construction(p);
}

}  // namespace ostar
