#include "ostar/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ostar/density.hpp"
#include "ostar/error.hpp"
#include "ostar/monte_carlo.hpp"
#include "ostar/opt.hpp"
#include "ostar/parallel.hpp"

namespace ostar {

namespace {

Rational frac(std::size_t num, std::size_t den) { return make_rational(BigInt(num), BigInt(den)); }

double ratio(std::size_t num, std::size_t den) { return static_cast<double>(num) / static_cast<double>(den); }

const OrientedGraph& normalized(const OrientedGraph& g, const StarSpec& spec, OrientedGraph& storage) {
    if (!spec.reversed()) return g;
    storage = g.reversed();
    return storage;
}

template <typename T>
void keep_min(std::optional<T>& slot, const T& value) {
    if (!slot || value < *slot) slot = value;
}

template <typename T>
void keep_max(std::optional<T>& slot, const T& value) {
    if (!slot || value > *slot) slot = value;
}

SweepCheck check(std::string name, int m, double value, double bound, bool exact, bool passed) {
    return SweepCheck{std::move(name), m, value, bound, exact, passed};
}

}  // namespace

std::vector<DegreeViolation> check_degree_bound(const OrientedGraph& g, const StarSpec& spec, unsigned workers) {
    const std::size_t n = g.order();
    const auto m = static_cast<unsigned>(spec.m());
    const std::vector<VertexDensity> densities = vertex_densities(g, spec, workers);
    std::vector<DegreeViolation> violations;
    for (Vertex v = 0; v < n; ++v) {
        const Rational rho = frac(g.degree(v), n);
        const Rational bound = (spec.lambda0() * rpow(rho, m) + spec.lambda1() * rho * rpow(Rational(1) - rho, m - 1)) /
                               Rational(m + 1);
        if (densities[v].s_v > bound) violations.push_back({v, densities[v].s_v, bound});
    }
    return violations;
}

PartitionStats partition_stats(const OrientedGraph& graph, const StarSpec& spec, const std::optional<VertexSet>& x_side,
                               const PartitionOptions& options) {
    OrientedGraph storage;
    const OrientedGraph& g = normalized(graph, spec, storage);
    const std::size_t n = g.order();
    const VertexSet X = x_side ? *x_side : high_degree_side(g);
    if (X.universe() != n) throw Error(ErrorKind::DomainError, "X must be a subset of the graph's vertices");
    const VertexSet Y = X.complement();
    const std::size_t nx = X.count();
    const std::size_t ny = Y.count();
    const auto k = static_cast<unsigned>(spec.k());
    const auto l = static_cast<unsigned>(spec.l());
    const auto m = static_cast<unsigned>(spec.m());

    PartitionStats st;
    st.x_side = X;
    st.alpha = frac(nx, n);

    std::size_t nonadjacent = 0;  // pairs (x, y) with no arc
    X.for_each([&](Vertex x) {
        const std::size_t out_y = g.out_neighbors(x).intersection_count(Y);
        const std::size_t in_y = g.in_neighbors(x).intersection_count(Y);
        keep_min(st.gamma, frac(in_y, n));
        keep_min(st.D, frac(g.degree(x), n));
        keep_min(st.S1, rpow(frac(out_y, n), k) * rpow(frac(in_y, n), l));
        nonadjacent += ny - out_y - in_y;
    });
    Y.for_each([&](Vertex y) { keep_max(st.beta, frac(g.neighbors(y).intersection_count(Y), n)); });

    if (nx > 0 && ny > 0) {
        // X side: mean over x of the share of Y not pointing at x.
        Rational from_x = 0;
        X.for_each([&](Vertex x) { from_x += Rational(1) - frac(g.in_neighbors(x).intersection_count(Y), ny); });
        st.d = from_x / Rational(nx);
        Rational from_y = 0;
        Y.for_each([&](Vertex y) { from_y += Rational(1) - frac(g.out_neighbors(y).intersection_count(X), nx); });
        st.d_from_y = from_y / Rational(ny);
    }
    st.d0 = frac(nonadjacent, n * n);

    if (st.S1 && st.beta && st.D) {
        const Rational correction = Rational(m - 1) / (Rational(m + 1) * Rational(binomial(m, k))) *
                                    (st.alpha + *st.beta) * (Rational(1) - st.alpha) *
                                    rpow(Rational(1) - *st.D, m - 2);
        st.S2 = *st.S1 - correction;
    }

    if (n <= options.exact_limit) {
        const std::vector<VertexDensity> vd = vertex_densities(g, spec, options.workers);
        Rational lowest = vd.front().s_v;
        for (const auto& x : vd) lowest = std::min(lowest, x.s_v);
        st.S_exact = Rational(m + 1) * lowest;
        st.S = to_double(*st.S_exact);
    } else {
        const StarSpec normal(spec.k(), spec.l());
        std::vector<McEstimate> est(n);
        parallel_for(n, options.workers, [&](std::size_t v) {
            est[v] = monte_carlo_vertex_s(g, normal, static_cast<Vertex>(v), options.mc_samples, options.seed);
        });
        double lowest = est.front().estimate;
        double radius = 0.0;
        for (const auto& e : est) {
            lowest = std::min(lowest, e.estimate);
            radius = std::max(radius, 5.0 * e.std_error);
        }
        st.S = (m + 1) * lowest;
        st.S_radius = (m + 1) * radius;
    }
    return st;
}

std::size_t SweepReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

Rational sweep_a8_expression(int m) {
    const BigInt mm(m);
    return make_rational((mm + 1) * (mm + 1), mm * (mm - 1)) +
           make_rational((mm + 1) * ipow(mm - 1, static_cast<unsigned>(m - 2)), ipow(mm, static_cast<unsigned>(m)));
}

SweepReport arithmetic_sweeps(int m_lo, int m_hi) {
    if (m_lo < kSweepMinM || m_hi > kSweepMaxM || m_lo > m_hi) {
        throw Error(ErrorKind::RangeError, "sweep range [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
                                               "] must lie in [" + std::to_string(kSweepMinM) + ", " +
                                               std::to_string(kSweepMaxM) + "]");
    }
    SweepReport report;
    report.m_lo = m_lo;
    report.m_hi = m_hi;
    auto exp_term = [](int m) {
        return (std::numbers::e * std::numbers::e * (m + 1) + std::numbers::e) / std::ldexp(1.0, m);
    };
    for (int m = m_lo; m <= m_hi; ++m) {
        const BigInt mm(m);
        const auto um = static_cast<unsigned>(m);

        const BigInt lhs = ipow(mm + 1, 4);
        const BigInt rhs = mm * mm * ipow(mm - 1, um - 1);
        report.checks.push_back(check("(m+1)^4 < m^2 (m-1)^(m-1)", m, to_double(Rational(lhs)),
                                      to_double(Rational(rhs)), true, lhs < rhs));

        const Rational third = Rational(44, 45) * rpow(make_rational(mm, mm + 1), um);
        report.checks.push_back(
            check("(44/45)(m/(m+1))^m >= 1/3", m, to_double(third), 1.0 / 3.0, true, third >= Rational(1, 3)));

        const double e_term = exp_term(m);
        const bool e_ok = e_term <= 55.0 / 64.0 && (m == kSweepMinM || e_term <= exp_term(m - 1));
        report.checks.push_back(check("(e^2(m+1)+e)/2^m <= 55/64, non-increasing", m, e_term, 55.0 / 64.0, false, e_ok));

        const Rational a8 = sweep_a8_expression(m);
        report.checks.push_back(
            check("(m+1)^2/(m(m-1)) + (m+1)(m-1)^(m-2)/m^m <= 1.73", m, to_double(a8), 1.73, true, a8 <= Rational(173, 100)));
        if (m == 6) {
            const double v = to_double(a8);
            report.checks.push_back(check("m = 6 value of the previous expression is 1.727 +- 0.001", m, v, 1.727, false,
                                          std::abs(v - 1.727) <= 0.001));
        }

        // Anchor point (1/(m+1), k/m): the first objective term alone is
        // k^k l^l/(m+1)^(m+1).
        const Rational a = make_rational(1, mm + 1);
        bool anchor_ok = true;
        double worst_gap = std::numeric_limits<double>::infinity();
        for (int l = 1; 2 * l <= m; ++l) {
            const int k = m - l;
            const StarSpec spec(k, l);
            const Rational floor_value = make_rational(ipow(BigInt(k), static_cast<unsigned>(k)) *
                                                           ipow(BigInt(l), static_cast<unsigned>(l)),
                                                       ipow(mm + 1, um));
            const Rational objective = spec.symmetric() ? objective_sym_exact(a, spec)
                                                        : objective_F_exact(a, make_rational(k, m), spec);
            const Rational scaled = Rational(m + 1) * objective;
            anchor_ok = anchor_ok && floor_value <= scaled;
            worst_gap = std::min(worst_gap, to_double(scaled - floor_value));
        }
        report.checks.push_back(
            check("k^k l^l/(m+1)^m <= (m+1) objective(1/(m+1), k/m), all k+l = m", m, worst_gap, 0.0, true, anchor_ok));
    }
    return report;
}

std::vector<LemmaCheck> lemma_suite(const LemmaOptions& options) {
    std::vector<LemmaCheck> out;
    auto rng = stream_generator(options.seed, 0);
    auto unit = [&] { return uniform_unit(rng); };
    auto positive_up_to_10 = [&] { return 10.0 * (1.0 - unit()); };  // (0, 10]

    LemmaCheck power{"x^a y^b <= a^a b^b/(a+b)^(a+b) (x+y)^(a+b)"};
    for (std::uint64_t t = 0; t < options.samples; ++t) {
        const double a = positive_up_to_10();
        const double b = positive_up_to_10();
        const double x = 10.0 * unit();
        const double y = 10.0 * unit();
        const double lhs = std::pow(x, a) * std::pow(y, b);
        const double rhs = std::pow(a, a) * std::pow(b, b) / std::pow(a + b, a + b) * std::pow(x + y, a + b);
        ++power.trials;
        if (lhs > rhs * (1.0 + options.slack)) {
            ++power.failures;
            power.worst = std::max(power.worst, lhs / rhs - 1.0);
        }
    }
    out.push_back(power);

    LemmaCheck product{"(a-x)(b-y) <= ab (1 - (x+y)/(a+b))"};
    for (std::uint64_t t = 0; t < options.samples; ++t) {
        const double a = positive_up_to_10();
        const double b = positive_up_to_10();
        const double x = a * unit();
        const double y = b * unit();
        const double lhs = (a - x) * (b - y);
        const double rhs = a * b * (1.0 - (x + y) / (a + b));
        ++product.trials;
        if (lhs > rhs + options.slack * a * b) {
            ++product.failures;
            product.worst = std::max(product.worst, (lhs - rhs) / (a * b));
        }
    }
    out.push_back(product);

    LemmaCheck monotone{"majorant non-decreasing"};
    LemmaCheck concave{"majorant midpoint-concave"};
    LemmaCheck above{"majorant >= x^k (1-x)^l"};
    LemmaCheck location{"argmax of f_* in [(k-1)/(m-1), k/m]"};
    const std::size_t grid = options.grid;
    for (int m = options.m_lo; m <= options.m_hi; ++m) {
        for (int l = 1; 2 * l <= m; ++l) {
            const int k = m - l;
            const StarSpec spec(k, l);
            const double lambda0 = to_double(spec.lambda0());
            std::vector<double> f(grid + 1);
            for (std::size_t i = 0; i <= grid; ++i) f[i] = f_majorant(static_cast<double>(i) / grid, spec);
            for (std::size_t i = 0; i <= grid; ++i) {
                const double x = static_cast<double>(i) / grid;
                const double g = std::pow(x, k) * std::pow(1.0 - x, l);
                ++above.trials;
                if (g > f[i] + options.slack * lambda0) {
                    ++above.failures;
                    above.worst = std::max(above.worst, (g - f[i]) / lambda0);
                }
                if (i > 0) {
                    ++monotone.trials;
                    if (f[i] < f[i - 1] - options.slack * lambda0) {
                        ++monotone.failures;
                        monotone.worst = std::max(monotone.worst, (f[i - 1] - f[i]) / lambda0);
                    }
                }
                if (i + 2 <= grid) {
                    ++concave.trials;
                    const double excess = (f[i] + f[i + 2]) / 2.0 - f[i + 1];
                    if (excess > options.slack * lambda0) {
                        ++concave.failures;
                        concave.worst = std::max(concave.worst, excess / lambda0);
                    }
                }
            }

            const double lo = static_cast<double>(k - 1) / (m - 1) - 1e-3;
            const double hi = static_cast<double>(k) / m + 1e-3;
            for (std::size_t t = 0; t < options.alphas; ++t) {
                const double alpha = 0.5 * unit();
                double best_d = 0.0;
                double best = -1.0;
                for (std::size_t i = 0; i <= grid; ++i) {
                    const double d = static_cast<double>(i) / grid;
                    const double v = f_star(d, alpha, spec);
                    if (v > best) {
                        best = v;
                        best_d = d;
                    }
                }
                ++location.trials;
                if (best_d < lo || best_d > hi) {
                    ++location.failures;
                    location.worst = std::max(location.worst, std::max(lo - best_d, best_d - hi));
                }
            }
        }
    }
    out.push_back(monotone);
    out.push_back(concave);
    out.push_back(above);
    out.push_back(location);
    return out;
}

StabilityReport stability_report(const OrientedGraph& graph, const StarSpec& spec, double epsilon) {
    if (spec.symmetric()) {
        throw Error(ErrorKind::WrongBranch, "the stability report covers k > l; " + spec.name() + " has k = l");
    }
    if (!(epsilon > 0.0)) throw Error(ErrorKind::DomainError, "epsilon must be positive");
    OrientedGraph storage;
    const OrientedGraph& g = normalized(graph, spec, storage);
    const std::size_t n = g.order();
    const int k = spec.k();
    const int l = spec.l();
    const int m = spec.m();

    const OptResult opt = solve_opt(spec);
    StabilityReport r;
    r.epsilon = epsilon;
    r.alpha_star = opt.alpha_star;
    r.d_star = *opt.d_star;
    const double a = r.alpha_star;
    const double d = r.d_star;

    r.x = high_degree_side(g);
    r.y1 = VertexSet(n);
    r.y2 = VertexSet(n);
    const double mu_x = ratio(r.x.count(), n);
    const VertexSet Y = r.x.complement();
    Y.for_each([&](Vertex y) {
        if (ratio(g.in_neighbors(y).intersection_count(r.x), n) >= mu_x - epsilon) {
            r.y2.insert(y);
        } else {
            r.y1.insert(y);
        }
    });

    const double share = static_cast<double>(m - 1) / (k - 1) * (1.0 - d);
    r.condition_deltas[0] = std::abs(mu_x - a);
    r.condition_deltas[1] = std::max(std::abs(ratio(r.y1.count(), n) - share * (1.0 - a)),
                                     std::abs(ratio(r.y2.count(), n) - (1.0 - share) * (1.0 - a)));

    std::size_t internal = 0;
    r.x.for_each([&](Vertex x) { internal += g.out_neighbors(x).intersection_count(r.x); });
    Y.for_each([&](Vertex y) { internal += g.out_neighbors(y).intersection_count(Y); });
    r.condition_deltas[2] = ratio(internal, n * n);

    double worst_x = 0.0;
    r.x.for_each([&](Vertex x) {
        const double dev = std::max(std::abs(ratio(g.out_neighbors(x).intersection_count(Y), n) - d * (1.0 - a)),
                                    std::abs(ratio(g.in_neighbors(x).intersection_count(Y), n) - (1.0 - d) * (1.0 - a)));
        worst_x = std::max(worst_x, dev);
        if (dev > epsilon) ++r.violating_counts[0];
    });
    const double away = static_cast<double>(k - 1) / (m - 1) * a;
    const double toward = static_cast<double>(l) / (m - 1) * a;
    double worst_y1 = 0.0;
    r.y1.for_each([&](Vertex y) {
        const double dev = std::max(std::abs(ratio(g.out_neighbors(y).intersection_count(r.x), n) - away),
                                    std::abs(ratio(g.in_neighbors(y).intersection_count(r.x), n) - toward));
        worst_y1 = std::max(worst_y1, dev);
        if (dev > epsilon) ++r.violating_counts[1];
    });
    double worst_y2 = 0.0;
    r.y2.for_each([&](Vertex y) {
        const double shortfall = std::max(0.0, a - ratio(g.in_neighbors(y).intersection_count(r.x), n));
        worst_y2 = std::max(worst_y2, shortfall);
        if (shortfall > epsilon) ++r.violating_counts[2];
    });
    r.condition_deltas[3] = worst_x;
    r.condition_deltas[4] = worst_y1;
    r.condition_deltas[5] = worst_y2;

    r.satisfied[0] = r.condition_deltas[0] <= epsilon;
    r.satisfied[1] = r.condition_deltas[1] <= epsilon;
    r.satisfied[2] = r.condition_deltas[2] <= epsilon;
    for (std::size_t c = 0; c < 3; ++c) {
        r.satisfied[3 + c] = static_cast<double>(r.violating_counts[c]) <= epsilon * static_cast<double>(n);
    }
    return r;
}

}  // namespace ostar
