// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/cli.hpp"
#include "ostar/construction.hpp"
#include "ostar/density.hpp"
#include "ostar/digraph.hpp"
#include "ostar/monte_carlo.hpp"
#include "ostar/opt.hpp"
#include "ostar/parallel.hpp"
#include "ostar/search.hpp"
#include "ostar/verifier.hpp"

using namespace ostar;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::vector<StarSpec> all_specs(int m_lo, int m_hi) {
    std::vector<StarSpec> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int a = 1; a < m; ++a) out.emplace_back(a, m - a);
    }
    return out;
}

Outcome paper_example() {
    std::ostringstream out;
    std::ostringstream err;
    const char* argv[] = {"ostar", "opt", "--k", "2", "--l", "1"};
    const int code = cli::main_entry(6, argv, out, err);
    if (code != 0) return {false, "exit code " + std::to_string(code) + ": " + err.str()};
    const auto j = nlohmann::json::parse(out.str());
    const double ind = j["inducibility"].get<double>();
    const double a = j["alpha"].get<double>();
    const double d = j["d"].get<double>();
    const Rational exact = objective_F_exact(Rational(3, 10), Rational(9, 14), StarSpec(2, 1)) * 12;
    const bool ok = std::abs(ind - 0.2025) <= 1e-9 && std::abs(a - 0.3) <= 1e-6 &&
                    std::abs(d - 9.0 / 14.0) <= 1e-6 && exact == Rational(81, 400);
    char buf[160];
    std::snprintf(buf, sizeof buf, "inducibility %.12f at (%.9f, %.9f); 12 F = %s", ind, a, d,
                  to_fraction(exact).c_str());
    return {ok, buf};
}

Outcome taylor_precision() {
    const StarSpec s(4, 2);
    const double v = solve_opt(s).opt_value;
    const double rel = std::abs(taylor_approx(s).value_hat - v) / v;
    char buf[96];
    std::snprintf(buf, sizeof buf, "relative error %.3e", rel);
    return {rel <= 1e-7, buf};
}

Outcome oracle_equivalence() {
    const auto specs = all_specs(2, 6);
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 4 + seed % 5;
        const double p = 0.2 + 0.6 * static_cast<double>(seed % 11) / 10.0;
        const auto g = random_oriented_graph(n, seed, p);
        for (const StarSpec& spec : specs) {
            ++checks;
            if (count_fast(g, spec) != count_oracle(g, spec)) ++mismatches;
        }
    }
    return {mismatches == 0, "500 graphs, " + std::to_string(checks) + " comparisons, " +
                                 std::to_string(mismatches) + " mismatches"};
}

// Role counts are taken from the oracle enumeration and converted to
// conditional probabilities directly.
Outcome probabilistic_identities() {
    std::size_t failures = 0;
    std::size_t checks = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 5 + seed % 8;
        const auto g = random_oriented_graph(n, 7000 + seed, 0.45);
        const auto specs = all_specs(2, 4);
        const StarSpec spec = specs[seed % specs.size()];
        const int k = spec.out_leaves();
        const int l = spec.in_leaves();
        std::vector<Count> center(n, 0), in_leaf(n, 0), out_leaf(n, 0);
        for_each_induced_star_oracle(g, spec, [&](std::span<const Vertex> set, Vertex c) {
            ++center[c];
            for (Vertex v : set) {
                if (v == c) continue;
                if (g.has_arc(c, v)) {
                    ++out_leaf[v];
                } else {
                    ++in_leaf[v];
                }
            }
        });
        const Rational nm = Rational(ipow(BigInt(n), static_cast<unsigned>(spec.m())));
        const Rational maps_c = Rational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(l)));
        const Rational maps_i = Rational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(l - 1)));
        const Rational maps_o = Rational(factorial(static_cast<unsigned>(k - 1)) * factorial(static_cast<unsigned>(l)));
        const Rational s = density_report(g, spec).s_density;
        const Rational nn(static_cast<long long>(n));
        Rational sum_v = 0, sum_c = 0, sum_i = 0, sum_o = 0;
        for (Vertex v = 0; v < n; ++v) {
            const VertexDensity vd = vertex_density(g, v, spec);
            const Rational sc = Rational(center[v]) * maps_c / nm;
            const Rational si = Rational(in_leaf[v]) * maps_i / nm;
            const Rational so = Rational(out_leaf[v]) * maps_o / nm;
            ++checks;
            if (vd.s_center != sc || vd.s_inleaf != si || vd.s_outleaf != so ||
                vd.s_v * (spec.m() + 1) != sc + l * si + k * so) {
                ++failures;
            }
            sum_v += vd.s_v;
            sum_c += sc;
            sum_i += si;
            sum_o += so;
        }
        Rational sum_pairs = 0;
        for (const auto& row : pair_densities_oracle(g, spec)) {
            for (const auto& x : row) sum_pairs += x;
        }
        checks += 5;
        failures += (sum_v / nn != s) + (sum_c / nn != s) + (sum_i / nn != s) + (sum_o / nn != s) +
                    (sum_pairs / (nn * nn) != s);
    }
    return {failures == 0, "100 graphs, " + std::to_string(checks) + " exact identities, " +
                               std::to_string(failures) + " failures"};
}

Outcome blow_up_monotonicity() {
    const auto specs = all_specs(2, 4);
    std::size_t failures = 0;
    std::size_t checks = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 3 + seed % 5;
        const auto g = random_oriented_graph(n, 9000 + seed);
        for (std::size_t t : {2u, 3u}) {
            const auto b = blow_up(g, t);
            for (const StarSpec& spec : specs) {
                ++checks;
                if (density_report(b, spec).s_density < density_report(g, spec).s_density) ++failures;
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " comparisons, " + std::to_string(failures) + " decreases"};
}

Outcome construction_below_opt(unsigned workers) {
    bool ok = true;
    std::ostringstream detail;
    for (const StarSpec& spec : {StarSpec(2, 1), StarSpec(4, 2), StarSpec(3, 3), StarSpec(5, 1)}) {
        const double opt = solve_opt(spec).opt_value;
        double prev = 0.0;
        detail << spec.name() << ':';
        for (std::size_t n : {70u, 140u, 280u}) {
            const auto g = optimal_construction(spec, n, BuildMode::Balanced);
            const double s = to_double(density_report(g, spec, workers).s_density);
            ok = ok && s <= opt && s >= prev;
            if (n == 280) ok = ok && s >= 0.8 * opt;
            prev = s;
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.4f", s / opt);
            detail << buf;
        }
        detail << "  ";
    }
    return {ok, "s/OPT (exact) " + detail.str()};
}

Outcome exhaustive_cycle() {
    const SearchResult a = exhaustive_max(4, StarSpec(1, 1));
    const SearchResult b = exhaustive_max(4, StarSpec(1, 1));
    const auto& w = a.witness;
    bool cycle = w.arc_count() == 4;
    for (Vertex v = 0; v < 4; ++v) cycle = cycle && w.out_degree(v) == 1 && w.in_degree(v) == 1;
    // One cycle through all four vertices rather than two digons.
    Vertex v = 0;
    std::size_t steps = 0;
    do {
        v = w.out_neighbors(v).members().front();
        ++steps;
    } while (cycle && v != 0 && steps < 5);
    cycle = cycle && steps == 4;
    const bool ok = a.explored == 729 && a.best_count == 4 && cycle && a.witness == b.witness;
    return {ok, "best_count " + std::to_string(a.best_count) + " over " + std::to_string(a.explored) +
                    " graphs, directed 4-cycle witness: " + (cycle ? "yes" : "no")};
}

Outcome degree_bound(unsigned workers) {
    const auto specs = all_specs(6, 9);
    std::size_t violations = 0;
    std::size_t checks = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 8 + seed % 13;
        const double p = 0.1 + 0.8 * static_cast<double>((seed * 7) % 17) / 16.0;
        const auto g = random_oriented_graph(n, 20000 + seed, p);
        for (const StarSpec& spec : specs) {
            ++checks;
            violations += check_degree_bound(g, spec, workers).size();
        }
    }
    return {violations == 0, std::to_string(checks) + " (graph, spec) pairs over 1000 graphs and " +
                                 std::to_string(specs.size()) + " specs, " + std::to_string(violations) + " violations"};
}

Outcome lemma_checks() {
    const auto checks = lemma_suite({});
    bool ok = true;
    std::ostringstream detail;
    for (const LemmaCheck& c : checks) {
        ok = ok && c.passed();
        detail << c.name << ' ' << c.failures << '/' << c.trials << "; ";
    }
    return {ok, detail.str()};
}

Outcome arithmetic_sweep() {
    const SweepReport r = arithmetic_sweeps(kSweepMinM, kSweepMaxM);
    const double a8 = to_double(sweep_a8_expression(6));
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu checks, %zu failures, m=6 value %.4f", r.checks.size(), r.failures(), a8);
    return {r.failures() == 0 && std::abs(a8 - 1.727) <= 1e-3, buf};
}

}  // namespace

int main() {
    const unsigned workers = default_workers();
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "smallest asymmetric star reproduces 0.2025", 1.0, paper_example},
        {2, "series approximation within 1e-7 for S_{4,2}", 1.0, taylor_precision},
        {3, "fast count equals oracle", 120.0, oracle_equivalence},
        {4, "probabilistic identities hold exactly", 60.0, probabilistic_identities},
        {5, "blow-ups never decrease s", 120.0, blow_up_monotonicity},
        {6, "constructions respect OPT and improve with n", 600.0, [&] { return construction_below_opt(workers); }},
        {7, "exhaustive n=4 extremum for S_{1,1}", 1.0, exhaustive_cycle},
        {8, "universal degree bound", 300.0, [&] { return degree_bound(workers); }},
        {9, "lemma suite", 60.0, lemma_checks},
        {10, "arithmetic sweep over m in [6, 64]", 1.0, arithmetic_sweep},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_s;
        const bool passed = o.passed && in_time;
        if (!passed) ++failed;
        std::printf("[%s] %2d. %s (%.2fs, limit %.0fs)%s\n      %s\n", passed ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.limit_s, in_time ? "" : " over time budget", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
