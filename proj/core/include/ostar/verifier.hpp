#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ostar/digraph.hpp"
#include "ostar/rational.hpp"
#include "ostar/star_spec.hpp"

namespace ostar {

struct DegreeViolation {
    Vertex v = 0;
    Rational s_v;
    Rational bound;
};

// Checks (m+1) s(v) <= lambda0 rho^m + lambda1 rho (1-rho)^(m-1) for every
// vertex, exactly. Returns the violators.
std::vector<DegreeViolation> check_degree_bound(const OrientedGraph& g, const StarSpec& spec, unsigned workers = 1);

// Parameters of the split (X, Y = V \ X). Fields undefined for an empty
// side are absent. Measured in the normalized orientation (k >= l): for a
// spec with more in-leaves the graph is reversed first.
struct PartitionStats {
    Rational alpha;                    // mu(X)
    std::optional<Rational> beta;      // max_{y in Y} rho_Y(y)
    std::optional<Rational> gamma;     // min_{x in X} rho^-_Y(x)
    std::optional<Rational> D;         // min_{x in X} rho(x)
    double S = 0.0;                    // (m+1) min_v s(v)
    std::optional<Rational> S_exact;   // present when S was counted exactly
    double S_radius = 0.0;             // 5-sigma radius when S is estimated
    std::optional<Rational> S1;        // min_{x in X} rho^+_Y(x)^k rho^-_Y(x)^l
    std::optional<Rational> S2;        // S1 - (m-1)/((m+1) C(m,k)) (alpha+beta)(1-alpha)(1-D)^(m-2)
    std::optional<Rational> d;         // Pr[no arc y -> x], averaged over X
    std::optional<Rational> d_from_y;  // the same probability averaged over Y
    Rational d0;                       // non-adjacent (x, y) pairs / n^2
    VertexSet x_side;
};

struct PartitionOptions {
    std::size_t exact_limit = 200;
    std::uint64_t mc_samples = 1u << 15;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

// X defaults to { v : rho(v) >= 1/2 }.
PartitionStats partition_stats(const OrientedGraph& g, const StarSpec& spec, const std::optional<VertexSet>& x_side = {},
                               const PartitionOptions& options = {});

struct SweepCheck {
    std::string name;
    int m = 0;
    double value = 0.0;
    double bound = 0.0;
    bool exact = false;
    bool passed = false;
};

struct SweepReport {
    int m_lo = 0;
    int m_hi = 0;
    std::vector<SweepCheck> checks;
    std::size_t failures() const;
};

inline constexpr int kSweepMinM = 6;
inline constexpr int kSweepMaxM = 64;

// Closed-form inequalities in m used by the upper-bound argument. RangeError
// unless kSweepMinM <= m_lo <= m_hi <= kSweepMaxM.
SweepReport arithmetic_sweeps(int m_lo, int m_hi);

// (m+1)^2/(m(m-1)) + (m+1)(m-1)^(m-2)/m^m
Rational sweep_a8_expression(int m);

struct LemmaCheck {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double worst = 0.0;  // largest relative excess (or distance outside the window)
    bool passed() const { return failures == 0; }
};

struct LemmaOptions {
    std::uint64_t seed = 0;
    std::uint64_t samples = 100000;
    std::size_t grid = 10000;
    std::size_t alphas = 100;
    int m_lo = 6;
    int m_hi = 12;
    double slack = 1e-12;
};

// Sampled and grid checks of the basic inequalities:
//   x^a y^b <= a^a b^b/(a+b)^(a+b) (x+y)^(a+b)
//   (a-x)(b-y) <= ab (1 - (x+y)/(a+b))
//   the majorant f is non-decreasing, midpoint-concave and above x^k(1-x)^l
//   the grid maximizer of f_* lies in [(k-1)/(m-1), k/m] (1e-3 window)
std::vector<LemmaCheck> lemma_suite(const LemmaOptions& options = {});

struct StabilityReport {
    double epsilon = 0.0;
    double alpha_star = 0.0;
    double d_star = 0.0;
    VertexSet x;
    VertexSet y1;
    VertexSet y2;
    // 1: |mu(X) - alpha|; 2: worst Y1/Y2 size deviation; 3: internal arcs / n^2;
    // 4-6: largest per-vertex deviation from the degree window.
    std::array<double, 6> condition_deltas{};
    // Vertices of X, Y1, Y2 outside their windows (conditions 4-6).
    std::array<std::size_t, 3> violating_counts{};
    std::array<bool, 6> satisfied{};
};

// X = { rho >= 1/2 }, Y2 = { y not in X : rho^-_X(y) >= mu(X) - eps },
// Y1 = the rest. Y1 windows: out-degree (k-1)/(m-1) alpha and in-degree
// l/(m-1) alpha toward X, the orientation the bipartite construction has.
// WrongBranch for k = l; DomainError for eps <= 0.
StabilityReport stability_report(const OrientedGraph& g, const StarSpec& spec, double epsilon);

}  // namespace ostar
