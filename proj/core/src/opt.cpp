#include "ostar/opt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "ostar/error.hpp"
#include "ostar/parallel.hpp"

namespace ostar {

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr double kDiffStep = 1e-6;

void require_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorKind::DomainError, std::string(what) + " = " + std::to_string(x) + " outside [0,1]");
    }
}

void require_asymmetric(const StarSpec& spec) {
    if (spec.symmetric()) {
        throw Error(ErrorKind::WrongBranch, spec.name() + " has k = l; use the symmetric objective");
    }
}

void require_symmetric(const StarSpec& spec) {
    if (!spec.symmetric()) {
        throw Error(ErrorKind::WrongBranch, spec.name() + " has k != l; use the two-variable objective");
    }
}

double leaf_coefficient(const StarSpec& spec) { return to_double(spec.leaf_coefficient()); }

// Maximizes f on [lo, hi] by golden-section search until the bracket is
// narrower than `width`. Returns the best point seen.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double width) {
    double a = lo;
    double b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    double best_x = f(lo) >= f(hi) ? lo : hi;
    double best_f = std::max(f(lo), f(hi));
    while (b - a > width) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        }
        if (f1 > best_f) {
            best_f = f1;
            best_x = x1;
        }
        if (f2 > best_f) {
            best_f = f2;
            best_x = x2;
        }
    }
    return best_x;
}

double central_difference(const std::function<double(double)>& f, double x) {
    return (f(x + kDiffStep) - f(x - kDiffStep)) / (2.0 * kDiffStep);
}

// Root of the central-difference derivative inside [lo, hi] when it changes
// sign from + to -, otherwise `x`.
double polish_stationary(const std::function<double(double)>& f, double x, double lo, double hi) {
    double a = std::max(lo + kDiffStep, x - 1e-4);
    double b = std::min(hi - kDiffStep, x + 1e-4);
    if (!(a < b)) return x;
    double ga = central_difference(f, a);
    double gb = central_difference(f, b);
    if (!(ga > 0.0 && gb < 0.0)) return x;
    for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
        const double mid = 0.5 * (a + b);
        const double gm = central_difference(f, mid);
        if (gm > 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    const double root = 0.5 * (a + b);
    return f(root) >= f(x) - 1e-16 * std::abs(f(x)) ? root : x;
}

struct Cell {
    double lo;
    double hi;
};

Cell grid_cell(int index, int points, double lo, double hi) {
    const double step = (hi - lo) / (points - 1);
    return {lo + step * std::max(0, index - 1), lo + step * std::min(points - 1, index + 1)};
}

double grid_value(int index, int points, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(index) / (points - 1);
}

OptResult solve_symmetric(const StarSpec& spec, const SolverOptions& opt) {
    auto f = [&](double a) { return objective_sym(std::clamp(a, 0.0, 1.0), spec); };
    const int points = opt.grid_points;
    int best = 0;
    double best_f = -1.0;
    for (int i = 0; i < points; ++i) {
        const double v = f(grid_value(i, points, 0.0, 0.5));
        if (v > best_f) {
            best_f = v;
            best = i;
        }
    }
    const Cell cell = grid_cell(best, points, 0.0, 0.5);
    double alpha = golden_max(f, cell.lo, cell.hi, 1e-14);
    alpha = polish_stationary(f, alpha, cell.lo, cell.hi);

    OptResult r;
    r.alpha_star = alpha;
    r.opt_value = f(alpha);
    r.tol = std::abs(r.opt_value - best_f);
    r.inducibility = to_double(Rational(spec.prefactor())) * r.opt_value;
    r.conjectural = spec.m() < 6;
    return r;
}

OptResult solve_asymmetric(const StarSpec& spec, const SolverOptions& opt) {
    const double d_max = static_cast<double>(spec.k()) / spec.m();
    auto F = [&](double a, double d) { return objective_F(std::clamp(a, 0.0, 1.0), std::clamp(d, 0.0, 1.0), spec); };
    const int points = opt.grid_points;

    std::vector<double> row_best(static_cast<std::size_t>(points), -1.0);
    std::vector<int> row_arg(static_cast<std::size_t>(points), 0);
    parallel_for(static_cast<std::size_t>(points), opt.workers, [&](std::size_t i) {
        const double a = grid_value(static_cast<int>(i), points, 0.0, 0.5);
        for (int j = 0; j < points; ++j) {
            const double v = F(a, grid_value(j, points, 0.0, d_max));
            if (v > row_best[i]) {
                row_best[i] = v;
                row_arg[i] = j;
            }
        }
    });
    int bi = 0;
    for (int i = 1; i < points; ++i) {
        if (row_best[static_cast<std::size_t>(i)] > row_best[static_cast<std::size_t>(bi)]) bi = i;
    }
    const int bj = row_arg[static_cast<std::size_t>(bi)];
    const Cell acell = grid_cell(bi, points, 0.0, 0.5);
    const Cell dcell = grid_cell(bj, points, 0.0, d_max);

    double alpha = grid_value(bi, points, 0.0, 0.5);
    double d = grid_value(bj, points, 0.0, d_max);
    double value = F(alpha, d);
    double last_change = value;
    for (int sweep = 0; sweep < 500; ++sweep) {
        const double prev_alpha = alpha;
        const double prev_d = d;
        const double prev_value = value;
        alpha = golden_max([&](double a) { return F(a, d); }, acell.lo, acell.hi, 1e-14);
        d = golden_max([&](double x) { return F(alpha, x); }, dcell.lo, dcell.hi, 1e-14);
        value = F(alpha, d);
        last_change = std::abs(value - prev_value);
        const double moved = std::max(std::abs(alpha - prev_alpha), std::abs(d - prev_d));
        if (sweep > 0 && last_change < opt.tol && moved < 1e-13) break;
    }
    for (int round = 0; round < 20; ++round) {
        const double prev_alpha = alpha;
        const double prev_d = d;
        alpha = polish_stationary([&](double a) { return F(a, d); }, alpha, acell.lo, acell.hi);
        d = polish_stationary([&](double x) { return F(alpha, x); }, d, dcell.lo, dcell.hi);
        if (alpha == prev_alpha && d == prev_d) break;
    }

    OptResult r;
    r.alpha_star = alpha;
    r.d_star = d;
    r.opt_value = F(alpha, d);
    r.tol = last_change;
    r.inducibility = to_double(Rational(spec.prefactor())) * r.opt_value;
    r.conjectural = spec.m() < 6;
    return r;
}

}  // namespace

double f_majorant(double x, const StarSpec& spec) {
    require_unit(x, "x");
    const int k = spec.k();
    const int l = spec.l();
    const int m = spec.m();
    const double left = static_cast<double>(k - 1) / (m - 1);
    const double right = static_cast<double>(k) / m;
    if (x <= left) return leaf_coefficient(spec) * x;
    if (x <= right) return std::pow(x, k) * std::pow(1.0 - x, l);
    return to_double(spec.lambda0());
}

double f_star(double d, double alpha, const StarSpec& spec) {
    require_unit(alpha, "alpha");
    const int m = spec.m();
    return alpha * std::pow(1.0 - alpha, m) * f_majorant(d, spec) +
           leaf_coefficient(spec) * (1.0 - alpha) * std::pow(alpha, m) * (1.0 - d);
}

double objective_F(double alpha, double d, const StarSpec& spec) {
    require_asymmetric(spec);
    require_unit(alpha, "alpha");
    require_unit(d, "d");
    const int k = spec.k();
    const int l = spec.l();
    const int m = spec.m();
    return alpha * std::pow(1.0 - alpha, m) * std::pow(d, k) * std::pow(1.0 - d, l) +
           leaf_coefficient(spec) * (1.0 - alpha) * std::pow(alpha, m) * (1.0 - d);
}

Rational objective_F_exact(const Rational& alpha, const Rational& d, const StarSpec& spec) {
    require_asymmetric(spec);
    if (alpha < 0 || alpha > 1 || d < 0 || d > 1) throw Error(ErrorKind::DomainError, "(alpha, d) outside [0,1]^2");
    const auto k = static_cast<unsigned>(spec.k());
    const auto l = static_cast<unsigned>(spec.l());
    const auto m = static_cast<unsigned>(spec.m());
    const Rational one(1);
    return alpha * rpow(one - alpha, m) * rpow(d, k) * rpow(one - d, l) +
           spec.leaf_coefficient() * (one - alpha) * rpow(alpha, m) * (one - d);
}

double objective_sym(double alpha, const StarSpec& spec) {
    require_symmetric(spec);
    require_unit(alpha, "alpha");
    const int m = spec.m();
    return std::ldexp(alpha * std::pow(1.0 - alpha, m) + (1.0 - alpha) * std::pow(alpha, m), -m);
}

Rational objective_sym_exact(const Rational& alpha, const StarSpec& spec) {
    require_symmetric(spec);
    if (alpha < 0 || alpha > 1) throw Error(ErrorKind::DomainError, "alpha outside [0,1]");
    const auto m = static_cast<unsigned>(spec.m());
    const Rational one(1);
    return (alpha * rpow(one - alpha, m) + (one - alpha) * rpow(alpha, m)) / Rational(ipow(BigInt(2), m));
}

OptResult solve_opt(const StarSpec& spec, const SolverOptions& options) {
    if (!(options.tol > 0.0)) throw Error(ErrorKind::DomainError, "tolerance must be positive");
    if (options.grid_points < 3) throw Error(ErrorKind::DomainError, "grid needs at least 3 points");
    if (spec.k() == 1 && spec.l() == 1) {
        throw Error(ErrorKind::UnsupportedSpec,
                    "S_{1,1} is not covered: its extremal graphs are not orientations of complete bipartite graphs");
    }
    return spec.symmetric() ? solve_symmetric(spec, options) : solve_asymmetric(spec, options);
}

TaylorApprox taylor_approx(const StarSpec& spec) {
    require_asymmetric(spec);
    const double k = spec.k();
    const double l = spec.l();
    const double m = spec.m();
    TaylorApprox t;
    t.alpha_hat = (1.0 / (m + 1.0)) * (1.0 + l / (k * std::pow(m, m - 2.0)));
    t.d_hat = (k / m) * (1.0 - l / (k * std::pow(m, m)));
    // Anchor value F(1/(m+1), k/m) with the second-order correction on the
    // leaf term.
    const double head = std::pow(k, k) * std::pow(l, l) / std::pow(m + 1.0, m + 1.0);
    const double leaf = std::pow(k - 1.0, k - 1.0) * std::pow(l, l + 1.0) /
                        (std::pow(m + 1.0, m + 1.0) * std::pow(m - 1.0, m - 1.0));
    t.value_hat = head + leaf * (1.0 + l / (2.0 * k * std::pow(m, m - 3.0)));
    return t;
}

}  // namespace ostar
