#pragma once

#include <optional>

#include "ostar/rational.hpp"
#include "ostar/star_spec.hpp"

namespace ostar {

// Maximizer of the inducibility objective and the resulting inducibility.
// For k = l there is no d coordinate. opt_value is at the level of s(G);
// inducibility = (m+1)!/(k! l!) * opt_value.
struct OptResult {
    double alpha_star = 0.0;
    std::optional<double> d_star;
    double opt_value = 0.0;
    double inducibility = 0.0;
    double tol = 0.0;           // objective change in the last refinement sweep
    bool conjectural = false;   // m < 6: value is only conjectured optimal
};

struct TaylorApprox {
    double alpha_hat = 0.0;
    double d_hat = 0.0;
    double value_hat = 0.0;
};

// Concave non-decreasing majorant of x^k (1-x)^l:
//   linear with slope (k-1)^(k-1) l^l / (m-1)^(m-1) on [0, (k-1)/(m-1)],
//   x^k (1-x)^l on [(k-1)/(m-1), k/m], and lambda0 on [k/m, 1].
// DomainError outside [0, 1].
double f_majorant(double x, const StarSpec& spec);

// f_*(d) = alpha (1-alpha)^m f(d) + c (1-alpha) alpha^m (1-d), the majorized
// objective for fixed alpha.
double f_star(double d, double alpha, const StarSpec& spec);

// k > l objective:
//   alpha (1-alpha)^m d^k (1-d)^l + c (1-alpha) alpha^m (1-d),
//   c = (k-1)^(k-1) l^l / (m-1)^(m-1).
// WrongBranch when k = l; DomainError outside [0,1]^2.
double objective_F(double alpha, double d, const StarSpec& spec);
Rational objective_F_exact(const Rational& alpha, const Rational& d, const StarSpec& spec);

// k = l objective: 2^(-2k) (alpha (1-alpha)^(2k) + (1-alpha) alpha^(2k)).
double objective_sym(double alpha, const StarSpec& spec);
Rational objective_sym_exact(const Rational& alpha, const StarSpec& spec);

struct SolverOptions {
    double tol = 1e-12;
    int grid_points = 1024;
    unsigned workers = 1;
};

// Global maximization over [0, 1/2] (x [0, k/m] for k > l): grid bracket,
// coordinate-wise golden section, then bisection on central-difference
// partials. UnsupportedSpec for S_{1,1}.
OptResult solve_opt(const StarSpec& spec, const SolverOptions& options = {});

// Expansion of the maximizer and the maximum around (1/(m+1), k/m).
// WrongBranch for k = l.
TaylorApprox taylor_approx(const StarSpec& spec);

}  // namespace ostar
