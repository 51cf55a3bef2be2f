#pragma once

/*
 * Numerical critical-point solver for logarithmic potentials of the form
 * sum_i s_i log f_i(x) on complements of hypersurface arrangements, by
 * monodromy loops and parameter homotopy.
 *
 * The systems are kept as rational functions throughout: equations are
 * sums of s_i * (grad f_i) / f_i and are never cleared of denominators,
 * which would introduce spurious solutions on the removed divisors.
 * Critical-point counts equal the (signed) Euler characteristic of the
 * complement, so each model carries its expected count as a target.
 */

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace pezzo {

using Cx = std::complex<double>;

// sparse multivariate polynomial, up to 8 variables, double coefficients
// (all models here have small integer coefficients, exactly representable)
struct SPoly {
    int nvars = 0;
    struct Term {
        double c;
        std::array<int, 8> e;
    };
    std::vector<Term> terms;

    Cx operator()(const std::vector<Cx>& x) const;
    SPoly diff(int j) const;
    bool is_constant() const;
};

SPoly sp_const(int nvars, double c);
SPoly sp_var(int nvars, int j);
SPoly operator+(const SPoly& a, const SPoly& b);
SPoly operator-(const SPoly& a, const SPoly& b);
SPoly operator*(const SPoly& a, const SPoly& b);

// potential sum_i s_i log f_i; only nonconstant factors are kept since
// constant ones contribute nothing to the critical equations
struct LikelihoodSystem {
    std::string model;
    int nvars = 0;
    std::vector<SPoly> factors;
    std::vector<std::string> labels;
    // cached partial derivatives, filled by finalize()
    std::vector<SPoly> dfirst;   // [i * nvars + j]
    std::vector<SPoly> dsecond;  // [(i * nvars + j) * nvars + k]
    void finalize();

    int m() const { return static_cast<int>(factors.size()); }
    // critical equations F_j = sum_i s_i df_i/dx_j / f_i
    std::vector<Cx> eval_equations(const std::vector<Cx>& x,
                                   const std::vector<Cx>& s) const;
    // Jacobian of the equations in x; this is also the Hessian of the
    // potential, used for the amplitude sums
    std::vector<std::vector<Cx>> hessian(const std::vector<Cx>& x,
                                         const std::vector<Cx>& s) const;
};

// models: "m05" (2 unknowns, five lines), "s5o" (five fixed plane points,
// moving sixth point), "s6o" / "s6o-eckardt" (six fixed points, moving
// seventh; the second configuration has one triple of concurrent joins),
// "y36" (four-variable chart, 16 minors and the conic condition), "y37"
// (six-variable chart, slow), "ae6" (36 reflection hyperplanes, slow)
LikelihoodSystem likelihood_system(const std::string& model);

// expected number of critical points for generic parameters
long long ml_target(const std::string& model);

struct TrackerConfig {
    double path_tol = 1e-9;          // corrector tolerance along paths
    double certify_residual = 1e-10;
    double dedup_radius = 1e-6;
    double min_step = 1e-7;
    int max_steps = 6000;
    int newton_iters = 7;
    int stale_loop_budget = 30;      // loops without progress before giving up
    unsigned long long seed = 1;
};

struct Solution {
    std::vector<Cx> point;
    double newton_residual = 0.0;
    bool certified = false;
};

struct SolutionSet {
    std::string model;
    long long target = 0;
    std::vector<Cx> params;          // parameter vector the points sit over
    std::vector<Solution> solutions;
    int loops_used = 0;
    unsigned long long seed = 0;
    long long deficit() const {
        return target - static_cast<long long>(solutions.size());
    }
};

// the two critical points of the five-line planar potential, in radicals;
// throws on degenerate parameters (vanishing leading coefficient or
// discriminant, or a breakdown in the back substitution)
std::array<std::array<Cx, 2>, 2> closed_form_y35(const std::array<double, 5>& s);

// populate the solution set over a random complex parameter vector by
// tracking monodromy loops; stops at target_count distinct certified
// points or when the loop budget is exhausted (deficit reported, never
// silently dropped)
SolutionSet monodromy_solve(const LikelihoodSystem& sys, long long target_count,
                            const TrackerConfig& cfg);

// carry a solved set to the given parameter vector by parameter homotopy
// through a random complex waypoint; solutions are re-polished and
// re-certified at the target
SolutionSet transport(const LikelihoodSystem& sys, const SolutionSet& base,
                      const std::vector<Cx>& target_params,
                      const TrackerConfig& cfg);

// sum of (1 / det Hessian) * integrand^2 over the critical points of the
// set, at its own parameters; the integrand is fixed per model ("m05" and
// "y36" only).  Throws if a Hessian is near singular.
Cx cegm_sum(const LikelihoodSystem& sys, const SolutionSet& set);

struct MlReportRow {
    std::string model;
    long long target = 0;
    long long found = 0;
    long long certified = 0;
    int loops_used = 0;
    unsigned long long seed = 0;
};

// run the fast models (and the slow ones on request) and tabulate observed
// counts against the expected ones
std::vector<MlReportRow> ml_degree_report(unsigned long long seed,
                                          bool slow = false);

}  // namespace pezzo
