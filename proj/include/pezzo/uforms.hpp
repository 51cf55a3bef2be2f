#pragma once

/*
 * The u-equation systems attached to the pezzotope graphs, their exact
 * parametrizations, and the canonical 4-form on the six-point moduli space.
 *
 * A perfect system on a graph has one equation u_i + prod u_j = 1 per
 * vertex, the product running over the non-neighbors of i.  The fifteen
 * u-coordinates of the six-point moduli space have two exact realizations:
 * as ratios of Pluecker coordinates of a 3x6 matrix, and as ratios of
 * root-hyperplane products in the cuspidal-cubic chart.  Both are evaluated
 * here in exact rational arithmetic and cross-checked against each other.
 */

#include "pezzo/numeric.hpp"
#include "pezzo/pezzotope.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace pezzo {

struct USystem {
    int vars = 0;
    // supports[i] lists j (1-based, sorted) with u_{i+1} + prod u_j = 1
    std::vector<std::vector<int>> supports;
};

// One equation per vertex, supported on the non-neighbors.  Vertex order is
// the catalog order of the graph.
USystem u_system_from_graph(const PezzoGraph& g);

// The five-point system: u_i pairs with the two variables at pentagon
// distance two, so each support is {i-1, i+1} cyclically.
USystem m05_u_system();

// The fifteen u-coordinates of a generic 3x6 matrix, as exact ratios of
// maximal minors (u_1 carries the conic binomial).  Throws std::runtime_error
// naming the vanishing factor on the boundary divisors.
std::array<Rat, 15> plucker_u_values(const RatMatrix& m);

// The same fifteen values from the cuspidal-cubic chart: each u_i is a
// ratio of four root forms in d_1..d_6 over four others.  Throws naming the
// root hyperplane that the input hits.
std::array<Rat, 15> dunit_u_values(const std::array<Rat, 6>& d);

// The cuspidal chart matrix itself: rows 1, d_i, d_i^3.
RatMatrix cuspidal_matrix(const std::array<Rat, 6>& d);

// Exponents of u_i (1-based) over the maximal minors: column-triple tokens
// like "135", plus "q" for the conic binomial (only u_1 uses it).
std::map<std::string, int> u_minor_exponents(int i);

// Residual of equation i (0-based) of the fifteen-equation system:
// u_{i+1} + prod - 1, identically zero on the moduli space.
Rat u_equation_residual(const std::array<Rat, 15>& u, int i);

// Rank of the 15 x 4 matrix of logarithmic partials of the u-coordinates
// with respect to the four free entries of the normalized chart
//   [ 1 0 0 1  1  1 ]
//   [ 0 1 0 1 x1 x3 ]
//   [ 0 0 1 1 x2 x4 ],
// computed exactly at the given chart point and re-checked modulo a prime.
int jacobian_rank(const std::array<Rat, 4>& x);

// The five cross-ratio coordinates of the five-point moduli space at a
// plane chart point (x, y); throws on the arrangement lines.
std::array<Rat, 5> m05_u_values(const Rat& x, const Rat& y);

// Sign patterns of (u_1..u_5) over the regions of the five-line arrangement
// x, y, 1-x, 1-y, y-x in the real plane; exactly 12 of the 32 occur.
std::set<std::string> m05_sign_census();

// The canonical 4-form evaluated in the normalized chart above: the wedge
// of the four dlog arguments as a determinant of exact logarithmic partials.
// Throws naming the factor when the chart point lies on a pole divisor.
Rat omega_chart_eval(const std::array<Rat, 4>& x);

// A 4-form written multiplicatively: each row is an exponent vector over
// the 36 positive-root coordinates, and the form is the wedge of the dlogs.
struct LogForm {
    std::vector<std::vector<int>> rows;  // k x 36
};

// The canonical form over the root basis, rows in the printed argument
// order.  Root-form signs only shift the form by a constant and are dropped
// by dlog, so the exponents alone determine it.
LogForm omega_root_form();

struct OmegaOrbit {
    long long orbit_size = 0;       // 432
    Int group_order = 0;            // 51840
    Int stabilizer_order = 0;       // 120
};

// Orbit of the canonical form under the Weyl group acting by permutation of
// the root coordinates.  Exponent matrices over-count: the 36 dlog root
// forms are linearly dependent in the six chart variables, so distinct
// matrices can be the same form.  Forms are therefore identified by their
// fifteen wedge components as exact rational functions of d, evaluated at
// fixed generic rational sample points, up to one global sign.  The orbit
// partition is recomputed on a second, independent point set and both runs
// must agree.
OmegaOrbit omega_orbit_count();

}  // namespace pezzo
