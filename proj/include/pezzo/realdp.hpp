#pragma once

/*
 * Exact census of the polygonal subdivision of real del Pezzo surfaces.
 *
 * A configuration of n = 5..7 points in the real projective plane determines
 * lines F_ij, conics through five of the points, and (for n = 7) nodal
 * cubics.  Removing these curves cuts the plane into regions; blowing up the
 * base points turns the regions into the polygons of the surface
 * subdivision.  Everything here runs on exact rational arithmetic: the
 * arrangement is built on the double cover (the sphere), where every curve
 * is the zero set of a homogeneous form and sign vectors are well defined.
 *
 * The only irrational intersections that can occur are the two points of
 * F_ij against the conic missing both i and j (n = 7 only), plus the branch
 * parameters at a cubic's node.  Both are roots of explicit quadratics and
 * are handled by exact root isolation; every other crossing is forced
 * rational by Bezout through shared base points.
 */

#include "pezzo/lattice.hpp"
#include "pezzo/numeric.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace pezzo {

using Vec3 = std::array<Rat, 3>;

struct PointConfig {
    int n = 0;
    RatMatrix m;  // 3 x n, columns are homogeneous point coordinates
};

PointConfig config_from_ints(const std::vector<std::vector<int>>& rows);

// A plane curve as a homogeneous ternary form, dense in a fixed monomial
// order per degree.  Labels follow the surface classes: "F12", "G1" (n<=6),
// "G12"/"H1" (n=7), plus "G" for the single conic of n=5.
struct PlaneCurve {
    std::string label;
    int degree = 0;
    std::vector<int> through;  // base point indices lying on the curve
    int node = -1;             // base point index of the node, cubics only
    std::vector<std::array<int, 3>> mons;  // exponent triples
    std::vector<Rat> coeff;

    Rat eval(const Vec3& p) const;
    Vec3 gradient(const Vec3& p) const;
};

struct CurveSet {
    int n = 0;
    std::vector<PlaneCurve> curves;   // F block, then G block, then H block
    std::vector<Vec3> base_points;    // primitive integer representatives

    int index_of(const std::string& label) const;
};

// Builds the curve set and certifies genericity: all point triples
// independent, no six points on a conic, no three lines concurrent away
// from the base points, and no line tangent to a conic at a base point.
// Throws std::runtime_error naming the witness.
CurveSet validate_general(const PointConfig& cfg);

// All projective intersection points of two curves, as primitive integer
// representatives.  Shared base points come from label bookkeeping; the
// remaining crossings are recovered by restricting one curve to a rational
// parametrization of the other and splitting off the known roots.
std::vector<Vec3> curve_intersection(const CurveSet& cs, int a, int b);

struct Face {
    int size = 0;                      // edge count on the blown-up surface
    std::vector<std::string> labels;   // sorted boundary classes, E's included
    Vec3 sample;                       // interior point of one spherical lift
};

struct RegionCensus {
    int n = 0;
    long long v = 0, e = 0, f = 0;     // counts on the blown-up surface
    std::vector<Face> faces;
    std::map<int, int> size_census;    // face size -> count
    long long sign_vector_count = 0;   // distinct sign vectors on the sphere
};

// Full census for n = 5 or 6: sphere arrangement with rotation systems,
// face tracing, antipodal quotient, and the exceptional-circle bookkeeping.
// The sign vectors are counted by an independent walk along every curve
// (two-sided arc samples), and the two pipelines must agree.
RegionCensus blowup_census(const PointConfig& cfg);

// Sign-vector count alone; also valid for n = 7 where the polygon structure
// is out of scope.
long long sign_vector_count(const PointConfig& cfg);

struct CensusDiff {
    std::vector<std::string> missing;  // fixture faces the census lacks
    std::vector<std::string> extra;    // census faces the fixture lacks
    bool match = false;
};

// Compares the face label sets against the embedded reference lists for the
// fixture matrix (n = 6 only).
CensusDiff census_fixture_compare(const RegionCensus& census);

struct DoubleSixReport {
    std::vector<std::string> absent;        // classes missing from triangles
    std::array<std::string, 6> first, second;  // the two sextuples, partnered
    bool is_double_six = false;
    bool unique_triangle_avoiding = false;  // among all 36 double-sixes
    std::vector<int> pentagon_counts;       // in the order of 'absent'
    bool others_uniform = false;            // remaining 15: 2 / 12 / 6 faces
};

DoubleSixReport double_six_check(const RegionCensus& census);

// Pairwise-disjoint exceptional classes (six for n=6, five for n=5) none of
// which bounds the face.  Every subdivision vertex lies on exactly two
// curves, so avoiding the boundary labels already makes the set disjoint
// from the face closure; blowing it down flattens the face into a convex
// polygon in the plane.  Empty when no witness exists.
std::vector<std::string> blowdown_witness(const RegionCensus& census, int face_index);

struct LedgerLine {
    std::string statement;
    Int lhs = 0, rhs = 0;
    bool ok = false;
};

// The Euler characteristic bookkeeping around the census: surface counts,
// the fibration products, and the coconic boundary strata arithmetic.
std::vector<LedgerLine> euler_ledger();

}  // namespace pezzo
