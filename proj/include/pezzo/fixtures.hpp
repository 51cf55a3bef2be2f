#pragma once

/*
 * Embedded reference datasets.  Every table here is a transcription of
 * published data that the rest of the code re-derives and compares against;
 * derivation mismatches are test failures, never silent overrides.
 *
 * Root tokens: "12" is the pair root (d1 - d2 hyperplane), "123" the triple
 * root (d1 + d2 + d3), a single digit "5" the degree-2 root whose d-form
 * omits d5, and "s" the six-term sum root of the n = 6 system.
 */

#include <array>
#include <string>
#include <vector>

namespace pezzo::fixtures {

// ---- pezzotope vertex catalogs ----

// E6: ten A1 vertices (triple roots)
extern const std::array<const char*, 10> e6_a1_vertices;
// E6: five A2x3 vertices, nine roots each, grouped in three A2 factors
extern const std::array<std::array<const char*, 9>, 5> e6_a2x3_vertices;

// E7: ten A1 vertices
extern const std::array<const char*, 10> e7_a1_vertices;
// E7: twelve A2 vertices
extern const std::array<std::array<const char*, 3>, 12> e7_a2_vertices;
// E7: nine A3x2 vertices (six from trivalent node pairs, three antipodal)
extern const std::array<std::array<const char*, 12>, 9> e7_a3x2_vertices;
// E7: three A7 vertices, 28 positive roots each
extern const std::array<std::array<const char*, 28>, 3> e7_a7_vertices;

// ---- pezzotope geometry fixtures ----

// 15 points in R^4 (columns) whose convex hull realizes the E6 pezzotope;
// column i corresponds to vertex u_{i+1} of the graph
extern const std::array<std::array<int, 15>, 4> firsching_matrix;

// the 45 vertex quadruples of the E6 pezzotope, 1-based u-indices; these are
// simultaneously the tetrahedra of the clique complex, the facets of the
// convex realization, and the denominators of the E6 amplitude
extern const std::array<std::array<int, 4>, 45> e6_amplitude_quadruples;

// monomial supports of the fifteen E6 u-equations: the j with {i,j} a
// non-edge of G(E6), 1-based
extern const std::array<std::vector<int>, 15> e6_u_nonneighbors;

// monomial supports of the thirty-four E7 u-equations, same convention and
// the same published vertex numbering as e7_nonedge_pairs_text below
extern const std::array<std::vector<int>, 34> e7_u_nonneighbors;

// the 264 quadratic generators of the E7 Stanley-Reisner ideal, kept in the
// exact comma-separated "si*sj" form of the published computer algebra run
extern const char* const e7_nonedge_pairs_text;

// the five combinatorial types of E7 pezzotope facets: dual-simple f-vector
// (f0..f4 of the simple 5-polytope) and the 1-based members of each class
struct FacetClass {
    std::array<int, 5> simple_fvector;
    std::vector<int> members;
};
extern const std::array<FacetClass, 5> e7_facet_classes;

// ---- real cubic surface census fixtures ----

// six points in the real projective plane (columns, homogeneous) whose
// blow-up carries the reference polygonal subdivision below
extern const std::array<std::array<int, 6>, 3> example_cubic_matrix;

// the subdivision of that surface: each string lists the boundary classes
// of one face ("E4 F24 G2" is the triangle cut out by those three lines)
extern const std::array<const char*, 10> e6_census_triangles;
extern const std::array<const char*, 90> e6_census_quadrilaterals;
extern const std::array<const char*, 30> e6_census_pentagons;

// the twelve classes missing from every triangle boundary, in the printed
// two-row order (column i of the first row partners column i of the second),
// and the printed per-class pentagon counts.  The face lists above and these
// counts are kept exactly as published; the tests document where exact
// re-derivation corrects the hand-placed exceptional corners.
extern const std::array<const char*, 12> e6_triangle_free_double_six;
extern const std::array<int, 12> e6_double_six_pentagon_counts;

// seven points whose sign-vector census realizes the recorded count 1596
extern const std::array<std::array<int, 7>, 3> septic_point_matrix;
inline constexpr long long n7_sign_vector_count = 1596;
inline constexpr long long n7_expected_sign_vectors = 1612;  // 2 * 806

// ---- constants recorded but not recomputed here ----

// counts that are out of desk-scale reproduction: Y(3,8) solution count and
// the Goepel-parametrization ML degree
inline constexpr long long y38_ml_degree = 4884387;
inline constexpr long long goepel_ml_degree = 86400;
// Euler characteristics of X(3,n) used in ledger arithmetic
inline constexpr long long chi_x36 = 26, chi_x37 = 1272, chi_x38 = 188112;
// stratum counts of the boundary poset of Y(3,6)
inline constexpr std::array<long long, 8> y36_strata = {45, 270, 240, 720, 540, 40, 216, 40};

}  // namespace pezzo::fixtures
