#pragma once

/*
 * The pezzotope combinatorics: vertex graphs G(E6)/G(E7) over the subsystem
 * catalogs, their clique complexes, the homology-sphere certificate, the
 * Stanley-Reisner presentation with its Alexander dual, facet link types,
 * the exact convex-hull verification of the E6 realization, and the Weyl
 * orbit count of chamber structures.
 */

#include "pezzo/lattice.hpp"
#include "pezzo/numeric.hpp"
#include "pezzo/subsystems.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pezzo {

struct PezzoGraph {
    int n = 0;                                  // 6 or 7
    std::vector<Subsystem> vertices;            // catalog order: u_1 is index 0
    std::vector<std::pair<int, int>> edges;     // sorted pairs of vertex indices
    // census keyed by kind pair (smaller kind first in enum order)
    std::map<std::pair<SubsystemKind, SubsystemKind>, int> edge_census;
    // the finer split of the mixed edge groups
    int a1_a2_inclusion = 0, a1_a2_apart = 0;
    int a1_a3x2_inclusion = 0, a1_a3x2_special = 0;

    bool adjacent(int a, int b) const;
    std::vector<int> neighbors(int v) const;
};

// Derives the edge set from the subsystem root lists.  Orthogonality of the
// A1 roots gives the A1-A1 edges, subset tests give the inclusion groups,
// and the two containment predicates give the remaining mixed groups.
// Throws std::runtime_error naming the group whose size is off.
PezzoGraph build_graph(const RootCatalog& cat);

struct CliqueComplex {
    int vertex_count = 0;
    // faces_by_dim[k] lists the k-dimensional faces as sorted vertex tuples
    std::vector<std::vector<std::vector<int>>> faces_by_dim;

    std::vector<int> f_vector() const;
    int dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
    const std::vector<std::vector<int>>& facets() const { return faces_by_dim.back(); }
    long long euler_characteristic() const;

    // signed incidence of (k-1)-faces against k-faces, vertices sorted
    // ascending and boundary signs alternating by position
    IntMatrix boundary_matrix(int k) const;
};

CliqueComplex clique_complex(const PezzoGraph& g);

// a complex from an explicit facet list (used for reference spheres)
CliqueComplex complex_from_facets(int vertex_count,
                                  const std::vector<std::vector<int>>& facets);

struct HomologyReport {
    std::vector<int> betti;                 // rational Betti numbers b_0..b_d
    long long euler = 0;
    std::vector<int64_t> primes;
    bool torsion_free_evidence = false;     // ranks agree at every test prime
    bool certified_over_q = false;          // see the note in homology()
    std::vector<std::vector<int>> ranks_by_prime;   // boundary ranks per prime
};

// Computes Betti numbers of the complex.  Boundary ranks are taken modulo
// each of the given primes (all above 2^20); agreement across primes is the
// torsion evidence.  The rational Betti numbers are then pinned down
// exactly by a squeeze: connectivity gives b_0, modular ranks only
// underestimate rational ranks (so modular Betti bounds rational Betti from
// above), and the Euler characteristic closes the gap.  When the squeeze
// applies, certified_over_q is set without any rational elimination.
HomologyReport homology(const CliqueComplex& cx,
                        const std::vector<int64_t>& primes = {1048583, 1048589, 1048601});

// The quadratic Stanley-Reisner generators of the clique complex: one
// monomial s_i*s_j per non-edge, returned as sorted 1-based index pairs.
std::vector<std::pair<int, int>> stanley_reisner(const PezzoGraph& g);

// parses a comma-separated "si*sj" list into sorted 1-based pairs
std::vector<std::pair<int, int>> parse_monomial_pairs(const std::string& text);

// Alexander dual generators: the complement of each facet, sorted.
std::vector<std::vector<int>> alexander_dual(const CliqueComplex& cx);

// The published E7 tables index the 34 vertices differently from the
// subsystem catalog (the catalog groups by kind; the published run does
// not).  This finds a relabeling onto the graph given by a 1-based
// non-edge list: result[v] is the 0-based published index of catalog
// vertex v.  Empty when the graphs are not isomorphic.  The search is
// deterministic (first match in lexicographic order), and any choice is
// equally valid for comparing vertex classes, which are unions of
// automorphism orbits.
std::vector<int> graph_isomorphism(const PezzoGraph& g,
                                   const std::vector<std::pair<int, int>>& nonedges_1based);

struct FacetTypeReport {
    // simplicial f-vector of the vertex link of each u_i, in catalog order
    std::vector<std::vector<int>> link_fvectors;
    // matched class per vertex (index into the expected table), or -1
    std::vector<int> matched_class;
    bool all_matched = false;
};

// Classifies the facets of the pezzotope via vertex links in the dual
// complex.  For E6 the expected links are dual 3-associahedra (9,21,14) on
// u1..u10 and octahedra (6,12,8) on u11..u15; for E7 the five classes of
// the embedded table, matched through f-vector reversal (the link of u_i
// triangulates the boundary of the simple facet polytope's dual).
FacetTypeReport facet_links(const PezzoGraph& g, const CliqueComplex& cx);

struct HullReport {
    std::vector<std::vector<int>> facets;   // sorted 0-based column quadruples
    std::vector<int> f_vector;
    bool simplicial = false;
    bool every_column_is_vertex = false;
};

// Convex hull of the columns of a 4xN integer matrix by exhaustive
// orientation tests on all 4-subsets, in exact rational arithmetic.
// A quadruple is a facet when the remaining columns lie strictly on one
// side of its affine hyperplane.
HullReport hull_check(const std::vector<std::vector<int>>& matrix4xn);

struct RegionOrbit {
    long long orbit_size = 0;
    Int group_order = 0;
    Int stabilizer_order = 0;
};

// Size of the Weyl orbit of the whole vertex catalog, viewed as a set of
// root-index sets; 432 for E6 and 60480 for E7.
RegionOrbit region_orbit_count(const RootCatalog& cat);

}  // namespace pezzo
