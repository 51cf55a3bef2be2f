#pragma once

/*
 * Chirotopal tropical membership for Gr(3,n), n = 6,7, and the linear-route
 * filter through the 40 degree-9 monomials of the E6 arrangement.
 *
 * A weight vector passes the membership criterion when, for every signed
 * relation, the minimum over the positive-part monomials equals the minimum
 * over the negative-part monomials.  Relations are twisted by a chirotope
 * before testing: a monomial moves between the parts when its sign flips.
 * All comparisons are exact over the rationals.
 */

#include "pezzo/numeric.hpp"
#include "pezzo/pezzotope.hpp"
#include "pezzo/subsystems.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace pezzo {

// coordinates of Pluecker weight space: sorted triples in lexicographic
// order; index_of_triple accepts any order of distinct entries
std::vector<std::array<int, 3>> plucker_triples(int n);
int triple_index(int n, int i, int j, int k);

// a relation split into positive and negative parts; each monomial is a
// sorted multiset of coordinate indices (tropical evaluation is the sum of
// the indexed weight entries, so scalar coefficients are irrelevant)
struct SignedRelation {
    std::vector<std::vector<int>> pos, neg;
};

// the three-term quadratic relations p_{Sab}p_{Scd} - p_{Sac}p_{Sbd} +
// p_{Sad}p_{Sbc} over singleton S; 30 of them for n = 6, 105 for n = 7.
// The first argument is the row count of the matrices (always 3 here).
std::vector<SignedRelation> plucker_relations(int three, int n);

struct Chirotope {
    int n = 0;
    std::vector<int> signs;    // +-1 per sorted triple, in plucker_triples order
    RatMatrix witness;         // a 3 x n realization

    // sign on an arbitrary ordering of distinct indices (alternating)
    int sign(int i, int j, int k) const;
};

// signs from the maximal minors of a 3 x n matrix; throws when a minor
// vanishes (the configuration is not in general position)
Chirotope chirotope_from_config(const RatMatrix& m);

// relations after the chirotope sign substitution p_t -> sign(t) p_t;
// throws when some relation ends up with an empty part (the sign map is
// not a chirotope of the right kind for these relations)
std::vector<SignedRelation> twist_relations(const std::vector<SignedRelation>& rels,
                                            const Chirotope& chi);

// the membership criterion itself, on pre-twisted relations
bool membership_twisted(const std::vector<Rat>& w,
                        const std::vector<SignedRelation>& twisted);
// convenience: twist, then test
bool membership(const std::vector<Rat>& w,
                const std::vector<SignedRelation>& rels, const Chirotope& chi);

// canonical representative of w modulo the torus lineality (the vectors
// counting occurrences of one index; their span contains the all-ones
// vector).  Two weight vectors define the same ray datum iff they agree.
std::vector<Rat> lineality_canonical(int n, const std::vector<Rat>& w);

// searches random small-integer 3 x n configurations until the set of
// coordinate rays e_t passing membership equals target_labels; deterministic
// for a fixed seed.  Throws after `budget` draws, reporting the statistics.
Chirotope find_region_chirotope(int n,
                                const std::vector<std::array<int, 3>>& target_labels,
                                unsigned long long seed = 2026,
                                long long budget = 2000000);

// the 65 rays of the tropical Grassmannian Gr(3,6) in the e/f/g naming:
// 20 coordinate rays, 15 four-term f-vectors, 30 g-vectors (the 90 ordered
// g-index choices fall 3-to-1 modulo lineality; each class is named by its
// lexicographically least representative)
struct TropRay {
    std::string name;
    std::vector<Rat> v;
};
std::vector<TropRay> gr36_ray_catalog();

struct Gr36Report {
    std::vector<std::string> passing_rays;                           // expect 15
    std::vector<std::pair<std::string, std::string>> passing_pairs;  // expect 60
    // vertex index (0-based, catalog order) each passing ray maps to
    std::vector<int> ray_vertex;
    bool matches_graph = false;  // passing pairs == edges of the 15-vertex graph
};

// runs membership over the 65-ray catalog and over the pairwise sums of the
// passing rays, then matches the result against the 15-vertex graph
// (coordinate rays to the triple-root vertices by label, g-rays to the
// nine-root vertices by their pair-root partition)
Gr36Report gr36_ray_and_pair_filter(const Chirotope& chi);

struct Gr37Report {
    std::vector<std::string> candidates;  // 10 coordinate rays + 3 two-term sums
    bool all_candidates_pass = false;
    std::vector<std::pair<std::string, std::string>> passing_pairs;
    // catalog vertex index assigned to each of the three sum rays
    std::array<int, 3> sum_vertex = {-1, -1, -1};
    // passing non-edge pairs (all among the coordinate rays)
    std::vector<std::pair<std::string, std::string>> extraneous_pairs;
    bool matches_induced_subgraph = false;
};

// membership over the 13 candidate rays for Gr(3,7) and their pairwise
// sums.  The pass set must equal the induced subgraph of the 34-vertex
// graph on the corresponding vertices plus the extraneous non-edge pairs;
// the three sum rays are assigned to vertices by exhaustive matching.
Gr37Report gr37_partial_filter(const Chirotope& chi);

struct YoshidaReport {
    int circuit_count = 0;      // expect 270
    int a2_image_count = 0;     // expect 40 (from 120 flats, fibers of size 3)
    int fiber_size = 0;
    std::vector<int> a1_passing;         // positive-root indices, expect 10
    std::vector<int> a2_image_passing;   // image indices, expect 5
    std::vector<std::pair<int, int>> passing_pairs;  // among the 15, expect 60
    bool matches_graph = false;
};

// the linear route for n = 6: the 40 degree-9 products over the nine-root
// systems span a 10-dimensional space; the four-term linear circuits among
// them (270) serve as membership relations for the images of the 36 + 120
// Bergman rays under the incidence matrix
YoshidaReport yoshida_route();

}  // namespace pezzo
