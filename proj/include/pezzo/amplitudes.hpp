#pragma once

/*
 * Facet-sum amplitudes and the Mandelstam linear map.
 *
 * An amplitude here is a purely combinatorial object: a sum of reciprocals
 * 1/prod(s_i) with one term per facet of a simplicial complex.  Evaluation
 * is exact; nothing is ever expanded over a common denominator.
 */

#include "pezzo/numeric.hpp"
#include "pezzo/pezzotope.hpp"

#include <string>
#include <vector>

namespace pezzo {

struct ReciprocalSum {
    int degree = 0;                        // -(common term size)
    std::vector<std::string> labels;       // variable names, term indices 0-based
    std::vector<std::vector<int>> terms;   // sorted index sets, sorted overall
};

// One reciprocal term per facet of the complex, over variables s1..sN.
// Requires all facets of equal size (the complexes here are pure).
ReciprocalSum facet_amplitude(const CliqueComplex& cx);

// The six-particle biadjoint scalar amplitude: one term per triangulation
// of a hexagon, propagators labeled s_ij for cyclically adjacent pairs and
// s_ijk for the triple avoiding leaf 6 (its complement names the same
// invariant by momentum conservation).
ReciprocalSum biadjoint_m6();

// The five-particle analogue: five terms over the pentagon diagonals.
ReciprocalSum biadjoint_m5();

Rat evaluate(const ReciprocalSum& amp, const std::vector<Rat>& s);

struct MandelstamMap {
    std::vector<std::string> row_labels;   // the twenty s_ijk rows, then "t"
    IntMatrix matrix;                      // 20+1 rows x 15 columns
    int rank = 0;                          // 15
    // basis of the linear relations among the twenty-one forms; each
    // vector c satisfies sum_j c_j * s_{row j} = 0 identically in s_1..s_15
    std::vector<std::vector<Rat>> constraints;
};

// Reads the map off the exponent matrix of the fifteen u-coordinates: the
// coefficient of s_i in s_ijk is the exponent of the minor p_ijk in u_i,
// and t collects the conic-binomial exponent (t = s_1).  Only n = 6 has a
// published u-parametrization; other n throw.
MandelstamMap mandelstam_map(int n = 6);

}  // namespace pezzo
