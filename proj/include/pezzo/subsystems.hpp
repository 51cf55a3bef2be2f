#pragma once

/*
 * Root subsystems of E6/E7: enumeration of the families labelling moduli
 * coordinates and pezzotope vertices, incidence matrices with exact ranks,
 * the embedded vertex catalogs with type validation, and Eckardt triples.
 */

#include "pezzo/lattice.hpp"
#include "pezzo/numeric.hpp"

#include <string>
#include <vector>

namespace pezzo {

enum class SubsystemKind { A1, A2, A2x3, A3x2, A1x7, A7 };

std::string kind_name(SubsystemKind k);

struct Subsystem {
    SubsystemKind kind;
    std::vector<int> roots;                  // sorted positive-root indices
    std::vector<std::vector<int>> factors;   // connected components, sorted

    bool operator<(const Subsystem& o) const { return roots < o.roots; }
    bool operator==(const Subsystem& o) const { return roots == o.roots; }
};

// Parses a fixture token ("12", "135", "5", "s") into a positive root index.
int parse_root_token(const RootCatalog& cat, const std::string& token);

// Checks closure under root addition, splits into connected factors, and
// verifies each factor is of type A_k with the sizes the kind demands.
// Throws std::runtime_error with a diagnostic when validation fails.
Subsystem validate_subsystem(const RootCatalog& cat, std::vector<int> roots,
                             SubsystemKind kind);

// All A2 subsystems (three positive roots each); 120 of them in E6.
std::vector<Subsystem> enumerate_a2(const RootCatalog& cat);

// The 40 subsystems of type A2x3 in E6.
std::vector<Subsystem> enumerate_a2x3_e6(const RootCatalog& cat);

// The 135 subsystems of type A1x7 (seven pairwise orthogonal roots) in E7.
std::vector<Subsystem> enumerate_a1x7_e7(const RootCatalog& cat);

struct IncidenceMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<int>> entries;  // 0/1
    int rank_exact_q = -1;
    std::vector<std::pair<int64_t, int>> rank_mod_primes;  // (prime, rank)
};

// M6: 36 x 40 over the A2x3 systems (rank 16); M7: 63 x 135 over the A1x7
// systems (rank 36).  Ranks computed exactly and re-checked modulo at least
// three primes above 2^20.
IncidenceMatrix build_incidence(const RootCatalog& cat,
                                const std::vector<Subsystem>& systems);

// The pezzotope vertex catalog: 15 subsystems for E6 (10 A1 + 5 A2x3),
// 34 for E7 (10 A1 + 12 A2 + 9 A3x2 + 3 A7), validated fixture data.
std::vector<Subsystem> vertex_catalog(const RootCatalog& cat);

struct EckardtTriples {
    std::vector<std::array<int, 3>> triples;  // line indices, sorted
    int fff_count = 0, efg_count = 0;
    bool single_orbit = false;
};

// The 45 triples of concurrent lines on a cubic surface: 15 of shape
// {Fij, Fkl, Fmn} (perfect matchings) and 30 of shape {Ei, Fij, Gj};
// W(E6) acts transitively on them.
EckardtTriples eckardt_triples(const LineCatalog& lc);

}  // namespace pezzo
