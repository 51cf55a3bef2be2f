#pragma once

/*
 * Picard lattice of the plane blown up at n points (n = 4..7), with the
 * intersection form diag(+1, -1, ..., -1) on the basis (L, E1..En).
 *
 * Roots (r.r = -2, r.K = 0) and exceptional line classes (e.e = e.K = -1)
 * live here, together with reflections, the Cremona involution, Weyl-group
 * orders via a stabilizer chain on the signed root set, and the hyperplane
 * arrangement counts over finite fields.
 */

#include "pezzo/perm.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pezzo {

using Coeffs = std::vector<int64_t>;  // (L, E1, ..., En)

struct PicardClass {
    int n = 0;
    Coeffs c;  // length n + 1

    bool operator==(const PicardClass& o) const { return n == o.n && c == o.c; }
    bool operator<(const PicardClass& o) const { return c < o.c; }
};

int64_t pairing(const PicardClass& a, const PicardClass& b);
PicardClass canonical_class(int n);
PicardClass negate(const PicardClass& a);
PicardClass add(const PicardClass& a, const PicardClass& b);

enum class RootKind { Pair, Triple, Six };

struct RootLabel {
    RootKind kind;
    std::array<int, 3> idx;  // Pair {i,j,-}; Triple {i,j,k}; Six {omitted,-,-} (0 if none)
    std::string str() const;
};

// The positive roots: Ei - Ej for i < j, L - Ei - Ej - Ek, and the degree-2
// classes 2L - sum(E) (n = 6) resp. 2L - sum(E) + Ei (n = 7).  Counts are
// 36 = 15 + 20 + 1 and 63 = 21 + 35 + 7.
struct RootCatalog {
    int n = 0;
    std::vector<PicardClass> roots;
    std::vector<RootLabel> labels;

    int size() const { return static_cast<int>(roots.size()); }

    // Signed index: i for the i-th positive root, i + size() for its negative,
    // -1 for a non-root.
    int signed_index(const PicardClass& v) const;
    int index_of_label(const std::string& s) const;

    // Each root as a linear form in the cuspidal-cubic coordinates d1..dn:
    // Ei - Ej -> di - dj, L - Ei - Ej - Ek -> di + dj + dk, and the degree-2
    // roots -> the sum of six of the d's.
    std::vector<std::vector<int>> d_forms() const;

private:
    std::map<Coeffs, int> index_;
    friend RootCatalog build_root_catalog(int n);
};

RootCatalog build_root_catalog(int n);

// The (-1)-classes: Ei, Fij = L - Ei - Ej, plus for n = 5 the conic
// G = 2L - sum(E), for n = 6 the conics Gi = 2L - sum(E) + Ei, and for n = 7
// the conics Gij and the cubics Hi = 3L - sum(E) - Ei.  Counts 10/16/27/56.
struct LineCatalog {
    int n = 0;
    std::vector<PicardClass> lines;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(lines.size()); }
    int index_of_label(const std::string& s) const;
    std::vector<std::vector<int64_t>> intersection_matrix() const;
};

LineCatalog build_line_catalog(int n);

// A lattice automorphism as an integer matrix (acting on coefficient
// columns).  Weyl elements preserve the form and fix K.
struct WeylElement {
    int n = 0;
    std::vector<Coeffs> m;  // (n+1) x (n+1), row-major

    PicardClass apply(const PicardClass& x) const;
    bool preserves_form_and_k() const;

    // Induced permutation of the 2N signed roots (positives first).
    Perm root_perm(const RootCatalog& cat) const;
    // Induced permutation of the line classes.
    Perm line_perm(const LineCatalog& lines) const;
};

WeylElement identity_weyl(int n);
WeylElement compose(const WeylElement& a, const WeylElement& b);

// x -> x + (x.r) r; requires r.r = -2 and r.K = 0.
WeylElement reflection(const PicardClass& r);

// Label transpositions (Ei <-> Ei+1) plus the Cremona reflection at
// L - E1 - E2 - E3.  These generate W(En).
std::vector<WeylElement> weyl_generators(int n);

uint64_t weyl_group_order(int n);  // 51840 for n=6, 2903040 for n=7

// Number of vectors in F_q^n avoiding all root hyperplanes (d-coordinates).
// For n = 6 this equals (q-1)(q-4)(q-5)(q-7)(q-8)(q-11).
int64_t finite_field_complement_count(int n, int64_t q);
int64_t char_poly_value(int n, int64_t q);          // the factored polynomial
int64_t reduced_char_poly_at_one(int n);            // 5040 for n = 6

// The explicit d-space matrices for the Cremona involution (entries are the
// printed matrix times 3, so everything stays integral).
std::vector<std::vector<int64_t>> cremona_d_matrix_times3(int n);

struct CremonaReport {
    bool valid_signed_permutation = false;  // every root form maps to +-3 * a root form
    bool involution = false;
    bool in_weyl_group = false;             // realized by the reflection group
    bool equals_cremona_reflection = false; // literally the reflection at L-E1-E2-E3
    bool generates_with_transpositions = false;
    bool restriction_matches = true;        // n=7 matrix restricts to the n=6 one
    std::vector<std::string> mismatches;    // roots where the matrix and s_123 differ
    std::string identified;                 // e.g. "s_126 * s_345"
    bool pass = false;
};

// Checks that the printed d-matrix induces a genuine signed permutation of
// the 36/63 root forms, that it is an involution inside the Weyl group which
// together with the label transpositions generates the whole group, and
// compares it with the reflection at L - E1 - E2 - E3.
CremonaReport verify_cremona_matrices(int n);

}  // namespace pezzo
