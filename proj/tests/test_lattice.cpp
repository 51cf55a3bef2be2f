#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pezzo/lattice.hpp"

#include <random>
#include <set>

using namespace pezzo;

TEST_CASE("root catalog sizes and basic invariants") {
    auto e6 = build_root_catalog(6);
    auto e7 = build_root_catalog(7);
    CHECK(e6.size() == 36);
    CHECK(e7.size() == 63);
    for (const auto* cat : {&e6, &e7}) {
        PicardClass k = canonical_class(cat->n);
        for (const auto& r : cat->roots) {
            CHECK(pairing(r, r) == -2);
            CHECK(pairing(r, k) == 0);
        }
        // negatives never appear among the positives
        for (const auto& r : cat->roots) {
            int s = cat->signed_index(negate(r));
            CHECK(s >= cat->size());
        }
    }
    // label lookup round-trips
    CHECK(e6.index_of_label("12") == 0);
    CHECK(e7.index_of_label("b7") == 62);
}

TEST_CASE("line catalogs: counts, K-pairing, regularity") {
    int expected[] = {10, 16, 27, 56};
    for (int n = 4; n <= 7; ++n) {
        auto lc = build_line_catalog(n);
        CHECK(lc.size() == expected[n - 4]);
        PicardClass k = canonical_class(n);
        for (const auto& l : lc.lines) {
            CHECK(pairing(l, l) == -1);
            CHECK(pairing(l, k) == -1);
        }
    }

    // n = 6: every line meets exactly 10 others (Schlaefli graph)
    auto lc6 = build_line_catalog(6);
    auto m6 = lc6.intersection_matrix();
    for (int i = 0; i < 27; ++i) {
        int deg = 0;
        for (int j = 0; j < 27; ++j)
            if (j != i && m6[i][j] != 0) ++deg;
        CHECK(deg == 10);
    }

    // n = 4: 3-regular intersection graph
    auto lc4 = build_line_catalog(4);
    auto m4 = lc4.intersection_matrix();
    for (int i = 0; i < 10; ++i) {
        int deg = 0;
        for (int j = 0; j < 10; ++j)
            if (j != i && m4[i][j] != 0) ++deg;
        CHECK(deg == 3);
    }

    // intersection numbers only take values in {-1, 0, 1, 2}; total incidence
    // sums are 30, 80, 270, 1624
    int64_t expected_sum[] = {30, 80, 270, 1624};
    for (int n = 4; n <= 7; ++n) {
        auto lc = build_line_catalog(n);
        auto m = lc.intersection_matrix();
        int64_t total = 0;
        for (int i = 0; i < lc.size(); ++i)
            for (int j = 0; j < lc.size(); ++j) {
                if (i == j) continue;
                CHECK(m[i][j] >= 0);
                CHECK(m[i][j] <= 2);
                total += m[i][j];
            }
        CHECK(total == expected_sum[n - 4]);
    }

    // n = 7: Ei meets Hi twice
    auto lc7 = build_line_catalog(7);
    for (int i = 1; i <= 7; ++i) {
        int ei = lc7.index_of_label("E" + std::to_string(i));
        int hi = lc7.index_of_label("H" + std::to_string(i));
        CHECK(pairing(lc7.lines[ei], lc7.lines[hi]) == 2);
    }
}

TEST_CASE("reflections are involutions preserving the form") {
    for (int n : {6, 7}) {
        auto cat = build_root_catalog(n);
        std::mt19937 rng(11);
        for (int t = 0; t < 12; ++t) {
            const auto& r = cat.roots[rng() % cat.size()];
            WeylElement w = reflection(r);
            CHECK(w.preserves_form_and_k());
            WeylElement sq = compose(w, w);
            CHECK(sq.m == identity_weyl(n).m);
            // random pairing preservation
            PicardClass x{n, Coeffs(n + 1, 0)}, y{n, Coeffs(n + 1, 0)};
            for (int i = 0; i <= n; ++i) {
                x.c[i] = int64_t(rng() % 19) - 9;
                y.c[i] = int64_t(rng() % 19) - 9;
            }
            CHECK(pairing(w.apply(x), w.apply(y)) == pairing(x, y));
        }
        CHECK_THROWS(reflection(canonical_class(n)));
    }
}

TEST_CASE("cremona reflection acts on the 27 lines as printed") {
    auto lc = build_line_catalog(6);
    PicardClass cr{6, Coeffs(7, 0)};
    cr.c[0] = 1;
    cr.c[1] = cr.c[2] = cr.c[3] = -1;
    Perm p = reflection(cr).line_perm(lc);
    auto expect_swap = [&lc](const Perm& q, const std::string& a, const std::string& b) {
        int ia = lc.index_of_label(a), ib = lc.index_of_label(b);
        CHECK(q[ia] == ib);
        CHECK(q[ib] == ia);
    };
    expect_swap(p, "E1", "F23");
    expect_swap(p, "E2", "F13");
    expect_swap(p, "E3", "F12");
    expect_swap(p, "G4", "F56");
    expect_swap(p, "G5", "F46");
    expect_swap(p, "G6", "F45");
    // transposition generator: E1 <-> E2 only
    PicardClass t{6, Coeffs(7, 0)};
    t.c[1] = 1;
    t.c[2] = -1;
    Perm pt = reflection(t).line_perm(lc);
    expect_swap(pt, "E1", "E2");
    CHECK(pt[lc.index_of_label("E3")] == lc.index_of_label("E3"));
}

TEST_CASE("cremona reflection on the 56 lines: the 12-transposition product") {
    auto lc = build_line_catalog(7);
    PicardClass cr{7, Coeffs(8, 0)};
    cr.c[0] = 1;
    cr.c[1] = cr.c[2] = cr.c[3] = -1;
    Perm p = reflection(cr).line_perm(lc);
    const char* swaps[][2] = {{"E1", "F23"},  {"E2", "F13"},  {"E3", "F12"},
                              {"G12", "H3"},  {"G13", "H2"},  {"G23", "H1"},
                              {"F45", "G67"}, {"F46", "G57"}, {"F47", "G56"},
                              {"F56", "G47"}, {"F57", "G46"}, {"F67", "G45"}};
    int moved = 0;
    for (auto& s : swaps) {
        int ia = lc.index_of_label(s[0]), ib = lc.index_of_label(s[1]);
        CHECK(p[ia] == ib);
        CHECK(p[ib] == ia);
        moved += 2;
    }
    // everything outside the 12 transpositions stays put
    for (int i = 0; i < lc.size(); ++i)
        if (p[i] == i) ++moved;
    CHECK(moved == lc.size());
}

TEST_CASE("weyl group orders") {
    CHECK(weyl_group_order(6) == 51840u);
    CHECK(weyl_group_order(7) == 2903040u);
}

TEST_CASE("transpositions alone give the symmetric group") {
    for (int n : {6, 7}) {
        auto cat = build_root_catalog(n);
        std::vector<Perm> perms;
        for (int i = 1; i < n; ++i) {
            PicardClass r{n, Coeffs(n + 1, 0)};
            r.c[i] = 1;
            r.c[i + 1] = -1;
            perms.push_back(reflection(r).root_perm(cat));
        }
        uint64_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(StabilizerChain(2 * cat.size(), perms).order() == fact);
    }
}

TEST_CASE("finite field complement counts match the characteristic polynomial") {
    for (int64_t q : {13, 17, 19}) {
        CHECK(finite_field_complement_count(6, q) == char_poly_value(6, q));
    }
    CHECK(char_poly_value(6, 13) == 12 * 9 * 8 * 6 * 5 * 2);
    CHECK(reduced_char_poly_at_one(6) == 5040);
    CHECK(reduced_char_poly_at_one(7) == 368640);
    // degenerate small field: the polynomial value vanishes and the honest
    // count over F_2^6 is the all-zero... let the count speak for itself
    CHECK(finite_field_complement_count(6, 2) == 0);
    CHECK(char_poly_value(6, 2) < 0);  // flagged case: q hits no exponent but sits below several
}

TEST_CASE("cremona d-matrices") {
    auto rep6 = verify_cremona_matrices(6);
    CHECK(rep6.valid_signed_permutation);
    CHECK(rep6.involution);
    CHECK(rep6.in_weyl_group);
    CHECK(rep6.generates_with_transpositions);
    CHECK(rep6.pass);
    // The printed matrix does not coincide with the reflection at
    // L - E1 - E2 - E3: it realizes a product of two orthogonal reflections.
    // Either one generates the full group together with the transpositions.
    CHECK_FALSE(rep6.equals_cremona_reflection);
    CHECK(rep6.identified == "s_136 * s_345");

    auto rep7 = verify_cremona_matrices(7);
    CHECK(rep7.valid_signed_permutation);
    CHECK(rep7.involution);
    CHECK(rep7.in_weyl_group);
    CHECK(rep7.generates_with_transpositions);
    CHECK(rep7.restriction_matches);
    CHECK(rep7.pass);
    CHECK_FALSE(rep7.equals_cremona_reflection);
    CHECK(rep7.identified == "s_136 * s_345");
}
