#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pezzo/fixtures.hpp"
#include "pezzo/orbit.hpp"
#include "pezzo/subsystems.hpp"

#include <set>

using namespace pezzo;

TEST_CASE("A2 subsystems of E6: 120 flats") {
    auto cat = build_root_catalog(6);
    auto a2 = enumerate_a2(cat);
    CHECK(a2.size() == 120);
    for (const auto& s : a2) CHECK(s.roots.size() == 3);
}

TEST_CASE("40 subsystems of type A2x3 in E6") {
    auto cat = build_root_catalog(6);
    auto systems = enumerate_a2x3_e6(cat);
    CHECK(systems.size() == 40);
    for (const auto& s : systems) {
        CHECK(s.roots.size() == 9);
        CHECK(s.factors.size() == 3);
    }

    // the five fixture systems of the vertex catalog appear among the 40
    auto verts = vertex_catalog(cat);
    std::set<std::vector<int>> all;
    for (const auto& s : systems) all.insert(s.roots);
    int found = 0;
    for (const auto& v : verts)
        if (v.kind == SubsystemKind::A2x3 && all.count(v.roots)) ++found;
    CHECK(found == 5);

    // W-orbit closure: the image of every system under every generator is a system
    std::vector<Perm> gens;
    for (const auto& g : weyl_generators(6)) gens.push_back(g.root_perm(cat));
    const int N = cat.size();
    for (const auto& s : systems)
        for (const auto& g : gens) {
            std::vector<int> img;
            for (int r : s.roots) img.push_back(g[r] % N);
            std::sort(img.begin(), img.end());
            CHECK(all.count(img) == 1);
        }
}

TEST_CASE("135 subsystems of type A1x7 in E7") {
    auto cat = build_root_catalog(7);
    auto systems = enumerate_a1x7_e7(cat);
    CHECK(systems.size() == 135);
    for (const auto& s : systems) {
        CHECK(s.roots.size() == 7);
        for (size_t a = 0; a < 7; ++a)
            for (size_t b = a + 1; b < 7; ++b)
                CHECK(pairing(cat.roots[s.roots[a]], cat.roots[s.roots[b]]) == 0);
    }
}

TEST_CASE("incidence matrices M6 and M7") {
    auto e6 = build_root_catalog(6);
    auto m6 = build_incidence(e6, enumerate_a2x3_e6(e6));
    CHECK(m6.rows == 36);
    CHECK(m6.cols == 40);
    CHECK(m6.rank_exact_q == 16);
    for (auto [p, r] : m6.rank_mod_primes) CHECK(r == 16);
    for (int c = 0; c < m6.cols; ++c) {
        int s = 0;
        for (int r = 0; r < m6.rows; ++r) s += m6.entries[r][c];
        CHECK(s == 9);
    }

    auto e7 = build_root_catalog(7);
    auto m7 = build_incidence(e7, enumerate_a1x7_e7(e7));
    CHECK(m7.rows == 63);
    CHECK(m7.cols == 135);
    CHECK(m7.rank_exact_q == 36);
    for (auto [p, r] : m7.rank_mod_primes) CHECK(r == 36);
    for (int c = 0; c < m7.cols; ++c) {
        int s = 0;
        for (int r = 0; r < m7.rows; ++r) s += m7.entries[r][c];
        CHECK(s == 7);
    }
}

TEST_CASE("M6 column of the fixture system u11 hits exactly its nine roots") {
    auto cat = build_root_catalog(6);
    auto systems = enumerate_a2x3_e6(cat);
    auto m = build_incidence(cat, systems);
    std::vector<int> u11;
    for (const char* t : fixtures::e6_a2x3_vertices[0]) u11.push_back(parse_root_token(cat, t));
    std::sort(u11.begin(), u11.end());
    int col = -1;
    for (size_t c = 0; c < systems.size(); ++c)
        if (systems[c].roots == u11) col = static_cast<int>(c);
    REQUIRE(col >= 0);
    for (int r = 0; r < m.rows; ++r) {
        bool inset = std::binary_search(u11.begin(), u11.end(), r);
        CHECK(m.entries[r][col] == (inset ? 1 : 0));
    }
}

TEST_CASE("vertex catalogs validate with their claimed types") {
    auto e6 = build_root_catalog(6);
    auto v6 = vertex_catalog(e6);
    CHECK(v6.size() == 15);

    // no two of the ten A1 triples are disjoint label sets
    for (size_t a = 0; a < 10; ++a)
        for (size_t b = a + 1; b < 10; ++b) {
            const auto& la = e6.labels[v6[a].roots[0]];
            const auto& lb = e6.labels[v6[b].roots[0]];
            int common = 0;
            for (int x : la.idx)
                for (int y : lb.idx)
                    if (x == y && x != 0) ++common;
            CHECK(common > 0);
        }

    auto e7 = build_root_catalog(7);
    auto v7 = vertex_catalog(e7);
    CHECK(v7.size() == 34);
    int counts[4] = {0, 0, 0, 0};
    for (const auto& v : v7) {
        if (v.kind == SubsystemKind::A1) ++counts[0];
        if (v.kind == SubsystemKind::A2) ++counts[1];
        if (v.kind == SubsystemKind::A3x2) ++counts[2];
        if (v.kind == SubsystemKind::A7) ++counts[3];
    }
    CHECK(counts[0] == 10);
    CHECK(counts[1] == 12);
    CHECK(counts[2] == 9);
    CHECK(counts[3] == 3);

    // u23 contains the A2 u11 = {12, 135, 235} inside one A3 factor
    const auto& u23 = v7[22];
    std::set<int> u11;
    for (const char* t : fixtures::e7_a2_vertices[0]) u11.insert(parse_root_token(e7, t));
    bool inside_one_factor = false;
    for (const auto& f : u23.factors) {
        std::set<int> fs(f.begin(), f.end());
        bool all = true;
        for (int r : u11)
            if (!fs.count(r)) all = false;
        if (all) inside_one_factor = true;
    }
    CHECK(inside_one_factor);

    // u25 contains the root 156
    const auto& u25 = v7[24];
    int r156 = parse_root_token(e7, "156");
    CHECK(std::binary_search(u25.roots.begin(), u25.roots.end(), r156));

    // each A7 vertex has exactly 28 positive roots
    for (const auto& v : v7)
        if (v.kind == SubsystemKind::A7) CHECK(v.roots.size() == 28);
}

TEST_CASE("eckardt triples: 45, single W(E6) orbit") {
    auto lc = build_line_catalog(6);
    auto et = eckardt_triples(lc);
    CHECK(et.triples.size() == 45);
    CHECK(et.fff_count == 15);
    CHECK(et.efg_count == 30);
    CHECK(et.single_orbit);

    // (16)(25)(34) is a valid FFF triple
    std::array<int, 3> want = {lc.index_of_label("F16"), lc.index_of_label("F25"),
                               lc.index_of_label("F34")};
    std::sort(want.begin(), want.end());
    bool present = false;
    for (const auto& t : et.triples)
        if (t == want) present = true;
    CHECK(present);

    // all three lines of a triple are pairwise incident
    for (const auto& t : et.triples) {
        CHECK(pairing(lc.lines[t[0]], lc.lines[t[1]]) == 1);
        CHECK(pairing(lc.lines[t[0]], lc.lines[t[2]]) == 1);
        CHECK(pairing(lc.lines[t[1]], lc.lines[t[2]]) == 1);
    }
}

TEST_CASE("orbit engine basics") {
    auto cat = build_root_catalog(6);
    std::vector<Perm> gens;
    for (const auto& g : weyl_generators(6)) gens.push_back(g.root_perm(cat));
    // single positive root: full signed root set has 72 elements
    auto act = [](const Perm& g, int x) { return g[x]; };
    auto orb = enumerate_orbit(0, gens, act);
    CHECK(orb.size() == 72);
    // K is fixed: trivial orbit under the lattice action
    std::vector<WeylElement> wgens = weyl_generators(6);
    auto actk = [](const WeylElement& g, const PicardClass& x) { return g.apply(x); };
    auto orbk = enumerate_orbit(canonical_class(6), wgens, actk);
    CHECK(orbk.size() == 1);
}

TEST_CASE("stratum count ledger: 2111") {
    long long total = 0;
    for (long long v : fixtures::y36_strata) total += v;
    CHECK(total == 2111);
}
