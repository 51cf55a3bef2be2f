#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pezzo/fixtures.hpp"
#include "pezzo/pezzotope.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace pezzo;

TEST_CASE("G(E6): 15 vertices, 60 edges, census 30 + 30") {
    auto cat = build_root_catalog(6);
    auto g = build_graph(cat);
    CHECK(g.vertices.size() == 15);
    CHECK(g.edges.size() == 60);
    CHECK(g.edge_census.at({SubsystemKind::A1, SubsystemKind::A1}) == 30);
    CHECK(g.edge_census.at({SubsystemKind::A1, SubsystemKind::A2x3}) == 30);

    // u1 and u3 are joined (125 and 134 share one label), u1 and u14 are
    // joined (125 is among the nine roots of u14)
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(0, 13));

    // non-neighbour lists coincide with the monomial supports of the
    // embedded u-equation table
    for (int v = 0; v < 15; ++v) {
        std::vector<int> nonnb;
        for (int u = 0; u < 15; ++u)
            if (u != v && !g.adjacent(u, v)) nonnb.push_back(u + 1);
        CHECK(nonnb == fixtures::e6_u_nonneighbors[v]);
    }
}

TEST_CASE("G(E7): 34 vertices, 297 edges in the ten groups") {
    auto cat = build_root_catalog(7);
    auto g = build_graph(cat);
    CHECK(g.vertices.size() == 34);
    CHECK(g.edges.size() == 297);
    CHECK(g.edge_census.at({SubsystemKind::A1, SubsystemKind::A1}) == 33);
    CHECK(g.edge_census.at({SubsystemKind::A2, SubsystemKind::A2}) == 24);
    CHECK(g.edge_census.at({SubsystemKind::A1, SubsystemKind::A2}) == 84);
    CHECK(g.edge_census.at({SubsystemKind::A1, SubsystemKind::A3x2}) == 60);
    CHECK(g.edge_census.at({SubsystemKind::A1, SubsystemKind::A7}) == 24);
    CHECK(g.edge_census.at({SubsystemKind::A2, SubsystemKind::A3x2}) == 36);
    CHECK(g.edge_census.at({SubsystemKind::A2, SubsystemKind::A7}) == 24);
    CHECK(g.edge_census.at({SubsystemKind::A3x2, SubsystemKind::A7}) == 12);
    CHECK(g.a1_a2_inclusion == 24);
    CHECK(g.a1_a2_apart == 60);
    CHECK(g.a1_a3x2_inclusion == 54);
    CHECK(g.a1_a3x2_special == 6);

    // the 12 non-orthogonal A1 pairs are exactly the triple-root pairs of
    // the twelve A2 vertices
    std::set<std::pair<int, int>> nonorth;
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            if (pairing(cat.roots[g.vertices[a].roots[0]],
                        cat.roots[g.vertices[b].roots[0]]) != 0)
                nonorth.insert({g.vertices[a].roots[0], g.vertices[b].roots[0]});
    CHECK(nonorth.size() == 12);
    int matched = 0;
    for (int v = 10; v < 22; ++v) {
        std::vector<int> triples;
        for (int r : g.vertices[v].roots)
            if (cat.labels[r].kind == RootKind::Triple) triples.push_back(r);
        REQUIRE(triples.size() == 2);
        if (nonorth.count({std::min(triples[0], triples[1]),
                           std::max(triples[0], triples[1])}))
            ++matched;
    }
    CHECK(matched == 12);
}

TEST_CASE("clique complexes: f-vectors and flag property") {
    auto e6 = build_root_catalog(6);
    auto g6 = build_graph(e6);
    auto cx6 = clique_complex(g6);
    CHECK(cx6.f_vector() == std::vector<int>({15, 60, 90, 45}));

    // exhaustive flag check at this size: every pairwise-adjacent quadruple
    // is a tetrahedron and vice versa
    std::set<std::vector<int>> tets(cx6.facets().begin(), cx6.facets().end());
    int cliques4 = 0;
    for (int a = 0; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b)
            for (int c = b + 1; c < 15; ++c)
                for (int d = c + 1; d < 15; ++d) {
                    bool clique = g6.adjacent(a, b) && g6.adjacent(a, c) &&
                                  g6.adjacent(a, d) && g6.adjacent(b, c) &&
                                  g6.adjacent(b, d) && g6.adjacent(c, d);
                    if (clique) {
                        ++cliques4;
                        CHECK(tets.count({a, b, c, d}) == 1);
                    }
                }
    CHECK(cliques4 == 45);

    auto e7 = build_root_catalog(7);
    auto g7 = build_graph(e7);
    auto cx7 = clique_complex(g7);
    CHECK(cx7.f_vector() == std::vector<int>({34, 297, 1105, 2000, 1737, 579}));
    CHECK(cx7.euler_characteristic() == 0);

    // random spot checks of the flag property on the larger complex
    std::mt19937 rng(20240817);
    std::set<std::vector<int>> faces4(cx7.faces_by_dim[4].begin(), cx7.faces_by_dim[4].end());
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<int> pick;
        while (pick.size() < 5) {
            int v = static_cast<int>(rng() % 34);
            if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
        }
        std::sort(pick.begin(), pick.end());
        bool clique = true;
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = i + 1; j < 5; ++j)
                if (!g7.adjacent(pick[i], pick[j])) clique = false;
        CHECK(faces4.count(pick) == (clique ? 1u : 0u));
    }
}

TEST_CASE("empty graph complex: vertices only") {
    PezzoGraph g;
    g.n = 6;
    g.vertices.resize(4);
    auto cx = clique_complex(g);
    CHECK(cx.f_vector() == std::vector<int>({4}));
}

TEST_CASE("homology certificates") {
    // boundary of a 5-simplex: a known 4-sphere
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip < 6; ++skip) {
        std::vector<int> f;
        for (int v = 0; v < 6; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    auto sphere = complex_from_facets(6, facets);
    auto hs = homology(sphere);
    CHECK(hs.betti == std::vector<int>({1, 0, 0, 0, 1}));
    CHECK(hs.certified_over_q);

    auto e6 = build_root_catalog(6);
    auto h6 = homology(clique_complex(build_graph(e6)));
    CHECK(h6.betti == std::vector<int>({1, 0, 0, 1}));
    CHECK(h6.torsion_free_evidence);
    CHECK(h6.certified_over_q);

    auto e7 = build_root_catalog(7);
    auto h7 = homology(clique_complex(build_graph(e7)));
    CHECK(h7.betti == std::vector<int>({1, 0, 0, 0, 0, 1}));
    CHECK(h7.euler == 0);
    CHECK(h7.torsion_free_evidence);
    CHECK(h7.certified_over_q);
    CHECK(h7.primes.size() >= 3);
    for (int64_t p : h7.primes) CHECK(p > (1 << 20));
}

TEST_CASE("Stanley-Reisner generators match the published run") {
    auto e7 = build_root_catalog(7);
    auto g7 = build_graph(e7);
    auto gens = stanley_reisner(g7);
    CHECK(gens.size() == 264);  // C(34,2) - 297

    auto fixture = parse_monomial_pairs(fixtures::e7_nonedge_pairs_text);
    CHECK(fixture.size() == 264);

    // the published run numbers the 34 vertices differently from the
    // subsystem catalog; compare through the relabeling
    auto iso = graph_isomorphism(g7, fixture);
    REQUIRE(!iso.empty());
    std::vector<std::pair<int, int>> relabeled;
    for (auto [a, b] : gens) {
        int x = iso[a - 1] + 1, y = iso[b - 1] + 1;
        relabeled.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(relabeled.begin(), relabeled.end());
    std::vector<std::pair<int, int>> diff;
    std::set_symmetric_difference(relabeled.begin(), relabeled.end(), fixture.begin(),
                                  fixture.end(), std::back_inserter(diff));
    CHECK(diff.empty());

    // the relabeling sends each subsystem kind onto a fixed published index
    // class: the A7 vertices are the associahedron facets and so on
    std::set<int> img_a1, img_a7;
    for (int v = 0; v < 34; ++v) {
        if (g7.vertices[v].kind == SubsystemKind::A1) img_a1.insert(iso[v] + 1);
        if (g7.vertices[v].kind == SubsystemKind::A7) img_a7.insert(iso[v] + 1);
    }
    CHECK(img_a1 == std::set<int>({1, 2, 3, 4, 5, 7, 10, 15, 20, 23}));
    CHECK(img_a7 == std::set<int>({9, 11, 27}));

    auto e6 = build_root_catalog(6);
    CHECK(stanley_reisner(build_graph(e6)).size() == 45);  // C(15,2) - 60
}

TEST_CASE("Alexander dual: 579 complements of degree 28") {
    auto e7 = build_root_catalog(7);
    auto cx = clique_complex(build_graph(e7));
    auto dual = alexander_dual(cx);
    CHECK(dual.size() == 579);
    for (size_t i = 0; i < dual.size(); ++i) {
        CHECK(dual[i].size() == 28);
        std::vector<int> uni;
        std::merge(dual[i].begin(), dual[i].end(), cx.facets()[i].begin(),
                   cx.facets()[i].end(), std::back_inserter(uni));
        bool full = uni.size() == 34;
        for (int v = 0; v < 34 && full; ++v)
            if (uni[v] != v) full = false;
        CHECK(full);
    }
}

TEST_CASE("facet links: associahedra, cubes, and the five E7 types") {
    auto e6 = build_root_catalog(6);
    auto g6 = build_graph(e6);
    auto rep6 = facet_links(g6, clique_complex(g6));
    CHECK(rep6.all_matched);
    for (int v = 0; v < 10; ++v)
        CHECK(rep6.link_fvectors[v] == std::vector<int>({9, 21, 14}));
    for (int v = 10; v < 15; ++v)
        CHECK(rep6.link_fvectors[v] == std::vector<int>({6, 12, 8}));

    auto e7 = build_root_catalog(7);
    auto g7 = build_graph(e7);
    auto rep7 = facet_links(g7, clique_complex(g7));
    CHECK(rep7.all_matched);
    // class sizes 3, 12, 9, 6, 4
    std::array<int, 5> sizes = {0, 0, 0, 0, 0};
    for (int v = 0; v < 34; ++v) {
        REQUIRE(rep7.matched_class[v] >= 0);
        ++sizes[rep7.matched_class[v]];
    }
    CHECK(sizes == std::array<int, 5>({3, 12, 9, 6, 4}));

    // membership per class matches the published table after relabeling;
    // classes are unions of automorphism orbits, so the comparison does not
    // depend on which isomorphism the search returns
    auto iso = graph_isomorphism(g7, parse_monomial_pairs(fixtures::e7_nonedge_pairs_text));
    REQUIRE(!iso.empty());
    for (int c = 0; c < 5; ++c) {
        std::set<int> mine, published(fixtures::e7_facet_classes[c].members.begin(),
                                      fixtures::e7_facet_classes[c].members.end());
        for (int v = 0; v < 34; ++v)
            if (rep7.matched_class[v] == c) mine.insert(iso[v] + 1);
        CHECK(mine == published);
    }

    // the associahedron links belong to the A7 vertices
    for (int v = 0; v < 34; ++v)
        CHECK((rep7.matched_class[v] == 0) ==
              (g7.vertices[v].kind == SubsystemKind::A7));
}

TEST_CASE("hull check on the convex realization fixture") {
    std::vector<std::vector<int>> m(4, std::vector<int>(15));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 15; ++c) m[r][c] = fixtures::firsching_matrix[r][c];
    auto rep = hull_check(m);
    CHECK(rep.facets.size() == 45);
    CHECK(rep.f_vector == std::vector<int>({15, 60, 90, 45}));
    CHECK(rep.simplicial);
    CHECK(rep.every_column_is_vertex);

    // facet set = amplitude quadruples = clique-complex tetrahedra
    std::set<std::vector<int>> facets(rep.facets.begin(), rep.facets.end());
    CHECK(facets.count({0, 2, 7, 8}) == 1);  // the u1 u3 u8 u9 term
    for (const auto& q : fixtures::e6_amplitude_quadruples) {
        std::vector<int> z = {q[0] - 1, q[1] - 1, q[2] - 1, q[3] - 1};
        std::sort(z.begin(), z.end());
        CHECK(facets.count(z) == 1);
    }
    auto cat = build_root_catalog(6);
    auto cx = clique_complex(build_graph(cat));
    for (const auto& t : cx.facets()) CHECK(facets.count(t) == 1);
}

TEST_CASE("hull check on a standard 4-simplex") {
    std::vector<std::vector<int>> m(4, std::vector<int>(5, 0));
    for (int i = 0; i < 4; ++i) m[i][i + 1] = 1;
    auto rep = hull_check(m);
    CHECK(rep.facets.size() == 5);
    CHECK(rep.f_vector == std::vector<int>({5, 10, 10, 5}));
    CHECK(rep.simplicial);
}

TEST_CASE("Weyl orbit of the whole catalog structure") {
    auto e6 = build_root_catalog(6);
    auto r6 = region_orbit_count(e6);
    CHECK(r6.orbit_size == 432);
    CHECK(r6.stabilizer_order == 120);

    auto e7 = build_root_catalog(7);
    auto r7 = region_orbit_count(e7);
    CHECK(r7.orbit_size == 60480);
    CHECK(r7.stabilizer_order == 48);
}

TEST_CASE("catalog fingerprint is Weyl invariant") {
    // the multiset of pairwise (intersection size, pairing multiset) data of
    // the vertex root sets does not change when a generator is applied
    for (int n : {6, 7}) {
        auto cat = build_root_catalog(n);
        auto verts = vertex_catalog(cat);
        const int N = cat.size();
        auto fingerprint = [&](const std::vector<std::vector<int>>& sets) {
            std::vector<std::pair<size_t, size_t>> fp;
            for (size_t a = 0; a < sets.size(); ++a)
                for (size_t b = a + 1; b < sets.size(); ++b) {
                    std::vector<int> inter;
                    std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(),
                                          sets[b].end(), std::back_inserter(inter));
                    fp.emplace_back(sets[a].size() * 1000 + sets[b].size(), inter.size());
                }
            std::sort(fp.begin(), fp.end());
            return fp;
        };
        std::vector<std::vector<int>> base;
        for (const auto& v : verts) base.push_back(v.roots);
        auto fp0 = fingerprint(base);
        for (const auto& w : weyl_generators(n)) {
            auto perm = w.root_perm(cat);
            std::vector<std::vector<int>> img;
            for (const auto& s : base) {
                std::vector<int> t;
                for (int r : s) t.push_back(perm[r] % N);
                std::sort(t.begin(), t.end());
                img.push_back(std::move(t));
            }
            CHECK(fingerprint(img) == fp0);
        }
    }
}
