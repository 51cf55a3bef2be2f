#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pezzo/amplitudes.hpp"
#include "pezzo/fixtures.hpp"
#include "pezzo/lattice.hpp"
#include "pezzo/pezzotope.hpp"
#include "pezzo/uforms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace pezzo;

namespace {

Rat rat_pow(const Rat& base, long long e) {
    Rat r = 1;
    long long n = e < 0 ? -e : e;
    for (long long i = 0; i < n; ++i) r *= base;
    return e < 0 ? Rat(1 / r) : r;
}

// all graph automorphisms by plain backtracking (the graphs are small)
std::vector<std::vector<int>> graph_automorphisms(const PezzoGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> deg(n, 0);
    for (auto [a, b] : g.edges) ++deg[a], ++deg[b];
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(perm);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || deg[w] != deg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == g.adjacent(perm[u], w);
            if (!ok) continue;
            used[w] = true;
            perm[v] = w;
            self(self, v + 1);
            used[w] = false;
        }
        perm[v] = -1;
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("a segment sums the reciprocals of its two endpoints") {
    auto amp = facet_amplitude(complex_from_facets(2, {{0}, {1}}));
    CHECK(amp.degree == -1);
    CHECK(amp.terms == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(evaluate(amp, {Rat(1), Rat(2)}) == Rat(3, 2));
    CHECK_THROWS_WITH_AS(evaluate(amp, {Rat(0), Rat(2)}),
                         doctest::Contains("s1"), std::runtime_error);
}

TEST_CASE("the 15-vertex amplitude has the 45 published quadruples") {
    RootCatalog cat = build_root_catalog(6);
    PezzoGraph g = build_graph(cat);
    auto amp = facet_amplitude(clique_complex(g));
    CHECK(amp.degree == -4);
    REQUIRE(amp.terms.size() == 45);

    std::set<std::vector<int>> got;
    for (const auto& t : amp.terms) {
        std::vector<int> one_based;
        for (int i : t) one_based.push_back(i + 1);
        got.insert(one_based);
    }
    std::set<std::vector<int>> want;
    for (const auto& q : fixtures::e6_amplitude_quadruples)
        want.insert({q[0], q[1], q[2], q[3]});
    CHECK(got == want);
    CHECK(got.count({2, 5, 6, 9}) == 1);

    CHECK(evaluate(amp, std::vector<Rat>(15, Rat(1))) == 45);

    // term set is stable under the full symmetry group of the graph
    auto autos = graph_automorphisms(g);
    CHECK(autos.size() > 1);
    for (const auto& act : autos) {
        std::set<std::vector<int>> mapped;
        for (const auto& t : amp.terms) {
            std::vector<int> m;
            for (int i : t) m.push_back(act[i] + 1);
            std::sort(m.begin(), m.end());
            mapped.insert(m);
        }
        CHECK(mapped == got);
    }
}

TEST_CASE("the 34-vertex amplitude has 579 sextuple terms") {
    RootCatalog cat = build_root_catalog(7);
    PezzoGraph g = build_graph(cat);
    CliqueComplex cx = clique_complex(g);
    auto amp = facet_amplitude(cx);
    CHECK(amp.degree == -6);
    CHECK(amp.terms.size() == 579);
    for (const auto& t : amp.terms) CHECK(t.size() == 6);
    CHECK(evaluate(amp, std::vector<Rat>(34, Rat(1))) == 579);

    // terms are exactly the complements of the dual generators
    std::set<std::vector<int>> from_dual;
    for (const auto& gen : alexander_dual(cx)) {
        std::vector<int> comp;
        for (int v = 0; v < 34; ++v)
            if (!std::binary_search(gen.begin(), gen.end(), v)) comp.push_back(v);
        from_dual.insert(comp);
    }
    CHECK(from_dual == std::set<std::vector<int>>(amp.terms.begin(), amp.terms.end()));
}

TEST_CASE("hexagon triangulations reproduce the printed 14-term sum") {
    auto amp = biadjoint_m6();
    CHECK(amp.degree == -3);
    REQUIRE(amp.terms.size() == 14);

    auto term_set = [&](std::initializer_list<const char*> names) {
        std::vector<int> t;
        for (const char* n : names) {
            auto it = std::find(amp.labels.begin(), amp.labels.end(), n);
            REQUIRE(it != amp.labels.end());
            t.push_back(static_cast<int>(it - amp.labels.begin()));
        }
        std::sort(t.begin(), t.end());
        return t;
    };
    std::set<std::vector<int>> want = {
        term_set({"s12", "s34", "s56"}),   term_set({"s12", "s56", "s123"}),
        term_set({"s23", "s56", "s123"}),  term_set({"s23", "s56", "s234"}),
        term_set({"s34", "s56", "s234"}),  term_set({"s16", "s23", "s45"}),
        term_set({"s12", "s34", "s345"}),  term_set({"s12", "s45", "s123"}),
        term_set({"s12", "s45", "s345"}),  term_set({"s16", "s23", "s234"}),
        term_set({"s16", "s34", "s234"}),  term_set({"s16", "s34", "s345"}),
        term_set({"s16", "s45", "s345"}),  term_set({"s23", "s45", "s123"}),
    };
    CHECK(std::set<std::vector<int>>(amp.terms.begin(), amp.terms.end()) == want);
    CHECK(evaluate(amp, std::vector<Rat>(9, Rat(1))) == 14);
}

TEST_CASE("pentagon triangulations give the five-term cycle") {
    auto amp = biadjoint_m5();
    CHECK(amp.degree == -2);
    REQUIRE(amp.terms.size() == 5);
    CHECK(std::set<std::string>(amp.labels.begin(), amp.labels.end()) ==
          std::set<std::string>{"s12", "s23", "s34", "s45", "s15"});

    // each variable sits in exactly two terms: the terms form a pentagon,
    // the same shape as the published five-term sum
    std::map<int, int> uses;
    for (const auto& t : amp.terms) {
        CHECK(t.size() == 2);
        for (int i : t) ++uses[i];
    }
    for (const auto& [var, count] : uses) CHECK(count == 2);
}

TEST_CASE("the Mandelstam map matches the printed samples and relations") {
    MandelstamMap mm = mandelstam_map(6);
    REQUIRE(mm.matrix.size() == 21);
    REQUIRE(mm.row_labels.size() == 21);
    CHECK(mm.rank == 15);
    CHECK(mm.constraints.size() == 6);

    auto row = [&](const std::string& lab) {
        auto it = std::find(mm.row_labels.begin(), mm.row_labels.end(), lab);
        REQUIRE(it != mm.row_labels.end());
        return mm.matrix[it - mm.row_labels.begin()];
    };
    auto unit = [](std::map<int, int> entries) {
        std::vector<Int> v(15, 0);
        for (auto [i, c] : entries) v[i - 1] = c;
        return v;
    };
    CHECK(row("s123") == unit({{7, 1}}));
    CHECK(row("t") == unit({{1, 1}}));
    CHECK(row("s125") == unit({{5, 1}, {8, 1}, {9, 1}, {13, -1}, {14, -1}}));
    CHECK(row("s456") == unit({{1, -1}, {7, -1}, {12, 1}}));
    // the printed s124 sample carries a sign slip on s9: the parametrization
    // puts p124 in the denominator of u9, so the derived row is -s7-s9+s13
    CHECK(row("s124") == unit({{7, -1}, {9, -1}, {13, 1}}));

    // the printed ten-term relation with 2t
    std::vector<Int> total(15, 0);
    for (const char* lab : {"s125", "s135", "s145", "s156", "s235", "s245",
                            "s256", "s345", "s356", "s456"}) {
        auto r = row(lab);
        for (int i = 0; i < 15; ++i) total[i] += r[i];
    }
    auto tr = row("t");
    for (int i = 0; i < 15; ++i) total[i] += 2 * tr[i];
    CHECK(total == std::vector<Int>(15, 0));

    // every constraint vector annihilates all 21 rows (the twenty s_ijk and t)
    for (const auto& c : mm.constraints) {
        REQUIRE(c.size() == 21);
        for (int col = 0; col < 15; ++col) {
            Rat acc = 0;
            for (int r = 0; r < 21; ++r) acc += c[r] * Rat(mm.matrix[r][col]);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("the map reproduces the likelihood identity on random data") {
    MandelstamMap mm = mandelstam_map(6);
    std::mt19937 rng(61502);
    std::uniform_int_distribution<int> coord(-9, 9), expo(-3, 3);
    int done = 0;
    while (done < 5) {
        RatMatrix m(3, std::vector<Rat>(6));
        for (auto& r : m)
            for (auto& v : r) v = coord(rng);
        std::array<Rat, 15> u;
        try {
            u = plucker_u_values(m);
        } catch (const std::runtime_error&) {
            continue;
        }
        std::vector<long long> s(15);
        for (auto& v : s) v = expo(rng);

        // prod |u_i|^{s_i} must equal prod |p_ijk|^{s_ijk} * |q|^t
        Rat lhs = 1;
        for (int i = 0; i < 15; ++i) lhs *= rat_pow(Rat(abs(u[i])), s[i]);
        Rat rhs = 1;
        for (int r = 0; r < 21; ++r) {
            long long e = 0;
            for (int i = 0; i < 15; ++i)
                e += static_cast<long long>(mm.matrix[r][i]) * s[i];
            Rat base;
            if (mm.row_labels[r] == "t") {
                base = det3(m, 0, 2, 3) * det3(m, 0, 4, 5) * det3(m, 1, 2, 4) *
                           det3(m, 1, 3, 5) -
                       det3(m, 0, 2, 4) * det3(m, 0, 3, 5) * det3(m, 1, 2, 3) *
                           det3(m, 1, 4, 5);
            } else {
                const std::string& lab = mm.row_labels[r];
                base = det3(m, lab[1] - '1', lab[2] - '1', lab[3] - '1');
            }
            rhs *= rat_pow(Rat(abs(base)), e);
        }
        CHECK(lhs == rhs);
        ++done;
    }
}
