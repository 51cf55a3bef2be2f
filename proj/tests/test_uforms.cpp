#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pezzo/fixtures.hpp"
#include "pezzo/lattice.hpp"
#include "pezzo/pezzotope.hpp"
#include "pezzo/uforms.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace pezzo;

namespace {

RatMatrix random_generic_matrix(std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(-9, 9);
    for (;;) {
        RatMatrix m(3, std::vector<Rat>(6));
        for (auto& row : m)
            for (auto& v : row) v = coord(rng);
        try {
            plucker_u_values(m);
            return m;
        } catch (const std::runtime_error&) {
            continue;  // boundary divisor hit, redraw
        }
    }
}

std::array<Rat, 6> random_generic_d(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 5);
    for (;;) {
        std::array<Rat, 6> d;
        for (auto& v : d) v = Rat(num(rng), den(rng));
        try {
            dunit_u_values(d);
            return d;
        } catch (const std::runtime_error&) {
            continue;
        }
    }
}

void check_support_partition(const USystem& sys, const PezzoGraph& g) {
    for (int i = 0; i < sys.vars; ++i) {
        std::set<int> support(sys.supports[i].begin(), sys.supports[i].end());
        std::set<int> nb;
        for (int j : g.neighbors(i)) nb.insert(j + 1);
        CHECK(support.count(i + 1) == 0);
        for (int j : nb) CHECK(support.count(j) == 0);
        CHECK(static_cast<int>(support.size() + nb.size()) == sys.vars - 1);
    }
}

}  // namespace

TEST_CASE("the fifteen-variable system is read off the vertex graph") {
    RootCatalog cat = build_root_catalog(6);
    PezzoGraph g = build_graph(cat);
    USystem sys = u_system_from_graph(g);
    REQUIRE(sys.vars == 15);
    for (int i = 0; i < 15; ++i)
        CHECK(sys.supports[i] == fixtures::e6_u_nonneighbors[i]);
    check_support_partition(sys, g);
}

TEST_CASE("the 34-variable system matches the published equation list") {
    RootCatalog cat = build_root_catalog(7);
    PezzoGraph g = build_graph(cat);
    USystem sys = u_system_from_graph(g);
    REQUIRE(sys.vars == 34);
    check_support_partition(sys, g);

    // the fixture supports are symmetric and agree pair-for-pair with the
    // 264 quadratic generators of the non-face ideal
    std::set<std::pair<int, int>> from_supports;
    for (int i = 0; i < 34; ++i)
        for (int j : fixtures::e7_u_nonneighbors[i]) {
            CHECK(std::count(fixtures::e7_u_nonneighbors[j - 1].begin(),
                             fixtures::e7_u_nonneighbors[j - 1].end(), i + 1) == 1);
            from_supports.insert({std::min(i + 1, j), std::max(i + 1, j)});
        }
    auto pairs = parse_monomial_pairs(fixtures::e7_nonedge_pairs_text);
    CHECK(pairs.size() == 264);
    CHECK(from_supports == std::set<std::pair<int, int>>(pairs.begin(), pairs.end()));

    // last equation has the seventeen-variable support ending in 6, 7
    CHECK(fixtures::e7_u_nonneighbors[33].size() == 17);
    CHECK(fixtures::e7_u_nonneighbors[33][0] == 6);
    CHECK(fixtures::e7_u_nonneighbors[33][1] == 7);

    // generated supports equal the published ones under the catalog-to-
    // published vertex relabeling
    auto relabel = graph_isomorphism(g, pairs);
    REQUIRE(!relabel.empty());
    for (int i = 0; i < 34; ++i) {
        std::vector<int> mapped;
        for (int j : sys.supports[i]) mapped.push_back(relabel[j - 1] + 1);
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == fixtures::e7_u_nonneighbors[relabel[i]]);
    }
}

TEST_CASE("five-point system: pentagon supports and exact equations") {
    USystem sys = m05_u_system();
    REQUIRE(sys.vars == 5);
    CHECK(sys.supports == std::vector<std::vector<int>>{
                              {2, 5}, {1, 3}, {2, 4}, {3, 5}, {1, 4}});

    // the cross-ratio values satisfy all five equations at any chart point
    std::mt19937 rng(4101);
    std::uniform_int_distribution<int> num(-12, 12);
    int done = 0;
    while (done < 25) {
        Rat x(num(rng), 7), y(num(rng), 5);
        std::array<Rat, 5> u;
        try {
            u = m05_u_values(x, y);
        } catch (const std::runtime_error&) {
            continue;
        }
        for (int i = 0; i < 5; ++i) {
            Rat prod = 1;
            for (int j : sys.supports[i]) prod *= u[j - 1];
            CHECK(u[i] + prod == 1);
        }
        ++done;
    }
}

TEST_CASE("minor-ratio values satisfy the fifteen equations identically") {
    std::mt19937 rng(907);
    for (int trial = 0; trial < 100; ++trial) {
        auto u = plucker_u_values(random_generic_matrix(rng));
        for (int i = 0; i < 15; ++i) CHECK(u_equation_residual(u, i) == 0);
    }

    // the census reference matrix is itself a valid sample
    RatMatrix ref(3, std::vector<Rat>(6));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) ref[r][c] = fixtures::example_cubic_matrix[r][c];
    auto u = plucker_u_values(ref);
    for (int i = 0; i < 15; ++i) CHECK(u_equation_residual(u, i) == 0);

    // six points on a conic sit on the boundary divisor of u_1
    RatMatrix conic(3, std::vector<Rat>(6));
    for (int t = 1; t <= 6; ++t) {
        conic[0][t - 1] = t * t;
        conic[1][t - 1] = t;
        conic[2][t - 1] = 1;
    }
    CHECK_THROWS_WITH_AS(plucker_u_values(conic), doctest::Contains("conic"),
                         std::runtime_error);
}

TEST_CASE("u-values are projective invariants of the configuration") {
    std::mt19937 rng(7119);
    RatMatrix m = random_generic_matrix(rng);
    auto u = plucker_u_values(m);

    RatMatrix scaled = m;
    const std::array<Rat, 6> lambda = {Rat(2), Rat(-3), Rat(1, 2),
                                       Rat(5), Rat(-1, 7), Rat(4)};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) scaled[r][c] *= lambda[c];
    CHECK(plucker_u_values(scaled) == u);

    const int g[3][3] = {{2, 1, 0}, {-1, 1, 3}, {0, 2, 1}};  // det = 9
    RatMatrix moved(3, std::vector<Rat>(6, Rat(0)));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c)
            for (int k = 0; k < 3; ++k) moved[r][c] += Rat(g[r][k]) * m[k][c];
    CHECK(plucker_u_values(moved) == u);
}

TEST_CASE("root-product route agrees with the minor route on the cusp chart") {
    std::mt19937 rng(36901);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = random_generic_d(rng);
        auto via_roots = dunit_u_values(d);
        auto via_minors = plucker_u_values(cuspidal_matrix(d));
        CHECK(via_roots == via_minors);
        for (int i = 0; i < 15; ++i) CHECK(u_equation_residual(via_roots, i) == 0);
    }

    // a pinned value of the printed u_11 formula
    std::array<Rat, 6> d = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
    auto u = dunit_u_values(d);
    CHECK(u[10] == Rat((-4) * 9 * (-2) * 9, (-3) * 10 * (-3) * 8));

    // a repeated coordinate names the pair hyperplane
    std::array<Rat, 6> bad = {Rat(7), Rat(2), Rat(3), Rat(7), Rat(5), Rat(6)};
    CHECK_THROWS_WITH_AS(dunit_u_values(bad), doctest::Contains("14"),
                         std::runtime_error);
}

TEST_CASE("log-Jacobian of the fifteen u's has rank four") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> num(-15, 15);
    int done = 0;
    while (done < 20) {
        std::array<Rat, 4> x;
        for (auto& v : x) v = Rat(num(rng), 4);
        int r;
        try {
            r = jacobian_rank(x);  // also cross-checks modulo primes
        } catch (const std::runtime_error&) {
            continue;  // degenerate chart point
        }
        CHECK(r == 4);
        ++done;
    }
}

TEST_CASE("twelve of the thirty-two sign patterns occur on the real points") {
    auto census = m05_sign_census();
    CHECK(census.size() == 12);
    std::set<std::string> expect = {"+++++", "-++++", "+-+++", "++-++",
                                    "+++-+", "++++-", "-----", "+-+-+",
                                    "++-+-", "-++-+", "+-++-", "-+-++"};
    CHECK(census == expect);

    // the region 0 < x < y < 1 is the all-positive one
    auto u = m05_u_values(Rat(1, 3), Rat(1, 2));
    for (const auto& v : u) CHECK(v > 0);
}

TEST_CASE("a vanishing u drives every variable of its support row to one") {
    // ten paths inside the region 0 < x < y < 1, two toward each facet
    // u_i = 0.  Along every path the support variables of equation i must
    // approach 1 (their residuals shrink with the path parameter).
    USystem sys = m05_u_system();
    std::mt19937 rng(88001);
    std::uniform_int_distribution<int> pick(2, 5);
    auto path_point = [&](int facet, const Rat& t, const Rat& c) -> std::array<Rat, 2> {
        switch (facet) {
            case 0: return {c, Rat(1 - t)};                  // u1 -> 0
            case 1: return {Rat(t * c), t};                  // u2 -> 0
            case 2: return {Rat(1 - t), Rat(1 - t * c)};     // u3 -> 0
            case 3: return {t, c};                           // u4 -> 0
            default: return {Rat(c - t), c};                 // u5 -> 0
        }
    };
    for (int facet = 0; facet < 5; ++facet) {
        for (int rep = 0; rep < 2; ++rep) {
            Rat c(1, pick(rng));  // random interior constant in (0, 1/2]
            Rat gap_before = -1, val_before = -1;
            for (int k = 3; k <= 12; k += 3) {
                Rat t(1, 1 << k);
                auto [x, y] = path_point(facet, t, c);
                auto u = m05_u_values(x, y);
                for (const auto& v : u) CHECK(v > 0);  // stayed in the region
                if (val_before >= 0) CHECK(u[facet] < val_before);
                val_before = u[facet];
                Rat gap = 0;
                for (int j : sys.supports[facet]) gap += Rat(abs(Rat(1 - u[j - 1])));
                if (gap_before >= 0) CHECK(gap < gap_before);
                gap_before = gap;
            }
            CHECK(val_before < Rat(1, 100));
            CHECK(gap_before < Rat(1, 100));
        }
    }

    // the fifteen-variable family also has an all-positive sample chamber
    auto u = dunit_u_values({Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});
    for (int i = 0; i < 15; ++i) {
        CHECK(u[i] > 0);
        CHECK(u[i] < 1);
    }
}

TEST_CASE("canonical form in the explicit chart equals the closed formula") {
    auto closed = [](const std::array<Rat, 4>& x) {
        Rat den = (x[0] - 1) * x[1] * (x[3] - 1) *
                  (x[0] * x[1] * x[2] - x[0] * x[1] * x[3] - x[0] * x[2] * x[3] +
                   x[1] * x[2] * x[3] + x[0] * x[3] - x[1] * x[2]);
        return Rat((x[1] - 1) / den);
    };
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-9, 9);
    int done = 0;
    while (done < 50) {
        std::array<Rat, 4> x;
        for (auto& v : x) v = Rat(num(rng), 3);
        Rat got;
        try {
            got = omega_chart_eval(x);
        } catch (const std::runtime_error&) {
            continue;
        }
        CHECK(got == closed(x));
        ++done;
    }

    // x2 = 1 is a zero of the numerator, x4 = 1 a pole
    CHECK(omega_chart_eval({Rat(3), Rat(1), Rat(5), Rat(7)}) == 0);
    CHECK_THROWS_AS(omega_chart_eval({Rat(3), Rat(2), Rat(5), Rat(1)}),
                    std::runtime_error);
}

TEST_CASE("the canonical form has 432 images under the symmetry group") {
    LogForm om = omega_root_form();
    REQUIRE(om.rows.size() == 4);
    for (const auto& row : om.rows) {
        REQUIRE(row.size() == 36);
        int sum = 0;
        for (int e : row) sum += e;
        CHECK(sum == 0);  // every dlog argument is degree-balanced
    }

    OmegaOrbit orbit = omega_orbit_count();
    CHECK(orbit.orbit_size == 432);
    CHECK(orbit.group_order == 51840);
    CHECK(orbit.stabilizer_order == 120);
}
