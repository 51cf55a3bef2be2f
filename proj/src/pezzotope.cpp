#include "pezzo/pezzotope.hpp"

#include "pezzo/fixtures.hpp"
#include "pezzo/orbit.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pezzo {

namespace {

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.begin();
    for (int x : b) {
        ia = std::lower_bound(ia, a.end(), x);
        if (ia != a.end() && *ia == x) return false;
    }
    return true;
}

void expect_group(const char* name, int got, int want) {
    if (got != want) {
        std::ostringstream os;
        os << "edge census mismatch in group " << name << ": got " << got << ", expected "
           << want;
        throw std::runtime_error(os.str());
    }
}

}  // namespace

bool PezzoGraph::adjacent(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<int> PezzoGraph::neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PezzoGraph build_graph(const RootCatalog& cat) {
    PezzoGraph g;
    g.n = cat.n;
    g.vertices = vertex_catalog(cat);
    const auto& V = g.vertices;
    const int nv = static_cast<int>(V.size());

    auto orth = [&](int ra, int rb) { return pairing(cat.roots[ra], cat.roots[rb]) == 0; };
    auto add_edge = [&](int a, int b) {
        SubsystemKind ka = V[a].kind, kb = V[b].kind;
        if (static_cast<int>(ka) > static_cast<int>(kb)) std::swap(ka, kb);
        g.edges.emplace_back(a, b);
        ++g.edge_census[{ka, kb}];
    };

    if (cat.n == 6) {
        // Two A1 vertices are joined exactly when their roots are orthogonal;
        // the 15 non-orthogonal pairs are the edges of the Petersen diagram
        // that groups the triples into the five A2x3 systems.  A1 joins an
        // A2x3 when its root is among the nine.
        for (int a = 0; a < nv; ++a)
            for (int b = a + 1; b < nv; ++b) {
                const auto& A = V[a];
                const auto& B = V[b];
                if (A.kind == SubsystemKind::A1 && B.kind == SubsystemKind::A1) {
                    if (orth(A.roots[0], B.roots[0])) add_edge(a, b);
                } else if (A.kind == SubsystemKind::A1 && B.kind == SubsystemKind::A2x3) {
                    if (contains(B.roots, A.roots[0])) add_edge(a, b);
                }
            }
        expect_group("A1-A1", g.edge_census[{SubsystemKind::A1, SubsystemKind::A1}], 30);
        expect_group("A1-A2x3", g.edge_census[{SubsystemKind::A1, SubsystemKind::A2x3}], 30);
        return g;
    }

    if (cat.n != 7) throw std::runtime_error("vertex graph defined for n = 6 and 7 only");

    // index lists per kind, in catalog order
    std::vector<int> a1s, a2s, a3x2s, a7s;
    for (int i = 0; i < nv; ++i) switch (V[i].kind) {
            case SubsystemKind::A1: a1s.push_back(i); break;
            case SubsystemKind::A2: a2s.push_back(i); break;
            case SubsystemKind::A3x2: a3x2s.push_back(i); break;
            case SubsystemKind::A7: a7s.push_back(i); break;
            default: throw std::runtime_error("unexpected vertex kind");
        }

    // A1-A1: orthogonal pairs.  The 12 non-orthogonal pairs each generate
    // one of the A2 vertices, so this matches the diagram's non-edge rule.
    for (size_t x = 0; x < a1s.size(); ++x)
        for (size_t y = x + 1; y < a1s.size(); ++y)
            if (orth(V[a1s[x]].roots[0], V[a1s[y]].roots[0])) add_edge(a1s[x], a1s[y]);
    expect_group("A1-A1", g.edge_census[{SubsystemKind::A1, SubsystemKind::A1}], 33);

    // A2-A2: both triangles inside a common A3x2 vertex, but not inside a
    // single A3 factor of it.
    for (size_t x = 0; x < a2s.size(); ++x)
        for (size_t y = x + 1; y < a2s.size(); ++y) {
            const auto& S1 = V[a2s[x]].roots;
            const auto& S2 = V[a2s[y]].roots;
            bool common_a3x2 = false, common_a3 = false;
            for (int t : a3x2s) {
                if (!contains_all(V[t].roots, S1) || !contains_all(V[t].roots, S2)) continue;
                common_a3x2 = true;
                for (const auto& f : V[t].factors) {
                    std::vector<int> fs = f;
                    std::sort(fs.begin(), fs.end());
                    if (contains_all(fs, S1) && contains_all(fs, S2)) common_a3 = true;
                }
            }
            if (common_a3x2 && !common_a3) add_edge(a2s[x], a2s[y]);
        }
    expect_group("A2-A2", g.edge_census[{SubsystemKind::A2, SubsystemKind::A2}], 24);

    // A1-A2: inclusion of the root in the triangle, or else the root
    // orthogonal to the triangle.  In the orthogonal case the pair spans a
    // disconnected A1 x A2 and the two systems share no A3; every
    // non-orthogonal, non-included pair closes up to an A3 instead.
    for (int a : a1s)
        for (int b : a2s) {
            int r = V[a].roots[0];
            const auto& S = V[b].roots;
            if (contains(S, r)) {
                add_edge(a, b);
                ++g.a1_a2_inclusion;
            } else {
                bool all_orth = true;
                for (int s : S)
                    if (!orth(r, s)) all_orth = false;
                if (all_orth) {
                    add_edge(a, b);
                    ++g.a1_a2_apart;
                }
            }
        }
    expect_group("A1-A2 inclusion", g.a1_a2_inclusion, 24);
    expect_group("A1-A2 apart", g.a1_a2_apart, 60);

    // A1-A3x2: inclusion, or else the exceptional configuration where the
    // pair is in no common A7 vertex and every A2 vertex through the root is
    // disjoint from the A3x2.
    for (int a : a1s)
        for (int b : a3x2s) {
            int r = V[a].roots[0];
            const auto& T = V[b].roots;
            if (contains(T, r)) {
                add_edge(a, b);
                ++g.a1_a3x2_inclusion;
                continue;
            }
            bool common_a7 = false;
            for (int c : a7s)
                if (contains(V[c].roots, r) && contains_all(V[c].roots, T)) common_a7 = true;
            bool all_disjoint = true;
            for (int s : a2s)
                if (contains(V[s].roots, r) && !disjoint(V[s].roots, T)) all_disjoint = false;
            if (!common_a7 && all_disjoint) {
                add_edge(a, b);
                ++g.a1_a3x2_special;
            }
        }
    expect_group("A1-A3x2 inclusion", g.a1_a3x2_inclusion, 54);
    expect_group("A1-A3x2 special", g.a1_a3x2_special, 6);

    // remaining groups are plain inclusions
    for (int a : a1s)
        for (int b : a7s)
            if (contains(V[b].roots, V[a].roots[0])) add_edge(a, b);
    for (int a : a2s)
        for (int b : a3x2s)
            if (contains_all(V[b].roots, V[a].roots)) add_edge(a, b);
    for (int a : a2s)
        for (int b : a7s)
            if (contains_all(V[b].roots, V[a].roots)) add_edge(a, b);
    for (int a : a3x2s)
        for (int b : a7s)
            if (contains_all(V[b].roots, V[a].roots)) add_edge(a, b);
    expect_group("A1-A7", g.edge_census[{SubsystemKind::A1, SubsystemKind::A7}], 24);
    expect_group("A2-A3x2", g.edge_census[{SubsystemKind::A2, SubsystemKind::A3x2}], 36);
    expect_group("A2-A7", g.edge_census[{SubsystemKind::A2, SubsystemKind::A7}], 24);
    expect_group("A3x2-A7", g.edge_census[{SubsystemKind::A3x2, SubsystemKind::A7}], 12);

    std::sort(g.edges.begin(), g.edges.end());
    expect_group("total", static_cast<int>(g.edges.size()), 297);
    return g;
}

std::vector<int> CliqueComplex::f_vector() const {
    std::vector<int> f;
    for (const auto& faces : faces_by_dim) f.push_back(static_cast<int>(faces.size()));
    return f;
}

long long CliqueComplex::euler_characteristic() const {
    long long chi = 0;
    int sign = 1;
    for (const auto& faces : faces_by_dim) {
        chi += sign * static_cast<long long>(faces.size());
        sign = -sign;
    }
    return chi;
}

IntMatrix CliqueComplex::boundary_matrix(int k) const {
    if (k <= 0 || k > dim()) throw std::runtime_error("boundary index out of range");
    const auto& rows_faces = faces_by_dim[k - 1];
    const auto& cols_faces = faces_by_dim[k];
    std::map<std::vector<int>, int> row_of;
    for (size_t i = 0; i < rows_faces.size(); ++i) row_of[rows_faces[i]] = static_cast<int>(i);
    IntMatrix m(rows_faces.size(), std::vector<Int>(cols_faces.size(), 0));
    for (size_t c = 0; c < cols_faces.size(); ++c) {
        const auto& face = cols_faces[c];
        int sign = 1;
        for (size_t drop = 0; drop < face.size(); ++drop) {
            std::vector<int> sub;
            for (size_t i = 0; i < face.size(); ++i)
                if (i != drop) sub.push_back(face[i]);
            m[row_of.at(sub)][c] = sign;
            sign = -sign;
        }
    }
    return m;
}

CliqueComplex clique_complex(const PezzoGraph& g) {
    CliqueComplex cx;
    cx.vertex_count = static_cast<int>(g.vertices.size());
    std::vector<std::vector<char>> adj(cx.vertex_count,
                                       std::vector<char>(cx.vertex_count, 0));
    for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = 1;

    std::vector<std::vector<int>> cur;
    for (int v = 0; v < cx.vertex_count; ++v) cur.push_back({v});
    while (!cur.empty()) {
        cx.faces_by_dim.push_back(cur);
        std::vector<std::vector<int>> nxt;
        for (const auto& face : cur)
            for (int v = face.back() + 1; v < cx.vertex_count; ++v) {
                bool ok = true;
                for (int u : face)
                    if (!adj[u][v]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    auto ext = face;
                    ext.push_back(v);
                    nxt.push_back(std::move(ext));
                }
            }
        cur = std::move(nxt);
    }
    return cx;
}

CliqueComplex complex_from_facets(int vertex_count,
                                  const std::vector<std::vector<int>>& facets) {
    CliqueComplex cx;
    cx.vertex_count = vertex_count;
    std::set<std::vector<int>> by_size_pool[64];
    size_t maxdim = 0;
    for (const auto& f : facets) {
        auto s = f;
        std::sort(s.begin(), s.end());
        // all subsets via bitmask
        for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < s.size(); ++i)
                if (mask & (1u << i)) sub.push_back(s[i]);
            maxdim = std::max(maxdim, sub.size() - 1);
            by_size_pool[sub.size() - 1].insert(std::move(sub));
        }
    }
    for (size_t d = 0; d <= maxdim; ++d)
        cx.faces_by_dim.emplace_back(by_size_pool[d].begin(), by_size_pool[d].end());
    return cx;
}

HomologyReport homology(const CliqueComplex& cx, const std::vector<int64_t>& primes) {
    HomologyReport rep;
    rep.primes = primes;
    rep.euler = cx.euler_characteristic();
    const int d = cx.dim();
    auto f = cx.f_vector();

    // boundary ranks modulo each prime
    for (int64_t p : primes) {
        std::vector<int> ranks(d + 2, 0);  // ranks[k] = rank of boundary_k, k = 1..d
        for (int k = 1; k <= d; ++k) ranks[k] = rank_mod_p(cx.boundary_matrix(k), p);
        rep.ranks_by_prime.push_back(ranks);
    }
    rep.torsion_free_evidence = true;
    for (const auto& r : rep.ranks_by_prime)
        if (r != rep.ranks_by_prime.front()) rep.torsion_free_evidence = false;

    const auto& rk = rep.ranks_by_prime.front();
    std::vector<int> betti_p(d + 1);
    for (int k = 0; k <= d; ++k) betti_p[k] = f[k] - rk[k] - (k + 1 <= d ? rk[k + 1] : 0);

    // connected components, exactly
    std::vector<int> parent(cx.vertex_count);
    for (int i = 0; i < cx.vertex_count; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    if (cx.faces_by_dim.size() > 1)
        for (const auto& e : cx.faces_by_dim[1]) parent[find(e[0])] = find(e[1]);
    int components = 0;
    for (int i = 0; i < cx.vertex_count; ++i)
        if (find(i) == i) ++components;

    // Rational Betti numbers from a squeeze.  Modular ranks can only
    // underestimate the rational ranks, so each rational Betti number is at
    // most its modular counterpart.  When the modular profile is supported
    // in degrees 0 and d only, connectivity pins b_0 and the alternating
    // f-vector sum (which equals the alternating Betti sum in any
    // characteristic) pins b_d.  No rational elimination needed.
    bool squeeze = betti_p[0] == components;
    for (int k = 1; k < d; ++k)
        if (betti_p[k] != 0) squeeze = false;
    rep.betti = betti_p;
    rep.certified_over_q = squeeze && rep.torsion_free_evidence;
    if (!squeeze) rep.certified_over_q = false;
    return rep;
}

std::vector<std::pair<int, int>> stanley_reisner(const PezzoGraph& g) {
    std::vector<std::pair<int, int>> out;
    const int nv = static_cast<int>(g.vertices.size());
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            if (!g.adjacent(a, b)) out.emplace_back(a + 1, b + 1);
    return out;
}

std::vector<std::pair<int, int>> parse_monomial_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, ',')) {
        int a = 0, b = 0;
        if (sscanf(term.c_str(), "s%d*s%d", &a, &b) != 2)
            throw std::runtime_error("unparsable monomial: " + term);
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> alexander_dual(const CliqueComplex& cx) {
    std::vector<std::vector<int>> out;
    for (const auto& facet : cx.facets()) {
        std::vector<int> comp;
        size_t i = 0;
        for (int v = 0; v < cx.vertex_count; ++v) {
            if (i < facet.size() && facet[i] == v)
                ++i;
            else
                comp.push_back(v);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> graph_isomorphism(const PezzoGraph& g,
                                   const std::vector<std::pair<int, int>>& nonedges_1based) {
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<std::vector<char>> adj_a(nv, std::vector<char>(nv, 0));
    for (auto [a, b] : g.edges) adj_a[a][b] = adj_a[b][a] = 1;
    std::vector<std::vector<char>> adj_b(nv, std::vector<char>(nv, 1));
    for (int i = 0; i < nv; ++i) adj_b[i][i] = 0;
    for (auto [a, b] : nonedges_1based) adj_b[a - 1][b - 1] = adj_b[b - 1][a - 1] = 0;

    std::vector<int> deg_a(nv, 0), deg_b(nv, 0);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            deg_a[i] += adj_a[i][j];
            deg_b[i] += adj_b[i][j];
        }

    std::vector<int> map(nv, -1);
    std::vector<char> used(nv, 0);
    std::function<bool(int)> rec = [&](int v) {
        if (v == nv) return true;
        for (int w = 0; w < nv; ++w) {
            if (used[w] || deg_a[v] != deg_b[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (adj_a[v][u] != adj_b[w][map[u]]) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (rec(v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return {};
    return map;
}

FacetTypeReport facet_links(const PezzoGraph& g, const CliqueComplex& cx) {
    FacetTypeReport rep;
    const int nv = cx.vertex_count;

    // expected simplicial link f-vectors per class; class membership is
    // compared separately, through the relabeling onto the published
    // indexing (see graph_isomorphism)
    std::vector<std::vector<int>> expected;
    if (g.n == 6) {
        expected = {{9, 21, 14}, {6, 12, 8}};
    } else {
        for (const auto& cls : fixtures::e7_facet_classes)
            expected.emplace_back(cls.simple_fvector.rbegin(), cls.simple_fvector.rend());
    }

    rep.all_matched = true;
    for (int v = 0; v < nv; ++v) {
        // the link of v is the full subcomplex on its neighbours: since the
        // complex is flag, that is the clique complex of the induced graph
        auto nb = g.neighbors(v);
        std::vector<std::vector<int>> cur;
        for (int u : nb) cur.push_back({u});
        std::vector<int> fv;
        while (!cur.empty()) {
            fv.push_back(static_cast<int>(cur.size()));
            std::vector<std::vector<int>> nxt;
            for (const auto& face : cur)
                for (int u : nb) {
                    if (u <= face.back()) continue;
                    bool ok = true;
                    for (int w : face)
                        if (!g.adjacent(w, u)) ok = false;
                    if (ok) {
                        auto ext = face;
                        ext.push_back(u);
                        nxt.push_back(std::move(ext));
                    }
                }
            cur = std::move(nxt);
        }
        rep.link_fvectors.push_back(fv);
        int cls = -1;
        for (size_t c = 0; c < expected.size(); ++c)
            if (fv == expected[c]) cls = static_cast<int>(c);
        rep.matched_class.push_back(cls);
        if (cls < 0) rep.all_matched = false;
    }
    return rep;
}

namespace {

// determinant of a square rational matrix, plain elimination
Rat det_rat(RatMatrix m) {
    const size_t n = m.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace

HullReport hull_check(const std::vector<std::vector<int>>& matrix4xn) {
    if (matrix4xn.size() != 4) throw std::runtime_error("expected a 4-row matrix");
    const int np = static_cast<int>(matrix4xn[0].size());
    HullReport rep;
    rep.simplicial = true;

    auto orient = [&](int a, int b, int c, int d, int e) {
        RatMatrix m(5, std::vector<Rat>(5));
        int pts[5] = {a, b, c, d, e};
        for (int r = 0; r < 5; ++r) {
            m[r][0] = 1;
            for (int k = 0; k < 4; ++k) m[r][k + 1] = matrix4xn[k][pts[r]];
        }
        Rat dt = det_rat(std::move(m));
        return dt == 0 ? 0 : (dt > 0 ? 1 : -1);
    };

    for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np; ++b)
            for (int c = b + 1; c < np; ++c)
                for (int d = c + 1; d < np; ++d) {
                    int side = 0;
                    bool facet = true, coplanar = false;
                    for (int e = 0; e < np && facet; ++e) {
                        if (e == a || e == b || e == c || e == d) continue;
                        int s = orient(a, b, c, d, e);
                        if (s == 0) {
                            coplanar = true;
                            continue;
                        }
                        if (side == 0)
                            side = s;
                        else if (s != side)
                            facet = false;
                    }
                    if (facet && side != 0) {
                        if (coplanar) rep.simplicial = false;
                        rep.facets.push_back({a, b, c, d});
                    }
                }

    // face counts from the facet subsets
    std::set<std::vector<int>> faces[4];
    for (const auto& f : rep.facets)
        for (unsigned mask = 1; mask < 16; ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < 4; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            faces[sub.size() - 1].insert(std::move(sub));
        }
    for (auto& s : faces) rep.f_vector.push_back(static_cast<int>(s.size()));
    rep.every_column_is_vertex = static_cast<int>(faces[0].size()) == np;
    return rep;
}

RegionOrbit region_orbit_count(const RootCatalog& cat) {
    auto verts = vertex_catalog(cat);
    const int N = cat.size();

    // a catalog state is packed as a string: per subsystem a length byte
    // followed by the sorted positive-root indices, subsystems sorted
    auto pack = [](std::vector<std::vector<int>> parts) {
        for (auto& p : parts) std::sort(p.begin(), p.end());
        std::vector<std::string> chunks;
        for (const auto& p : parts) {
            std::string s;
            s.push_back(static_cast<char>(p.size()));
            for (int r : p) s.push_back(static_cast<char>(r));
            chunks.push_back(std::move(s));
        }
        std::sort(chunks.begin(), chunks.end());
        std::string out;
        for (const auto& c : chunks) out += c;
        return out;
    };

    std::vector<std::vector<int>> seed;
    for (const auto& v : verts) seed.push_back(v.roots);
    std::string seed_key = pack(seed);

    std::vector<Perm> gens;
    for (const auto& w : weyl_generators(cat.n)) gens.push_back(w.root_perm(cat));

    auto act = [&](const Perm& g, const std::string& state) {
        std::vector<std::vector<int>> parts;
        size_t i = 0;
        while (i < state.size()) {
            int len = static_cast<unsigned char>(state[i++]);
            std::vector<int> p(len);
            for (int k = 0; k < len; ++k)
                p[k] = g[static_cast<unsigned char>(state[i++])] % N;
            parts.push_back(std::move(p));
        }
        return pack(std::move(parts));
    };

    auto orbit = enumerate_orbit(seed_key, gens, act, size_t(1) << 22);
    if (!orbit.complete) throw std::runtime_error("orbit budget exceeded");

    RegionOrbit out;
    out.orbit_size = static_cast<long long>(orbit.size());
    out.group_order = Int(weyl_group_order(cat.n));
    out.stabilizer_order = out.group_order / out.orbit_size;
    return out;
}

}  // namespace pezzo
