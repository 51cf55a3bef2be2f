#include "pezzo/tropical.hpp"

#include "pezzo/fixtures.hpp"
#include "pezzo/lattice.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pezzo {

namespace {

std::string triple_name(const std::array<int, 3>& t) {
    return std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
}

}  // namespace

std::vector<std::array<int, 3>> plucker_triples(int n) {
    std::vector<std::array<int, 3>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
    return out;
}

int triple_index(int n, int i, int j, int k) {
    int a = i, b = j, c = k;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (a == b || b == c || a < 1 || c > n)
        throw std::runtime_error("bad triple");
    // position in the lexicographic listing
    int idx = 0;
    for (int x = 1; x < a; ++x) idx += (n - x) * (n - x - 1) / 2;
    for (int y = a + 1; y < b; ++y) idx += n - y;
    idx += c - b - 1;
    return idx;
}

std::vector<SignedRelation> plucker_relations(int three, int n) {
    if (three != 3 || (n != 6 && n != 7))
        throw std::runtime_error("plucker_relations: only 3 x {6,7} supported");
    std::vector<SignedRelation> out;
    for (int S = 1; S <= n; ++S) {
        std::vector<int> rest;
        for (int x = 1; x <= n; ++x)
            if (x != S) rest.push_back(x);
        const int m = static_cast<int>(rest.size());
        for (int ai = 0; ai < m; ++ai)
            for (int bi = ai + 1; bi < m; ++bi)
                for (int ci = bi + 1; ci < m; ++ci)
                    for (int di = ci + 1; di < m; ++di) {
                        int a = rest[ai], b = rest[bi], c = rest[ci], d = rest[di];
                        SignedRelation rel;
                        auto mono = [&](int p, int q, int r, int s) {
                            std::vector<int> v = {triple_index(n, S, p, q),
                                                  triple_index(n, S, r, s)};
                            std::sort(v.begin(), v.end());
                            return v;
                        };
                        rel.pos.push_back(mono(a, b, c, d));
                        rel.pos.push_back(mono(a, d, b, c));
                        rel.neg.push_back(mono(a, c, b, d));
                        out.push_back(rel);
                    }
    }
    return out;
}

int Chirotope::sign(int i, int j, int k) const {
    int a = i, b = j, c = k, s = 1;
    if (a > b) std::swap(a, b), s = -s;
    if (b > c) std::swap(b, c), s = -s;
    if (a > b) std::swap(a, b), s = -s;
    return s * signs[triple_index(n, a, b, c)];
}

Chirotope chirotope_from_config(const RatMatrix& m) {
    if (m.size() != 3) throw std::runtime_error("configuration must have 3 rows");
    Chirotope chi;
    chi.n = static_cast<int>(m[0].size());
    chi.witness = m;
    for (const auto& t : plucker_triples(chi.n)) {
        Rat d = det3(m, t[0] - 1, t[1] - 1, t[2] - 1);
        if (d == 0)
            throw std::runtime_error("vanishing minor " + triple_name(t) +
                                     ": configuration not in general position");
        chi.signs.push_back(d > 0 ? 1 : -1);
    }
    return chi;
}

std::vector<SignedRelation> twist_relations(const std::vector<SignedRelation>& rels,
                                            const Chirotope& chi) {
    auto triples = plucker_triples(chi.n);
    std::vector<SignedRelation> out;
    out.reserve(rels.size());
    for (const auto& rel : rels) {
        SignedRelation tw;
        auto place = [&](const std::vector<int>& mono, int base_sign) {
            int s = base_sign;
            for (int idx : mono) s *= chi.signs[idx];
            (s > 0 ? tw.pos : tw.neg).push_back(mono);
        };
        for (const auto& mono : rel.pos) place(mono, 1);
        for (const auto& mono : rel.neg) place(mono, -1);
        if (tw.pos.empty() || tw.neg.empty())
            throw std::runtime_error(
                "malformed chirotope: a twisted relation lost one of its parts");
        out.push_back(tw);
    }
    return out;
}

bool membership_twisted(const std::vector<Rat>& w,
                        const std::vector<SignedRelation>& twisted) {
    auto val = [&](const std::vector<int>& mono) {
        Rat v = 0;
        for (int idx : mono) v += w[idx];
        return v;
    };
    for (const auto& rel : twisted) {
        Rat mp = val(rel.pos[0]);
        for (size_t i = 1; i < rel.pos.size(); ++i) mp = std::min(mp, val(rel.pos[i]));
        Rat mn = val(rel.neg[0]);
        for (size_t i = 1; i < rel.neg.size(); ++i) mn = std::min(mn, val(rel.neg[i]));
        if (mp != mn) return false;
    }
    return true;
}

bool membership(const std::vector<Rat>& w,
                const std::vector<SignedRelation>& rels, const Chirotope& chi) {
    return membership_twisted(w, twist_relations(rels, chi));
}

std::vector<Rat> lineality_canonical(int n, const std::vector<Rat>& w) {
    auto triples = plucker_triples(n);
    const int N = static_cast<int>(triples.size());
    // echelonize the n torus generators once per call (cheap at this size)
    RatMatrix basis(n, std::vector<Rat>(N, 0));
    for (int i = 1; i <= n; ++i)
        for (int t = 0; t < N; ++t)
            if (triples[t][0] == i || triples[t][1] == i || triples[t][2] == i)
                basis[i - 1][t] = 1;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < N && r < n; ++c) {
        int p = -1;
        for (int rr = r; rr < n; ++rr)
            if (basis[rr][c] != 0) { p = rr; break; }
        if (p < 0) continue;
        std::swap(basis[r], basis[p]);
        Rat lead = basis[r][c];
        for (int cc = 0; cc < N; ++cc) basis[r][cc] /= lead;
        for (int rr = 0; rr < n; ++rr)
            if (rr != r && basis[rr][c] != 0) {
                Rat f = basis[rr][c];
                for (int cc = 0; cc < N; ++cc) basis[rr][cc] -= f * basis[r][cc];
            }
        pivots.push_back(c);
        ++r;
    }
    std::vector<Rat> v = w;
    for (int i = 0; i < r; ++i) {
        Rat f = v[pivots[i]];
        if (f == 0) continue;
        for (int c = 0; c < N; ++c) v[c] -= f * basis[i][c];
    }
    return v;
}

Chirotope find_region_chirotope(int n,
                                const std::vector<std::array<int, 3>>& target_labels,
                                unsigned long long seed, long long budget) {
    auto triples = plucker_triples(n);
    const int N = static_cast<int>(triples.size());
    std::set<int> target;
    for (const auto& t : target_labels) target.insert(triple_index(n, t[0], t[1], t[2]));
    auto rels = plucker_relations(3, n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    long long degenerate = 0, misfit = 0;
    for (long long tries = 1; tries <= budget; ++tries) {
        RatMatrix m(3, std::vector<Rat>(n));
        for (auto& row : m)
            for (auto& v : row) v = entry(rng);
        Chirotope chi;
        chi.n = n;
        chi.witness = m;
        bool ok = true;
        for (const auto& t : triples) {
            Rat d = det3(m, t[0] - 1, t[1] - 1, t[2] - 1);
            if (d == 0) { ok = false; break; }
            chi.signs.push_back(d > 0 ? 1 : -1);
        }
        if (!ok) { ++degenerate; continue; }
        auto twisted = twist_relations(rels, chi);
        ok = true;
        for (int t = 0; t < N && ok; ++t) {
            std::vector<Rat> w(N, 0);
            w[t] = 1;
            bool pass = membership_twisted(w, twisted);
            if (pass != (target.count(t) > 0)) ok = false;
        }
        if (!ok) { ++misfit; continue; }
        return chi;
    }
    std::ostringstream msg;
    msg << "chirotope search budget exhausted after " << budget << " draws ("
        << degenerate << " degenerate, " << misfit << " wrong ray sets)";
    throw std::runtime_error(msg.str());
}

// ------------------------------------------------------------- Gr(3,6) rays

std::vector<TropRay> gr36_ray_catalog() {
    const int n = 6;
    auto triples = plucker_triples(n);
    const int N = static_cast<int>(triples.size());
    auto unit = [&](int i, int j, int k) {
        std::vector<Rat> v(N, 0);
        v[triple_index(n, i, j, k)] = 1;
        return v;
    };
    auto addv = [&](std::vector<Rat> a, const std::vector<Rat>& b) {
        for (int c = 0; c < N; ++c) a[c] += b[c];
        return a;
    };
    auto fvec = [&](int i, int j, int k, int l) {
        return addv(addv(unit(i, j, k), unit(i, j, l)),
                    addv(unit(i, k, l), unit(j, k, l)));
    };
    std::vector<TropRay> out;
    for (const auto& t : triples)
        out.push_back({"e" + triple_name(t), unit(t[0], t[1], t[2])});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    out.push_back({"f" + std::to_string(i) + std::to_string(j) +
                                       std::to_string(k) + std::to_string(l),
                                   fvec(i, j, k, l)});
    // the 90 ordered choices of three disjoint pairs fall into 30 classes
    // modulo lineality; keep the lexicographically least name of each class
    std::map<std::vector<Rat>, std::string> g_classes;
    std::vector<std::array<int, 2>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    for (const auto& p1 : pairs)
        for (const auto& p2 : pairs) {
            if (p2[0] == p1[0] || p2[0] == p1[1] || p2[1] == p1[0] || p2[1] == p1[1])
                continue;
            std::set<int> used = {p1[0], p1[1], p2[0], p2[1]};
            std::vector<int> rest;
            for (int x = 1; x <= n; ++x)
                if (!used.count(x)) rest.push_back(x);
            std::array<int, 2> p3 = {rest[0], rest[1]};
            std::vector<Rat> g = addv(addv(fvec(p2[0], p2[1], p3[0], p3[1]),
                                           unit(p1[0], p3[0], p3[1])),
                                      unit(p1[1], p3[0], p3[1]));
            std::string name = "g" + std::to_string(p1[0]) + std::to_string(p1[1]) +
                               "," + std::to_string(p2[0]) + std::to_string(p2[1]) +
                               "," + std::to_string(p3[0]) + std::to_string(p3[1]);
            auto key = lineality_canonical(n, g);
            auto it = g_classes.find(key);
            if (it == g_classes.end() || name < it->second) {
                if (it == g_classes.end()) out.push_back({name, g});
                else
                    for (auto& ray : out)
                        if (ray.name == it->second) { ray.name = name; ray.v = g; }
                g_classes[key] = name;
            }
        }
    return out;
}

Gr36Report gr36_ray_and_pair_filter(const Chirotope& chi) {
    if (chi.n != 6) throw std::runtime_error("gr36 filter needs a 6-point chirotope");
    auto twisted = twist_relations(plucker_relations(3, 6), chi);
    auto catalog = gr36_ray_catalog();
    Gr36Report rep;
    std::vector<std::vector<Rat>> passing_vecs;
    for (const auto& ray : catalog)
        if (membership_twisted(ray.v, twisted)) {
            rep.passing_rays.push_back(ray.name);
            passing_vecs.push_back(ray.v);
        }
    const int k = static_cast<int>(rep.passing_rays.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            std::vector<Rat> s = passing_vecs[a];
            for (size_t c = 0; c < s.size(); ++c) s[c] += passing_vecs[b][c];
            if (membership_twisted(s, twisted))
                rep.passing_pairs.push_back({rep.passing_rays[a], rep.passing_rays[b]});
        }

    // identify each passing ray with a vertex of the 15-vertex graph
    RootCatalog cat = build_root_catalog(6);
    PezzoGraph g = build_graph(cat);
    rep.ray_vertex.assign(k, -1);
    for (int a = 0; a < k; ++a) {
        const std::string& name = rep.passing_rays[a];
        if (name[0] == 'e') {
            for (size_t v = 0; v < g.vertices.size(); ++v)
                if (g.vertices[v].kind == SubsystemKind::A1 &&
                    cat.labels[g.vertices[v].roots[0]].str() == name.substr(1))
                    rep.ray_vertex[a] = static_cast<int>(v);
        } else if (name[0] == 'g') {
            std::set<std::string> want = {name.substr(1, 2), name.substr(4, 2),
                                          name.substr(7, 2)};
            for (size_t v = 0; v < g.vertices.size(); ++v) {
                if (g.vertices[v].kind != SubsystemKind::A2x3) continue;
                std::set<std::string> have;
                for (const auto& comp : g.vertices[v].factors)
                    for (int r : comp)
                        if (cat.labels[r].kind == RootKind::Pair)
                            have.insert(cat.labels[r].str());
                if (have == want) rep.ray_vertex[a] = static_cast<int>(v);
            }
        }
    }
    std::set<std::pair<int, int>> got;
    bool mapped = true;
    std::map<std::string, int> name_to_vertex;
    for (int a = 0; a < k; ++a) {
        if (rep.ray_vertex[a] < 0) mapped = false;
        name_to_vertex[rep.passing_rays[a]] = rep.ray_vertex[a];
    }
    for (const auto& [a, b] : rep.passing_pairs) {
        int va = name_to_vertex[a], vb = name_to_vertex[b];
        got.insert({std::min(va, vb), std::max(va, vb)});
    }
    std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
    rep.matches_graph = mapped && k == 15 && got == edges;
    return rep;
}

// ---------------------------------------------------- Gr(3,7) partial filter

Gr37Report gr37_partial_filter(const Chirotope& chi) {
    if (chi.n != 7) throw std::runtime_error("gr37 filter needs a 7-point chirotope");
    const int n = 7;
    auto triples = plucker_triples(n);
    const int N = static_cast<int>(triples.size());
    auto twisted = twist_relations(plucker_relations(3, n), chi);
    auto unit = [&](const std::string& lab) {
        std::vector<Rat> v(N, 0);
        v[triple_index(n, lab[0] - '0', lab[1] - '0', lab[2] - '0')] = 1;
        return v;
    };
    Gr37Report rep;
    std::vector<std::vector<Rat>> vecs;
    for (const char* lab : fixtures::e7_a1_vertices) {
        rep.candidates.push_back(std::string("e") + lab);
        vecs.push_back(unit(lab));
    }
    const std::array<std::pair<const char*, const char*>, 3> sums = {
        {{"126", "457"}, {"124", "367"}, {"237", "456"}}};
    for (const auto& [a, b] : sums) {
        rep.candidates.push_back("e" + std::string(a) + "+e" + b);
        auto v = unit(a);
        const auto u = unit(b);
        for (int c = 0; c < N; ++c) v[c] += u[c];
        vecs.push_back(v);
    }
    const int k = static_cast<int>(rep.candidates.size());
    rep.all_candidates_pass = true;
    for (int a = 0; a < k; ++a)
        if (!membership_twisted(vecs[a], twisted)) rep.all_candidates_pass = false;
    std::set<std::pair<int, int>> pass;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            std::vector<Rat> s = vecs[a];
            for (int c = 0; c < N; ++c) s[c] += vecs[b][c];
            if (membership_twisted(s, twisted)) {
                pass.insert({a, b});
                rep.passing_pairs.push_back({rep.candidates[a], rep.candidates[b]});
            }
        }

    // vertex correspondence: coordinate rays by root label, the three sums
    // by the unique assignment making the pass set equal the induced edges
    // plus coordinate-ray-only extras
    RootCatalog cat = build_root_catalog(7);
    PezzoGraph g = build_graph(cat);
    std::vector<int> vx(k, -1);
    for (int a = 0; a < 10; ++a)
        for (size_t v = 0; v < g.vertices.size(); ++v)
            if (g.vertices[v].kind == SubsystemKind::A1 &&
                cat.labels[g.vertices[v].roots[0]].str() == rep.candidates[a].substr(1))
                vx[a] = static_cast<int>(v);
    const int V = static_cast<int>(g.vertices.size());
    int found = 0;
    for (int x = 10; x < V; ++x)
        for (int y = 10; y < V; ++y)
            for (int z = 10; z < V; ++z) {
                if (x == y || x == z || y == z) continue;
                vx[10] = x, vx[11] = y, vx[12] = z;
                std::set<std::pair<int, int>> induced, extras;
                bool ok = true;
                for (int a = 0; a < k && ok; ++a)
                    for (int b = a + 1; b < k && ok; ++b) {
                        bool edge = g.adjacent(vx[a], vx[b]);
                        bool p = pass.count({a, b}) > 0;
                        if (edge && !p) ok = false;     // missing induced edge
                        if (!edge && p) {
                            if (b >= 10) ok = false;    // extras only among e-rays
                            extras.insert({a, b});
                        }
                    }
                if (ok && !extras.empty()) {
                    ++found;
                    rep.sum_vertex = {x, y, z};
                    rep.extraneous_pairs.clear();
                    for (const auto& [a, b] : extras)
                        rep.extraneous_pairs.push_back(
                            {rep.candidates[a], rep.candidates[b]});
                }
            }
    rep.matches_induced_subgraph = (found == 1) && rep.all_candidates_pass;
    return rep;
}

// ------------------------------------------------------------ Yoshida route

YoshidaReport yoshida_route() {
    RootCatalog cat = build_root_catalog(6);
    auto systems = enumerate_a2x3_e6(cat);
    auto flats = enumerate_a2(cat);
    IncidenceMatrix m6 = build_incidence(cat, systems);
    auto dforms = cat.d_forms();
    const int S = static_cast<int>(systems.size());  // 40

    // evaluate the 40 nine-root products at sample points; the chamber
    // point with d strictly decreasing and positive makes every root form,
    // hence every product, positive, which fixes the circuit sign splits
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> num(1, 97);
    const int K = 24;
    std::vector<std::vector<Rat>> pts;
    pts.push_back({32, 16, 8, 4, 2, 1});
    while (static_cast<int>(pts.size()) < K) {
        std::vector<Rat> p(6);
        for (auto& v : p) v = Rat(num(rng), num(rng));
        pts.push_back(p);
    }
    RatMatrix vals(S, std::vector<Rat>(K));
    for (int j = 0; j < S; ++j)
        for (int q = 0; q < K; ++q) {
            Rat prod = 1;
            for (int r : systems[j].roots) {
                Rat lin = 0;
                for (int c = 0; c < 6; ++c) lin += Rat(dforms[r][c]) * pts[q][c];
                prod *= lin;
            }
            vals[j][q] = prod;
        }
    for (int j = 0; j < S; ++j)
        if (vals[j][0] <= 0)
            throw std::runtime_error("chamber point failed to make a product positive");

    // compress each product to coordinates over a row basis of the value
    // matrix, so circuit detection works on short vectors
    std::vector<int> basis_rows;
    {
        RatMatrix probe;
        for (int j = 0; j < S; ++j) {
            probe.push_back(vals[j]);
            if (rank_exact(probe) == static_cast<int>(probe.size()))
                basis_rows.push_back(j);
            else
                probe.pop_back();
        }
    }
    const int R = static_cast<int>(basis_rows.size());  // 10
    // pick R independent columns of the basis block and invert
    std::vector<int> basis_cols;
    {
        RatMatrix probe;
        for (int q = 0; q < K && static_cast<int>(basis_cols.size()) < R; ++q) {
            std::vector<Rat> col(R);
            for (int i = 0; i < R; ++i) col[i] = vals[basis_rows[i]][q];
            probe.push_back(col);
            if (rank_exact(probe) == static_cast<int>(probe.size()))
                basis_cols.push_back(q);
            else
                probe.pop_back();
        }
    }
    // coords[j] solves coords * B = vals[j] restricted to basis_cols, then
    // is verified on every sample column
    RatMatrix coords(S, std::vector<Rat>(R));
    {
        RatMatrix aug(R, std::vector<Rat>(R + S));
        for (int i = 0; i < R; ++i) {
            for (int c = 0; c < R; ++c) aug[i][c] = vals[basis_rows[c]][basis_cols[i]];
            for (int j = 0; j < S; ++j) aug[i][R + j] = vals[j][basis_cols[i]];
        }
        for (int c = 0; c < R; ++c) {
            int p = c;
            while (aug[p][c] == 0) ++p;
            std::swap(aug[c], aug[p]);
            Rat lead = aug[c][c];
            for (auto& v : aug[c]) v /= lead;
            for (int r = 0; r < R; ++r)
                if (r != c && aug[r][c] != 0) {
                    Rat f = aug[r][c];
                    for (size_t cc = 0; cc < aug[r].size(); ++cc)
                        aug[r][cc] -= f * aug[c][cc];
                }
        }
        for (int j = 0; j < S; ++j)
            for (int c = 0; c < R; ++c) coords[j][c] = aug[c][R + j];
        for (int j = 0; j < S; ++j)
            for (int q = 0; q < K; ++q) {
                Rat acc = 0;
                for (int c = 0; c < R; ++c) acc += coords[j][c] * vals[basis_rows[c]][q];
                if (acc != vals[j][q])
                    throw std::runtime_error("row-space compression failed");
            }
    }

    // exhaustive support-4 kernel search: a quadruple is a circuit when its
    // rank is 3 and the kernel vector has no zero entry
    YoshidaReport rep;
    std::vector<SignedRelation> circuits;
    for (int a = 0; a < S; ++a)
        for (int b = a + 1; b < S; ++b)
            for (int c = b + 1; c < S; ++c)
                for (int d = c + 1; d < S; ++d) {
                    RatMatrix q = {coords[a], coords[b], coords[c], coords[d]};
                    if (rank_exact(q) != 3) continue;
                    // solve x1 qa + x2 qb + x3 qc = qd
                    RatMatrix sys3 = {coords[a], coords[b], coords[c]};
                    if (rank_exact(sys3) != 3) continue;
                    // three unknowns, R equations: eliminate
                    std::vector<Rat> x(3, 0);
                    {
                        RatMatrix aug(3, std::vector<Rat>(4));
                        std::vector<int> cols;
                        RatMatrix probe;
                        for (int cc = 0; cc < R && cols.size() < 3; ++cc) {
                            std::vector<Rat> col = {coords[a][cc], coords[b][cc],
                                                    coords[c][cc]};
                            probe.push_back(col);
                            if (rank_exact(probe) == static_cast<int>(probe.size()))
                                cols.push_back(cc);
                            else
                                probe.pop_back();
                        }
                        for (int i = 0; i < 3; ++i) {
                            aug[i][0] = coords[a][cols[i]];
                            aug[i][1] = coords[b][cols[i]];
                            aug[i][2] = coords[c][cols[i]];
                            aug[i][3] = coords[d][cols[i]];
                        }
                        for (int ccc = 0; ccc < 3; ++ccc) {
                            int p = ccc;
                            while (aug[p][ccc] == 0) ++p;
                            std::swap(aug[ccc], aug[p]);
                            Rat lead = aug[ccc][ccc];
                            for (auto& v : aug[ccc]) v /= lead;
                            for (int r = 0; r < 3; ++r)
                                if (r != ccc && aug[r][ccc] != 0) {
                                    Rat f = aug[r][ccc];
                                    for (int k2 = 0; k2 < 4; ++k2)
                                        aug[r][k2] -= f * aug[ccc][k2];
                                }
                        }
                        for (int i = 0; i < 3; ++i) x[i] = aug[i][3];
                    }
                    if (x[0] == 0 || x[1] == 0 || x[2] == 0) continue;
                    // circuit coefficients (x1, x2, x3, -1): split by sign
                    SignedRelation rel;
                    (x[0] > 0 ? rel.pos : rel.neg).push_back({a});
                    (x[1] > 0 ? rel.pos : rel.neg).push_back({b});
                    (x[2] > 0 ? rel.pos : rel.neg).push_back({c});
                    rel.neg.push_back({d});
                    if (rel.pos.empty())
                        throw std::runtime_error("one-sided circuit over positives");
                    circuits.push_back(rel);
                }
    rep.circuit_count = static_cast<int>(circuits.size());

    // Bergman rays: the 36 coordinate rays map to the rows of the incidence
    // matrix, the 120 three-root flats to sums of three rows
    auto row_of = [&](int r) {
        std::vector<Rat> w(S);
        for (int j = 0; j < S; ++j) w[j] = m6.entries[r][j];
        return w;
    };
    for (int r = 0; r < cat.size(); ++r)
        if (membership_twisted(row_of(r), circuits)) rep.a1_passing.push_back(r);

    std::map<std::vector<Rat>, std::vector<int>> fibers;
    for (size_t i = 0; i < flats.size(); ++i) {
        std::vector<Rat> w(S, 0);
        for (int r : flats[i].roots)
            for (int j = 0; j < S; ++j) w[j] += m6.entries[r][j];
        fibers[w].push_back(static_cast<int>(i));
    }
    rep.a2_image_count = static_cast<int>(fibers.size());
    rep.fiber_size = fibers.empty() ? 0 : static_cast<int>(fibers.begin()->second.size());
    std::vector<std::vector<Rat>> image_vecs;
    std::vector<int> image_system;  // which nine-root system the fiber unions to
    for (const auto& [w, fl] : fibers) {
        if (static_cast<int>(fl.size()) != rep.fiber_size) rep.fiber_size = -1;
        image_vecs.push_back(w);
        std::set<int> u;
        for (int i : fl)
            for (int r : flats[i].roots) u.insert(r);
        std::vector<int> roots(u.begin(), u.end());
        int sysidx = -1;
        for (int j = 0; j < S; ++j)
            if (systems[j].roots == roots) sysidx = j;
        image_system.push_back(sysidx);
    }
    for (size_t i = 0; i < image_vecs.size(); ++i)
        if (membership_twisted(image_vecs[i], circuits))
            rep.a2_image_passing.push_back(static_cast<int>(i));

    // pair filter over the 15 passing rays
    std::vector<std::vector<Rat>> pass_vecs;
    for (int r : rep.a1_passing) pass_vecs.push_back(row_of(r));
    for (int i : rep.a2_image_passing) pass_vecs.push_back(image_vecs[i]);
    for (size_t a = 0; a < pass_vecs.size(); ++a)
        for (size_t b = a + 1; b < pass_vecs.size(); ++b) {
            std::vector<Rat> s = pass_vecs[a];
            for (int c = 0; c < S; ++c) s[c] += pass_vecs[b][c];
            if (membership_twisted(s, circuits))
                rep.passing_pairs.push_back(
                    {static_cast<int>(a), static_cast<int>(b)});
        }

    // the passing configuration is a Weyl image of the vertex catalog, not
    // the catalog itself (the chamber implicit in the positivity of the 40
    // products picks one region of the orbit).  Walk the orbit of the
    // catalog under the hyperplane action of the generators until it lands
    // on the passing configuration, then compare pairs against the mapped
    // edges of the graph.
    PezzoGraph g = build_graph(cat);
    const int NR = cat.size();
    std::vector<std::vector<int>> gen_h;
    for (const auto& w : weyl_generators(6)) {
        Perm p = w.root_perm(cat);
        std::vector<int> h(NR);
        for (int i = 0; i < NR; ++i) h[i] = p.of(i) % NR;
        gen_h.push_back(h);
    }
    auto state_of = [&](const std::vector<int>& h) {
        std::vector<int> a1;
        std::vector<std::vector<int>> sys;
        for (const auto& v : g.vertices) {
            if (v.kind == SubsystemKind::A1) a1.push_back(h[v.roots[0]]);
            else {
                std::vector<int> s;
                for (int r : v.roots) s.push_back(h[r]);
                std::sort(s.begin(), s.end());
                sys.push_back(s);
            }
        }
        std::sort(a1.begin(), a1.end());
        std::sort(sys.begin(), sys.end());
        return std::make_pair(a1, sys);
    };
    std::vector<int> want_a1 = rep.a1_passing;
    std::sort(want_a1.begin(), want_a1.end());
    std::vector<std::vector<int>> want_sys;
    for (int i : rep.a2_image_passing) {
        if (image_system[i] < 0) return rep;  // fiber union was not a system
        want_sys.push_back(systems[image_system[i]].roots);
    }
    std::sort(want_sys.begin(), want_sys.end());
    auto target = std::make_pair(want_a1, want_sys);

    std::vector<int> ident(NR);
    for (int i = 0; i < NR; ++i) ident[i] = i;
    std::set<std::pair<std::vector<int>, std::vector<std::vector<int>>>> seen;
    std::vector<std::vector<int>> frontier = {ident};
    seen.insert(state_of(ident));
    std::vector<int> match;
    while (!frontier.empty() && match.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& h : frontier) {
            if (state_of(h) == target) { match = h; break; }
            for (const auto& gh : gen_h) {
                std::vector<int> hh(NR);
                for (int i = 0; i < NR; ++i) hh[i] = gh[h[i]];
                if (seen.insert(state_of(hh)).second) next.push_back(hh);
            }
        }
        frontier = std::move(next);
    }
    if (match.empty()) return rep;

    // catalog vertex -> index in the passing list under the matching element
    std::vector<int> vert_to_pass(g.vertices.size(), -1);
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[v].kind == SubsystemKind::A1) {
            int r = match[g.vertices[v].roots[0]];
            for (size_t a = 0; a < rep.a1_passing.size(); ++a)
                if (rep.a1_passing[a] == r) vert_to_pass[v] = static_cast<int>(a);
        } else {
            std::vector<int> s;
            for (int r : g.vertices[v].roots) s.push_back(match[r]);
            std::sort(s.begin(), s.end());
            for (size_t a = 0; a < rep.a2_image_passing.size(); ++a)
                if (systems[image_system[rep.a2_image_passing[a]]].roots == s)
                    vert_to_pass[v] =
                        static_cast<int>(rep.a1_passing.size() + a);
        }
    }
    std::set<std::pair<int, int>> want_pairs;
    bool mapped = true;
    for (const auto& [u, v] : g.edges) {
        int a = vert_to_pass[u], b = vert_to_pass[v];
        if (a < 0 || b < 0) { mapped = false; break; }
        want_pairs.insert({std::min(a, b), std::max(a, b)});
    }
    std::set<std::pair<int, int>> got(rep.passing_pairs.begin(),
                                      rep.passing_pairs.end());
    rep.matches_graph = mapped && pass_vecs.size() == 15 && got == want_pairs;
    return rep;
}

}  // namespace pezzo
