#include "pezzo/subsystems.hpp"

#include "pezzo/fixtures.hpp"
#include "pezzo/orbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pezzo {

std::string kind_name(SubsystemKind k) {
    switch (k) {
        case SubsystemKind::A1: return "A1";
        case SubsystemKind::A2: return "A2";
        case SubsystemKind::A2x3: return "A2x3";
        case SubsystemKind::A3x2: return "A3x2";
        case SubsystemKind::A1x7: return "A1x7";
        case SubsystemKind::A7: return "A7";
    }
    return "?";
}

int parse_root_token(const RootCatalog& cat, const std::string& token) {
    std::string label = token;
    if (token.size() == 1 && token != "s") label = "b" + token;
    int idx = cat.index_of_label(label);
    if (idx < 0) throw std::runtime_error("unknown root token: " + token);
    return idx;
}

namespace {

// rank of the span of the given roots (small exact elimination)
int span_rank(const RootCatalog& cat, const std::vector<int>& roots) {
    RatMatrix m;
    for (int r : roots) {
        std::vector<Rat> row;
        for (auto v : cat.roots[r].c) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    return rank_exact(std::move(m));
}

}  // namespace

Subsystem validate_subsystem(const RootCatalog& cat, std::vector<int> roots,
                             SubsystemKind kind) {
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
        throw std::runtime_error("duplicate root in subsystem");

    std::set<int> inset(roots.begin(), roots.end());

    // closure: any root of the ambient system expressible as a +- combination
    // of two members must itself be a member
    for (size_t a = 0; a < roots.size(); ++a)
        for (size_t b = a + 1; b < roots.size(); ++b) {
            const auto& ra = cat.roots[roots[a]];
            const auto& rb = cat.roots[roots[b]];
            for (const PicardClass& cand : {add(ra, rb), add(ra, negate(rb))}) {
                int s = cat.signed_index(cand);
                if (s < 0) continue;
                int pos = s % cat.size();
                if (!inset.count(pos))
                    throw std::runtime_error("subsystem not closed at root " +
                                             cat.labels[pos].str());
            }
        }

    // connected components of the non-orthogonality graph
    Subsystem out;
    out.kind = kind;
    out.roots = roots;
    std::vector<int> comp(roots.size(), -1);
    int ncomp = 0;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (comp[i] != -1) continue;
        std::vector<size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < roots.size(); ++j)
                if (comp[j] == -1 &&
                    pairing(cat.roots[roots[cur]], cat.roots[roots[j]]) != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    out.factors.assign(ncomp, {});
    for (size_t i = 0; i < roots.size(); ++i) out.factors[comp[i]].push_back(roots[i]);

    // factor types: a connected simply-laced system of rank k with k(k+1)/2
    // positive roots is A_k
    auto factor_is_ak = [&](const std::vector<int>& f, int k) {
        return span_rank(cat, f) == k &&
               static_cast<int>(f.size()) == k * (k + 1) / 2;
    };
    auto expect = [&](size_t nfac, int k) {
        if (out.factors.size() != nfac)
            throw std::runtime_error(kind_name(kind) + ": expected " +
                                     std::to_string(nfac) + " factors, found " +
                                     std::to_string(out.factors.size()));
        for (const auto& f : out.factors)
            if (!factor_is_ak(f, k))
                throw std::runtime_error(kind_name(kind) + ": factor of wrong type");
    };
    switch (kind) {
        case SubsystemKind::A1: expect(1, 1); break;
        case SubsystemKind::A2: expect(1, 2); break;
        case SubsystemKind::A2x3: expect(3, 2); break;
        case SubsystemKind::A3x2: expect(2, 3); break;
        case SubsystemKind::A1x7: expect(7, 1); break;
        case SubsystemKind::A7: expect(1, 7); break;
    }
    return out;
}

std::vector<Subsystem> enumerate_a2(const RootCatalog& cat) {
    std::set<std::vector<int>> seen;
    std::vector<Subsystem> out;
    const int N = cat.size();
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            int64_t p = pairing(cat.roots[i], cat.roots[j]);
            if (p != 1 && p != -1) continue;
            // third positive root of the A2 spanned by i, j; in the
            // (+,-,...,-) signature roots square to -2, so pairing +1 plays
            // the role the usual -1 does: the sum is again a root
            PicardClass third = p == 1 ? add(cat.roots[i], cat.roots[j])
                                       : add(cat.roots[i], negate(cat.roots[j]));
            int s = cat.signed_index(third);
            if (s < 0) throw std::runtime_error("A2 closure left the root system");
            std::vector<int> tri{i, j, s % N};
            std::sort(tri.begin(), tri.end());
            if (seen.insert(tri).second)
                out.push_back(validate_subsystem(cat, tri, SubsystemKind::A2));
        }
    return out;
}

std::vector<Subsystem> enumerate_a2x3_e6(const RootCatalog& cat) {
    if (cat.n != 6) throw std::invalid_argument("A2x3 enumeration is for E6");
    auto a2 = enumerate_a2(cat);
    const int M = static_cast<int>(a2.size());
    // compatibility: disjoint root sets, all cross pairings zero
    auto compatible = [&](const Subsystem& x, const Subsystem& y) {
        for (int r : x.roots)
            for (int s : y.roots) {
                if (r == s) return false;
                if (pairing(cat.roots[r], cat.roots[s]) != 0) return false;
            }
        return true;
    };
    std::vector<std::vector<char>> comp(M, std::vector<char>(M, 0));
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) comp[i][j] = comp[j][i] = compatible(a2[i], a2[j]);

    std::vector<Subsystem> out;
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
            if (!comp[i][j]) continue;
            for (int k = j + 1; k < M; ++k) {
                if (!comp[i][k] || !comp[j][k]) continue;
                std::vector<int> roots;
                for (const auto* s : {&a2[i], &a2[j], &a2[k]})
                    roots.insert(roots.end(), s->roots.begin(), s->roots.end());
                out.push_back(validate_subsystem(cat, roots, SubsystemKind::A2x3));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subsystem> enumerate_a1x7_e7(const RootCatalog& cat) {
    if (cat.n != 7) throw std::invalid_argument("A1x7 enumeration is for E7");
    const int N = cat.size();
    std::vector<std::vector<char>> orth(N, std::vector<char>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            orth[i][j] = i != j && pairing(cat.roots[i], cat.roots[j]) == 0;

    std::vector<Subsystem> out;
    std::vector<int> cur;
    // backtracking over increasing indices
    auto rec = [&](auto&& self, int start) -> void {
        if (cur.size() == 7) {
            out.push_back(validate_subsystem(cat, cur, SubsystemKind::A1x7));
            return;
        }
        for (int i = start; i < N; ++i) {
            bool ok = true;
            for (int c : cur)
                if (!orth[c][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

IncidenceMatrix build_incidence(const RootCatalog& cat,
                                const std::vector<Subsystem>& systems) {
    IncidenceMatrix m;
    m.rows = cat.size();
    m.cols = static_cast<int>(systems.size());
    m.entries.assign(m.rows, std::vector<int>(m.cols, 0));
    for (int c = 0; c < m.cols; ++c)
        for (int r : systems[c].roots) m.entries[r][c] = 1;

    RatMatrix q(m.rows, std::vector<Rat>(m.cols));
    IntMatrix z(m.rows, std::vector<Int>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            q[r][c] = m.entries[r][c];
            z[r][c] = m.entries[r][c];
        }
    m.rank_exact_q = rank_exact(std::move(q));
    for (int64_t p : {1048583LL, 1048589LL, 1048601LL})
        m.rank_mod_primes.emplace_back(p, rank_mod_p(z, p));
    return m;
}

std::vector<Subsystem> vertex_catalog(const RootCatalog& cat) {
    namespace fx = pezzo::fixtures;
    std::vector<Subsystem> out;
    auto build = [&](const auto& tokens, SubsystemKind kind) {
        std::vector<int> roots;
        for (const char* t : tokens) roots.push_back(parse_root_token(cat, t));
        out.push_back(validate_subsystem(cat, roots, kind));
    };
    if (cat.n == 6) {
        for (const char* t : fx::e6_a1_vertices)
            build(std::array<const char*, 1>{t}, SubsystemKind::A1);
        for (const auto& v : fx::e6_a2x3_vertices) build(v, SubsystemKind::A2x3);
    } else if (cat.n == 7) {
        for (const char* t : fx::e7_a1_vertices)
            build(std::array<const char*, 1>{t}, SubsystemKind::A1);
        for (const auto& v : fx::e7_a2_vertices) build(v, SubsystemKind::A2);
        for (const auto& v : fx::e7_a3x2_vertices) build(v, SubsystemKind::A3x2);
        for (const auto& v : fx::e7_a7_vertices) build(v, SubsystemKind::A7);
    } else {
        throw std::invalid_argument("vertex catalog exists for n = 6, 7");
    }
    return out;
}

EckardtTriples eckardt_triples(const LineCatalog& lc) {
    if (lc.n != 6) throw std::invalid_argument("Eckardt triples are an n = 6 notion");
    EckardtTriples out;
    auto idx = [&](const std::string& s) {
        int i = lc.index_of_label(s);
        if (i < 0) throw std::runtime_error("missing line " + s);
        return i;
    };
    // FFF: perfect matchings {ij}{kl}{mn} of the six labels
    int perm6[] = {1, 2, 3, 4, 5, 6};
    std::vector<std::array<std::pair<int, int>, 3>> matchings;
    // fix the partner of 1, then split the rest
    for (int a = 2; a <= 6; ++a) {
        std::vector<int> rest;
        for (int v : perm6)
            if (v != 1 && v != a) rest.push_back(v);
        // rest has 4 elements; 3 ways to pair them up
        int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (auto& p : pairings)
            matchings.push_back({std::make_pair(1, a),
                                 std::make_pair(rest[p[0]], rest[p[1]]),
                                 std::make_pair(rest[p[2]], rest[p[3]])});
    }
    for (const auto& mt : matchings) {
        std::array<int, 3> tri;
        for (int t = 0; t < 3; ++t) {
            auto [i, j] = mt[t];
            if (i > j) std::swap(i, j);
            tri[t] = idx("F" + std::to_string(i) + std::to_string(j));
        }
        std::sort(tri.begin(), tri.end());
        out.triples.push_back(tri);
        ++out.fff_count;
    }
    // EFG: {Ei, Fij, Gj} for i != j
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            int a = std::min(i, j), b = std::max(i, j);
            std::array<int, 3> tri = {idx("E" + std::to_string(i)),
                                      idx("F" + std::to_string(a) + std::to_string(b)),
                                      idx("G" + std::to_string(j))};
            std::sort(tri.begin(), tri.end());
            out.triples.push_back(tri);
            ++out.efg_count;
        }

    // transitivity: the W(E6) orbit of the first triple is the whole set
    std::vector<Perm> gens;
    for (const auto& g : weyl_generators(6)) gens.push_back(g.line_perm(lc));
    auto act = [](const Perm& g, const std::array<int, 3>& t) {
        std::array<int, 3> r = {g[t[0]], g[t[1]], g[t[2]]};
        std::sort(r.begin(), r.end());
        return r;
    };
    auto orb = enumerate_orbit(out.triples.front(), gens, act);
    std::set<std::array<int, 3>> all(out.triples.begin(), out.triples.end());
    std::set<std::array<int, 3>> orbset(orb.elements.begin(), orb.elements.end());
    out.single_orbit = (all == orbset);
    return out;
}

}  // namespace pezzo
