#include "pezzo/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pezzo {

int64_t pairing(const PicardClass& a, const PicardClass& b) {
    int64_t s = a.c[0] * b.c[0];
    for (int i = 1; i <= a.n; ++i) s -= a.c[i] * b.c[i];
    return s;
}

PicardClass canonical_class(int n) {
    PicardClass k{n, Coeffs(n + 1, 1)};
    k.c[0] = -3;
    return k;
}

PicardClass negate(const PicardClass& a) {
    PicardClass r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

PicardClass add(const PicardClass& a, const PicardClass& b) {
    PicardClass r = a;
    for (int i = 0; i <= a.n; ++i) r.c[i] += b.c[i];
    return r;
}

std::string RootLabel::str() const {
    switch (kind) {
        case RootKind::Pair:
            return std::to_string(idx[0]) + std::to_string(idx[1]);
        case RootKind::Triple:
            return std::to_string(idx[0]) + std::to_string(idx[1]) + std::to_string(idx[2]);
        case RootKind::Six:
            return idx[0] == 0 ? std::string("s") : "b" + std::to_string(idx[0]);
    }
    return "?";
}

RootCatalog build_root_catalog(int n) {
    if (n < 4 || n > 7) throw std::invalid_argument("root catalog needs n in 4..7");
    RootCatalog cat;
    cat.n = n;
    auto push = [&cat, n](const PicardClass& v, RootLabel lb) {
        cat.roots.push_back(v);
        cat.labels.push_back(lb);
        cat.index_[v.c] = cat.size() - 1;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            PicardClass v{n, Coeffs(n + 1, 0)};
            v.c[i] = 1;
            v.c[j] = -1;
            push(v, {RootKind::Pair, {i, j, 0}});
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                PicardClass v{n, Coeffs(n + 1, 0)};
                v.c[0] = 1;
                v.c[i] = v.c[j] = v.c[k] = -1;
                push(v, {RootKind::Triple, {i, j, k}});
            }
    if (n == 6) {
        PicardClass v{n, Coeffs(n + 1, -1)};
        v.c[0] = 2;
        push(v, {RootKind::Six, {0, 0, 0}});
    } else if (n == 7) {
        for (int i = 1; i <= n; ++i) {
            PicardClass v{n, Coeffs(n + 1, -1)};
            v.c[0] = 2;
            v.c[i] = 0;
            push(v, {RootKind::Six, {i, 0, 0}});
        }
    }
    return cat;
}

int RootCatalog::signed_index(const PicardClass& v) const {
    auto it = index_.find(v.c);
    if (it != index_.end()) return it->second;
    it = index_.find(negate(v).c);
    if (it != index_.end()) return it->second + size();
    return -1;
}

int RootCatalog::index_of_label(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i].str() == s) return i;
    return -1;
}

std::vector<std::vector<int>> RootCatalog::d_forms() const {
    std::vector<std::vector<int>> out;
    out.reserve(roots.size());
    for (const auto& lb : labels) {
        std::vector<int> f(n, 0);
        switch (lb.kind) {
            case RootKind::Pair:
                f[lb.idx[0] - 1] = 1;
                f[lb.idx[1] - 1] = -1;
                break;
            case RootKind::Triple:
                f[lb.idx[0] - 1] = f[lb.idx[1] - 1] = f[lb.idx[2] - 1] = 1;
                break;
            case RootKind::Six:
                for (int i = 0; i < n; ++i) f[i] = 1;
                if (lb.idx[0] > 0) f[lb.idx[0] - 1] = 0;
                break;
        }
        out.push_back(std::move(f));
    }
    return out;
}

LineCatalog build_line_catalog(int n) {
    if (n < 4 || n > 7) throw std::invalid_argument("line catalog needs n in 4..7");
    LineCatalog lc;
    lc.n = n;
    auto push = [&lc, n](const PicardClass& v, std::string lb) {
        lc.lines.push_back(v);
        lc.labels.push_back(std::move(lb));
    };
    for (int i = 1; i <= n; ++i) {
        PicardClass v{n, Coeffs(n + 1, 0)};
        v.c[i] = 1;
        push(v, "E" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            PicardClass v{n, Coeffs(n + 1, 0)};
            v.c[0] = 1;
            v.c[i] = v.c[j] = -1;
            push(v, "F" + std::to_string(i) + std::to_string(j));
        }
    if (n == 5) {
        PicardClass v{n, Coeffs(n + 1, -1)};
        v.c[0] = 2;
        push(v, "G");
    } else if (n == 6) {
        // Gi is the conic through the five points other than i
        for (int i = 1; i <= n; ++i) {
            PicardClass v{n, Coeffs(n + 1, -1)};
            v.c[0] = 2;
            v.c[i] = 0;
            push(v, "G" + std::to_string(i));
        }
    } else if (n == 7) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                PicardClass v{n, Coeffs(n + 1, -1)};
                v.c[0] = 2;
                v.c[i] = v.c[j] = 0;
                push(v, "G" + std::to_string(i) + std::to_string(j));
            }
        for (int i = 1; i <= n; ++i) {
            PicardClass v{n, Coeffs(n + 1, -1)};
            v.c[0] = 3;
            v.c[i] = -2;
            push(v, "H" + std::to_string(i));
        }
    }
    return lc;
}

int LineCatalog::index_of_label(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == s) return i;
    return -1;
}

std::vector<std::vector<int64_t>> LineCatalog::intersection_matrix() const {
    std::vector<std::vector<int64_t>> m(size(), std::vector<int64_t>(size()));
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) m[i][j] = pairing(lines[i], lines[j]);
    return m;
}

PicardClass WeylElement::apply(const PicardClass& x) const {
    PicardClass y{n, Coeffs(n + 1, 0)};
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= n; ++c) y.c[r] += m[r][c] * x.c[c];
    return y;
}

bool WeylElement::preserves_form_and_k() const {
    // columns are the images of the basis vectors; pairwise pairings must
    // reproduce diag(+1, -1, ..., -1)
    std::vector<PicardClass> cols;
    for (int c = 0; c <= n; ++c) {
        PicardClass b{n, Coeffs(n + 1, 0)};
        b.c[c] = 1;
        cols.push_back(apply(b));
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            int64_t want = (i == j) ? (i == 0 ? 1 : -1) : 0;
            if (pairing(cols[i], cols[j]) != want) return false;
        }
    PicardClass k = canonical_class(n);
    return apply(k) == k;
}

Perm WeylElement::root_perm(const RootCatalog& cat) const {
    const int N = cat.size();
    Perm p(2 * N);
    for (int i = 0; i < N; ++i) {
        int s = cat.signed_index(apply(cat.roots[i]));
        if (s < 0) throw std::runtime_error("image of a root is not a root");
        p.img[i] = s;
        p.img[i + N] = s < N ? s + N : s - N;
    }
    return p;
}

Perm WeylElement::line_perm(const LineCatalog& lines) const {
    std::map<Coeffs, int> idx;
    for (int i = 0; i < lines.size(); ++i) idx[lines.lines[i].c] = i;
    Perm p(lines.size());
    for (int i = 0; i < lines.size(); ++i) {
        auto it = idx.find(apply(lines.lines[i]).c);
        if (it == idx.end()) throw std::runtime_error("image of a line is not a line");
        p.img[i] = it->second;
    }
    return p;
}

WeylElement identity_weyl(int n) {
    WeylElement w;
    w.n = n;
    w.m.assign(n + 1, Coeffs(n + 1, 0));
    for (int i = 0; i <= n; ++i) w.m[i][i] = 1;
    return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement r = identity_weyl(a.n);
    for (int i = 0; i <= a.n; ++i)
        for (int j = 0; j <= a.n; ++j) {
            int64_t s = 0;
            for (int k = 0; k <= a.n; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

WeylElement reflection(const PicardClass& r) {
    if (pairing(r, r) != -2 || pairing(r, canonical_class(r.n)) != 0)
        throw std::invalid_argument("reflection requires a root (r.r = -2, r.K = 0)");
    const int n = r.n;
    WeylElement w = identity_weyl(n);
    for (int c = 0; c <= n; ++c) {
        PicardClass b{n, Coeffs(n + 1, 0)};
        b.c[c] = 1;
        int64_t t = pairing(b, r);
        for (int row = 0; row <= n; ++row) w.m[row][c] += t * r.c[row];
    }
    return w;
}

std::vector<WeylElement> weyl_generators(int n) {
    std::vector<WeylElement> gens;
    for (int i = 1; i < n; ++i) {
        PicardClass r{n, Coeffs(n + 1, 0)};
        r.c[i] = 1;
        r.c[i + 1] = -1;
        gens.push_back(reflection(r));
    }
    PicardClass cr{n, Coeffs(n + 1, 0)};
    cr.c[0] = 1;
    cr.c[1] = cr.c[2] = cr.c[3] = -1;
    gens.push_back(reflection(cr));
    return gens;
}

uint64_t weyl_group_order(int n) {
    RootCatalog cat = build_root_catalog(n);
    std::vector<Perm> perms;
    for (const auto& g : weyl_generators(n)) perms.push_back(g.root_perm(cat));
    return StabilizerChain(2 * cat.size(), perms).order();
}

int64_t char_poly_value(int n, int64_t q) {
    if (n == 6) return (q - 1) * (q - 4) * (q - 5) * (q - 7) * (q - 8) * (q - 11);
    if (n == 7) return (q - 1) * (q - 5) * (q - 7) * (q - 9) * (q - 11) * (q - 13) * (q - 17);
    throw std::invalid_argument("characteristic polynomial known for n = 6, 7");
}

int64_t reduced_char_poly_at_one(int n) {
    int64_t v = 1;
    if (n == 6)
        for (int64_t e : {4, 5, 7, 8, 11}) v *= (e - 1);
    else if (n == 7)
        for (int64_t e : {5, 7, 9, 11, 13, 17}) v *= (e - 1);
    else
        throw std::invalid_argument("n must be 6 or 7");
    return v;
}

int64_t finite_field_complement_count(int n, int64_t q) {
    RootCatalog cat = build_root_catalog(n);
    auto forms = cat.d_forms();
    const int N = cat.size();
    // depth-first over the coordinates, carrying the partial value of each
    // form mod q; leaves contribute when every form is nonzero
    std::vector<int64_t> acc(N, 0);
    int64_t count = 0;
    std::vector<int64_t> digit(n, 0);
    int level = 0;
    // iterative enumeration to keep the hot loop flat
    std::vector<std::vector<int64_t>> saved(n + 1, std::vector<int64_t>(N, 0));
    while (true) {
        if (level == n) {
            bool ok = true;
            for (int i = 0; i < N; ++i)
                if (saved[n][i] % q == 0) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
            --level;
            while (level >= 0 && digit[level] == q - 1) {
                digit[level] = 0;
                --level;
            }
            if (level < 0) break;
            ++digit[level];
        }
        // push: saved[level+1] = saved[level] + digit[level] * column(level)
        for (int i = 0; i < N; ++i)
            saved[level + 1][i] = saved[level][i] + digit[level] * forms[i][level];
        ++level;
    }
    return count;
}

std::vector<std::vector<int64_t>> cremona_d_matrix_times3(int n) {
    std::vector<std::vector<int64_t>> m6 = {
        {1, 0, -1, 1, 1, -2},   {1, 3, 2, 1, 1, 1},  {-2, 0, -1, -2, -2, -2},
        {1, 0, -1, 1, -2, 1},   {1, 0, -1, -2, 1, 1}, {-2, 0, -1, 1, 1, 1}};
    if (n == 6) return m6;
    if (n == 7) {
        std::vector<std::vector<int64_t>> m7;
        for (int i = 0; i < 6; ++i) {
            auto row = m6[i];
            row.push_back(0);
            m7.push_back(row);
        }
        m7.push_back({1, 0, 2, 1, 1, 1, 3});
        return m7;
    }
    throw std::invalid_argument("cremona d-matrix known for n = 6, 7");
}

namespace {

// Linear root -> d-form map.  Writing a root as r0*L - sum(b_i E_i), the
// associated form is sum(b_i d_i): pairs give dj - di, triples di + dj + dk,
// and the degree-2 roots the six-term sums.  Linearity in r is what makes the
// induced signed permutation well defined.
std::vector<int64_t> linear_d_form(const PicardClass& r) {
    std::vector<int64_t> f(r.n);
    for (int i = 1; i <= r.n; ++i) f[i - 1] = -r.c[i];
    return f;
}

}  // namespace

CremonaReport verify_cremona_matrices(int n) {
    CremonaReport rep;
    RootCatalog cat = build_root_catalog(n);
    const int N = cat.size();
    auto c3 = cremona_d_matrix_times3(n);

    std::map<std::vector<int64_t>, std::pair<int, int>> form_index;  // form -> (root, sign)
    for (int i = 0; i < N; ++i) {
        auto f = linear_d_form(cat.roots[i]);
        form_index[f] = {i, +1};
        for (auto& v : f) v = -v;
        form_index[f] = {i, -1};
    }

    // induced signed permutation of the positive roots: form of root i,
    // composed with the matrix, must equal +-3 times the form of some root
    Perm induced(2 * N);
    rep.valid_signed_permutation = true;
    for (int i = 0; i < N; ++i) {
        auto f = linear_d_form(cat.roots[i]);
        std::vector<int64_t> h(n, 0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) h[j] += f[k] * c3[k][j];
        for (auto& v : h) {
            if (v % 3 != 0) {
                rep.valid_signed_permutation = false;
                break;
            }
            v /= 3;
        }
        auto it = rep.valid_signed_permutation ? form_index.find(h) : form_index.end();
        if (it == form_index.end()) {
            rep.valid_signed_permutation = false;
            rep.mismatches.push_back(cat.labels[i].str() + " (image not a root form)");
            return rep;
        }
        int tgt = it->second.second > 0 ? it->second.first : it->second.first + N;
        induced.img[i] = tgt;
        induced.img[i + N] = tgt < N ? tgt + N : tgt - N;
    }

    rep.involution = (induced * induced).is_identity();

    // membership in the reflection group, and the generation claim
    std::vector<Perm> refl_perms;
    for (const auto& g : weyl_generators(n)) refl_perms.push_back(g.root_perm(cat));
    StabilizerChain weyl(2 * N, refl_perms);
    rep.in_weyl_group = weyl.contains(induced);

    std::vector<Perm> with_matrix;
    for (int i = 1; i < n; ++i) {
        PicardClass r{n, Coeffs(n + 1, 0)};
        r.c[i] = 1;
        r.c[i + 1] = -1;
        with_matrix.push_back(reflection(r).root_perm(cat));
    }
    with_matrix.push_back(induced);
    rep.generates_with_transpositions =
        StabilizerChain(2 * N, with_matrix).order() == weyl.order();

    // literal comparison with the reflection at L - E1 - E2 - E3
    PicardClass cr{n, Coeffs(n + 1, 0)};
    cr.c[0] = 1;
    cr.c[1] = cr.c[2] = cr.c[3] = -1;
    Perm s123 = reflection(cr).root_perm(cat);
    rep.equals_cremona_reflection = (induced == s123);
    if (!rep.equals_cremona_reflection)
        for (int i = 0; i < N; ++i)
            if (induced[i] != s123[i]) rep.mismatches.push_back(cat.labels[i].str());

    // identify the element as a product of orthogonal reflections if it is one
    for (int a = 0; a < N && rep.identified.empty(); ++a)
        for (int b = a + 1; b < N; ++b) {
            if (pairing(cat.roots[a], cat.roots[b]) != 0) continue;
            Perm prod = reflection(cat.roots[a]).root_perm(cat) *
                        reflection(cat.roots[b]).root_perm(cat);
            if (prod == induced) {
                rep.identified = "s_" + cat.labels[a].str() + " * s_" + cat.labels[b].str();
                break;
            }
        }
    if (rep.identified.empty() && rep.equals_cremona_reflection) rep.identified = "s_123";

    if (n == 7) {
        auto m6 = cremona_d_matrix_times3(6);
        for (int i = 0; i < 6 && rep.restriction_matches; ++i)
            for (int j = 0; j < 6; ++j)
                if (c3[i][j] != m6[i][j]) {
                    rep.restriction_matches = false;
                    break;
                }
    }

    rep.pass = rep.valid_signed_permutation && rep.involution && rep.in_weyl_group &&
               rep.generates_with_transpositions && rep.restriction_matches;
    return rep;
}

}  // namespace pezzo
