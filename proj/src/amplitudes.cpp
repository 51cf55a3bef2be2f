#include "pezzo/amplitudes.hpp"

#include "pezzo/uforms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pezzo {

namespace {

// does every face one dimension down sit inside a facet?
void require_pure(const CliqueComplex& cx) {
    if (cx.faces_by_dim.size() < 2) return;
    const auto& facets = cx.facets();
    for (const auto& f : cx.faces_by_dim[cx.faces_by_dim.size() - 2]) {
        bool inside = false;
        for (const auto& top : facets) {
            if (std::includes(top.begin(), top.end(), f.begin(), f.end())) {
                inside = true;
                break;
            }
        }
        if (!inside)
            throw std::runtime_error("complex is not pure: a maximal face is short");
    }
}

// triangulations of a convex polygon on 1..n as maximal noncrossing
// diagonal sets
bool crossing(std::pair<int, int> a, std::pair<int, int> b) {
    auto inside = [](int x, std::pair<int, int> c) {
        return c.first < x && x < c.second;
    };
    return inside(b.first, a) != inside(b.second, a) && b.first != a.first &&
           b.first != a.second && b.second != a.first && b.second != a.second;
}

// Mandelstam label of a polygon diagonal: the leaf set it cuts off,
// normalized to the side of size at most n/2 and, for the even middle
// size, to the side avoiding leaf n.
std::string diagonal_label(int n, std::pair<int, int> d) {
    std::vector<int> side;
    for (int v = d.first; v < d.second; ++v) side.push_back(v);
    std::vector<int> comp;
    for (int v = 1; v <= n; ++v)
        if (!std::binary_search(side.begin(), side.end(), v)) comp.push_back(v);
    if (comp.size() < side.size() ||
        (comp.size() == side.size() && side.back() == n))
        side = comp;
    std::string lab = "s";
    for (int v : side) lab += static_cast<char>('0' + v);
    return lab;
}

ReciprocalSum polygon_amplitude(int n) {
    std::vector<std::pair<int, int>> diags;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!(i == 1 && j == n)) diags.push_back({i, j});

    // collect the labels in a fixed order: adjacent pairs around the
    // polygon first, then the deeper cuts
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    for (const auto& d : diags) {
        std::string lab = diagonal_label(n, d);
        if (!index.count(lab)) {
            index[lab] = static_cast<int>(labels.size());
            labels.push_back(lab);
        }
    }

    const int need = n - 3;  // diagonals per triangulation
    ReciprocalSum amp;
    amp.degree = -need;
    amp.labels = labels;
    std::vector<int> pick(need);
    auto rec = [&](auto&& self, int from, int k) -> void {
        if (k == need) {
            std::vector<int> term;
            for (int id : pick) term.push_back(index[diagonal_label(n, diags[id])]);
            std::sort(term.begin(), term.end());
            amp.terms.push_back(term);
            return;
        }
        for (int i = from; i < static_cast<int>(diags.size()); ++i) {
            bool ok = true;
            for (int j = 0; j < k; ++j) ok &= !crossing(diags[pick[j]], diags[i]);
            if (!ok) continue;
            pick[k] = i;
            self(self, i + 1, k + 1);
        }
    };
    rec(rec, 0, 0);
    std::sort(amp.terms.begin(), amp.terms.end());
    return amp;
}

}  // namespace

ReciprocalSum facet_amplitude(const CliqueComplex& cx) {
    require_pure(cx);
    ReciprocalSum amp;
    amp.degree = -(cx.dim() + 1);
    for (int i = 1; i <= cx.vertex_count; ++i)
        amp.labels.push_back("s" + std::to_string(i));
    amp.terms = cx.facets();
    std::sort(amp.terms.begin(), amp.terms.end());
    return amp;
}

ReciprocalSum biadjoint_m6() { return polygon_amplitude(6); }

ReciprocalSum biadjoint_m5() { return polygon_amplitude(5); }

Rat evaluate(const ReciprocalSum& amp, const std::vector<Rat>& s) {
    if (s.size() != amp.labels.size())
        throw std::runtime_error("value vector length does not match variables");
    Rat total = 0;
    for (const auto& term : amp.terms) {
        Rat prod = 1;
        for (int i : term) {
            if (s[i] == 0)
                throw std::runtime_error("pole: " + amp.labels[i] + " = 0");
            prod *= s[i];
        }
        total += 1 / prod;
    }
    return total;
}

MandelstamMap mandelstam_map(int n) {
    if (n != 6)
        throw std::runtime_error(
            "only n = 6 has a published u-parametrization to read the map from");

    MandelstamMap mm;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = b + 1; c <= 6; ++c)
                mm.row_labels.push_back(std::string() + static_cast<char>('0' + a) +
                                        static_cast<char>('0' + b) +
                                        static_cast<char>('0' + c));
    mm.row_labels.push_back("t");

    mm.matrix.assign(21, std::vector<Int>(15, 0));
    for (int i = 1; i <= 15; ++i) {
        for (const auto& [tok, e] : u_minor_exponents(i)) {
            int row = -1;
            if (tok == "q") {
                row = 20;
            } else {
                for (int r = 0; r < 20; ++r)
                    if (mm.row_labels[r] == tok) row = r;
            }
            mm.matrix[row][i - 1] = e;
        }
    }
    for (int r = 0; r < 20; ++r) mm.row_labels[r] = "s" + mm.row_labels[r];

    RatMatrix q;
    for (const auto& row : mm.matrix) q.emplace_back(row.begin(), row.end());
    mm.rank = rank_exact(q);

    // relations: left kernel of the 21 s_ijk rows, i.e. the nullspace of
    // the transposed 15 x 21 matrix
    RatMatrix t(15, std::vector<Rat>(21));
    for (int r = 0; r < 21; ++r)
        for (int c = 0; c < 15; ++c) t[c][r] = Rat(mm.matrix[r][c]);
    // row reduce and read the free-column kernel basis
    std::vector<int> pivot_col;
    int pr = 0;
    for (int pc = 0; pc < 21 && pr < 15; ++pc) {
        int piv = pr;
        while (piv < 15 && t[piv][pc] == 0) ++piv;
        if (piv == 15) continue;
        std::swap(t[pr], t[piv]);
        Rat inv = t[pr][pc];
        for (int c = 0; c < 21; ++c) t[pr][c] /= inv;
        for (int r = 0; r < 15; ++r) {
            if (r == pr || t[r][pc] == 0) continue;
            Rat f = t[r][pc];
            for (int c = 0; c < 21; ++c) t[r][c] -= f * t[pr][c];
        }
        pivot_col.push_back(pc);
        ++pr;
    }
    std::vector<bool> is_pivot(21, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < 21; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(21, Rat(0));
        v[free] = 1;
        for (int r = 0; r < pr; ++r) v[pivot_col[r]] = -t[r][free];
        mm.constraints.push_back(std::move(v));
    }
    return mm;
}

}  // namespace pezzo
