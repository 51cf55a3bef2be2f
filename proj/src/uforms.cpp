#include "pezzo/uforms.hpp"

#include "pezzo/fixtures.hpp"
#include "pezzo/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pezzo {

namespace {

// ---- the fifteen u-coordinates as minor ratios ----
//
// Token "q-" stands for the negated conic binomial; everything else is a
// maximal minor p_ijk by column triple.

struct URatio {
    std::vector<const char*> num, den;
};

const std::array<URatio, 15> k_plucker = {{
    {{"q-"}, {"126", "135", "234", "456"}},
    {{"134", "156", "235", "246"}, {"135", "146", "234", "256"}},
    {{"134", "356"}, {"135", "346"}},
    {{"136", "145"}, {"135", "146"}},
    {{"125", "136", "246", "345"}, {"126", "135", "245", "346"}},
    {{"136", "235"}, {"135", "236"}},
    {{"123", "145", "246", "356"}, {"124", "135", "236", "456"}},
    {{"125", "356"}, {"135", "256"}},
    {{"125", "134"}, {"124", "135"}},
    {{"145", "235"}, {"135", "245"}},
    {{"135", "234"}, {"134", "235"}},
    {{"135", "456"}, {"145", "356"}},
    {{"124", "135", "256", "346"}, {"125", "134", "246", "356"}},
    {{"126", "135"}, {"125", "136"}},
    {{"135", "146", "236", "245"}, {"136", "145", "235", "246"}},
}};

// ---- the same u's over the root forms of the cuspidal chart ----
//
// Pair token "ij" is d_i - d_j, triple "ijk" is d_i + d_j + d_k, "s" the
// full sum.  A sign of -1 records a factor printed with the pair reversed;
// the signs cancel between the two routes (u_1 absorbs the -q).

struct SignedTok {
    const char* tok;
    int sign;
};

struct DRatio {
    std::array<SignedTok, 4> num, den;
};

const std::array<DRatio, 15> k_dunit = {{
    {{{{"36", -1}, {"25", 1}, {"14", 1}, {"s", 1}}},
     {{{"456", 1}, {"234", 1}, {"135", 1}, {"126", 1}}}},
    {{{{"134", 1}, {"156", 1}, {"235", 1}, {"246", 1}}},
     {{{"256", 1}, {"234", 1}, {"146", 1}, {"135", 1}}}},
    {{{{"14", 1}, {"134", 1}, {"56", 1}, {"356", 1}}},
     {{{"46", 1}, {"346", 1}, {"15", 1}, {"135", 1}}}},
    {{{{"36", 1}, {"136", 1}, {"45", 1}, {"145", 1}}},
     {{{"46", 1}, {"146", 1}, {"35", 1}, {"135", 1}}}},
    {{{{"125", 1}, {"136", 1}, {"246", 1}, {"345", 1}}},
     {{{"346", 1}, {"245", 1}, {"135", 1}, {"126", 1}}}},
    {{{{"16", 1}, {"136", 1}, {"25", 1}, {"235", 1}}},
     {{{"26", 1}, {"236", 1}, {"15", 1}, {"135", 1}}}},
    {{{{"123", 1}, {"145", 1}, {"246", 1}, {"356", 1}}},
     {{{"456", 1}, {"236", 1}, {"135", 1}, {"124", 1}}}},
    {{{{"12", 1}, {"125", 1}, {"36", 1}, {"356", 1}}},
     {{{"26", 1}, {"256", 1}, {"13", 1}, {"135", 1}}}},
    {{{{"25", 1}, {"125", 1}, {"34", 1}, {"134", 1}}},
     {{{"35", 1}, {"135", 1}, {"24", 1}, {"124", 1}}}},
    {{{{"14", 1}, {"145", 1}, {"23", 1}, {"235", 1}}},
     {{{"24", 1}, {"245", 1}, {"13", 1}, {"135", 1}}}},
    {{{{"15", 1}, {"135", 1}, {"24", 1}, {"234", 1}}},
     {{{"25", 1}, {"235", 1}, {"14", 1}, {"134", 1}}}},
    {{{{"13", 1}, {"135", 1}, {"46", 1}, {"456", 1}}},
     {{{"36", 1}, {"356", 1}, {"14", 1}, {"145", 1}}}},
    {{{{"124", 1}, {"135", 1}, {"256", 1}, {"346", 1}}},
     {{{"356", 1}, {"246", 1}, {"134", 1}, {"125", 1}}}},
    {{{{"26", 1}, {"126", 1}, {"35", 1}, {"135", 1}}},
     {{{"36", 1}, {"136", 1}, {"25", 1}, {"125", 1}}}},
    {{{{"135", 1}, {"146", 1}, {"236", 1}, {"245", 1}}},
     {{{"246", 1}, {"235", 1}, {"145", 1}, {"136", 1}}}},
}};

// dlog arguments of the canonical form, as u-exponents, printed row order
const std::array<std::map<int, int>, 4> k_omega_args = {{
    {{10, 1}, {5, -1}, {8, -1}, {9, -1}, {13, -1}, {14, -1}},
    {{9, 1}, {11, 1}, {4, -1}, {7, -1}, {12, -1}, {15, -1}},
    {{4, 1}, {6, 1}, {14, 1}, {15, 1}, {3, -1}, {13, -1}},
    {{1, 1}, {4, 1}, {8, 1}, {12, 1}, {14, 1}, {2, -1}},
}};

Rat eval_root(const std::string& tok, const std::array<Rat, 6>& d) {
    if (tok == "s") return d[0] + d[1] + d[2] + d[3] + d[4] + d[5];
    Rat v = 0;
    if (tok.size() == 2) {
        v = d[tok[0] - '1'] - d[tok[1] - '1'];
    } else {
        for (char c : tok) v += d[c - '1'];
    }
    return v;
}

Rat minor_of(const RatMatrix& m, const std::string& tok) {
    return det3(m, tok[0] - '1', tok[1] - '1', tok[2] - '1');
}

Rat conic_binomial(const RatMatrix& m) {
    return minor_of(m, "134") * minor_of(m, "156") * minor_of(m, "235") *
               minor_of(m, "246") -
           minor_of(m, "135") * minor_of(m, "146") * minor_of(m, "234") *
               minor_of(m, "256");
}

// ---- forward-mode derivatives in the four chart coordinates ----

struct Dual {
    Rat v;
    std::array<Rat, 4> d{};
};

Dual operator+(const Dual& a, const Dual& b) {
    Dual r{Rat(a.v + b.v)};
    for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
}

Dual operator-(const Dual& a, const Dual& b) {
    Dual r{Rat(a.v - b.v)};
    for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
}

Dual operator*(const Dual& a, const Dual& b) {
    Dual r{Rat(a.v * b.v)};
    for (int i = 0; i < 4; ++i) r.d[i] = a.v * b.d[i] + b.v * a.d[i];
    return r;
}

using DualMatrix = std::array<std::array<Dual, 6>, 3>;

//   [ 1 0 0 1  1  1 ]
//   [ 0 1 0 1 x1 x3 ]
//   [ 0 0 1 1 x2 x4 ]
DualMatrix normalized_chart(const std::array<Rat, 4>& x) {
    DualMatrix m{};
    auto cnst = [](int c) { return Dual{Rat(c)}; };
    auto var = [&](int j) {
        Dual d{x[j]};
        d.d[j] = 1;
        return d;
    };
    m[0] = {cnst(1), cnst(0), cnst(0), cnst(1), cnst(1), cnst(1)};
    m[1] = {cnst(0), cnst(1), cnst(0), cnst(1), var(0), var(2)};
    m[2] = {cnst(0), cnst(0), cnst(1), cnst(1), var(1), var(3)};
    return m;
}

// the chart used in the closed-form comparison
//   [ 1 1 0 1 1 0 ]
//   [ x1 0 1 x3 1 0 ]
//   [ x2 0 0 x4 1 1 ]
DualMatrix omega_chart(const std::array<Rat, 4>& x) {
    DualMatrix m{};
    auto cnst = [](int c) { return Dual{Rat(c)}; };
    auto var = [&](int j) {
        Dual d{x[j]};
        d.d[j] = 1;
        return d;
    };
    m[0] = {cnst(1), cnst(1), cnst(0), cnst(1), cnst(1), cnst(0)};
    m[1] = {var(0), cnst(0), cnst(1), var(2), cnst(1), cnst(0)};
    m[2] = {var(1), cnst(0), cnst(0), var(3), cnst(1), cnst(1)};
    return m;
}

Dual dual_minor(const DualMatrix& m, const std::string& tok) {
    int i = tok[0] - '1', j = tok[1] - '1', k = tok[2] - '1';
    return m[0][i] * (m[1][j] * m[2][k] - m[2][j] * m[1][k]) -
           m[1][i] * (m[0][j] * m[2][k] - m[2][j] * m[0][k]) +
           m[2][i] * (m[0][j] * m[1][k] - m[1][j] * m[0][k]);
}

Dual dual_factor(const DualMatrix& m, const std::string& tok) {
    if (tok != "q") return dual_minor(m, tok);
    return dual_minor(m, "134") * dual_minor(m, "156") * dual_minor(m, "235") *
               dual_minor(m, "246") -
           dual_minor(m, "135") * dual_minor(m, "146") * dual_minor(m, "234") *
               dual_minor(m, "256");
}

// factor exponents (minor token or "q") of one u-coordinate
std::map<std::string, int> u_factor_exponents(int i1) {
    std::map<std::string, int> ex;
    const URatio& r = k_plucker[i1 - 1];
    for (const char* t : r.num) ++ex[std::string(t) == "q-" ? "q" : t];
    for (const char* t : r.den) --ex[t];
    return ex;
}

// logarithmic gradient of a multiplicative combination of u-coordinates
std::array<Rat, 4> dlog_row(const DualMatrix& m, const std::map<int, int>& ucoef) {
    std::map<std::string, int> ex;
    for (const auto& [i, c] : ucoef)
        for (const auto& [tok, e] : u_factor_exponents(i)) ex[tok] += c * e;
    std::array<Rat, 4> row{};
    for (const auto& [tok, e] : ex) {
        if (e == 0) continue;
        Dual f = dual_factor(m, tok);
        if (f.v == 0)
            throw std::runtime_error("chart point on the pole divisor of " +
                                     (tok == "q" ? "the conic binomial" : "p" + tok));
        for (int j = 0; j < 4; ++j) row[j] += Rat(e) * f.d[j] / f.v;
    }
    return row;
}

Rat det4(std::array<std::array<Rat, 4>, 4> m) {
    Rat det = 1;
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        while (piv < 4 && m[piv][c] == 0) ++piv;
        if (piv == 4) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < 4; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int cc = c; cc < 4; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

}  // namespace

USystem u_system_from_graph(const PezzoGraph& g) {
    USystem sys;
    sys.vars = static_cast<int>(g.vertices.size());
    sys.supports.resize(sys.vars);
    for (int i = 0; i < sys.vars; ++i) {
        for (int j = 0; j < sys.vars; ++j)
            if (j != i && !g.adjacent(i, j)) sys.supports[i].push_back(j + 1);
    }
    return sys;
}

USystem m05_u_system() {
    USystem sys;
    sys.vars = 5;
    for (int i = 1; i <= 5; ++i) {
        int a = (i + 3) % 5 + 1, b = i % 5 + 1;  // cyclic neighbors i-1, i+1
        std::vector<int> s = {a, b};
        std::sort(s.begin(), s.end());
        sys.supports.push_back(s);
    }
    return sys;
}

std::array<Rat, 15> plucker_u_values(const RatMatrix& m) {
    if (m.size() != 3 || m[0].size() != 6)
        throw std::runtime_error("plucker_u_values expects a 3x6 matrix");
    auto factor = [&](const std::string& tok) {
        Rat v = tok == "q-" ? Rat(-conic_binomial(m)) : minor_of(m, tok);
        if (v == 0)
            throw std::runtime_error("boundary divisor: " +
                                     (tok == "q-" ? std::string("the conic binomial vanishes")
                                                  : "minor p" + tok + " vanishes"));
        return v;
    };
    std::array<Rat, 15> u;
    for (int i = 0; i < 15; ++i) {
        Rat v = 1;
        for (const char* t : k_plucker[i].num) v *= factor(t);
        for (const char* t : k_plucker[i].den) v /= factor(t);
        u[i] = v;
    }
    return u;
}

std::array<Rat, 15> dunit_u_values(const std::array<Rat, 6>& d) {
    auto factor = [&](const SignedTok& st) {
        Rat v = eval_root(st.tok, d);
        if (v == 0)
            throw std::runtime_error(std::string("root hyperplane hit: ") + st.tok);
        return Rat(Rat(st.sign) * v);
    };
    std::array<Rat, 15> u;
    for (int i = 0; i < 15; ++i) {
        Rat v = 1;
        for (const auto& st : k_dunit[i].num) v *= factor(st);
        for (const auto& st : k_dunit[i].den) v /= factor(st);
        u[i] = v;
    }
    return u;
}

RatMatrix cuspidal_matrix(const std::array<Rat, 6>& d) {
    RatMatrix m(3, std::vector<Rat>(6));
    for (int j = 0; j < 6; ++j) {
        m[0][j] = 1;
        m[1][j] = d[j];
        m[2][j] = d[j] * d[j] * d[j];
    }
    return m;
}

std::map<std::string, int> u_minor_exponents(int i) {
    return u_factor_exponents(i);
}

Rat u_equation_residual(const std::array<Rat, 15>& u, int i) {
    Rat prod = 1;
    for (int j : fixtures::e6_u_nonneighbors[i]) prod *= u[j - 1];
    return Rat(u[i] + prod - 1);
}

int jacobian_rank(const std::array<Rat, 4>& x) {
    DualMatrix m = normalized_chart(x);
    RatMatrix logjac;
    for (int i = 1; i <= 15; ++i) {
        auto row = dlog_row(m, {{i, 1}});
        logjac.emplace_back(row.begin(), row.end());
    }

    // clear denominators row by row for the modular cross-check
    IntMatrix cleared;
    for (const auto& row : logjac) {
        Int lcm = 1;
        for (const auto& v : row)
            lcm = boost::multiprecision::lcm(lcm, Int(denominator(v)));
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(Int(Int(numerator(v)) * (lcm / Int(denominator(v)))));
        cleared.push_back(std::move(r));
    }

    int exact = rank_exact(logjac);
    for (int64_t p : {int64_t(1048583), int64_t(1048589)}) {
        if (rank_mod_p(cleared, p) != exact)
            throw std::runtime_error("modular rank cross-check failed at prime " +
                                     std::to_string(p));
    }
    return exact;
}

std::array<Rat, 5> m05_u_values(const Rat& x, const Rat& y) {
    std::array<Rat, 5> forms = {x, y, Rat(1 - x), Rat(1 - y), Rat(y - x)};
    const char* names[] = {"x", "y", "1-x", "1-y", "y-x"};
    for (int i = 0; i < 5; ++i)
        if (forms[i] == 0)
            throw std::runtime_error(std::string("point on the line ") + names[i]);
    return {Rat((1 - y) / (1 - x)), y, Rat(1 - x), Rat(x / y),
            Rat((y - x) / ((1 - x) * y))};
}

std::set<std::string> m05_sign_census() {
    const std::array<Rat, 10> grid = {Rat(-1),    Rat(1, 4), Rat(1, 2), Rat(3, 4),
                                      Rat(2),     Rat(-1, 2), Rat(1, 3), Rat(2, 3),
                                      Rat(3, 2),  Rat(3)};
    std::set<std::array<bool, 5>> regions;
    std::set<std::string> patterns;
    for (const Rat& x : grid) {
        for (const Rat& y : grid) {
            std::array<Rat, 5> forms = {x, y, Rat(1 - x), Rat(1 - y), Rat(y - x)};
            bool on_line = false;
            std::array<bool, 5> reg;
            for (int i = 0; i < 5; ++i) {
                if (forms[i] == 0) on_line = true;
                reg[i] = forms[i] > 0;
            }
            if (on_line) continue;
            regions.insert(reg);
            auto u = m05_u_values(x, y);
            std::string pat;
            for (const Rat& v : u) pat += v > 0 ? '+' : '-';
            patterns.insert(pat);
        }
    }
    if (regions.size() != 12)
        throw std::runtime_error("expected 12 plane regions, sampled " +
                                 std::to_string(regions.size()));
    return patterns;
}

Rat omega_chart_eval(const std::array<Rat, 4>& x) {
    DualMatrix m = omega_chart(x);
    std::array<std::array<Rat, 4>, 4> rows;
    for (int k = 0; k < 4; ++k) rows[k] = dlog_row(m, k_omega_args[k]);
    return det4(rows);
}

LogForm omega_root_form() {
    RootCatalog cat = build_root_catalog(6);
    LogForm form;
    form.rows.assign(4, std::vector<int>(36, 0));
    for (int k = 0; k < 4; ++k) {
        for (const auto& [i, c] : k_omega_args[k]) {
            const DRatio& r = k_dunit[i - 1];
            for (const auto& st : r.num)
                form.rows[k][parse_root_token(cat, st.tok)] += c;
            for (const auto& st : r.den)
                form.rows[k][parse_root_token(cat, st.tok)] -= c;
        }
    }
    return form;
}

namespace {

// key of a root-exponent 4-form: its fifteen wedge components in the d
// coordinates, evaluated exactly at each sample point, with one global sign
// normalized away
std::string form_key(const std::vector<std::vector<int>>& rows,
                     const std::vector<std::vector<int>>& dforms,
                     const std::vector<std::array<Rat, 6>>& points) {
    std::vector<Rat> vals;
    for (const auto& d : points) {
        std::vector<Rat> rv(36);
        for (int j = 0; j < 36; ++j) {
            rv[j] = 0;
            for (int k = 0; k < 6; ++k) rv[j] += Rat(dforms[j][k]) * d[k];
        }
        std::array<std::array<Rat, 6>, 4> comp{};
        for (int r = 0; r < 4; ++r)
            for (int j = 0; j < 36; ++j) {
                if (rows[r][j] == 0) continue;
                for (int k = 0; k < 6; ++k)
                    comp[r][k] += Rat(rows[r][j] * dforms[j][k]) / rv[j];
            }
        for (int skip1 = 0; skip1 < 6; ++skip1)
            for (int skip2 = skip1 + 1; skip2 < 6; ++skip2) {
                std::array<std::array<Rat, 4>, 4> m{};
                int cc = 0;
                for (int c = 0; c < 6; ++c) {
                    if (c == skip1 || c == skip2) continue;
                    for (int r = 0; r < 4; ++r) m[r][cc] = comp[r][c];
                    ++cc;
                }
                vals.push_back(det4(m));
            }
    }
    int sign = 0;
    for (const auto& v : vals)
        if (v != 0) {
            sign = v > 0 ? 1 : -1;
            break;
        }
    std::ostringstream os;
    for (const auto& v : vals) os << Rat(v * sign) << ';';
    return os.str();
}

long long orbit_size_on(const LogForm& start,
                        const std::vector<std::vector<int>>& perms36,
                        const std::vector<std::vector<int>>& dforms,
                        const std::vector<std::array<Rat, 6>>& points) {
    std::set<std::string> seen;
    std::vector<std::vector<std::vector<int>>> frontier = {start.rows};
    seen.insert(form_key(start.rows, dforms, points));
    while (!frontier.empty()) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& rows : frontier) {
            for (const auto& p : perms36) {
                std::vector<std::vector<int>> img(4, std::vector<int>(36, 0));
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 36; ++c) img[r][p[c]] = rows[r][c];
                if (seen.insert(form_key(img, dforms, points)).second)
                    next.push_back(std::move(img));
            }
        }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

}  // namespace

OmegaOrbit omega_orbit_count() {
    RootCatalog cat = build_root_catalog(6);
    auto dforms = cat.d_forms();
    LogForm om = omega_root_form();

    std::vector<std::vector<int>> perms36;
    for (const auto& w : weyl_generators(6)) {
        Perm p = w.root_perm(cat);
        std::vector<int> q(36);
        for (int j = 0; j < 36; ++j) q[j] = p[j] % 36;  // dlog drops the sign
        perms36.push_back(std::move(q));
    }

    // two independent generic sample sets; all-positive strictly increasing
    // coordinates stay off every root hyperplane
    auto mkpt = [](std::array<int, 6> v) {
        std::array<Rat, 6> d;
        for (int i = 0; i < 6; ++i) d[i] = v[i];
        return d;
    };
    std::vector<std::array<Rat, 6>> set1 = {mkpt({1, 2, 4, 8, 16, 32}),
                                            mkpt({1, 3, 9, 27, 81, 243}),
                                            mkpt({2, 3, 5, 7, 11, 13})},
                                    set2 = {mkpt({1, 5, 25, 125, 625, 3125}),
                                            mkpt({3, 4, 6, 10, 18, 34}),
                                            mkpt({1, 2, 6, 24, 120, 720})};

    OmegaOrbit out;
    out.orbit_size = orbit_size_on(om, perms36, dforms, set1);
    long long again = orbit_size_on(om, perms36, dforms, set2);
    if (again != out.orbit_size)
        throw std::runtime_error("orbit sizes disagree between sample sets");
    out.group_order = Int(weyl_group_order(6));
    if (out.orbit_size <= 0 || out.group_order % out.orbit_size != 0)
        throw std::runtime_error("orbit size does not divide the group order");
    out.stabilizer_order = out.group_order / out.orbit_size;
    return out;
}

}  // namespace pezzo
