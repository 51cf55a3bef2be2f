#include "pezzo/realdp.hpp"

#include "pezzo/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pezzo {

namespace {

using Iv3 = std::array<Int, 3>;

[[noreturn]] void reject(const std::string& what) { throw std::runtime_error(what); }

Rat rdet3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
         + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec3 rcross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat rdot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 radd(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 rscale(const Rat& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

// primitive integer representative, direction kept
Iv3 norm_signed(const Vec3& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, Int(denominator(x)));
    Iv3 w;
    for (int k = 0; k < 3; ++k) w[k] = Int(numerator(v[k])) * (l / Int(denominator(v[k])));
    Int g = 0;
    for (const auto& x : w) g = gcd(g, x);
    if (g == 0) reject("zero vector has no projective class");
    for (auto& x : w) x /= g;
    return w;
}

// primitive integer representative with the first nonzero coordinate positive
Iv3 norm_proj(const Vec3& v) {
    Iv3 w = norm_signed(v);
    for (int k = 0; k < 3; ++k) {
        if (w[k] == 0) continue;
        if (w[k] < 0)
            for (auto& x : w) x = -x;
        break;
    }
    return w;
}

Vec3 rat_of(const Iv3& v) { return {Rat(v[0]), Rat(v[1]), Rat(v[2])}; }

Iv3 ineg(const Iv3& v) { return {-v[0], -v[1], -v[2]}; }

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// ---------------------------------------------------------------------------
// homogeneous polynomials in two variables; c[k] is the coefficient of
// t0^k t1^(d-k), so the vector length is d + 1
using Poly1 = std::vector<Rat>;

Poly1 p1_mul(const Poly1& a, const Poly1& b) {
    Poly1 r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void p1_add_scaled(Poly1& a, const Rat& s, const Poly1& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}

Rat p1_eval(const Poly1& p, const Rat& t0, const Rat& t1) {
    // Horner in t0 with t1 powers folded in
    Rat acc = 0, pw = 1;
    for (size_t k = 0; k < p.size(); ++k) {
        Rat term = p[k];
        for (size_t j = k + 1; j < p.size(); ++j) term *= t1;
        acc += term * pw;
        pw *= t0;
    }
    return acc;
}

Poly1 p1_d0(const Poly1& p) {  // d/dt0
    Poly1 r(p.size() - 1, Rat(0));
    for (size_t k = 1; k < p.size(); ++k) r[k - 1] = Rat(static_cast<long>(k)) * p[k];
    return r;
}

Poly1 p1_d1(const Poly1& p) {  // d/dt1
    Poly1 r(p.size() - 1, Rat(0));
    int d = static_cast<int>(p.size()) - 1;
    for (int k = 0; k < d; ++k) r[k] = Rat(d - k) * p[k];
    return r;
}

bool p1_zero(const Poly1& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

// exact division by the linear form vanishing at (a0 : a1)
Poly1 p1_div_root(const Poly1& p, const Rat& a0, const Rat& a1) {
    int d = static_cast<int>(p.size()) - 1;
    if (a1 == 0) {
        if (p[d] != 0) reject("deflation failed: root at infinity is not a root");
        return Poly1(p.begin(), p.begin() + d);
    }
    Rat x0 = a0 / a1;
    Poly1 q(d, Rat(0));
    q[d - 1] = p[d];
    for (int k = d - 1; k >= 1; --k) q[k - 1] = p[k] + x0 * q[k];
    if (p[0] + x0 * q[0] != 0) reject("deflation failed: expected root is not a root");
    return q;
}

// exact division by a quadratic with nonzero leading coefficient
Poly1 p1_div_quad(Poly1 p, const Poly1& n) {
    int d = static_cast<int>(p.size()) - 1;
    Poly1 q(d - 1, Rat(0));
    for (int k = d; k >= 2; --k) {
        Rat f = p[k] / n[2];
        q[k - 2] = f;
        p[k] = 0;
        p[k - 1] -= f * n[1];
        p[k - 2] -= f * n[0];
    }
    if (p[0] != 0 || p[1] != 0) reject("deflation failed: quadratic factor does not divide");
    return q;
}

// ---------------------------------------------------------------------------
// exact nullspace of a rational matrix
std::vector<std::vector<Rat>> nullspace(RatMatrix m) {
    if (m.empty()) return {};
    size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t piv = pr;
        while (piv < rows && m[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        Rat inv = m[pr][pc];
        for (size_t c = pc; c < cols; ++c) m[pr][c] /= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][pc] == 0) continue;
            Rat f = m[r][pc];
            for (size_t c = pc; c < cols; ++c) m[r][c] -= f * m[pr][c];
        }
        pivot_of_col[pc] = static_cast<int>(pr);
        ++pr;
    }
    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -m[pivot_of_col[c]][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

const std::vector<std::array<int, 3>>& monomials(int deg) {
    static const std::vector<std::array<int, 3>> m1 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    static const std::vector<std::array<int, 3>> m2 = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                                       {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    static const std::vector<std::array<int, 3>> m3 = {
        {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {2, 0, 1},
        {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {1, 1, 1}};
    return deg == 1 ? m1 : (deg == 2 ? m2 : m3);
}

Rat mon_eval(const std::array<int, 3>& e, const Vec3& p) {
    Rat r = 1;
    for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[v]; ++k) r *= p[v];
    return r;
}

}  // namespace

Rat PlaneCurve::eval(const Vec3& p) const {
    Rat acc = 0;
    for (size_t i = 0; i < mons.size(); ++i) acc += coeff[i] * mon_eval(mons[i], p);
    return acc;
}

Vec3 PlaneCurve::gradient(const Vec3& p) const {
    Vec3 g = {Rat(0), Rat(0), Rat(0)};
    for (size_t i = 0; i < mons.size(); ++i)
        for (int v = 0; v < 3; ++v) {
            if (mons[i][v] == 0) continue;
            auto e = mons[i];
            --e[v];
            g[v] += coeff[i] * Rat(mons[i][v]) * mon_eval(e, p);
        }
    return g;
}

int CurveSet::index_of(const std::string& l) const {
    for (size_t i = 0; i < curves.size(); ++i)
        if (curves[i].label == l) return static_cast<int>(i);
    return -1;
}

PointConfig config_from_ints(const std::vector<std::vector<int>>& rows) {
    PointConfig cfg;
    cfg.n = static_cast<int>(rows[0].size());
    cfg.m.assign(3, std::vector<Rat>(cfg.n));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < cfg.n; ++c) cfg.m[r][c] = rows[r][c];
    return cfg;
}

namespace {

// ---------------------------------------------------------------------------
// curve construction

PlaneCurve make_curve(std::string label, int deg, const std::vector<Rat>& coeffs,
                      std::vector<int> through, int node = -1) {
    PlaneCurve c;
    c.label = std::move(label);
    c.degree = deg;
    c.mons = monomials(deg);
    // scale to a primitive integer coefficient vector for stable arithmetic
    Int l = 1;
    for (const auto& x : coeffs) l = lcm(l, Int(denominator(x)));
    Int g = 0;
    std::vector<Int> w;
    for (const auto& x : coeffs) {
        w.push_back(Int(numerator(x)) * (l / Int(denominator(x))));
        g = gcd(g, w.back());
    }
    if (g == 0) reject("degenerate curve " + c.label);
    for (const auto& x : w) c.coeff.push_back(Rat(x / g));
    c.through = std::move(through);
    c.node = node;
    return c;
}

std::string pt_name(int i) { return std::to_string(i + 1); }

CurveSet build_curves(const PointConfig& cfg) {
    const int n = cfg.n;
    CurveSet cs;
    cs.n = n;
    std::vector<Vec3> pts(n);
    for (int i = 0; i < n; ++i) {
        Vec3 p = {cfg.m[0][i], cfg.m[1][i], cfg.m[2][i]};
        cs.base_points.push_back(rat_of(norm_proj(p)));
    }
    for (int i = 0; i < n; ++i) pts[i] = cs.base_points[i];

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec3 l = rcross(pts[i], pts[j]);
            cs.curves.push_back(make_curve("F" + pt_name(i) + pt_name(j), 1,
                                           {l[0], l[1], l[2]}, {i, j}));
        }

    auto conic_through = [&](const std::vector<int>& five, const std::string& label) {
        RatMatrix rows;
        for (int i : five) {
            std::vector<Rat> row;
            for (const auto& e : monomials(2)) row.push_back(mon_eval(e, pts[i]));
            rows.push_back(std::move(row));
        }
        auto ns = nullspace(rows);
        if (ns.size() != 1) reject("no unique conic " + label);
        return make_curve(label, 2, ns[0], five);
    };

    if (n == 5) {
        cs.curves.push_back(conic_through({0, 1, 2, 3, 4}, "G"));
    } else if (n == 6) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> five;
            for (int j = 0; j < n; ++j)
                if (j != i) five.push_back(j);
            cs.curves.push_back(conic_through(five, "G" + pt_name(i)));
        }
    } else if (n == 7) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> five;
                for (int k = 0; k < n; ++k)
                    if (k != i && k != j) five.push_back(k);
                cs.curves.push_back(conic_through(five, "G" + pt_name(i) + pt_name(j)));
            }
        for (int i = 0; i < n; ++i) {
            // cubic through all seven points, singular at point i
            RatMatrix rows;
            for (int j = 0; j < n; ++j) {
                std::vector<Rat> row;
                for (const auto& e : monomials(3)) row.push_back(mon_eval(e, pts[j]));
                rows.push_back(std::move(row));
            }
            for (int v = 0; v < 3; ++v) {
                std::vector<Rat> row;
                for (const auto& e : monomials(3)) {
                    if (e[v] == 0) {
                        row.push_back(Rat(0));
                        continue;
                    }
                    auto d = e;
                    --d[v];
                    row.push_back(Rat(e[v]) * mon_eval(d, pts[i]));
                }
                rows.push_back(std::move(row));
            }
            auto ns = nullspace(rows);
            if (ns.size() != 1) reject("no unique nodal cubic H" + pt_name(i));
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            cs.curves.push_back(make_curve("H" + pt_name(i), 3, ns[0], all, i));
        }
    } else {
        reject("unsupported point count");
    }
    return cs;
}

// ---------------------------------------------------------------------------
// rational parametrizations

struct Param {
    int curve = -1;
    int pdeg = 0;
    std::array<Poly1, 3> r;
    // anchors used by t_of
    Vec3 a, b;        // line: the two base points
    Vec3 b0, r0, r1;  // conic: pencil vertex and two more base points
    Vec3 node;        // cubic: the singular base point
    Poly1 node_quad;  // cubic: branch parameters of the node
};

// bilinear polarization of a conic form: q(x+y) - q(x) - q(y)
Rat polarize(const PlaneCurve& q, const Vec3& x, const Vec3& y) {
    return q.eval(radd(x, y)) - q.eval(x) - q.eval(y);
}

Param build_param(const CurveSet& cs, int ci) {
    const PlaneCurve& c = cs.curves[ci];
    Param pm;
    pm.curve = ci;
    if (c.degree == 1) {
        pm.pdeg = 1;
        pm.a = cs.base_points[c.through[0]];
        pm.b = cs.base_points[c.through[1]];
        for (int k = 0; k < 3; ++k) pm.r[k] = {pm.b[k], pm.a[k]};  // t0*a + t1*b
        return pm;
    }
    if (c.degree == 2) {
        pm.pdeg = 2;
        pm.b0 = cs.base_points[c.through[0]];
        pm.r0 = cs.base_points[c.through[1]];
        pm.r1 = cs.base_points[c.through[2]];
        // s(t) = t0*r0 + t1*r1 on the chord; the second intersection of the
        // line through b0 and s(t) sweeps out the conic
        Poly1 qs = {c.eval(pm.r1), polarize(c, pm.r0, pm.r1), c.eval(pm.r0)};
        Poly1 bs = {polarize(c, pm.b0, pm.r1), polarize(c, pm.b0, pm.r0)};
        for (int k = 0; k < 3; ++k) {
            Poly1 s = {pm.r1[k], pm.r0[k]};
            Poly1 term = p1_mul(bs, s);
            pm.r[k] = {qs[0] * pm.b0[k], qs[1] * pm.b0[k], qs[2] * pm.b0[k]};
            p1_add_scaled(pm.r[k], Rat(-1), term);
        }
        return pm;
    }
    // nodal cubic: pencil of lines through the node; the residual third
    // intersection is rational because the node absorbs multiplicity two
    pm.pdeg = 3;
    pm.node = cs.base_points[c.node];
    int got = 0;
    for (int j : c.through) {
        if (j == c.node) continue;
        (got == 0 ? pm.r0 : pm.r1) = cs.base_points[j];
        if (++got == 2) break;
    }
    // quadratic term of the cubic at the node, restricted to the chord
    auto hess = [&](const Vec3& x, const Vec3& y) {
        // x^T Hess(c)(node) y via second-order polarization of the form
        Rat acc = 0;
        for (size_t i = 0; i < c.mons.size(); ++i) {
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v) {
                    auto e = c.mons[i];
                    if (e[u] == 0) continue;
                    int f1 = e[u];
                    --e[u];
                    if (e[v] == 0) continue;
                    int f2 = e[v];
                    --e[v];
                    acc += c.coeff[i] * Rat(f1) * Rat(f2) * mon_eval(e, pm.node) * x[u] * y[v];
                }
        }
        return acc;
    };
    Poly1 q2 = {hess(pm.r1, pm.r1) / 2, hess(pm.r0, pm.r1), hess(pm.r0, pm.r0) / 2};
    Vec3 s0 = pm.r0, s1 = pm.r1;
    Poly1 hs;  // c(s(t)), cubic in t
    {
        std::array<Poly1, 3> sc;
        for (int k = 0; k < 3; ++k) sc[k] = {s1[k], s0[k]};
        Poly1 acc = {Rat(0)};
        acc.assign(4, Rat(0));
        for (size_t i = 0; i < c.mons.size(); ++i) {
            Poly1 term = {c.coeff[i]};
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < c.mons[i][v]; ++k) term = p1_mul(term, sc[v]);
            p1_add_scaled(acc, Rat(1), term);
        }
        hs = acc;
    }
    for (int k = 0; k < 3; ++k) {
        Poly1 s = {s1[k], s0[k]};
        pm.r[k] = {hs[0] * pm.node[k], hs[1] * pm.node[k], hs[2] * pm.node[k],
                   hs[3] * pm.node[k]};
        Poly1 term = p1_mul(q2, s);
        p1_add_scaled(pm.r[k], Rat(-1), term);
    }
    pm.node_quad = q2;
    return pm;
}

Vec3 param_eval(const Param& pm, const Rat& t0, const Rat& t1) {
    return {p1_eval(pm.r[0], t0, t1), p1_eval(pm.r[1], t0, t1), p1_eval(pm.r[2], t0, t1)};
}

bool proportional(const Vec3& a, const Vec3& b) {
    return rcross(a, b) == Vec3{Rat(0), Rat(0), Rat(0)};
}

// parameter of a point known to lie on the curve (never the node of a cubic)
std::pair<Rat, Rat> t_of(const CurveSet& cs, const Param& pm, const Vec3& v) {
    const PlaneCurve& c = cs.curves[pm.curve];
    std::pair<Rat, Rat> t;
    if (c.degree == 1) {
        Vec3 cx = rcross(pm.a, pm.b);
        t = {rdet3(v, pm.b, cx), rdet3(pm.a, v, cx)};
    } else if (c.degree == 2) {
        if (proportional(v, pm.b0)) {
            t = {polarize(c, pm.b0, pm.r1), -polarize(c, pm.b0, pm.r0)};
        } else if (proportional(v, pm.r0)) {
            t = {Rat(1), Rat(0)};
        } else if (proportional(v, pm.r1)) {
            t = {Rat(0), Rat(1)};
        } else {
            Vec3 s = rcross(rcross(pm.b0, v), rcross(pm.r0, pm.r1));
            Vec3 cx = rcross(pm.r0, pm.r1);
            t = {rdet3(s, pm.r1, cx), rdet3(pm.r0, s, cx)};
        }
    } else {
        if (proportional(v, pm.r0)) {
            t = {Rat(1), Rat(0)};
        } else if (proportional(v, pm.r1)) {
            t = {Rat(0), Rat(1)};
        } else {
            Vec3 s = rcross(rcross(pm.node, v), rcross(pm.r0, pm.r1));
            Vec3 cx = rcross(pm.r0, pm.r1);
            t = {rdet3(s, pm.r1, cx), rdet3(pm.r0, s, cx)};
        }
    }
    if (t.first == 0 && t.second == 0) reject("parameter lookup failed on " + c.label);
    if (!proportional(param_eval(pm, t.first, t.second), v))
        reject("parameter lookup inconsistent on " + c.label);
    return t;
}

// ---------------------------------------------------------------------------
// pairwise intersections by restriction and deflation

struct PairCut {
    std::vector<Iv3> extras;            // rational crossings away from base points
    std::optional<Poly1> quad;          // leftover quadratic, in the walked curve's t
};

// restrict curve b along the parametrization of curve a and split off the
// crossings already known through shared base points
PairCut restrict_pair(const CurveSet& cs, const std::vector<Param>& params, int a, int b) {
    const PlaneCurve& ca = cs.curves[a];
    const PlaneCurve& cb = cs.curves[b];
    const Param& pm = params[a];
    Poly1 p = {Rat(1)};
    {
        Poly1 acc((size_t)(cb.degree * pm.pdeg + 1), Rat(0));
        for (size_t i = 0; i < cb.mons.size(); ++i) {
            Poly1 term = {cb.coeff[i]};
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < cb.mons[i][v]; ++k) term = p1_mul(term, pm.r[v]);
            term.resize(acc.size(), Rat(0));
            p1_add_scaled(acc, Rat(1), term);
        }
        p = acc;
    }
    if (p1_zero(p)) reject("curves " + ca.label + " and " + cb.label + " share a component");

    for (int m : ca.through) {
        const Vec3& pt = cs.base_points[m];
        if (cb.eval(pt) != 0) continue;
        if (ca.node == m) {
            // b runs through the node of a: both branch parameters are roots
            const Poly1& nq = pm.node_quad;
            if (nq[2] != 0) {
                p = p1_div_quad(p, nq);
            } else {
                p = p1_div_root(p, Rat(1), Rat(0));
                p = p1_div_root(p, -nq[0], nq[1]);
            }
            continue;
        }
        auto t = t_of(cs, pm, pt);
        int mult = (cb.node == m) ? 2 : 1;
        for (int k = 0; k < mult; ++k) p = p1_div_root(p, t.first, t.second);
    }

    PairCut cut;
    int d = static_cast<int>(p.size()) - 1;
    if (d == 0) return cut;
    if (d == 1) {
        Vec3 w = param_eval(pm, -p[0], p[1]);
        cut.extras.push_back(norm_proj(w));
        return cut;
    }
    if (d == 2) {
        cut.quad = p;
        return cut;
    }
    reject("unexpected residual degree between " + ca.label + " and " + cb.label);
}

// ---------------------------------------------------------------------------
// the global arrangement: vertices plus per-curve subdivision data

struct Arr {
    CurveSet cs;
    std::vector<Param> params;
    std::vector<Iv3> verts;  // projective representatives
    std::map<Iv3, int> vid;
    std::vector<std::vector<int>> verts_on;   // curve -> vertex ids
    std::vector<std::vector<Poly1>> quads_on; // curve -> residual quadratics
    std::vector<int> base_vid;                // base point -> vertex id
    std::vector<int> curves_through_base;     // base point -> curve count
};

int add_vertex(Arr& arr, const Iv3& v) {
    auto it = arr.vid.find(v);
    if (it != arr.vid.end()) return it->second;
    int id = static_cast<int>(arr.verts.size());
    arr.verts.push_back(v);
    arr.vid.emplace(v, id);
    return id;
}

Arr build_arrangement(CurveSet cs) {
    Arr arr;
    arr.cs = std::move(cs);
    const int nc = static_cast<int>(arr.cs.curves.size());
    for (int c = 0; c < nc; ++c) arr.params.push_back(build_param(arr.cs, c));
    arr.quads_on.assign(nc, {});
    for (int i = 0; i < arr.cs.n; ++i)
        arr.base_vid.push_back(add_vertex(arr, norm_proj(arr.cs.base_points[i])));
    for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b) {
            PairCut cut = restrict_pair(arr.cs, arr.params, a, b);
            for (const auto& w : cut.extras) add_vertex(arr, w);
            if (cut.quad) {
                arr.quads_on[a].push_back(*cut.quad);
                PairCut back = restrict_pair(arr.cs, arr.params, b, a);
                if (!back.quad) reject("asymmetric residual quadratic");
                arr.quads_on[b].push_back(*back.quad);
            }
        }
    for (int c = 0; c < nc; ++c)
        if (arr.cs.curves[c].node >= 0) arr.quads_on[c].push_back(arr.params[c].node_quad);

    arr.verts_on.assign(nc, {});
    for (int id = 0; id < static_cast<int>(arr.verts.size()); ++id) {
        Vec3 v = rat_of(arr.verts[id]);
        int through = 0;
        for (int c = 0; c < nc; ++c) {
            if (arr.cs.curves[c].eval(v) != 0) continue;
            ++through;
            if (arr.cs.curves[c].node >= 0 && arr.base_vid[arr.cs.curves[c].node] == id)
                continue;  // the node is traversed via its branch quadratic
            arr.verts_on[c].push_back(id);
        }
        bool is_base = false;
        for (int i = 0; i < arr.cs.n; ++i) is_base |= (arr.base_vid[i] == id);
        if (!is_base && through > 2)
            reject("three curves concurrent away from the base points");
    }
    for (int i = 0; i < arr.cs.n; ++i) {
        int cnt = 0;
        Vec3 p = arr.cs.base_points[i];
        for (const auto& c : arr.cs.curves) cnt += (c.eval(p) == 0);
        arr.curves_through_base.push_back(cnt);
    }
    return arr;
}

// ---------------------------------------------------------------------------
// subdivision of one curve's parameter line and arc sampling

struct SubPoint {
    // kind 0: rational slope; kind 1: slope infinity; kind 2: isolated
    // quadratic irrational with bracketing bounds
    int kind = 0;
    Rat val, lo, hi;
    Rat qc2, qc1, qc0;  // the quadratic, for refinement
    int which = 0;      // 0: smaller root, 1: larger root
};

void sqrt_bounds(const Rat& d, int bits, Rat& lo, Rat& hi) {
    Int num = numerator(d), den = denominator(d);
    Int m = num * den;
    Int shift = Int(1) << (2 * bits);
    Int root = sqrt(Int(m * shift));
    lo = Rat(root, den * (Int(1) << bits));
    hi = Rat(root + 1, den * (Int(1) << bits));
}

void refine(SubPoint& s, int bits) {
    Rat d = s.qc1 * s.qc1 - 4 * s.qc2 * s.qc0;
    Rat slo, shi;
    sqrt_bounds(d, bits, slo, shi);
    Rat e1 = (-s.qc1 + (s.which ? shi : -slo)) / (2 * s.qc2);
    Rat e2 = (-s.qc1 + (s.which ? slo : -shi)) / (2 * s.qc2);
    s.lo = std::min(e1, e2);
    s.hi = std::max(e1, e2);
}

std::vector<SubPoint> curve_subdivision(const Arr& arr, int c) {
    std::vector<SubPoint> pts;
    const Param& pm = arr.params[c];
    std::set<std::pair<bool, Rat>> seen;
    auto push_t = [&](const Rat& t0, const Rat& t1) {
        SubPoint s;
        if (t1 == 0) {
            s.kind = 1;
        } else {
            s.kind = 0;
            s.val = t0 / t1;
        }
        if (seen.insert({s.kind == 1, s.val}).second) pts.push_back(s);
    };
    for (int id : arr.verts_on[c]) {
        auto t = t_of(arr.cs, pm, rat_of(arr.verts[id]));
        push_t(t.first, t.second);
    }
    for (const auto& q : arr.quads_on[c]) {
        // roots of q[2] x^2 + q[1] x + q[0], x the slope t0/t1
        if (q[2] == 0) {
            push_t(Rat(1), Rat(0));
            if (q[1] == 0) reject("degenerate residual quadratic");
            push_t(-q[0], q[1]);
            continue;
        }
        Rat d = q[1] * q[1] - 4 * q[2] * q[0];
        if (d < 0) continue;  // complex pair: no real crossing
        if (d == 0) reject("tangential crossing (vanishing discriminant)");
        Int num = numerator(d), den = denominator(d);
        Int sn = sqrt(num), sd = sqrt(den);
        if (sn * sn == num && sd * sd == den) {
            Rat sq = Rat(sn, sd);
            push_t((-q[1] + sq) / (2 * q[2]), Rat(1));
            push_t((-q[1] - sq) / (2 * q[2]), Rat(1));
            continue;
        }
        for (int which = 0; which < 2; ++which) {
            SubPoint s;
            s.kind = 2;
            s.qc2 = q[2];
            s.qc1 = q[1];
            s.qc0 = q[0];
            s.which = which;
            refine(s, 32);
            pts.push_back(s);
        }
    }
    // refine brackets until all entries are provably separated
    for (int bits = 32; bits <= 1024; bits *= 2) {
        bool ok = true;
        for (auto& s : pts) {
            if (s.kind != 2) continue;
            for (const auto& o : pts) {
                if (&o == &s) continue;
                if (o.kind == 0 && o.val >= s.lo && o.val <= s.hi) ok = false;
                if (o.kind == 2 && !(o.hi < s.lo || s.hi < o.lo)) ok = false;
            }
        }
        if (ok) break;
        if (bits == 1024) reject("could not separate subdivision points");
        for (auto& s : pts)
            if (s.kind == 2) refine(s, bits * 2);
    }
    std::sort(pts.begin(), pts.end(), [](const SubPoint& x, const SubPoint& y) {
        if (x.kind == 1 || y.kind == 1) return y.kind == 1 && x.kind != 1;
        Rat xv = x.kind == 0 ? x.val : x.lo;
        Rat yv = y.kind == 0 ? y.val : y.lo;
        return xv < yv;
    });
    return pts;
}

using SignVec = std::vector<signed char>;

// sign vector of the curve forms at a point; zeros are rejected
SignVec signs_at(const CurveSet& cs, const Vec3& p, bool* ok) {
    SignVec sv(cs.curves.size());
    *ok = true;
    for (size_t i = 0; i < cs.curves.size(); ++i) {
        int s = sgn(cs.curves[i].eval(p));
        if (s == 0) {
            *ok = false;
            return sv;
        }
        sv[i] = static_cast<signed char>(s);
    }
    return sv;
}

SignVec antipodal_flip(const CurveSet& cs, SignVec sv) {
    for (size_t i = 0; i < sv.size(); ++i)
        if (cs.curves[i].degree % 2) sv[i] = -sv[i];
    return sv;
}

// Walks every curve and drops a two-sided sample on the interior of every
// arc; the union of the sign vectors (and their antipodes) enumerates the
// regions of the double cover.
std::set<SignVec> arc_sign_vectors(const Arr& arr) {
    std::set<SignVec> out;
    const int nc = static_cast<int>(arr.cs.curves.size());
    for (int c = 0; c < nc; ++c) {
        auto sub = curve_subdivision(arr, c);
        std::vector<Rat> samples;
        auto upper = [](const SubPoint& s) { return s.kind == 2 ? s.hi : s.val; };
        auto lower = [](const SubPoint& s) { return s.kind == 2 ? s.lo : s.val; };
        size_t fin = sub.size();
        bool has_inf = fin > 0 && sub.back().kind == 1;
        if (has_inf) --fin;
        for (size_t i = 0; i + 1 < fin; ++i)
            samples.push_back((upper(sub[i]) + lower(sub[i + 1])) / 2);
        if (fin > 0) {
            samples.push_back(upper(sub[fin - 1]) + 1);
            if (has_inf) samples.push_back(lower(sub[0]) - 1);
        } else {
            samples.push_back(Rat(0));
        }
        for (const Rat& x : samples) {
            Vec3 p = rat_of(norm_signed(param_eval(arr.params[c], x, Rat(1))));
            Vec3 g = arr.cs.curves[c].gradient(p);
            // keep the nudge relative to the point so the dyadic radii below
            // mean the same thing at every scale
            Rat mp = 0, mg = 0;
            for (int k = 0; k < 3; ++k) {
                mp = std::max(mp, Rat(abs(p[k])));
                mg = std::max(mg, Rat(abs(g[k])));
            }
            g = rscale(mp / mg, g);
            bool placed = false;
            for (int k = 8; k <= 128 && !placed; k += 8) {
                // one sign vector per side, certified at two nested radii
                SignVec vp, vm;
                bool consistent = true;
                for (int pass = 0; pass < 2 && consistent; ++pass) {
                    Rat eps = Rat(1, Int(1) << (k + 4 * pass));
                    Vec3 sp = radd(p, rscale(eps, g));
                    Vec3 sm = radd(p, rscale(-eps, g));
                    bool okp = false, okm = false;
                    SignVec wp = signs_at(arr.cs, sp, &okp);
                    SignVec wm = signs_at(arr.cs, sm, &okm);
                    consistent = okp && okm && wp[c] == 1 && wm[c] == -1;
                    for (int b = 0; b < nc && consistent; ++b) {
                        if (b == c) continue;
                        int s0 = sgn(arr.cs.curves[b].eval(p));
                        if (s0 == 0) reject("arc sample hit an unrecorded crossing");
                        consistent = wp[b] == s0 && wm[b] == s0;
                    }
                    if (pass == 0) {
                        vp = wp;
                        vm = wm;
                    } else {
                        consistent = consistent && vp == wp && vm == wm;
                    }
                }
                if (!consistent) continue;
                out.insert(vp);
                out.insert(vm);
                out.insert(antipodal_flip(arr.cs, vp));
                out.insert(antipodal_flip(arr.cs, vm));
                placed = true;
            }
            if (!placed) reject("arc sample placement failed");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// spherical cell complex for n <= 6

struct SEdge {
    int curve = -1, comp = -1;
    std::array<int, 2> v;       // from, to (sphere vertex ids)
    std::array<Iv3, 2> dout;    // outgoing directions at the two ends
};

struct SFace {
    std::vector<int> darts;
    std::set<int> edges;
};

struct Complex {
    std::vector<Iv3> pts;
    std::map<Iv3, int> id;
    std::vector<SEdge> edges;
    std::vector<std::vector<std::pair<int, int>>> rot;  // vertex -> (edge, end) CCW
    std::vector<std::vector<int>> rotpos;               // edge -> position per end
    std::vector<SFace> faces;
    std::vector<int> face_of;                           // dart -> face
    std::vector<int> comp_partner;
    std::map<std::pair<int, int>, int> out_at;          // (comp, from id) -> edge
};

int sphere_vertex(Complex& cx, const Iv3& v) {
    auto it = cx.id.find(v);
    if (it != cx.id.end()) return it->second;
    int id = static_cast<int>(cx.pts.size());
    cx.pts.push_back(v);
    cx.id.emplace(v, id);
    return id;
}

// CCW comparison of plane coordinates
bool ccw_less(const std::pair<Rat, Rat>& x, const std::pair<Rat, Rat>& y) {
    auto half = [](const std::pair<Rat, Rat>& v) {
        return (v.second > 0 || (v.second == 0 && v.first > 0)) ? 0 : 1;
    };
    int hx = half(x), hy = half(y);
    if (hx != hy) return hx < hy;
    Rat cr = x.first * y.second - x.second * y.first;
    if (cr == 0) reject("coincident directions in a rotation system");
    return cr > 0;
}

Complex build_complex(const Arr& arr) {
    Complex cx;
    const int nc = static_cast<int>(arr.cs.curves.size());
    int comp_count = 0;
    for (int c = 0; c < nc; ++c) {
        const PlaneCurve& cv = arr.cs.curves[c];
        const Param& pm = arr.params[c];
        if (cv.degree == 1) {
            // one great circle; both lifts of every incident vertex
            struct Entry {
                std::pair<Rat, Rat> ang;
                int vtx;
                Rat alpha, beta;
            };
            std::vector<Entry> ent;
            Vec3 cxv = rcross(pm.a, pm.b);
            for (int id : arr.verts_on[c])
                for (int sign : {1, -1}) {
                    Iv3 w = sign == 1 ? arr.verts[id] : ineg(arr.verts[id]);
                    Vec3 wr = rat_of(w);
                    Rat al = rdet3(wr, pm.b, cxv), be = rdet3(pm.a, wr, cxv);
                    ent.push_back({{al, be}, sphere_vertex(cx, w), al, be});
                }
            std::sort(ent.begin(), ent.end(),
                      [](const Entry& x, const Entry& y) { return ccw_less(x.ang, y.ang); });
            int comp = comp_count++;
            cx.comp_partner.push_back(comp);
            size_t m = ent.size();
            for (size_t i = 0; i < m; ++i) {
                const Entry& u = ent[i];
                const Entry& w = ent[(i + 1) % m];
                auto tang = [&](const Entry& e) {
                    return norm_signed(radd(rscale(-e.beta, pm.a), rscale(e.alpha, pm.b)));
                };
                SEdge e;
                e.curve = c;
                e.comp = comp;
                e.v = {u.vtx, w.vtx};
                e.dout = {tang(u), ineg(tang(w))};
                int eid = static_cast<int>(cx.edges.size());
                cx.edges.push_back(e);
                cx.out_at[{comp, u.vtx}] = eid;
            }
        } else {
            // a conic: two antipodal ovals, parametrized over the slope line
            struct Entry {
                bool inf = false;
                Rat slope;
                std::pair<Rat, Rat> t;
                int vtx_a, vtx_b;
            };
            std::vector<Entry> ent;
            for (int id : arr.verts_on[c]) {
                Vec3 v = rat_of(arr.verts[id]);
                auto t = t_of(arr.cs, pm, v);
                if (t.second < 0 || (t.second == 0 && t.first < 0)) {
                    t.first = -t.first;
                    t.second = -t.second;
                }
                Vec3 rt = param_eval(pm, t.first, t.second);
                int k = 0;
                while (v[k] == 0) ++k;
                int sig = sgn(rt[k] / v[k]);
                if (sig == 0) reject("conic parametrization degenerated");
                Iv3 wa = sig == 1 ? arr.verts[id] : ineg(arr.verts[id]);
                Entry e;
                e.inf = (t.second == 0);
                if (!e.inf) e.slope = t.first / t.second;
                e.t = t;
                e.vtx_a = sphere_vertex(cx, wa);
                e.vtx_b = sphere_vertex(cx, ineg(wa));
                ent.push_back(e);
            }
            std::sort(ent.begin(), ent.end(), [](const Entry& x, const Entry& y) {
                if (x.inf || y.inf) return y.inf && !x.inf;
                return x.slope < y.slope;
            });
            int ca = comp_count++, cb = comp_count++;
            cx.comp_partner.push_back(cb);
            cx.comp_partner.push_back(ca);
            auto tang = [&](const Entry& e) {
                Vec3 T;
                if (!e.inf) {
                    T = {p1_eval(p1_d0(pm.r[0]), e.t.first, e.t.second),
                         p1_eval(p1_d0(pm.r[1]), e.t.first, e.t.second),
                         p1_eval(p1_d0(pm.r[2]), e.t.first, e.t.second)};
                } else {
                    T = {-p1_eval(p1_d1(pm.r[0]), Rat(1), Rat(0)),
                         -p1_eval(p1_d1(pm.r[1]), Rat(1), Rat(0)),
                         -p1_eval(p1_d1(pm.r[2]), Rat(1), Rat(0))};
                }
                return norm_signed(T);
            };
            size_t m = ent.size();
            for (int oval = 0; oval < 2; ++oval) {
                int comp = oval == 0 ? ca : cb;
                for (size_t i = 0; i < m; ++i) {
                    const Entry& u = ent[i];
                    const Entry& w = ent[(i + 1) % m];
                    Iv3 tu = tang(u), tw = tang(w);
                    if (oval == 1) {
                        tu = ineg(tu);
                        tw = ineg(tw);
                    }
                    SEdge e;
                    e.curve = c;
                    e.comp = comp;
                    e.v = {oval == 0 ? u.vtx_a : u.vtx_b, oval == 0 ? w.vtx_a : w.vtx_b};
                    e.dout = {tu, ineg(tw)};
                    int eid = static_cast<int>(cx.edges.size());
                    cx.edges.push_back(e);
                    cx.out_at[{comp, e.v[0]}] = eid;
                }
            }
        }
    }

    // rotation systems
    const int nv = static_cast<int>(cx.pts.size());
    cx.rot.assign(nv, {});
    for (int e = 0; e < static_cast<int>(cx.edges.size()); ++e)
        for (int end = 0; end < 2; ++end) cx.rot[cx.edges[e].v[end]].push_back({e, end});
    cx.rotpos.assign(cx.edges.size(), std::vector<int>(2, -1));
    for (int v = 0; v < nv; ++v) {
        Vec3 p = rat_of(cx.pts[v]);
        Vec3 u1;
        for (int k = 0; k < 3; ++k) {
            Vec3 ek = {Rat(k == 0), Rat(k == 1), Rat(k == 2)};
            u1 = rcross(ek, p);
            if (!(u1[0] == 0 && u1[1] == 0 && u1[2] == 0)) break;
        }
        Vec3 u2 = rcross(p, u1);
        auto key = [&](const std::pair<int, int>& end) {
            Vec3 w = rat_of(cx.edges[end.first].dout[end.second]);
            return std::pair<Rat, Rat>{rdet3(w, u2, p), rdet3(u1, w, p)};
        };
        std::sort(cx.rot[v].begin(), cx.rot[v].end(),
                  [&](const auto& x, const auto& y) { return ccw_less(key(x), key(y)); });
        for (size_t i = 0; i < cx.rot[v].size(); ++i)
            cx.rotpos[cx.rot[v][i].first][cx.rot[v][i].second] = static_cast<int>(i);
    }

    // face tracing: darts are 2*edge + dir, dir 0 running from v[0] to v[1]
    auto head = [&](int dart) { return cx.edges[dart / 2].v[1 - dart % 2]; };
    auto next = [&](int dart) {
        int e = dart / 2, arr_end = 1 - dart % 2;
        int h = cx.edges[e].v[arr_end];
        const auto& r = cx.rot[h];
        int i = cx.rotpos[e][arr_end];
        auto [ne, nend] = r[(i + 1) % r.size()];
        return 2 * ne + (nend == 0 ? 0 : 1);
    };
    int nd = 2 * static_cast<int>(cx.edges.size());
    cx.face_of.assign(nd, -1);
    for (int d0 = 0; d0 < nd; ++d0) {
        if (cx.face_of[d0] >= 0) continue;
        SFace f;
        int fi = static_cast<int>(cx.faces.size());
        int d = d0;
        do {
            cx.face_of[d] = fi;
            f.darts.push_back(d);
            f.edges.insert(d / 2);
            d = next(d);
        } while (d != d0);
        cx.faces.push_back(std::move(f));
    }
    long long v_cnt = nv, e_cnt = static_cast<long long>(cx.edges.size());
    if (v_cnt - e_cnt + static_cast<long long>(cx.faces.size()) != 2)
        reject("sphere Euler characteristic check failed");
    (void)head;
    return cx;
}

int antipodal_vertex(const Complex& cx, int v) {
    auto it = cx.id.find(ineg(cx.pts[v]));
    if (it == cx.id.end()) reject("missing antipodal vertex");
    return it->second;
}

int antipodal_edge(const Complex& cx, int e) {
    const SEdge& se = cx.edges[e];
    auto it = cx.out_at.find({cx.comp_partner[se.comp], antipodal_vertex(cx, se.v[0])});
    if (it == cx.out_at.end()) reject("missing antipodal edge");
    const SEdge& ae = cx.edges[it->second];
    if (ae.v[1] != antipodal_vertex(cx, se.v[1])) reject("antipodal edge mismatch");
    return it->second;
}

std::vector<int> pair_faces(const Complex& cx) {
    std::vector<int> partner(cx.faces.size(), -1);
    for (size_t f = 0; f < cx.faces.size(); ++f) {
        std::set<int> image;
        for (int e : cx.faces[f].edges) image.insert(antipodal_edge(cx, e));
        int ae = *image.begin();
        int cand = -1;
        for (int d : {2 * ae, 2 * ae + 1}) {
            int g = cx.face_of[d];
            if (cx.faces[g].edges == image) cand = g;
        }
        if (cand < 0) reject("antipodal face not found");
        partner[f] = cand;
    }
    for (size_t f = 0; f < cx.faces.size(); ++f)
        if (partner[f] == static_cast<int>(f) || partner[partner[f]] != static_cast<int>(f))
            reject("antipodal face pairing is not an involution");
    return partner;
}

// interior point of a sphere face, found from a corner wedge and certified
// by exact sign checks at two nested radii
Vec3 face_sample(const Arr& arr, const Complex& cx, const SFace& f) {
    for (size_t k = 0; k < f.darts.size(); ++k) {
        int d = f.darts[k], dn = f.darts[(k + 1) % f.darts.size()];
        int e = d / 2, arr_end = 1 - d % 2;
        int h = cx.edges[e].v[arr_end];
        if (cx.edges[dn / 2].v[dn % 2] != h) reject("face boundary is not closed");
        Vec3 wa = rat_of(cx.edges[e].dout[arr_end]);
        Vec3 wb = rat_of(cx.edges[dn / 2].dout[dn % 2]);
        Vec3 wa2 = wa, wb2 = wb;
        {
            Rat la = 0, lb = 0;
            for (int t = 0; t < 3; ++t) {
                la = std::max(la, Rat(abs(wa[t])));
                lb = std::max(lb, Rat(abs(wb[t])));
            }
            wa2 = rscale(Rat(1) / la, wa);
            wb2 = rscale(Rat(1) / lb, wb);
        }
        Vec3 m = radd(wa2, wb2);
        Vec3 p = rat_of(cx.pts[h]);
        {
            Rat mp = 0, mm = 0;
            for (int t = 0; t < 3; ++t) {
                mp = std::max(mp, Rat(abs(p[t])));
                mm = std::max(mm, Rat(abs(m[t])));
            }
            m = rscale(mp / mm, m);
        }
        for (int kk = 8; kk <= 128; kk += 8) {
            bool good = true;
            Vec3 s;
            for (int pass = 0; pass < 2 && good; ++pass) {
                Rat eps = Rat(1, Int(1) << (kk + 4 * pass));
                s = radd(p, rscale(eps, m));
                for (const auto& c : arr.cs.curves) {
                    Rat at_p = c.eval(p);
                    int want = at_p == 0 ? sgn(rdot(c.gradient(p), m)) : sgn(at_p);
                    if (want == 0 || sgn(c.eval(s)) != want) {
                        good = false;
                        break;
                    }
                }
            }
            if (good) return s;
        }
    }
    reject("no certified interior sample for a face");
}

// ---------------------------------------------------------------------------
// genericity certification

void check_generic(const PointConfig& cfg, const CurveSet& cs) {
    const int n = cfg.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (det3(cfg.m, i, j, k) == 0)
                    reject("collinear points " + pt_name(i) + pt_name(j) + pt_name(k));
    if (n >= 6) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        auto p = [&](int a, int b, int c, const std::vector<int>& s) {
            return det3(cfg.m, s[a - 1], s[b - 1], s[c - 1]);
        };
        auto coconic = [&](const std::vector<int>& s) {
            return p(1, 3, 4, s) * p(1, 5, 6, s) * p(2, 3, 5, s) * p(2, 4, 6, s)
                 - p(1, 3, 5, s) * p(1, 4, 6, s) * p(2, 3, 4, s) * p(2, 5, 6, s);
        };
        for (int omit = (n == 6 ? n : 0); omit < n + (n == 6 ? 1 : 0); ++omit) {
            std::vector<int> six;
            for (int i = 0; i < n; ++i)
                if (i != omit) six.push_back(i);
            if (static_cast<int>(six.size()) != 6) continue;
            if (coconic(six) == 0) reject("six points on a conic");
        }
    }
    // conics really pass through their defining points and miss the others
    for (const auto& c : cs.curves) {
        if (c.degree != 2) continue;
        std::set<int> on(c.through.begin(), c.through.end());
        for (int i = 0; i < n; ++i) {
            Rat v = c.eval(cs.base_points[i]);
            if (on.count(i) ? v != 0 : v == 0)
                reject("conic " + c.label + " incidence check failed at point " + pt_name(i));
        }
    }
    // no three of the lines meet away from the base points
    const int lines = n * (n - 1) / 2;
    for (int a = 0; a < lines; ++a)
        for (int b = a + 1; b < lines; ++b) {
            const auto& la = cs.curves[a];
            const auto& lb = cs.curves[b];
            if (la.through[0] == lb.through[0] || la.through[0] == lb.through[1]
                || la.through[1] == lb.through[0] || la.through[1] == lb.through[1])
                continue;
            for (int c = b + 1; c < lines; ++c) {
                const auto& lc = cs.curves[c];
                std::set<int> idx = {la.through[0], la.through[1], lb.through[0],
                                     lb.through[1], lc.through[0], lc.through[1]};
                if (idx.size() != 6) continue;
                RatMatrix m = {{cs.curves[a].coeff[0], cs.curves[a].coeff[1], cs.curves[a].coeff[2]},
                               {cs.curves[b].coeff[0], cs.curves[b].coeff[1], cs.curves[b].coeff[2]},
                               {cs.curves[c].coeff[0], cs.curves[c].coeff[1], cs.curves[c].coeff[2]}};
                if (rdet3({m[0][0], m[0][1], m[0][2]}, {m[1][0], m[1][1], m[1][2]},
                          {m[2][0], m[2][1], m[2][2]}) == 0)
                    reject("concurrent lines " + la.label + " " + lb.label + " " + lc.label);
            }
        }
    // transversality at every shared base point (both curves smooth there)
    for (size_t a = 0; a < cs.curves.size(); ++a)
        for (size_t b = a + 1; b < cs.curves.size(); ++b)
            for (int i = 0; i < n; ++i) {
                const Vec3& p = cs.base_points[i];
                const auto& ca = cs.curves[a];
                const auto& cb = cs.curves[b];
                if (ca.eval(p) != 0 || cb.eval(p) != 0) continue;
                if (ca.node == i || cb.node == i) continue;
                Vec3 ga = ca.gradient(p), gb = cb.gradient(p);
                if (proportional(ga, gb))
                    reject("tangency of " + ca.label + " and " + cb.label + " at point "
                           + pt_name(i));
            }
}

}  // namespace

CurveSet validate_general(const PointConfig& cfg) {
    CurveSet cs = build_curves(cfg);
    check_generic(cfg, cs);
    return cs;
}

std::vector<Vec3> curve_intersection(const CurveSet& cs, int a, int b) {
    std::vector<Param> params;
    for (size_t c = 0; c < cs.curves.size(); ++c)
        params.push_back(build_param(cs, static_cast<int>(c)));
    if (a > b) std::swap(a, b);
    std::vector<Vec3> out;
    for (int i = 0; i < cs.n; ++i)
        if (cs.curves[a].eval(cs.base_points[i]) == 0
            && cs.curves[b].eval(cs.base_points[i]) == 0)
            out.push_back(rat_of(norm_proj(cs.base_points[i])));
    PairCut cut = restrict_pair(cs, params, a, b);
    for (const auto& w : cut.extras) out.push_back(rat_of(w));
    return out;
}

long long sign_vector_count(const PointConfig& cfg) {
    Arr arr = build_arrangement(validate_general(cfg));
    return static_cast<long long>(arc_sign_vectors(arr).size());
}

RegionCensus blowup_census(const PointConfig& cfg) {
    if (cfg.n != 5 && cfg.n != 6) reject("full census only for five or six points");
    Arr arr = build_arrangement(validate_general(cfg));
    Complex cx = build_complex(arr);
    auto partner = pair_faces(cx);

    // map sphere vertices to base point indices
    std::map<int, int> base_of;
    for (int i = 0; i < cfg.n; ++i) {
        Iv3 b = arr.verts[arr.base_vid[i]];
        base_of[cx.id.at(b)] = i;
        base_of[cx.id.at(ineg(b))] = i;
    }

    RegionCensus rc;
    rc.n = cfg.n;
    long long pv = static_cast<long long>(arr.verts.size());
    long long pe = static_cast<long long>(cx.edges.size()) / 2;
    long long through_sum = 0;
    for (int k : arr.curves_through_base) through_sum += k;
    rc.v = pv - cfg.n + through_sum;
    rc.e = pe + through_sum;
    rc.f = static_cast<long long>(cx.faces.size()) / 2;
    if (rc.v != rc.e / 2) reject("vertex-edge relation failed");
    if (rc.v - rc.e + rc.f != 1 - cfg.n) reject("surface Euler characteristic failed");

    std::set<SignVec> face_signs;
    std::vector<SignVec> face_sign_of(cx.faces.size());
    std::vector<Vec3> sample_of(cx.faces.size());
    for (size_t f = 0; f < cx.faces.size(); ++f) {
        sample_of[f] = face_sample(arr, cx, cx.faces[f]);
        bool ok = false;
        face_sign_of[f] = signs_at(arr.cs, sample_of[f], &ok);
        if (!ok) reject("face sample on a curve");
        if (!face_signs.insert(face_sign_of[f]).second)
            reject("two faces share a sign vector");
    }
    std::set<SignVec> arc_signs = arc_sign_vectors(arr);
    if (arc_signs != face_signs) reject("sampling pipelines disagree");
    rc.sign_vector_count = static_cast<long long>(arc_signs.size());

    auto face_record = [&](size_t f) {
        Face rec;
        std::set<std::string> labels;
        int corners_at_base = 0;
        for (size_t k = 0; k < cx.faces[f].darts.size(); ++k) {
            int d = cx.faces[f].darts[k];
            labels.insert(arr.cs.curves[cx.edges[d / 2].curve].label);
            int h = cx.edges[d / 2].v[1 - d % 2];
            auto it = base_of.find(h);
            if (it != base_of.end()) {
                ++corners_at_base;
                if (!labels.insert("E" + pt_name(it->second)).second)
                    reject("face meets an exceptional circle twice");
            }
        }
        rec.size = static_cast<int>(cx.faces[f].darts.size()) + corners_at_base;
        if (static_cast<int>(labels.size()) != rec.size)
            reject("face boundary labels are not distinct");
        rec.labels.assign(labels.begin(), labels.end());
        rec.sample = sample_of[f];
        return rec;
    };
    for (size_t f = 0; f < cx.faces.size(); ++f) {
        if (partner[f] < static_cast<int>(f)) continue;
        Face rec = face_record(f);
        Face twin = face_record(partner[f]);
        if (rec.labels != twin.labels) reject("antipodal faces disagree on labels");
        rc.size_census[rec.size]++;
        rc.faces.push_back(std::move(rec));
    }
    if (static_cast<long long>(rc.faces.size()) != rc.f) reject("face count mismatch");
    return rc;
}

CensusDiff census_fixture_compare(const RegionCensus& census) {
    auto canon = [](std::string s) {
        std::istringstream in(s);
        std::vector<std::string> parts;
        std::string w;
        while (in >> w) parts.push_back(w);
        std::sort(parts.begin(), parts.end());
        std::string out;
        for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
        return out;
    };
    std::multiset<std::string> want;
    for (const char* s : fixtures::e6_census_triangles) want.insert(canon(s));
    for (const char* s : fixtures::e6_census_quadrilaterals) want.insert(canon(s));
    for (const char* s : fixtures::e6_census_pentagons) want.insert(canon(s));
    std::multiset<std::string> got;
    for (const auto& f : census.faces) {
        std::string s;
        for (const auto& l : f.labels) s += (s.empty() ? "" : " ") + l;
        got.insert(canon(s));
    }
    CensusDiff diff;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(diff.missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(diff.extra));
    diff.match = diff.missing.empty() && diff.extra.empty();
    return diff;
}

namespace {

// all maximal sets of pairwise disjoint exceptional classes (six for the
// cubic surface, five for the quartic), as label sets
std::vector<std::vector<int>> disjoint_tuples(const LineCatalog& lc, int k) {
    int m = lc.size();
    std::vector<std::vector<bool>> skew(m, std::vector<bool>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            skew[a][b] = (a != b) && pairing(lc.lines[a], lc.lines[b]) == 0;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c < m; ++c) {
            bool ok = true;
            for (int x : cur) ok &= skew[x][c];
            if (!ok) continue;
            cur.push_back(c);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

DoubleSixReport double_six_check(const RegionCensus& census) {
    if (census.n != 6) reject("double-six analysis needs the cubic surface census");
    LineCatalog lc = build_line_catalog(6);
    DoubleSixReport rep;
    std::set<std::string> in_triangles;
    for (const auto& f : census.faces)
        if (f.size == 3)
            for (const auto& l : f.labels) in_triangles.insert(l);
    for (const auto& l : lc.labels)
        if (!in_triangles.count(l)) rep.absent.push_back(l);
    if (rep.absent.size() != 12) return rep;

    std::vector<int> ids;
    for (const auto& l : rep.absent) ids.push_back(lc.index_of_label(l));
    // the two sextuples of pairwise disjoint classes inside the absent set
    std::vector<std::vector<int>> sixes;
    for (const auto& tup : disjoint_tuples(lc, 6)) {
        bool inside = true;
        for (int x : tup) inside &= std::count(ids.begin(), ids.end(), x) > 0;
        if (inside) sixes.push_back(tup);
    }
    if (sixes.size() != 2) return rep;
    for (int i = 0; i < 6; ++i) rep.first[i] = lc.labels[sixes[0][i]];
    // partner each a_i with the unique disjoint member of the second sextuple
    for (int i = 0; i < 6; ++i) {
        int hits = 0;
        for (int b : sixes[1])
            if (pairing(lc.lines[sixes[0][i]], lc.lines[b]) == 0) {
                rep.second[i] = lc.labels[b];
                ++hits;
            }
        if (hits != 1) return rep;
    }
    rep.is_double_six = true;

    // uniqueness among all 36 double-sixes of the surface
    auto halves = disjoint_tuples(lc, 6);
    std::set<std::set<int>> seen;
    int avoiding = 0;
    for (const auto& h : halves) {
        std::vector<int> other;
        for (int l = 0; l < lc.size(); ++l) {
            if (std::count(h.begin(), h.end(), l)) continue;
            int skew_cnt = 0;
            for (int a : h) skew_cnt += pairing(lc.lines[l], lc.lines[a]) == 0;
            if (skew_cnt == 1) other.push_back(l);
        }
        if (other.size() != 6) reject("double-six completion failed");
        std::set<int> key(h.begin(), h.end());
        key.insert(other.begin(), other.end());
        if (!seen.insert(key).second) continue;
        bool avoid = true;
        for (int l : key) avoid &= !in_triangles.count(lc.labels[l]);
        avoiding += avoid;
    }
    if (seen.size() != 36) reject("expected 36 double-sixes");
    rep.unique_triangle_avoiding = (avoiding == 1);

    // pentagon incidence of the absent classes, in first-then-second order
    rep.absent.clear();
    for (int i = 0; i < 6; ++i) rep.absent.push_back(rep.first[i]);
    for (int i = 0; i < 6; ++i) rep.absent.push_back(rep.second[i]);
    for (const auto& l : rep.absent) {
        int cnt = 0;
        for (const auto& f : census.faces)
            cnt += f.size == 5 && std::count(f.labels.begin(), f.labels.end(), l) > 0;
        rep.pentagon_counts.push_back(cnt);
    }
    rep.others_uniform = true;
    for (const auto& l : lc.labels) {
        if (std::count(rep.absent.begin(), rep.absent.end(), l)) continue;
        int t = 0, q = 0, p = 0;
        for (const auto& f : census.faces) {
            if (!std::count(f.labels.begin(), f.labels.end(), l)) continue;
            t += f.size == 3;
            q += f.size == 4;
            p += f.size == 5;
        }
        rep.others_uniform &= (t == 2 && q == 12 && p == 6);
    }
    return rep;
}

std::vector<std::string> blowdown_witness(const RegionCensus& census, int face_index) {
    LineCatalog lc = build_line_catalog(census.n);
    int k = census.n == 6 ? 6 : 5;
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto& tuples = cache[census.n];
    if (tuples.empty()) tuples = disjoint_tuples(lc, k);
    const Face& f = census.faces.at(face_index);
    // Every vertex of the subdivision lies on exactly two of the curves, and
    // face interiors avoid all of them, so a class meets the face closure if
    // and only if it bounds the face.  A disjoint tuple avoiding the boundary
    // labels can therefore be blown down away from the face.
    for (const auto& tup : tuples) {
        bool ok = true;
        for (int s : tup)
            ok &= std::count(f.labels.begin(), f.labels.end(), lc.labels[s]) == 0;
        if (!ok) continue;
        std::vector<std::string> out;
        for (int s : tup) out.push_back(lc.labels[s]);
        return out;
    }
    return {};
}

std::vector<LedgerLine> euler_ledger() {
    std::vector<LedgerLine> out;
    auto add = [&](std::string s, Int lhs, Int rhs) {
        out.push_back({std::move(s), lhs, rhs, lhs == rhs});
    };
    add("chi(S5o) = 8 - 16*2 + 40 = 16", Int(8 - 16 * 2 + 40), Int(16));
    add("chi(S6o) = 9 - 27*2 + 135 = 90", Int(9 - 27 * 2 + 135), Int(90));
    add("chi(Y(3,6)) = 16 * 2 = 32", Int(16 * 2), Int(32));
    add("chi(Y(3,7)) = 32*90 + 45*16 = 3600", Int(32 * 90 + 45 * 16), Int(3600));
    add("chi(X(3,6)) - chi(Y(3,6)) = chi(M0,6)", Int(fixtures::chi_x36 - 32), Int(-6));
    add("1272 - 3600 = 7*(-312) - 6*24", Int(fixtures::chi_x37 - 3600),
        Int(7 * (-312) - 6 * 24));
    add("3600 = 1272 + 7*312 + 144", Int(3600), Int(fixtures::chi_x37 + 7 * 312 + 144));
    const long long edges[] = {30, 80, 270, 1624};
    const long long polys[] = {12, 36, 130, 806};
    for (int n = 4; n <= 7; ++n)
        add("p = e/2 + (1-n) for n=" + std::to_string(n),
            Int(edges[n - 4] / 2 + 1 - n), Int(polys[n - 4]));
    add("chi(T) = 2*(-5) - 3*(-2)*1*(-1) = -16", Int(2 * (-5) - 3 * ((-2) * 1 * (-1))),
        Int(-16));
    Int strata = 0;
    for (long long s : fixtures::y36_strata) strata += s;
    add("2111 Eckardt strata", strata, Int(2111));
    add("top stratum contribution 45*16 = 720", Int(45 * 16), Int(720));
    add("chi drop at one Eckardt point: 90 - 1 = 89", Int(90 - 1), Int(89));
    return out;
}

}  // namespace pezzo
