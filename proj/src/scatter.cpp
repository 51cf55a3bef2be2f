#include "pezzo/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

namespace pezzo {

// ---------------------------------------------------------------- polynomials

Cx SPoly::operator()(const std::vector<Cx>& x) const {
    Cx total = 0.0;
    for (const auto& t : terms) {
        Cx v = t.c;
        for (int j = 0; j < nvars; ++j)
            for (int k = 0; k < t.e[j]; ++k) v *= x[j];
        total += v;
    }
    return total;
}

SPoly SPoly::diff(int j) const {
    SPoly out;
    out.nvars = nvars;
    for (const auto& t : terms) {
        if (t.e[j] == 0) continue;
        Term d = t;
        d.c *= t.e[j];
        d.e[j] -= 1;
        out.terms.push_back(d);
    }
    return out;
}

bool SPoly::is_constant() const {
    for (const auto& t : terms)
        for (int j = 0; j < nvars; ++j)
            if (t.e[j] != 0) return false;
    return true;
}

namespace {

SPoly normalize(const SPoly& p) {
    std::map<std::array<int, 8>, double> acc;
    for (const auto& t : p.terms) acc[t.e] += t.c;
    SPoly out;
    out.nvars = p.nvars;
    for (const auto& [e, c] : acc)
        if (c != 0.0) out.terms.push_back({c, e});
    return out;
}

}  // namespace

SPoly sp_const(int nvars, double c) {
    SPoly p;
    p.nvars = nvars;
    if (c != 0.0) p.terms.push_back({c, {}});
    return p;
}

SPoly sp_var(int nvars, int j) {
    SPoly p;
    p.nvars = nvars;
    SPoly::Term t{1.0, {}};
    t.e[j] = 1;
    p.terms.push_back(t);
    return p;
}

SPoly operator+(const SPoly& a, const SPoly& b) {
    SPoly out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(out);
}

SPoly operator-(const SPoly& a, const SPoly& b) {
    SPoly nb = b;
    for (auto& t : nb.terms) t.c = -t.c;
    return a + nb;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly out;
    out.nvars = a.nvars;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            SPoly::Term t{ta.c * tb.c, {}};
            for (int j = 0; j < a.nvars; ++j) t.e[j] = ta.e[j] + tb.e[j];
            out.terms.push_back(t);
        }
    return normalize(out);
}

// ------------------------------------------------------------ likelihood sums

void LikelihoodSystem::finalize() {
    dfirst.clear();
    dsecond.clear();
    for (const auto& f : factors) {
        for (int j = 0; j < nvars; ++j) dfirst.push_back(f.diff(j));
    }
    for (int i = 0; i < m(); ++i)
        for (int j = 0; j < nvars; ++j)
            for (int k = 0; k < nvars; ++k)
                dsecond.push_back(dfirst[i * nvars + j].diff(k));
}

std::vector<Cx> LikelihoodSystem::eval_equations(const std::vector<Cx>& x,
                                                 const std::vector<Cx>& s) const {
    std::vector<Cx> out(nvars, 0.0);
    for (int i = 0; i < m(); ++i) {
        Cx fv = factors[i](x);
        for (int j = 0; j < nvars; ++j)
            out[j] += s[i] * dfirst[i * nvars + j](x) / fv;
    }
    return out;
}

std::vector<std::vector<Cx>> LikelihoodSystem::hessian(
    const std::vector<Cx>& x, const std::vector<Cx>& s) const {
    std::vector<std::vector<Cx>> h(nvars, std::vector<Cx>(nvars, 0.0));
    for (int i = 0; i < m(); ++i) {
        Cx fv = factors[i](x);
        std::vector<Cx> g(nvars);
        for (int j = 0; j < nvars; ++j) g[j] = dfirst[i * nvars + j](x);
        for (int j = 0; j < nvars; ++j)
            for (int k = 0; k < nvars; ++k) {
                Cx hjk = dsecond[(i * nvars + j) * nvars + k](x);
                h[j][k] += s[i] * (hjk * fv - g[j] * g[k]) / (fv * fv);
            }
    }
    return h;
}

// ------------------------------------------------------------------- models

namespace {

using PolyCol = std::array<SPoly, 3>;

PolyCol const_col(int nv, int a, int b, int c) {
    return {sp_const(nv, a), sp_const(nv, b), sp_const(nv, c)};
}

SPoly det3p(const PolyCol& a, const PolyCol& b, const PolyCol& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) -
           a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// condition for six points (as columns) to lie on a common conic
SPoly conic_condition(const std::vector<PolyCol>& p) {
    auto d = [&](int i, int j, int k) { return det3p(p[i], p[j], p[k]); };
    return d(0, 2, 3) * d(0, 4, 5) * d(1, 2, 4) * d(1, 3, 5) -
           d(0, 2, 4) * d(0, 3, 5) * d(1, 2, 3) * d(1, 4, 5);
}

LikelihoodSystem plane_point_model(const std::string& name,
                                   const std::vector<std::array<int, 3>>& fixed) {
    LikelihoodSystem sys;
    sys.model = name;
    sys.nvars = 2;
    const int nf = static_cast<int>(fixed.size());
    std::vector<PolyCol> cols;
    for (const auto& q : fixed) cols.push_back(const_col(2, q[0], q[1], q[2]));
    PolyCol mv = {sp_const(2, 1), sp_var(2, 0), sp_var(2, 1)};
    // joins of the moving point with each fixed pair
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            sys.factors.push_back(det3p(cols[i], cols[j], mv));
            sys.labels.push_back("m" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    // conic conditions through each five of the fixed points
    if (nf == 5) {
        std::vector<PolyCol> six = cols;
        six.push_back(mv);
        sys.factors.push_back(conic_condition(six));
        sys.labels.push_back("q");
    } else {
        for (int skip = 0; skip < nf; ++skip) {
            std::vector<PolyCol> six;
            for (int i = 0; i < nf; ++i)
                if (i != skip) six.push_back(cols[i]);
            six.push_back(mv);
            sys.factors.push_back(conic_condition(six));
            sys.labels.push_back("q" + std::to_string(skip + 1));
        }
    }
    sys.finalize();
    return sys;
}

LikelihoodSystem m05_model() {
    LikelihoodSystem sys;
    sys.model = "m05";
    sys.nvars = 2;
    SPoly x = sp_var(2, 0), y = sp_var(2, 1), one = sp_const(2, 1);
    sys.factors = {x, y, one - x, one - y, y - x};
    sys.labels = {"x", "y", "1-x", "1-y", "y-x"};
    sys.finalize();
    return sys;
}

LikelihoodSystem y36_model() {
    LikelihoodSystem sys;
    sys.model = "y36";
    sys.nvars = 4;
    std::vector<PolyCol> c(6);
    c[0] = {sp_const(4, 1), sp_var(4, 0), sp_var(4, 1)};
    c[1] = const_col(4, 1, 0, 0);
    c[2] = const_col(4, 0, 1, 0);
    c[3] = {sp_const(4, 1), sp_var(4, 2), sp_var(4, 3)};
    c[4] = const_col(4, 1, 1, 1);
    c[5] = const_col(4, 0, 0, 1);
    std::map<std::string, SPoly> minors;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 6; ++k) {
                std::string lab = "p" + std::to_string(i + 1) +
                                  std::to_string(j + 1) + std::to_string(k + 1);
                SPoly p = det3p(c[i], c[j], c[k]);
                minors[lab] = p;
                if (!p.is_constant()) {
                    sys.factors.push_back(p);
                    sys.labels.push_back(lab);
                }
            }
    SPoly q = minors["p134"] * minors["p156"] * minors["p235"] * minors["p246"] -
              minors["p135"] * minors["p146"] * minors["p234"] * minors["p256"];
    sys.factors.push_back(q);
    sys.labels.push_back("q");
    sys.finalize();
    return sys;
}

LikelihoodSystem y37_model() {
    LikelihoodSystem sys;
    sys.model = "y37";
    sys.nvars = 6;
    std::vector<PolyCol> c(7);
    c[0] = const_col(6, 1, 0, 0);
    c[1] = const_col(6, 0, 1, 0);
    c[2] = const_col(6, 0, 0, 1);
    c[3] = const_col(6, 1, 1, 1);
    for (int t = 0; t < 3; ++t)
        c[4 + t] = {sp_const(6, 1), sp_var(6, t), sp_var(6, 3 + t)};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 7; ++k) {
                SPoly p = det3p(c[i], c[j], c[k]);
                if (p.is_constant()) continue;
                sys.factors.push_back(p);
                sys.labels.push_back("p" + std::to_string(i + 1) +
                                     std::to_string(j + 1) + std::to_string(k + 1));
            }
    for (int skip = 0; skip < 7; ++skip) {
        std::vector<PolyCol> six;
        for (int i = 0; i < 7; ++i)
            if (i != skip) six.push_back(c[i]);
        sys.factors.push_back(conic_condition(six));
        sys.labels.push_back("q" + std::to_string(skip + 1));
    }
    sys.finalize();
    return sys;
}

LikelihoodSystem ae6_model() {
    LikelihoodSystem sys;
    sys.model = "ae6";
    sys.nvars = 5;  // sixth coordinate pinned to 1 to kill the scaling
    auto d = [&](int i) {
        return i < 5 ? sp_var(5, i) : sp_const(5, 1);
    };
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            sys.factors.push_back(d(i) - d(j));
            sys.labels.push_back("d" + std::to_string(i + 1) + "-d" +
                                 std::to_string(j + 1));
        }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                sys.factors.push_back(d(i) + d(j) + d(k));
                sys.labels.push_back("d" + std::to_string(i + 1) + "+d" +
                                     std::to_string(j + 1) + "+d" +
                                     std::to_string(k + 1));
            }
    SPoly all = sp_const(5, 0);
    for (int i = 0; i < 6; ++i) all = all + d(i);
    sys.factors.push_back(all);
    sys.labels.push_back("dsum");
    sys.finalize();
    return sys;
}

}  // namespace

LikelihoodSystem likelihood_system(const std::string& model) {
    if (model == "m05") return m05_model();
    if (model == "s5o")
        return plane_point_model(
            model, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}});
    if (model == "s6o")
        return plane_point_model(model, {{1, 0, 0},
                                         {0, 1, 0},
                                         {0, 0, 1},
                                         {1, 1, 1},
                                         {1, 2, 3},
                                         {1, 5, 8}});
    if (model == "s6o-eckardt")
        // the joins 1-4, 2-5 and 3-6 meet in the point (1,3,3): one triple
        // of concurrent lines, which lowers the critical-point count by one
        return plane_point_model(model, {{1, 0, 0},
                                         {0, 1, 0},
                                         {0, 0, 1},
                                         {1, 1, 1},
                                         {1, 2, 3},
                                         {1, 3, 7}});
    if (model == "y36") return y36_model();
    if (model == "y37") return y37_model();
    if (model == "ae6") return ae6_model();
    throw std::runtime_error("unknown model: " + model);
}

long long ml_target(const std::string& model) {
    if (model == "m05") return 2;
    if (model == "s5o") return 16;
    if (model == "s6o") return 90;
    if (model == "s6o-eckardt") return 89;
    if (model == "y36") return 32;
    if (model == "y37") return 3600;
    if (model == "ae6") return 5040;
    throw std::runtime_error("unknown model: " + model);
}

// --------------------------------------------------------- dense Cx algebra

namespace {

using CxMat = std::vector<std::vector<Cx>>;
using CxVec = std::vector<Cx>;

// LU solve with partial pivoting; returns false on a vanishing pivot
bool lin_solve(CxMat a, CxVec b, CxVec& out) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) return false;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < n; ++r) {
            Cx f = a[r][col] / a[col][col];
            for (int cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
            b[r] -= f * b[col];
        }
    }
    out.assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        Cx acc = b[r];
        for (int cc = r + 1; cc < n; ++cc) acc -= a[r][cc] * out[cc];
        out[r] = acc / a[r][r];
    }
    return true;
}

Cx det_cx(CxMat a) {
    const int n = static_cast<int>(a.size());
    Cx d = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[col], a[piv]);
            d = -d;
        }
        d *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            Cx f = a[r][col] / a[col][col];
            for (int cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
        }
    }
    return d;
}

double res_norm(const CxVec& v) {
    double r = 0.0;
    for (const Cx& c : v) r = std::max(r, std::abs(c));
    return r;
}

double point_dist(const CxVec& a, const CxVec& b) {
    double d = 0.0;
    for (size_t j = 0; j < a.size(); ++j) {
        double scale = 1.0 + std::max(std::abs(a[j]), std::abs(b[j]));
        d = std::max(d, std::abs(a[j] - b[j]) / scale);
    }
    return d;
}

struct Tracker {
    const LikelihoodSystem& sys;
    const TrackerConfig& cfg;
    std::mt19937_64 rng;

    Tracker(const LikelihoodSystem& s, const TrackerConfig& c)
        : sys(s), cfg(c), rng(c.seed) {}

    Cx rand_cx(double scale = 1.0) {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        return scale * Cx(u(rng), u(rng));
    }

    CxVec rand_vec(int n, double scale = 1.0) {
        CxVec v(n);
        for (Cx& c : v) c = rand_cx(scale);
        return v;
    }

    // residual of the critical equations relative to the natural size of
    // their terms; near the removed divisors the absolute values blow up,
    // so an absolute tolerance would declare failure on perfectly good
    // points there
    double rel_residual(const CxVec& x, const CxVec& s) {
        std::vector<Cx> f(sys.nvars, 0.0);
        std::vector<double> scale(sys.nvars, 0.0);
        for (int i = 0; i < sys.m(); ++i) {
            Cx fv = sys.factors[i](x);
            for (int j = 0; j < sys.nvars; ++j) {
                Cx term = s[i] * sys.dfirst[i * sys.nvars + j](x) / fv;
                f[j] += term;
                scale[j] += std::abs(term);
            }
        }
        double worst = 0.0;
        for (int j = 0; j < sys.nvars; ++j)
            worst = std::max(worst, std::abs(f[j]) / (1.0 + scale[j]));
        return worst;
    }

    // Newton at fixed parameters; returns final residual, or nullopt if a
    // linear solve breaks down
    std::optional<double> newton(CxVec& x, const CxVec& s, int iters,
                                 double* last_step = nullptr) {
        double step = 0.0;
        for (int it = 0; it < iters; ++it) {
            CxVec f = sys.eval_equations(x, s);
            CxVec delta;
            if (!lin_solve(sys.hessian(x, s), f, delta)) return std::nullopt;
            step = 0.0;
            for (int j = 0; j < sys.nvars; ++j)
                step = std::max(step,
                                std::abs(delta[j]) / (1.0 + std::abs(x[j])));
            for (int j = 0; j < sys.nvars; ++j) x[j] -= delta[j];
            if (step < 1e-14) break;
        }
        if (last_step) *last_step = step;
        return rel_residual(x, s);
    }

    // track x from parameters sa to sb along the straight segment
    std::optional<CxVec> segment(CxVec x, const CxVec& sa, const CxVec& sb) {
        CxVec ds(sa.size());
        for (size_t i = 0; i < sa.size(); ++i) ds[i] = sb[i] - sa[i];
        auto s_at = [&](double t) {
            CxVec s(sa.size());
            for (size_t i = 0; i < sa.size(); ++i) s[i] = sa[i] + t * ds[i];
            return s;
        };
        // time derivative of the critical equations: linear in s, so this
        // is just the equations evaluated at the parameter increment
        auto deriv = [&](const CxVec& xx, double t) -> std::optional<CxVec> {
            CxVec g = sys.eval_equations(xx, ds);
            CxVec d;
            if (!lin_solve(sys.hessian(xx, s_at(t)), g, d)) return std::nullopt;
            for (Cx& c : d) c = -c;
            return d;
        };
        double t = 0.0, dt = 0.1;
        int steps = 0, streak = 0;
        while (t < 1.0 - 1e-12) {
            if (++steps > cfg.max_steps) return std::nullopt;
            dt = std::min(dt, 1.0 - t);
            // fourth-order Runge-Kutta predictor
            auto add = [&](const CxVec& a, const CxVec& b, double f) {
                CxVec r(a.size());
                for (size_t j = 0; j < a.size(); ++j) r[j] = a[j] + f * b[j];
                return r;
            };
            auto k1 = deriv(x, t);
            bool ok = k1.has_value();
            CxVec xn;
            if (ok) {
                auto k2 = deriv(add(x, *k1, dt / 2), t + dt / 2);
                auto k3 = k2 ? deriv(add(x, *k2, dt / 2), t + dt / 2) : std::nullopt;
                auto k4 = k3 ? deriv(add(x, *k3, dt), t + dt) : std::nullopt;
                ok = k4.has_value();
                if (ok) {
                    xn = x;
                    for (int j = 0; j < sys.nvars; ++j)
                        xn[j] += dt / 6.0 *
                                 ((*k1)[j] + 2.0 * (*k2)[j] + 2.0 * (*k3)[j] +
                                  (*k4)[j]);
                }
            }
            if (ok) {
                auto res = newton(xn, s_at(t + dt), cfg.newton_iters);
                ok = res.has_value() && *res < cfg.path_tol;
            }
            if (ok) {
                x = xn;
                t += dt;
                if (++streak >= 3) {
                    dt = std::min(dt * 1.7, 0.25);
                    streak = 0;
                }
            } else {
                dt /= 2.0;
                streak = 0;
                if (dt < cfg.min_step) return std::nullopt;
            }
        }
        return x;
    }

    // Newton contraction test at fixed parameters
    Solution certify(CxVec x, const CxVec& s) {
        Solution sol;
        double s1 = 0.0, s2 = 0.0;
        bool ok = true;
        for (int pass = 0; pass < 2 && ok; ++pass) {
            CxVec f = sys.eval_equations(x, s);
            CxVec d;
            ok = lin_solve(sys.hessian(x, s), f, d);
            if (!ok) break;
            double step = 0.0;
            for (int j = 0; j < sys.nvars; ++j)
                step = std::max(step,
                                std::abs(d[j]) / (1.0 + std::abs(x[j])));
            (pass == 0 ? s1 : s2) = step;
            for (int j = 0; j < sys.nvars; ++j) x[j] -= d[j];
        }
        sol.point = x;
        sol.newton_residual = rel_residual(x, s);
        sol.certified = ok && sol.newton_residual < cfg.certify_residual &&
                        (s2 <= s1 / 10.0 || s2 < 1e-13);
        return sol;
    }
};

bool pool_insert(std::vector<Solution>& pool, const Solution& sol,
                 double radius) {
    for (const auto& have : pool)
        if (point_dist(have.point, sol.point) < radius) return false;
    pool.push_back(sol);
    return true;
}

}  // namespace

// --------------------------------------------------------------- closed form

std::array<std::array<Cx, 2>, 2> closed_form_y35(
    const std::array<double, 5>& s) {
    const double s1 = s[0], s2 = s[1], s3 = s[2], s4 = s[3], s5 = s[4];
    double total = s1 + s2 + s3 + s4 + s5;
    // eliminating the second variable leaves a quadratic in the first whose
    // coefficients factor neatly
    double A = (s1 + s3 + s5) * total;
    double C = s1 * (s1 + s2 + s5);
    double B = -(A + C - s3 * (s3 + s4 + s5));
    double scale = std::max({std::abs(A), std::abs(B), std::abs(C), 1e-30});
    if (std::abs(A) < 1e-12 * scale)
        throw std::runtime_error("degenerate parameters: leading coefficient vanishes");
    Cx disc = Cx(B * B - 4.0 * A * C, 0.0);
    if (std::abs(disc) < 1e-12 * scale * scale)
        throw std::runtime_error("degenerate parameters: vanishing discriminant");
    Cx r = std::sqrt(disc);
    std::array<std::array<Cx, 2>, 2> out;
    for (int k = 0; k < 2; ++k) {
        Cx X = (-B + (k == 0 ? r : -r)) / (2.0 * A);
        Cx den = s1 * (1.0 - X) - s3 * X;
        if (std::abs(den) < 1e-12 * scale)
            throw std::runtime_error("degenerate parameters: back substitution breaks down");
        Cx Y = X + s5 * X * (1.0 - X) / den;
        out[k] = {X, Y};
    }
    return out;
}

// ----------------------------------------------------------------- monodromy

SolutionSet monodromy_solve(const LikelihoodSystem& sys, long long target_count,
                            const TrackerConfig& cfg) {
    Tracker tr(sys, cfg);
    SolutionSet set;
    set.model = sys.model;
    set.target = target_count;
    set.seed = cfg.seed;

    // seed pairs: random point, then parameters from the kernel of the
    // equation matrix at that point (the system is linear in s)
    auto seed_pair = [&](CxVec& x0, CxVec& s0) -> bool {
        for (int attempt = 0; attempt < 50; ++attempt) {
            x0 = tr.rand_vec(sys.nvars);
            const int m = sys.m();
            std::vector<CxVec> rows(sys.nvars, CxVec(m));
            bool bad = false;
            for (int i = 0; i < m && !bad; ++i) {
                Cx fv = sys.factors[i](x0);
                if (std::abs(fv) < 1e-8) bad = true;
                else
                    for (int j = 0; j < sys.nvars; ++j)
                        rows[j][i] = sys.dfirst[i * sys.nvars + j](x0) / fv;
            }
            if (bad) continue;
            CxVec r = tr.rand_vec(m);
            CxVec ar(sys.nvars, 0.0);
            for (int j = 0; j < sys.nvars; ++j)
                for (int i = 0; i < m; ++i) ar[j] += rows[j][i] * r[i];
            CxMat gram(sys.nvars, CxVec(sys.nvars, 0.0));
            for (int j = 0; j < sys.nvars; ++j)
                for (int k = 0; k < sys.nvars; ++k)
                    for (int i = 0; i < m; ++i)
                        gram[j][k] += rows[j][i] * rows[k][i];
            CxVec w;
            if (!lin_solve(gram, ar, w)) continue;
            s0 = r;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < sys.nvars; ++j) s0[i] -= rows[j][i] * w[j];
            if (res_norm(sys.eval_equations(x0, s0)) < 1e-8) return true;
        }
        return false;
    };

    CxVec x0, s0;
    if (!seed_pair(x0, s0))
        throw std::runtime_error("failed to seed the monodromy run");

    // work over a real generic base: solutions then pair up under complex
    // conjugation, so every discovery yields a second point for free
    CxVec base(sys.m());
    {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (Cx& c : base) c = Cx(u(tr.rng), 0.0);
    }
    set.params = base;

    std::vector<Solution> pool;
    auto insert_with_conj = [&](const CxVec& pt) {
        Solution cand = tr.certify(pt, base);
        if (!cand.certified) return false;
        bool fresh = pool_insert(pool, cand, cfg.dedup_radius);
        CxVec conj(pt.size());
        for (size_t j = 0; j < pt.size(); ++j) conj[j] = std::conj(cand.point[j]);
        Solution mate = tr.certify(conj, base);
        if (mate.certified && pool_insert(pool, mate, cfg.dedup_radius))
            fresh = true;
        return fresh;
    };

    {
        CxVec w = tr.rand_vec(sys.m());
        auto a = tr.segment(x0, s0, w);
        auto b = a ? tr.segment(*a, w, base) : std::nullopt;
        if (!b || !insert_with_conj(*b))
            throw std::runtime_error("failed to carry the seed to the base parameters");
    }
    s0 = base;

    int stale = 0;
    while (static_cast<long long>(pool.size()) < target_count &&
           stale < cfg.stale_loop_budget) {
        ++set.loops_used;
        CxVec w1 = tr.rand_vec(sys.m()), w2 = tr.rand_vec(sys.m());
        bool progress = false;
        std::vector<Solution> snapshot = pool;
        for (const auto& sol : snapshot) {
            auto a = tr.segment(sol.point, s0, w1);
            if (!a) continue;
            auto b = tr.segment(*a, w1, w2);
            if (!b) continue;
            auto c = tr.segment(*b, w2, s0);
            if (!c) continue;
            if (insert_with_conj(*c)) progress = true;
            if (static_cast<long long>(pool.size()) >= target_count) break;
        }
        // a fresh start: independent seed pairs land on random sheets, so
        // carrying them over to the base parameters diversifies the pool
        // beyond what the loops alone reach
        if (static_cast<long long>(pool.size()) < target_count) {
            CxVec x1, s1;
            if (seed_pair(x1, s1)) {
                CxVec w3 = tr.rand_vec(sys.m());
                auto a = tr.segment(x1, s1, w3);
                auto b = a ? tr.segment(*a, w3, s0) : std::nullopt;
                if (b && insert_with_conj(*b)) progress = true;
            }
        }
        // raw Newton from scattered starts picks up stragglers whose
        // homotopy paths keep running close to the removed divisors
        if (static_cast<long long>(pool.size()) < target_count) {
            for (int burst = 0; burst < 10; ++burst) {
                for (double scale : {1.0, 10.0, 100.0}) {
                    CxVec x1 = tr.rand_vec(sys.nvars, scale);
                    auto res = tr.newton(x1, s0, 25);
                    if (res && *res < cfg.certify_residual &&
                        insert_with_conj(x1))
                        progress = true;
                }
            }
        }
        stale = progress ? 0 : stale + 1;
    }
    set.solutions = pool;
    if (static_cast<long long>(pool.size()) > target_count)
        throw std::runtime_error("more solutions than the expected count: dedup failure");
    return set;
}

SolutionSet transport(const LikelihoodSystem& sys, const SolutionSet& base,
                      const std::vector<Cx>& target_params,
                      const TrackerConfig& cfg) {
    Tracker tr(sys, cfg);
    SolutionSet out;
    out.model = base.model;
    out.target = base.target;
    out.seed = cfg.seed;
    out.params = target_params;
    // all start points of one attempt must share the same parameter path:
    // distinct paths induce distinct sheet permutations, and mixing them
    // can land two starts on the same endpoint
    for (int attempt = 0;
         attempt < 5 &&
         static_cast<long long>(out.solutions.size()) <
             static_cast<long long>(base.solutions.size());
         ++attempt) {
        CxVec mid = tr.rand_vec(sys.m());
        for (const auto& sol : base.solutions) {
            auto a = tr.segment(sol.point, base.params, mid);
            if (!a) continue;
            auto b = tr.segment(*a, mid, target_params);
            if (!b) continue;
            Solution cand = tr.certify(*b, target_params);
            if (cand.certified)
                pool_insert(out.solutions, cand, cfg.dedup_radius);
        }
    }
    return out;
}

// ------------------------------------------------------------------ amplitude

Cx cegm_sum(const LikelihoodSystem& sys, const SolutionSet& set) {
    std::vector<const SPoly*> num, den;
    if (sys.model == "m05") {
        // integrand 1/(x (x-y) (1-y))
    } else if (sys.model == "y36") {
        auto find = [&](const std::string& lab) -> const SPoly& {
            for (int i = 0; i < sys.m(); ++i)
                if (sys.labels[i] == lab) return sys.factors[i];
            throw std::runtime_error("missing factor " + lab);
        };
        num.push_back(&find("p135"));
        den = {&find("p123"), &find("p345"), &find("p156"), &find("q")};
    } else {
        throw std::runtime_error("no integrand wired for model " + sys.model);
    }
    Cx total = 0.0;
    for (const auto& sol : set.solutions) {
        auto h = sys.hessian(sol.point, set.params);
        Cx hdet = det_cx(h);
        double bound = 1.0;  // Hadamard row bound, the natural scale of det
        for (const auto& row : h) {
            double r2 = 0.0;
            for (const Cx& c : row) r2 += std::norm(c);
            bound *= std::sqrt(r2);
        }
        if (std::abs(hdet) < 1e-10 * bound)
            throw std::runtime_error("near-singular Hessian in the amplitude sum");
        Cx integrand;
        if (sys.model == "m05") {
            Cx x = sol.point[0], y = sol.point[1];
            integrand = 1.0 / (x * (x - y) * (1.0 - y));
        } else {
            integrand = (*num[0])(sol.point);
            for (const SPoly* f : den) integrand /= (*f)(sol.point);
        }
        total += integrand * integrand / hdet;
    }
    return total;
}

std::vector<MlReportRow> ml_degree_report(unsigned long long seed, bool slow) {
    std::vector<std::string> models = {"m05", "s5o", "s6o", "s6o-eckardt", "y36"};
    if (slow) {
        models.push_back("y37");
        models.push_back("ae6");
    }
    std::vector<MlReportRow> table;
    for (const auto& name : models) {
        LikelihoodSystem sys = likelihood_system(name);
        TrackerConfig cfg;
        cfg.seed = seed + table.size();
        SolutionSet set = monodromy_solve(sys, ml_target(name), cfg);
        MlReportRow row;
        row.model = name;
        row.target = ml_target(name);
        row.found = static_cast<long long>(set.solutions.size());
        row.certified = 0;
        for (const auto& s : set.solutions) row.certified += s.certified ? 1 : 0;
        row.loops_used = set.loops_used;
        row.seed = cfg.seed;
        table.push_back(row);
    }
    return table;
}

}  // namespace pezzo
