#pragma once

/*
 * Permutations on a fixed point set plus a deterministic Schreier-Sims
 * stabilizer chain.  Degrees stay small here (at most 126 points, the
 * signed roots of E7), so the implementation favors clarity: incremental
 * sifting with a cascade closure, no randomization.
 */

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace pezzo {

struct Perm {
    std::vector<int> img;  // img[x] is the image of point x

    Perm() = default;
    explicit Perm(int n) : img(n) {
        for (int i = 0; i < n; ++i) img[i] = i;
    }
    explicit Perm(std::vector<int> v) : img(std::move(v)) {}

    int degree() const { return static_cast<int>(img.size()); }
    int operator[](int x) const { return img[x]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    int first_moved() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return i;
        return -1;
    }

    Perm inverse() const {
        Perm r(degree());
        for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
        return r;
    }

    bool operator==(const Perm& o) const { return img == o.img; }
};

// (a * b)(x) = a(b(x)): b acts first.
inline Perm operator*(const Perm& a, const Perm& b) {
    Perm r(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img[i] = a.img[b.img[i]];
    return r;
}

// Deterministic incremental Schreier-Sims.  The generator list of level i
// holds every strong generator fixing base[0..i-1]; new residues found by
// sifting are installed on all the levels they belong to, and a global
// closure loop re-processes Schreier generators (memoized per level) until
// nothing changes.
class StabilizerChain {
public:
    explicit StabilizerChain(int degree) : degree_(degree) {}

    StabilizerChain(int degree, const std::vector<Perm>& generators)
        : degree_(degree) {
        for (const auto& g : generators) add_generator(g);
    }

    void add_generator(const Perm& g) {
        if (sift_install(g, 0)) close_all();
    }

    uint64_t order() const {
        uint64_t n = 1;
        for (const auto& lv : levels_) n *= lv.transversal.size();
        return n;
    }

    bool contains(Perm g) const {
        for (const auto& lv : levels_) {
            auto it = lv.transversal.find(g[lv.base]);
            if (it == lv.transversal.end()) return false;
            g = it->second.inverse() * g;
        }
        return g.is_identity();
    }

    size_t base_length() const { return levels_.size(); }

private:
    struct Level {
        int base = -1;
        std::vector<Perm> gens;
        std::unordered_map<int, Perm> transversal;  // point -> u with u(base) = point
        // (point, generator index) pairs whose Schreier element was processed
        std::unordered_map<int64_t, bool> done;
    };

    int degree_;
    std::vector<Level> levels_;

    // Sift g starting at `from`; a non-trivial residue h failing at level m
    // fixes base[from..m-1], so it joins the generator lists of levels
    // from..m.  Returns true when the group grew.
    bool sift_install(Perm g, size_t from) {
        for (size_t i = from; ; ++i) {
            if (g.is_identity()) return false;
            if (i == levels_.size()) {
                Level lv;
                lv.base = g.first_moved();
                lv.transversal.emplace(lv.base, Perm(degree_));
                levels_.push_back(std::move(lv));
            }
            auto it = levels_[i].transversal.find(g[levels_[i].base]);
            if (it == levels_[i].transversal.end()) {
                for (size_t j = from; j <= i; ++j) levels_[j].gens.push_back(g);
                return true;
            }
            g = it->second.inverse() * g;
        }
    }

    void close_all() {
        bool any = true;
        while (any) {
            any = false;
            for (size_t i = 0; i < levels_.size(); ++i)
                if (close_one(i)) any = true;
        }
    }

    // Extends the orbit at level i and cascades unprocessed Schreier
    // generators into the deeper levels.  Returns true on any change.
    bool close_one(size_t i) {
        bool changed = false;
        Level& lv = levels_[i];
        std::vector<int> pts;
        pts.reserve(lv.transversal.size());
        for (const auto& [p, u] : lv.transversal) pts.push_back(p);
        for (size_t f = 0; f < pts.size(); ++f) {
            int p = pts[f];
            for (const auto& s : lv.gens) {
                int q = s[p];
                if (!lv.transversal.count(q)) {
                    lv.transversal.emplace(q, s * lv.transversal.at(p));
                    pts.push_back(q);
                    changed = true;
                }
            }
        }
        for (size_t f = 0; f < pts.size(); ++f) {
            int p = pts[f];
            for (size_t si = 0; si < levels_[i].gens.size(); ++si) {
                int64_t key = (static_cast<int64_t>(p) << 32) | static_cast<int64_t>(si);
                if (levels_[i].done.count(key)) continue;
                levels_[i].done[key] = true;
                const Perm& s = levels_[i].gens[si];
                Perm schreier = levels_[i].transversal.at(s[p]).inverse() *
                                (s * levels_[i].transversal.at(p));
                if (sift_install(std::move(schreier), i + 1)) changed = true;
            }
        }
        return changed;
    }
};

}  // namespace pezzo
