#pragma once

/*
 * Shared arithmetic typedefs and small exact-linear-algebra helpers.
 *
 * Everything combinatorial in this project runs on exact arithmetic:
 * arbitrary-precision integers and rationals backed by GMP.  Floating
 * point appears only in the numerical solver (see scatter.hpp).
 */

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pezzo {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

// Rank of a rational matrix by straightforward fraction-free Gaussian
// elimination.  Sizes here top out around 2000 columns, which is fine.
inline int rank_exact(RatMatrix m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t piv = pr;
        while (piv < rows && m[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        for (size_t r = pr + 1; r < rows; ++r) {
            if (m[r][pc] == 0) continue;
            Rat f = m[r][pc] / m[pr][pc];
            for (size_t c = pc; c < cols; ++c) m[r][c] -= f * m[pr][c];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

// Rank of an integer matrix reduced modulo a prime p.  Used as a fast
// cross-check next to the exact rank; agreement at several large primes
// is the torsion evidence the homology certificate reports.
inline int rank_mod_p(const IntMatrix& m, int64_t p) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<int64_t>> a(rows, std::vector<int64_t>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            Int v = m[r][c] % p;
            if (v < 0) v += p;
            a[r][c] = static_cast<int64_t>(v);
        }
    auto inv_mod = [p](int64_t x) {
        // Fermat: p is prime
        int64_t e = p - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return acc;
    };
    int rank = 0;
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t piv = pr;
        while (piv < rows && a[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[pr], a[piv]);
        int64_t ipv = inv_mod(a[pr][pc]);
        for (size_t r = pr + 1; r < rows; ++r) {
            if (a[r][pc] == 0) continue;
            int64_t f = a[r][pc] * ipv % p;
            for (size_t c = pc; c < cols; ++c)
                a[r][c] = ((a[r][c] - f * a[pr][c]) % p + p) % p;
        }
        ++pr;
        ++rank;
    }
    return rank;
}

// 3x3 determinant of rational column triples, the workhorse for Pluecker
// coordinates p_ijk of a 3xn configuration matrix.
inline Rat det3(const RatMatrix& m, int i, int j, int k) {
    return m[0][i] * (m[1][j] * m[2][k] - m[2][j] * m[1][k])
         - m[1][i] * (m[0][j] * m[2][k] - m[2][j] * m[0][k])
         + m[2][i] * (m[0][j] * m[1][k] - m[1][j] * m[0][k]);
}

}  // namespace pezzo
