/**
 * Smith normal form over the integers, with transform matrices, and exact
 * integer linear-system solving.  Entries are arbitrary-precision
 * (boost::multiprecision::cpp_int) so intermediate growth cannot overflow.
 */

#ifndef SHIFTLAB_SNF_HPP
#define SHIFTLAB_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

namespace shiftlab {

using bigint = boost::multiprecision::cpp_int;
using ZMatrix = std::vector<std::vector<bigint>>;

inline ZMatrix z_identity(std::size_t n)
{
    ZMatrix I(n, std::vector<bigint>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        I[i][i] = 1;
    return I;
}

inline ZMatrix z_mul(const ZMatrix& A, const ZMatrix& B)
{
    std::size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), k = B.size();
    ZMatrix C(n, std::vector<bigint>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (A[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

struct SmithResult {
    ZMatrix D; ///< diagonal form, d_i | d_{i+1}, d_i >= 0
    ZMatrix U; ///< unimodular row transform
    ZMatrix V; ///< unimodular column transform, U*M*V = D
    std::size_t rank = 0;

    std::vector<bigint> invariant_factors() const
    {
        std::vector<bigint> out;
        for (std::size_t i = 0; i < rank; ++i)
            out.push_back(D[i][i]);
        return out;
    }
};

/**
 * Smith normal form: returns D, U, V with U*M*V = D, D diagonal with
 * successive divisibility.  Pivoting picks the smallest nonzero magnitude
 * to limit coefficient growth.
 */
inline SmithResult smith_normal_form(const ZMatrix& M)
{
    std::size_t n = M.size();
    std::size_t m = n ? M[0].size() : 0;
    SmithResult res;
    res.D = M;
    res.U = z_identity(n);
    res.V = z_identity(m);
    ZMatrix& D = res.D;
    ZMatrix& U = res.U;
    ZMatrix& V = res.V;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i)
            std::swap(D[i][a], D[i][b]);
        for (std::size_t i = 0; i < m; ++i)
            std::swap(V[i][a], V[i][b]);
    };
    auto addmul_row = [&](std::size_t dst, std::size_t src, const bigint& f) {
        for (std::size_t j = 0; j < m; ++j)
            D[dst][j] += f * D[src][j];
        for (std::size_t j = 0; j < n; ++j)
            U[dst][j] += f * U[src][j];
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const bigint& f) {
        for (std::size_t i = 0; i < n; ++i)
            D[i][dst] += f * D[i][src];
        for (std::size_t i = 0; i < m; ++i)
            V[i][dst] += f * V[i][src];
    };
    auto negate_row = [&](std::size_t r) {
        for (auto& x : D[r])
            x = -x;
        for (auto& x : U[r])
            x = -x;
    };

    std::size_t t = 0;
    while (t < n && t < m) {
        // locate smallest nonzero entry in the trailing block
        std::size_t pi = t, pj = t;
        bigint best = 0;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j) {
                if (D[i][j] == 0)
                    continue;
                bigint a = abs(D[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0)
            break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (D[i][t] == 0)
                continue;
            bigint q = D[i][t] / D[t][t];
            if (q != 0)
                addmul_row(i, t, -q);
            if (D[i][t] != 0)
                clean = false;
        }
        for (std::size_t j = t + 1; j < m; ++j) {
            if (D[t][j] == 0)
                continue;
            bigint q = D[t][j] / D[t][t];
            if (q != 0)
                addmul_col(j, t, -q);
            if (D[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue; // re-pivot on the now-smaller remainder
        // enforce divisibility of the trailing block by D[t][t]
        bool redo = false;
        for (std::size_t i = t + 1; i < n && !redo; ++i)
            for (std::size_t j = t + 1; j < m && !redo; ++j)
                if (D[i][j] % D[t][t] != 0) {
                    addmul_row(t, i, 1);
                    redo = true;
                }
        if (redo)
            continue;
        if (D[t][t] < 0)
            negate_row(t);
        ++t;
    }
    res.rank = t;
    return res;
}

/// One integer solution of M x = b, if any, via SNF.
inline std::optional<std::vector<bigint>> solve_integer(const ZMatrix& M,
                                                        const std::vector<bigint>& b)
{
    std::size_t n = M.size();
    std::size_t m = n ? M[0].size() : 0;
    if (b.size() != n)
        throw std::invalid_argument("solve_integer: dimension mismatch");
    SmithResult s = smith_normal_form(M);
    // D y = U b, x = V y
    std::vector<bigint> ub(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (s.U[i][j] != 0)
                ub[i] += s.U[i][j] * b[j];
    std::vector<bigint> y(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bigint d = (i < s.rank) ? s.D[i][i] : 0;
        if (d == 0) {
            if (ub[i] != 0)
                return std::nullopt;
        } else {
            if (ub[i] % d != 0)
                return std::nullopt;
            if (i < m)
                y[i] = ub[i] / d;
        }
    }
    std::vector<bigint> x(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (s.V[i][j] != 0)
                x[i] += s.V[i][j] * y[j];
    return x;
}

} // namespace shiftlab

#endif
