/**
 * Binomial coefficients and the Kruskal-Katona / Macaulay machinery:
 * cascade expansions, lower shadows, M-sequence tests.
 */

#ifndef SHIFTLAB_BINOMIAL_HPP
#define SHIFTLAB_BINOMIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shiftlab {

/// C(n, k) with 64-bit overflow guard; plenty for desk-scale inputs.
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        if (r < 0)
            throw std::overflow_error("binomial overflow");
        r /= i;
    }
    return r;
}

/**
 * Cascade expansion of m >= 1 with respect to k >= 1:
 *   m = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_i, i)
 * with n_k > n_{k-1} > ... > n_i >= i >= 1.  Returns pairs (n_j, j),
 * j descending from k.
 */
inline std::vector<std::pair<std::int64_t, std::int64_t>>
cascade_expansion(std::int64_t m, std::int64_t k)
{
    if (m < 1 || k < 1)
        throw std::invalid_argument("cascade_expansion: need m >= 1, k >= 1");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t rest = m;
    std::int64_t j = k;
    while (rest > 0) {
        if (j < 1)
            throw std::logic_error("cascade_expansion: ran out of indices");
        // largest n_j with C(n_j, j) <= rest
        std::int64_t nj = j - 1;
        while (binomial(nj + 1, j) <= rest)
            ++nj;
        out.emplace_back(nj, j);
        rest -= binomial(nj, j);
        --j;
    }
    return out;
}

/**
 * Kruskal-Katona lower shadow bound.  For a family of m faces of size k+1,
 * at least this many faces of size k are forced.  Expands m with respect to
 * k+1 and replaces each C(n_j, j) by C(n_j, j-1).
 */
inline std::int64_t kk_lower_shadow(std::int64_t m, std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("kk_lower_shadow: need k >= 1");
    if (m < 0)
        throw std::invalid_argument("kk_lower_shadow: need m >= 0");
    if (m == 0)
        return 0;
    std::int64_t out = 0;
    for (auto [nj, j] : cascade_expansion(m, k + 1))
        out += binomial(nj, j - 1);
    return out;
}

/**
 * Macaulay lower bound for multicomplexes.  For m monomials of degree k+1,
 * at least this many monomials of degree k are forced.  Expands m with
 * respect to k+1 and replaces each C(n_j, j) by C(n_j - 1, j - 1).
 */
inline std::int64_t macaulay_lower(std::int64_t m, std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("macaulay_lower: need k >= 1");
    if (m < 0)
        throw std::invalid_argument("macaulay_lower: need m >= 0");
    if (m == 0)
        return 0;
    std::int64_t out = 0;
    for (auto [nj, j] : cascade_expansion(m, k + 1))
        out += binomial(nj - 1, j - 1);
    return out;
}

/**
 * Macaulay's characterization of Hilbert functions of standard graded
 * algebras: seq = (h_0, h_1, ...) is an M-sequence iff h_0 = 1, entries are
 * nonnegative, and the count of degree-(k+1) monomials forces at least
 * macaulay_lower(h_{k+1}, k) monomials of degree k, all of which must fit
 * in h_k.
 */
inline bool is_m_sequence(const std::vector<std::int64_t>& seq)
{
    if (seq.empty() || seq[0] != 1)
        return false;
    for (std::int64_t v : seq)
        if (v < 0)
            return false;
    for (std::size_t k = 1; k + 1 < seq.size() + 0u; ++k)
        if (macaulay_lower(seq[k + 1], static_cast<std::int64_t>(k)) > seq[k])
            return false;
    return true;
}

/**
 * Kruskal-Katona test on an f-vector (f_{-1}, f_0, f_1, ...): f_{-1} = 1
 * and each level's shadow bound holds.
 */
inline bool satisfies_kk(const std::vector<std::int64_t>& f)
{
    if (f.empty() || f[0] != 1)
        return false;
    for (std::int64_t v : f)
        if (v < 0)
            return false;
    // f[i] = f_{i-1} counts faces of size i; shadow of size-(k+1) faces
    // into size-k faces for k >= 1.
    for (std::size_t i = 2; i < f.size(); ++i) {
        std::int64_t k = static_cast<std::int64_t>(i) - 1; // faces of size k+1
        if (kk_lower_shadow(f[i], k) > f[i - 1])
            return false;
    }
    return true;
}

} // namespace shiftlab

#endif
