/**
 * Simplicial chain complexes over a prime field: reduced Betti vectors,
 * the combinatorial Betti formula for shifted complexes, and Reisner-style
 * Cohen-Macaulay / doubly-Cohen-Macaulay tests.
 */

#ifndef SHIFTLAB_HOMOLOGY_HPP
#define SHIFTLAB_HOMOLOGY_HPP

#include <vector>

#include "complex.hpp"
#include "fp.hpp"

namespace shiftlab {

struct BettiVector {
    std::int64_t beta_minus1 = 0;      ///< 1 only for the complex {∅}
    std::vector<std::int64_t> beta;    ///< (β̃_0, ..., β̃_dim)

    bool operator==(const BettiVector& o) const
    {
        return beta_minus1 == o.beta_minus1 && beta == o.beta;
    }
};

/**
 * Boundary matrices of K over F_p, augmentation included:
 * boundary[k] maps chains on size-(k+1) faces to chains on size-k faces,
 * for k = 0..dim, with ∂(T) = Σ_t (-1)^{|{s<t}|} (T \ t).
 */
struct ChainComplexFp {
    PrimeField F;
    std::vector<std::vector<Face>> bases; ///< bases[k] = faces of size k
    std::vector<FpMatrix> boundary;       ///< boundary[k]: size k+1 → size k

    explicit ChainComplexFp(const SimplicialComplex& K, std::uint64_t p) : F(p)
    {
        for (int k = 0; k <= K.dim() + 1; ++k)
            bases.push_back(K.faces_of_size(k));
        for (int k = 0; k + 1 <= K.dim() + 1; ++k) {
            const auto& src = bases[static_cast<std::size_t>(k + 1)];
            const auto& dst = bases[static_cast<std::size_t>(k)];
            FpMatrix M(F, dst.size(), src.size());
            for (std::size_t c = 0; c < src.size(); ++c) {
                const Face& T = src[c];
                int before = 0;
                for (std::size_t ti = 0; ti < T.size(); ++ti) {
                    Face sub;
                    for (std::size_t j = 0; j < T.size(); ++j)
                        if (j != ti)
                            sub.push_back(T[j]);
                    auto it = std::lower_bound(dst.begin(), dst.end(), sub);
                    std::size_t r = static_cast<std::size_t>(it - dst.begin());
                    M.at(r, c) = (before % 2 == 0) ? 1 : F.neg(1);
                    ++before;
                }
            }
            boundary.push_back(std::move(M));
        }
    }
};

/// Reduced Betti numbers over F_p.
inline BettiVector betti(const SimplicialComplex& K, std::uint64_t p)
{
    ChainComplexFp C(K, p);
    BettiVector out;
    int dim = K.dim();
    if (dim < 0) {
        out.beta_minus1 = 1; // the complex {∅}
        return out;
    }
    std::vector<std::size_t> ranks; // rank of ∂_k for k = 0..dim
    for (const auto& M : C.boundary)
        ranks.push_back(rank(M));
    for (int i = 0; i <= dim; ++i) {
        std::size_t chains = C.bases[static_cast<std::size_t>(i + 1)].size();
        std::size_t rank_down = ranks[static_cast<std::size_t>(i)];
        std::size_t rank_up = (i + 1 <= dim) ? ranks[static_cast<std::size_t>(i + 1)] : 0;
        out.beta.push_back(static_cast<std::int64_t>(chains - rank_down - rank_up));
    }
    return out;
}

/// Combinatorial Betti numbers of a shifted complex:
/// β_i = |{S ∈ Δ_i : S ∪ {1} ∉ Δ}|.
inline BettiVector shifted_betti(const SimplicialComplex& Delta)
{
    if (!is_shifted(Delta))
        throw NotShifted("shifted_betti: complex is not shifted");
    BettiVector out;
    if (Delta.dim() < 0) {
        out.beta_minus1 = 1;
        return out;
    }
    for (int i = 0; i <= Delta.dim(); ++i) {
        std::int64_t count = 0;
        for (const auto& S : Delta.faces_of_size(i + 1)) {
            if (S[0] == 1)
                continue; // S ∪ {1} = S ∈ Δ
            if (!Delta.has_face(face_union(S, Face{1})))
                ++count;
        }
        out.beta.push_back(count);
    }
    return out;
}

/// Reisner criterion: K pure and every link (including lk(∅) = K) has
/// vanishing reduced homology below its dimension.
inline bool is_cohen_macaulay(const SimplicialComplex& K, std::uint64_t p)
{
    if (K.dim() < 0)
        return true;
    for (const auto& f : K.facets())
        if (static_cast<int>(f.size()) != K.dim() + 1)
            return false;
    for (int k = 0; k <= K.dim() + 1; ++k)
        for (const auto& T : K.faces_of_size(k)) {
            SimplicialComplex lk = link(K, T);
            if (lk.dim() <= 0)
                continue;
            BettiVector b = betti(lk, p);
            for (int i = 0; i < lk.dim(); ++i)
                if (b.beta[static_cast<std::size_t>(i)] != 0)
                    return false;
        }
    return true;
}

/// 2-CM: CM and every vertex deletion is CM of the same dimension.
inline bool is_2cm(const SimplicialComplex& K, std::uint64_t p)
{
    if (!is_cohen_macaulay(K, p))
        return false;
    for (Vertex v : K.vertices()) {
        SimplicialComplex del = antistar(K, {v});
        if (del.dim() != K.dim() || !is_cohen_macaulay(del, p))
            return false;
    }
    return true;
}

/// Euler characteristic (reduced): Σ (-1)^i β̃_i = -f_{-1} + Σ (-1)^i f_i.
inline std::int64_t reduced_euler(const BettiVector& b)
{
    std::int64_t chi = -b.beta_minus1;
    for (std::size_t i = 0; i < b.beta.size(); ++i)
        chi += (i % 2 == 0) ? b.beta[i] : -b.beta[i];
    return chi;
}

} // namespace shiftlab

#endif
