/**
 * Embedding obstructions: deleted joins with Z₂ Smith characteristic
 * classes, deleted products with the explicit integer Van Kampen cocycle,
 * and the chain maps induced by admissible contractions.
 */

#ifndef SHIFTLAB_OBSTRUCTION_HPP
#define SHIFTLAB_OBSTRUCTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "minors.hpp"
#include "snf.hpp"

namespace shiftlab {

// ---------------------------------------------------------------------------
// deleted join
// ---------------------------------------------------------------------------

/// A face S¹ ⊎ T² of the deleted join, stored as the ordered pair (S, T).
using JoinFace = std::pair<Face, Face>;

inline JoinFace join_tau(const JoinFace& f)
{
    return {f.second, f.first};
}

/// Orbit representative: the (size, then lex) smaller of (S,T), (T,S).
inline JoinFace join_rep(const JoinFace& f)
{
    FaceLess less;
    if (less(f.second, f.first))
        return join_tau(f);
    if (!less(f.first, f.second) && f.second < f.first)
        return join_tau(f);
    return f;
}

struct DeletedJoin {
    explicit DeletedJoin(const SimplicialComplex& K)
    {
        auto faces = K.all_faces();
        int maxsize = 0;
        for (const auto& S : faces)
            for (const auto& T : faces) {
                if (!faces_disjoint(S, T))
                    continue;
                int size = static_cast<int>(S.size() + T.size());
                maxsize = std::max(maxsize, size);
                if (static_cast<int>(by_size.size()) <= size)
                    by_size.resize(static_cast<std::size_t>(size) + 1);
                by_size[static_cast<std::size_t>(size)].push_back({S, T});
            }
        for (auto& level : by_size)
            std::sort(level.begin(), level.end());
        dim = maxsize - 1;
    }

    /// Faces of the given total size (dimension size-1), sorted.
    const std::vector<JoinFace>& faces_of_size(int s) const
    {
        static const std::vector<JoinFace> kEmpty;
        if (s < 0 || s >= static_cast<int>(by_size.size()))
            return kEmpty;
        return by_size[static_cast<std::size_t>(s)];
    }

    /// Involution freeness: only the empty face is fixed.
    bool involution_free() const
    {
        for (const auto& level : by_size)
            for (const auto& f : level)
                if (!f.first.empty() || !f.second.empty())
                    if (join_tau(f) == f)
                        return false;
        return true;
    }

    int dim = -1;
    std::vector<std::vector<JoinFace>> by_size;
};

/// Codimension-one subfaces of a deleted-join face.
inline std::vector<JoinFace> join_subfaces(const JoinFace& f)
{
    std::vector<JoinFace> out;
    for (Vertex v : f.first)
        out.push_back({face_without(f.first, v), f.second});
    for (Vertex v : f.second)
        out.push_back({f.first, face_without(f.second, v)});
    return out;
}

struct SmithClassResult {
    bool vanishes = false;
    bool dimension_exhausted = false; ///< m > dim(K_*) + 1: class trivially zero
    bool cocycle_nonzero = false;     ///< final iterate z ≠ 0 as a cochain
    /// final symmetric cocycle z, one F₂ coefficient per orbit of m-faces
    std::vector<std::pair<JoinFace, std::uint8_t>> cocycle;
    /// certificate x with δx = z (per orbit of (m-1)-faces) when vanishes
    std::vector<std::pair<JoinFace, std::uint8_t>> certificate;
};

namespace detail {

/// z ← δ(lift of z) iterated on the deleted join, over F₂.
inline std::map<JoinFace, std::uint8_t>
smith_iterate(const DeletedJoin& DJ, int m)
{
    std::map<JoinFace, std::uint8_t> z;
    for (const auto& f : DJ.faces_of_size(1))
        z[f] = 1; // fundamental 0-cocycle
    for (int q = 0; q < m; ++q) {
        // lift u: keep z on orbit representatives only, then z' = δu
        std::map<JoinFace, std::uint8_t> z2;
        for (const auto& f : DJ.faces_of_size(q + 2)) {
            std::uint8_t s = 0;
            for (const auto& g : join_subfaces(f)) {
                auto it = z.find(g);
                if (it != z.end() && it->second && join_rep(g) == g)
                    s ^= 1;
            }
            if (s)
                z2[f] = 1;
        }
        z = std::move(z2);
    }
    return z;
}

} // namespace detail

/**
 * m-th Smith characteristic class of the deleted join: iterate the
 * connecting homomorphism m times from the fundamental symmetric
 * 0-cocycle, then test whether the resulting symmetric m-cocycle is the
 * coboundary of a symmetric (m-1)-cochain over F₂.
 */
inline SmithClassResult smith_class(const SimplicialComplex& K, int m)
{
    if (m < 1)
        throw BadParameters("smith_class: m >= 1 required");
    DeletedJoin DJ(K);
    SmithClassResult out;
    if (m > DJ.dim + 1) {
        out.dimension_exhausted = true;
        out.vanishes = true;
        return out;
    }
    auto z = detail::smith_iterate(DJ, m);
    for (const auto& f : DJ.faces_of_size(m + 1))
        if (join_rep(f) == f) {
            auto it = z.find(f);
            out.cocycle.emplace_back(f, it != z.end() ? it->second : 0);
        }
    for (const auto& [f, v] : out.cocycle)
        if (v)
            out.cocycle_nonzero = true;

    // solve δx = z with x symmetric, in orbit coordinates of (m-1)-faces
    std::vector<JoinFace> orbits;
    for (const auto& f : DJ.faces_of_size(m))
        if (join_rep(f) == f)
            orbits.push_back(f);
    std::map<JoinFace, std::size_t> oidx;
    for (std::size_t i = 0; i < orbits.size(); ++i)
        oidx[orbits[i]] = i;
    // F₂ elimination on [rows | rhs]
    std::vector<std::vector<std::uint8_t>> rows;
    for (const auto& f : DJ.faces_of_size(m + 1)) {
        std::vector<std::uint8_t> row(orbits.size() + 1, 0);
        for (const auto& g : join_subfaces(f))
            row[oidx[join_rep(g)]] ^= 1;
        auto it = z.find(f);
        row.back() = (it != z.end()) ? it->second : 0;
        rows.push_back(std::move(row));
    }
    std::size_t ncols = orbits.size();
    std::size_t pr = 0;
    std::vector<std::size_t> pivcols;
    for (std::size_t c = 0; c < ncols && pr < rows.size(); ++c) {
        std::size_t piv = pr;
        while (piv < rows.size() && !rows[piv][c])
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[pr]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != pr && rows[r][c])
                for (std::size_t j = 0; j <= ncols; ++j)
                    rows[r][j] ^= rows[pr][j];
        pivcols.push_back(c);
        ++pr;
    }
    bool solvable = true;
    for (std::size_t r = pr; r < rows.size(); ++r)
        if (rows[r][ncols])
            solvable = false;
    out.vanishes = solvable;
    if (solvable) {
        std::vector<std::uint8_t> x(ncols, 0);
        for (std::size_t i = 0; i < pivcols.size(); ++i)
            x[pivcols[i]] = rows[i][ncols];
        for (std::size_t i = 0; i < orbits.size(); ++i)
            out.certificate.emplace_back(orbits[i], x[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// deleted product
// ---------------------------------------------------------------------------

/// A cell S × T with S, T nonempty disjoint faces; dim = |S| + |T| - 2.
using Cell = std::pair<Face, Face>;

inline Cell cell_tau(const Cell& c)
{
    return {c.second, c.first};
}

/// Sign picked up by the involution: (-1)^{dim S · dim T}.
inline int cell_tau_sign(const Cell& c)
{
    int ds = static_cast<int>(c.first.size()) - 1;
    int dt = static_cast<int>(c.second.size()) - 1;
    return (ds * dt) % 2 == 0 ? 1 : -1;
}

inline Cell cell_rep(const Cell& c)
{
    Cell t = cell_tau(c);
    return c <= t ? c : t;
}

struct DeletedProductComplex {
    explicit DeletedProductComplex(const SimplicialComplex& K)
    {
        auto faces = K.all_faces();
        for (const auto& S : faces) {
            if (S.empty())
                continue;
            for (const auto& T : faces) {
                if (T.empty() || !faces_disjoint(S, T))
                    continue;
                int d = static_cast<int>(S.size() + T.size()) - 2;
                if (static_cast<int>(by_dim.size()) <= d)
                    by_dim.resize(static_cast<std::size_t>(d) + 1);
                by_dim[static_cast<std::size_t>(d)].push_back({S, T});
                dim = std::max(dim, d);
            }
        }
        for (auto& level : by_dim)
            std::sort(level.begin(), level.end());
    }

    const std::vector<Cell>& cells_of_dim(int d) const
    {
        static const std::vector<Cell> kEmpty;
        if (d < 0 || d >= static_cast<int>(by_dim.size()))
            return kEmpty;
        return by_dim[static_cast<std::size_t>(d)];
    }

    int dim = -1;
    std::vector<std::vector<Cell>> by_dim;
};

/// ∂(S×T) = ∂S×T + (-1)^{dim S} S×∂T, cells with an empty side dropped.
inline std::vector<std::pair<Cell, int>> cell_boundary(const Cell& c)
{
    std::vector<std::pair<Cell, int>> out;
    const Face& S = c.first;
    const Face& T = c.second;
    if (S.size() > 1) {
        int sign = 1;
        for (Vertex v : S) {
            out.push_back({{face_without(S, v), T}, sign});
            sign = -sign;
        }
    }
    if (T.size() > 1) {
        int lead = (static_cast<int>(S.size()) - 1) % 2 == 0 ? 1 : -1;
        int sign = lead;
        for (Vertex v : T) {
            out.push_back({{S, face_without(T, v)}, sign});
            sign = -sign;
        }
    }
    return out;
}

/// Integer equivariant cochain on the m-cells of the deleted product.
struct VanKampenCochain {
    int m = 0;
    bool symmetric = true; ///< symmetric for even m, antisymmetric for odd
    std::map<Cell, long long> values;

    long long value(const Cell& c) const
    {
        auto it = values.find(c);
        return it == values.end() ? 0 : it->second;
    }
};

namespace detail {

/// Strict alternation s_0 < t_0 < s_1 < ... with equal sizes.
inline bool interleaves_s_first(const Face& S, const Face& T)
{
    if (S.size() != T.size())
        return false;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (!(S[i] < T[i]))
            return false;
        if (i + 1 < S.size() && !(T[i] < S[i + 1]))
            return false;
    }
    return true;
}

/// t_0 < s_0 < t_1 < ... < s_m < t_{m+1}: |T| = |S| + 1, T brackets S.
inline bool interleaves_t_around(const Face& S, const Face& T)
{
    if (T.size() != S.size() + 1)
        return false;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (!(T[i] < S[i]))
            return false;
        if (!(S[i] < T[i + 1]))
            return false;
    }
    return true;
}

} // namespace detail

/**
 * The explicit Van Kampen obstruction cochain o^m in the vertex order
 * 1 < 2 < ... < n.  For even m = 2k the interleaved pairs
 * s_0<t_0<...<s_k<t_k carry 1; for odd m = 2k+1 the bracketed pairs
 * t_0<s_0<...<s_k<t_{k+1} carry 1; the paired cell's value is forced by
 * the symmetry type.
 */
inline VanKampenCochain van_kampen_cocycle(const SimplicialComplex& K, int m)
{
    if (m < 1)
        throw BadParameters("van_kampen_cocycle: m >= 1 required");
    DeletedProductComplex DP(K);
    VanKampenCochain o;
    o.m = m;
    o.symmetric = (m % 2 == 0);
    int sym = o.symmetric ? 1 : -1;
    for (const auto& c : DP.cells_of_dim(m)) {
        bool direct = o.symmetric ? detail::interleaves_s_first(c.first, c.second)
                                  : detail::interleaves_t_around(c.second, c.first);
        if (direct)
            o.values[c] = 1;
    }
    // complete to the symmetry type: o(τc) = sym · tau_sign(c) · o(c)
    auto base = o.values;
    for (const auto& [c, v] : base) {
        Cell tc = cell_tau(c);
        long long want = sym * cell_tau_sign(c) * v;
        auto it = o.values.find(tc);
        if (it == o.values.end())
            o.values[tc] = want;
        else if (it->second != want)
            throw Disagreement("van_kampen_cocycle: inconsistent symmetry completion");
    }
    return o;
}

/**
 * Integral vanishing of o^m: is there a degree-(m-1) cochain x of the same
 * symmetry type with δx = o^m?  Solved by Smith normal form in orbit
 * coordinates.
 */
inline bool vk_vanishes_Z(const SimplicialComplex& K, int m)
{
    DeletedProductComplex DP(K);
    VanKampenCochain o = van_kampen_cocycle(K, m);
    int sym = o.symmetric ? 1 : -1;
    std::vector<Cell> reps;
    for (const auto& c : DP.cells_of_dim(m - 1))
        if (cell_rep(c) == c)
            reps.push_back(c);
    std::map<Cell, std::size_t> ridx;
    for (std::size_t i = 0; i < reps.size(); ++i)
        ridx[reps[i]] = i;
    ZMatrix rows;
    std::vector<bigint> rhs;
    for (const auto& c : DP.cells_of_dim(m)) {
        std::vector<bigint> row(reps.size(), 0);
        for (const auto& [g, cf] : cell_boundary(c)) {
            Cell r = cell_rep(g);
            if (g == r)
                row[ridx[r]] += cf;
            else
                row[ridx[r]] += cf * sym * cell_tau_sign(r); // x(τr) forced
        }
        rows.push_back(std::move(row));
        rhs.push_back(o.value(c));
    }
    return solve_integer(rows, rhs).has_value();
}

// ---------------------------------------------------------------------------
// contraction-induced chain maps
// ---------------------------------------------------------------------------

enum class ChainCoefficients { Z2, Z };

/// Per-size matrices of an injective chain map C(K') → C(K); entry
/// (row F ∈ K, col G ∈ K') over Z or Z₂.
struct ContractionChainMap {
    std::vector<std::vector<std::vector<long long>>> mats; ///< [size][row][col]
    std::vector<std::vector<Face>> rows_basis;             ///< faces of K
    std::vector<std::vector<Face>> cols_basis;             ///< faces of K'
    ChainCoefficients coefficients = ChainCoefficients::Z2;
};

namespace detail {

/// Parity of the permutation sorting the image of a face under relabel.
inline int relabel_sign(const Face& f, const std::vector<Vertex>& perm)
{
    std::vector<Vertex> img;
    for (Vertex v : f)
        img.push_back(perm[static_cast<std::size_t>(v - 1)]);
    int inv = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

inline Face apply_perm(const Face& f, const std::vector<Vertex>& perm)
{
    Face out;
    for (Vertex v : f)
        out.push_back(perm[static_cast<std::size_t>(v - 1)]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/**
 * The chain map φ of an admissible contraction u ↦ v: faces of K' already
 * in K map to themselves; a face F ∉ K maps to the signed sum of the
 * replacements (F ∖ w) ∪ u that land in K.  Signs follow the integer
 * formula with the contracted pair relabeled to the two minimal vertices.
 */
inline ContractionChainMap contraction_chain_map(const SimplicialComplex& K, Vertex u,
                                                 Vertex v, ChainCoefficients coeffs)
{
    if (!is_admissible(K, u, v))
        throw NotAdmissible("contraction_chain_map: contraction is not admissible");
    SimplicialComplex Kp = contract(K, u, v);
    int n = K.ground_size();
    // permutation with u ↦ 1, v ↦ 2, rest order-preserving
    std::vector<Vertex> perm(static_cast<std::size_t>(n), 0);
    perm[static_cast<std::size_t>(u - 1)] = 1;
    perm[static_cast<std::size_t>(v - 1)] = 2;
    Vertex next = 3;
    for (Vertex w = 1; w <= n; ++w)
        if (w != u && w != v)
            perm[static_cast<std::size_t>(w - 1)] = next++;

    ContractionChainMap out;
    out.coefficients = coeffs;
    for (int k = 0; k <= K.dim() + 1; ++k) {
        const auto& rows = K.faces_of_size(k);
        const auto& cols = Kp.faces_of_size(k);
        std::vector<std::vector<long long>> M(rows.size(),
                                              std::vector<long long>(cols.size(), 0));
        auto row_of = [&](const Face& f) {
            auto it = std::lower_bound(rows.begin(), rows.end(), f);
            return static_cast<std::size_t>(it - rows.begin());
        };
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Face& G = cols[c];
            if (K.has_face(G)) {
                M[row_of(G)][c] = 1;
                continue;
            }
            // G ∉ K: sum over w ∈ G with (G \ w) ∪ u ∈ K
            for (Vertex w : G) {
                Face F = face_union(face_without(G, w), Face{u});
                if (!K.has_face(F))
                    continue;
                long long coef = 1;
                if (coeffs == ChainCoefficients::Z) {
                    // sgn(w, πG) in the relabeled order, conjugated back
                    Face Gp = detail::apply_perm(G, perm);
                    Face Fp = detail::apply_perm(F, perm);
                    Vertex wp = perm[static_cast<std::size_t>(w - 1)];
                    int s = 1;
                    for (Vertex t : Gp)
                        if (t < wp)
                            s = -s;
                    coef = s * detail::relabel_sign(G, perm) * detail::relabel_sign(F, perm);
                    (void)Fp;
                }
                M[row_of(F)][c] += coef;
            }
        }
        if (coeffs == ChainCoefficients::Z2)
            for (auto& r : M)
                for (auto& x : r)
                    x &= 1;
        out.mats.push_back(std::move(M));
        out.rows_basis.push_back(rows);
        out.cols_basis.push_back(cols);
    }
    return out;
}

} // namespace shiftlab

#endif
