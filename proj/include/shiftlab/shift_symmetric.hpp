/**
 * Symmetric algebraic shifting via generic initial monomial bases of the
 * face ring, the gin → Δˢ translation, Lefschetz certificates in GIN
 * terms, and the Lee rigidity equivalence.
 *
 * For each degree up to dim(K)+1, candidate monomials in the generic basis
 * Y are expanded inside k[K] (monomials with non-face support are dropped,
 * which is exactly reduction modulo the Stanley-Reisner ideal) and scanned
 * greedily in the order  y^a <_L y^b  iff  a_j > b_j at the first index
 * where they differ.
 */

#ifndef SHIFTLAB_SHIFT_SYMMETRIC_HPP
#define SHIFTLAB_SHIFT_SYMMETRIC_HPP

#include <functional>
#include <map>
#include <vector>

#include "rigidity.hpp"
#include "shift_exterior.hpp"

namespace shiftlab {

/// Exponent vector over variables y_1..y_n.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m)
{
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

/// Support as 1-based vertex labels.
inline Face monomial_support(const Monomial& m)
{
    Face out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0)
            out.push_back(static_cast<Vertex>(i + 1));
    return out;
}

/// First monomial of the given degree in <_L order: y_1^d.
inline Monomial first_monomial(int n, int d)
{
    Monomial m(static_cast<std::size_t>(n), 0);
    if (n > 0)
        m[0] = d;
    return m;
}

/// Advance in <_L order; false when the enumeration is exhausted.
inline bool next_monomial(Monomial& m)
{
    int n = static_cast<int>(m.size());
    int i = n - 2;
    while (i >= 0 && m[static_cast<std::size_t>(i)] == 0)
        --i;
    if (i < 0)
        return false;
    int rest = 0;
    for (int j = i + 1; j < n; ++j) {
        rest += m[static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(j)] = 0;
    }
    m[static_cast<std::size_t>(i)] -= 1;
    m[static_cast<std::size_t>(i + 1)] = rest + 1;
    return true;
}

/// S(m) for m = y_{i1}···y_{ir}, i1 ≤ ... ≤ ir: {i_1-r+1, i_2-r+2, ..., i_r}.
inline Face s_of_monomial(const Monomial& m)
{
    std::vector<int> idx;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int t = 0; t < m[i]; ++t)
            idx.push_back(static_cast<int>(i + 1));
    int r = static_cast<int>(idx.size());
    Face out;
    for (int j = 0; j < r; ++j)
        out.push_back(idx[static_cast<std::size_t>(j)] - r + j + 1);
    return out;
}

struct GinResult {
    std::vector<std::vector<Monomial>> gin_by_degree; ///< GIN, degrees 1..dim+1
    std::vector<Monomial> gin;                        ///< squeezed subset
    SimplicialComplex delta;                          ///< Δˢ(K)
    std::uint64_t prime = 0;
    std::pair<std::uint64_t, std::uint64_t> seeds{0, 0};
    bool stable = false;

    bool gin_contains(const Monomial& m) const
    {
        int d = monomial_degree(m);
        if (d < 1 || d > static_cast<int>(gin_by_degree.size()))
            return false;
        const auto& level = gin_by_degree[static_cast<std::size_t>(d - 1)];
        return std::find(level.begin(), level.end(), m) != level.end();
    }

    bool operator==(const GinResult& o) const { return gin_by_degree == o.gin_by_degree; }
};

namespace detail {

/// One-matrix GIN computation; throws ClosureViolation on unstable output.
inline std::vector<std::vector<Monomial>> gin_raw(const SimplicialComplex& K,
                                                  const GenericMatrixSource& src)
{
    int n = K.ground_size();
    const FpMatrix& A = src.matrix();
    const PrimeField& F = src.field();
    std::vector<std::vector<Monomial>> gin_levels;
    // per-degree monomial basis of k[K] and expansion cache
    std::vector<std::vector<Monomial>> basis(1); // degree 0: the empty monomial
    basis[0].push_back(Monomial(static_cast<std::size_t>(n), 0));
    std::vector<std::map<Monomial, std::size_t>> basis_index(1);
    basis_index[0][basis[0][0]] = 0;
    std::map<Monomial, std::vector<fp_t>> cache;
    cache[basis[0][0]] = {1};

    std::function<const std::vector<fp_t>&(const Monomial&)> expand =
        [&](const Monomial& a) -> const std::vector<fp_t>& {
        auto it = cache.find(a);
        if (it != cache.end())
            return it->second;
        int deg = monomial_degree(a);
        int i = n - 1;
        while (a[static_cast<std::size_t>(i)] == 0)
            --i;
        Monomial prev = a;
        prev[static_cast<std::size_t>(i)] -= 1;
        const std::vector<fp_t>& pv = expand(prev);
        std::vector<fp_t> out(basis[static_cast<std::size_t>(deg)].size(), 0);
        const auto& pb = basis[static_cast<std::size_t>(deg - 1)];
        const auto& bidx = basis_index[static_cast<std::size_t>(deg)];
        for (std::size_t b = 0; b < pb.size(); ++b) {
            if (pv[b] == 0)
                continue;
            for (int j = 0; j < n; ++j) {
                fp_t coef = F.mul(pv[b], A.at(static_cast<std::size_t>(i),
                                              static_cast<std::size_t>(j)));
                if (coef == 0)
                    continue;
                Monomial tgt = pb[b];
                tgt[static_cast<std::size_t>(j)] += 1;
                auto bit = bidx.find(tgt);
                if (bit == bidx.end())
                    continue; // support not a face: reduced away
                out[bit->second] = F.add(out[bit->second], coef);
            }
        }
        return cache.emplace(a, std::move(out)).first->second;
    };

    for (int d = 1; d <= K.dim() + 1; ++d) {
        // degree-d monomial basis with support in K
        basis.emplace_back();
        basis_index.emplace_back();
        for (Monomial m = first_monomial(n, d);;) {
            if (K.has_face(monomial_support(m))) {
                basis_index.back()[m] = basis.back().size();
                basis.back().push_back(m);
            }
            if (!next_monomial(m))
                break;
        }
        std::size_t target = basis.back().size();
        EchelonBasis eb(F, target);
        std::vector<Monomial> accepted;
        for (Monomial m = first_monomial(n, d);;) {
            if (eb.insert(expand(m)))
                accepted.push_back(m);
            if (accepted.size() == target)
                break;
            if (!next_monomial(m))
                break;
        }
        if (accepted.size() != target)
            throw ClosureViolation("symmetric level scan ended short of the dimension");
        gin_levels.push_back(std::move(accepted));
    }
    return gin_levels;
}

} // namespace detail

/// Generic initial monomials of k[K] up to degree dim(K)+1, plus Δˢ(K).
inline GinResult gin(const SimplicialComplex& K, const GenericConfig& cfg = {})
{
    if (cfg.prime < 1000)
        throw BadParameters("gin: symmetric shifting requires prime >= 1000 "
                            "(characteristic-zero emulation)");
    auto run = stable_generic_run(K.ground_size(), cfg, [&](const GenericMatrixSource& src) {
        auto levels = detail::gin_raw(K, src);
        // assemble and validate Δˢ within the run so a broken draw retries
        std::vector<std::vector<Face>> shift_levels;
        std::vector<Monomial> squeezed;
        for (std::size_t di = 0; di < levels.size(); ++di) {
            int deg = static_cast<int>(di) + 1;
            std::vector<Face> faces;
            for (const auto& m : levels[di]) {
                Face supp = monomial_support(m);
                if (!supp.empty() && supp.front() >= deg) {
                    faces.push_back(s_of_monomial(m));
                    squeezed.push_back(m);
                }
            }
            shift_levels.push_back(std::move(faces));
        }
        SimplicialComplex delta = detail::assemble_shift(K, shift_levels, K.ground_size());
        if (!is_shifted(delta))
            throw ClosureViolation("symmetric shift output is not shifted");
        return std::make_pair(levels, squeezed);
    });
    GinResult out;
    out.gin_by_degree = std::move(run.value.first);
    out.gin = std::move(run.value.second);
    out.prime = run.prime;
    out.seeds = run.seeds;
    out.stable = run.stable;
    // rebuild Δˢ from the accepted gin (validated inside the stable run)
    std::vector<Face> faces;
    for (const auto& m : out.gin)
        faces.push_back(s_of_monomial(m));
    out.delta = SimplicialComplex::from_facets(K.ground_size(), std::move(faces));
    return out;
}

inline ShiftResult symmetric_shift(const SimplicialComplex& K, const GenericConfig& cfg = {})
{
    GinResult g = gin(K, cfg);
    return ShiftResult{std::move(g.delta), ShiftVariant::Symmetric, g.prime, g.seeds,
                       g.stable, 1};
}

/// Either variant through one entry point.
inline ShiftResult algebraic_shift(const SimplicialComplex& K, ShiftVariant variant,
                                   const GenericConfig& cfg = {})
{
    return variant == ShiftVariant::Exterior ? exterior_shift(K, cfg)
                                             : symmetric_shift(K, cfg);
}

// ---------------------------------------------------------------------------
// Lefschetz certificates
// ---------------------------------------------------------------------------

inline bool is_pure_of_dim(const SimplicialComplex& K, int d)
{
    if (K.dim() != d - 1)
        return false;
    for (const auto& f : K.facets())
        if (static_cast<int>(f.size()) != d)
            return false;
    return true;
}

/**
 * Hard-Lefschetz certificate: none of the monomials y_{d+1}^{d-2k-1}
 * y_{d+2}^{k+1} (k ≥ 0, exponents ≥ 0) lies in GIN(K).  Cross-checked as
 * the absence of the corresponding T-set faces from Δˢ(K).
 */
inline bool is_hl_certificate(const SimplicialComplex& K, int d,
                              const GenericConfig& cfg = {})
{
    if (!is_pure_of_dim(K, d))
        return false;
    GinResult g = gin(K, cfg);
    int n = K.ground_size();
    bool hl_gin = true;
    bool hl_tset = true;
    for (int k = 0; d - 2 * k - 1 >= 0; ++k) {
        if (d + 2 <= n) {
            Monomial m(static_cast<std::size_t>(n), 0);
            m[static_cast<std::size_t>(d)] = d - 2 * k - 1;     // y_{d+1}
            m[static_cast<std::size_t>(d + 1)] = k + 1;         // y_{d+2}
            if (g.gin_contains(m))
                hl_gin = false;
        }
        if (g.delta.has_face(t_set(d, k)))
            hl_tset = false;
    }
    if (hl_gin != hl_tset)
        throw Disagreement("is_hl_certificate: GIN and T-set routes differ");
    return hl_gin;
}

/**
 * Weak-Lefschetz certificate on Δˢ(K):
 *  (1) S ∈ Δ, |S| = k ⇒ [d-k] ∪ S ∈ Δ;
 *  (2) S ∈ Δ, |S| = k < ⌊d/2⌋ ⇒ {d-k+1} ∪ S ∈ Δ.
 */
inline bool is_wl_certificate(const SimplicialComplex& K, int d,
                              const GenericConfig& cfg = {})
{
    if (!is_pure_of_dim(K, d))
        return false;
    SimplicialComplex delta = symmetric_shift(K, cfg).shifted;
    for (int k = 0; k <= delta.dim() + 1; ++k)
        for (const auto& S : delta.faces_of_size(k)) {
            Face pre = S;
            for (Vertex x = 1; x <= d - k; ++x)
                if (!std::binary_search(S.begin(), S.end(), x))
                    pre.push_back(x);
            std::sort(pre.begin(), pre.end());
            if (!delta.has_face(pre))
                return false;
            if (k < d / 2) {
                Vertex x = d - k + 1;
                if (!std::binary_search(S.begin(), S.end(), x)) {
                    if (!delta.has_face(face_union(S, Face{x})))
                        return false;
                }
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// Lee equivalence: rigidity through Δˢ
// ---------------------------------------------------------------------------

struct RigidityLinksReport {
    bool rigid = false;
    bool stress_free = false;
};

struct LeeReport {
    bool rigid_matrix = false;
    bool stress_free_matrix = false;
    bool rigid_shift = false;
    bool stress_free_shift = false;
    bool agree = false;
};

/// Both oracles side by side; disagreement flags a defect.
inline LeeReport lee_crosscheck(const SimplicialComplex& G, int d,
                                const GenericConfig& cfg = {})
{
    if (G.dim() > 1)
        throw BadParameters("lee_crosscheck: input must be a graph");
    LeeReport rep;
    rep.rigid_matrix = is_generically_rigid(G, d, cfg);
    rep.stress_free_matrix = is_stress_free(G, d, cfg);
    int n = G.ground_size();
    SimplicialComplex delta = symmetric_shift(G, cfg).shifted;
    rep.rigid_shift = d < n ? delta.has_face({d, n}) : rep.rigid_matrix;
    rep.stress_free_shift = !delta.has_face({d + 1, d + 2});
    rep.agree = rep.rigid_matrix == rep.rigid_shift &&
                rep.stress_free_matrix == rep.stress_free_shift;
    return rep;
}

/// Rigidity/stress-freeness decided by Δˢ membership, with the matrix
/// oracle enforced as a runtime cross-check.
inline RigidityLinksReport rigidity_links(const SimplicialComplex& G, int d,
                                          const GenericConfig& cfg = {})
{
    LeeReport rep = lee_crosscheck(G, d, cfg);
    if (!rep.agree)
        throw Disagreement("rigidity_links: matrix and shifted-face oracles differ");
    return RigidityLinksReport{rep.rigid_shift, rep.stress_free_shift};
}

} // namespace shiftlab

#endif
