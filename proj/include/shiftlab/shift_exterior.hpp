/**
 * Exterior algebraic shifting and its companion machinery.
 *
 * The shifted complex Δᵉ(K) is computed level by level: for faces of size
 * k, the candidate row for a k-set R is the vector of k×k minors A[R;T]
 * over the size-k faces T of K, rows are scanned greedily in the
 * lexicographic order <_L, and the accepted R form the k-th level of
 * Δᵉ(K).  A seeded random matrix stands in for the generic one; every run
 * is validated (inclusion-closure, f-vector, shiftedness) and repeated
 * under a second seed.
 *
 * The same file houses the interval statistics D(S) / I_S^i on shifted
 * complexes, the dual kernel-dimension counts, hyperconnectivity and
 * acyclicity of graphs, the Sarkaria chain maps, and near-cone
 * decomposition checks.
 */

#ifndef SHIFTLAB_SHIFT_EXTERIOR_HPP
#define SHIFTLAB_SHIFT_EXTERIOR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "families.hpp"
#include "generic.hpp"

namespace shiftlab {

enum class ShiftVariant { Exterior, Symmetric };

inline const char* variant_name(ShiftVariant v)
{
    return v == ShiftVariant::Exterior ? "exterior" : "symmetric";
}

struct ShiftResult {
    SimplicialComplex shifted;
    ShiftVariant variant = ShiftVariant::Exterior;
    std::uint64_t prime = 0;
    std::pair<std::uint64_t, std::uint64_t> seeds{0, 0};
    bool stable = false;
    int attempts = 0;
};

namespace detail {

inline std::vector<std::size_t> face_to_indices(const Face& f)
{
    std::vector<std::size_t> out;
    out.reserve(f.size());
    for (Vertex v : f)
        out.push_back(static_cast<std::size_t>(v - 1));
    return out;
}

/// Validate the per-level accepted faces as a shifted complex; throws
/// ClosureViolation when a generically-impossible structure shows up.
inline SimplicialComplex assemble_shift(const SimplicialComplex& K,
                                        const std::vector<std::vector<Face>>& levels,
                                        int n)
{
    std::set<Face> accepted;
    for (const auto& lev : levels)
        accepted.insert(lev.begin(), lev.end());
    for (const auto& S : accepted) {
        if (S.size() < 2)
            continue;
        for (Vertex v : S)
            if (!accepted.count(face_without(S, v)))
                throw ClosureViolation("shift output not closed under inclusion at " +
                                       face_to_string(S));
    }
    std::vector<Face> facets(accepted.begin(), accepted.end());
    SimplicialComplex out = SimplicialComplex::from_facets(n, std::move(facets));
    if (out.f_vector() != K.f_vector())
        throw ClosureViolation("shift output does not preserve the f-vector");
    return out;
}

} // namespace detail

/// One-matrix exterior shift; throws ClosureViolation on unstable output.
inline SimplicialComplex exterior_shift_raw(const SimplicialComplex& K,
                                            const GenericMatrixSource& src)
{
    int n = K.ground_size();
    const FpMatrix& A = src.matrix();
    std::vector<std::vector<Face>> levels;
    for (int k = 1; k <= K.dim() + 1; ++k) {
        const auto& cols = K.faces_of_size(k);
        if (cols.empty())
            break;
        std::vector<std::vector<std::size_t>> col_idx;
        col_idx.reserve(cols.size());
        for (const auto& T : cols)
            col_idx.push_back(detail::face_to_indices(T));
        EchelonBasis basis(src.field(), cols.size());
        std::vector<Face> accepted;
        for (const auto& R : k_subsets(range_vertices(n), k)) {
            auto rows = detail::face_to_indices(R);
            std::vector<fp_t> row(cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                row[c] = minor_det(A, rows, col_idx[c]);
            if (basis.insert(std::move(row)))
                accepted.push_back(R);
            if (accepted.size() == cols.size())
                break;
        }
        if (accepted.size() != cols.size())
            throw ClosureViolation("exterior level scan ended short of the face count");
        levels.push_back(std::move(accepted));
    }
    SimplicialComplex out = detail::assemble_shift(K, levels, n);
    if (!is_shifted(out))
        throw ClosureViolation("exterior shift output is not shifted");
    return out;
}

inline ShiftResult exterior_shift(const SimplicialComplex& K, const GenericConfig& cfg = {})
{
    auto run = stable_generic_run(K.ground_size(), cfg, [&](const GenericMatrixSource& src) {
        return exterior_shift_raw(K, src);
    });
    return ShiftResult{std::move(run.value), ShiftVariant::Exterior, run.prime,
                       run.seeds,            run.stable,              run.attempts};
}

// ---------------------------------------------------------------------------
// interval statistics on shifted complexes
// ---------------------------------------------------------------------------

/**
 * I_S^i ∩ Δ: faces T of Δ with |T| = |S| + i whose |S| least elements are
 * exactly S.  The empty prefix convention init_0(T) = ∅ makes S = ∅ collect
 * every face of size i.
 */
inline std::vector<Face> interval_faces(const SimplicialComplex& Delta, const Face& S,
                                        int i)
{
    if (!is_shifted(Delta))
        throw NotShifted("interval_faces: complex is not shifted");
    if (i <= 0)
        throw BadParameters("interval_faces: i > 0 required");
    std::vector<Face> out;
    int want = static_cast<int>(S.size()) + i;
    for (const auto& T : Delta.faces_of_size(want)) {
        bool match = true;
        for (std::size_t j = 0; j < S.size(); ++j)
            if (T[j] != S[j]) {
                match = false;
                break;
            }
        // the added i elements must come after max(S)
        if (match && !S.empty() && T[S.size()] <= S.back())
            match = false;
        if (match)
            out.push_back(T);
    }
    return out;
}

/// D(S) = |I^1_{init_{|S|-1}(S)} ∩ Δ|.
inline std::int64_t d_value(const SimplicialComplex& Delta, const Face& S, int n)
{
    (void)n; // D(S) does not depend on the ambient n
    if (S.empty())
        throw BadParameters("d_value: S must be nonempty");
    Face prefix(S.begin(), S.end() - 1);
    return static_cast<std::int64_t>(interval_faces(Delta, prefix, 1).size());
}

/// Membership by the gap criterion: S ∈ Δ ⇔ s_last - s_prev ≤ D(S),
/// with s_prev = 0 for singletons.
inline bool gap_membership(const SimplicialComplex& Delta, const Face& S)
{
    if (S.empty())
        return true;
    Vertex prev = S.size() >= 2 ? S[S.size() - 2] : 0;
    return S.back() - prev <= d_value(Delta, S, Delta.ground_size());
}

// ---------------------------------------------------------------------------
// dual kernel counts
// ---------------------------------------------------------------------------

namespace detail {

/// (-1)^{a(T\Q, T)} where a counts pairs (q, t), q ∈ T\Q, t ∈ Q, t < q... see
/// the interior-product sign a(T,S) = |{(s,t) ∈ S×T : s ∉ T, t < s}|.
inline int removal_sign(const Face& removed, const Face& T)
{
    int a = 0;
    for (Vertex s : T) {
        if (std::binary_search(removed.begin(), removed.end(), s))
            continue;
        for (Vertex t : removed)
            if (t < s)
                ++a;
    }
    return (a % 2 == 0) ? 1 : -1;
}

/**
 * Rank of the stacked operator ⊕_R f_R⌊ on ∧^{|S|+i}(K), rows running over
 * the s-sets R strictly (or weakly) before S in <_L.
 */
inline std::size_t kernel_stack_rank(const SimplicialComplex& K, const Face& S, int i,
                                     const GenericMatrixSource& src, bool include_S)
{
    int n = K.ground_size();
    int s = static_cast<int>(S.size());
    const auto& colsT = K.faces_of_size(s + i);
    const auto& colsQ = K.faces_of_size(i);
    const FpMatrix& A = src.matrix();
    const PrimeField& F = src.field();
    EchelonBasis basis(F, colsT.size());
    std::map<Face, std::size_t> q_index;
    for (std::size_t q = 0; q < colsQ.size(); ++q)
        q_index[colsQ[q]] = q;
    for (const auto& R : k_subsets(range_vertices(n), s)) {
        if (lex_less(S, R) || (!include_S && R == S))
            break; // k_subsets emits <_L order; stop at/after S
        auto ridx = face_to_indices(R);
        // rows of f_R⌊ : one per target face Q of size i
        for (const auto& Q : colsQ) {
            std::vector<fp_t> row(colsT.size(), 0);
            bool any = false;
            for (std::size_t c = 0; c < colsT.size(); ++c) {
                const Face& T = colsT[c];
                if (!is_subset(Q, T))
                    continue;
                Face rem = face_minus(T, Q);
                fp_t m = minor_det(A, ridx, face_to_indices(rem));
                if (m == 0)
                    continue;
                int sign = removal_sign(rem, T);
                row[c] = sign > 0 ? m : F.neg(m);
                any = true;
            }
            if (any)
                basis.insert(std::move(row));
        }
    }
    return basis.rank();
}

} // namespace detail

/**
 * |I_S^i ∩ Δᵉ(K)| computed on the kernel side:
 * dim ∩_{R <_L S} Ker f_R⌊ − dim ∩_{R ≤_L S} Ker f_R⌊ on ∧^{|S|+i}(K).
 */
inline std::int64_t kernel_interval_count(const SimplicialComplex& K, const Face& S,
                                          int i, const GenericConfig& cfg = {})
{
    if (static_cast<int>(S.size()) + i > K.dim() + 1)
        throw BadParameters("kernel_interval_count: |S| + i exceeds dim(K)+1");
    auto run = stable_generic_run(K.ground_size(), cfg, [&](const GenericMatrixSource& src) {
        std::size_t r_lt = detail::kernel_stack_rank(K, S, i, src, false);
        std::size_t r_le = detail::kernel_stack_rank(K, S, i, src, true);
        return static_cast<std::int64_t>(r_le) - static_cast<std::int64_t>(r_lt);
    });
    return run.value;
}

// ---------------------------------------------------------------------------
// hyperconnectivity / acyclicity of graphs
// ---------------------------------------------------------------------------

namespace detail {

/// The dn×|E| matrix of x ↦ (f_1⌊x, ..., f_d⌊x) on edges of G.
inline FpMatrix acyclicity_matrix(const SimplicialComplex& G, int d,
                                  const GenericMatrixSource& src)
{
    int n = G.ground_size();
    const auto& edges = G.faces_of_size(2);
    const FpMatrix& A = src.matrix();
    FpMatrix M(src.field(), static_cast<std::size_t>(d) * n, edges.size());
    for (std::size_t c = 0; c < edges.size(); ++c) {
        Vertex v = edges[c][0], u = edges[c][1];
        for (int i = 0; i < d; ++i) {
            M.at(static_cast<std::size_t>(i) * n + (v - 1), c) =
                A.at(static_cast<std::size_t>(i), static_cast<std::size_t>(u - 1));
            M.at(static_cast<std::size_t>(i) * n + (u - 1), c) =
                src.field().neg(A.at(static_cast<std::size_t>(i), static_cast<std::size_t>(v - 1)));
        }
    }
    return M;
}

} // namespace detail

/**
 * d-acyclic: Ker f(d,1,G) = 0.  Decided by the direct rank computation and,
 * as a cross-oracle, by {d+1, d+2} ∉ Δᵉ(G); a mismatch is a bug signal.
 */
inline bool is_d_acyclic(const SimplicialComplex& G, int d, const GenericConfig& cfg = {})
{
    if (G.dim() > 1)
        throw BadParameters("is_d_acyclic: input must be a graph");
    auto direct = stable_generic_run(G.ground_size(), cfg, [&](const GenericMatrixSource& src) {
        FpMatrix M = detail::acyclicity_matrix(G, d, src);
        return rank(M) == M.cols();
    });
    bool via_shift = !exterior_shift(G, cfg).shifted.has_face({d + 1, d + 2});
    if (direct.value != via_shift)
        throw Disagreement("is_d_acyclic: rank oracle and shifted-face oracle differ");
    return direct.value;
}

/// d-hyperconnected: im f(d,1,G) = im f(d,1,K_V); cross-checked against
/// {d, n} ∈ Δᵉ(G).
inline bool is_d_hyperconnected(const SimplicialComplex& G, int d,
                                const GenericConfig& cfg = {})
{
    if (G.dim() > 1)
        throw BadParameters("is_d_hyperconnected: input must be a graph");
    int n = G.ground_size();
    auto direct = stable_generic_run(n, cfg, [&](const GenericMatrixSource& src) {
        FpMatrix M = detail::acyclicity_matrix(G, d, src);
        FpMatrix MK = detail::acyclicity_matrix(complete_graph(n), d, src);
        return rank(M) == rank(MK);
    });
    if (d < n) {
        bool via_shift = exterior_shift(G, cfg).shifted.has_face({d, n});
        if (direct.value != via_shift)
            throw Disagreement("is_d_hyperconnected: rank oracle and shifted-face oracle differ");
    }
    return direct.value;
}

// ---------------------------------------------------------------------------
// Sarkaria chain maps
// ---------------------------------------------------------------------------

/// Square matrices per face size k = 0..dim+1 in the basis {e_S : S ∈ K}.
struct GradedMaps {
    std::vector<FpMatrix> per_size;          ///< per_size[k]: size-k faces
    std::vector<std::vector<Face>> basis;    ///< basis[k] = faces of size k
};

namespace detail {

inline std::size_t face_pos(const std::vector<Face>& level, const Face& f)
{
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f)
        throw FaceNotInComplex("face_pos: " + face_to_string(f));
    return static_cast<std::size_t>(it - level.begin());
}

} // namespace detail

/// sgn(i, S) = (-1)^{|{t ∈ S : t < i}|}, the boundary-style sign.
inline int sgn_in(Vertex i, const Face& S)
{
    int c = 0;
    for (Vertex t : S)
        if (t < i)
            ++c;
    return c % 2 == 0 ? 1 : -1;
}

/**
 * The Sarkaria map U on ∧(K) for a near cone K with respect to v:
 * U(e_S) = e_S when v ∈ S, else e_S − Σ_{i∈S} (−1)^{sgn(i,S)} e_{v∪S∖i}.
 */
inline GradedMaps sarkaria_U(const SimplicialComplex& K, Vertex v, const PrimeField& F)
{
    GradedMaps out;
    for (int k = 0; k <= K.dim() + 1; ++k) {
        const auto& level = K.faces_of_size(k);
        FpMatrix M(F, level.size(), level.size());
        for (std::size_t c = 0; c < level.size(); ++c) {
            const Face& S = level[c];
            M.at(c, c) = 1;
            if (std::binary_search(S.begin(), S.end(), v))
                continue;
            for (Vertex i : S) {
                Face G = face_union(face_without(S, i), Face{v});
                if (!K.has_face(G))
                    throw NotNearCone("sarkaria_U: missing replacement face " +
                                      face_to_string(G));
                fp_t coef = 1;
                if (sgn_in(i, S) > 0)
                    coef = F.neg(1); // subtract (+1)·e_{v∪S∖i}
                M.at(detail::face_pos(level, G), c) = F.add(M.at(detail::face_pos(level, G), c),
                                                            coef);
            }
        }
        out.per_size.push_back(std::move(M));
        out.basis.push_back(level);
    }
    return out;
}

/**
 * The diagonal Sarkaria map D with weights α: D⁻¹(e_S) = (Π_{i∈S} α_i) e_S.
 * `alpha` is indexed by vertex label (1-based); weights must be nonzero on
 * the vertices of K.
 */
inline GradedMaps sarkaria_D(const SimplicialComplex& K, const std::vector<fp_t>& alpha,
                             const PrimeField& F)
{
    for (Vertex v : K.vertices())
        if (static_cast<std::size_t>(v) >= alpha.size() + 1 || alpha[static_cast<std::size_t>(v - 1)] == 0)
            throw ZeroWeight("sarkaria_D: zero or missing weight at vertex " +
                             std::to_string(v));
    GradedMaps out;
    for (int k = 0; k <= K.dim() + 1; ++k) {
        const auto& level = K.faces_of_size(k);
        FpMatrix M(F, level.size(), level.size());
        for (std::size_t c = 0; c < level.size(); ++c) {
            fp_t prod = 1;
            for (Vertex i : level[c])
                prod = F.mul(prod, alpha[static_cast<std::size_t>(i - 1)]);
            M.at(c, c) = F.inv(prod);
        }
        out.per_size.push_back(std::move(M));
        out.basis.push_back(level);
    }
    return out;
}

/**
 * Interior product by the 1-form Σ_v w_v e_v as matrices ∧^k(K) → ∧^{k-1}(K):
 * e_v⌊ e_S = (−1)^{|{s ∈ S: s > v}|} e_{S∖v} for v ∈ S.
 */
inline std::vector<FpMatrix> interior_product(const SimplicialComplex& K,
                                              const std::vector<fp_t>& weights,
                                              const PrimeField& F)
{
    std::vector<FpMatrix> out;
    for (int k = 1; k <= K.dim() + 1; ++k) {
        const auto& src = K.faces_of_size(k);
        const auto& dst = K.faces_of_size(k - 1);
        FpMatrix M(F, dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            const Face& S = src[c];
            for (Vertex v : S) {
                fp_t w = (static_cast<std::size_t>(v - 1) < weights.size())
                             ? weights[static_cast<std::size_t>(v - 1)]
                             : 0;
                if (w == 0)
                    continue;
                int greater = 0;
                for (Vertex s : S)
                    if (s > v)
                        ++greater;
                fp_t coef = (greater % 2 == 0) ? w : F.neg(w);
                std::size_t r = detail::face_pos(dst, face_without(S, v));
                M.at(r, c) = F.add(M.at(r, c), coef);
            }
        }
        out.push_back(std::move(M));
    }
    return out;
}

// ---------------------------------------------------------------------------
// near cones
// ---------------------------------------------------------------------------

/// Near cone w.r.t. v: j ∈ S ∈ K implies v ∪ S∖j ∈ K.
inline bool is_near_cone(const SimplicialComplex& K, Vertex v)
{
    if (!K.has_vertex(v))
        throw VertexMissing("is_near_cone: vertex " + std::to_string(v));
    for (int k = 1; k <= K.dim() + 1; ++k)
        for (const auto& S : K.faces_of_size(k)) {
            if (std::binary_search(S.begin(), S.end(), v))
                continue;
            for (Vertex j : S)
                if (!K.has_face(face_union(face_without(S, j), Face{v})))
                    return false;
        }
    return true;
}

/**
 * Decomposition theorem check for a near cone K w.r.t. v:
 * the faces of Δᵉ(K) containing 1 must be exactly {1} ∪ (T + 1) for
 * T ∈ Δᵉ(lk(v,K)), the link shifted on its own relabeled ground set.
 */
inline bool near_cone_decomposition_check(const SimplicialComplex& K, Vertex v,
                                          const GenericConfig& cfg = {})
{
    if (!is_near_cone(K, v))
        throw NotNearCone("near_cone_decomposition_check: not a near cone at vertex " +
                          std::to_string(v));
    SimplicialComplex E = exterior_shift(K, cfg).shifted;
    SimplicialComplex L = compactify(link(K, {v}));
    SimplicialComplex EL = exterior_shift(L, cfg).shifted;
    std::set<Face> with_one;
    for (int k = 1; k <= E.dim() + 1; ++k)
        for (const auto& S : E.faces_of_size(k))
            if (S[0] == 1)
                with_one.insert(Face(S.begin() + 1, S.end()));
    std::set<Face> expected;
    expected.insert(Face{});
    for (int k = 1; k <= EL.dim() + 1; ++k)
        for (const auto& T : EL.faces_of_size(k)) {
            Face shifted;
            for (Vertex x : T)
                shifted.push_back(x + 1);
            expected.insert(std::move(shifted));
        }
    return with_one == expected;
}

} // namespace shiftlab

#endif
