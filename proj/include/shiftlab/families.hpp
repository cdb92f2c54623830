/**
 * Named complex families and the gluing constructions: boundaries of
 * simplices, complete and bipartite graphs, stacked spheres, cyclic
 * polytope boundaries (Gale evenness), the upper-bound complexes Δ(d,n)
 * with their forbidden T-sets, skeleta H(d), connected sums and Stellar
 * subdivisions.
 */

#ifndef SHIFTLAB_FAMILIES_HPP
#define SHIFTLAB_FAMILIES_HPP

#include <algorithm>
#include <vector>

#include "complex.hpp"

namespace shiftlab {

/// All k-subsets of the given sorted vertex list, in lex order.
inline std::vector<Face> k_subsets(const std::vector<Vertex>& verts, int k)
{
    std::vector<Face> out;
    if (k < 0 || k > static_cast<int>(verts.size()))
        return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    int n = static_cast<int>(verts.size());
    for (;;) {
        Face f;
        for (int i : idx)
            f.push_back(verts[static_cast<std::size_t>(i)]);
        out.push_back(std::move(f));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline std::vector<Vertex> range_vertices(int n)
{
    std::vector<Vertex> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

/// Boundary of the d-simplex on vertices 1..d+1 (d = 0 gives {∅}).
inline SimplicialComplex boundary_simplex(int d)
{
    if (d < 0)
        throw BadParameters("boundary_simplex: d >= 0 required");
    return SimplicialComplex::from_facets(d + 1, k_subsets(range_vertices(d + 1), d));
}

/// Full simplex 2^[m].
inline SimplicialComplex complete_complex(int m)
{
    if (m < 0)
        throw BadParameters("complete_complex: m >= 0 required");
    if (m == 0)
        return SimplicialComplex::from_facets(0, {});
    return SimplicialComplex::from_facets(m, {range_vertices(m)});
}

inline SimplicialComplex complete_graph(int m)
{
    if (m < 1)
        throw BadParameters("complete_graph: m >= 1 required");
    std::vector<Face> edges = k_subsets(range_vertices(m), 2);
    if (edges.empty())
        return SimplicialComplex::from_facets(m, {{1}});
    return SimplicialComplex::from_facets(m, std::move(edges));
}

/// K_{a,b} with sides {1..a} and {a+1..a+b}.
inline SimplicialComplex complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw BadParameters("complete_bipartite: positive side sizes required");
    std::vector<Face> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            edges.push_back({i, a + j});
    return SimplicialComplex::from_facets(a + b, std::move(edges));
}

/// Octahedron {1,4}*{2,5}*{3,6}: antipodal pairs (1,4), (2,5), (3,6).
inline SimplicialComplex octahedron()
{
    std::vector<Face> facets;
    for (Vertex a : {1, 4})
        for (Vertex b : {2, 5})
            for (Vertex c : {3, 6}) {
                Face f{a, b, c};
                std::sort(f.begin(), f.end());
                facets.push_back(std::move(f));
            }
    return SimplicialComplex::from_facets(6, std::move(facets));
}

/**
 * Stacked (d-1)-sphere on n vertices: repeated connected sum of ∂σ^d.
 * Each new vertex replaces the most recently created facet (the shifted
 * complex is independent of the gluing rule, so any deterministic choice
 * is valid; this one is recorded here).
 */
inline SimplicialComplex stacked_sphere(int d, int n)
{
    if (d < 1 || n < d + 1)
        throw BadParameters("stacked_sphere: need d >= 1, n >= d+1");
    std::vector<Face> facets = k_subsets(range_vertices(d + 1), d);
    Face last = facets.back();
    for (Vertex v = d + 2; v <= n; ++v) {
        facets.erase(std::find(facets.begin(), facets.end(), last));
        std::vector<Face> fresh;
        for (std::size_t i = 0; i < last.size(); ++i) {
            Face f;
            for (std::size_t j = 0; j < last.size(); ++j)
                if (j != i)
                    f.push_back(last[j]);
            f.push_back(v);
            std::sort(f.begin(), f.end());
            fresh.push_back(std::move(f));
        }
        facets.insert(facets.end(), fresh.begin(), fresh.end());
        last = fresh.back();
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

/**
 * Boundary of the cyclic d-polytope on n vertices via the Gale evenness
 * condition: a d-subset S of [n] is a facet iff every maximal run of
 * consecutive elements of S containing neither 1 nor n has even length.
 */
inline SimplicialComplex cyclic_boundary(int d, int n)
{
    if (d < 2 || n < d + 1)
        throw BadParameters("cyclic_boundary: need d >= 2, n >= d+1");
    std::vector<Face> facets;
    for (const auto& S : k_subsets(range_vertices(n), d)) {
        bool ok = true;
        std::size_t i = 0;
        while (i < S.size()) {
            std::size_t j = i;
            while (j + 1 < S.size() && S[j + 1] == S[j] + 1)
                ++j;
            bool touches_end = (S[i] == 1) || (S[j] == n);
            if (!touches_end && (j - i + 1) % 2 == 1) {
                ok = false;
                break;
            }
            i = j + 1;
        }
        if (ok)
            facets.push_back(S);
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

/**
 * The shifting-theoretic upper-bound complex Δ(d,n): pure (d-1)-dimensional
 * with facets {S ⊆ [n], |S| = d : k ∉ S ⇒ [k+1, d-k+2] ⊆ S}.
 */
inline SimplicialComplex ubt_complex(int d, int n)
{
    if (d < 1 || n < d)
        throw BadParameters("ubt_complex: need d >= 1, n >= d");
    std::vector<Face> facets;
    for (const auto& S : k_subsets(range_vertices(n), d)) {
        bool ok = true;
        for (int k = 1; k <= n && ok; ++k) {
            if (std::binary_search(S.begin(), S.end(), k))
                continue;
            for (int x = k + 1; x <= d - k + 2; ++x)
                if (!std::binary_search(S.begin(), S.end(), x)) {
                    ok = false;
                    break;
                }
        }
        if (ok)
            facets.push_back(S);
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

/// T_{d-k} = {k+2,...,d-k} ∪ {d-k+2,...,d+2}; the faces Δ(d,n) avoids.
inline Face t_set(int d, int k)
{
    if (k < 0 || k > d / 2)
        throw BadParameters("t_set: need 0 <= k <= d/2");
    Face out;
    for (int x = k + 2; x <= d - k; ++x)
        out.push_back(x);
    for (int x = d - k + 2; x <= d + 2; ++x)
        out.push_back(x);
    return out;
}

/// H(d): all subsets of [2d+1] of size ≤ d, the (d-1)-skeleton of σ^{2d}.
inline SimplicialComplex h_d_skeleton(int d)
{
    if (d < 1)
        throw BadParameters("h_d_skeleton: d >= 1 required");
    int n = 2 * d + 1;
    return SimplicialComplex::from_facets(n, k_subsets(range_vertices(n), d));
}

/// j-skeleton: all faces of dimension ≤ j.
inline SimplicialComplex skeleton(const SimplicialComplex& K, int j)
{
    std::vector<Face> facets;
    for (int k = 0; k <= std::min(j + 1, K.dim() + 1); ++k)
        for (const auto& f : K.faces_of_size(k))
            facets.push_back(f);
    return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

/**
 * Connected sum K #_σ L: glue L onto K along the facets σ_K ≅ σ_L using
 * `matching` (pairs (vertex of σ_L, vertex of σ_K)), relabel the remaining
 * vertices of L onto fresh labels, then remove the shared facet.
 */
inline SimplicialComplex connected_sum(const SimplicialComplex& K,
                                       const SimplicialComplex& L, const Face& sigma_K,
                                       const Face& sigma_L,
                                       const std::vector<std::pair<Vertex, Vertex>>& matching)
{
    auto is_facet = [](const SimplicialComplex& C, const Face& f) {
        return std::find(C.facets().begin(), C.facets().end(), f) != C.facets().end();
    };
    if (!is_facet(K, sigma_K))
        throw NotAFacet("connected_sum: sigma_K is not a facet of K");
    if (!is_facet(L, sigma_L))
        throw NotAFacet("connected_sum: sigma_L is not a facet of L");
    if (sigma_K.size() != sigma_L.size())
        throw SizeMismatch("connected_sum: facet sizes differ");
    if (matching.size() != sigma_L.size())
        throw SizeMismatch("connected_sum: matching must cover the glued facet");
    std::vector<std::pair<Vertex, Vertex>> map = matching;
    for (auto [from, to] : map) {
        if (!std::binary_search(sigma_L.begin(), sigma_L.end(), from) ||
            !std::binary_search(sigma_K.begin(), sigma_K.end(), to))
            throw BadParameters("connected_sum: matching outside the glued facets");
    }
    Vertex next = K.ground_size() + 1;
    for (Vertex v : L.vertices()) {
        if (std::binary_search(sigma_L.begin(), sigma_L.end(), v))
            continue;
        map.emplace_back(v, next++);
    }
    SimplicialComplex Lr = relabel(L, next - 1, map);
    std::vector<Face> facets;
    for (const auto& f : K.facets())
        if (f != sigma_K)
            facets.push_back(f);
    for (const auto& f : Lr.facets())
        if (f != sigma_K)
            facets.push_back(f);
    return SimplicialComplex::from_facets(next - 1, std::move(facets));
}

/**
 * Stellar subdivision at a face T: (K \ st(T,K)) ∪ ({v_T} * ∂T * lk(T,K))
 * with the new vertex v_T = n+1.
 */
inline SimplicialComplex stellar_subdivision(const SimplicialComplex& K, const Face& T)
{
    if (T.empty())
        throw BadParameters("stellar_subdivision: face must be nonempty");
    if (!K.has_face(T))
        throw FaceNotInComplex("stellar_subdivision: " + face_to_string(T));
    Vertex vt = K.ground_size() + 1;
    std::vector<Face> facets;
    // K minus the open star of T: faces not containing T
    for (const auto& G : K.facets()) {
        if (!is_subset(T, G)) {
            facets.push_back(G);
            continue;
        }
        // maximal subfaces of G avoiding full T: drop one vertex of T
        for (Vertex t : T)
            facets.push_back(face_without(G, t));
    }
    // {v_T} * ∂T * lk(T,K)
    SimplicialComplex lk = link(K, T);
    for (Vertex t : T) {
        Face base = face_without(T, t);
        for (const auto& F : lk.facets()) {
            Face f = face_union(base, F);
            f.push_back(vt);
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        }
    }
    return SimplicialComplex::from_facets(vt, std::move(facets));
}

} // namespace shiftlab

#endif
