/**
 * Contractions, link conditions, and minor search.
 *
 * A contraction u ↦ v is admissible when u, v lie in no missing face of
 * dimension ≤ dim(K).  H is a minor of K (H < K) when a sequence of facet
 * deletions and admissible contractions takes K to H; the search is
 * exhaustive within a node budget and memoized on isomorphism-invariant
 * encodings.
 */

#ifndef SHIFTLAB_MINORS_HPP
#define SHIFTLAB_MINORS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "families.hpp"

namespace shiftlab {

/// Minimal non-faces of dimension ≤ max_dim over the used vertices.
inline std::vector<Face> missing_faces(const SimplicialComplex& K, int max_dim)
{
    std::vector<Face> out;
    auto verts = K.vertices();
    for (int k = 1; k <= max_dim + 1; ++k)
        for (const auto& T : k_subsets(verts, k)) {
            if (K.has_face(T))
                continue;
            bool minimal = true;
            for (Vertex x : T)
                if (!K.has_face(face_without(T, x))) {
                    minimal = false;
                    break;
                }
            if (minimal)
                out.push_back(T);
        }
    return out;
}

/// Identify u ↦ v: every occurrence of u is replaced by v.
inline SimplicialComplex contract(const SimplicialComplex& K, Vertex u, Vertex v)
{
    if (u == v)
        throw BadParameters("contract: vertices must be distinct");
    if (!K.has_vertex(u) || !K.has_vertex(v))
        throw VertexMissing("contract: both endpoints must be vertices of the complex");
    std::vector<Face> facets;
    for (const auto& f : K.facets()) {
        Face g;
        for (Vertex x : f)
            g.push_back(x == u ? v : x);
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

/// Admissible: u, v lie in no missing face of dimension ≤ dim(K).
inline bool is_admissible(const SimplicialComplex& K, Vertex u, Vertex v)
{
    if (u == v)
        throw BadParameters("is_admissible: vertices must be distinct");
    if (!K.has_vertex(u) || !K.has_vertex(v))
        throw VertexMissing("is_admissible: both endpoints must be vertices");
    for (const auto& T : missing_faces(K, K.dim()))
        if (std::binary_search(T.begin(), T.end(), u) &&
            std::binary_search(T.begin(), T.end(), v))
            return false;
    return true;
}

/// The weaker local admissibility: missing faces only up to dimension
/// min(dim lk(u), dim lk(v)) + 1 are consulted.
inline bool is_admissible_local(const SimplicialComplex& K, Vertex u, Vertex v)
{
    if (!K.has_vertex(u) || !K.has_vertex(v))
        throw VertexMissing("is_admissible_local: both endpoints must be vertices");
    int cap = std::min(link(K, {u}).dim(), link(K, {v}).dim()) + 1;
    for (const auto& T : missing_faces(K, cap))
        if (std::binary_search(T.begin(), T.end(), u) &&
            std::binary_search(T.begin(), T.end(), v))
            return false;
    return true;
}

/// Common faces of two complexes on the same ground set.
inline SimplicialComplex complex_intersection(const SimplicialComplex& A,
                                              const SimplicialComplex& B)
{
    std::vector<Face> facets;
    for (const auto& f : A.all_faces())
        if (B.has_face(f))
            facets.push_back(f);
    return SimplicialComplex::from_facets(std::max(A.ground_size(), B.ground_size()),
                                          std::move(facets));
}

/// Skeleton formulation of admissibility:
/// (lk(u) ∩ lk(v))_{dim K - 2} = lk({u,v}).
inline bool skeleton_link_equality(const SimplicialComplex& K, Vertex u, Vertex v)
{
    if (!K.has_vertex(u) || !K.has_vertex(v))
        throw VertexMissing("skeleton_link_equality: both endpoints must be vertices");
    if (!K.has_face({std::min(u, v), std::max(u, v)}))
        return false;
    SimplicialComplex inter = complex_intersection(link(K, {u}), link(K, {v}));
    SimplicialComplex lhs = skeleton(inter, K.dim() - 2);
    SimplicialComplex rhs = link(K, {std::min(u, v), std::max(u, v)});
    return lhs == rhs;
}

/// Full Link Condition: lk(u) ∩ lk(v) = lk({u,v}).
inline bool satisfies_link_condition(const SimplicialComplex& K, Vertex u, Vertex v)
{
    if (!K.has_vertex(u) || !K.has_vertex(v))
        throw VertexMissing("satisfies_link_condition: both endpoints must be vertices");
    if (!K.has_face({std::min(u, v), std::max(u, v)}))
        return false;
    SimplicialComplex inter = complex_intersection(link(K, {u}), link(K, {v}));
    return inter == link(K, {std::min(u, v), std::max(u, v)});
}

// ---------------------------------------------------------------------------
// isomorphism-invariant encodings
// ---------------------------------------------------------------------------

namespace detail {

inline std::string encode_facets(const std::vector<Face>& facets)
{
    std::vector<Face> sorted = facets;
    std::sort(sorted.begin(), sorted.end(), FaceLess{});
    std::string s;
    for (const auto& f : sorted) {
        for (Vertex v : f) {
            s += static_cast<char>('a' + (v - 1) / 26);
            s += static_cast<char>('a' + (v - 1) % 26);
        }
        s += '|';
    }
    return s;
}

/// Deterministic vertex invariant: per-size face-degree profile, refined
/// by the sorted profiles of co-face partners.
inline std::vector<std::string> vertex_invariants(const SimplicialComplex& K,
                                                  const std::vector<Vertex>& verts)
{
    std::map<Vertex, std::string> inv;
    for (Vertex v : verts) {
        std::string s;
        for (int k = 1; k <= K.dim() + 1; ++k) {
            int cnt = 0;
            for (const auto& f : K.faces_of_size(k))
                if (std::binary_search(f.begin(), f.end(), v))
                    ++cnt;
            s += std::to_string(cnt) + ",";
        }
        inv[v] = s;
    }
    for (int round = 0; round < 2; ++round) {
        std::map<Vertex, std::string> next;
        for (Vertex v : verts) {
            std::vector<std::string> partners;
            for (const auto& e : K.faces_of_size(2))
                if (e[0] == v)
                    partners.push_back(inv[e[1]]);
                else if (e[1] == v)
                    partners.push_back(inv[e[0]]);
            std::sort(partners.begin(), partners.end());
            std::string s = inv[v] + "/";
            for (const auto& p : partners)
                s += p + ";";
            next[v] = std::move(s);
        }
        for (Vertex v : verts)
            inv[v] = next[v];
    }
    std::vector<std::string> out;
    for (Vertex v : verts)
        out.push_back(inv[v]);
    return out;
}

} // namespace detail

/**
 * Isomorphism-invariant encoding: vertices are partitioned by a refined
 * degree invariant and the minimum facet encoding over all class-respecting
 * relabelings is taken.  When the class product exceeds the cap the exact
 * labeled encoding is returned under a distinct prefix (still a
 * deterministic function of the complex, so memo keys stay sound).
 */
inline std::string canonical_encoding(const SimplicialComplex& K,
                                      std::size_t perm_cap = 20000)
{
    auto verts = K.vertices();
    if (verts.empty())
        return "E:"; // the complex {∅}
    auto inv = detail::vertex_invariants(K, verts);
    // group vertices by invariant
    std::map<std::string, std::vector<Vertex>> classes;
    for (std::size_t i = 0; i < verts.size(); ++i)
        classes[inv[i]].push_back(verts[i]);
    std::size_t product = 1;
    for (auto& [key, cls] : classes) {
        for (std::size_t t = 2; t <= cls.size(); ++t) {
            product *= t;
            if (product > perm_cap)
                break;
        }
        if (product > perm_cap)
            break;
    }
    if (product > perm_cap)
        return "L:" + detail::encode_facets(SimplicialComplex::from_facets(
                                                K.ground_size(), K.facets())
                                                .facets());
    // assign label ranges per class in invariant order, enumerate
    // permutations inside each class, take the minimal encoding
    std::vector<std::vector<Vertex>> cls_list;
    for (auto& [key, cls] : classes)
        cls_list.push_back(cls);
    std::vector<int> base(1, 1);
    for (std::size_t i = 0; i + 1 < cls_list.size(); ++i)
        base.push_back(base.back() + static_cast<int>(cls_list[i].size()));
    std::string best;
    std::vector<std::vector<Vertex>> perms = cls_list;
    std::function<void(std::size_t, std::map<Vertex, Vertex>&)> rec =
        [&](std::size_t ci, std::map<Vertex, Vertex>& assign) {
            if (ci == cls_list.size()) {
                std::vector<Face> relabeled;
                for (const auto& f : K.facets()) {
                    Face g;
                    for (Vertex v : f)
                        g.push_back(assign[v]);
                    std::sort(g.begin(), g.end());
                    relabeled.push_back(std::move(g));
                }
                std::string enc = detail::encode_facets(relabeled);
                if (best.empty() || enc < best)
                    best = std::move(enc);
                return;
            }
            std::vector<Vertex>& perm = perms[ci];
            std::sort(perm.begin(), perm.end());
            do {
                for (std::size_t j = 0; j < perm.size(); ++j)
                    assign[perm[j]] = base[ci] + static_cast<int>(j);
                rec(ci + 1, assign);
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
    std::map<Vertex, Vertex> assign;
    rec(0, assign);
    return "C:" + best;
}

// ---------------------------------------------------------------------------
// minor witnesses and search
// ---------------------------------------------------------------------------

struct MinorStep {
    enum class Kind { DeleteFacet, Contract };
    Kind kind = Kind::DeleteFacet;
    Face facet;       ///< for DeleteFacet
    Vertex u = 0, v = 0; ///< for Contract: u ↦ v
};

struct MinorWitness {
    std::vector<MinorStep> steps;
    std::size_t start_hash = 0;
    std::size_t end_hash = 0;
};

/// Remove exactly one facet (its proper subfaces stay).
inline SimplicialComplex delete_facet(const SimplicialComplex& K, const Face& f)
{
    auto it = std::find(K.facets().begin(), K.facets().end(), f);
    if (it == K.facets().end())
        throw NotAFacet("delete_facet: " + face_to_string(f));
    std::vector<Face> facets;
    for (const auto& g : K.facets())
        if (g != f)
            facets.push_back(g);
    for (Vertex x : f)
        facets.push_back(face_without(f, x));
    return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

/// Replay a witness; every contract step must be admissible at its time.
inline SimplicialComplex replay_witness(const SimplicialComplex& K, const MinorWitness& w)
{
    SimplicialComplex cur = K;
    for (const auto& s : w.steps) {
        if (s.kind == MinorStep::Kind::DeleteFacet) {
            cur = delete_facet(cur, s.facet);
        } else {
            if (!is_admissible(cur, s.u, s.v))
                throw NotAdmissible("replay_witness: inadmissible contraction");
            cur = contract(cur, s.u, s.v);
        }
    }
    return cur;
}

struct MinorSearchResult {
    std::optional<MinorWitness> witness;
    bool exhaustive = true; ///< false only when the budget truncated the search
    std::size_t expanded = 0;
};

namespace detail {

enum class SearchOutcome { Found, NoComplete, NoIncomplete };

struct MinorSearcher {
    std::string target_enc;
    std::vector<std::int64_t> target_f;
    std::size_t budget;
    std::size_t expanded = 0;
    std::unordered_map<std::string, bool> failed; // enc -> complete "no"
    std::vector<MinorStep> path;

    SearchOutcome dfs(const SimplicialComplex& S)
    {
        std::string enc = canonical_encoding(S);
        if (enc == target_enc)
            return SearchOutcome::Found;
        auto it = failed.find(enc);
        if (it != failed.end())
            return SearchOutcome::NoComplete;
        // f-vector domination prune: minors never gain faces
        auto fs = S.f_vector();
        if (fs.size() < target_f.size())
            return SearchOutcome::NoComplete;
        for (std::size_t i = 0; i < target_f.size(); ++i)
            if (fs[i] < target_f[i]) {
                failed.emplace(enc, true);
                return SearchOutcome::NoComplete;
            }
        if (++expanded > budget)
            return SearchOutcome::NoIncomplete;
        bool complete = true;
        // contractions first: they shrink the vertex count fast
        auto verts = S.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                Vertex v = verts[i], u = verts[j]; // contract larger into smaller
                if (!is_admissible(S, u, v))
                    continue;
                path.push_back({MinorStep::Kind::Contract, {}, u, v});
                SearchOutcome r = dfs(contract(S, u, v));
                if (r == SearchOutcome::Found)
                    return r;
                path.pop_back();
                if (r == SearchOutcome::NoIncomplete)
                    complete = false;
            }
        for (const auto& f : S.facets()) {
            path.push_back({MinorStep::Kind::DeleteFacet, f, 0, 0});
            SearchOutcome r = dfs(delete_facet(S, f));
            if (r == SearchOutcome::Found)
                return r;
            path.pop_back();
            if (r == SearchOutcome::NoIncomplete)
                complete = false;
        }
        if (complete)
            failed.emplace(std::move(enc), true);
        return complete ? SearchOutcome::NoComplete : SearchOutcome::NoIncomplete;
    }
};

} // namespace detail

/**
 * Depth-first minor search: facet deletions and admissible contractions,
 * target matched up to isomorphism.  A "no" with exhaustive=true is
 * definitive; with exhaustive=false only budget exhaustion is claimed.
 */
inline MinorSearchResult is_minor(const SimplicialComplex& H, const SimplicialComplex& K,
                                  std::size_t budget = 200000)
{
    detail::MinorSearcher s;
    s.target_enc = canonical_encoding(H);
    s.target_f = H.f_vector();
    s.budget = budget;
    auto outcome = s.dfs(K);
    MinorSearchResult res;
    res.expanded = s.expanded;
    if (outcome == detail::SearchOutcome::Found) {
        MinorWitness w;
        w.steps = s.path;
        w.start_hash = std::hash<std::string>{}(canonical_encoding(K));
        w.end_hash = std::hash<std::string>{}(s.target_enc);
        res.witness = std::move(w);
    }
    res.exhaustive = outcome != detail::SearchOutcome::NoIncomplete;
    return res;
}

// ---------------------------------------------------------------------------
// clique minors in graphs
// ---------------------------------------------------------------------------

namespace detail {

/// Does G (as 1-complex) contain a complete subgraph on r of the given
/// vertices?  Returns the clique if found.
inline std::optional<std::vector<Vertex>> find_clique(const SimplicialComplex& G, int r)
{
    auto verts = G.vertices();
    if (static_cast<int>(verts.size()) < r)
        return std::nullopt;
    if (r == 1)
        return std::vector<Vertex>{verts[0]};
    for (const auto& W : k_subsets(verts, r)) {
        bool ok = true;
        for (std::size_t i = 0; i < W.size() && ok; ++i)
            for (std::size_t j = i + 1; j < W.size(); ++j)
                if (!G.has_face({W[i], W[j]})) {
                    ok = false;
                    break;
                }
        if (ok)
            return W;
    }
    return std::nullopt;
}

struct CliqueSearcher {
    int r;
    std::size_t budget;
    std::size_t expanded = 0;
    std::unordered_map<std::string, bool> failed;
    std::vector<MinorStep> path;

    SearchOutcome dfs(const SimplicialComplex& G)
    {
        auto verts = G.vertices();
        if (static_cast<int>(verts.size()) < r)
            return SearchOutcome::NoComplete;
        std::int64_t e = static_cast<std::int64_t>(G.faces_of_size(2).size());
        if (e < binomial(r, 2))
            return SearchOutcome::NoComplete;
        if (auto W = find_clique(G, r)) {
            // clean up: drop edges outside the clique, then stray vertices
            SimplicialComplex cur = G;
            for (;;) {
                bool changed = false;
                for (const auto& f : cur.facets()) {
                    bool inside = true;
                    for (Vertex x : f)
                        if (!std::binary_search(W->begin(), W->end(), x))
                            inside = false;
                    if (!inside) {
                        path.push_back({MinorStep::Kind::DeleteFacet, f, 0, 0});
                        cur = delete_facet(cur, f);
                        changed = true;
                        break;
                    }
                }
                if (!changed)
                    break;
            }
            return SearchOutcome::Found;
        }
        std::string enc = canonical_encoding(G);
        if (failed.count(enc))
            return SearchOutcome::NoComplete;
        if (++expanded > budget)
            return SearchOutcome::NoIncomplete;
        // branch on one edge: either it is contracted or deleted
        Face edge = G.faces_of_size(2).front();
        bool complete = true;
        {
            path.push_back({MinorStep::Kind::Contract, {}, edge[1], edge[0]});
            SearchOutcome res = dfs(contract(G, edge[1], edge[0]));
            if (res == SearchOutcome::Found)
                return res;
            path.pop_back();
            if (res == SearchOutcome::NoIncomplete)
                complete = false;
        }
        {
            path.push_back({MinorStep::Kind::DeleteFacet, edge, 0, 0});
            SearchOutcome res = dfs(delete_facet(G, edge));
            if (res == SearchOutcome::Found)
                return res;
            path.pop_back();
            if (res == SearchOutcome::NoIncomplete)
                complete = false;
        }
        if (complete)
            failed.emplace(std::move(enc), true);
        return complete ? SearchOutcome::NoComplete : SearchOutcome::NoIncomplete;
    }
};

} // namespace detail

/// Branch-and-reduce search for a K_r minor in a graph, 2 ≤ r ≤ 7.
inline MinorSearchResult has_clique_minor(const SimplicialComplex& G, int r,
                                          std::size_t budget = 2000000)
{
    if (G.dim() > 1)
        throw BadParameters("has_clique_minor: input must be a graph");
    if (r < 2 || r > 7)
        throw BadParameters("has_clique_minor: 2 <= r <= 7");
    detail::CliqueSearcher s;
    s.r = r;
    s.budget = budget;
    auto outcome = s.dfs(G);
    MinorSearchResult res;
    res.expanded = s.expanded;
    if (outcome == detail::SearchOutcome::Found) {
        MinorWitness w;
        w.steps = s.path;
        w.start_hash = std::hash<std::string>{}(canonical_encoding(G));
        w.end_hash = std::hash<std::string>{}(canonical_encoding(complete_graph(r)));
        res.witness = std::move(w);
    }
    res.exhaustive = outcome != detail::SearchOutcome::NoIncomplete;
    return res;
}

// ---------------------------------------------------------------------------
// strongly edge decomposable complexes
// ---------------------------------------------------------------------------

struct SedResult {
    bool decomposable = false;
    bool exhaustive = true;
    /// contraction spine: (facet-encoding of the complex, contracted edge)
    std::vector<std::pair<std::string, Face>> trace;
};

namespace detail {

inline bool is_boundary_of_simplex(const SimplicialComplex& K)
{
    auto verts = K.vertices();
    if (verts.empty())
        return true; // {∅} = ∂σ^0
    int m = static_cast<int>(verts.size());
    if (m == 1)
        return false;
    return K.facets() == k_subsets(verts, m - 1);
}

struct SedSearcher {
    std::size_t budget;
    std::size_t expanded = 0;
    std::unordered_map<std::string, int> memo; // 1 yes, 0 no
    bool truncated = false;

    bool run(const SimplicialComplex& K, std::vector<std::pair<std::string, Face>>* trace)
    {
        if (is_boundary_of_simplex(K))
            return true;
        std::string enc = canonical_encoding(K);
        auto it = memo.find(enc);
        if (it != memo.end())
            return it->second == 1;
        if (++expanded > budget) {
            truncated = true;
            return false;
        }
        for (const auto& e : K.faces_of_size(2)) {
            if (!satisfies_link_condition(K, e[0], e[1]))
                continue;
            SimplicialComplex L = compactify(link(K, e));
            SimplicialComplex C = contract(K, e[1], e[0]);
            std::vector<std::pair<std::string, Face>> sub;
            if (run(L, nullptr) && run(C, trace ? &sub : nullptr)) {
                if (trace) {
                    trace->push_back({detail::encode_facets(K.facets()), e});
                    trace->insert(trace->end(), sub.begin(), sub.end());
                }
                memo[enc] = 1;
                return true;
            }
        }
        if (!truncated)
            memo[enc] = 0;
        return false;
    }
};

} // namespace detail

/**
 * Recursive search for a strongly-edge-decomposable structure: an edge
 * satisfying the Link Condition whose link and contraction are both
 * recursively decomposable; boundaries of simplices are the base case.
 */
inline SedResult is_strongly_edge_decomposable(const SimplicialComplex& K,
                                               std::size_t budget = 100000)
{
    for (const auto& f : K.facets())
        if (static_cast<int>(f.size()) != K.dim() + 1)
            throw BadParameters("is_strongly_edge_decomposable: complex must be pure");
    detail::SedSearcher s;
    s.budget = budget;
    SedResult res;
    std::vector<std::pair<std::string, Face>> trace;
    res.decomposable = s.run(K, &trace);
    res.exhaustive = !s.truncated;
    res.trace = std::move(trace);
    return res;
}

} // namespace shiftlab

#endif
