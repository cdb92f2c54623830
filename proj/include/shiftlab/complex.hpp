/**
 * Canonical simplicial-complex data model.
 *
 * A complex lives on the ground set [n] = {1..n}, is stored by its facets
 * (inclusion-maximal faces), and always contains the empty face.  Values
 * are immutable after construction; the full face list is precomputed, so
 * instances are safe to share read-only across threads.
 */

#ifndef SHIFTLAB_COMPLEX_HPP
#define SHIFTLAB_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "errors.hpp"

namespace shiftlab {

using Vertex = int;
using Face = std::vector<Vertex>; ///< strictly increasing vertex list

inline std::string face_to_string(const Face& f)
{
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(f[i]);
    }
    return s + "}";
}

/// (size, then lex) — the canonical order on faces used throughout.
struct FaceLess {
    bool operator()(const Face& a, const Face& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// Lexicographic order <_L on equal-size sets: S <_L T iff min(S △ T) ∈ S.
/// On strictly increasing vertex lists this is plain sequence comparison.
inline bool lex_less(const Face& a, const Face& b)
{
    return a < b;
}

/// Product partial order: S ≤_P T componentwise (equal sizes only).
inline bool dominates(const Face& small, const Face& big)
{
    if (small.size() != big.size())
        return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i])
            return false;
    return true;
}

inline bool is_subset(const Face& a, const Face& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool faces_disjoint(const Face& a, const Face& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

inline Face face_union(const Face& a, const Face& b)
{
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_minus(const Face& a, const Face& b)
{
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_without(const Face& a, Vertex v)
{
    Face out;
    out.reserve(a.size());
    for (Vertex x : a)
        if (x != v)
            out.push_back(x);
    return out;
}

class SimplicialComplex {
  public:
    SimplicialComplex() : n_(0) { rebuild({}); }

    /**
     * Build from a facet list.  Repeated vertices in a face raise
     * UnsortableFace; labels outside 1..n raise VertexOutOfRange.
     * Contained and duplicate facets are dropped.  No facets (or only the
     * empty facet) gives the complex {∅}.
     */
    static SimplicialComplex from_facets(int n, std::vector<Face> facets)
    {
        if (n < 0)
            throw BadParameters("ground set size must be nonnegative");
        for (auto& f : facets) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw UnsortableFace("face has a repeated vertex: " + face_to_string(f));
            for (Vertex v : f)
                if (v < 1 || v > n)
                    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 1.." +
                                           std::to_string(n));
        }
        SimplicialComplex K;
        K.n_ = n;
        K.rebuild(std::move(facets));
        return K;
    }

    int ground_size() const { return n_; }
    int dim() const { return dim_; }

    const std::vector<Face>& facets() const { return facets_; }

    /// Faces of size k (dimension k-1); k = 0 gives {∅}.
    const std::vector<Face>& faces_of_size(int k) const
    {
        static const std::vector<Face> kEmpty;
        if (k < 0 || k > dim_ + 1)
            return kEmpty;
        return faces_[static_cast<std::size_t>(k)];
    }

    std::vector<Face> all_faces() const
    {
        std::vector<Face> out;
        for (const auto& level : faces_)
            out.insert(out.end(), level.begin(), level.end());
        return out;
    }

    bool has_face(const Face& f) const { return face_set_.count(f) != 0; }

    bool has_vertex(Vertex v) const { return has_face({v}); }

    /// Vertices actually used by faces (may be a proper subset of [n]).
    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        for (const auto& f : faces_of_size(1))
            out.push_back(f[0]);
        return out;
    }

    std::int64_t f(int i) const
    {
        if (i < -1 || i > dim_)
            return 0;
        return static_cast<std::int64_t>(faces_[static_cast<std::size_t>(i + 1)].size());
    }

    /// (f_{-1}, f_0, ..., f_{dim}).
    std::vector<std::int64_t> f_vector() const
    {
        std::vector<std::int64_t> out;
        for (int i = -1; i <= dim_; ++i)
            out.push_back(f(i));
        return out;
    }

    /// h_k = Σ_{i≤k} (-1)^{k-i} C(d-i, k-i) f_{i-1}, d = dim+1.
    std::vector<std::int64_t> h_vector() const
    {
        int d = dim_ + 1;
        std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
        for (int k = 0; k <= d; ++k)
            for (int i = 0; i <= k; ++i) {
                std::int64_t term = binomial(d - i, k - i) * f(i - 1);
                h[static_cast<std::size_t>(k)] += ((k - i) % 2 == 0) ? term : -term;
            }
        return h;
    }

    /// g_0 = 1, g_i = h_i - h_{i-1} for 1 <= i <= floor(d/2).
    std::vector<std::int64_t> g_vector() const
    {
        if (dim_ < 0)
            throw BadParameters("g_vector needs dim >= 0");
        auto h = h_vector();
        int d = dim_ + 1;
        std::vector<std::int64_t> g{1};
        for (int i = 1; i <= d / 2; ++i)
            g.push_back(h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(i - 1)]);
        return g;
    }

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

  private:
    void rebuild(std::vector<Face> raw)
    {
        // drop duplicates and contained facets
        std::set<Face, FaceLess> uniq(raw.begin(), raw.end());
        facets_.clear();
        for (const auto& f : uniq) {
            bool contained = false;
            for (const auto& g : uniq)
                if (f != g && is_subset(f, g)) {
                    contained = true;
                    break;
                }
            if (!contained)
                facets_.push_back(f);
        }
        dim_ = -1;
        for (const auto& f : facets_)
            dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
        // full face set, closed under inclusion, empty face always present
        face_set_.clear();
        face_set_.insert(Face{});
        for (const auto& f : facets_) {
            std::size_t k = f.size();
            for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
                Face sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1ULL << i))
                        sub.push_back(f[i]);
                face_set_.insert(std::move(sub));
            }
        }
        faces_.assign(static_cast<std::size_t>(dim_ + 2), {});
        for (const auto& f : face_set_)
            faces_[f.size()].push_back(f);
        for (auto& level : faces_)
            std::sort(level.begin(), level.end());
    }

    int n_ = 0;
    int dim_ = -1;
    std::vector<Face> facets_;
    std::vector<std::vector<Face>> faces_; ///< by size 0..dim+1, lex sorted
    std::set<Face> face_set_;
};

// ---------------------------------------------------------------------------
// basic constructions
// ---------------------------------------------------------------------------

/// lk(F, K) = {T ∈ K : T ∩ F = ∅, T ∪ F ∈ K}; keeps original labels.
inline SimplicialComplex link(const SimplicialComplex& K, const Face& F)
{
    if (!K.has_face(F))
        throw FaceNotInComplex("link: " + face_to_string(F));
    std::vector<Face> facets;
    for (const auto& G : K.facets())
        if (is_subset(F, G))
            facets.push_back(face_minus(G, F));
    return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

/// Closed star: {T ∈ K : T ∪ F ∈ K}.
inline SimplicialComplex closed_star(const SimplicialComplex& K, const Face& F)
{
    if (!K.has_face(F))
        throw FaceNotInComplex("closed_star: " + face_to_string(F));
    std::vector<Face> facets;
    for (const auto& G : K.facets())
        if (is_subset(F, G))
            facets.push_back(G);
    return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

/// Antistar: {T ∈ K : T ∩ F = ∅}; antistar(K,{v}) = K \ v.
inline SimplicialComplex antistar(const SimplicialComplex& K, const Face& F)
{
    std::vector<Face> facets;
    for (const auto& G : K.facets()) {
        Face g = face_minus(G, F);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(K.ground_size(), std::move(facets));
}

/// Join with L relabeled onto n_K+1 .. n_K+n_L.
inline SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L)
{
    int shift = K.ground_size();
    std::vector<Face> facets;
    for (const auto& f : K.facets())
        for (const auto& g : L.facets()) {
            Face h = f;
            for (Vertex v : g)
                h.push_back(v + shift);
            std::sort(h.begin(), h.end());
            facets.push_back(std::move(h));
        }
    return SimplicialComplex::from_facets(K.ground_size() + L.ground_size(),
                                          std::move(facets));
}

inline SimplicialComplex single_point()
{
    return SimplicialComplex::from_facets(1, {{1}});
}

inline SimplicialComplex two_points()
{
    return SimplicialComplex::from_facets(2, {{1}, {2}});
}

/// Cone with apex 1; the base complex is relabeled onto 2..n+1.
inline SimplicialComplex cone(const SimplicialComplex& K)
{
    return join(single_point(), K);
}

/// Suspension: join with two points, poles labeled n+1, n+2.
inline SimplicialComplex suspension(const SimplicialComplex& K)
{
    return join(K, two_points());
}

inline SimplicialComplex disjoint_union(const SimplicialComplex& K,
                                        const SimplicialComplex& L)
{
    int shift = K.ground_size();
    std::vector<Face> facets = K.facets();
    for (const auto& g : L.facets()) {
        Face h;
        for (Vertex v : g)
            h.push_back(v + shift);
        facets.push_back(std::move(h));
    }
    return SimplicialComplex::from_facets(K.ground_size() + L.ground_size(),
                                          std::move(facets));
}

/// Shifted: j ∈ S ∈ K and i < j imply (S \ j) ∪ i ∈ K.
inline bool is_shifted(const SimplicialComplex& K)
{
    for (int k = 1; k <= K.dim() + 1; ++k)
        for (const auto& S : K.faces_of_size(k))
            for (Vertex j : S)
                for (Vertex i = 1; i < j; ++i) {
                    if (std::binary_search(S.begin(), S.end(), i))
                        continue;
                    Face T = face_union(face_without(S, j), Face{i});
                    if (!K.has_face(T))
                        return false;
                }
    return true;
}

enum class LexOrder { KFirst, LFirst, Equal };

/**
 * Lexicographic comparison of complexes: scanning face sizes r = 1, 2, ...
 * in order, the lexicographically first face of the symmetric difference
 * decides.
 */
inline LexOrder lex_compare_complexes(const SimplicialComplex& K,
                                      const SimplicialComplex& L)
{
    int top = std::max(K.dim(), L.dim()) + 1;
    for (int r = 1; r <= top; ++r) {
        const auto& a = K.faces_of_size(r);
        const auto& b = L.faces_of_size(r);
        std::vector<Face> onlyK, onlyL;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(onlyK));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                            std::back_inserter(onlyL));
        if (onlyK.empty() && onlyL.empty())
            continue;
        if (onlyK.empty())
            return LexOrder::LFirst;
        if (onlyL.empty())
            return LexOrder::KFirst;
        return lex_less(onlyK.front(), onlyL.front()) ? LexOrder::KFirst
                                                      : LexOrder::LFirst;
    }
    return LexOrder::Equal;
}

/// Relabel by a (partial) map; unmapped vertices keep their label.
inline SimplicialComplex relabel(const SimplicialComplex& K, int new_n,
                                 const std::vector<std::pair<Vertex, Vertex>>& map)
{
    std::vector<Face> facets;
    for (const auto& f : K.facets()) {
        Face g;
        for (Vertex v : f) {
            Vertex w = v;
            for (auto [a, b] : map)
                if (a == v) {
                    w = b;
                    break;
                }
            g.push_back(w);
        }
        std::sort(g.begin(), g.end());
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(new_n, std::move(facets));
}

/// Compact the used vertices onto 1..m preserving order; m = #vertices.
inline SimplicialComplex compactify(const SimplicialComplex& K)
{
    auto verts = K.vertices();
    std::vector<std::pair<Vertex, Vertex>> map;
    for (std::size_t i = 0; i < verts.size(); ++i)
        map.emplace_back(verts[i], static_cast<Vertex>(i + 1));
    return relabel(K, static_cast<int>(verts.size()), map);
}

} // namespace shiftlab

#endif
