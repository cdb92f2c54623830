/**
 * Shared helpers for the test suites: seeded generators and independent
 * brute-force oracles kept apart from the library implementation paths.
 */

#ifndef SHIFTLAB_TESTS_SUPPORT_HPP
#define SHIFTLAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <set>
#include <vector>

#include <shiftlab/complex.hpp>
#include <shiftlab/families.hpp>
#include <shiftlab/prng.hpp>

namespace testsupport {

using namespace shiftlab;

/// Random complex: a handful of random facets with sizes in [1, max_size].
inline SimplicialComplex random_complex(std::uint64_t seed, int n, int max_facets = 5,
                                        int max_size = 4)
{
    SplitMix64 rng(seed);
    std::vector<Face> facets;
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_facets)));
    for (int t = 0; t < count; ++t) {
        int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                        std::min(max_size, n))));
        std::set<Vertex> s;
        while (static_cast<int>(s.size()) < k)
            s.insert(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        facets.emplace_back(s.begin(), s.end());
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

/// Random graph G(n, p≈half) as a 1-complex with all vertices present.
inline SimplicialComplex random_graph(std::uint64_t seed, int n, int percent = 50)
{
    SplitMix64 rng(seed);
    std::vector<Face> facets;
    for (Vertex v = 1; v <= n; ++v)
        facets.push_back({v});
    for (Vertex v = 1; v <= n; ++v)
        for (Vertex u = v + 1; u <= n; ++u)
            if (rng.below(100) < static_cast<std::uint64_t>(percent))
                facets.push_back({v, u});
    return SimplicialComplex::from_facets(n, std::move(facets));
}

/// Random triangulated 2-sphere grown from ∂σ³ by stellar subdivisions
/// at random edges or triangles.
inline SimplicialComplex random_planar_triangulation(std::uint64_t seed, int nverts)
{
    SplitMix64 rng(seed);
    SimplicialComplex K = boundary_simplex(3);
    while (K.ground_size() < nverts) {
        bool at_edge = rng.below(2) == 0;
        const auto& pool = K.faces_of_size(at_edge ? 2 : 3);
        const Face& T = pool[rng.below(pool.size())];
        K = stellar_subdivision(K, T);
    }
    return K;
}

/// Closure of the given faces under the product partial order and
/// inclusion (the paper's span).
inline SimplicialComplex span_complex(int n, const std::vector<Face>& gens)
{
    std::vector<Face> out;
    for (const auto& g : gens) {
        for (const auto& T : k_subsets(range_vertices(n), static_cast<int>(g.size())))
            if (dominates(T, g))
                out.push_back(T);
    }
    return SimplicialComplex::from_facets(n, std::move(out));
}

/// Independent face enumeration: all subsets of all facets, via bitmasks.
inline std::set<Face> brute_force_faces(const std::vector<Face>& facets)
{
    std::set<Face> out;
    out.insert(Face{});
    for (const auto& f : facets)
        for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask & (1u << i))
                    sub.push_back(f[i]);
            out.insert(sub);
        }
    return out;
}

} // namespace testsupport

#endif
