/**
 * Generic rigidity of graphs over a seeded prime-field embedding.
 *
 * The rigidity matrix Rig(G,f) is dn × |E|: the column of an edge {v<u}
 * carries the block f(v)−f(u) in v's d rows and f(u)−f(v) in u's rows.
 * Generic d-rigidity compares rank(Rig(G,f)) with rank(Rig(K_V,f)) for the
 * same embedding; stress-freeness asks for a trivial kernel.
 */

#ifndef SHIFTLAB_RIGIDITY_HPP
#define SHIFTLAB_RIGIDITY_HPP

#include "complex.hpp"
#include "families.hpp"
#include "generic.hpp"

namespace shiftlab {

/// Rig(G, f) with the embedding read off the first d rows of the source.
inline FpMatrix rigidity_matrix(const SimplicialComplex& G, int d,
                                const GenericMatrixSource& src)
{
    if (G.dim() > 1)
        throw BadParameters("rigidity_matrix: input must be a graph");
    if (d < 1 || d > src.size())
        throw BadParameters("rigidity_matrix: bad dimension");
    int n = G.ground_size();
    const auto& edges = G.faces_of_size(2);
    const FpMatrix& A = src.matrix();
    const PrimeField& F = src.field();
    FpMatrix M(F, static_cast<std::size_t>(d) * n, edges.size());
    for (std::size_t c = 0; c < edges.size(); ++c) {
        Vertex v = edges[c][0], u = edges[c][1];
        for (int i = 0; i < d; ++i) {
            fp_t fv = A.at(static_cast<std::size_t>(i), static_cast<std::size_t>(v - 1));
            fp_t fu = A.at(static_cast<std::size_t>(i), static_cast<std::size_t>(u - 1));
            M.at(static_cast<std::size_t>(i) * n + (v - 1), c) = F.sub(fv, fu);
            M.at(static_cast<std::size_t>(i) * n + (u - 1), c) = F.sub(fu, fv);
        }
    }
    return M;
}

inline std::int64_t rigidity_rank(const SimplicialComplex& G, int d,
                                  const GenericConfig& cfg = {})
{
    auto run = stable_generic_run(G.ground_size(), cfg, [&](const GenericMatrixSource& src) {
        return static_cast<std::int64_t>(rank(rigidity_matrix(G, d, src)));
    });
    return run.value;
}

/// Rigid iff Rig(G,f) and Rig(K_V,f) have equal rank for the same embedding.
inline bool is_generically_rigid(const SimplicialComplex& G, int d,
                                 const GenericConfig& cfg = {})
{
    int n = G.ground_size();
    auto run = stable_generic_run(n, cfg, [&](const GenericMatrixSource& src) {
        return rank(rigidity_matrix(G, d, src)) ==
               rank(rigidity_matrix(complete_graph(n), d, src));
    });
    return run.value;
}

/// Stress-free iff the rigidity matrix has trivial kernel.
inline bool is_stress_free(const SimplicialComplex& G, int d, const GenericConfig& cfg = {})
{
    auto run = stable_generic_run(G.ground_size(), cfg, [&](const GenericMatrixSource& src) {
        FpMatrix M = rigidity_matrix(G, d, src);
        return rank(M) == M.cols();
    });
    return run.value;
}

inline std::int64_t stress_space_dim(const SimplicialComplex& G, int d,
                                     const GenericConfig& cfg = {})
{
    std::int64_t e = static_cast<std::int64_t>(G.faces_of_size(2).size());
    return e - rigidity_rank(G, d, cfg);
}

} // namespace shiftlab

#endif
