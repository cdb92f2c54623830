#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <shiftlab/binomial.hpp>
#include <shiftlab/minors.hpp>
#include <shiftlab/rigidity.hpp>
#include <shiftlab/shift_symmetric.hpp>

using namespace shiftlab;
using namespace testsupport;

TEST_CASE("ranks of complete-graph rigidity matrices")
{
    // rank(Rig(K_n, d-embedding)) = dn - C(d+1,2) for n >= d+1
    CHECK(rigidity_rank(complete_graph(6), 3) == 12);
    CHECK(rigidity_rank(complete_graph(5), 2) == 7);
    CHECK(rigidity_rank(complete_graph(4), 3) == 6);
}

TEST_CASE("octahedron graph is 3-rigid and 3-stress-free")
{
    auto G = skeleton(octahedron(), 1);
    CHECK(is_generically_rigid(G, 3));
    CHECK(is_stress_free(G, 3));
    CHECK(stress_space_dim(G, 3) == 0);
    // dimension count: stress-free and rigid forces |E| = dn - C(d+1,2)
    CHECK(static_cast<std::int64_t>(G.faces_of_size(2).size()) ==
          3 * 6 - binomial(4, 2));
}

TEST_CASE("K5 carries exactly one 3-stress")
{
    auto K5 = complete_graph(5);
    CHECK(is_generically_rigid(K5, 3));
    CHECK_FALSE(is_stress_free(K5, 3));
    CHECK(stress_space_dim(K5, 3) == 1);
}

TEST_CASE("empty graph on two vertices")
{
    auto G = SimplicialComplex::from_facets(2, {{1}, {2}});
    CHECK_FALSE(is_generically_rigid(G, 1));
    CHECK(is_stress_free(G, 1));
}

TEST_CASE("gluing two rigid graphs over enough vertices")
{
    // two K5's sharing 3 vertices: union is 3-rigid (Asimov-Roth)
    std::vector<Face> facets;
    for (const auto& e : complete_graph(5).faces_of_size(2))
        facets.push_back(e);
    // second K5 on {3,4,5,6,7}
    for (Vertex v = 3; v <= 7; ++v)
        for (Vertex u = v + 1; u <= 7; ++u)
            facets.push_back({v, u});
    auto G = SimplicialComplex::from_facets(7, facets);
    CHECK(is_generically_rigid(G, 3));
}

TEST_CASE("Whiteley contraction on planar triangulations")
{
    for (std::uint64_t seed = 300; seed < 306; ++seed) {
        auto K = random_planar_triangulation(seed, 7 + static_cast<int>(seed % 3));
        auto G = skeleton(K, 1);
        // find an edge with at least d-1 = 2 common neighbors (any edge of
        // the triangulated sphere has exactly two facets containing it)
        Face edge = K.faces_of_size(2).front();
        auto Gp = compactify(contract(G, edge[1], edge[0]));
        if (is_generically_rigid(Gp, 3))
            CHECK(is_generically_rigid(G, 3));
    }
}

TEST_CASE("Lee cross-check agreement on random graphs")
{
    for (std::uint64_t seed = 310; seed < 318; ++seed)
        for (int d : {2, 3}) {
            auto G = random_graph(seed, 5 + static_cast<int>(seed % 2));
            auto rep = lee_crosscheck(G, d);
            INFO("seed " << seed << " d " << d);
            CHECK(rep.agree);
        }
}

TEST_CASE("minor-theorem instances: shifted edge forces a clique minor")
{
    for (std::uint64_t seed = 320; seed < 326; ++seed) {
        auto G = random_graph(seed, 7);
        for (int r : {4, 5}) {
            bool hit_e = exterior_shift(G).shifted.has_face({r - 1, r});
            bool hit_s = symmetric_shift(G).shifted.has_face({r - 1, r});
            if (hit_e || hit_s) {
                auto res = has_clique_minor(G, r);
                REQUIRE(res.exhaustive);
                CHECK(res.witness.has_value());
            }
        }
    }
}

TEST_CASE("Mader bound respected by sampled minor-free graphs")
{
    for (std::uint64_t seed = 330; seed < 338; ++seed) {
        auto G = random_graph(seed, 7, 40);
        std::int64_t n = G.ground_size();
        std::int64_t e = static_cast<std::int64_t>(G.faces_of_size(2).size());
        for (int r = 4; r <= 7; ++r) {
            auto res = has_clique_minor(G, r);
            if (res.exhaustive && !res.witness)
                CHECK(e <= (r - 2) * n - binomial(r - 1, 2));
        }
    }
}
