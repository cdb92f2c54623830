#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <shiftlab/complex.hpp>
#include <shiftlab/families.hpp>

using namespace shiftlab;
using namespace testsupport;

TEST_CASE("from_facets canonicalizes")
{
    auto K = SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(K == boundary_simplex(2));
    CHECK(K.f_vector() == std::vector<std::int64_t>{1, 3, 3});

    auto pruned = SimplicialComplex::from_facets(4, {{1, 2, 3}, {1, 2}});
    CHECK(pruned.facets() == std::vector<Face>{{1, 2, 3}});

    auto empty_face = SimplicialComplex::from_facets(3, {{}});
    CHECK(empty_face.dim() == -1);
    CHECK(empty_face.f_vector() == std::vector<std::int64_t>{1});

    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1, 4}}), VertexOutOfRange);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{2, 2}}), UnsortableFace);
}

TEST_CASE("closure: every subset of a face is a face")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto K = random_complex(seed, 7);
        auto oracle = brute_force_faces(K.facets());
        std::set<Face> got;
        for (int k = 0; k <= K.dim() + 1; ++k)
            for (const auto& f : K.faces_of_size(k))
                got.insert(f);
        CHECK(got == oracle);
        for (const auto& f : oracle)
            CHECK(K.has_face(f));
    }
}

TEST_CASE("link, closed star, antistar")
{
    auto B3 = boundary_simplex(3);
    auto lk1 = link(B3, {1});
    CHECK(lk1.facets() == std::vector<Face>{{2, 3}, {2, 4}, {3, 4}});

    auto C4 = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    auto path = antistar(C4, {1});
    CHECK(path.facets() == std::vector<Face>{{2, 3}, {3, 4}});

    // closed star of a vertex of the octahedron is the cone over a 4-cycle
    auto oct = octahedron();
    auto st = closed_star(oct, {1});
    auto expected = SimplicialComplex::from_facets(
        6, {{1, 2, 3}, {1, 2, 6}, {1, 3, 5}, {1, 5, 6}});
    CHECK(st == expected);

    CHECK_THROWS_AS(link(C4, {1, 3}), FaceNotInComplex);
}

TEST_CASE("join, cone, suspension, disjoint union")
{
    auto two = two_points();
    auto C4 = join(two, two);
    CHECK(C4.f_vector() == std::vector<std::int64_t>{1, 4, 4});
    CHECK(C4.has_face({1, 3}));
    CHECK_FALSE(C4.has_face({1, 2}));

    auto pt = cone(SimplicialComplex::from_facets(0, {}));
    CHECK(pt.f_vector() == std::vector<std::int64_t>{1, 1});

    // f-polynomial multiplies under join
    for (std::uint64_t seed = 3; seed <= 10; ++seed) {
        auto K = random_complex(seed, 5, 4, 3);
        auto L = random_complex(seed + 100, 6, 4, 3);
        auto J = join(K, L);
        auto fK = K.f_vector(), fL = L.f_vector(), fJ = J.f_vector();
        std::vector<std::int64_t> prod(fK.size() + fL.size() - 1, 0);
        for (std::size_t i = 0; i < fK.size(); ++i)
            for (std::size_t j = 0; j < fL.size(); ++j)
                prod[i + j] += fK[i] * fL[j];
        while (prod.size() > fJ.size())
            prod.pop_back();
        CHECK(fJ == prod);
    }

    auto D = disjoint_union(two_points(), two_points());
    CHECK(D.f_vector() == std::vector<std::int64_t>{1, 4});
}

TEST_CASE("f, h, g vectors")
{
    auto B3 = boundary_simplex(3);
    CHECK(B3.f_vector() == std::vector<std::int64_t>{1, 4, 6, 4});
    CHECK(B3.h_vector() == std::vector<std::int64_t>{1, 1, 1, 1});

    auto oct = octahedron();
    CHECK(oct.f_vector() == std::vector<std::int64_t>{1, 6, 12, 8});
    CHECK(oct.h_vector() == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK(oct.g_vector() == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("h-polynomial identity at integer points")
{
    // (1+t)^d h(K, 1/(1+t)) = t^d f(K, 1/t):
    // sum_i h_i (1+t)^{d-i} == sum_i f_{i-1} t^{d-i} for t = 1, 2, 3
    for (std::uint64_t seed = 11; seed <= 25; ++seed) {
        auto K = random_complex(seed, 6);
        auto f = K.f_vector();
        auto h = K.h_vector();
        int d = K.dim() + 1;
        for (std::int64_t t = 1; t <= 3; ++t) {
            std::int64_t lhs = 0, rhs = 0;
            auto ipow = [](std::int64_t b, int e) {
                std::int64_t r = 1;
                while (e-- > 0)
                    r *= b;
                return r;
            };
            for (int i = 0; i <= d; ++i) {
                lhs += h[static_cast<std::size_t>(i)] * ipow(1 + t, d - i);
                rhs += f[static_cast<std::size_t>(i)] * ipow(t, d - i);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Dehn-Sommerville symmetry for spheres")
{
    for (const auto& K : {boundary_simplex(3), boundary_simplex(4), octahedron(),
                          cyclic_boundary(3, 7), stacked_sphere(3, 8)}) {
        auto h = K.h_vector();
        for (std::size_t i = 0; i < h.size(); ++i)
            CHECK(h[i] == h[h.size() - 1 - i]);
    }
}

TEST_CASE("is_shifted")
{
    CHECK(is_shifted(boundary_simplex(2)));
    auto C4 = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK_FALSE(is_shifted(C4));
    // a span under the product order is shifted
    auto S = span_complex(6, {{1, 3, 6}, {2, 3, 4}});
    CHECK(is_shifted(S));
}

TEST_CASE("lexicographic comparison of complexes")
{
    auto A = SimplicialComplex::from_facets(3, {{1, 2}});
    auto B = SimplicialComplex::from_facets(3, {{1, 3}});
    CHECK(lex_compare_complexes(A, B) == LexOrder::KFirst);
    CHECK(lex_compare_complexes(B, A) == LexOrder::LFirst);
    CHECK(lex_compare_complexes(A, A) == LexOrder::Equal);
}

TEST_CASE("relabel and compactify")
{
    auto K = SimplicialComplex::from_facets(5, {{2, 4}, {4, 5}});
    auto C = compactify(K);
    CHECK(C.ground_size() == 3);
    CHECK(C.facets() == std::vector<Face>{{1, 2}, {2, 3}});
}
