#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <shiftlab/io.hpp>

using namespace shiftlab;
using namespace testsupport;

TEST_CASE("facet-list parsing")
{
    auto K = parse_facet_list("n=4\n1 2\n2 3\n\n3 4\n1 4\n");
    CHECK(K.ground_size() == 4);
    CHECK(K.faces_of_size(2).size() == 4);

    // without the pin, the ground set is the largest label
    auto L = parse_facet_list("1 2 3\n");
    CHECK(L.ground_size() == 3);
    CHECK(L.dim() == 2);

    CHECK_THROWS_AS(parse_facet_list("1 x 3\n"), ParseError);
    CHECK_THROWS_AS(parse_facet_list("n=2\n1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_facet_list("0 1\n"), ParseError);
}

TEST_CASE("round trips through both formats")
{
    for (std::uint64_t seed = 500; seed < 512; ++seed) {
        auto K = random_complex(seed, 7);
        CHECK(parse_facet_list(to_facet_list(K)) == K);
        CHECK(complex_from_json(complex_to_json(K)) == K);
        CHECK(parse_complex(complex_to_json(K).dump()) == K);
        CHECK(parse_complex(to_facet_list(K)) == K);
    }
}

TEST_CASE("json shape errors")
{
    CHECK_THROWS_AS(complex_from_json(nlohmann::json{{"facets", {{1, 2}}}}), ParseError);
    CHECK_THROWS_AS(complex_from_json(nlohmann::json{{"n", 2}, {"facets", {{1, 3}}}}),
                    ParseError);
}
