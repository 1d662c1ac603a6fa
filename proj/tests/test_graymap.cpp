#include "doctest.h"
#include "helpers.hpp"
#include "hsd/codeops.hpp"
#include "hsd/graymap.hpp"
#include "hsd/tables.hpp"
#include "hsd/vec.hpp"

using namespace hsd;
using hsdtest::rand_vec;

TEST_CASE("gray map values") {
    // (u, 1): a = (0,1), b = (1,0) -> (b | a+b) = (1,0,1,1)
    CHECK(gray_map(std::vector<uint8_t>{4, 1}) == std::vector<uint8_t>{1, 0, 1, 1});
    CHECK(gray_map(std::vector<uint8_t>(5, 0)) == std::vector<uint8_t>(10, 0));
    CHECK(gray_map(parse_vec(RingId::F4U, "(5B6)").v) == parse_vec(RingId::F4, "(121013)").v);
}

TEST_CASE("lee weight") {
    CHECK(lee_weight(std::vector<uint8_t>{4}) == 2);  // u: a != b, b != 0
    CHECK(lee_weight(std::vector<uint8_t>{1}) == 1);  // b = 0
    CHECK(lee_weight(std::vector<uint8_t>{5}) == 1);  // 1+u: a = b
    CHECK(lee_weight(std::vector<uint8_t>(7, 0)) == 0);
}

TEST_CASE("isometry and linearity") {
    std::mt19937 rng(43);
    for (int it = 0; it < 10000; ++it) {
        const size_t n = 1 + rng() % 12;
        const auto x = rand_vec(rng, RingId::F4U, n), y = rand_vec(rng, RingId::F4U, n);
        CHECK(lee_weight(x) == hamming_weight(gray_map(x)));
        std::vector<uint8_t> sum(n);
        for (size_t i = 0; i < n; ++i) sum[i] = gf::add(x[i], y[i]);
        std::vector<uint8_t> gx = gray_map(x);
        const auto gy = gray_map(y);
        for (size_t i = 0; i < gx.size(); ++i) gx[i] = gf::add(gx[i], gy[i]);
        CHECK(gray_map(sum) == gx);
    }
}

TEST_CASE("gray images of table codes are self-dual over F4") {
    for (const std::string& id : {"26-3", "32-2", "40-2"}) {
        const FixtureTable& t = fixture(id);
        for (const auto& row : t.rows) {
            const GeneratorMatrix g = build_fixture_code(t, row);
            REQUIRE(g.ring() == RingId::F4U);
            const GeneratorMatrix img = gray_image(g);
            CHECK(img.ring() == RingId::F4);
            CHECK(img.length() == 2 * g.length());
            CHECK(img.rank() == 2 * g.rank());
            CHECK(verify_hermitian_self_dual(img));
        }
    }
}
