#include "homcat/cohp.hpp"

#include <doctest.h>

using namespace homcat;
using namespace homcat::cohp;

TEST_CASE("h_dim on the standard cases") {
    CHECK(h_dim(1, 0, 1) == 2);
    CHECK(h_dim(2, 2, -4) == 3);
    CHECK(h_dim(3, 1, -2) == 0);
    CHECK(h_dim(3, 1, 0) == 0);
    CHECK(h_dim(3, 2, 5) == 0);
    CHECK(h_dim(2, 0, 0) == 1);
    CHECK(h_dim(0, 0, -3) == 1); // a point has constants in every twist
}

TEST_CASE("h_basis matches the monomial descriptions") {
    auto b = h_basis(1, 0, 2);
    REQUIRE(b.basis.size() == 3);
    CHECK(b.basis[0] == LaurentMonomial{0, 2});
    CHECK(b.basis[1] == LaurentMonomial{1, 1});
    CHECK(b.basis[2] == LaurentMonomial{2, 0});

    b = h_basis(1, 1, -2);
    REQUIRE(b.basis.size() == 1);
    CHECK(b.basis[0] == LaurentMonomial{-1, -1});

    b = h_basis(2, 0, 0);
    REQUIRE(b.basis.size() == 1);
    CHECK(b.basis[0] == LaurentMonomial{0, 0, 0});
}

TEST_CASE("basis counts equal the dimension formula") {
    for (int m = 0; m <= 4; ++m)
        for (int d = -2 * m - 4; d <= 2 * m + 4; ++d)
            for (int i = 0; i <= m; ++i)
                CHECK(Int(h_basis(m, i, d).basis.size()) == h_dim(m, i, d));
}

TEST_CASE("alternating sum equals the Hilbert polynomial") {
    for (int m = 1; m <= 4; ++m)
        for (int d = -2 * m - 4; d <= 2 * m + 4; ++d) {
            Rat chi = 0;
            for (int i = 0; i <= m; ++i)
                chi += (i % 2 == 0) ? Rat(h_dim(m, i, d)) : Rat(-h_dim(m, i, d));
            CHECK(chi == hilbert_chi(m, d));
        }
}

TEST_CASE("cup products") {
    // x0 * x0^{-1} x1^{-1} hits an exponent >= 0, so it dies in H^1
    CohClass a{{LaurentMonomial{1, 0}, Rat(1)}};
    CohClass b{{LaurentMonomial{-1, -1}, Rat(1)}};
    CHECK(cup_product(1, 1, a, b).empty());

    CohClass b2{{LaurentMonomial{-2, -1}, Rat(1)}};
    auto r = cup_product(1, 1, a, b2);
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == LaurentMonomial{-1, -1});
    CHECK(r.begin()->second == 1);

    // the unit acts as the identity
    CohClass one{{LaurentMonomial{0, 0}, Rat(1)}};
    CHECK(cup_product(1, 1, one, b2) == b2);
}

TEST_CASE("serre pairing is a permutation matrix") {
    for (auto [m, d] : {std::pair{1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        auto p = serre_pair(m, d);
        CHECK(p.rows() == p.cols());
        // exactly one 1 per row and per column
        for (std::size_t r = 0; r < p.rows(); ++r) {
            int ones = 0;
            for (std::size_t c = 0; c < p.cols(); ++c) {
                CHECK((p.at(r, c) == 0 || p.at(r, c) == 1));
                if (p.at(r, c) == 1) ++ones;
            }
            CHECK(ones == 1);
        }
        for (std::size_t c = 0; c < p.cols(); ++c) {
            int ones = 0;
            for (std::size_t r = 0; r < p.rows(); ++r)
                if (p.at(r, c) == 1) ++ones;
            CHECK(ones == 1);
        }
    }
    CHECK(serre_pair(1, 0).rows() == 1);
    CHECK(serre_pair(1, 1).rows() == 2);
    CHECK(serre_pair(2, 1).rows() == 3);
}
