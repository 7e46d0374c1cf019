#include <doctest.h>

#include "shiftsym/error.hpp"
#include "shiftsym/lattice.hpp"

using namespace shiftsym;

TEST_CASE("GL(2,Z) classification") {
    CHECK(gl2_classify(Mat2{1, 1, 0, 1}).kind == GL2Class::Kind::Parabolic);
    auto rot = gl2_classify(Mat2{0, -1, 1, 0});
    CHECK(rot.kind == GL2Class::Kind::FiniteOrder);
    CHECK(rot.order == 4);
    CHECK(gl2_classify(Mat2{2, 1, 1, 1}).kind == GL2Class::Kind::Hyperbolic);
    CHECK(gl2_classify(Mat2{0, 1, 1, 0}).order == 2);
    CHECK(gl2_classify(Mat2{1, 1, 1, 0}).kind == GL2Class::Kind::Hyperbolic);
    CHECK(gl2_classify(Mat2{-1, -1, 1, 0}).order == 3);
    CHECK_THROWS_AS(gl2_classify(Mat2{2, 0, 0, 1}), Error);
}

TEST_CASE("finite-order classification matches powering") {
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            for (long long c = -3; c <= 3; ++c)
                for (long long d = -3; d <= 3; ++d) {
                    Mat2 m{a, b, c, d};
                    if (!m.unimodular()) continue;
                    auto k = gl2_classify(m);
                    if (k.kind != GL2Class::Kind::FiniteOrder) continue;
                    CHECK(m.power(k.order) == Mat2::identity());
                    for (unsigned j = 1; j < k.order; ++j) CHECK_FALSE(m.power(j) == Mat2::identity());
                }
}

TEST_CASE("group closure") {
    auto d3 = group_closure({Mat2{-1, -1, 1, 0}, Mat2{0, 1, 1, 0}});
    REQUIRE(d3);
    CHECK(d3->size() == 6);
    auto d4 = group_closure({Mat2{0, -1, 1, 0}, Mat2{0, 1, 1, 0}});
    REQUIRE(d4);
    CHECK(d4->size() == 8);
    for (const auto& m : *d4) CHECK(gl2_classify(m).kind == GL2Class::Kind::FiniteOrder);
    CHECK_FALSE(group_closure({Mat2{1, 1, 0, 1}}, 1000));
}

TEST_CASE("matrix helpers") {
    Mat2 m = Mat2::parse("[[2,1],[1,1]]");
    CHECK(m.str() == "[[2,1],[1,1]]");
    CHECK(m * m.inverse() == Mat2::identity());
    CHECK(m.power(0) == Mat2::identity());
    CHECK(m.power(2) == m * m);
    CHECK_THROWS_AS(Mat2::parse("[[1,2]]"), Error);
}

TEST_CASE("signed permutations") {
    CHECK(wd_enumerate(2).size() == 8);
    SignedPerm x{{0, 1}, {-1, 1}}, y{{1, 0}, {1, 1}};
    auto xy = wd_compose(x, y);
    CHECK(xy.pi == std::vector<int>{1, 0});
    CHECK(xy.eps == std::vector<int>{1, -1});
    CHECK(wd_matrix(SignedPerm::identity(3)) == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    for (const auto& g : wd_enumerate(3)) {
        CHECK(wd_compose(g, g.inverse()) == SignedPerm::identity(3));
        CHECK(wd_compose(g.inverse(), g) == SignedPerm::identity(3));
    }
    CHECK_THROWS_AS(wd_compose(SignedPerm::identity(2), SignedPerm::identity(3)), Error);
}
