#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yw/cartan.hpp"

using namespace yw;

namespace {

std::vector<std::vector<int>> rows(const AffineType& t) {
    const CartanMatrix m = cartan_matrix(t);
    std::vector<std::vector<int>> r(static_cast<size_t>(t.n + 1),
                                    std::vector<int>(static_cast<size_t>(t.n + 1)));
    for (int i = 0; i <= t.n; ++i)
        for (int j = 0; j <= t.n; ++j) r[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    return r;
}

const Family all_families[] = {Family::A2Even, Family::DTwist, Family::A2Odd,
                               Family::DUntwist, Family::BUntwist, Family::CUntwist};

} // namespace

TEST_CASE("family tokens round-trip") {
    for (Family f : all_families) {
        auto parsed = parse_family(family_token(f));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == f);
    }
    CHECK(!parse_family("E8").has_value());
}

TEST_CASE("pinned Cartan matrices") {
    CHECK(rows({Family::A2Even, 1}) == std::vector<std::vector<int>>{{2, -4}, {-1, 2}});
    CHECK(rows({Family::A2Even, 2}) ==
          std::vector<std::vector<int>>{{2, -2, 0}, {-1, 2, -2}, {0, -1, 2}});
    CHECK(rows({Family::DTwist, 2}) ==
          std::vector<std::vector<int>>{{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}});
    CHECK(rows({Family::A2Odd, 3}) == std::vector<std::vector<int>>{
                                          {2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -2}, {0, 0, -1, 2}});
    CHECK(rows({Family::BUntwist, 3}) == std::vector<std::vector<int>>{
                                             {2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -2, 2}});
    CHECK(rows({Family::CUntwist, 2}) ==
          std::vector<std::vector<int>>{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}});
    CHECK(rows({Family::DUntwist, 4}) ==
          std::vector<std::vector<int>>{{2, 0, -1, 0, 0},
                                        {0, 2, -1, 0, 0},
                                        {-1, -1, 2, -1, -1},
                                        {0, 0, -1, 2, 0},
                                        {0, 0, -1, 0, 2}});
}

TEST_CASE("pinned central and null-root coefficients") {
    CHECK(central_coefficients({Family::A2Even, 2}) == std::vector<int>{1, 2, 2});
    CHECK(null_root_coefficients({Family::A2Even, 2}) == std::vector<int>{2, 2, 1});
    CHECK(central_coefficients({Family::DTwist, 3}) == std::vector<int>{1, 2, 2, 1});
    CHECK(null_root_coefficients({Family::DTwist, 3}) == std::vector<int>{1, 1, 1, 1});
    CHECK(central_coefficients({Family::A2Odd, 3}) == std::vector<int>{1, 1, 2, 2});
    CHECK(null_root_coefficients({Family::A2Odd, 3}) == std::vector<int>{1, 1, 2, 1});
    CHECK(central_coefficients({Family::DUntwist, 4}) == std::vector<int>{1, 1, 2, 1, 1});
    CHECK(null_root_coefficients({Family::DUntwist, 4}) == std::vector<int>{1, 1, 2, 1, 1});
    CHECK(central_coefficients({Family::BUntwist, 3}) == std::vector<int>{1, 1, 2, 1});
    CHECK(null_root_coefficients({Family::BUntwist, 3}) == std::vector<int>{1, 1, 2, 2});
    CHECK(central_coefficients({Family::CUntwist, 2}) == std::vector<int>{1, 1, 1});
    CHECK(null_root_coefficients({Family::CUntwist, 2}) == std::vector<int>{1, 2, 1});
}

TEST_CASE("central element annihilates the matrix and the matrix annihilates delta") {
    for (Family f : all_families) {
        for (int n = min_rank(f); n <= 8; ++n) {
            const AffineType t{f, n};
            const CartanMatrix m = cartan_matrix(t);
            const auto c = central_coefficients(t);
            const auto d = null_root_coefficients(t);
            for (int j = 0; j <= n; ++j) {
                int colsum = 0;
                for (int i = 0; i <= n; ++i) colsum += c[static_cast<size_t>(i)] * m.at(i, j);
                INFO(type_name(t), " column ", j);
                CHECK(colsum == 0);
            }
            for (int i = 0; i <= n; ++i) {
                int rowsum = 0;
                for (int j = 0; j <= n; ++j) rowsum += m.at(i, j) * d[static_cast<size_t>(j)];
                INFO(type_name(t), " row ", i);
                CHECK(rowsum == 0);
            }
        }
    }
}

TEST_CASE("classical simple roots are matrix columns") {
    const AffineType b3{Family::BUntwist, 3};
    CHECK(cl_simple_root(b3, 3) == Weight{0, 0, -1, 2});
    CHECK(cl_simple_root(b3, 0) == Weight{2, 0, -1, 0});
    CHECK(cl_simple_root(b3, 2) == Weight{-1, -1, 2, -2});

    for (Family f : all_families) {
        const AffineType t{f, min_rank(f)};
        const auto d = null_root_coefficients(t);
        Weight acc = zero_weight(t.n);
        for (int j = 0; j <= t.n; ++j)
            acc = weight_add(acc, weight_scale(d[static_cast<size_t>(j)], cl_simple_root(t, j)));
        CHECK(acc == zero_weight(t.n));
    }
}

TEST_CASE("levels of fundamental combinations") {
    const AffineType b3{Family::BUntwist, 3};
    CHECK(level(b3, Weight{1, 0, 0, 1}) == 2);
    const AffineType a4{Family::A2Even, 2};
    CHECK(level(a4, Weight{0, 1, 0}) == 2);
}

TEST_CASE("dominant weights of a level, lexicographic") {
    const AffineType a4{Family::A2Even, 2};
    const auto w2 = dominant_weights_of_level(a4, 2);
    CHECK(w2 == std::vector<Weight>{{0, 0, 1}, {0, 1, 0}, {2, 0, 0}});

    const AffineType b3{Family::BUntwist, 3};
    const auto b2 = dominant_weights_of_level(b3, 2);
    CHECK(b2.size() == 7);
    for (const Weight& w : b2) CHECK(level(b3, w) == 2);
    for (size_t i = 1; i < b2.size(); ++i) CHECK(b2[i - 1] < b2[i]);
}

TEST_CASE("weight strings") {
    CHECK(weight_to_string(Weight{2, 0, -1}) == "2,0,-1");
    auto p = parse_weight("1,0,0,1", 3);
    REQUIRE(p.has_value());
    CHECK(*p == Weight{1, 0, 0, 1});
    CHECK(!parse_weight("1,0", 3).has_value());
    CHECK(!parse_weight("1,0,x,1", 3).has_value());
}
