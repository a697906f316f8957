#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yw/perfect.hpp"

#include <set>

using namespace yw;

namespace {

const AffineType kSmallest[] = {
    {Family::A2Even, 1}, {Family::DTwist, 2},   {Family::A2Odd, 3},
    {Family::DUntwist, 4}, {Family::BUntwist, 3}, {Family::CUntwist, 2},
};

Coords cv(const AffineType& t, const std::string& s) {
    auto c = parse_coords(t, s);
    REQUIRE_MESSAGE(c.has_value(), "bad coords literal: ", s);
    return *c;
}

} // namespace

TEST_CASE("coordinate strings round-trip") {
    const AffineType b3{Family::BUntwist, 3};
    const Coords b = cv(b3, "1,0,2|1|0,3,4");
    CHECK(b.xi(1) == 1);
    CHECK(b.xi(3) == 2);
    CHECK(b.x0 == 1);
    CHECK(b.xbi(3) == 0);
    CHECK(b.xbi(2) == 3);
    CHECK(b.xbi(1) == 4);
    CHECK(coords_to_string(b3, b) == "1,0,2|1|0,3,4");

    const AffineType c2{Family::CUntwist, 2};
    CHECK(coords_to_string(c2, cv(c2, "1,2|3,4")) == "1,2|3,4");
    CHECK(!parse_coords(c2, "1,2|3|4").has_value());
}

TEST_CASE("membership by family") {
    const AffineType a2{Family::A2Even, 1};
    CHECK(member(a2, 2, cv(a2, "2|0")));
    CHECK(member(a2, 2, cv(a2, "1|1")));
    CHECK(!member(a2, 2, cv(a2, "2|1")));

    const AffineType d3{Family::DTwist, 2};
    CHECK(member(d3, 1, cv(d3, "0,0|1|0,0")));
    CHECK(!member(d3, 1, cv(d3, "0,0|2|0,0")));
    CHECK(!member(d3, 1, cv(d3, "1,0|1|0,0")));

    const AffineType c2{Family::CUntwist, 2};
    CHECK(member(c2, 1, cv(c2, "1,1|0,0")));
    CHECK(!member(c2, 1, cv(c2, "1,0|0,0")));
    CHECK(!member(c2, 1, cv(c2, "2,1|1,0")));

    const AffineType d4{Family::DUntwist, 4};
    CHECK(member(d4, 1, cv(d4, "0,0,1,0|0,0,0,0")));
    CHECK(!member(d4, 2, cv(d4, "0,0,0,1|1,0,0,0")));

    const AffineType b3{Family::BUntwist, 3};
    CHECK(member(b3, 2, cv(b3, "0,0,1|0|0,0,1")));
    CHECK(member(b3, 2, cv(b3, "0,0,0|1|1,0,0")));
    CHECK(!member(b3, 2, cv(b3, "0,0,1|1|0,0,1")));
}

TEST_CASE("enumeration counts against brute force") {
    const AffineType a2{Family::A2Even, 1};
    CHECK(enumerate(a2, 2).size() == 6);
    {
        int count = 0;
        for (int x1 = 0; x1 <= 2; ++x1)
            for (int xb1 = 0; xb1 <= 2; ++xb1)
                if (x1 + xb1 <= 2) ++count;
        CHECK(count == 6);
    }

    const AffineType b3{Family::BUntwist, 3};
    CHECK(enumerate(b3, 1).size() == 7);
    {
        int count = 0;
        for (int x0 = 0; x0 <= 1; ++x0)
            for (int a = 0; a <= 1; ++a)
                for (int bq = 0; bq <= 1; ++bq)
                    for (int c = 0; c <= 1; ++c)
                        for (int d = 0; d <= 1; ++d)
                            for (int e = 0; e <= 1; ++e)
                                for (int f = 0; f <= 1; ++f)
                                    if (x0 + a + bq + c + d + e + f == 1) ++count;
        CHECK(count == 7);
    }

    const AffineType c2{Family::CUntwist, 2};
    CHECK(enumerate(c2, 1).size() == 11);
    {
        int count = 0;
        for (int a = 0; a <= 2; ++a)
            for (int bq = 0; bq <= 2; ++bq)
                for (int c = 0; c <= 2; ++c)
                    for (int d = 0; d <= 2; ++d) {
                        const int s = a + bq + c + d;
                        if (s <= 2 && s % 2 == 0) ++count;
                    }
        CHECK(count == 11);
    }

    // Lexicographic order of the display tuples.
    for (const AffineType& t : kSmallest) {
        const auto all = enumerate(t, 2);
        for (size_t i = 1; i < all.size(); ++i)
            CHECK(lex_less(all[i - 1], all[i]));
    }
}

TEST_CASE("arrow examples") {
    const AffineType b3{Family::BUntwist, 3};
    CHECK(ftilde(b3, 2, 3, cv(b3, "0,0,1|0|0,0,1")) == cv(b3, "0,0,0|1|0,0,1"));
    CHECK(ftilde(b3, 2, 0, cv(b3, "0,0,0|0|0,0,2")) == cv(b3, "0,1,0|0|0,0,1"));
    CHECK(ftilde(b3, 2, 1, cv(b3, "1,0,0|0|0,0,1")) == cv(b3, "0,1,0|0|0,0,1"));

    const AffineType a2{Family::A2Even, 1};
    CHECK(ftilde(a2, 2, 0, cv(a2, "0|0")) == cv(a2, "1|0"));
    CHECK(etilde(a2, 2, 0, cv(a2, "0|0")) == cv(a2, "0|1"));
    CHECK(eps_iter(a2, 2, 0, cv(a2, "0|0")) == 2);
}

TEST_CASE("string length examples") {
    const AffineType b3{Family::BUntwist, 3};
    CHECK(phi_iter(b3, 2, 1, cv(b3, "2,0,0|0|0,0,0")) == 2);
    CHECK(eps_iter(b3, 2, 3, cv(b3, "0,0,0|1|1,0,0")) == 3);
    CHECK(eps_iter(b3, 2, 0, cv(b3, "0,1,0|0|0,1,0")) == 0);
}

TEST_CASE("weight example") {
    const AffineType b3{Family::BUntwist, 3};
    CHECK(weight_of(b3, 2, cv(b3, "0,0,0|0|0,0,2")) == Weight{2, -2, 0, 0});
}

TEST_CASE("closed forms agree with iteration") {
    for (const AffineType& t : kSmallest) {
        for (int l = 1; l <= 2; ++l) {
            for (const Coords& b : enumerate(t, l)) {
                for (int i = 0; i <= t.n; ++i) {
                    INFO(type_name(t), " l=", l, " b=", coords_to_string(t, b), " i=", i);
                    CHECK(phi_closed(t, l, i, b) == phi_iter(t, l, i, b));
                    CHECK(eps_closed(t, l, i, b) == eps_iter(t, l, i, b));
                }
            }
        }
    }
}

TEST_CASE("crystal axioms on every member") {
    for (const AffineType& t : kSmallest) {
        for (int l = 1; l <= 2; ++l) {
            const auto all = enumerate(t, l);
            for (const Coords& b : all) {
                const Weight wb = weight_of(t, l, b);
                for (int i = 0; i <= t.n; ++i) {
                    INFO(type_name(t), " l=", l, " b=", coords_to_string(t, b), " i=", i);
                    const auto fb = ftilde(t, l, i, b);
                    CHECK(fb.has_value() == (phi_iter(t, l, i, b) > 0));
                    if (fb) {
                        CHECK(etilde(t, l, i, *fb) == b);
                        CHECK(eps_iter(t, l, i, *fb) == eps_iter(t, l, i, b) + 1);
                        CHECK(phi_iter(t, l, i, *fb) == phi_iter(t, l, i, b) - 1);
                        CHECK(weight_of(t, l, *fb) == weight_sub(wb, cl_simple_root(t, i)));
                    }
                    const auto eb = etilde(t, l, i, b);
                    CHECK(eb.has_value() == (eps_iter(t, l, i, b) > 0));
                    if (eb) CHECK(ftilde(t, l, i, *eb) == b);
                }
            }
        }
    }
}

TEST_CASE("minimal vector examples") {
    const AffineType a4{Family::A2Even, 2};
    const GroundPair ga = minimal_vector(a4, 2, Weight{0, 0, 1});
    CHECK(ga.bprime == cv(a4, "0,1|1,0"));
    CHECK(ga.period == 1);

    const AffineType b3{Family::BUntwist, 3};
    const GroundPair gb = minimal_vector(b3, 2, Weight{1, 0, 0, 1});
    CHECK(gb.b == cv(b3, "1,0,0|1|0,0,0"));
    CHECK(gb.bprime == cv(b3, "0,0,0|1|0,0,1"));
    CHECK(gb.period == 2);

    const AffineType a5{Family::A2Odd, 3};
    const GroundPair gc = minimal_vector(a5, 2, Weight{2, 0, 0, 0});
    CHECK(gc.b == cv(a5, "2,0,0|0,0,0"));
    CHECK(gc.bprime == cv(a5, "0,0,0|0,0,2"));
    CHECK(gc.period == 2);

    const AffineType d4{Family::DUntwist, 4};
    const GroundPair gd = minimal_vector(d4, 2, Weight{0, 0, 0, 1, 1});
    CHECK(gd.bprime.xi(3) == 1);
    CHECK(gd.bprime.xbi(3) == 1);
    CHECK(gd.bprime.xi(4) == 0);
    CHECK(gd.bprime.xbi(4) == 0);
}

TEST_CASE("minimal vectors anchor the ground recursion") {
    for (const AffineType& t : kSmallest) {
        for (int l = 1; l <= 2; ++l) {
            for (const Weight& lam : dominant_weights_of_level(t, l)) {
                INFO(type_name(t), " lambda=", weight_to_string(lam));
                const GroundPair g = minimal_vector(t, l, lam);
                CHECK(member(t, l, g.b));
                CHECK(member(t, l, g.bprime));
                CHECK(phi_weight(t, l, g.bprime) == lam);
                CHECK(eps_weight(t, l, g.b) == lam);
                CHECK(phi_weight(t, l, g.b) == eps_weight(t, l, g.bprime));
                CHECK((g.period == 1) == (g.b == g.bprime));
            }
        }
    }
}

TEST_CASE("structural verification at level 1") {
    for (const AffineType& t : kSmallest) {
        const CrystalReport rep = verify_perfect(t, 1);
        INFO(type_name(t));
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.ok());
    }
}

TEST_CASE("tensor rule sanity") {
    const AffineType a2{Family::A2Even, 1};
    const TensorPair p{cv(a2, "0|0"), cv(a2, "0|0")};
    // phi0 of each factor is 2, eps0 is 2; the left factor absorbs the arrow
    // only if strictly stronger.
    CHECK(tensor_phi(a2, 2, 0, p) == 2);
    CHECK(tensor_eps(a2, 2, 0, p) == 2);
    const auto f = tensor_ftilde(a2, 2, 0, p);
    REQUIRE(f.has_value());
    CHECK(f->left == cv(a2, "0|0"));
    CHECK(f->right == cv(a2, "1|0"));
}
