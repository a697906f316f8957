#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yw/wall.hpp"

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

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

Weight wv(const AffineType& t, const std::string& s) {
    auto w = parse_weight(s, t.n);
    REQUIRE_MESSAGE(w.has_value(), "bad weight literal: ", s);
    return *w;
}

// All walls within the given depth, breadth first.
std::vector<Wall> reachable(const GroundState& g, int depth) {
    std::vector<Wall> out = {ground_wall(g)};
    std::set<std::string> seen = {wall_to_string(g, out[0])};
    std::deque<std::pair<Wall, int>> queue = {{out[0], 0}};
    while (!queue.empty()) {
        auto [w, d] = queue.front();
        queue.pop_front();
        if (d == depth) continue;
        for (int i = 0; i <= g.t.n; ++i) {
            auto child = wall_ftilde(g, w, i);
            if (!child) continue;
            if (!seen.insert(wall_to_string(g, *child)).second) continue;
            out.push_back(*child);
            queue.push_back({*child, d + 1});
        }
    }
    return out;
}

} // namespace

TEST_CASE("ground-state data") {
    const AffineType b3{Family::BUntwist, 3};
    const GroundState g = ground_state(b3, 2, wv(b3, "2,0,0,0"));
    CHECK(g.pair.period == 2);
    CHECK(g.pair.bprime == cv(b3, "0,0,0|0|0,0,2"));
    CHECK(g.pair.b == cv(b3, "2,0,0|0|0,0,0"));
    CHECK(phi_weight(b3, 2, g.pair.bprime) == wv(b3, "2,0,0,0"));
    CHECK(eps_weight(b3, 2, g.pair.bprime) == wv(b3, "0,2,0,0"));
    CHECK(g.lambda_odd == wv(b3, "0,2,0,0"));
    CHECK(g.column(0) == g.pair.bprime);
    CHECK(g.column(1) == g.pair.b);
    CHECK(g.column(2) == g.pair.bprime);
    CHECK(g.lambda_at(0) == g.lambda);
    CHECK(g.lambda_at(1) == g.lambda_odd);

    const AffineType a4{Family::A2Even, 2};
    const GroundState ga = ground_state(a4, 2, wv(a4, "2,0,0"));
    CHECK(ga.pair.period == 1);
    CHECK(ga.pair.b == cv(a4, "0,0|0,0"));
    CHECK(ga.pair.b == ga.pair.bprime);
    CHECK(ga.lambda_odd == ga.lambda);

    const AffineType d4{Family::DUntwist, 4};
    const GroundState gd = ground_state(d4, 2, wv(d4, "0,0,0,1,1"));
    CHECK(gd.pair.period == 1);
    CHECK(gd.pair.b == cv(d4, "0,0,1,0|0,1,0,0"));
}

TEST_CASE("ground recursion for every dominant weight") {
    for (const AffineType& t : kSmallest) {
        for (int l = 1; l <= 3; ++l) {
            for (const Weight& lambda : dominant_weights_of_level(t, l)) {
                INFO(type_name(t), " lambda=", weight_to_string(lambda));
                const GroundState g = ground_state(t, l, lambda);
                CHECK(phi_weight(t, l, g.column(0)) == lambda);
                // eps of each column is phi of the next.
                for (size_t k = 0; k < 3; ++k) {
                    CHECK(eps_weight(t, l, g.column(k)) == phi_weight(t, l, g.column(k + 1)));
                    CHECK(eps_weight(t, l, g.column(k)) == g.lambda_at(k + 1));
                }
                CHECK((g.pair.period == 1) == (g.pair.b == g.pair.bprime));
            }
        }
    }
}

TEST_CASE("ground wall carries the highest weight") {
    const AffineType b3{Family::BUntwist, 3};
    for (const Weight& lambda : dominant_weights_of_level(b3, 2)) {
        const GroundState g = ground_state(b3, 2, lambda);
        const Wall y = ground_wall(g);
        CHECK(y.cols.empty());
        CHECK(wall_weight(g, y) == lambda);
        for (int i = 0; i <= 3; ++i) {
            INFO("lambda=", weight_to_string(lambda), " i=", i);
            CHECK(wall_phi(g, y, i) == pair_h(lambda, i));
            CHECK(wall_eps(g, y, i) == 0);
            CHECK(!wall_etilde(g, y, i).has_value());
        }
    }
}

TEST_CASE("arrows from the ground wall, pinned") {
    const AffineType a2{Family::A2Even, 1};
    const GroundState g = ground_state(a2, 2, wv(a2, "2,0"));
    const Wall y = ground_wall(g);
    CHECK(wall_to_string(g, y) == "2,0 ;");
    CHECK(!wall_ftilde(g, y, 1).has_value());

    const auto d1 = wall_ftilde(g, y, 0);
    REQUIRE(d1.has_value());
    CHECK(wall_to_string(g, *d1) == "2,0 ; 1|0");
    CHECK(wall_weight(g, *d1) == wv(a2, "0,1"));

    const auto d2a = wall_ftilde(g, *d1, 0);
    REQUIRE(d2a.has_value());
    CHECK(wall_to_string(g, *d2a) == "2,0 ; 2|0");
    CHECK(wall_weight(g, *d2a) == wv(a2, "-2,2"));

    const auto d2b = wall_ftilde(g, *d1, 1);
    REQUIRE(d2b.has_value());
    CHECK(wall_to_string(g, *d2b) == "2,0 ; 0|1");
    CHECK(wall_weight(g, *d2b) == wv(a2, "4,-1"));

    const auto d3a = wall_ftilde(g, *d2a, 1);
    REQUIRE(d3a.has_value());
    CHECK(wall_to_string(g, *d3a) == "2,0 ; 1|1");
    CHECK(wall_weight(g, *d3a) == wv(a2, "2,0"));

    // The 0-arrow out of 0|1 opens a second column.
    const auto d3b = wall_ftilde(g, *d2b, 0);
    REQUIRE(d3b.has_value());
    CHECK(wall_to_string(g, *d3b) == "2,0 ; 1|0 | 0|1");
    CHECK(wall_weight(g, *d3b) == wv(a2, "2,0"));
    CHECK(d3b->cols.size() == 2);
    CHECK(d3b->cols[0] == cv(a2, "0|1"));
    CHECK(d3b->cols[1] == cv(a2, "1|0"));

    // Upward arrows invert each step.
    auto back = wall_etilde(g, *d3b, 0);
    REQUIRE(back.has_value());
    CHECK(wall_to_string(g, *back) == wall_to_string(g, *d2b));
}

TEST_CASE("signature resolution, pinned") {
    const AffineType a2{Family::A2Even, 1};
    const GroundState g = ground_state(a2, 2, wv(a2, "2,0"));

    const Wall y = ground_wall(g);
    const SignatureResolution s0 = signature(g, y, 0);
    CHECK(s0.eps == 0);
    CHECK(s0.phi == 2);
    REQUIRE(s0.f_position.has_value());
    CHECK(*s0.f_position == 0); // the unexpanded ground tail
    CHECK(!s0.e_position.has_value());

    // 2,0 ; 1|0 | 0|1 : word ++ --- + - +++ resolves to - +++.
    Wall w = y;
    for (int i : {0, 1, 0}) {
        auto next = wall_ftilde(g, w, i);
        REQUIRE(next.has_value());
        w = *next;
    }
    REQUIRE(wall_to_string(g, w) == "2,0 ; 1|0 | 0|1");
    const SignatureResolution s = signature(g, w, 0);
    CHECK(s.eps == 1);
    CHECK(s.phi == 3);
    REQUIRE(s.f_position.has_value());
    CHECK(*s.f_position == 0);
    REQUIRE(s.e_position.has_value());
    CHECK(*s.e_position == 1);
    CHECK(wall_eps(g, w, 0) == 1);
    CHECK(wall_phi(g, w, 0) == 3);
}

TEST_CASE("arrow inverses on the reachable set") {
    const AffineType b3{Family::BUntwist, 3};
    const GroundState g = ground_state(b3, 2, wv(b3, "2,0,0,0"));
    for (const Wall& w : reachable(g, 4)) {
        for (int i = 0; i <= 3; ++i) {
            INFO("w=", wall_to_string(g, w), " i=", i);
            if (auto down = wall_ftilde(g, w, i)) {
                auto up = wall_etilde(g, *down, i);
                REQUIRE(up.has_value());
                CHECK(wall_to_string(g, *up) == wall_to_string(g, w));
            }
            if (auto up = wall_etilde(g, w, i)) {
                auto down = wall_ftilde(g, *up, i);
                REQUIRE(down.has_value());
                CHECK(wall_to_string(g, *down) == wall_to_string(g, w));
            }
        }
    }
}

TEST_CASE("string lengths count arrow applications") {
    const AffineType a2{Family::A2Even, 1};
    const GroundState g = ground_state(a2, 1, wv(a2, "1,0"));
    for (const Wall& w : reachable(g, 4)) {
        for (int i = 0; i <= 1; ++i) {
            INFO("w=", wall_to_string(g, w), " i=", i);
            int steps = 0;
            Wall cur = w;
            while (auto up = wall_etilde(g, cur, i)) {
                cur = *up;
                ++steps;
                REQUIRE(steps <= 20);
            }
            CHECK(steps == wall_eps(g, w, i));
            steps = 0;
            cur = w;
            while (auto down = wall_ftilde(g, cur, i)) {
                cur = *down;
                ++steps;
                if (steps > 20) break;
            }
            CHECK(steps == wall_phi(g, w, i));
        }
    }
}

TEST_CASE("walls validate and mutations do not") {
    const AffineType b3{Family::BUntwist, 3};
    const GroundState g = ground_state(b3, 2, wv(b3, "2,0,0,0"));
    const auto walls = reachable(g, 6);
    CHECK(walls.size() == 30);
    for (const Wall& w : walls) CHECK(validate_wall(g, w));

    Wall bad = walls.back();
    REQUIRE(!bad.cols.empty());
    bad.cols[0].xi(1) += 5;
    CHECK(!validate_wall(g, bad));

    // A trailing ground column violates normalization.
    Wall tail = ground_wall(g);
    tail.cols.push_back(g.column(0));
    CHECK(!validate_wall(g, tail));

    // The move counter must match the intrinsic weight.
    Wall drift = walls.back();
    drift.moves[0] += 1;
    CHECK(!validate_wall(g, drift));
}

TEST_CASE("normalization is idempotent") {
    const AffineType b3{Family::BUntwist, 3};
    const GroundState g = ground_state(b3, 2, wv(b3, "2,0,0,0"));
    Wall w = ground_wall(g);
    w.cols.push_back(g.column(0));
    normalize_wall(g, w);
    CHECK(w.cols.empty());
    normalize_wall(g, w);
    CHECK(w.cols.empty());

    // Period-2 tail: the ground column at position 1 is g_1, not g_0.
    Wall two = ground_wall(g);
    two.cols.push_back(g.column(0));
    two.cols.push_back(g.column(1));
    normalize_wall(g, two);
    CHECK(two.cols.empty());
}

TEST_CASE("word engine agrees with the tensor engine") {
    for (const AffineType& t : kSmallest) {
        Weight lambda = zero_weight(t.n);
        lambda[0] = 2;
        const GroundState g = ground_state(t, 2, lambda);
        for (const Wall& w : reachable(g, 4)) {
            CHECK(path_weight(g, w) == wall_weight(g, w));
            for (int i = 0; i <= t.n; ++i) {
                INFO(type_name(t), " w=", wall_to_string(g, w), " i=", i);
                CHECK(path_eps(g, w, i) == wall_eps(g, w, i));
                CHECK(path_phi(g, w, i) == wall_phi(g, w, i));
                const auto fw = wall_ftilde(g, w, i);
                const auto fp = path_ftilde(g, w, i);
                CHECK(fw.has_value() == fp.has_value());
                if (fw && fp) CHECK(wall_to_string(g, *fw) == wall_to_string(g, *fp));
                const auto ew = wall_etilde(g, w, i);
                const auto ep = path_etilde(g, w, i);
                CHECK(ew.has_value() == ep.has_value());
                if (ew && ep) CHECK(wall_to_string(g, *ew) == wall_to_string(g, *ep));
            }
        }
    }
}
