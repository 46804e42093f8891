#include <doctest.h>

#include <algorithm>

#include "flg/errors.hpp"
#include "flg/generators.hpp"
#include "flg/instance.hpp"
#include "flg/json_io.hpp"
#include "helpers.hpp"

using namespace flg;
using namespace flg::test;

TEST_CASE("load_instance parses the reference file") {
    const char* text = R"({
        "nodes":[{"id":"v1","weight":"3"},{"id":"v2","weight":2},
                 {"id":"v3","weight":7},{"id":"v4","weight":"1"}],
        "edges":[["v1","v2"],["v2","v3"],["v3","v4"]],
        "facilities":2,
        "directed":true})";
    const Instance inst = load_instance(text);
    CHECK(inst.node_count() == 4);
    CHECK(inst.facility_count() == 2);
    CHECK(inst.weight(inst.node_index("v3")) == 7);
    CHECK(inst == gen_gstar());
}

TEST_CASE("load_instance diagnostics") {
    CHECK_THROWS_WITH_AS(load_instance(R"({"nodes":[],"facilities":1})"), "no nodes", InputError);
    CHECK_THROWS_AS(load_instance("{not json"), InputError);
    CHECK_THROWS_WITH_AS(
        load_instance(
            R"({"nodes":[{"id":"v1","weight":1}],"edges":[["v1","v9"]],"facilities":1})"),
        "edge endpoint 'v9' is not a declared node", InputError);
    CHECK_THROWS_WITH_AS(
        load_instance(
            R"({"nodes":[{"id":"a","weight":1},{"id":"a","weight":2}],"facilities":1})"),
        "duplicate node id 'a'", InputError);
    CHECK_THROWS_WITH_AS(load_instance(R"({"nodes":[{"id":"a","weight":"-1"}],"facilities":1})"),
                         "negative weight on node 'a'", InputError);
    CHECK_THROWS_WITH_AS(load_instance(R"({"nodes":[{"id":"a","weight":1}],"facilities":0})"),
                         "facility count must be at least 1", InputError);
    CHECK_THROWS_AS(
        load_instance(R"({"nodes":[{"id":"a","weight":1}],"edges":[["a","a"]],"facilities":1})"),
        InputError);
}

TEST_CASE("undirected inputs expand to both directions") {
    const char* text = R"({
        "nodes":[{"id":"a","weight":1},{"id":"b","weight":1}],
        "edges":[["a","b"]],
        "facilities":1,
        "directed":false})";
    const Instance inst = load_instance(text);
    CHECK(shopping_range(inst, 0) == std::vector<int>{0, 1});
    CHECK(shopping_range(inst, 1) == std::vector<int>{0, 1});
}

TEST_CASE("serialization round-trips exactly") {
    const Instance gstar = gen_gstar();
    CHECK(load_instance(save_instance(gstar)) == gstar);
    const Instance rnd = gen_random(9, 0.4, 4, 3, 123);
    CHECK(load_instance(save_instance(rnd)) == rnd);
    const Instance lb = gen_lowerbound(3);
    CHECK(load_instance(save_instance(lb)) == lb);
}

TEST_CASE("shopping_range is the closed out-neighborhood") {
    const Instance gstar = gen_gstar();
    CHECK(shopping_range(gstar, gstar.node_index("v2")) ==
          std::vector<int>{gstar.node_index("v2"), gstar.node_index("v3")});
    CHECK(shopping_range(gstar, gstar.node_index("v4")) ==
          std::vector<int>{gstar.node_index("v4")});

    const Instance lb = gen_lowerbound(3);
    const auto range = shopping_range(lb, lb.node_index("x_1"));
    CHECK(range.size() == 5);  // x_1, v_a and three leaves
    CHECK(std::count(range.begin(), range.end(), lb.node_index("v_a")) == 1);
    CHECK(std::count(range.begin(), range.end(), lb.node_index("y_1_2")) == 1);
    CHECK(std::count(range.begin(), range.end(), lb.node_index("v_b")) == 0);
}

TEST_CASE("reachable_facilities matches the placement geometry") {
    const Instance gstar = gen_gstar();
    const Placement s = place(gstar, {"v2", "v3"});
    CHECK(reachable_facilities(gstar, s, gstar.node_index("v2")) == std::vector<int>{0, 1});
    CHECK(reachable_facilities(gstar, s, gstar.node_index("v4")).empty());
    const Placement co = place(gstar, {"v3", "v3"});
    CHECK(reachable_facilities(gstar, co, gstar.node_index("v3")) == std::vector<int>{0, 1});
}

TEST_CASE("attraction_range") {
    const Instance gstar = gen_gstar();
    const Placement s = place(gstar, {"v2", "v3"});
    CHECK(attraction_range(gstar, s, 0) ==
          std::vector<int>{gstar.node_index("v1"), gstar.node_index("v2")});
    CHECK(attraction_range(gstar, s, 1) ==
          std::vector<int>{gstar.node_index("v2"), gstar.node_index("v3")});
    CHECK_THROWS_AS(attraction_range(gstar, s, 2), InputError);

    const Instance lb = gen_lowerbound(3);
    Placement at_hub(lb.facility_count(), lb.node_index("v_a"));
    const auto range = attraction_range(lb, at_hub, 0);
    CHECK(range.size() == 4);  // v_a and the three spokes
    for (int i = 1; i <= 3; ++i) {
        const int xi = lb.node_index("x_" + std::to_string(i));
        CHECK(std::count(range.begin(), range.end(), xi) == 1);
    }

    // facility on a node nobody shops at attracts only its own client
    const Instance left = gen_fig1(true);
    CHECK(attraction_range(left, place(left, {"v1", "v2"}), 0) ==
          std::vector<int>{left.node_index("v1")});
}

TEST_CASE("range duality: i in A(j) iff s_j in N(i)") {
    for (unsigned long long seed = 1; seed <= 25; ++seed) {
        const Instance inst = random_instance(9, 3, seed);
        const Placement s = random_placement(inst, seed);
        for (int i = 0; i < inst.node_count(); ++i) {
            CHECK(in_shopping_range(inst, i, i));  // N(i) always contains i
            const auto reach = reachable_facilities(inst, s, i);
            for (int j = 0; j < inst.facility_count(); ++j) {
                const auto att = attraction_range(inst, s, j);
                const bool reaches =
                    std::find(reach.begin(), reach.end(), j) != reach.end();
                const bool attracted = std::find(att.begin(), att.end(), i) != att.end();
                CHECK(reaches == attracted);
                CHECK(reaches == in_shopping_range(inst, i, s[j]));
            }
        }
    }
}

TEST_CASE("placement parsing and validation") {
    const Instance gstar = gen_gstar();
    const Placement s = parse_placement(gstar, "v2, v3");
    CHECK(s == place(gstar, {"v2", "v3"}));
    CHECK_THROWS_AS(parse_placement(gstar, "v2,v9"), InputError);
    CHECK_THROWS_AS(validate_placement(gstar, {0}), InputError);
    CHECK_NOTHROW(validate_placement(gstar, {0, 0}));
}
