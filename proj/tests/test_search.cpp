#include "doctest.h"

#include "hopper/search.hpp"
#include "hopper/similarity.hpp"

using namespace hopper;

namespace {

Configuration unit_square() {
    return Configuration::rational(
        2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
}

}  // namespace

TEST_CASE("exact target equal to start is found at depth zero") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::ExactTarget;
    spec.target = spec.start;
    spec.max_depth = 1;
    SearchReport rep = bfs_search(spec);
    REQUIRE(rep.found.has_value());
    CHECK(rep.found->empty());
    SearchReport rep2 = iddfs_search(spec);
    REQUIRE(rep2.found.has_value());
    CHECK(rep2.found->empty());
}

TEST_CASE("one-jump exact target") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::ExactTarget;
    spec.target = apply_jump(spec.start, Jump{2, 0});
    spec.max_depth = 1;
    SearchReport rep = bfs_search(spec);
    REQUIRE(rep.found.has_value());
    CHECK(*rep.found == JumpSequence{Jump{2, 0}});
    CHECK(goal_satisfied(spec, apply_sequence(spec.start, *rep.found)));
    CHECK(iddfs_search(spec).found == rep.found);
}

TEST_CASE("bfs returns a shortest sequence") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::ExactTarget;
    JumpSequence two{Jump{1, 3}, Jump{2, 1}};
    spec.target = apply_sequence(spec.start, two);
    spec.max_depth = 4;
    SearchReport rep = bfs_search(spec);
    REQUIRE(rep.found.has_value());
    CHECK(rep.found->size() == 2);
    CHECK(apply_sequence(spec.start, *rep.found) == *spec.target);
    // iddfs agrees on the minimal length and also reaches the goal
    SearchReport rep2 = iddfs_search(spec);
    REQUIRE(rep2.found.has_value());
    CHECK(rep2.found->size() == 2);
    CHECK(apply_sequence(spec.start, *rep2.found) == *spec.target);
}

TEST_CASE("unreachable-in-depth target gives an exhaustive negative") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::ExactTarget;
    JumpSequence three{Jump{1, 0}, Jump{2, 1}, Jump{3, 2}};
    Configuration end = apply_sequence(spec.start, three);
    REQUIRE(end != spec.start);
    spec.target = end;
    spec.max_depth = 1;
    SearchReport rep = bfs_search(spec);
    CHECK_FALSE(rep.found.has_value());
    CHECK(rep.exhaustive);
    CHECK(rep.depth_reached == 1);
    SearchReport rep2 = iddfs_search(spec);
    CHECK_FALSE(rep2.found.has_value());
    CHECK(rep2.exhaustive);
}

TEST_CASE("unit square has no similar-larger image within depth 3") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::SimilarLarger;
    spec.max_depth = 3;
    SearchReport rep = bfs_search(spec);
    CHECK_FALSE(rep.found.has_value());
    CHECK(rep.exhaustive);
    CHECK(rep.depth_reached == 3);
    CHECK(rep.nodes_expanded > 100);
}

TEST_CASE("pentagon similar-larger at shallow depth is a clean negative") {
    SearchSpec spec;
    spec.start = Configuration::regular_ngon(5);
    spec.goal = Goal::SimilarLarger;
    spec.max_depth = 2;
    SearchReport rep = bfs_search(spec);
    CHECK_FALSE(rep.found.has_value());
    CHECK(rep.exhaustive);
}

TEST_CASE("node cap yields a partial report") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::SimilarLarger;
    spec.max_depth = 3;
    spec.node_cap = 5;
    SearchReport rep = bfs_search(spec);
    CHECK_FALSE(rep.found.has_value());
    CHECK_FALSE(rep.exhaustive);
    SearchReport rep2 = iddfs_search(spec);
    CHECK_FALSE(rep2.found.has_value());
    CHECK_FALSE(rep2.exhaustive);
    CHECK(rep2.nodes_expanded >= 5);
}

TEST_CASE("dedup does not change findability") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::ExactTarget;
    JumpSequence two{Jump{3, 0}, Jump{1, 2}};
    spec.target = apply_sequence(spec.start, two);
    spec.max_depth = 2;
    SearchReport with = bfs_search(spec);
    spec.dedup = false;
    SearchReport without = bfs_search(spec);
    REQUIRE(with.found.has_value());
    REQUIRE(without.found.has_value());
    CHECK(*with.found == *without.found);
    CHECK(without.nodes_expanded >= with.nodes_expanded);
}

TEST_CASE("goal_satisfied on similar-larger states") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::SimilarLarger;
    CHECK_FALSE(goal_satisfied(spec, spec.start));
    // doubled square, translated: similar and larger
    Configuration big = Configuration::rational(
        2, {{Rat(3), Rat(1)}, {Rat(5), Rat(1)}, {Rat(5), Rat(3)}, {Rat(3), Rat(3)}});
    CHECK(goal_satisfied(spec, big));
    // congruent copy: similar but not larger
    Configuration shifted = Configuration::rational(
        2, {{Rat(2), Rat(0)}, {Rat(3), Rat(0)}, {Rat(3), Rat(1)}, {Rat(2), Rat(1)}});
    CHECK_FALSE(goal_satisfied(spec, shifted));
}

TEST_CASE("search input validation") {
    SearchSpec spec;
    spec.start = unit_square();
    spec.goal = Goal::ExactTarget;  // no target set
    CHECK_THROWS_AS(bfs_search(spec), std::invalid_argument);
    spec.goal = Goal::SimilarLarger;
    spec.max_depth = -1;
    CHECK_THROWS_AS(bfs_search(spec), std::invalid_argument);
    CHECK_THROWS_AS(iddfs_search(spec), std::invalid_argument);
}

TEST_CASE("cyclotomic exact-target search") {
    SearchSpec spec;
    spec.start = Configuration::regular_ngon(5);
    spec.goal = Goal::ExactTarget;
    JumpSequence two{Jump{0, 2}, Jump{4, 0}};
    spec.target = apply_sequence(spec.start, two);
    spec.max_depth = 2;
    SearchReport rep = bfs_search(spec);
    REQUIRE(rep.found.has_value());
    CHECK(rep.found->size() == 2);
    CHECK(apply_sequence(spec.start, *rep.found) == *spec.target);
}
