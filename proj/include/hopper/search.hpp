#pragma once

#include <optional>

#include "hopper/configuration.hpp"

namespace hopper {

enum class Goal { SimilarLarger, ExactTarget };

struct SearchSpec {
    Configuration start;
    Goal goal = Goal::SimilarLarger;
    std::optional<Configuration> target;  // required for ExactTarget
    int max_depth = 1;
    bool dedup = true;
    unsigned long long node_cap = 50000000ULL;  // canonical keys / visited nodes
};

struct SearchReport {
    std::optional<JumpSequence> found;
    unsigned long long nodes_expanded = 0;
    int depth_reached = 0;  // deepest fully covered level (or the goal depth)
    bool exhaustive = false;
};

// True iff c satisfies spec.goal (exact arithmetic throughout).
bool goal_satisfied(const SearchSpec& spec, const Configuration& c);

// Breadth-first over all legal jumps, expansion ordered lexicographically by
// (mover, over); dedup hashes canonical exact states. Aborting on node_cap
// returns a partial report with exhaustive = false.
SearchReport bfs_search(const SearchSpec& spec);

// Iterative-deepening DFS: same first-found sequence, no dedup set.
SearchReport iddfs_search(const SearchSpec& spec);

}  // namespace hopper
