#include "hopper/search.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hopper/similarity.hpp"

namespace hopper {

bool goal_satisfied(const SearchSpec& spec, const Configuration& c) {
    if (spec.goal == Goal::ExactTarget) {
        if (!spec.target) throw std::invalid_argument("search: ExactTarget goal needs a target");
        return c == *spec.target;
    }
    const Similarity sim = similar_up_to_translation(spec.start, c);
    return sim.similar && sim.scale_cmp > 0;
}

namespace {

void validate(const SearchSpec& spec) {
    if (spec.max_depth < 0) throw std::invalid_argument("search: max_depth must be >= 0");
    if (spec.start.pieces() < 2) throw std::invalid_argument("search: degenerate start");
    if (spec.goal == Goal::ExactTarget && !spec.target)
        throw std::invalid_argument("search: ExactTarget goal needs a target");
}

}  // namespace

SearchReport bfs_search(const SearchSpec& spec) {
    validate(spec);
    SearchReport rep;
    if (goal_satisfied(spec, spec.start)) {
        rep.found = JumpSequence{};
        rep.exhaustive = spec.max_depth == 0;
        return rep;
    }

    const int N = spec.start.pieces();
    struct Lineage {
        int parent;
        Jump via;
    };
    std::vector<Lineage> lineage;
    std::vector<std::pair<int, Configuration>> frontier;  // (lineage index, state)
    frontier.push_back({-1, spec.start});
    std::unordered_set<std::string> seen;
    if (spec.dedup) seen.insert(spec.start.canonical_key());
    unsigned long long discovered = 1;

    auto path_to = [&](int idx) {
        JumpSequence s;
        for (int cur = idx; cur >= 0; cur = lineage[static_cast<size_t>(cur)].parent)
            s.push_back(lineage[static_cast<size_t>(cur)].via);
        std::reverse(s.begin(), s.end());
        return s;
    };

    for (int depth = 1; depth <= spec.max_depth; ++depth) {
        std::vector<std::pair<int, Configuration>> next;
        for (const auto& [pidx, state] : frontier) {
            ++rep.nodes_expanded;
            for (int mover = 0; mover < N; ++mover) {
                for (int over = 0; over < N; ++over) {
                    if (over == mover) continue;
                    Configuration child = apply_jump(state, {mover, over});
                    if (spec.dedup && !seen.insert(child.canonical_key()).second) continue;
                    if (++discovered > spec.node_cap) return rep;  // budget: partial report
                    const int idx = static_cast<int>(lineage.size());
                    lineage.push_back({pidx, {mover, over}});
                    if (goal_satisfied(spec, child)) {
                        rep.found = path_to(idx);
                        rep.depth_reached = depth;
                        return rep;
                    }
                    if (depth < spec.max_depth) next.push_back({idx, std::move(child)});
                }
            }
        }
        rep.depth_reached = depth;
        frontier = std::move(next);
    }
    rep.exhaustive = true;
    return rep;
}

SearchReport iddfs_search(const SearchSpec& spec) {
    validate(spec);
    SearchReport rep;

    JumpSequence path;
    const int N = spec.start.pieces();
    bool budget_hit = false;

    // Returns the goal path if found at exactly `limit` plies below `state`.
    std::function<bool(const Configuration&, int)> dfs = [&](const Configuration& state,
                                                             int remaining) -> bool {
        if (remaining == 0) return goal_satisfied(spec, state);
        if (++rep.nodes_expanded > spec.node_cap) {
            budget_hit = true;
            return false;
        }
        for (int mover = 0; mover < N && !budget_hit; ++mover) {
            for (int over = 0; over < N && !budget_hit; ++over) {
                if (over == mover) continue;
                Configuration child = apply_jump(state, {mover, over});
                path.push_back({mover, over});
                if (dfs(child, remaining - 1)) return true;
                path.pop_back();
            }
        }
        return false;
    };

    for (int limit = 0; limit <= spec.max_depth; ++limit) {
        path.clear();
        if (dfs(spec.start, limit)) {
            rep.found = path;
            rep.depth_reached = limit;
            return rep;
        }
        if (budget_hit) return rep;  // partial: exhaustive stays false
        rep.depth_reached = limit;
    }
    rep.exhaustive = true;
    return rep;
}

}  // namespace hopper
