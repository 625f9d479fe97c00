#pragma once

#include <utility>
#include <vector>

#include "triangulex/common.hpp"

namespace triangulex {

struct BipartiteMatching {
    int size = 0;
    std::vector<int> right_of_left;  // -1 where unmatched
    std::vector<int> left_of_right;
};

// Maximum bipartite matching by augmenting paths. Deterministic: left
// vertices are processed in index order and edges in the order given.
inline BipartiteMatching maximum_bipartite_matching(
    int left_n, int right_n, const std::vector<std::pair<int, int>>& edges) {
    check(left_n >= 0 && right_n >= 0, "matching sides must be nonnegative");
    std::vector<std::vector<int>> adj(left_n);
    for (auto [l, r] : edges) {
        check(l >= 0 && l < left_n && r >= 0 && r < right_n,
              "matching edge out of range");
        adj[l].push_back(r);
    }
    BipartiteMatching m;
    m.right_of_left.assign(left_n, -1);
    m.left_of_right.assign(right_n, -1);
    std::vector<char> seen(right_n, 0);
    auto augment = [&](auto&& self, int l) -> bool {
        for (int r : adj[l]) {
            if (seen[r]) continue;
            seen[r] = 1;
            if (m.left_of_right[r] < 0 || self(self, m.left_of_right[r])) {
                m.right_of_left[l] = r;
                m.left_of_right[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < left_n; ++l) {
        seen.assign(right_n, 0);
        if (augment(augment, l)) ++m.size;
    }
    return m;
}

}  // namespace triangulex
