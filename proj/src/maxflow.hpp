#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace abch::detail {

// Dinic's algorithm on an explicit residual network.
class MaxFlow {
public:
    static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

    explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes)) {}

    // Returns the id of the forward arc; its flow is readable via flow_on().
    int add_arc(int from, int to, std::int64_t capacity)
    {
        int id = static_cast<int>(arcs_.size());
        arcs_.push_back({to, capacity, 0});
        arcs_.push_back({from, 0, 0});
        head_[static_cast<std::size_t>(from)].push_back(id);
        head_[static_cast<std::size_t>(to)].push_back(id + 1);
        return id;
    }

    std::int64_t run(int source, int sink)
    {
        std::int64_t total = 0;
        while (bfs(source, sink)) {
            next_.assign(head_.size(), 0);
            while (std::int64_t pushed = dfs(source, sink, kInfinity)) total += pushed;
        }
        return total;
    }

    std::int64_t flow_on(int arc) const { return arcs_[static_cast<std::size_t>(arc)].flow; }

    // Nodes reachable from `source` in the residual network after run().
    std::vector<char> source_side(int source) const
    {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{source};
        seen[static_cast<std::size_t>(source)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int id : head_[static_cast<std::size_t>(u)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(id)];
                if (a.cap - a.flow > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t cap;
        std::int64_t flow;
    };

    bool bfs(int source, int sink)
    {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        level_[static_cast<std::size_t>(source)] = 0;
        q.push(source);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : head_[static_cast<std::size_t>(u)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(id)];
                if (a.cap - a.flow > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink)] >= 0;
    }

    std::int64_t dfs(int u, int sink, std::int64_t limit)
    {
        if (u == sink) return limit;
        auto& i = next_[static_cast<std::size_t>(u)];
        const auto& out = head_[static_cast<std::size_t>(u)];
        for (; i < out.size(); ++i) {
            int id = out[i];
            Arc& a = arcs_[static_cast<std::size_t>(id)];
            if (a.cap - a.flow <= 0 ||
                level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(u)] + 1)
                continue;
            if (std::int64_t pushed = dfs(a.to, sink, std::min(limit, a.cap - a.flow))) {
                a.flow += pushed;
                arcs_[static_cast<std::size_t>(id ^ 1)].flow -= pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace abch::detail
