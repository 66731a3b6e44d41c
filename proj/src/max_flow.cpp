#include "linarb/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace linarb {

MaxFlow::MaxFlow(int num_nodes)
    : first_(static_cast<std::size_t>(num_nodes), -1)
    , last_(static_cast<std::size_t>(num_nodes), -1)
    , level_(static_cast<std::size_t>(num_nodes))
    , cursor_(static_cast<std::size_t>(num_nodes))
{
}

void MaxFlow::reserve_arcs(std::size_t count)
{
    arcs_.reserve(2 * count);
}

int MaxFlow::add_arc(int from, int to, std::int64_t capacity)
{
    // forward arc at even index, reverse arc at the following odd index
    auto link = [this](int node, int id) {
        if (last_[node] == -1)
            first_[node] = id;
        else
            arcs_[last_[node]].next = id;
        last_[node] = id;
    };
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back(Arc{to, -1, capacity});
    arcs_.push_back(Arc{from, -1, 0});
    link(from, id);
    link(to, id + 1);
    return id;
}

std::int64_t MaxFlow::flow_on(int arc_id) const
{
    return arcs_[arc_id ^ 1].residual;
}

bool MaxFlow::build_levels(int source, int sink)
{
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop();
        for (int a = first_[x]; a != -1; a = arcs_[a].next) {
            if (arcs_[a].residual > 0 && level_[arcs_[a].to] == -1) {
                level_[arcs_[a].to] = level_[x] + 1;
                queue.push(arcs_[a].to);
            }
        }
    }
    return level_[sink] != -1;
}

std::int64_t MaxFlow::augment(int source, int sink)
{
    std::int64_t total = 0;
    std::vector<int> path;  // arc ids from source to the current node
    int node = source;
    while (true) {
        if (node == sink) {
            std::int64_t push = std::numeric_limits<std::int64_t>::max();
            for (int a : path)
                push = std::min(push, arcs_[a].residual);
            for (int a : path) {
                arcs_[a].residual -= push;
                arcs_[a ^ 1].residual += push;
            }
            total += push;
            path.clear();
            node = source;
            continue;
        }
        int& a = cursor_[node];
        while (a != -1 && !(arcs_[a].residual > 0 && level_[arcs_[a].to] == level_[node] + 1))
            a = arcs_[a].next;
        if (a != -1) {
            path.push_back(a);
            node = arcs_[a].to;
            continue;
        }
        // dead end: retreat and skip the arc that led here
        if (node == source)
            break;
        level_[node] = -1;
        const int back = path.back();
        path.pop_back();
        node = arcs_[back ^ 1].to;
        cursor_[node] = arcs_[cursor_[node]].next;
    }
    return total;
}

std::int64_t MaxFlow::solve(int source, int sink)
{
    if (source == sink)
        return 0;
    std::int64_t flow = 0;
    while (build_levels(source, sink)) {
        std::copy(first_.begin(), first_.end(), cursor_.begin());
        flow += augment(source, sink);
    }
    return flow;
}

} // namespace linarb
