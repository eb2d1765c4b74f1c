/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/matching.hh>

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

using std::optional;
using std::vector;

namespace rtw
{
    using std::to_string;

    namespace
    {
        auto partners_of_b(const BipartiteGraph & g, const Matching & m) -> vector<int>
        {
            vector<int> partner(g.right, unmatched);
            for (int a = 0 ; a < g.left ; ++a)
                if (m[a] != unmatched)
                    partner[m[a]] = a;
            return partner;
        }

        auto describe(const vector<int> & path) -> std::string
        {
            std::ostringstream s;
            s << "matching is not maximum, augmenting path:";
            for (std::size_t i = 0 ; i < path.size() ; ++i)
                s << " " << (i % 2 == 0 ? "a" : "b") << path[i];
            return s.str();
        }
    }

    BipartiteGraph::BipartiteGraph(int left_size, int right_size) :
        left(left_size),
        right(right_size),
        adjacency(left_size)
    {
    }

    auto BipartiteGraph::add_edge(int a, int b) -> void
    {
        if (a < 0 || a >= left || b < 0 || b >= right)
            throw InvalidArgument("bipartite edge out of range");
        auto & row = adjacency[a];
        auto pos = std::lower_bound(row.begin(), row.end(), b);
        if (pos == row.end() || *pos != b)
            row.insert(pos, b);
    }

    auto BipartiteGraph::adjacent(int a, int b) const -> bool
    {
        return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
    }

    auto maximum_matching(const BipartiteGraph & g) -> Matching
    {
        Matching m(g.left, unmatched);
        vector<int> partner(g.right, unmatched);
        vector<int> visited(g.right, -1);

        std::function<bool (int, int)> augment = [&] (int a, int round) -> bool {
            for (int b : g.adjacency[a]) {
                if (visited[b] == round)
                    continue;
                visited[b] = round;
                if (partner[b] == unmatched || augment(partner[b], round)) {
                    partner[b] = a;
                    m[a] = b;
                    return true;
                }
            }
            return false;
        };

        for (int a = 0 ; a < g.left ; ++a)
            augment(a, a);

        return m;
    }

    auto is_matching(const BipartiteGraph & g, const Matching & m) -> bool
    {
        if (int(m.size()) != g.left)
            return false;
        vector<bool> taken(g.right, false);
        for (int a = 0 ; a < g.left ; ++a) {
            if (m[a] == unmatched)
                continue;
            if (m[a] < 0 || m[a] >= g.right || taken[m[a]] || ! g.adjacent(a, m[a]))
                return false;
            taken[m[a]] = true;
        }
        return true;
    }

    auto find_augmenting_path(const BipartiteGraph & g, const Matching & m) -> optional<vector<int>>
    {
        auto partner = partners_of_b(g, m);

        // breadth first from all unmatched A-vertices at once
        vector<int> parent_of_b(g.right, -2), parent_of_a(g.left, -2);
        std::deque<int> queue;
        for (int a = 0 ; a < g.left ; ++a)
            if (m[a] == unmatched) {
                parent_of_a[a] = -1;
                queue.push_back(a);
            }

        while (! queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int b : g.adjacency[a]) {
                if (b == m[a] || parent_of_b[b] != -2)
                    continue;
                parent_of_b[b] = a;
                if (partner[b] == unmatched) {
                    vector<int> path;
                    int cur_b = b;
                    while (true) {
                        int cur_a = parent_of_b[cur_b];
                        path.push_back(cur_b);
                        path.push_back(cur_a);
                        if (parent_of_a[cur_a] == -1)
                            break;
                        cur_b = parent_of_a[cur_a];
                    }
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                int next = partner[b];
                if (parent_of_a[next] == -2) {
                    parent_of_a[next] = b;
                    queue.push_back(next);
                }
            }
        }

        return std::nullopt;
    }

    NotMaximumMatching::NotMaximumMatching(vector<int> path) :
        Error(describe(path)),
        _path(std::move(path))
    {
    }

    auto matching_decomposition(const BipartiteGraph & g, const Matching & m) -> BipartitePartition
    {
        if (! is_matching(g, m))
            throw InvalidArgument("the given map is not a matching of the bipartite graph");
        if (auto path = find_augmenting_path(g, m))
            throw NotMaximumMatching(std::move(*path));

        auto partner = partners_of_b(g, m);

        // alternating reachability: A to B along non-matching edges, B to A along M
        vector<bool> reached_a(g.left, false), reached_b(g.right, false);
        std::deque<int> queue;
        for (int a = 0 ; a < g.left ; ++a)
            if (m[a] == unmatched) {
                reached_a[a] = true;
                queue.push_back(a);
            }
        while (! queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int b : g.adjacency[a]) {
                if (b == m[a] || reached_b[b])
                    continue;
                reached_b[b] = true;
                // partner exists, otherwise b would end an augmenting path
                int next = partner[b];
                if (! reached_a[next]) {
                    reached_a[next] = true;
                    queue.push_back(next);
                }
            }
        }

        BipartitePartition result;
        for (int a = 0 ; a < g.left ; ++a)
            (reached_a[a] ? result.a2 : result.a1).push_back(a);
        for (int b = 0 ; b < g.right ; ++b)
            if (partner[b] != unmatched)
                (reached_b[b] ? result.b2 : result.b1).push_back(b);
        return result;
    }

    auto check_partition(const BipartiteGraph & g, const Matching & m, const BipartitePartition & p) -> bool
    {
        if (! is_matching(g, m))
            return false;

        vector<int> a_side(g.left, 0), b_side(g.right, 0);
        for (int a : p.a1) { if (a < 0 || a >= g.left || a_side[a]) return false; a_side[a] = 1; }
        for (int a : p.a2) { if (a < 0 || a >= g.left || a_side[a]) return false; a_side[a] = 2; }
        for (int b : p.b1) { if (b < 0 || b >= g.right || b_side[b]) return false; b_side[b] = 1; }
        for (int b : p.b2) { if (b < 0 || b >= g.right || b_side[b]) return false; b_side[b] = 2; }

        // A1, A2 cover A
        if (std::count(a_side.begin(), a_side.end(), 0) != 0)
            return false;

        // B1 and B2 cover exactly the matched B-vertices
        auto partner = partners_of_b(g, m);
        for (int b = 0 ; b < g.right ; ++b)
            if ((partner[b] != unmatched) != (b_side[b] != 0))
                return false;

        for (int a : p.a1)
            if (m[a] == unmatched || b_side[m[a]] != 1)
                return false;

        for (int a : p.a2)
            for (int b : g.adjacency[a])
                if (b_side[b] != 2)
                    return false;

        return p.a1.size() == p.b1.size();
    }
}
