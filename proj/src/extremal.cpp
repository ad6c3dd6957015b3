// extremal.cpp -- root-graph BFS for minimal transporters and negators.

#include "schubaut/extremal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace schubaut {

namespace {

struct Candidate {
    IntMatrix mat;
    Word word;
};

// Shortest-walk distances from the highest root over edges beta ~ s_i(beta).
// Unreachable vertices (short roots outside the highest-root orbit) keep -1.
std::vector<int> distances_from_highest(const RootSystem& rs) {
    const auto& roots = rs.all_roots();
    std::vector<int> dist(roots.size(), -1);
    std::queue<int> queue;
    const int start = *rs.root_index(rs.highest());
    dist[start] = 0;
    queue.push(start);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int i = 1; i <= rs.rank(); ++i) {
            const Root image = rs.reflect(i, roots[v]);
            const int u = *rs.root_index(image);
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
        }
    }
    return dist;
}

// All distinct minimal elements u with u(vertex) = alpha_0, assembled by
// walking shortest predecessors: if dist(s_i(v)) = dist(v) - 1 then every
// minimal u' for s_i(v) yields the minimal u' s_i for v.
const std::vector<Candidate>& minimal_elements(const RootSystem& rs, int vertex,
                                               const std::vector<int>& dist,
                                               std::map<int, std::vector<Candidate>>& memo) {
    auto it = memo.find(vertex);
    if (it != memo.end()) return it->second;

    std::vector<Candidate> result;
    if (dist[vertex] == 0) {
        result.push_back(Candidate{IntMatrix::identity(rs.rank()), {}});
    } else {
        const Root& v = rs.all_roots()[vertex];
        for (int i = 1; i <= rs.rank(); ++i) {
            const int pred = *rs.root_index(rs.reflect(i, v));
            if (dist[pred] != dist[vertex] - 1) continue;
            for (const Candidate& up : minimal_elements(rs, pred, dist, memo)) {
                Candidate c;
                c.mat = up.mat * simple_reflection(rs, i).matrix();
                c.word = up.word;
                c.word.push_back(i);
                result.push_back(std::move(c));
            }
        }
        std::sort(result.begin(), result.end(), [](const Candidate& a, const Candidate& b) {
            if (a.mat != b.mat) return a.mat < b.mat;
            return a.word < b.word;
        });
        result.erase(std::unique(result.begin(), result.end(),
                                 [](const Candidate& a, const Candidate& b) { return a.mat == b.mat; }),
                     result.end());
    }
    return memo.emplace(vertex, std::move(result)).first->second;
}

TransporterResult transport_to_highest(const RootSystem& rs, const Root& target) {
    rs.require_root(target);
    const std::vector<int> dist = distances_from_highest(rs);
    const int vertex = *rs.root_index(target);
    if (dist[vertex] < 0)
        throw std::invalid_argument("no transporter: the target root lies outside the W-orbit of "
                                    "the highest root of " + rs.type().name());
    std::map<int, std::vector<Candidate>> memo;
    const auto& candidates = minimal_elements(rs, vertex, dist, memo);

    TransporterResult out;
    out.target = target;
    out.length = dist[vertex];
    out.unique = candidates.size() == 1;
    out.element = WeylElement(candidates.front().mat, candidates.front().word);
    return out;
}

}  // namespace

int dual_coxeter(const RootSystem& rs) {
    int g = 1;
    for (int c : rs.coroot_coords(rs.highest())) g += c;
    return g;
}

TransporterResult minimal_transporter(const RootSystem& rs, const Root& target) {
    TransporterResult result = transport_to_highest(rs, target);
    // minimal transport of a simple root always has length g - 2
    bool simple = false;
    for (int i = 1; i <= rs.rank(); ++i)
        if (target == rs.simple_root(i)) simple = true;
    if (simple && result.length != dual_coxeter(rs) - 2)
        throw std::logic_error("transporter length for a simple root differs from g - 2 in " +
                               rs.type().name());
    return result;
}

TransporterResult minimal_negator(const RootSystem& rs, int simple) {
    rs.require_simple_index(simple);
    TransporterResult result = transport_to_highest(rs, -rs.simple_root(simple));
    int ht0 = 0;
    for (int x : rs.highest().coords) ht0 += x;
    if (rs.type().simply_laced() && result.length != ht0)
        throw std::logic_error("negator length differs from ht(alpha_0) in " + rs.type().name());
    return result;
}

}  // namespace schubaut
