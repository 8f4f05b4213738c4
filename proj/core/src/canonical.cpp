#include "pcube/canonical.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace pcube {

namespace {

// One branch-and-bound state: rows partitioned into groups ordered by the
// (shared) value of their already-chosen column prefix.
struct Node {
    std::vector<std::vector<CoordSet>> groups;
    std::vector<int> chosen;
};

void leaf_key(const Node& node, int k, std::string& best, bool& have_best) {
    std::string key;
    key.reserve(node.groups.size() * (k + 1));
    for (const auto& g : node.groups)
        for (const auto& row : g) {
            for (int j = 0; j < k; ++j) key.push_back(row.test(node.chosen[j]) ? '1' : '0');
            key.push_back(',');
        }
    if (!have_best || key < best) {
        best = std::move(key);
        have_best = true;
    }
}

// Candidate columns are scored by the ones-count per group; zeros sort before
// ones inside a group, so fewer ones in earlier groups means a smaller sorted
// prefix list. Only minimally scored columns can lead to the minimum key.
void descend(const Node& node, int k, std::string& best, bool& have_best) {
    int depth = static_cast<int>(node.chosen.size());
    if (depth == k) {
        leaf_key(node, k, best, have_best);
        return;
    }
    std::vector<char> used(k, 0);
    for (int c : node.chosen) used[c] = 1;

    std::vector<int> score, best_score;
    std::vector<int> ties;
    for (int c = 0; c < k; ++c) {
        if (used[c]) continue;
        score.clear();
        score.reserve(node.groups.size());
        for (const auto& g : node.groups) {
            int ones = 0;
            for (const auto& row : g) ones += row.test(c);
            score.push_back(ones);
        }
        if (ties.empty() || score < best_score) {
            best_score = score;
            ties.assign(1, c);
        } else if (score == best_score) {
            ties.push_back(c);
        }
    }

    for (int c : ties) {
        Node child;
        child.chosen = node.chosen;
        child.chosen.push_back(c);
        child.groups.reserve(node.groups.size() * 2);
        for (const auto& g : node.groups) {
            std::vector<CoordSet> zeros, ones;
            for (const auto& row : g) (row.test(c) ? ones : zeros).push_back(row);
            if (!zeros.empty()) child.groups.push_back(std::move(zeros));
            if (!ones.empty()) child.groups.push_back(std::move(ones));
        }
        descend(child, k, best, have_best);
    }
}

}  // namespace

std::string canonical_key_of_coords(int k, const std::vector<CoordSet>& coords) {
    int n = static_cast<int>(coords.size());
    std::string head = "n" + std::to_string(n) + "k" + std::to_string(k) + ";";
    if (n <= 1 || k == 0) return head;

    // Adjacency degrees straight from the coordinates.
    std::unordered_map<CoordSet, int, CoordSetHash> index;
    index.reserve(coords.size() * 2);
    for (int v = 0; v < n; ++v) index.emplace(coords[v], v);
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> nbr(n);
    for (int v = 0; v < n; ++v)
        for (int f = 0; f < k; ++f) {
            auto it = index.find(coords[v] ^ CoordSet::bit(f));
            if (it != index.end()) {
                ++deg[v];
                nbr[v].push_back(it->second);
            }
        }

    // Roots: vertices minimizing an isomorphism-invariant signature. Rooting
    // at a vertex fixes all reorientations (the root becomes the zero row).
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        sig[v].push_back(deg[v]);
        std::vector<int> nd;
        for (int w : nbr[v]) nd.push_back(deg[w]);
        std::sort(nd.begin(), nd.end());
        sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    const std::vector<int>* best_sig = &sig[0];
    for (int v = 1; v < n; ++v)
        if (sig[v] < *best_sig) best_sig = &sig[v];

    std::set<std::vector<CoordSet>> rowsets;
    for (int r = 0; r < n; ++r) {
        if (sig[r] != *best_sig) continue;
        std::vector<CoordSet> rows(n);
        for (int v = 0; v < n; ++v) rows[v] = coords[v] ^ coords[r];
        std::sort(rows.begin(), rows.end());
        rowsets.insert(std::move(rows));
    }

    std::string best;
    bool have_best = false;
    for (const auto& rows : rowsets) {
        Node root;
        root.groups.push_back(rows);
        descend(root, k, best, have_best);
    }
    return head + best;
}

std::string canonical_key(const PartialCube& pc) { return pc.canonical_key(); }

bool isomorphic(const PartialCube& a, const PartialCube& b) {
    if (a.vertex_count() != b.vertex_count() || a.class_count() != b.class_count() ||
        a.edges().size() != b.edges().size())
        return false;
    return a.canonical_key() == b.canonical_key();
}

}  // namespace pcube
