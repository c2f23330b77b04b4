#include "plumbing/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace plumbing {

namespace {

Color opposite(Color c) { return c == Color::B ? Color::W : Color::B; }

std::map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], i).second)
            throw InvalidArgument("duplicate vertex label: " + labels[i]);
    return index;
}

std::vector<std::pair<std::size_t, std::size_t>>
resolve_edges(const std::map<std::string, std::size_t>& index, const std::vector<EdgeSpec>& edges) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges) {
        auto ia = index.find(e.a);
        if (ia == index.end())
            throw UnknownVertex("edge endpoint not declared: " + e.a);
        auto ib = index.find(e.b);
        if (ib == index.end())
            throw UnknownVertex("edge endpoint not declared: " + e.b);
        const std::size_t u = ia->second;
        const std::size_t v = ib->second;
        if (u == v)
            throw NotATree("self loop at vertex " + e.a);
        if (!seen.insert(std::minmax(u, v)).second)
            throw NotATree("parallel edge " + e.a + " " + e.b);
        out.emplace_back(u, v);
    }
    return out;
}

std::vector<std::vector<std::size_t>>
adjacency(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

void require_tree(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (edges.size() != n - 1)
        throw NotATree("a tree on " + std::to_string(n) + " vertices needs " +
                       std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
    auto adj = adjacency(n, edges);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : adj[v])
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != n)
        throw NotATree("graph is disconnected");
}

/// Greedy leaf matching on vertex indices: repeatedly match a leaf to its
/// neighbor and delete both. Returns nullopt when some vertex ends up
/// isolated and unmatched.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>>
greedy_matching(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    auto adj = adjacency(n, edges);
    std::vector<std::size_t> degree(n);
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = adj[v].size();
        if (degree[v] == 1)
            leaves.push_back(v);
    }

    std::vector<std::pair<std::size_t, std::size_t>> matched;
    std::size_t alive_count = n;
    while (!leaves.empty()) {
        std::size_t leaf = leaves.back();
        leaves.pop_back();
        if (!alive[leaf])
            continue;
        std::size_t partner = n;
        for (std::size_t u : adj[leaf])
            if (alive[u]) {
                partner = u;
                break;
            }
        if (partner == n)
            return std::nullopt; // leaf's neighbor was already consumed
        alive[leaf] = false;
        alive[partner] = false;
        alive_count -= 2;
        matched.emplace_back(leaf, partner);
        for (std::size_t u : adj[partner])
            if (alive[u] && --degree[u] == 1)
                leaves.push_back(u);
    }
    if (alive_count != 0)
        return std::nullopt;
    return matched;
}

std::size_t centroid_root(std::size_t n, const std::vector<std::vector<std::size_t>>& adj,
                          std::vector<std::size_t>& centroids_out) {
    std::vector<std::size_t> size(n, 1);
    std::vector<std::size_t> order;
    std::vector<std::size_t> parent(n, n);
    order.reserve(n);
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t u : adj[order[i]])
            if (u != parent[order[i]]) {
                parent[u] = order[i];
                order.push_back(u);
            }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] != n)
            size[parent[*it]] += size[*it];

    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t heaviest = n - size[v];
        for (std::size_t u : adj[v])
            if (u != parent[v])
                heaviest = std::max(heaviest, size[u]);
        if (best == n || heaviest < best) {
            best = heaviest;
            centroids_out.clear();
        }
        if (heaviest == best)
            centroids_out.push_back(v);
    }
    return best;
}

} // namespace

MatchedTree MatchedTree::build(const std::vector<VertexSpec>& vertices,
                               const std::vector<EdgeSpec>& edges) {
    if (vertices.empty())
        throw InvalidArgument("vertex list is empty");
    MatchedTree t;
    for (const auto& v : vertices) {
        t.labels_.push_back(v.label);
        t.colors_.push_back(v.color);
    }
    auto index = index_labels(t.labels_);
    t.edges_ = resolve_edges(index, edges);
    require_tree(t.labels_.size(), t.edges_);
    for (const auto& [u, v] : t.edges_)
        if (t.colors_[u] == t.colors_[v])
            throw NotBipartite("edge " + t.labels_[u] + " " + t.labels_[v] +
                               " joins two " + std::string(1, color_char(t.colors_[u])) +
                               " vertices");
    t.finalize();
    return t;
}

MatchedTree MatchedTree::build(const std::vector<std::string>& labels,
                               const std::vector<EdgeSpec>& edges) {
    if (labels.empty())
        throw InvalidArgument("vertex list is empty");
    auto index = index_labels(labels);
    auto idx_edges = resolve_edges(index, edges);
    require_tree(labels.size(), idx_edges);

    // 2-color by traversal parity; which class is B is settled below.
    auto adj = adjacency(labels.size(), idx_edges);
    std::vector<int> parity(labels.size(), -1);
    std::vector<std::size_t> stack{0};
    parity[0] = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : adj[v])
            if (parity[u] < 0) {
                parity[u] = 1 - parity[v];
                stack.push_back(u);
            }
    }

    auto make = [&](Color even_color) {
        std::vector<VertexSpec> specs;
        specs.reserve(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
            specs.push_back({labels[i], parity[i] == 0 ? even_color : opposite(even_color)});
        return build(specs, edges);
    };
    MatchedTree a = make(Color::B);
    MatchedTree b = make(Color::W);
    return a.canonical_code() <= b.canonical_code() ? a : b;
}

void MatchedTree::finalize() {
    const std::size_t n = labels_.size();

    auto matched = greedy_matching(n, edges_);
    if (!matched)
        throw NoPerfectMatching("tree admits no perfect matching");

    partner_.assign(n, n);
    for (const auto& [u, v] : *matched) {
        partner_[u] = v;
        partner_[v] = u;
    }
    edge_matched_.assign(edges_.size(), false);
    for (std::size_t e = 0; e < edges_.size(); ++e)
        edge_matched_[e] = partner_[edges_[e].first] == edges_[e].second;

    // Orientation: matched edges B->W, unmatched edges W->B.
    down_.assign(n, {});
    up_.assign(n, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        if (colors_[u] != Color::B)
            std::swap(u, v); // u in B, v in W
        const std::size_t from = edge_matched_[e] ? u : v;
        const std::size_t to = edge_matched_[e] ? v : u;
        down_[from].push_back(to);
        up_[to].push_back(from);
    }

    // Canonical code: AHU rooted at the centroid(s), colors and matched
    // flags folded in.
    auto adj = adjacency(n, edges_);
    std::function<std::string(std::size_t, std::size_t)> rooted_code =
        [&](std::size_t v, std::size_t parent) -> std::string {
        std::vector<std::string> children;
        for (std::size_t u : adj[v])
            if (u != parent) {
                const char tag = partner_[v] == u ? 'm' : 'u';
                children.push_back(tag + rooted_code(u, v));
            }
        std::sort(children.begin(), children.end());
        std::string code = "(";
        code += color_char(colors_[v]);
        for (const auto& c : children)
            code += c;
        code += ')';
        return code;
    };
    std::vector<std::size_t> centroids;
    centroid_root(n, adj, centroids);
    canonical_code_.clear();
    for (std::size_t c : centroids) {
        std::string code = rooted_code(c, n);
        if (canonical_code_.empty() || code < canonical_code_)
            canonical_code_ = code;
    }

    // Canonical order: topological, minimal elements first; ties broken by
    // the code of the down-closure, then by label.
    std::vector<std::string> down_code(n);
    std::function<std::string(std::size_t)> code_down = [&](std::size_t v) -> std::string {
        if (!down_code[v].empty())
            return down_code[v];
        std::vector<std::string> children;
        for (std::size_t u : down_[v])
            children.push_back((partner_[v] == u ? 'm' : 'u') + code_down(u));
        std::sort(children.begin(), children.end());
        std::string code = "(";
        code += color_char(colors_[v]);
        for (const auto& c : children)
            code += c;
        code += ')';
        down_code[v] = code;
        return code;
    };
    for (std::size_t v = 0; v < n; ++v)
        code_down(v);

    std::vector<std::size_t> pending(n);
    std::vector<bool> emitted(n, false);
    for (std::size_t v = 0; v < n; ++v)
        pending[v] = down_[v].size();
    std::vector<std::size_t> canonical;
    canonical.reserve(n);
    while (canonical.size() < n) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (emitted[v] || pending[v] != 0)
                continue;
            if (pick == n || std::make_pair(down_code[v], labels_[v]) <
                                 std::make_pair(down_code[pick], labels_[pick]))
                pick = v;
        }
        emitted[pick] = true;
        canonical.push_back(pick);
        for (std::size_t u : up_[pick])
            --pending[u];
    }

    canonical_labels_.clear();
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
        canonical_labels_.push_back(labels_[canonical[i]]);
        position[canonical[i]] = i;
    }

    canonical_edges_.clear();
    std::vector<std::size_t> edge_order(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e)
        edge_order[e] = e;
    std::sort(edge_order.begin(), edge_order.end(), [&](std::size_t a, std::size_t b) {
        auto ka = std::minmax(position[edges_[a].first], position[edges_[a].second]);
        auto kb = std::minmax(position[edges_[b].first], position[edges_[b].second]);
        return ka < kb;
    });
    for (std::size_t e : edge_order) {
        auto [u, v] = edges_[e];
        if (colors_[u] != Color::B)
            std::swap(u, v);
        const std::size_t from = edge_matched_[e] ? u : v;
        const std::size_t to = edge_matched_[e] ? v : u;
        canonical_edges_.push_back({labels_[from], labels_[to], edge_matched_[e]});
    }
}

std::size_t MatchedTree::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    throw UnknownVertex("unknown vertex: " + label);
}

bool MatchedTree::has_vertex(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Color MatchedTree::color(const std::string& label) const {
    return colors_[index_of(label)];
}

std::vector<DirectedEdge> MatchedTree::matching() const {
    std::vector<DirectedEdge> out;
    for (const auto& e : canonical_edges_)
        if (e.matched)
            out.push_back(e);
    return out;
}

bool MatchedTree::is_edge(const std::string& u, const std::string& v) const {
    const std::size_t iu = index_of(u);
    const std::size_t iv = index_of(v);
    for (const auto& [a, b] : edges_)
        if ((a == iu && b == iv) || (a == iv && b == iu))
            return true;
    return false;
}

bool MatchedTree::is_matched_edge(const std::string& u, const std::string& v) const {
    return is_edge(u, v) && partner_[index_of(u)] == index_of(v);
}

std::string MatchedTree::matched_partner(const std::string& label) const {
    return labels_[partner_[index_of(label)]];
}

bool MatchedTree::leq(const std::string& u, const std::string& v) const {
    const std::size_t target = index_of(u);
    std::vector<std::size_t> stack{index_of(v)};
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (x == target)
            return true;
        for (std::size_t y : down_[x])
            stack.push_back(y);
    }
    return false;
}

bool MatchedTree::covers_one(const std::string& u, const std::string& v) const {
    const std::size_t iu = index_of(u);
    const std::size_t iv = index_of(v);
    return std::find(down_[iv].begin(), down_[iv].end(), iu) != down_[iv].end();
}

std::set<std::string> MatchedTree::below_set(const std::string& b) const {
    const std::size_t ib = index_of(b);
    if (colors_[ib] != Color::B)
        throw WrongColor("below_set expects a B vertex, got " + b);
    std::set<std::string> out;
    std::vector<std::size_t> stack{ib};
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (colors_[x] == Color::W)
            out.insert(labels_[x]);
        for (std::size_t y : down_[x])
            stack.push_back(y);
    }
    return out;
}

std::set<std::string> MatchedTree::above_set(const std::string& w) const {
    const std::size_t iw = index_of(w);
    if (colors_[iw] != Color::W)
        throw WrongColor("above_set expects a W vertex, got " + w);
    std::set<std::string> out;
    std::vector<std::size_t> stack{iw};
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (colors_[x] == Color::B)
            out.insert(labels_[x]);
        for (std::size_t y : up_[x])
            stack.push_back(y);
    }
    return out;
}

std::vector<DirectedEdge> MatchedTree::directed_path(const std::string& v_hi,
                                                     const std::string& v_lo) const {
    const std::size_t hi = index_of(v_hi);
    const std::size_t lo = index_of(v_lo);
    if (hi == lo)
        return {};

    // Unique undirected path, then check every step follows the orientation.
    const std::size_t n = labels_.size();
    auto adj = adjacency(n, edges_);
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> stack{hi};
    parent[hi] = hi;
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : adj[x])
            if (parent[y] == n) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    std::vector<std::size_t> path{lo};
    while (path.back() != hi)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end()); // hi ... lo

    std::vector<DirectedEdge> out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const std::size_t from = path[i];
        const std::size_t to = path[i + 1];
        if (std::find(down_[from].begin(), down_[from].end(), to) == down_[from].end())
            return {};
        out.push_back({labels_[from], labels_[to], partner_[from] == to});
    }
    return out;
}

bool MatchedTree::structurally_equal(const MatchedTree& rhs) const {
    auto vertex_key = [](const MatchedTree& t) {
        std::set<std::pair<std::string, char>> key;
        for (std::size_t i = 0; i < t.labels_.size(); ++i)
            key.insert({t.labels_[i], color_char(t.colors_[i])});
        return key;
    };
    auto edge_key = [](const MatchedTree& t) {
        std::set<std::pair<std::string, std::string>> key;
        for (const auto& [u, v] : t.edges_)
            key.insert(std::minmax(t.labels_[u], t.labels_[v]));
        return key;
    };
    return vertex_key(*this) == vertex_key(rhs) && edge_key(*this) == edge_key(rhs);
}

std::optional<std::vector<std::pair<std::string, std::string>>>
find_matching(const std::vector<std::string>& labels, const std::vector<EdgeSpec>& edges) {
    if (labels.empty())
        throw NotATree("empty vertex set");
    auto index = index_labels(labels);
    auto idx_edges = resolve_edges(index, edges);
    require_tree(labels.size(), idx_edges);
    auto matched = greedy_matching(labels.size(), idx_edges);
    if (!matched)
        return std::nullopt;
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [u, v] : *matched)
        out.push_back(std::minmax(labels[u], labels[v]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MatchedTree> enumerate_matched_trees(int n_pairs) {
    if (n_pairs < 1)
        throw InvalidArgument("n_pairs must be at least 1");

    std::vector<MatchedTree> level{
        MatchedTree::build(std::vector<VertexSpec>{{"b1", Color::B}, {"w1", Color::W}},
                           {{"b1", "w1"}})};
    for (int k = 2; k <= n_pairs; ++k) {
        std::map<std::string, MatchedTree> next;
        const std::string new_b = "b" + std::to_string(k);
        const std::string new_w = "w" + std::to_string(k);
        for (const MatchedTree& t : level) {
            std::vector<VertexSpec> base;
            std::vector<EdgeSpec> base_edges;
            for (const auto& label : t.canonical_order())
                base.push_back({label, t.color(label)});
            for (const auto& e : t.directed_edges())
                base_edges.push_back({e.from, e.to});
            for (const auto& attach : t.canonical_order()) {
                // New vertex v joins `attach`; new leaf l is matched to v.
                const Color cv = opposite(t.color(attach));
                const std::string v = cv == Color::B ? new_b : new_w;
                const std::string l = cv == Color::B ? new_w : new_b;
                std::vector<VertexSpec> verts = base;
                verts.push_back({v, cv});
                verts.push_back({l, opposite(cv)});
                std::vector<EdgeSpec> edges = base_edges;
                edges.push_back({attach, v});
                edges.push_back({v, l});
                MatchedTree grown = MatchedTree::build(verts, edges);
                next.emplace(grown.canonical_code(), std::move(grown));
            }
        }
        level.clear();
        for (auto& [code, tree] : next)
            level.push_back(std::move(tree));
    }
    return level;
}

MatchedTree chain_tree(int n_pairs) {
    if (n_pairs < 1)
        throw InvalidArgument("chain_tree needs n_pairs >= 1");
    std::vector<VertexSpec> verts;
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= n_pairs; ++i) {
        const std::string w = "w" + std::to_string(i);
        const std::string b = "b" + std::to_string(i);
        verts.push_back({w, Color::W});
        verts.push_back({b, Color::B});
        edges.push_back({w, b});
        if (i > 1)
            edges.push_back({"b" + std::to_string(i - 1), w});
    }
    return MatchedTree::build(verts, edges);
}

} // namespace plumbing
