#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace oracles {

using plumbing::Color;
using plumbing::EdgeSpec;
using plumbing::FramedPlumbing;
using plumbing::MatchedTree;
using plumbing::Rational;
using plumbing::VertexSpec;

Int subset_dp_determinant(const IntMatrix& m) {
    const std::size_t n = m.dimension();
    if (n == 0)
        return 1;
    if (n > 20)
        throw std::logic_error("subset DP determinant limited to n <= 20");
    // D[S] = determinant of the submatrix made of the last popcount(S) rows
    // and the column set S.
    std::vector<Int> dp(std::size_t{1} << n);
    dp[0] = 1;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const std::size_t k = n - static_cast<std::size_t>(__builtin_popcount(s));
        Int acc = 0;
        int parity = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!((s >> j) & 1u))
                continue;
            const Int& entry = m.at(k, j);
            if (entry != 0) {
                const Int sub = dp[s & ~(1u << j)];
                acc += (parity % 2 == 0 ? entry : -entry) * sub;
            }
            ++parity;
        }
        dp[s] = acc;
    }
    return dp[(std::size_t{1} << n) - 1];
}

int charpoly_signature(const IntMatrix& m) {
    const std::size_t n = m.dimension();
    // Values of det(A - k*I) at k = 0..n, interpolated by Lagrange.
    std::vector<Int> ys;
    for (std::size_t k = 0; k <= n; ++k) {
        IntMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i)
            shifted.at(i, i) -= Int(k);
        ys.push_back(subset_dp_determinant(shifted));
    }
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k) {
        // Lagrange basis polynomial for node k over nodes 0..n.
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == k)
                continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= Rational(static_cast<long>(j)) * basis[d];
            }
            basis = std::move(next);
            denom *= Rational(static_cast<long>(k)) - Rational(static_cast<long>(j));
        }
        for (std::size_t d = 0; d < basis.size(); ++d)
            coeffs[d] += Rational(ys[k]) * basis[d] / denom;
    }

    std::vector<Int> p(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        if (denominator(coeffs[d]) != 1)
            throw std::logic_error("charpoly interpolation not integral");
        p[d] = numerator(coeffs[d]);
    }

    auto variations = [](const std::vector<Int>& poly) {
        int count = 0;
        int last = 0;
        for (const auto& c : poly) {
            if (c == 0)
                continue;
            const int sign = c > 0 ? 1 : -1;
            if (last != 0 && sign != last)
                ++count;
            last = sign;
        }
        return count;
    };
    const int positives = variations(p);
    std::vector<Int> reflected = p;
    for (std::size_t d = 1; d <= n; d += 2)
        reflected[d] = -reflected[d];
    const int negatives = variations(reflected);
    return positives - negatives;
}

namespace {

void matchings_rec(std::size_t n, const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& incident,
                   std::vector<bool>& used, std::vector<std::size_t>& current,
                   std::vector<std::vector<std::size_t>>& out) {
    std::size_t v = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) {
            v = i;
            break;
        }
    if (v == n) {
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
    }
    for (const auto& [u, e] : incident[v]) {
        if (used[u])
            continue;
        used[v] = used[u] = true;
        current.push_back(e);
        matchings_rec(n, incident, used, current, out);
        current.pop_back();
        used[v] = used[u] = false;
    }
}

} // namespace

std::vector<std::vector<std::size_t>>
all_perfect_matchings(std::size_t n,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].first].push_back({edges[e].second, e});
        incident[edges[e].second].push_back({edges[e].first, e});
    }
    std::vector<bool> used(n, false);
    std::vector<std::size_t> current;
    std::vector<std::vector<std::size_t>> out;
    matchings_rec(n, incident, used, current, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(const std::vector<int>& seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> degree(n, 1);
    for (int s : seq)
        ++degree[static_cast<std::size_t>(s)];

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(n - 1);
    std::size_t ptr = 0;
    while (degree[ptr] != 1)
        ++ptr;
    std::size_t leaf = ptr;
    for (int s : seq) {
        const auto v = static_cast<std::size_t>(s);
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

void for_each_labeled_tree(
    std::size_t n,
    const std::function<void(const std::vector<std::pair<std::size_t, std::size_t>>&)>& fn) {
    if (n == 0)
        return;
    if (n == 1) {
        fn({});
        return;
    }
    if (n == 2) {
        fn({{0, 1}});
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        fn(prufer_decode(seq));
        std::size_t pos = 0;
        while (pos < seq.size() && seq[pos] == static_cast<int>(n) - 1)
            seq[pos++] = 0;
        if (pos == seq.size())
            break;
        ++seq[pos];
    }
}

bool color_iso_exists(const MatchedTree& a, const MatchedTree& b) {
    if (a.vertex_count() != b.vertex_count())
        return false;
    const auto& va = a.canonical_order();
    std::vector<std::string> b_black, b_white;
    for (const auto& v : b.canonical_order())
        (b.color(v) == Color::B ? b_black : b_white).push_back(v);

    std::vector<std::string> a_black, a_white;
    for (const auto& v : va)
        (a.color(v) == Color::B ? a_black : a_white).push_back(v);
    if (a_black.size() != b_black.size())
        return false;

    std::sort(b_black.begin(), b_black.end());
    std::sort(b_white.begin(), b_white.end());
    // Try every color-respecting bijection and test adjacency directly.
    do {
        do {
            std::map<std::string, std::string> phi;
            for (std::size_t i = 0; i < a_black.size(); ++i)
                phi[a_black[i]] = b_black[i];
            for (std::size_t i = 0; i < a_white.size(); ++i)
                phi[a_white[i]] = b_white[i];
            bool good = true;
            for (const auto& e : a.directed_edges())
                if (!b.is_edge(phi[e.from], phi[e.to])) {
                    good = false;
                    break;
                }
            if (good)
                return true;
        } while (std::next_permutation(b_white.begin(), b_white.end()));
    } while (std::next_permutation(b_black.begin(), b_black.end()));
    return false;
}

std::size_t matched_tree_count_by_prufer(int n_pairs) {
    const std::size_t n = 2 * static_cast<std::size_t>(n_pairs);
    std::set<std::string> codes;
    for_each_labeled_tree(n, [&](const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        if (all_perfect_matchings(n, edges).empty())
            return;
        // Both class namings; colors alternate with BFS parity from 0.
        std::vector<std::vector<std::size_t>> adj(n);
        for (const auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<int> parity(n, -1);
        std::vector<std::size_t> stack{0};
        parity[0] = 0;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t u : adj[v])
                if (parity[u] < 0) {
                    parity[u] = 1 - parity[v];
                    stack.push_back(u);
                }
        }
        for (int even_is_black = 0; even_is_black < 2; ++even_is_black) {
            std::vector<VertexSpec> verts;
            std::vector<EdgeSpec> es;
            for (std::size_t v = 0; v < n; ++v) {
                const bool black = (parity[v] == 0) == (even_is_black == 1);
                verts.push_back({"v" + std::to_string(v), black ? Color::B : Color::W});
            }
            for (const auto& [u, v] : edges)
                es.push_back({"v" + std::to_string(u), "v" + std::to_string(v)});
            codes.insert(MatchedTree::build(verts, es).canonical_code());
        }
    });
    return codes.size();
}

bool naive_sign_equivalent(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.dimension();
    if (n > 20)
        throw std::logic_error("naive sign search limited to n <= 20");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool good = true;
        for (std::size_t i = 0; i < n && good; ++i)
            for (std::size_t j = 0; j < n && good; ++j) {
                const int s = (((mask >> i) ^ (mask >> j)) & 1u) ? -1 : 1;
                if (Int(s) * b.at(i, j) != a.at(i, j))
                    good = false;
            }
        if (good)
            return true;
    }
    return false;
}

MatchedTree random_matched_tree(std::mt19937& rng, int n_pairs) {
    std::vector<VertexSpec> verts{{"b1", Color::B}, {"w1", Color::W}};
    std::vector<EdgeSpec> edges{{"b1", "w1"}};
    for (int k = 2; k <= n_pairs; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
        const VertexSpec attach = verts[pick(rng)];
        const Color cv = attach.color == Color::B ? Color::W : Color::B;
        const std::string v = (cv == Color::B ? "b" : "w") + std::to_string(k);
        const std::string l = (cv == Color::B ? "w" : "b") + std::to_string(k);
        verts.push_back({v, cv});
        verts.push_back({l, cv == Color::B ? Color::W : Color::B});
        edges.push_back({attach.label, v});
        edges.push_back({v, l});
    }
    return MatchedTree::build(verts, edges);
}

FramedPlumbing random_plumbing(std::mt19937& rng, const MatchedTree& tree, bool nonzero_framing) {
    std::uniform_int_distribution<int> frame(-9, 9);
    std::uniform_int_distribution<int> coin(0, 1);
    std::map<std::string, Int> framing;
    for (const auto& v : tree.canonical_order()) {
        int f = frame(rng);
        while (nonzero_framing && f == 0)
            f = frame(rng);
        framing[v] = f;
    }
    std::map<std::pair<std::string, std::string>, int> eps;
    for (const auto& e : tree.directed_edges())
        eps[{e.from, e.to}] = coin(rng) ? 1 : -1;
    return FramedPlumbing(tree, std::move(framing), std::move(eps), "random");
}

} // namespace oracles
