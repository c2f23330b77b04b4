#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plumbing/errors.hpp"

namespace plumbing {

enum class Color { B, W };

inline char color_char(Color c) { return c == Color::B ? 'B' : 'W'; }

struct VertexSpec {
    std::string label;
    Color color;
};

/// Unordered edge given by its endpoint labels.
struct EdgeSpec {
    std::string a;
    std::string b;
};

/// Edge of a matched tree together with the orientation it carries:
/// matched edges run B->W, unmatched edges run W->B.
struct DirectedEdge {
    std::string from;
    std::string to;
    bool matched = false;

    bool operator==(const DirectedEdge& rhs) const = default;
};

/// Bipartite tree with its unique perfect matching and the induced edge
/// orientation. Immutable after construction; the partial order `leq` is
/// reachability along the orientation (v' above v means a directed path
/// v' -> v exists).
class MatchedTree {
public:
    /// Validates and builds. Colors are taken as given.
    static MatchedTree build(const std::vector<VertexSpec>& vertices,
                             const std::vector<EdgeSpec>& edges);

    /// Builds with colors inferred by 2-coloring. Of the two possible class
    /// namings (both satisfy the orientation convention) the one with the
    /// lexicographically smaller canonical code is chosen.
    static MatchedTree build(const std::vector<std::string>& labels,
                             const std::vector<EdgeSpec>& edges);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t pair_count() const { return labels_.size() / 2; }
    bool has_vertex(const std::string& label) const;
    Color color(const std::string& label) const;

    /// Vertex labels in canonical order: a topological order of the
    /// orientation, minimal elements first. Fixes every matrix basis
    /// downstream.
    const std::vector<std::string>& canonical_order() const { return canonical_labels_; }

    /// Directed edges sorted by (position of lower endpoint, position of
    /// higher endpoint) in canonical order.
    const std::vector<DirectedEdge>& directed_edges() const { return canonical_edges_; }

    /// The unique perfect matching as a subset of directed_edges().
    std::vector<DirectedEdge> matching() const;

    bool is_edge(const std::string& u, const std::string& v) const;
    bool is_matched_edge(const std::string& u, const std::string& v) const;
    std::string matched_partner(const std::string& label) const;

    /// u <= v : a (possibly empty) directed path from v down to u exists.
    bool leq(const std::string& u, const std::string& v) const;

    /// u <_1 v : the directed path from v to u is a single edge.
    bool covers_one(const std::string& u, const std::string& v) const;

    /// W_b = { w in W : w <= b }. Requires b in B.
    std::set<std::string> below_set(const std::string& b) const;

    /// B_w = { b in B : w <= b }. Requires w in W.
    std::set<std::string> above_set(const std::string& w) const;

    /// The unique directed path from v_hi down to v_lo, or empty when
    /// v_lo <= v_hi fails (or the vertices coincide).
    std::vector<DirectedEdge> directed_path(const std::string& v_hi,
                                            const std::string& v_lo) const;

    /// Color-aware canonical form: equal codes iff there is a
    /// color-preserving isomorphism.
    const std::string& canonical_code() const { return canonical_code_; }

    /// Label-level equality (same labels, colors and edge set).
    bool structurally_equal(const MatchedTree& rhs) const;

private:
    MatchedTree() = default;
    void finalize(); // derive matching, orientation, canonical data

    std::size_t index_of(const std::string& label) const;

    std::vector<std::string> labels_;  // construction order
    std::vector<Color> colors_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_; // by vertex index
    std::vector<bool> edge_matched_;
    std::vector<std::size_t> partner_;              // matched partner per vertex
    std::vector<std::vector<std::size_t>> down_;    // out-neighbors (strictly below covers)
    std::vector<std::vector<std::size_t>> up_;      // in-neighbors
    std::vector<std::string> canonical_labels_;
    std::vector<DirectedEdge> canonical_edges_;
    std::string canonical_code_;
};

/// Unique perfect matching of an arbitrary (uncolored) tree, found by
/// repeatedly matching a leaf to its neighbor; nullopt when none exists.
/// Each returned pair is sorted, and the list is sorted.
std::optional<std::vector<std::pair<std::string, std::string>>>
find_matching(const std::vector<std::string>& labels, const std::vector<EdgeSpec>& edges);

/// All matched trees with n_pairs matched pairs (2*n_pairs vertices), up to
/// color-preserving isomorphism, generated by the recursive two-vertex
/// attachment rule.
std::vector<MatchedTree> enumerate_matched_trees(int n_pairs);

/// The path w1 <== b1 <-- w2 <== b2 ... <== b_n with matching {b_i w_i}.
MatchedTree chain_tree(int n_pairs);

} // namespace plumbing
