#include "plumbing/pairing.hpp"

namespace plumbing {

IntMatrix phi_matrix(const MatchedTree& tree) {
    IntMatrix phi(tree.canonical_order());
    for (const auto& e : tree.directed_edges()) {
        // e.to <_1 e.from: e.from is an upper cover of e.to.
        phi.at(e.from, e.to) = 1;  // column h_{e.to} hits +c_{e.from}
        phi.at(e.to, e.from) = -1; // column h_{e.from} hits -c_{e.to}
    }
    return phi;
}

IntMatrix phi_inverse_matrix(const MatchedTree& tree) {
    IntMatrix inv(tree.canonical_order());
    for (const auto& v : tree.canonical_order()) {
        if (tree.color(v) == Color::B) {
            for (const auto& w : tree.below_set(v))
                inv.at(w, v) = 1; // c_b -> sum of h_w over W_b
        } else {
            for (const auto& b : tree.above_set(v))
                inv.at(b, v) = -1; // c_w -> minus sum of h_b over B_w
        }
    }
    return inv;
}

IntMatrix pairing_by_conjugation(const FramedPlumbing& fp) {
    const IntMatrix theta = seifert_matrix(fp);
    const IntMatrix inv = phi_inverse_matrix(fp.tree());
    return inv.transpose() * theta * inv;
}

PathEdgeCounts path_edge_counts(const FramedPlumbing& fp,
                                const std::vector<DirectedEdge>& gamma) {
    const MatchedTree& t = fp.tree();
    PathEdgeCounts counts;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        const DirectedEdge& e = gamma[i];
        if (!t.is_edge(e.from, e.to) || !t.covers_one(e.to, e.from))
            throw EdgesNotOnDirectedPath("edge " + e.from + " -> " + e.to +
                                         " is not a directed edge of the tree");
        if (i > 0 && gamma[i - 1].to != e.from)
            throw EdgesNotOnDirectedPath("edges are not consecutive at " + e.from);
        const bool matched = t.is_matched_edge(e.from, e.to);
        const bool positive = fp.eps(e.from, e.to) == 1;
        if (matched)
            positive ? ++counts.pos_matched : ++counts.neg_matched;
        else
            positive ? ++counts.pos_unmatched : ++counts.neg_unmatched;
    }
    return counts;
}

IntMatrix pairing_closed_form(const FramedPlumbing& fp) {
    const MatchedTree& t = fp.tree();
    const auto& order = t.canonical_order();
    IntMatrix pairing(order);

    for (const auto& u : order) {
        for (const auto& v : order) {
            const Color cu = t.color(u);
            const Color cv = t.color(v);
            Int value = 0;
            if (cu == Color::B && cv == Color::B) {
                const auto wu = t.below_set(u);
                const auto wv = t.below_set(v);
                for (const auto& w : wu)
                    if (wv.contains(w))
                        value += fp.framing_of(w);
            } else if (cu == Color::W && cv == Color::W) {
                const auto bu = t.above_set(u);
                const auto bv = t.above_set(v);
                for (const auto& b : bu)
                    if (bv.contains(b))
                        value += fp.framing_of(b);
            } else if (cu == Color::W && cv == Color::B) {
                // theta-bar(c_w, c_b) along the directed path from b to w.
                const auto gamma = t.directed_path(v, u);
                if (!gamma.empty()) {
                    const auto counts = path_edge_counts(fp, gamma);
                    value = Int(counts.neg_unmatched) - Int(counts.pos_matched);
                }
            } else {
                // theta-bar(c_b, c_w) along the same path.
                const auto gamma = t.directed_path(u, v);
                if (!gamma.empty()) {
                    const auto counts = path_edge_counts(fp, gamma);
                    value = Int(counts.neg_matched) - Int(counts.pos_unmatched);
                }
            }
            pairing.at(u, v) = value;
        }
    }
    return pairing;
}

} // namespace plumbing
