#pragma once

#include <vector>

#include "plumbing/form.hpp"

namespace plumbing {

/// Basis change from the surface h-basis to the meridian c-basis:
/// h_v maps to the sum of c at upper covers of v minus the sum of c at
/// lower covers. Rows are the c-basis, columns the h-basis, both in
/// canonical order.
IntMatrix phi_matrix(const MatchedTree& tree);

/// Inverse of phi: c_b maps to the sum of h_w over W_b, and c_w maps to
/// minus the sum of h_b over B_w. Rows are the h-basis, columns the c-basis.
IntMatrix phi_inverse_matrix(const MatchedTree& tree);

/// Induced pairing on the complement: (phi^-1)^T * theta * phi^-1, stored in
/// the c-basis with the same canonical order (entry (u,v) is
/// theta(phi^-1 c_u, phi^-1 c_v)).
IntMatrix pairing_by_conjugation(const FramedPlumbing& fp);

/// The same pairing computed entry-by-entry from the closed forms:
/// framing sums over W_b intersections / B_w intersections on like-colored
/// pairs, and signed edge counts along the directed path on mixed pairs.
IntMatrix pairing_closed_form(const FramedPlumbing& fp);

/// Counts of +1/-1 edges on a directed path, split by matched/unmatched.
struct PathEdgeCounts {
    std::size_t pos_matched = 0;
    std::size_t neg_matched = 0;
    std::size_t pos_unmatched = 0;
    std::size_t neg_unmatched = 0;

    bool operator==(const PathEdgeCounts& rhs) const = default;
};

/// Tallies the plumbing signs along gamma, which must be a contiguous
/// directed path of edges of the tree (as produced by directed_path).
PathEdgeCounts path_edge_counts(const FramedPlumbing& fp, const std::vector<DirectedEdge>& gamma);

} // namespace plumbing
