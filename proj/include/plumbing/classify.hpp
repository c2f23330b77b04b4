#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plumbing/pairing.hpp"

namespace plumbing {

/// The integer box prod_v [0, |f(v)|-1] supporting nonzero sutured Floer
/// homology; sides follow canonical order.
struct SpinCBox {
    std::vector<std::string> basis;
    std::vector<Int> sides;
    Int volume;

    /// Vertices whose side length is < 2, i.e. axes along which the box is
    /// degenerate (these violate theorem admissibility).
    std::vector<std::string> degenerate_axes() const;
};

SpinCBox spin_c_support(const FramedPlumbing& fp);

/// Rank of SFH(T(p,1;2)) in Spin^c slot i: 1 when 0 <= i < p, else 0.
int sfh_torus_rank(long p, long i);

/// Per-vertex sign choice c_v -> sigma(v) * c_v.
struct SignVector {
    std::map<std::string, int> signs;
};

enum class ObstructionCase { MatchedEdge, UnmatchedEdge, Other };

/// A pairing entry no sign choice can reconcile.
struct Obstruction {
    std::string row;
    std::string col;
    Int lhs; // theta-bar of the first labeling at (row, col)
    Int rhs; // theta-bar of the second labeling
    ObstructionCase kind;
};

struct EquivalenceReport {
    bool equivalent;
    std::optional<SignVector> witness;      // present iff equivalent
    std::optional<Obstruction> obstruction; // present iff inequivalent
};

/// Decides whether any basis map c_v -> +/- c'_v carries the induced pairing
/// of one labeling to the other. Both inputs must share the tree and framing,
/// and the framing must pass theorem admissibility (that is what confines the
/// induced map to per-vertex signs).
EquivalenceReport surfaces_equivalent(const FramedPlumbing& fp_eps,
                                      const FramedPlumbing& fp_eps_prime);

struct ClassificationOptions {
    /// Accept framings with duplicate |f| values and widen the search to
    /// signed vertex permutations within |f|-equal groups. The resulting
    /// count is only a lower bound on the number of classes.
    bool permissive = false;
};

struct ClassificationResult {
    std::size_t class_count;
    std::vector<FramedPlumbing> representatives; // smallest labeling per class
    bool heuristic_lower_bound;
};

/// Partitions all 2^|E| plumbing labelings of (tree, framing) by
/// surfaces_equivalent, pruning with sign-invariant fingerprints.
ClassificationResult count_classes(const MatchedTree& tree,
                                   const std::map<std::string, Int>& framing,
                                   const ClassificationOptions& options = {});

} // namespace plumbing
