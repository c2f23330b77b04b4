#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plumbing/matrix.hpp"
#include "plumbing/polynomial.hpp"
#include "plumbing/tree.hpp"

namespace plumbing {

/// A matched tree together with a framing f : V -> Z (full right-handed
/// twists per annulus) and a plumbing sign eps : E -> {+1,-1} per edge.
class FramedPlumbing {
public:
    FramedPlumbing(MatchedTree tree, std::map<std::string, Int> framing,
                   std::map<std::pair<std::string, std::string>, int> plumbing,
                   std::string name = "plumbing");

    const MatchedTree& tree() const { return tree_; }
    const std::string& name() const { return name_; }
    const std::map<std::string, Int>& framing() const { return framing_; }

    const Int& framing_of(const std::string& label) const;
    int eps(const std::string& u, const std::string& v) const;

    /// A copy with the plumbing sign at edge {u,v} negated.
    FramedPlumbing with_flipped_eps(const std::string& u, const std::string& v) const;

private:
    MatchedTree tree_;
    std::map<std::string, Int> framing_;
    std::map<std::pair<std::string, std::string>, int> plumbing_; // key sorted
    std::string name_;
};

/// Seifert matrix in the canonical_order h-basis: diagonal f(v); for a cover
/// u <_1 v the edge contributes theta(v,u)=1 when eps=+1 and theta(u,v)=-1
/// when eps=-1; all other entries vanish.
IntMatrix seifert_matrix(const FramedPlumbing& fp);

/// theta^T - theta: antisymmetric, +1 at (u,v) iff u <_1 v, independent of
/// the plumbing signs.
IntMatrix intersection_matrix(const FramedPlumbing& fp);

/// det(theta - t*theta^T), sign-normalized so that the value at t=1 is +1.
/// Requires every framing nonzero so the constant term is nonzero.
IntPolynomial alexander_polynomial(const FramedPlumbing& fp);

/// |det(theta + theta^T)|.
Int knot_determinant(const FramedPlumbing& fp);

/// Signature of theta + theta^T, exact.
int knot_signature(const FramedPlumbing& fp);

/// Genus of the plumbing surface: |V| / 2.
std::size_t surface_genus(const FramedPlumbing& fp);

enum class AdmissibilityLevel { Basic, Theorem, Alternating };

struct AdmissibilityReport {
    AdmissibilityLevel level;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// basic: all framings nonzero. theorem: additionally |f(v)| >= 2 and
/// v -> |f(v)| injective. alternating: additionally f < 0 on B, f > 0 on W.
AdmissibilityReport check_admissible(const FramedPlumbing& fp, AdmissibilityLevel level);

} // namespace plumbing
