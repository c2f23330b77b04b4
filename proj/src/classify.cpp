#include "plumbing/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

namespace plumbing {

namespace {

Int magnitude(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Union-find tracking a mod-2 sign relation to the representative.
class ParityUnionFind {
public:
    explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::pair<std::size_t, int> find(std::size_t x) {
        if (parent_[x] == x)
            return {x, 0};
        auto [root, p] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= p;
        return {root, parity_[x]};
    }

    /// Requires parity(x) xor parity(y) == rel; false on contradiction.
    bool merge(std::size_t x, std::size_t y, int rel) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry)
            return (px ^ py) == rel;
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ rel;
        return true;
    }

    int parity_of(std::size_t x) { return find(x).second; }
    std::size_t root_of(std::size_t x) { return find(x).first; }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

/// Classifies a violated entry pair by the directed path from its B end
/// down to its W end: a single matched edge, the length-3 path around an
/// unmatched edge, or anything else. These are the two shapes a single
/// flipped edge can produce; only pairing entries over such paths see it.
ObstructionCase classify_pair(const MatchedTree& t, const std::string& u, const std::string& v) {
    const std::string* b = nullptr;
    const std::string* w = nullptr;
    if (u != v && t.color(u) == Color::B && t.color(v) == Color::W) {
        b = &u;
        w = &v;
    } else if (u != v && t.color(u) == Color::W && t.color(v) == Color::B) {
        b = &v;
        w = &u;
    }
    if (b) {
        const auto gamma = t.directed_path(*b, *w);
        if (gamma.size() == 1 && gamma.front().matched)
            return ObstructionCase::MatchedEdge;
        if (gamma.size() == 3 && !gamma[1].matched)
            return ObstructionCase::UnmatchedEdge;
    }
    return ObstructionCase::Other;
}

/// Core decision: does some sigma with sigma(u)sigma(v)*B(u,v) = A(u,v)
/// exist? Reported obstructions prefer (c_b, c_w) entries that pin the
/// blame on one edge: flipped matched edges first, then length-3 paths.
EquivalenceReport sign_equivalence(const MatchedTree& t, const IntMatrix& a, const IntMatrix& b) {
    const auto& order = t.canonical_order();
    const std::size_t n = order.size();

    std::vector<std::pair<std::size_t, std::size_t>> violations;
    std::optional<std::pair<std::size_t, std::size_t>> conflict;
    ParityUnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Int& x = a.at(i, j);
            const Int& y = b.at(i, j);
            if (i == j) {
                if (x != y)
                    violations.emplace_back(i, j);
                continue;
            }
            if (magnitude(x) != magnitude(y)) {
                violations.emplace_back(i, j);
                continue;
            }
            if (x == 0)
                continue;
            const int rel = x != y ? 1 : 0;
            if (!uf.merge(i, j, rel) && !conflict)
                conflict = {i, j};
        }
    }

    if (!violations.empty() || conflict) {
        // Prefer (c_b, c_w) at a flipped matched edge, then (c_b, c_w)
        // across a length-3 path, then the rest in scan order.
        auto rank = [&](const std::pair<std::size_t, std::size_t>& p) {
            const std::string& u = order[p.first];
            const std::string& v = order[p.second];
            const ObstructionCase kind = classify_pair(t, u, v);
            const bool proof_orientation =
                p.first != p.second && t.color(u) == Color::B && t.color(v) == Color::W;
            if (kind == ObstructionCase::MatchedEdge)
                return proof_orientation ? 0 : 2;
            if (kind == ObstructionCase::UnmatchedEdge)
                return proof_orientation ? 1 : 2;
            return 3;
        };
        std::pair<std::size_t, std::size_t> chosen;
        if (violations.empty()) {
            chosen = *conflict;
        } else {
            chosen = violations.front();
            int best = rank(chosen);
            for (const auto& p : violations) {
                const int r = rank(p);
                if (r < best) {
                    best = r;
                    chosen = p;
                }
            }
        }

        const std::string& u = order[chosen.first];
        const std::string& v = order[chosen.second];
        Obstruction obstruction{u, v, a.at(chosen.first, chosen.second),
                                b.at(chosen.first, chosen.second), classify_pair(t, u, v)};
        return {false, std::nullopt, std::move(obstruction)};
    }

    SignVector sigma;
    for (std::size_t i = 0; i < n; ++i)
        sigma.signs[order[i]] = uf.parity_of(i) ? -1 : 1;
    // Pin the canonical first vertex to +1 by flipping its component.
    if (sigma.signs[order[0]] == -1) {
        const std::size_t root0 = uf.root_of(0);
        for (std::size_t i = 0; i < n; ++i)
            if (uf.root_of(i) == root0)
                sigma.signs[order[i]] = -sigma.signs[order[i]];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (Int(sigma.signs[order[i]] * sigma.signs[order[j]]) * b.at(i, j) != a.at(i, j))
                throw Error("internal: sign witness fails verification");
    return {true, std::move(sigma), std::nullopt};
}

IntMatrix seifert_for_mask(const MatchedTree& tree, const std::map<std::string, Int>& framing,
                           unsigned long mask) {
    IntMatrix theta(tree.canonical_order());
    for (const auto& v : tree.canonical_order())
        theta.at(v, v) = framing.at(v);
    const auto& edges = tree.directed_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if ((mask >> i) & 1u)
            theta.at(edges[i].to, edges[i].from) = -1; // eps = -1
        else
            theta.at(edges[i].from, edges[i].to) = 1; // eps = +1
    }
    return theta;
}

FramedPlumbing plumbing_for_mask(const MatchedTree& tree,
                                 const std::map<std::string, Int>& framing, unsigned long mask,
                                 const std::string& name) {
    std::map<std::pair<std::string, std::string>, int> eps;
    const auto& edges = tree.directed_edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        eps[{edges[i].from, edges[i].to}] = ((mask >> i) & 1u) ? -1 : 1;
    return FramedPlumbing(tree, framing, std::move(eps), name);
}

/// Permissive check: signed permutations within |f|-equal vertex groups.
bool perm_sign_equivalent(const MatchedTree& t, const std::map<std::string, Int>& framing,
                          const IntMatrix& a, const IntMatrix& b) {
    const auto& order = t.canonical_order();
    const std::size_t n = order.size();

    std::map<Int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i)
        groups[magnitude(framing.at(order[i]))].push_back(i);

    double total = 1;
    for (const auto& [mag, members] : groups)
        for (std::size_t k = 2; k <= members.size(); ++k)
            total *= static_cast<double>(k);
    if (total > 1e6)
        throw InvalidArgument("permissive search space too large");

    std::vector<std::vector<std::size_t>> perms;
    for (auto& [mag, members] : groups)
        perms.push_back(members);

    std::vector<std::size_t> pi(n);
    auto consistent = [&]() {
        ParityUnionFind uf(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Int& x = a.at(i, j);
                const Int& y = b.at(pi[i], pi[j]);
                if (i == j) {
                    if (x != y)
                        return false;
                    continue;
                }
                if (magnitude(x) != magnitude(y))
                    return false;
                if (x != 0 && !uf.merge(i, j, x != y ? 1 : 0))
                    return false;
            }
        return true;
    };

    // Odometer over per-group permutations.
    std::vector<std::vector<std::size_t>> current = perms;
    while (true) {
        for (std::size_t g = 0; g < perms.size(); ++g)
            for (std::size_t k = 0; k < perms[g].size(); ++k)
                pi[perms[g][k]] = current[g][k];
        if (consistent())
            return true;
        std::size_t g = 0;
        while (g < current.size() &&
               !std::next_permutation(current[g].begin(), current[g].end())) {
            std::sort(current[g].begin(), current[g].end());
            ++g;
        }
        if (g == current.size())
            return false;
    }
}

} // namespace

std::vector<std::string> SpinCBox::degenerate_axes() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < sides.size(); ++i)
        if (sides[i] < 2)
            out.push_back(basis[i]);
    return out;
}

SpinCBox spin_c_support(const FramedPlumbing& fp) {
    SpinCBox box;
    box.basis = fp.tree().canonical_order();
    box.volume = 1;
    for (const auto& v : box.basis) {
        const Int& f = fp.framing_of(v);
        if (f == 0)
            throw ZeroFraming("framing vanishes at vertex " + v);
        box.sides.push_back(magnitude(f));
        box.volume *= box.sides.back();
    }
    return box;
}

int sfh_torus_rank(long p, long i) {
    if (p <= 0)
        throw InvalidArgument("sfh_torus_rank needs p > 0");
    return (0 <= i && i < p) ? 1 : 0;
}

EquivalenceReport surfaces_equivalent(const FramedPlumbing& fp_eps,
                                      const FramedPlumbing& fp_eps_prime) {
    if (!fp_eps.tree().structurally_equal(fp_eps_prime.tree()))
        throw MismatchedUnderlying("the two plumbings live on different trees");
    if (fp_eps.framing() != fp_eps_prime.framing())
        throw MismatchedUnderlying("the two plumbings carry different framings");
    auto report = check_admissible(fp_eps, AdmissibilityLevel::Theorem);
    if (!report.ok())
        throw InadmissibleFraming("framing fails theorem admissibility: " +
                                  report.violations.front());

    const IntMatrix a = pairing_by_conjugation(fp_eps);
    const IntMatrix b = pairing_by_conjugation(fp_eps_prime);
    return sign_equivalence(fp_eps.tree(), a, b);
}

ClassificationResult count_classes(const MatchedTree& tree,
                                   const std::map<std::string, Int>& framing,
                                   const ClassificationOptions& options) {
    const std::size_t m = tree.directed_edges().size();
    if (m > 12)
        throw InvalidArgument("refusing to enumerate 2^" + std::to_string(m) + " labelings");

    const FramedPlumbing base = plumbing_for_mask(tree, framing, 0, "base");
    const auto level =
        options.permissive ? AdmissibilityLevel::Basic : AdmissibilityLevel::Theorem;
    auto admissibility = check_admissible(base, level);
    if (!admissibility.ok())
        throw InadmissibleFraming("framing fails admissibility: " +
                                  admissibility.violations.front());

    const std::size_t total = std::size_t{1} << m;
    const IntMatrix inv = phi_inverse_matrix(tree);
    const IntMatrix inv_t = inv.transpose();
    const std::size_t n = tree.vertex_count();

    std::vector<IntMatrix> pairings;
    pairings.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask)
        pairings.push_back(inv_t * seifert_for_mask(tree, framing, mask) * inv);

    // Sign-invariant fingerprint: per unordered pair the multiset
    // {|theta-bar(u,v)|, |theta-bar(v,u)|}. Permissive mode additionally
    // forgets which pair each multiset came from.
    auto fingerprint = [&](const IntMatrix& p) {
        std::vector<std::pair<Int, Int>> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Int x = magnitude(p.at(i, j));
                Int y = magnitude(p.at(j, i));
                if (x > y)
                    std::swap(x, y);
                pairs.emplace_back(std::move(x), std::move(y));
            }
        if (options.permissive)
            std::sort(pairs.begin(), pairs.end());
        return pairs;
    };

    std::map<std::vector<std::pair<Int, Int>>, std::vector<std::size_t>> buckets;
    for (std::size_t mask = 0; mask < total; ++mask)
        buckets[fingerprint(pairings[mask])].push_back(mask);

    std::vector<std::size_t> root(total);
    std::iota(root.begin(), root.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };

    for (const auto& [key, members] : buckets) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const std::size_t a = find(members[i]);
                const std::size_t b = find(members[j]);
                if (a == b)
                    continue;
                const bool same =
                    options.permissive
                        ? perm_sign_equivalent(tree, framing, pairings[members[i]],
                                               pairings[members[j]])
                        : sign_equivalence(tree, pairings[members[i]], pairings[members[j]])
                              .equivalent;
                if (same)
                    root[std::max(a, b)] = std::min(a, b);
            }
    }

    ClassificationResult result{0, {}, options.permissive};
    for (std::size_t mask = 0; mask < total; ++mask)
        if (find(mask) == mask) {
            ++result.class_count;
            result.representatives.push_back(
                plumbing_for_mask(tree, framing, mask, "class" + std::to_string(mask)));
        }
    return result;
}

} // namespace plumbing
