#include "plumbing/form.hpp"

#include <algorithm>
#include <utility>

namespace plumbing {

namespace {

std::pair<std::string, std::string> edge_key(const std::string& u, const std::string& v) {
    return std::minmax(u, v);
}

} // namespace

FramedPlumbing::FramedPlumbing(MatchedTree tree, std::map<std::string, Int> framing,
                               std::map<std::pair<std::string, std::string>, int> plumbing,
                               std::string name)
    : tree_(std::move(tree)), framing_(std::move(framing)), name_(std::move(name)) {
    for (const auto& label : tree_.canonical_order())
        if (!framing_.contains(label))
            throw InvalidArgument("framing missing for vertex " + label);
    if (framing_.size() != tree_.vertex_count())
        throw InvalidArgument("framing defined on labels outside the tree");

    for (const auto& [key, sign] : plumbing) {
        if (sign != 1 && sign != -1)
            throw InvalidArgument("plumbing sign must be +1 or -1 at edge " + key.first + " " +
                                  key.second);
        if (!tree_.is_edge(key.first, key.second))
            throw InvalidArgument("plumbing sign given for non-edge " + key.first + " " +
                                  key.second);
        plumbing_.emplace(edge_key(key.first, key.second), sign);
    }
    if (plumbing_.size() != tree_.directed_edges().size())
        throw InvalidArgument("plumbing signs missing for some edges");
}

const Int& FramedPlumbing::framing_of(const std::string& label) const {
    auto it = framing_.find(label);
    if (it == framing_.end())
        throw UnknownVertex("unknown vertex: " + label);
    return it->second;
}

int FramedPlumbing::eps(const std::string& u, const std::string& v) const {
    auto it = plumbing_.find(edge_key(u, v));
    if (it == plumbing_.end())
        throw InvalidArgument("no edge " + u + " " + v);
    return it->second;
}

FramedPlumbing FramedPlumbing::with_flipped_eps(const std::string& u,
                                                const std::string& v) const {
    FramedPlumbing out = *this;
    auto it = out.plumbing_.find(edge_key(u, v));
    if (it == out.plumbing_.end())
        throw InvalidArgument("no edge " + u + " " + v);
    it->second = -it->second;
    return out;
}

IntMatrix seifert_matrix(const FramedPlumbing& fp) {
    const MatchedTree& t = fp.tree();
    IntMatrix theta(t.canonical_order());
    for (const auto& v : t.canonical_order())
        theta.at(v, v) = fp.framing_of(v);
    for (const auto& e : t.directed_edges()) {
        // e.from covers e.to (e.to <_1 e.from).
        if (fp.eps(e.from, e.to) == 1)
            theta.at(e.from, e.to) = 1;
        else
            theta.at(e.to, e.from) = -1;
    }
    return theta;
}

IntMatrix intersection_matrix(const FramedPlumbing& fp) {
    IntMatrix theta = seifert_matrix(fp);
    return theta.transpose() - theta;
}

IntPolynomial alexander_polynomial(const FramedPlumbing& fp) {
    for (const auto& v : fp.tree().canonical_order())
        if (fp.framing_of(v) == 0)
            throw ZeroFraming("framing vanishes at vertex " + v +
                              "; Alexander polynomial would be degenerate");

    const IntMatrix theta = seifert_matrix(fp);
    const IntMatrix theta_t = theta.transpose();
    const std::size_t n = theta.dimension();
    const std::size_t points = n + 1; // degree of det(theta - t*theta^T) is n

    // Evaluate at integer points and interpolate exactly over Q.
    std::vector<Int> xs(points);
    std::vector<Int> ys(points);
    for (std::size_t k = 0; k < points; ++k) {
        xs[k] = Int(k);
        IntMatrix m(theta.basis());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = theta.at(i, j) - xs[k] * theta_t.at(i, j);
        ys[k] = m.determinant();
    }

    // Newton's divided differences, then expansion into the monomial basis.
    std::vector<Rational> divided(points);
    for (std::size_t k = 0; k < points; ++k)
        divided[k] = Rational(ys[k]);
    for (std::size_t level = 1; level < points; ++level)
        for (std::size_t k = points - 1; k >= level; --k)
            divided[k] = (divided[k] - divided[k - 1]) / Rational(xs[k] - xs[k - level]);

    std::vector<Rational> coeffs(points, Rational(0));
    // Horner over the Newton form: p(t) = d0 + (t-x0)(d1 + (t-x1)(...)).
    std::vector<Rational> acc{divided[points - 1]};
    for (std::size_t k = points - 1; k-- > 0;) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] -= Rational(xs[k]) * acc[i];
        }
        next[0] += divided[k];
        acc = std::move(next);
    }
    std::vector<Int> int_coeffs;
    int_coeffs.reserve(acc.size());
    for (const auto& c : acc) {
        if (denominator(c) != 1)
            throw Error("internal: Alexander interpolation produced a non-integer");
        int_coeffs.push_back(numerator(c));
    }
    IntPolynomial poly{std::move(int_coeffs)};

    const Int at_one = poly.evaluate(1);
    if (at_one != 1 && at_one != -1)
        throw Error("internal: det(theta - t*theta^T) at t=1 is not a unit");
    if (at_one == -1)
        poly = poly.negate();
    return poly;
}

Int knot_determinant(const FramedPlumbing& fp) {
    const IntMatrix theta = seifert_matrix(fp);
    Int det = (theta + theta.transpose()).determinant();
    return det < 0 ? Int(-det) : det;
}

int knot_signature(const FramedPlumbing& fp) {
    const IntMatrix theta = seifert_matrix(fp);
    return symmetric_signature(theta + theta.transpose());
}

std::size_t surface_genus(const FramedPlumbing& fp) {
    return fp.tree().pair_count();
}

AdmissibilityReport check_admissible(const FramedPlumbing& fp, AdmissibilityLevel level) {
    AdmissibilityReport report{level, {}};
    const MatchedTree& t = fp.tree();

    for (const auto& v : t.canonical_order())
        if (fp.framing_of(v) == 0)
            report.violations.push_back("f(" + v + ") = 0");
    if (level == AdmissibilityLevel::Basic)
        return report;

    std::map<Int, std::vector<std::string>> by_magnitude;
    for (const auto& v : t.canonical_order()) {
        const Int f = fp.framing_of(v);
        const Int mag = f < 0 ? Int(-f) : f;
        if (mag == 1)
            report.violations.push_back("|f(" + v + ")| = 1");
        by_magnitude[mag].push_back(v);
    }
    for (const auto& [mag, verts] : by_magnitude)
        if (verts.size() > 1) {
            std::string msg = "|f| not injective at magnitude " + mag.str() + ":";
            for (const auto& v : verts)
                msg += " " + v;
            report.violations.push_back(msg);
        }
    if (level == AdmissibilityLevel::Theorem)
        return report;

    for (const auto& v : t.canonical_order()) {
        const Int f = fp.framing_of(v);
        if (t.color(v) == Color::B && f >= 0)
            report.violations.push_back("f(" + v + ") should be negative on B");
        if (t.color(v) == Color::W && f <= 0)
            report.violations.push_back("f(" + v + ") should be positive on W");
    }
    return report;
}

} // namespace plumbing
