#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "plumbing/classify.hpp"
#include "plumbing/pairing.hpp"
#include "plumbing/treefile.hpp"

namespace {

using namespace plumbing;

void print_matrix(const IntMatrix& m) {
    std::cout << "# basis:";
    for (const auto& v : m.basis())
        std::cout << ' ' << v;
    std::cout << '\n' << m.to_string();
}

const char* case_name(ObstructionCase c) {
    switch (c) {
    case ObstructionCase::MatchedEdge:
        return "matched-edge";
    case ObstructionCase::UnmatchedEdge:
        return "unmatched-edge";
    default:
        return "other";
    }
}

void print_report(const EquivalenceReport& report) {
    if (report.equivalent) {
        std::cout << "equivalent: yes\nsigma:";
        for (const auto& [v, s] : report.witness->signs)
            std::cout << ' ' << v << '=' << (s > 0 ? "+1" : "-1");
        std::cout << '\n';
    } else {
        const auto& obs = *report.obstruction;
        std::cout << "equivalent: no\n"
                  << "obstruction: entry (" << obs.row << ", " << obs.col << ") values "
                  << obs.lhs << " vs " << obs.rhs << " case " << case_name(obs.kind) << '\n';
    }
}

int run_enumerate(int pairs, bool list_codes) {
    auto trees = enumerate_matched_trees(pairs);
    std::cout << "count: " << trees.size() << '\n';
    if (list_codes)
        for (const auto& t : trees)
            std::cout << t.canonical_code() << '\n';
    return 0;
}

int run_check(const std::string& file, const std::string& level_name) {
    AdmissibilityLevel level = AdmissibilityLevel::Theorem;
    if (level_name == "basic")
        level = AdmissibilityLevel::Basic;
    else if (level_name == "alternating")
        level = AdmissibilityLevel::Alternating;
    auto fp = parse_tree_file_at(file);
    auto report = check_admissible(fp, level);
    if (report.ok()) {
        std::cout << "admissible: yes (level " << level_name << ")\n";
        return 0;
    }
    std::cout << "admissible: no (level " << level_name << ")\n";
    for (const auto& v : report.violations)
        std::cout << "violation: " << v << '\n';
    return 1;
}

int run_pairing(const std::string& file, const std::string& method) {
    auto fp = parse_tree_file_at(file);
    if (method == "conjugation") {
        print_matrix(pairing_by_conjugation(fp));
        return 0;
    }
    if (method == "closed-form") {
        print_matrix(pairing_closed_form(fp));
        return 0;
    }
    const IntMatrix a = pairing_by_conjugation(fp);
    const IntMatrix b = pairing_closed_form(fp);
    if (!(a == b)) {
        std::cerr << "pairing mismatch between conjugation and closed form\n";
        return 1;
    }
    print_matrix(a);
    return 0;
}

int run_invariants(const std::string& file) {
    auto fp = parse_tree_file_at(file);
    std::cout << "# basis:";
    for (const auto& v : fp.tree().canonical_order())
        std::cout << ' ' << v;
    std::cout << '\n';

    const auto alexander = alexander_polynomial(fp);
    std::cout << "alexander:";
    for (std::size_t k = 0; k <= fp.tree().vertex_count(); ++k)
        std::cout << ' ' << alexander.coefficient(k);
    std::cout << '\n';
    std::cout << "determinant: " << knot_determinant(fp) << '\n';
    std::cout << "signature: " << knot_signature(fp) << '\n';
    std::cout << "genus: " << surface_genus(fp) << '\n';

    const auto box = spin_c_support(fp);
    std::cout << "spin_c_sides:";
    for (const auto& s : box.sides)
        std::cout << ' ' << s;
    std::cout << '\n';
    std::cout << "spin_c_volume: " << box.volume << '\n';
    return 0;
}

int run_classify(const std::string& file, bool permissive) {
    auto fp = parse_tree_file_at(file);
    ClassificationOptions options;
    options.permissive = permissive;
    auto result = count_classes(fp.tree(), fp.framing(), options);
    std::cout << "classes: " << result.class_count << '\n';
    if (result.heuristic_lower_bound)
        std::cout << "note: permissive search; count is a lower bound\n";

    if (!permissive && result.representatives.size() <= 64) {
        std::map<std::string, std::size_t> summary;
        for (std::size_t i = 0; i < result.representatives.size(); ++i)
            for (std::size_t j = i + 1; j < result.representatives.size(); ++j) {
                auto report =
                    surfaces_equivalent(result.representatives[i], result.representatives[j]);
                if (!report.equivalent)
                    ++summary[case_name(report.obstruction->kind)];
            }
        std::cout << "obstructions:";
        for (const char* key : {"matched-edge", "unmatched-edge", "other"})
            std::cout << ' ' << key << '=' << summary[key];
        std::cout << '\n';
    }
    return 0;
}

int run_equivalent(const std::string& file1, const std::string& file2) {
    auto fp1 = parse_tree_file_at(file1);
    auto fp2 = parse_tree_file_at(file2);
    print_report(surfaces_equivalent(fp1, fp2));
    return 0;
}

int run_chain(int pairs) {
    MatchedTree tree = chain_tree(pairs);
    std::map<std::string, Int> framing;
    for (int i = 1; i <= pairs; ++i) {
        framing["w" + std::to_string(i)] = 2 * i + 1;
        framing["b" + std::to_string(i)] = -2 * i;
    }
    std::map<std::pair<std::string, std::string>, int> eps;
    for (const auto& e : tree.directed_edges())
        eps[{e.from, e.to}] = 1;
    FramedPlumbing fp(std::move(tree), std::move(framing), std::move(eps),
                      "chain" + std::to_string(pairs));
    std::cout << serialize(fp);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matched-tree plumbing calculator: Seifert forms, induced pairings "
                 "and spanning-surface classification"};
    app.require_subcommand(1);

    int pairs = 1;
    bool list_codes = false;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "count matched trees up to isomorphism");
    cmd_enumerate->add_option("--pairs", pairs, "number of matched pairs")->required();
    cmd_enumerate->add_flag("--list", list_codes, "also print canonical codes");

    std::string file1, file2, level = "theorem", method = "both";
    auto* cmd_check = app.add_subcommand("check", "framing admissibility report");
    cmd_check->add_option("file", file1)->required();
    cmd_check->add_option("--level", level)->check(CLI::IsMember({"basic", "theorem", "alternating"}));

    auto* cmd_seifert = app.add_subcommand("seifert", "print the Seifert matrix");
    cmd_seifert->add_option("file", file1)->required();

    auto* cmd_pairing = app.add_subcommand("pairing", "print the induced pairing matrix");
    cmd_pairing->add_option("file", file1)->required();
    cmd_pairing->add_option("--method", method)
        ->check(CLI::IsMember({"conjugation", "closed-form", "both"}));

    auto* cmd_invariants = app.add_subcommand("invariants", "Alexander polynomial and friends");
    cmd_invariants->add_option("file", file1)->required();

    bool all_epsilon = false, permissive = false;
    auto* cmd_classify = app.add_subcommand("classify", "count labeling equivalence classes");
    cmd_classify->add_option("file", file1)->required();
    cmd_classify->add_flag("--all-epsilon", all_epsilon, "sweep all 2^|E| labelings")->required();
    cmd_classify->add_flag("--permissive", permissive,
                           "allow duplicate |f|; report a lower bound");

    auto* cmd_equivalent = app.add_subcommand("equivalent", "compare two labelings");
    cmd_equivalent->add_option("file1", file1)->required();
    cmd_equivalent->add_option("file2", file2)->required();

    std::string framing_scheme = "corollary";
    auto* cmd_chain = app.add_subcommand("chain", "emit the chain-tree file");
    cmd_chain->add_option("--pairs", pairs, "number of matched pairs")->required();
    cmd_chain->add_option("--framing", framing_scheme)->check(CLI::IsMember({"corollary"}));

    auto* cmd_dot = app.add_subcommand("dot", "emit Graphviz for a tree file");
    cmd_dot->add_option("file", file1)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_enumerate)
            return run_enumerate(pairs, list_codes);
        if (*cmd_check)
            return run_check(file1, level);
        if (*cmd_seifert) {
            print_matrix(seifert_matrix(parse_tree_file_at(file1)));
            return 0;
        }
        if (*cmd_pairing)
            return run_pairing(file1, method);
        if (*cmd_invariants)
            return run_invariants(file1);
        if (*cmd_classify)
            return run_classify(file1, permissive);
        if (*cmd_equivalent)
            return run_equivalent(file1, file2);
        if (*cmd_chain)
            return run_chain(pairs);
        if (*cmd_dot) {
            std::cout << export_dot(parse_tree_file_at(file1));
            return 0;
        }
    } catch (const plumbing::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const plumbing::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
