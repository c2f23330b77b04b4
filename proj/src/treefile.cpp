#include "plumbing/treefile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace plumbing {

namespace {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

bool is_integer(const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

FramedPlumbing parse_tree_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    bool have_header = false;
    std::string name;
    std::vector<VertexSpec> vertices;
    std::map<std::string, Int> framing;
    std::vector<EdgeSpec> edges;
    std::map<std::pair<std::string, std::string>, int> plumbing;
    std::set<std::string> labels;

    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].text[0] == '#')
            continue;

        const Token& head = tokens[0];
        if (!have_header) {
            if (head.text != "tree")
                throw ParseError(lineno, head.column, "expected 'tree <name>' header");
            if (tokens.size() != 2)
                throw ParseError(lineno, head.column, "header needs exactly one name token");
            name = tokens[1].text;
            have_header = true;
            continue;
        }

        if (head.text == "vertex") {
            if (tokens.size() != 4)
                throw ParseError(lineno, head.column,
                                 "expected 'vertex <label> color=<B|W> f=<int>'");
            const std::string& label = tokens[1].text;
            if (!labels.insert(label).second)
                throw ParseError(lineno, tokens[1].column, "duplicate vertex label " + label);
            const std::string& color_tok = tokens[2].text;
            if (color_tok != "color=B" && color_tok != "color=W")
                throw ParseError(lineno, tokens[2].column, "expected color=B or color=W");
            const std::string& f_tok = tokens[3].text;
            if (f_tok.rfind("f=", 0) != 0 || !is_integer(f_tok.substr(2)))
                throw ParseError(lineno, tokens[3].column, "expected f=<int>");
            vertices.push_back({label, color_tok.back() == 'B' ? Color::B : Color::W});
            framing[label] = Int(f_tok.substr(2));
        } else if (head.text == "edge") {
            if (tokens.size() != 4)
                throw ParseError(lineno, head.column,
                                 "expected 'edge <label> <label> eps=<+1|-1>'");
            const std::string& a = tokens[1].text;
            const std::string& b = tokens[2].text;
            if (!labels.contains(a))
                throw ParseError(lineno, tokens[1].column, "unknown vertex label " + a);
            if (!labels.contains(b))
                throw ParseError(lineno, tokens[2].column, "unknown vertex label " + b);
            const std::string& eps_tok = tokens[3].text;
            int sign = 0;
            if (eps_tok == "eps=+1")
                sign = 1;
            else if (eps_tok == "eps=-1")
                sign = -1;
            else
                throw ParseError(lineno, tokens[3].column, "expected eps=+1 or eps=-1");
            auto key = std::minmax(a, b);
            if (plumbing.contains(key))
                throw ParseError(lineno, tokens[1].column, "duplicate edge " + a + " " + b);
            edges.push_back({a, b});
            plumbing[key] = sign;
        } else {
            throw ParseError(lineno, head.column, "unknown directive '" + head.text + "'");
        }
    }

    if (!have_header)
        throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing 'tree <name>' header");
    if (vertices.empty())
        throw ParseError(lineno, 1, "no vertex lines");

    MatchedTree tree = MatchedTree::build(vertices, edges);
    return FramedPlumbing(std::move(tree), std::move(framing), std::move(plumbing),
                          std::move(name));
}

FramedPlumbing parse_tree_file_at(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_tree_file(buffer.str());
}

std::string serialize(const FramedPlumbing& fp) {
    const MatchedTree& t = fp.tree();
    const auto& order = t.canonical_order();
    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;

    std::ostringstream out;
    out << "tree " << fp.name() << '\n';
    for (const auto& v : order)
        out << "vertex " << v << " color=" << color_char(t.color(v)) << " f="
            << fp.framing_of(v).str() << '\n';
    for (const auto& e : t.directed_edges()) {
        const bool from_first = position[e.from] < position[e.to];
        const std::string& a = from_first ? e.from : e.to;
        const std::string& b = from_first ? e.to : e.from;
        out << "edge " << a << ' ' << b << " eps=" << (fp.eps(a, b) == 1 ? "+1" : "-1") << '\n';
    }
    return out.str();
}

std::string export_dot(const FramedPlumbing& fp) {
    const MatchedTree& t = fp.tree();
    std::ostringstream out;
    out << "digraph \"" << fp.name() << "\" {\n";
    out << "  node [shape=circle];\n";
    for (const auto& v : t.canonical_order()) {
        out << "  \"" << v << "\" [label=\"" << v << "\\nf=" << fp.framing_of(v).str() << "\"";
        if (t.color(v) == Color::B)
            out << ", style=filled, fillcolor=black, fontcolor=white";
        else
            out << ", style=filled, fillcolor=white";
        out << "];\n";
    }
    for (const auto& e : t.directed_edges()) {
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\""
            << (fp.eps(e.from, e.to) == 1 ? "+1" : "-1") << "\"";
        if (e.matched)
            out << ", color=\"black:invis:black\""; // doubled stroke
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace plumbing
