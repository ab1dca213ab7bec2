#include "square/parse_tree.hpp"

#include <cctype>

#include "square/errors.hpp"

namespace square {

std::vector<std::string> tree_leaves(const ParseTree& tree) {
    std::vector<std::string> out;
    if (tree.is_leaf()) {
        out.push_back(tree.word);
        return out;
    }
    for (const auto& child : tree.children) {
        auto sub = tree_leaves(child);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

namespace {

struct Reader {
    const std::string& text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& message) {
        throw Error(ErrorKind::MalformedTree, message, static_cast<long>(pos));
    }

    std::string symbol() {
        size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')') {
            ++pos;
        }
        if (pos == start) fail("expected symbol");
        return text.substr(start, pos - start);
    }

    ParseTree node() {
        skip_space();
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        skip_space();
        if (pos < text.size() && (text[pos] == '(' || text[pos] == ')')) fail("expected node label");
        std::string label = symbol();
        skip_space();
        if (pos >= text.size()) fail("unterminated node");

        if (text[pos] == '(') {
            std::vector<ParseTree> children;
            while (pos < text.size() && text[pos] == '(') {
                children.push_back(node());
                skip_space();
            }
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            return ParseTree::node(std::move(label), std::move(children));
        }
        if (text[pos] == ')') fail("node without children or word");
        std::string word = symbol();
        skip_space();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')' after leaf word");
        ++pos;
        return ParseTree::leaf(std::move(label), std::move(word));
    }
};

void write_node(const ParseTree& tree, std::string& out) {
    out += '(';
    out += tree.label;
    if (tree.is_leaf()) {
        out += ' ';
        out += tree.word;
    } else {
        for (const auto& child : tree.children) {
            out += ' ';
            write_node(child, out);
        }
    }
    out += ')';
}

} // namespace

ParseTree read_bracketed(const std::string& text) {
    Reader reader{text};
    reader.skip_space();
    if (reader.pos >= text.size()) {
        throw Error(ErrorKind::MalformedTree, "empty input", 0);
    }
    ParseTree tree = reader.node();
    reader.skip_space();
    if (reader.pos != text.size()) reader.fail("trailing characters after tree");
    return tree;
}

std::string write_bracketed(const ParseTree& tree) {
    std::string out;
    write_node(tree, out);
    return out;
}

} // namespace square
