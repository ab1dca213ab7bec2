#ifndef SQUARE_PARSE_TREE_HPP
#define SQUARE_PARSE_TREE_HPP

#include <memory>
#include <string>
#include <vector>

namespace square {

/// Constituency tree node. Leaves are preterminals: `label` holds the POS tag
/// and `word` the surface token; interior nodes have children and empty word.
struct ParseTree {
    std::string label;
    std::string word;                         // nonempty iff leaf
    std::vector<ParseTree> children;

    bool is_leaf() const { return children.empty() && !word.empty(); }

    static ParseTree leaf(std::string label, std::string word) {
        ParseTree t;
        t.label = std::move(label);
        t.word = std::move(word);
        return t;
    }
    static ParseTree node(std::string label, std::vector<ParseTree> children) {
        ParseTree t;
        t.label = std::move(label);
        t.children = std::move(children);
        return t;
    }

    bool operator==(const ParseTree& other) const {
        return label == other.label && word == other.word && children == other.children;
    }
    bool operator!=(const ParseTree& other) const { return !(*this == other); }
};

/// Collect leaf surface words left to right.
std::vector<std::string> tree_leaves(const ParseTree& tree);

/// Parse a bracketed s-expression such as "(ROOT (S (NP (NNP Mary)) ...))".
/// Throws Error{MalformedTree} with a byte offset on bad input.
ParseTree read_bracketed(const std::string& text);

/// Canonical single-line bracketed form: one space between elements, no
/// trailing whitespace. read_bracketed(write_bracketed(t)) == t.
std::string write_bracketed(const ParseTree& tree);

} // namespace square

#endif
