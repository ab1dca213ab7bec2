#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "square/errors.hpp"
#include "square/parse_tree.hpp"

using namespace square;

TEST_CASE("bracketed trees read and write canonically") {
    std::string text =
        "(ROOT (S (NP (NNP Mary)) (VP (VBD moved) (PP (IN to) (NP (DT the) "
        "(NN bedroom)))) (. .)))";
    ParseTree tree = read_bracketed(text);
    CHECK(tree.label == "ROOT");
    REQUIRE(tree.children.size() == 1);
    CHECK(tree.children[0].label == "S");
    CHECK(write_bracketed(tree) == text);

    std::vector<std::string> leaves = tree_leaves(tree);
    REQUIRE(leaves.size() == 6);
    CHECK(leaves.front() == "Mary");
    CHECK(leaves.back() == ".");
}

TEST_CASE("whitespace variations normalize away") {
    ParseTree a = read_bracketed("(NP (DT the) (NN milk))");
    ParseTree b = read_bracketed("  (NP\n   (DT the)\n   (NN milk)  )  ");
    CHECK(a == b);
    CHECK(write_bracketed(a) == "(NP (DT the) (NN milk))");
}

TEST_CASE("malformed bracketed text is rejected") {
    CHECK_THROWS_AS(read_bracketed(""), Error);
    CHECK_THROWS_AS(read_bracketed("(S (NP"), Error);
    CHECK_THROWS_AS(read_bracketed("(S))"), Error);
    CHECK_THROWS_AS(read_bracketed("no brackets"), Error);
    CHECK_THROWS_AS(read_bracketed("()"), Error);
    for (const char* bad : {"(S (NP", "(S))"}) {
        try {
            read_bracketed(bad);
            FAIL("expected a MalformedTree error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MalformedTree);
        }
    }
}

namespace {

ParseTree random_tree(std::mt19937& rng, int depth) {
    static const std::vector<std::string> labels = {"S",  "NP", "VP",
                                                    "PP", "SQ", "ADVP"};
    static const std::vector<std::string> tags = {"NNP", "VBD", "DT", "NN",
                                                  "IN", "RB"};
    static const std::vector<std::string> words = {"Mary", "moved", "the",
                                                   "milk", "to", "there"};
    if (depth == 0 || rng() % 3 == 0) {
        std::size_t i = rng() % tags.size();
        return ParseTree::leaf(tags[i], words[rng() % words.size()]);
    }
    std::size_t n = 1 + rng() % 3;
    std::vector<ParseTree> children;
    for (std::size_t i = 0; i < n; ++i) {
        children.push_back(random_tree(rng, depth - 1));
    }
    return ParseTree::node(labels[rng() % labels.size()], std::move(children));
}

} // namespace

TEST_CASE("random trees survive a write/read round trip") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        ParseTree tree = random_tree(rng, 4);
        std::string text = write_bracketed(tree);
        CHECK(read_bracketed(text) == tree);
        // Canonical form is a fixed point.
        CHECK(write_bracketed(read_bracketed(text)) == text);
    }
}
