#ifndef SQUARE_GRAMMAR_HPP
#define SQUARE_GRAMMAR_HPP

#include <vector>

#include "square/parse_tree.hpp"
#include "square/token.hpp"

namespace square {

/// Deterministic constituency parser for the simple declarative and
/// interrogative shapes the engine accepts:
///   declaratives  NP VP .          (VP = verb with NP/PP/ADVP complements,
///                                    or copular "is" with PP/ADJP)
///   questions     Where is NP? / Where was NP before NP? /
///                 What is PP? / What is NP IN? / Is NP PP?
/// The root is always ROOT with a single S or SBARQ child. Throws
/// Error{UnsupportedSyntax} naming the offending token otherwise.
ParseTree parse_sentence(const std::vector<Token>& tokens);

} // namespace square

#endif
