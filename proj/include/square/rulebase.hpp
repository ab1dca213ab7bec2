#ifndef SQUARE_RULEBASE_HPP
#define SQUARE_RULEBASE_HPP

#include <string>
#include <vector>

#include "square/clause.hpp"
#include "square/parse_tree.hpp"
#include "square/term.hpp"

namespace square {

// Names of the bundled rule sets, in load order.
inline constexpr const char* kCoreTag = "core";
inline constexpr const char* kDirectionsTag = "directions";
inline constexpr const char* kPositionalTag = "positional";

/// Assembles the rulebase for a set of task tags.  The core set is always
/// loaded first, whether or not it is named; the remaining sets follow in
/// canonical order (directions, then positional).  Structurally identical
/// clauses appearing in more than one set are kept once, at their first
/// position.  Throws UnknownRuleSet for a tag outside
/// {core, directions, positional}, and RuleFileError if the assembled rules
/// fail validation (a body predicate that is neither defined nor a builtin
/// nor declared dynamic, or a head variable with no binding occurrence).
RuleSet assemble_rulebase(const std::vector<std::string>& task_tags);

/// Translates a copular sentence ("X is DIR of Y", "X is COLOR") into ground
/// relation facts at the given timestamp:
///   - "The office is north of the bedroom." at t1
///         -> rel(north_of, t1, the_office, the_bedroom)
///   - "The box is blue." at t1
///         -> attr(color, t1, the_box, blue)
/// The tree must be a declarative clause whose verb phrase is headed by a
/// form of "be"; any other complement shape throws UnsupportedSyntax.
std::vector<Term> translate_copular(const ParseTree& tree, int timestamp);

/// Maps a direction word to its canonical atom ("north_of", "south_of",
/// "east_of", "west_of", "above", "below", "left_of", "right_of").  Accepts
/// both canonical names and merged surface forms such as "to_the_left_of".
/// Returns the empty string for anything else.
std::string canonical_direction(const std::string& word);

/// True when canonical_direction(word) is non-empty.
bool is_direction_word(const std::string& word);

} // namespace square

#endif // SQUARE_RULEBASE_HPP
