#ifndef SQUARE_STORY_HPP
#define SQUARE_STORY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "square/frames.hpp"
#include "square/matcher.hpp"
#include "square/term.hpp"
#include "square/token.hpp"

namespace square {

/// What kind of thing an entity atom names.
enum class EntityKind { Person, Object, Location };

/// Everything the engine needs to look words up: the word lexicon, the verb
/// frame lexicon, and the list of known person names.
struct Lexicons {
    WordLexicon words;
    FrameLexicon frames;
    std::set<std::string> gazetteer;
};

/// Loads the bundled lexicons embedded in the binary.
Lexicons load_bundled_lexicons();

/// Parses a gazetteer file: one name per line, '#' comments allowed.
std::set<std::string> parse_gazetteer(const std::string& text);

/// The logic-program image of a story passage.
struct StoryProgram {
    std::vector<Term> facts;     // ground facts in sentence order, then
                                 // template order within a sentence
    std::vector<Term> timeline;  // t1..tN, one per declarative sentence
    std::map<std::string, EntityKind> entities;
    std::vector<MatchResult> matches;   // one per frame-matched sentence
    std::vector<std::string> warnings;  // e.g. verbs no frame matched
};

/// Translates a passage sentence by sentence.  Declarative sentence i
/// receives timestamp t_i; questions are skipped and consume no timestamp.
/// Copular sentences ("X is north of Y", "X is blue") translate to relation
/// facts; everything else goes through verb-frame matching.  Anaphoric
/// "there" references are left as there_ref atoms; call resolve_anaphora to
/// replace them.  Throws EmptyStory when no sentence translates, and
/// propagates UnsupportedSyntax (tagged with the sentence number) from
/// parsing.
StoryProgram translate_passage(const std::vector<std::string>& sentences,
                               const Lexicons& lexicons);

/// Replaces every there_ref in the program with the acting person's location
/// at the most recent arrival at or before the fact's timestamp, or with
/// unknown when the person has not arrived anywhere yet.  Returns the
/// rewritten program; facts keep their order.
StoryProgram resolve_anaphora(const StoryProgram& program);

/// Joins a noun phrase's tokens into an entity atom: lowercased surface
/// words joined by underscores ("the milk" -> the_milk).  Throws EmptyPhrase
/// when the token list is empty.
std::string normalize_np(const std::vector<Token>& words);

} // namespace square

#endif // SQUARE_STORY_HPP
